#!/usr/bin/env python3
"""Generate the default agent file (~2,000 generic role patterns).

The file follows the legacy drop-in format, one "NAME [~CODE]" per line.
Bases are expanded with office-holder prefixes (FORMER_, DEPUTY_, ...),
spelling variants and plural forms.  Rerun after editing:

    python tools/make_agents.py > src/eventcoder/data/agents.txt
"""

# pattern base -> (code, expand_prefixes, pluralize)
OFFICIAL = ("GOV", True)
BASES: list[tuple[str, str, bool, bool]] = []


def add(pattern, code, prefixes=False, plural=False):
    BASES.append((pattern, code, prefixes, plural))


MINISTRY_DOMAINS = {
    "AGRICULTURE": "GOVAGR",
    "DEFENSE": "GOVMIL",
    "DEFENCE": "GOVMIL",
    "FINANCE": "GOVECO",
    "ECONOMY": "GOVECO",
    "TRADE": "GOVECO",
    "COMMERCE": "GOVECO",
    "FOREIGN_AFFAIRS": "GOVDIP",
    "INTERIOR": "GOV",
    "HOME_AFFAIRS": "GOV",
    "JUSTICE": "GOVJUD",
    "HEALTH": "GOVHLH",
    "EDUCATION": "GOVEDU",
    "ENERGY": "GOV",
    "OIL": "GOV",
    "TRANSPORT": "GOV",
    "TRANSPORTATION": "GOV",
    "LABOR": "GOVLAB",
    "LABOUR": "GOVLAB",
    "ENVIRONMENT": "GOVENV",
    "INFORMATION": "GOVMED",
    "CULTURE": "GOV",
    "TOURISM": "GOV",
    "PLANNING": "GOV",
    "COMMUNICATIONS": "GOVMED",
    "SCIENCE": "GOV",
    "TECHNOLOGY": "GOV",
    "HOUSING": "GOV",
    "IMMIGRATION": "GOV",
    "PETROLEUM": "GOV",
    "FISHERIES": "GOVAGR",
    "WATER": "GOV",
    "RELIGIOUS_AFFAIRS": "GOVREL",
}

OFFICE_PREFIXES = ["FORMER", "DEPUTY", "ACTING", "VICE", "SENIOR", "INTERIM"]
SCOPE_PREFIXES = ["LOCAL", "REGIONAL", "PROVINCIAL", "NATIONAL", "STATE", "FEDERAL"]


def build():
    # ministries and their officers
    for domain, code in MINISTRY_DOMAINS.items():
        add(f"{domain}_MINISTER", code, prefixes=True)
        add(f"MINISTER_OF_{domain}", code, prefixes=True)
        add(f"MINISTER_FOR_{domain}", code)
        add(f"{domain}_MINISTRY", code)
        add(f"MINISTRY_OF_{domain}", code)
        add(f"DEPARTMENT_OF_{domain}", code)
        add(f"{domain}_DEPARTMENT", code)
        add(f"{domain}_SECRETARY", code, prefixes=True)
        add(f"SECRETARY_OF_{domain}", code)

    # heads of state and government
    for p in ["PRESIDENT", "PRIME_MINISTER", "CHANCELLOR", "HEAD_OF_STATE",
              "HEAD_OF_GOVERNMENT", "MONARCH", "KING", "QUEEN", "EMIR", "SULTAN",
              "CROWN_PRINCE", "PREMIER", "GOVERNOR", "MAYOR", "VICE_PRESIDENT",
              "FIRST_LADY", "CABINET", "CABINET_MINISTER", "MINISTER",
              "GOVERNMENT", "REGIME", "ADMINISTRATION", "AUTHORITIES",
              "GOVERNMENT_OFFICIAL", "OFFICIAL", "CIVIL_SERVANT", "BUREAUCRAT",
              "SPOKESMAN", "SPOKESWOMAN", "SPOKESPERSON", "AMBASSADOR", "ENVOY",
              "CONSUL", "DIPLOMAT", "EMBASSY", "CONSULATE", "FOREIGN_MINISTER",
              "ATTORNEY_GENERAL", "PUBLIC_PROSECUTOR", "COMPTROLLER",
              "ELECTION_COMMISSION", "CENTRAL_BANK", "CENTRAL_BANK_GOVERNOR",
              "TAX_AUTHORITY", "CUSTOMS_SERVICE", "CITY_COUNCIL",
              "MUNICIPALITY", "DISTRICT_ADMINISTRATOR", "PROVINCIAL_GOVERNMENT",
              "RULING_PARTY", "JUNTA", "PRESIDENCY", "PALACE", "STATE_MEDIA"]:
        code = "GOVDIP" if p in ("AMBASSADOR", "ENVOY", "CONSUL", "DIPLOMAT",
                                 "EMBASSY", "CONSULATE", "FOREIGN_MINISTER") else "GOV"
        add(p, code, prefixes=p not in ("GOVERNMENT", "REGIME", "AUTHORITIES",
                                        "ADMINISTRATION", "STATE_MEDIA"),
            plural=p in ("GOVERNMENT_OFFICIAL", "OFFICIAL", "DIPLOMAT", "BUREAUCRAT",
                         "CIVIL_SERVANT", "CABINET_MINISTER", "MINISTER"))

    # legislatures
    for p in ["PARLIAMENT", "SENATE", "CONGRESS", "NATIONAL_ASSEMBLY",
              "LEGISLATURE", "HOUSE_OF_REPRESENTATIVES", "LOWER_HOUSE",
              "UPPER_HOUSE", "LAWMAKER", "LEGISLATOR", "SENATOR",
              "MEMBER_OF_PARLIAMENT", "PARLIAMENTARIAN", "CONGRESSMAN",
              "CONGRESSWOMAN", "SPEAKER_OF_PARLIAMENT",
              "PARLIAMENTARY_COMMITTEE", "OPPOSITION_LAWMAKER"]:
        add(p, "LEG", prefixes=p in ("LAWMAKER", "LEGISLATOR", "SENATOR"),
            plural=p in ("LAWMAKER", "LEGISLATOR", "SENATOR", "PARLIAMENTARIAN"))

    # courts
    for p in ["COURT", "SUPREME_COURT", "CONSTITUTIONAL_COURT", "HIGH_COURT",
              "APPEALS_COURT", "TRIBUNAL", "JUDGE", "CHIEF_JUSTICE", "JUSTICE",
              "MAGISTRATE", "PROSECUTOR", "JUDICIARY", "WAR_CRIMES_TRIBUNAL",
              "PUBLIC_DEFENDER", "BAR_ASSOCIATION"]:
        add(p, "JUD", prefixes=p in ("JUDGE", "PROSECUTOR", "MAGISTRATE"),
            plural=p in ("JUDGE", "PROSECUTOR", "MAGISTRATE"))

    # military
    for p in ["ARMY", "NAVY", "AIR_FORCE", "MARINES", "ARMED_FORCES",
              "MILITARY", "MILITARY_HEADQUARTERS", "GENERAL_STAFF",
              "DEFENSE_FORCES", "DEFENCE_FORCES", "SOLDIER", "TROOP",
              "SERVICEMAN", "OFFICER", "COMMANDER", "GENERAL", "ADMIRAL",
              "COLONEL", "MAJOR", "CAPTAIN", "LIEUTENANT", "SERGEANT",
              "BRIGADE", "BATTALION", "REGIMENT", "DIVISION", "GARRISON",
              "MILITARY_POLICE", "SPECIAL_FORCES", "COMMANDO", "PARATROOPER",
              "ARTILLERY", "INFANTRY", "COAST_GUARD", "NATIONAL_GUARD",
              "PEACEKEEPING_FORCE", "MILITARY_COMMANDER", "CHIEF_OF_STAFF",
              "WARPLANE", "WARSHIP", "MILITARY_BASE", "AIRBASE",
              "JOINT_CHIEFS_OF_STAFF", "MILITARY_SPOKESMAN"]:
        add(p, "MIL", prefixes=p in ("COMMANDER", "GENERAL", "ADMIRAL", "COLONEL",
                                     "OFFICER", "CHIEF_OF_STAFF"),
            plural=p in ("SOLDIER", "TROOP", "SERVICEMAN", "OFFICER", "COMMANDO",
                         "PARATROOPER", "WARPLANE", "WARSHIP", "GENERAL"))

    # police
    for p in ["POLICE", "POLICE_OFFICER", "POLICE_FORCE", "POLICE_CHIEF",
              "CONSTABLE", "GENDARMERIE", "RIOT_POLICE", "SECURITY_FORCES",
              "BORDER_GUARD", "PARAMILITARY_POLICE", "TRAFFIC_POLICE",
              "DETECTIVE", "SHERIFF", "SECURITY_SERVICE", "POLICE_COMMISSIONER",
              "ANTI_TERRORISM_SQUAD", "COUNTERTERRORISM_POLICE"]:
        add(p, "COP", prefixes=p in ("POLICE_CHIEF", "DETECTIVE", "SHERIFF",
                                     "POLICE_COMMISSIONER"),
            plural=p in ("POLICE_OFFICER", "CONSTABLE", "BORDER_GUARD", "DETECTIVE"))

    # intelligence
    for p in ["INTELLIGENCE_SERVICE", "INTELLIGENCE_AGENCY", "SPY_AGENCY",
              "SECRET_SERVICE", "SECRET_POLICE", "SPY", "INTELLIGENCE_OFFICER",
              "INTELLIGENCE_CHIEF", "COUNTERINTELLIGENCE", "SPYMASTER"]:
        add(p, "SPY", prefixes=p in ("INTELLIGENCE_CHIEF", "INTELLIGENCE_OFFICER"),
            plural=p in ("SPY", "INTELLIGENCE_OFFICER"))

    # rebels and armed non-state actors
    for p in ["REBEL", "REBEL_LEADER", "REBEL_GROUP", "REBEL_FIGHTER",
              "INSURGENT", "INSURGENCY", "GUERRILLA", "MILITANT",
              "MILITANT_GROUP", "ARMED_GROUP", "SEPARATIST", "SEPARATIST_GROUP",
              "FIGHTER", "WARLORD", "MILITIA", "MILITIAMAN", "PARAMILITARY",
              "FREEDOM_FIGHTER", "RESISTANCE_MOVEMENT", "ARMED_WING",
              "SPLINTER_GROUP", "INSURGENT_COMMANDER", "SUICIDE_BOMBER",
              "GUNMAN", "ATTACKER", "ASSAILANT", "EXTREMIST", "JIHADIST",
              "TERRORIST", "TERRORIST_GROUP", "TERROR_CELL", "BOMBER",
              "HIJACKER", "KIDNAPPER"]:
        add(p, "REB", prefixes=p in ("REBEL_LEADER", "INSURGENT_COMMANDER"),
            plural=p in ("REBEL", "INSURGENT", "GUERRILLA", "MILITANT", "SEPARATIST",
                         "FIGHTER", "MILITIAMAN", "GUNMAN", "ATTACKER", "ASSAILANT",
                         "EXTREMIST", "JIHADIST", "TERRORIST", "BOMBER", "KIDNAPPER"))

    # opposition and parties
    for p in ["OPPOSITION", "OPPOSITION_PARTY", "OPPOSITION_LEADER",
              "OPPOSITION_GROUP", "OPPOSITION_COALITION", "DISSIDENT",
              "POLITICAL_PARTY", "PARTY_LEADER", "PARTY_OFFICIAL", "CANDIDATE",
              "PRESIDENTIAL_CANDIDATE", "POLITICIAN", "EXILED_LEADER",
              "PRO_DEMOCRACY_MOVEMENT", "ACTIVIST_GROUP"]:
        code = "OPP" if p.startswith(("OPPOSITION", "DISSIDENT", "EXILED",
                                      "PRO_DEMOCRACY")) else "PTY"
        add(p, code, prefixes=p in ("OPPOSITION_LEADER", "PARTY_LEADER", "CANDIDATE",
                                    "POLITICIAN"),
            plural=p in ("DISSIDENT", "CANDIDATE", "POLITICIAN", "PARTY_OFFICIAL"))

    # civilians and civil society
    for p in ["CIVILIAN", "VILLAGE", "VILLAGER", "RESIDENT", "CITIZEN",
              "LOCAL_PEOPLE", "TOWNSPEOPLE", "BYSTANDER", "CROWD", "MOB",
              "PROTESTER", "DEMONSTRATOR", "MARCHER", "PICKETER", "RIOTER",
              "ACTIVIST", "HUMAN_RIGHTS_ACTIVIST", "CAMPAIGNER", "PETITIONER",
              "WOMAN", "CHILD", "FAMILY", "PENSIONER", "CONSUMER", "VICTIM",
              "SURVIVOR", "HOSTAGE", "PASSENGER", "COMMUTER", "TOURIST",
              "PILGRIM", "WORSHIPPER", "MOURNER", "NEIGHBORHOOD", "COMMUNITY",
              "TRIBE", "CLAN", "ETHNIC_MINORITY", "INDIGENOUS_GROUP"]:
        add(p, "CVL", plural=p in ("CIVILIAN", "VILLAGER", "RESIDENT", "CITIZEN",
                                   "BYSTANDER", "PROTESTER", "DEMONSTRATOR",
                                   "MARCHER", "RIOTER", "ACTIVIST", "WOMAN", "CHILD",
                                   "PENSIONER", "CONSUMER", "VICTIM", "SURVIVOR",
                                   "HOSTAGE", "PASSENGER", "COMMUTER", "TOURIST",
                                   "PILGRIM", "WORSHIPPER", "MOURNER", "FAMILY",
                                   "CAMPAIGNER"))

    # labor
    for p in ["UNION", "TRADE_UNION", "LABOR_UNION", "LABOUR_UNION",
              "UNION_LEADER", "WORKER", "STRIKER", "MINER", "FARMWORKER",
              "FACTORY_WORKER", "DOCKWORKER", "TEACHER_UNION",
              "TRANSPORT_WORKER", "CIVIL_SERVANTS_UNION", "EMPLOYEE"]:
        add(p, "LAB", prefixes=p == "UNION_LEADER",
            plural=p in ("WORKER", "STRIKER", "MINER", "FARMWORKER", "EMPLOYEE"))

    # agriculture
    for p in ["FARMER", "HERDER", "FISHERMAN", "PEASANT", "RANCHER",
              "AGRICULTURAL_COOPERATIVE", "FARMERS_ASSOCIATION"]:
        add(p, "AGR", plural=p in ("FARMER", "HERDER", "FISHERMAN", "PEASANT",
                                   "RANCHER"))

    # business
    for p in ["COMPANY", "CORPORATION", "FIRM", "BUSINESS", "BUSINESSMAN",
              "BUSINESSWOMAN", "ENTREPRENEUR", "EXECUTIVE", "CHIEF_EXECUTIVE",
              "BANK", "BANKER", "INVESTOR", "SHAREHOLDER", "TRADER", "MERCHANT",
              "SHOPKEEPER", "VENDOR", "INDUSTRY_GROUP", "CHAMBER_OF_COMMERCE",
              "AIRLINE", "OIL_COMPANY", "MINING_COMPANY", "STATE_ENTERPRISE",
              "STOCK_EXCHANGE", "MANUFACTURER", "CONTRACTOR", "LANDLORD"]:
        add(p, "BUS", prefixes=p in ("EXECUTIVE", "CHIEF_EXECUTIVE"),
            plural=p in ("BUSINESSMAN", "INVESTOR", "SHAREHOLDER", "TRADER",
                         "MERCHANT", "SHOPKEEPER", "VENDOR", "BANKER", "LANDLORD"))

    # media
    for p in ["JOURNALIST", "REPORTER", "CORRESPONDENT", "EDITOR",
              "PHOTOGRAPHER", "NEWSPAPER", "BROADCASTER", "TELEVISION_STATION",
              "RADIO_STATION", "NEWS_AGENCY", "PRESS", "MEDIA", "BLOGGER",
              "PRESS_FREEDOM_GROUP", "COLUMNIST"]:
        add(p, "JRN", plural=p in ("JOURNALIST", "REPORTER", "CORRESPONDENT",
                                   "EDITOR", "PHOTOGRAPHER", "BLOGGER", "COLUMNIST"))

    # medical
    for p in ["DOCTOR", "NURSE", "MEDIC", "PARAMEDIC", "SURGEON", "HOSPITAL",
              "CLINIC", "HEALTH_WORKER", "RED_CROSS", "RED_CRESCENT",
              "AMBULANCE_SERVICE", "MEDICAL_CHARITY", "HEALTH_AUTHORITY"]:
        add(p, "MED", plural=p in ("DOCTOR", "NURSE", "MEDIC", "PARAMEDIC",
                                   "SURGEON", "HEALTH_WORKER"))

    # education
    for p in ["STUDENT", "TEACHER", "PROFESSOR", "LECTURER", "UNIVERSITY",
              "SCHOOL", "COLLEGE", "ACADEMIC", "RESEARCHER", "SCIENTIST",
              "STUDENT_UNION", "STUDENT_GROUP", "SCHOOLCHILDREN"]:
        add(p, "EDU", plural=p in ("STUDENT", "TEACHER", "PROFESSOR", "LECTURER",
                                   "ACADEMIC", "RESEARCHER", "SCIENTIST"))

    # religious
    for p in ["CLERIC", "IMAM", "PRIEST", "BISHOP", "ARCHBISHOP", "CARDINAL",
              "POPE", "RABBI", "MONK", "NUN", "AYATOLLAH", "MUFTI", "PREACHER",
              "CHURCH", "MOSQUE", "TEMPLE", "SYNAGOGUE", "RELIGIOUS_LEADER",
              "RELIGIOUS_SCHOLAR", "CLERGY", "FAITHFUL", "CONGREGATION",
              "RELIGIOUS_PARTY", "SEMINARY"]:
        add(p, "REL", plural=p in ("CLERIC", "IMAM", "PRIEST", "BISHOP", "MONK",
                                   "NUN", "PREACHER", "RELIGIOUS_LEADER",
                                   "RELIGIOUS_SCHOLAR"))

    # NGOs and IGOs
    for p in ["HUMAN_RIGHTS_GROUP", "AID_AGENCY", "AID_GROUP", "RELIEF_AGENCY",
              "CHARITY", "NONGOVERNMENTAL_ORGANIZATION", "CIVIL_SOCIETY_GROUP",
              "WATCHDOG_GROUP", "ENVIRONMENTAL_GROUP", "ADVOCACY_GROUP",
              "HUMANITARIAN_ORGANIZATION", "FOUNDATION", "THINK_TANK"]:
        add(p, "NGO", plural=p in ("CHARITY", "AID_AGENCY"))
    for p in ["UNITED_NATIONS", "UN_SECURITY_COUNCIL", "UN_GENERAL_ASSEMBLY",
              "SECURITY_COUNCIL", "WORLD_BANK", "INTERNATIONAL_MONETARY_FUND",
              "EUROPEAN_UNION", "EUROPEAN_COMMISSION", "AFRICAN_UNION",
              "ARAB_LEAGUE", "NATO", "WORLD_HEALTH_ORGANIZATION",
              "INTERNATIONAL_CRIMINAL_COURT", "ORGANIZATION_OF_AMERICAN_STATES",
              "UN_PEACEKEEPERS", "UN_ENVOY", "UN_SECRETARY_GENERAL",
              "INTERNATIONAL_OBSERVERS", "REGIONAL_BLOC"]:
        add(p, "IGO")

    # refugees and migrants
    for p in ["REFUGEE", "ASYLUM_SEEKER", "MIGRANT", "DISPLACED_PERSON",
              "INTERNALLY_DISPLACED_PERSON", "DEPORTEE", "EXILE",
              "REFUGEE_CAMP", "MIGRANT_WORKER"]:
        add(p, "REF", plural=p in ("REFUGEE", "ASYLUM_SEEKER", "MIGRANT",
                                   "DISPLACED_PERSON", "DEPORTEE", "EXILE",
                                   "MIGRANT_WORKER"))

    # criminals
    for p in ["GANG", "GANG_MEMBER", "CRIMINAL", "DRUG_CARTEL", "DRUG_TRAFFICKER",
              "SMUGGLER", "PIRATE", "ORGANIZED_CRIME_GROUP", "MAFIA",
              "CRIME_SYNDICATE", "ROBBER", "POACHER", "HUMAN_TRAFFICKER"]:
        add(p, "CRM", plural=p in ("GANG_MEMBER", "CRIMINAL", "DRUG_TRAFFICKER",
                                   "SMUGGLER", "PIRATE", "ROBBER", "POACHER"))

    # elites
    for p in ["ELITE", "ARISTOCRAT", "OLIGARCH", "TYCOON", "MAGNATE",
              "ROYAL_FAMILY", "NOBLEMAN", "LANDOWNER"]:
        add(p, "ELI", plural=p in ("ARISTOCRAT", "OLIGARCH", "TYCOON", "LANDOWNER"))


def expand() -> list[tuple[str, str]]:
    build()
    out: list[tuple[str, str]] = []
    seen: set[str] = set()

    def emit(pattern: str, code: str):
        if pattern not in seen:
            seen.add(pattern)
            out.append((pattern, code))

    for pattern, code, prefixes, plural in BASES:
        emit(pattern, code)
        if plural:
            suffix = "ES" if pattern.endswith(("S", "X", "CH", "SH", "MAN")) else "S"
            if pattern.endswith("MAN"):
                emit(pattern[:-3] + "MEN", code)
            elif pattern.endswith("CHILD"):
                emit(pattern + "REN", code)
            elif pattern.endswith("WOMAN"):
                emit(pattern[:-5] + "WOMEN", code)
            elif pattern.endswith("Y") and pattern[-2] not in "AEIOU":
                emit(pattern[:-1] + "IES", code)
            else:
                emit(pattern + suffix, code)
        if prefixes:
            for pre in OFFICE_PREFIXES:
                emit(f"{pre}_{pattern}", code)
    # scope variants for a slice of institutional patterns
    for pattern, code, prefixes, plural in BASES:
        if pattern.endswith(("MINISTRY", "GOVERNMENT", "COUNCIL", "COURT",
                             "POLICE", "ASSEMBLY", "AUTHORITY")):
            for pre in SCOPE_PREFIXES:
                emit(f"{pre}_{pattern}", code)
    return out


def main():
    entries = expand()
    print("# Generic actor patterns -> role category codes.")
    print("# Format: NAME [~CODE]; underscores read as spaces; '#' comments.")
    print(f"# {len(entries)} entries.")
    for pattern, code in entries:
        print(f"{pattern} [~{code}]")


if __name__ == "__main__":
    main()
