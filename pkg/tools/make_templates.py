#!/usr/bin/env python3
"""Generate the default question-template file.

Every category gets a generic ("*") stanza; every mode gets a tailored stanza
built from an event noun phrase and, where natural, transitive verb forms for
the conditioned rounds.  Rerun after editing the phrase tables:

    python tools/make_templates.py > src/eventcoder/data/templates.tsv
"""

# (category, mode) -> (event noun phrase, "who did X <obj>?" verb, "who <past> Y?" verb)
PHRASES = {
    ("ACCUSE", "*"): ("the accusation", "accuse", "accused"),
    ("ACCUSE", "allege"): ("the allegation", "make the allegation against", "made the allegation against"),
    ("ACCUSE", "disapprove"): ("the criticism", "criticize", "criticized"),
    ("ACCUSE", "investigate"): ("the investigation", "investigate", "investigated"),
    ("AGREE", "*"): ("the agreement", "reach an agreement with", "reached an agreement with"),
    ("ASSAULT", "*"): ("the attack", "attack", "attacked"),
    ("ASSAULT", "abduct"): ("the abduction", "abduct", "abducted"),
    ("ASSAULT", "assassinate"): ("the assassination", "assassinate", "assassinated"),
    ("ASSAULT", "beat"): ("the beating", "beat", "beat"),
    ("ASSAULT", "cleansing"): ("the ethnic cleansing campaign", "drive out", "drove out"),
    ("ASSAULT", "crowd-control"): ("the crowd control operation", "use force against", "used force against"),
    ("ASSAULT", "destroy"): ("the destruction of property", "destroy the property of", "destroyed the property of"),
    ("ASSAULT", "execute"): ("the execution", "execute", "executed"),
    ("ASSAULT", "explosives"): ("the bombing", "bomb", "bombed"),
    ("ASSAULT", "firearms"): ("the shooting", "shoot", "shot"),
    ("ASSAULT", "heavy-weapons"): ("the shelling", "shell", "shelled"),
    ("ASSAULT", "primitive"): ("the attack", "attack", "attacked"),
    ("ASSAULT", "sexual"): ("the assault", "assault", "assaulted"),
    ("ASSAULT", "suicide-attack"): ("the suicide attack", "target in the suicide attack", "carried out the suicide attack against"),
    ("ASSAULT", "torture"): ("the torture", "torture", "tortured"),
    ("COERCE", "*"): ("the crackdown", "crack down on", "cracked down on"),
    ("COERCE", "arrest"): ("the arrest", "arrest", "arrested"),
    ("COERCE", "ban"): ("the ban", "ban", "banned"),
    ("COERCE", "censor"): ("the censorship", "censor", "censored"),
    ("COERCE", "curfew"): ("the curfew", "impose the curfew on", "imposed the curfew on"),
    ("COERCE", "deport"): ("the deportation", "deport", "deported"),
    ("COERCE", "martial-law"): ("the declaration of martial law", "impose martial law on", "imposed martial law on"),
    ("COERCE", "misinformation"): ("the disinformation campaign", "spread disinformation about", "spread disinformation about"),
    ("COERCE", "restrict"): ("the restrictions", "restrict", "restricted"),
    ("COERCE", "seize"): ("the seizure", "seize property from", "seized property from"),
    ("COERCE", "withold"): ("the withholding of resources", "withhold resources from", "withheld resources from"),
    ("CONSULT", "*"): ("the meeting", "meet with", "met with"),
    ("CONSULT", "multilateral"): ("the multilateral meeting", "meet with", "met with"),
    ("CONSULT", "phone"): ("the phone call", "call", "called"),
    ("CONSULT", "third-party"): ("the mediated talks", "hold talks with", "held talks with"),
    ("CONSULT", "visit"): ("the visit", "visit", "visited"),
    ("MOBILIZE", "*"): ("the mobilization", "mobilize against", "mobilized against"),
    ("MOBILIZE", "militia"): ("the militia mobilization", "mobilize militia against", "mobilized militia against"),
    ("MOBILIZE", "police"): ("the police deployment", "deploy police against", "deployed police against"),
    ("MOBILIZE", "troops"): ("the troop mobilization", "deploy troops against", "deployed troops against"),
    ("MOBILIZE", "weapons"): ("the weapons buildup", "aim the weapons buildup at", "aimed the weapons buildup at"),
    ("PROTEST", "*"): ("the protest", "protest against", "protested against"),
    ("PROTEST", "boycott"): ("the boycott", "boycott", "boycotted"),
    ("PROTEST", "hunger"): ("the hunger strike", "direct the hunger strike at", "directed the hunger strike at"),
    ("PROTEST", "obstruct"): ("the blockade", "blockade", "blockaded"),
    ("PROTEST", "strike"): ("the strike", "strike against", "went on strike against"),
    ("REJECT", "*"): ("the rejection", "refuse", "refused"),
    ("REJECT", "assist"): ("the refusal of aid", "refuse aid to", "refused aid to"),
    ("REJECT", "change"): ("the rejection of demands", "refuse the demands of", "refused the demands of"),
    ("REJECT", "meet"): ("the refusal to meet", "refuse to meet", "refused to meet"),
    ("REJECT", "yield"): ("the refusal to yield", "refuse to yield to", "refused to yield to"),
    ("REQUEST", "*"): ("the request", "make the request to", "made the request to"),
    ("REQUEST", "assist"): ("the request for assistance", "ask for assistance from", "asked for assistance from"),
    ("REQUEST", "change"): ("the demand for change", "demand change from", "demanded change from"),
    ("REQUEST", "meet"): ("the request for a meeting", "ask for a meeting with", "asked for a meeting with"),
    ("REQUEST", "yield"): ("the demand for concessions", "demand concessions from", "demanded concessions from"),
    ("RETREAT", "*"): ("the retreat", "pull back from", "pulled back from"),
    ("RETREAT", "access"): ("the granting of access", "grant access to", "granted access to"),
    ("RETREAT", "ceasefire"): ("the ceasefire", "agree a ceasefire with", "agreed a ceasefire with"),
    ("RETREAT", "disarm"): ("the disarmament", "disarm for", "disarmed for"),
    ("RETREAT", "release"): ("the release", "release", "released"),
    ("RETREAT", "resign"): ("the resignation", "resign under pressure from", "resigned under pressure from"),
    ("RETREAT", "return"): ("the return", "return to", "returned to"),
    ("RETREAT", "withdraw"): ("the withdrawal", "withdraw from", "withdrew from"),
    ("SANCTION", "*"): ("the sanctions", "sanction", "sanctioned"),
    ("SANCTION", "convict"): ("the conviction", "convict", "convicted"),
    ("SANCTION", "discontinue"): ("the ending of relations", "cut ties with", "cut ties with"),
    ("SANCTION", "expel"): ("the expulsion", "expel", "expelled"),
    ("SANCTION", "withdraw"): ("the withdrawal from the agreement", "withdraw from the agreement with", "withdrew from the agreement with"),
    ("THREATEN", "*"): ("the threat", "threaten", "threatened"),
    ("THREATEN", "arrest"): ("the threat of arrest", "threaten to arrest", "threatened to arrest"),
    ("THREATEN", "ban"): ("the threatened ban", "threaten to ban", "threatened to ban"),
    ("THREATEN", "expel"): ("the threat of expulsion", "threaten to expel", "threatened to expel"),
    ("THREATEN", "relations"): ("the threat to relations", "threaten to cut ties with", "threatened to cut ties with"),
    ("THREATEN", "restrict"): ("the threatened restrictions", "threaten to restrict", "threatened to restrict"),
    ("THREATEN", "territory"): ("the territorial threat", "make the territorial threat against", "made the territorial threat against"),
    ("THREATEN", "violence"): ("the threat of violence", "threaten violence against", "threatened violence against"),
    ("SUPPORT", "*"): ("the expression of support", "express support for", "expressed support for"),
    ("CONCEDE", "*"): ("the concession", "make the concession to", "made the concession to"),
    ("COOPERATE", "*"): ("the cooperation", "cooperate with", "cooperated with"),
    ("AID", "*"): ("the provision of aid", "provide aid to", "provided aid to"),
}

# Hand-written stanzas keep their reference phrasing.
HAND_WRITTEN = {
    ("PROTEST", "demo"): [
        ("ACTOR", 1, "Who held a demonstration?"),
        ("RECIP", 1, "Who was the target of the demonstration?"),
        ("LOCATION", 1, "Where was the demonstration held?"),
        ("DATE", 1, "When was the demonstration held?"),
        ("RECIP", 2, "Who was {actor_text}'s demonstration against?"),
        ("ACTOR", 3, "Who held a demonstration against {recip_text}?"),
    ],
    ("PROTEST", "riot"): [
        ("ACTOR", 1, "Who engaged in the riot?"),
        ("ACTOR", 1, "Who rioted?"),
        ("RECIP", 1, "Who was the riot directed against?"),
        ("RECIP", 1, "What was the target of the riot?"),
        ("LOCATION", 1, "Where did the riot take place?"),
        ("DATE", 1, "When did the riot take place?"),
        ("RECIP", 2, "Who did {actor_text} riot against?"),
        ("RECIP", 2, "What did {actor_text} target in the riot?"),
        ("ACTOR", 3, "Who rioted against {recip_text}?"),
        ("ACTOR", 3, "Which group rioted against {recip_text}?"),
    ],
}


def stanza(np, vp_obj, vp_past):
    return [
        ("ACTOR", 1, f"Who carried out {np}?"),
        ("RECIP", 1, f"Who was the target of {np}?"),
        ("LOCATION", 1, f"Where did {np} take place?"),
        ("DATE", 1, f"When did {np} take place?"),
        ("RECIP", 2, f"Who did {{actor_text}} {vp_obj}?"),
        ("ACTOR", 3, f"Who {vp_past} {{recip_text}}?"),
    ]


def main():
    lines = [
        "# Question templates: category<TAB>mode<TAB>attribute<TAB>round<TAB>question",
        "# mode '*' is the category-level fallback.  Rounds 2/3 substitute",
        "# {actor_text} / {recip_text} from earlier rounds' answers.",
    ]
    for (cat, mode) in sorted(set(PHRASES) | set(HAND_WRITTEN)):
        rows = HAND_WRITTEN.get((cat, mode)) or stanza(*PHRASES[(cat, mode)])
        for attr, rnd, text in rows:
            lines.append(f"{cat}\t{mode}\t{attr}\t{rnd}\t{text}")
    print("\n".join(lines))


if __name__ == "__main__":
    main()
