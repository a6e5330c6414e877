#!/usr/bin/env python3
"""Generate the desk-scale fixture set under fixtures/.

Outputs: articles.jsonl (50-article entity index with redirect records),
gazetteer.tsv (published column order), corpus_100.jsonl (synthetic news),
composite_ledes.jsonl, misspellings.tsv (verified edit distance 1),
geo_docs.jsonl, riot_doc.jsonl and riot_recorded_qa.jsonl (recorded QA
answers keyed to the riot document's coded text).

Deterministic: rerunning reproduces identical bytes.
"""

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from eventcoder.fuzzy import levenshtein  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / "fixtures"


# --- entity articles ---------------------------------------------------------------

PEOPLE = [
    ("Barack Obama",
     ["Barack Hussein Obama", "President Obama", "Barry Obama", "Obama"],
     "Barack Obama is an American politician who served as the 44th president of the United States.",
     {"country": "United States",
      "offices": [
          {"title": "President of the United States", "start": "2009-01-20", "end": "2017-01-20"},
          {"title": "United States Senator from Illinois", "start": "2005-01-03", "end": "2008-11-16"},
      ]}),
    ("Joe Biden", ["Joseph Biden", "Joseph R. Biden", "Joe Biden Jr."],
     "Joe Biden is an American politician who served as the 46th president of the United States.",
     {"country": "United States",
      "offices": [{"title": "President of the United States", "start": "2021-01-20", "end": "2025-01-20"},
                  {"title": "Vice President of the United States", "start": "2009-01-20", "end": "2017-01-20"}]}),
    ("Jill Biden", ["Jill Tracy Biden"],
     "Jill Biden is an American educator who served as first lady of the United States.",
     {"country": "United States"}),
    ("Emmanuel Macron", ["Macron"],
     "Emmanuel Macron is a French politician serving as president of France.",
     {"country": "France",
      "offices": [{"title": "President of France", "start": "2017-05-14", "end": None}]}),
    ("Angela Merkel", ["Merkel"],
     "Angela Merkel is a German politician who served as chancellor of Germany.",
     {"country": "Germany",
      "offices": [{"title": "Chancellor of Germany", "start": "2005-11-22", "end": "2021-12-08"}]}),
    ("Vladimir Putin", ["Putin"],
     "Vladimir Putin is a Russian politician serving as president of Russia.",
     {"country": "Russia",
      "offices": [{"title": "President of Russia", "start": "2012-05-07", "end": None}]}),
    ("Narendra Modi", ["Modi"],
     "Narendra Modi is an Indian politician serving as prime minister of India.",
     {"country": "India",
      "offices": [{"title": "Prime Minister of India", "start": "2014-05-26", "end": None}]}),
    ("Imran Khan", [],
     "Imran Khan is a Pakistani politician who served as prime minister of Pakistan.",
     {"country": "Pakistan",
      "offices": [{"title": "Prime Minister of Pakistan", "start": "2018-08-18", "end": "2022-04-10"}]}),
    ("Recep Tayyip Erdogan", ["Erdogan"],
     "Recep Tayyip Erdogan is a Turkish politician serving as president of Turkey.",
     {"country": "Turkey",
      "offices": [{"title": "President of Turkey", "start": "2014-08-28", "end": None}]}),
    ("Volodymyr Zelensky", ["Zelensky", "Volodymyr Zelenskyy"],
     "Volodymyr Zelensky is a Ukrainian politician serving as president of Ukraine.",
     {"country": "Ukraine",
      "offices": [{"title": "President of Ukraine", "start": "2019-05-20", "end": None}]}),
    ("Hassan Rouhani", ["Rouhani"],
     "Hassan Rouhani is an Iranian politician who served as president of Iran.",
     {"country": "Iran",
      "offices": [{"title": "President of Iran", "start": "2013-08-03", "end": "2021-08-03"}]}),
    ("Boris Johnson", [],
     "Boris Johnson is a British politician who served as prime minister of the United Kingdom.",
     {"country": "United Kingdom",
      "offices": [{"title": "Prime Minister of the United Kingdom", "start": "2019-07-24", "end": "2022-09-06"}]}),
    ("Justin Trudeau", ["Trudeau"],
     "Justin Trudeau is a Canadian politician serving as prime minister of Canada.",
     {"country": "Canada",
      "offices": [{"title": "Prime Minister of Canada", "start": "2015-11-04", "end": None}]}),
    ("Xi Jinping", [],
     "Xi Jinping is a Chinese politician serving as president of China.",
     {"country": "China",
      "offices": [{"title": "President of China", "start": "2013-03-14", "end": None}]}),
    ("Pedro Sanchez", ["Pedro Sánchez"],
     "Pedro Sanchez is a Spanish politician serving as prime minister of Spain.",
     {"country": "Spain",
      "offices": [{"title": "Prime Minister of Spain", "start": "2018-06-02", "end": None}]}),
    ("Kofi Annan", [],
     "Kofi Annan was a Ghanaian diplomat who served as secretary-general of the United Nations.",
     {"country": "Ghana",
      "offices": [{"title": "Secretary-General of the United Nations", "start": "1997-01-01", "end": "2006-12-31"}]}),
    ("Ban Ki-moon", [],
     "Ban Ki-moon is a South Korean diplomat who served as secretary-general of the United Nations.",
     {"country": "South Korea",
      "offices": [{"title": "Secretary-General of the United Nations", "start": "2007-01-01", "end": "2016-12-31"}]}),
    ("Antonio Guterres", ["António Guterres"],
     "Antonio Guterres is a Portuguese politician serving as secretary-general of the United Nations.",
     {"country": "Portugal",
      "offices": [{"title": "Secretary-General of the United Nations", "start": "2017-01-01", "end": None}]}),
    ("Nicolas Maduro", ["Maduro"],
     "Nicolas Maduro is a Venezuelan politician serving as president of Venezuela.",
     {"country": "Venezuela",
      "offices": [{"title": "President of Venezuela", "start": "2013-04-19", "end": None}]}),
    ("Benjamin Netanyahu", ["Netanyahu"],
     "Benjamin Netanyahu is an Israeli politician serving as prime minister of Israel.",
     {"country": "Israel",
      "offices": [{"title": "Prime Minister of Israel", "start": "2022-12-29", "end": None}]}),
    ("Jacinda Ardern", ["Ardern"],
     "Jacinda Ardern is a New Zealand politician who served as prime minister of New Zealand.",
     {"country": "New Zealand",
      "offices": [{"title": "Prime Minister of New Zealand", "start": "2017-10-26", "end": "2023-01-25"}]}),
    ("Abiy Ahmed", [],
     "Abiy Ahmed is an Ethiopian politician serving as prime minister of Ethiopia.",
     {"country": "Ethiopia",
      "offices": [{"title": "Prime Minister of Ethiopia", "start": "2018-04-02", "end": None}]}),
]

ORGS = [
    ("Taliban", ["The Taliban", "Taleban"],
     "The Taliban is an Islamist militant group that rules Afghanistan.",
     {"type": "Militant group"}),
    ("Al-Qaeda", ["Al Qaeda", "Al-Qaida", "al-Qa'ida"],
     "Al-Qaeda is a militant Islamist network founded in 1988.",
     {"type": "Militant group"}),
    ("Hezbollah", ["Hizbollah", "Hizbullah"],
     "Hezbollah is a Lebanese political party and militant group.",
     {"country": "Lebanon", "type": "Political party and militant group"}),
    ("United Nations", ["UN", "U.N."],
     "The United Nations is an intergovernmental organization promoting international cooperation.",
     {"type": "Intergovernmental organization"}),
    ("NATO", ["North Atlantic Treaty Organization"],
     "NATO is an intergovernmental military alliance of North American and European states.",
     {"type": "Military alliance"}),
    ("European Union", ["EU", "E.U."],
     "The European Union is a supranational political and economic union of member states.",
     {"type": "Political and economic union"}),
    ("African Union", ["AU"],
     "The African Union is a continental union of African member states.",
     {"type": "Continental union"}),
    ("Arab League", ["League of Arab States"],
     "The Arab League is a regional organization of Arab states.",
     {"type": "Regional organization"}),
    ("Red Cross", ["International Red Cross", "ICRC"],
     "The Red Cross is a humanitarian organization providing emergency assistance and disaster relief.",
     {"type": "Humanitarian organization"}),
    ("Amnesty International", ["Amnesty"],
     "Amnesty International is a human rights organization headquartered in London.",
     {"type": "Human rights organization"}),
    ("Human Rights Watch", ["HRW"],
     "Human Rights Watch is a human rights organization headquartered in New York.",
     {"type": "Human rights organization"}),
    ("World Health Organization", ["WHO"],
     "The World Health Organization is the United Nations agency for international public health.",
     {"type": "United Nations agency"}),
    ("The Pentagon", ["Pentagon"],
     "The Pentagon is the military headquarters of the American armed forces.",
     {"country": "United States", "type": "Military headquarters"}),
    ("White House", ["The White House"],
     "The White House is the official residence and workplace of the president of the United States.",
     {"country": "United States", "type": "Official residence"}),
    ("Kremlin", ["The Kremlin", "Moscow Kremlin"],
     "The Kremlin is a fortified complex in Moscow that is the seat of the Russian government.",
     {"country": "Russia", "type": "Seat of government"}),
    ("Interpol", ["International Criminal Police Organization"],
     "Interpol is an international organization facilitating police cooperation.",
     {"type": "International police organization"}),
    ("Baloch Liberation Army", ["BLA"],
     "The Baloch Liberation Army is a militant separatist group operating in Pakistan.",
     {"country": "Pakistan", "type": "Militant separatist group"}),
]

PLACES = [
    ("Paris", ["City of Light"],
     "Paris is the capital and most populous city of France.", {"country": "France"}),
    ("Delhi", ["Dilli"],
     "Delhi is a metropolis and union territory of India containing the national capital.",
     {"country": "India"}),
    ("Kabul", [],
     "Kabul is the capital and largest city of Afghanistan.", {"country": "Afghanistan"}),
    ("Damascus", [],
     "Damascus is the capital and largest city of Syria.", {"country": "Syria"}),
    ("Aleppo", ["Halab"],
     "Aleppo is a city in northern Syria.", {"country": "Syria"}),
    ("Moscow", [],
     "Moscow is the capital and largest city of Russia.", {"country": "Russia"}),
    ("Islamabad", [],
     "Islamabad is the capital city of Pakistan.", {"country": "Pakistan"}),
    ("Samangan Province", ["Samangan"],
     "Samangan Province is one of the provinces of Afghanistan.", {"country": "Afghanistan"}),
    ("Aybak", ["Aibak", "Haibak"],
     "Aybak is a city in northern Afghanistan and the capital of Samangan Province.",
     {"country": "Afghanistan"}),
    ("Geneva", [],
     "Geneva is a city in Switzerland hosting many international organizations.",
     {"country": "Switzerland"}),
]


def islamic_state_redirects() -> list[str]:
    """100+ alternative names, mirroring the heavy redirect traffic such
    groups accumulate."""
    out = ["ISIL", "ISIS", "IS", "Daesh", "Da'ish", "Da'esh", "The Islamic State",
           "IS group", "So-called Islamic State", "Self-styled Islamic State"]
    bases = [
        "Islamic State of Iraq and Syria",
        "Islamic State of Iraq and the Levant",
        "Islamic State in Iraq and Syria",
        "Islamic State in Iraq and the Levant",
        "Islamic State of Iraq and al-Sham",
    ]
    for base in bases:
        out.append(base)
        out.append("The " + base)
        out.append(base.replace("Islamic State", "Islamic state"))
    for abbr in ["I.S.I.L.", "I.S.I.S.", "I.S.", "Isil", "Isis", "Daish", "Dawlah"]:
        out.append(abbr)
    for suffix in ["group", "organization", "organisation", "militants", "fighters",
                   "insurgents", "movement", "caliphate", "terror group", "jihadists"]:
        out.append(f"Islamic State {suffix}")
        out.append(f"ISIS {suffix}")
        out.append(f"ISIL {suffix}")
        out.append(f"Daesh {suffix}")
    for region in ["Iraq", "Syria", "Khorasan", "West Africa", "Sinai", "Libya",
                   "Yemen", "Somalia", "the Sahel", "the Philippines", "the Caucasus",
                   "Central Africa", "East Asia", "Greater Sahara", "Mozambique"]:
        out.append(f"Islamic State in {region}")
        out.append(f"Islamic State - {region} Province")
    seen = []
    for name in out:
        if name not in seen:
            seen.append(name)
    assert len(seen) >= 100, len(seen)
    return seen


def write_articles() -> None:
    records = []
    for title, redirects, summary, infobox in PEOPLE + ORGS + PLACES:
        records.append({
            "title": title,
            "page_kind": "article",
            "redirects": [],
            "alt_names": redirects[:1],
            "short_summary": summary,
            "categories": [],
            "infobox": infobox,
            "intro_paragraph": summary,
        })
        for r in redirects:
            records.append({"title": r, "page_kind": "redirect", "redirect_to": title})
    records.append({
        "title": "Islamic State",
        "page_kind": "article",
        "redirects": [],
        "alt_names": ["ISIL", "ISIS"],
        "short_summary": "The Islamic State is a transnational militant group and former unrecognized quasi-state.",
        "categories": ["Jihadist groups"],
        "infobox": {"type": "Militant group"},
        "intro_paragraph": "The Islamic State is a transnational militant group.",
    })
    for r in islamic_state_redirects():
        records.append({"title": r, "page_kind": "redirect", "redirect_to": "Islamic State"})
    records.append({"title": "Mercury", "page_kind": "disambiguation"})
    records.append({"title": "Category:Presidents", "page_kind": "category"})

    with open(OUT / "articles.jsonl", "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True, ensure_ascii=False) + "\n")
    n_articles = sum(1 for r in records if r["page_kind"] == "article")
    assert n_articles == 50, n_articles


# --- gazetteer ---------------------------------------------------------------------

# geonameid, name, alternatenames, lat, lon, fclass, fcode, country, admin1, population
GAZ_ROWS = [
    (1131316, "Aybak", "Aibak,Haibak,Samangan", 36.26468, 68.01551, "P", "PPLA", "AF", "Samangan", 47823),
    (1127110, "Samangan", "Samangan Province", 35.95, 67.76, "A", "ADM1", "AF", "Samangan", 325000),
    (1149361, "Afghanistan", "Islamic Republic of Afghanistan", 33.0, 65.0, "A", "PCLI", "AF", "", 37172386),
    (1138958, "Kabul", "Cabool,Caubul", 34.52813, 69.17233, "P", "PPLC", "AF", "Kabul", 4434550),
    (2988507, "Paris", "Lutetia,Paname", 48.85341, 2.3488, "P", "PPLC", "FR", "Ile-de-France", 2138551),
    (4717560, "Paris", "", 33.66094, -95.55551, "P", "PPL", "US", "Texas", 25171),
    (1273294, "Delhi", "Dehli,Dilli,Old Delhi", 28.65195, 77.23149, "P", "PPLA", "IN", "Delhi", 10927986),
    (1261481, "New Delhi", "", 28.63576, 77.22445, "P", "PPLC", "IN", "Delhi", 317797),
    (170654, "Damascus", "Dimashq,Esh Sham", 33.5102, 36.29128, "P", "PPLC", "SY", "Damascus", 1569394),
    (170063, "Aleppo", "Halab,Alep", 36.20124, 37.16117, "P", "PPL", "SY", "Aleppo", 1602264),
    (2643743, "London", "Londres", 51.50853, -0.12574, "P", "PPLC", "GB", "England", 8961989),
    (4140963, "Washington", "Washington D.C.,Washington DC", 38.89511, -77.03637, "P", "PPLC", "US", "District of Columbia", 601723),
    (524901, "Moscow", "Moskva", 55.75222, 37.61556, "P", "PPLC", "RU", "Moscow", 10381222),
    (1176615, "Islamabad", "", 33.72148, 73.04329, "P", "PPLC", "PK", "Islamabad", 601600),
    (1174872, "Karachi", "", 24.8608, 67.0104, "P", "PPLA", "PK", "Sindh", 11624219),
    (1172451, "Lahore", "", 31.558, 74.35071, "P", "PPLA", "PK", "Punjab", 6310888),
    (1168197, "Peshawar", "", 34.008, 71.57849, "P", "PPLA", "PK", "Khyber Pakhtunkhwa", 1218773),
    (1167528, "Quetta", "", 30.18414, 67.00141, "P", "PPLA", "PK", "Balochistan", 733675),
    (1185241, "Dhaka", "Dacca", 23.7104, 90.40744, "P", "PPLC", "BD", "Dhaka", 10356500),
    (184745, "Nairobi", "", -1.28333, 36.81667, "P", "PPLC", "KE", "Nairobi", 2750547),
    (360630, "Cairo", "Al Qahirah", 30.06263, 31.24967, "P", "PPLC", "EG", "Cairo", 7734614),
    (112931, "Tehran", "Teheran", 35.69439, 51.42151, "P", "PPLC", "IR", "Tehran", 7153309),
    (98182, "Baghdad", "Bagdad", 33.34058, 44.40088, "P", "PPLC", "IQ", "Baghdad", 7216000),
    (99072, "Mosul", "Al Mawsil", 36.335, 43.11889, "P", "PPL", "IQ", "Nineveh", 1739800),
    (703448, "Kyiv", "Kiev,Kyyiv", 50.45466, 30.5238, "P", "PPLC", "UA", "Kyiv", 2797553),
    (706483, "Kharkiv", "Kharkov", 49.98081, 36.25272, "P", "PPL", "UA", "Kharkiv", 1433886),
    (709717, "Donetsk", "", 48.023, 37.80224, "P", "PPL", "UA", "Donetsk", 1024700),
    (323786, "Ankara", "Angora", 39.91987, 32.85427, "P", "PPLC", "TR", "Ankara", 3517182),
    (745044, "Istanbul", "Constantinople", 41.01384, 28.94966, "P", "PPL", "TR", "Istanbul", 14804116),
    (2210247, "Tripoli", "Tarabulus", 32.88743, 13.18733, "P", "PPLC", "LY", "Tripoli", 1150989),
    (88319, "Benghazi", "Banghazi", 32.11486, 20.06859, "P", "PPL", "LY", "Benghazi", 650629),
    (379252, "Khartoum", "Al Khartum", 15.55177, 32.53241, "P", "PPLC", "SD", "Khartoum", 1974647),
    (53654, "Mogadishu", "Muqdisho", 2.03711, 45.34375, "P", "PPLC", "SO", "Banaadir", 2587183),
    (3646738, "Caracas", "", 10.48801, -66.87919, "P", "PPLC", "VE", "Capital", 3000000),
    (3688689, "Bogota", "Bogotá,Santa Fe de Bogota", 4.60971, -74.08175, "P", "PPLC", "CO", "Bogota D.C.", 7674366),
    (3871336, "Santiago", "", -33.45694, -70.64827, "P", "PPLC", "CL", "Santiago Metropolitan", 4837295),
    (625144, "Minsk", "", 53.9, 27.56667, "P", "PPLC", "BY", "Minsk City", 1742124),
    (756135, "Warsaw", "Warszawa", 52.22977, 21.01178, "P", "PPLC", "PL", "Mazovia", 1702139),
    (2950159, "Berlin", "", 52.52437, 13.41053, "P", "PPLC", "DE", "Berlin", 3426354),
    (3117735, "Madrid", "", 40.4165, -3.70256, "P", "PPLC", "ES", "Madrid", 3255944),
    (3128760, "Barcelona", "", 41.38879, 2.15899, "P", "PPL", "ES", "Catalonia", 1621537),
    (3169070, "Rome", "Roma", 41.89193, 12.51133, "P", "PPLC", "IT", "Latium", 2318895),
    (264371, "Athens", "Athinai", 37.98376, 23.72784, "P", "PPLC", "GR", "Attica", 664046),
    (1298824, "Yangon", "Rangoon", 16.80528, 96.15611, "P", "PPL", "MM", "Yangon", 4477638),
    (6611854, "Naypyidaw", "Nay Pyi Taw", 19.745, 96.12972, "P", "PPLC", "MM", "Naypyidaw", 925000),
    (1248991, "Colombo", "", 6.93548, 79.84868, "P", "PPL", "LK", "Western", 648034),
    (1642911, "Jakarta", "Batavia", -6.21462, 106.84513, "P", "PPLC", "ID", "Jakarta", 8540121),
    (1701668, "Manila", "Maynila", 14.6042, 120.9822, "P", "PPLC", "PH", "Metro Manila", 1600000),
    (1835848, "Seoul", "", 37.566, 126.9784, "P", "PPLC", "KR", "Seoul", 10349312),
    (1871859, "Pyongyang", "", 39.03385, 125.75432, "P", "PPLC", "KP", "Pyongyang", 3222000),
    (1850147, "Tokyo", "", 35.6895, 139.69171, "P", "PPLC", "JP", "Tokyo", 8336599),
    (2660646, "Geneva", "Geneve", 46.20222, 6.14569, "P", "PPLC", "CH", "Geneva", 183981),
    (2988506, "Brussels", "Bruxelles", 50.85045, 4.34878, "P", "PPLC", "BE", "Brussels Capital", 1019022),
    (2761369, "Vienna", "Wien", 48.20849, 16.37208, "P", "PPLC", "AT", "Vienna", 1691468),
    (108410, "Riyadh", "Ar Riyad", 24.68773, 46.72185, "P", "PPLC", "SA", "Riyadh", 4205961),
    (276781, "Beirut", "Bayrut", 33.88894, 35.49442, "P", "PPLC", "LB", "Beirut", 1916100),
    (250441, "Amman", "", 31.95522, 35.94503, "P", "PPLC", "JO", "Amman", 1275857),
    (3530597, "Mexico City", "Ciudad de Mexico", 19.42847, -99.12766, "P", "PPLC", "MX", "Mexico City", 12294193),
    (1816670, "Beijing", "Peking", 39.9075, 116.39723, "P", "PPLC", "CN", "Beijing", 11716620),
]


def write_gazetteer() -> None:
    with open(OUT / "gazetteer.tsv", "w", encoding="utf-8") as fh:
        for gid, name, alts, lat, lon, fclass, fcode, cc, admin1, pop in GAZ_ROWS:
            cols = [str(gid), name, name, alts, str(lat), str(lon), fclass, fcode,
                    cc, "", admin1, "", "", "", str(pop), "", "0", "UTC", "2024-01-01"]
            fh.write("\t".join(cols) + "\n")


# --- riot fixture -------------------------------------------------------------------

RIOT_TEXT = ("A group of Hindu nationalists rioted against Muslim shops in Dehli "
             "last week. Shopkeepers in the area said the police were slow to "
             "respond to the unrest.")

# (question, span text or None, attribute, score); offsets computed from RIOT_TEXT
RIOT_ANSWERS = [
    ("Who engaged in the riot?", "A group of Hindu nationalists", 0.433),
    ("Who rioted?", "Hindu nationalists", 0.452),
    ("Who was the riot directed against?", "Muslim shops", 0.755),
    ("What was the target of the riot?", "Muslim shops", 0.179),
    ("Where did the riot take place?", "Dehli", 0.939),
    ("When did the riot take place?", "Dehli last week", 0.751),
    ("Who did Hindu nationalists riot against?", "A group of Hindu nationalists", 0.502),
    ("Who did A group of Hindu nationalists riot against?", "Muslim shops", 0.131),
    ("What did Hindu nationalists target in the riot?", "Muslim shops", 0.103),
    ("What did A group of Hindu nationalists target in the riot?", None, None),
    ("Who rioted against Muslim shops?", "A group of Hindu nationalists", 0.502),
    ("Who rioted against A group of Hindu nationalists?", "Muslim shops", 0.131),
    ("Which group rioted against Muslim shops?", "Muslim shops", 0.131),
    ("Which group rioted against A group of Hindu nationalists?", None, None),
]


def write_riot() -> None:
    doc = {"id": "riot-001", "date": "2023-03-15", "source": "fixture",
           "headline": "Riot in Dehli", "text": RIOT_TEXT}
    (OUT / "riot_doc.jsonl").write_text(
        json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n", encoding="utf-8")
    with open(OUT / "riot_recorded_qa.jsonl", "w", encoding="utf-8") as fh:
        for question, span, score in RIOT_ANSWERS:
            if span is None:
                answer = None
            else:
                start = RIOT_TEXT.index(span)
                answer = {"answer_text": span, "char_start": start,
                          "char_end": start + len(span), "score": score}
            fh.write(json.dumps({"context": RIOT_TEXT, "question": question,
                                 "answer": answer}, sort_keys=True,
                                ensure_ascii=False) + "\n")


# --- misspellings -------------------------------------------------------------------

MISSPELLINGS = [
    ("Barrack Obama", "Barack Obama", "Barack Obama"),
    ("Barack Obma", "Barack Obama", "Barack Obama"),
    ("Emanuel Macron", "Emmanuel Macron", "Emmanuel Macron"),
    ("Emmanuel Macrot", "Emmanuel Macron", "Emmanuel Macron"),
    ("Vladimir Putim", "Vladimir Putin", "Vladimir Putin"),
    ("Vladmir Putin", "Vladimir Putin", "Vladimir Putin"),
    ("Joe Bidan", "Joe Biden", "Joe Biden"),
    ("Jill Bidden", "Jill Biden", "Jill Biden"),
    ("Narendra Mody", "Narendra Modi", "Narendra Modi"),
    ("Imran Khann", "Imran Khan", "Imran Khan"),
    ("Recep Tayyip Erdogen", "Recep Tayyip Erdogan", "Recep Tayyip Erdogan"),
    ("Volodymyr Zelenski", "Volodymyr Zelensky", "Volodymyr Zelensky"),
    ("Hassan Rouhan", "Hassan Rouhani", "Hassan Rouhani"),
    ("Angela Merkell", "Angela Merkel", "Angela Merkel"),
    ("Boris Johnsen", "Boris Johnson", "Boris Johnson"),
    ("Justin Trudeu", "Justin Trudeau", "Justin Trudeau"),
    ("Xi Jinpin", "Xi Jinping", "Xi Jinping"),
    ("Pedro Sanchz", "Pedro Sanchez", "Pedro Sanchez"),
    ("Islamic Stat", "Islamic State", "Islamic State"),
    ("Talibann", "Taliban", "Taliban"),
    ("Al-Qaedo", "Al-Qaeda", "Al-Qaeda"),
    ("Hezbolla", "Hezbollah", "Hezbollah"),
    ("United Nation", "United Nations", "United Nations"),
    ("Europian Union", "European Union", "European Union"),
    ("Amnesty Internationel", "Amnesty International", "Amnesty International"),
    ("Humen Rights Watch", "Human Rights Watch", "Human Rights Watch"),
    ("World Healt Organization", "World Health Organization", "World Health Organization"),
    ("Pentagone", "Pentagon", "The Pentagon"),
    ("African Unio", "African Union", "African Union"),
    ("Kofi Anan", "Kofi Annan", "Kofi Annan"),
]


def write_misspellings() -> None:
    lines = ["# query\texpected_title  (each query is edit distance 1 from a "
             "title or redirect of the expected article)"]
    for query, near, expected in MISSPELLINGS:
        dist = levenshtein(query.lower(), near.lower())
        assert dist == 1, (query, near, dist)
        lines.append(f"{query}\t{expected}")
    (OUT / "misspellings.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")


# --- composite ledes ----------------------------------------------------------------

COMPOSITES = [
    "TOP STORIES: Protests continue in the capital. Trade talks stall. Floods displace thousands.",
    "NEWS SUMMARY\n• Army launches offensive in the east\n• Parliament delays budget vote\n• Fuel prices rise again",
    "HIGHLIGHTS of the day's developments around the region, compiled by our editors.",
    "WORLD BRIEFS: A roundup of international news from wire services.",
    "NEWS IN BRIEF\n• Minister resigns\n• Court upholds verdict\n• Border crossing reopens",
    "ROUNDUP: Security incidents reported across three provinces this week.",
    "DIGEST of political developments, week of March 4.",
    "IN BRIEF: The following items summarize today's main stories.",
    "TOP STORIES this hour:\n1. Ceasefire talks resume\n2. Opposition rally banned\n3. Aid convoy reaches the city",
    "ALSO IN THE NEWS: strikes, elections, and a diplomatic visit.",
    "NEWS SUMMARY for Tuesday:\n• Blast hits market\n• Currency slides\n• Team wins cup",
    "HIGHLIGHTS:\n• President visits flood zone\n• Senators spar over treaty\n• Oil exports resume",
    "WORLD BRIEFS\n• Quake shakes coastal region\n• Summit concludes\n• Journalist freed",
    "IN BRIEF\n• Tensions rise at the border\n• New cabinet sworn in\n• Port reopens",
    "ROUNDUP of overnight developments in the conflict, as reported by correspondents.",
    "DIGEST: Court rulings, cabinet changes and protest marches from across the country.",
    "NEWS IN BRIEF: a selection of short items follows.",
    "TOP STORIES\n1. General strike paralyzes transport\n2. Envoy recalled\n3. Budget approved",
    "NEWS SUMMARY\n• Rebels seize town\n• Markets rally\n• Storm nears coast",
    "HIGHLIGHTS\n• Peace deal signed\n• Prisoners exchanged\n• Sanctions extended",
]


def write_composites() -> None:
    with open(OUT / "composite_ledes.jsonl", "w", encoding="utf-8") as fh:
        for i, text in enumerate(COMPOSITES):
            fh.write(json.dumps({"id": f"composite-{i:03d}", "date": "2023-05-01",
                                 "source": "fixture", "headline": "digest",
                                 "text": text}, sort_keys=True,
                                ensure_ascii=False) + "\n")


# --- geolocation docs ---------------------------------------------------------------


def write_geo_docs() -> None:
    docs = []

    aybak_text = ("A bomb exploded near a religious school in northern Afghanistan "
                  "on Wednesday. The blast struck in Aybak, the capital of Samangan "
                  "province, residents said.")
    start = aybak_text.index("Aybak")
    docs.append({"id": "geo-000", "text": aybak_text,
                 "qa_span": {"text": "Aybak", "char_start": start,
                             "char_end": start + len("Aybak")},
                 "expected_geoname_id": 1131316})

    overlap_cases = [
        ("Protesters blocked roads in Karachi on Monday, and police in Sindh "
         "responded with tear gas near the port district of Karachi.", "Karachi", 1174872),
        ("Shelling hit residential areas of Kharkiv overnight, officials in "
         "Ukraine said, while Kyiv reported air raid alarms.", "Kharkiv", 706483),
        ("A curfew was declared in Quetta after clashes spread across "
         "Balochistan, local media in Pakistan reported.", "Quetta", 1167528),
        ("Talks between the delegations resumed in Geneva on Thursday, with "
         "mediators shuttling between hotels in Geneva.", "Geneva", 2660646),
        ("The ministers met in Brussels to discuss the blockade, while "
         "ambassadors in Vienna prepared a parallel session.", "Brussels", 2988506),
        ("Demonstrators rallied in Istanbul against the new media law, a day "
         "after similar marches in Ankara.", "Istanbul", 745044),
        ("Rebel fighters advanced toward Mosul from the north, commanders in "
         "Baghdad acknowledged on Friday.", "Mosul", 99072),
        ("An airstrike hit a convoy outside Benghazi, sources in Tripoli "
         "said.", "Benghazi", 88319),
        ("Police dispersed a rally in Minsk; activists in Warsaw condemned "
         "the arrests.", "Minsk", 625144),
    ]
    for i, (text, span_text, gid) in enumerate(overlap_cases, start=1):
        start = text.index(span_text)
        docs.append({"id": f"geo-{i:03d}", "text": text,
                     "qa_span": {"text": span_text, "char_start": start,
                                 "char_end": start + len(span_text)},
                     "expected_geoname_id": gid})

    no_overlap = [
        # QA span absent entirely
        ("Gunmen attacked a checkpoint near Peshawar late on Tuesday, wounding "
         "three officers, hospital staff said.", None),
        ("The foreign ministers of France and Germany issued a joint statement "
         "from Paris and Berlin.", None),
        # QA span present but pointing at a non-place phrase
        ("Soldiers raided a warehouse district at dawn; the army said the "
         "operation in the northern sector was over by noon.", "the northern sector"),
        ("Union leaders announced a strike at the central market, demanding "
         "back pay from the city administration.", "the central market"),
        ("Officials confirmed the attack took place near the border crossing, "
         "far from Nairobi where the briefing was held.", "the border crossing"),
        ("A protest outside the presidential palace turned violent, witnesses "
         "told reporters in Cairo.", "the presidential palace"),
        ("The committee met behind closed doors; delegates from Tehran and "
         "Riyadh did not attend the side session.", "closed doors"),
        ("Relief agencies warned that the camp on the outskirts was running "
         "out of water, aid workers in Amman said.", "the outskirts"),
        ("Hackers disrupted the railway booking system for hours, the "
         "transport ministry in Seoul said.", "the railway booking system"),
        ("The court adjourned the treason trial until next month, lawyers in "
         "Caracas told the press.", "the treason trial"),
    ]
    for j, (text, span_text) in enumerate(no_overlap, start=len(docs)):
        qa_span = None
        if span_text is not None:
            start = text.index(span_text)
            qa_span = {"text": span_text, "char_start": start,
                       "char_end": start + len(span_text)}
        docs.append({"id": f"geo-{j:03d}", "text": text, "qa_span": qa_span,
                     "expected_geoname_id": None})

    assert len(docs) == 20, len(docs)
    with open(OUT / "geo_docs.jsonl", "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")


# --- the 100-document corpus --------------------------------------------------------

CITIES = ["Kabul", "Damascus", "Aleppo", "Moscow", "Islamabad", "Karachi",
          "Lahore", "Peshawar", "Quetta", "Nairobi", "Cairo", "Tehran",
          "Baghdad", "Kyiv", "Ankara", "Istanbul", "Tripoli", "Khartoum",
          "Mogadishu", "Caracas", "Minsk", "Warsaw", "Berlin", "Madrid",
          "Rome", "Athens", "Yangon", "Colombo", "Jakarta", "Manila", "Seoul",
          "Dhaka", "Beirut", "Amman", "Riyadh"]
COUNTRY_OF = {"Kabul": "Afghan", "Damascus": "Syrian", "Aleppo": "Syrian",
              "Moscow": "Russian", "Islamabad": "Pakistani", "Karachi": "Pakistani",
              "Lahore": "Pakistani", "Peshawar": "Pakistani", "Quetta": "Pakistani",
              "Nairobi": "Kenyan", "Cairo": "Egyptian", "Tehran": "Iranian",
              "Baghdad": "Iraqi", "Kyiv": "Ukrainian", "Ankara": "Turkish",
              "Istanbul": "Turkish", "Tripoli": "Libyan", "Khartoum": "Sudanese",
              "Mogadishu": "Somali", "Caracas": "Venezuelan", "Minsk": "Belarusian",
              "Warsaw": "Polish", "Berlin": "German", "Madrid": "Spanish",
              "Rome": "Italian", "Athens": "Greek", "Yangon": "Burmese",
              "Colombo": "Sri Lankan", "Jakarta": "Indonesian", "Manila": "Filipino",
              "Seoul": "South Korean", "Dhaka": "Bangladeshi", "Beirut": "Lebanese",
              "Amman": "Jordanian", "Riyadh": "Saudi"}
WEEKDAYS = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"]
SOURCES = ["Reuters", "AP", "AFP"]

LEDE_TEMPLATES = [
    ("PROTEST",
     "Thousands of demonstrators marched through {city} on {day} in a protest "
     "against rising fuel prices. {demonym} police said the rally remained "
     "peaceful as crowds filled the main square for several hours."),
    ("PROTEST",
     "Rioters clashed with security forces in {city} on {day}, and the riot "
     "spread to nearby districts by nightfall. Witnesses said protesters "
     "burned tires and chanted slogans against the government."),
    ("CONSULT",
     "Senior {demonym} officials met a visiting delegation in {city} on {day} "
     "for talks on border security. The meeting ended with a joint pledge to "
     "continue the negotiations next month."),
    ("ASSAULT",
     "A bomb blast killed at least {n} people in {city} on {day}, officials "
     "said. The explosion struck a crowded market, and hospitals reported "
     "dozens more wounded in the attack."),
    ("COERCE",
     "{demonym} police arrested {n} opposition activists in {city} on {day}, "
     "rights groups said. The detained organizers had planned a march against "
     "the new security law."),
    ("MOBILIZE",
     "The {demonym} army deployed additional troops around {city} on {day}, "
     "and reinforcements were seen moving toward the border. Commanders said "
     "reserve units had been mobilized as a precaution."),
    ("THREATEN",
     "The {demonym} government warned on {day} that it would retaliate against "
     "any further incursions near {city}. A spokesman said the threat of new "
     "strikes remained on the table."),
    ("SANCTION",
     "A court in {city} convicted {n} journalists on {day} and sentenced them "
     "to prison terms. Press freedom groups condemned the verdict as "
     "politically motivated."),
    ("RETREAT",
     "{demonym} forces withdrew from positions near {city} on {day} under a "
     "ceasefire brokered by regional mediators. The withdrawal began at dawn, "
     "monitors said, and the truce appeared to hold."),
    ("REQUEST",
     "Aid agencies in {city} appealed for assistance on {day} as food stocks "
     "ran low. The {demonym} government urged donors to speed up deliveries "
     "and called for additional funding."),
    ("ACCUSE",
     "Opposition lawmakers in {city} accused the government on {day} of "
     "corruption in a road-building contract. Ministers rejected the "
     "allegation and called for an independent investigation."),
    ("AGREE",
     "Negotiators in {city} signed an agreement on {day} to reopen trade "
     "routes. The deal, reached after months of talks, includes a timetable "
     "for lifting tariffs on farm goods."),
    ("REJECT",
     "The {demonym} government on {day} rejected demands to release detained "
     "activists in {city}. A spokesman said the government ruled out any "
     "amnesty before the trials conclude."),
]

NEGATION_DOCS = [
    ("negation-001",
     "LONDON (Reuters) - Officials said they will not sign the treaty at this "
     "stage of the negotiations. Diplomats from both sides met Tuesday in "
     "Geneva to continue the talks on the disputed clauses."),
    ("negation-002",
     "Union leaders said the strike will not end until wages are paid. "
     "Workers marched through Warsaw on Monday in a protest against the "
     "factory closures announced last week."),
    ("negation-003",
     "The ministry said it would never accept the proposed border changes. "
     "Troops were deployed near Ankara on Friday, and reinforcements were "
     "mobilized along the frontier, commanders said."),
]

DROP_DOCS = [
    ("drop-short-001", "UPDATE 1 - headline only."),
    ("drop-short-002", "Brief fragment of a parsed story."),
    ("drop-numeric-001",
     "Closing levels: 10023 10150 9987 10001 10240 9975 10310 10280 9990 "
     "10110 10340 10460 10220 10005 9950 10440 10030 10120 10200 10330 "
     "10010 10090 10150 10075"),
    ("drop-numeric-002",
     "Scores: 101 99 87 93 110 105 98 102 96 91 88 104 100 97 95 103 108 "
     "92 90 94 106 109 86 89 111 112 85 113 84 114 83 115 82 116 81"),
    ("drop-composite-001", COMPOSITES[0] + " Compiled from wire reports filed today."),
    ("drop-composite-002", COMPOSITES[4] + " Compiled by the news desk for subscribers."),
    ("drop-financial-001",
     "Shares closed higher on the stock market Tuesday as quarterly earnings "
     "beat forecasts. The index rose 1.2 percent, led by energy stocks, and "
     "bond yields eased after the auction."),
    ("drop-crime-001",
     "A jury heard closing arguments in the murder trial of a man accused of "
     "killing a shopkeeper during a robbery. Homicide detectives testified "
     "about the stolen jewelry recovered from a pawn shop."),
    ("drop-disaster-001",
     "A magnitude 6.1 earthquake shook the coastal region early Sunday, and "
     "aftershocks continued through the morning. Authorities reported damage "
     "to buildings but no casualties from the earthquake."),
    ("drop-us-domestic-001",
     "WASHINGTON (AP) - American lawmakers demanded change from the "
     "administration on {day}, urging reform of the farm subsidy program in "
     "Washington. Officials said the demands would be reviewed."),
]


def write_corpus() -> None:
    rng = random.Random(13)
    docs = []
    serial = 0

    def add(doc_id, text, date, source="Reuters", headline=""):
        docs.append({"id": doc_id, "date": date, "source": source,
                     "headline": headline or text.split(".")[0][:60],
                     "text": text})

    # codable stories
    for i in range(68):
        cat, template = LEDE_TEMPLATES[i % len(LEDE_TEMPLATES)]
        city = CITIES[(i * 7) % len(CITIES)]
        day = WEEKDAYS[i % 7]
        source = SOURCES[i % 3]
        text = template.format(city=city, day=day, n=3 + (i % 9),
                               demonym=COUNTRY_OF[city])
        dateline = f"{city.upper()} ({source}) - "
        date = f"2023-{3 + (i % 6):02d}-{1 + (i % 27):02d}"
        serial += 1
        add(f"doc-{serial:03d}", dateline + text, date, source)

    # long-story drop case (too_long)
    serial += 1
    long_text = ("The commission's annual report reviewed decades of land "
                 "registry records in exhaustive detail. " * 150)
    add(f"doc-{serial:03d}", long_text, "2023-04-02")

    for doc_id, text in DROP_DOCS:
        add(doc_id, text.format(day="Tuesday"), "2023-04-10", "AP")
    for doc_id, text in NEGATION_DOCS:
        add(doc_id, text, "2023-04-11")

    # zero-event filler (passes filters, no category keywords)
    fillers = [
        "The national museum in {city} reopened its east wing on {day} after "
        "a two-year renovation. Curators unveiled a gallery of early maps and "
        "said visitor numbers were expected to double this season.",
        "Farmers around {city} began the harvest earlier than usual this "
        "year, agronomists said on {day}. Cooperatives expect yields slightly "
        "above the five-year average if the weather holds.",
        "A new commuter rail line linking {city}'s suburbs opened on {day}. "
        "Transport planners said the service should cut journey times by a "
        "third once the full timetable starts.",
    ]
    while len(docs) < 100:
        i = len(docs)
        city = CITIES[(i * 5) % len(CITIES)]
        day = WEEKDAYS[i % 7]
        serial += 1
        add(f"doc-{serial:03d}",
            fillers[i % len(fillers)].format(city=city, day=day),
            f"2023-{4 + (i % 5):02d}-{1 + (i % 25):02d}")

    assert len(docs) == 100, len(docs)
    rng.shuffle(docs)
    with open(OUT / "corpus_100.jsonl", "w", encoding="utf-8") as fh:
        for doc in docs:
            fh.write(json.dumps(doc, sort_keys=True, ensure_ascii=False) + "\n")


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    write_articles()
    write_gazetteer()
    write_riot()
    write_misspellings()
    write_composites()
    write_geo_docs()
    write_corpus()
    print("fixtures written to", OUT)


if __name__ == "__main__":
    main()
