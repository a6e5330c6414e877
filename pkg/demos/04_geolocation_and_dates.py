#!/usr/bin/env python3
"""Toponym resolution with QA-span overlap, and backward date resolution.

    python demos/04_geolocation_and_dates.py
"""

import datetime as dt
from pathlib import Path

from eventcoder.dates import resolve_date
from eventcoder.geo import (GazetteerMentionAnnotator, extract_place_mentions,
                            resolve_location, select_event_location)
from eventcoder.kb import Gazetteer
from eventcoder.model import Span

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

STORY = ("A bomb exploded near a religious school in northern Afghanistan on "
         "Wednesday. The blast struck in Aybak, the capital of Samangan "
         "province, residents said.")


def main():
    gaz, stats = Gazetteer.from_path(FIXTURES / "gazetteer.tsv")
    print(f"gazetteer: {stats.indexed} places")

    annotator = GazetteerMentionAnnotator(gaz)
    mentions = extract_place_mentions(STORY, annotator)
    print("\nplace mentions:", [m.text for m in mentions])

    resolved = [resolve_location(m, mentions, gaz) for m in mentions]
    print("\n--- candidate ranking (per mention) ---")
    for r in resolved:
        if r.entry is None:
            print(f"  {r.mention.text!r}: unresolved")
            continue
        parts = ", ".join(f"{k}={v:.3f}" for k, v in r.feature_breakdown.items())
        print(f"  {r.mention.text!r} -> {r.entry.name} ({r.entry.country_code}, "
              f"{r.entry.admin1}) score={r.score:.3f} [{parts}]")

    # the QA model said the event happened at "Aybak"; only the overlapping
    # mention may become the event location
    qa_span = Span("Aybak", STORY.index("Aybak"), STORY.index("Aybak") + 5)
    event_loc = select_event_location(resolved, qa_span)
    print(f"\nevent location via QA-span overlap: {event_loc.entry.name} "
          f"(admin1 {event_loc.entry.admin1}, geoname {event_loc.entry.geoname_id})")

    print("\n--- date resolution, backward from publication ---")
    pub = dt.date(2022, 11, 30)
    for phrase in ["Wednesday", "last week", "last November", "in 2018",
                   "Dehli last week", "3 days ago"]:
        out = resolve_date(phrase, pub)
        print(f"  {phrase!r:<18} -> {out.date} ({out.granularity.value})")


if __name__ == "__main__":
    main()
