"""Date-expression resolution against the publication date.

News reports the past: relative expressions resolve backward from the
publication date unless an explicit future marker ("next", "tomorrow") is
present.  QA date spans often drag along neighboring tokens ("Dehli last
week"), so resolution scans the phrase and takes its first date expression.
"""

from __future__ import annotations

import datetime as dt
import re
from dataclasses import dataclass
from enum import Enum


class Granularity(Enum):
    DAY = "day"
    WEEK = "week"
    MONTH = "month"
    YEAR = "year"


@dataclass(frozen=True)
class ResolvedDate:
    """A resolved calendar date at a stated precision.

    Week-granularity dates are anchored to the Monday of the resolved week,
    month to the first of the month, year to January 1, so downstream
    aggregation can trust the anchor.
    """

    date: dt.date
    granularity: Granularity
    raw: str

    def __post_init__(self) -> None:
        if self.granularity is Granularity.WEEK and self.date.weekday() != 0:
            raise ValueError("week-granularity dates anchor to Monday")
        if self.granularity is Granularity.MONTH and self.date.day != 1:
            raise ValueError("month-granularity dates anchor to the first")
        if self.granularity is Granularity.YEAR and (self.date.month, self.date.day) != (1, 1):
            raise ValueError("year-granularity dates anchor to January 1")


_WEEKDAYS = {
    "monday": 0, "tuesday": 1, "wednesday": 2, "thursday": 3,
    "friday": 4, "saturday": 5, "sunday": 6,
}
_MONTHS = {
    "january": 1, "february": 2, "march": 3, "april": 4, "may": 5, "june": 6,
    "july": 7, "august": 8, "september": 9, "october": 10, "november": 11,
    "december": 12,
}
_WEEKDAY_ALT = "|".join(_WEEKDAYS)
_MONTH_ALT = "|".join(_MONTHS)


def _monday_of(day: dt.date) -> dt.date:
    return day - dt.timedelta(days=day.weekday())


def _clamp_day(year: int, month: int, day: int) -> dt.date:
    while True:
        try:
            return dt.date(year, month, day)
        except ValueError:
            day -= 1
            if day < 1:
                raise


def resolve_date(phrase: str, publication_date: dt.date) -> ResolvedDate | None:
    """Resolve the first date expression in ``phrase``; None if there is none.

    Weekday names include the publication day itself (ledes routinely name
    the publication weekday); "last <weekday>" is strictly before it.
    """
    if not phrase or not phrase.strip():
        raise ValueError("phrase must be nonempty")
    matches: list[tuple[int, int, ResolvedDate]] = []
    for priority, (pattern, handler) in enumerate(_RULES):
        m = pattern.search(phrase)
        if not m:
            continue
        resolved = handler(m, publication_date)
        if resolved is not None:
            matches.append((m.start(), priority, resolved))
    if not matches:
        return None
    matches.sort(key=lambda t: (t[0], t[1]))
    return matches[0][2]


# --- handlers; each returns ResolvedDate | None -----------------------------------


def _h_iso(m, pub):
    try:
        day = dt.date(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    except ValueError:
        return None
    return ResolvedDate(day, Granularity.DAY, m.group(0))


def _h_month_day_year(m, pub):
    month = _MONTHS[m.group("month").lower()]
    try:
        day = dt.date(int(m.group("year")), month, int(m.group("day")))
    except ValueError:
        return None
    return ResolvedDate(day, Granularity.DAY, m.group(0))


def _h_month_year(m, pub):
    month = _MONTHS[m.group("month").lower()]
    return ResolvedDate(dt.date(int(m.group("year")), month, 1),
                        Granularity.MONTH, m.group(0))


def _h_month_day(m, pub):
    month = _MONTHS[m.group("month").lower()]
    day_no = int(m.group("day"))
    if not 1 <= day_no <= 31:
        return None
    year = pub.year
    try:
        candidate = dt.date(year, month, day_no)
    except ValueError:
        return None
    if candidate > pub:
        try:
            candidate = dt.date(year - 1, month, day_no)
        except ValueError:
            return None
    return ResolvedDate(candidate, Granularity.DAY, m.group(0))


def _h_last_month_name(m, pub):
    month = _MONTHS[m.group("month").lower()]
    year = pub.year if month < pub.month else pub.year - 1
    return ResolvedDate(dt.date(year, month, 1), Granularity.MONTH, m.group(0))


def _h_month_name(m, pub):
    month = _MONTHS[m.group("month").lower()]
    year = pub.year if month <= pub.month else pub.year - 1
    return ResolvedDate(dt.date(year, month, 1), Granularity.MONTH, m.group(0))


def _h_last_week(m, pub):
    return ResolvedDate(_monday_of(pub - dt.timedelta(days=7)),
                        Granularity.WEEK, m.group(0))


def _h_this_week(m, pub):
    return ResolvedDate(_monday_of(pub), Granularity.WEEK, m.group(0))


def _h_next_week(m, pub):
    return ResolvedDate(_monday_of(pub + dt.timedelta(days=7)),
                        Granularity.WEEK, m.group(0))


def _h_weeks_ago(m, pub):
    n = int(m.group("n"))
    return ResolvedDate(_monday_of(pub - dt.timedelta(days=7 * n)),
                        Granularity.WEEK, m.group(0))


def _h_last_weekday(m, pub):
    target = _WEEKDAYS[m.group("weekday").lower()]
    delta = (pub.weekday() - target) % 7
    if delta == 0:
        delta = 7
    return ResolvedDate(pub - dt.timedelta(days=delta), Granularity.DAY, m.group(0))


def _h_next_weekday(m, pub):
    target = _WEEKDAYS[m.group("weekday").lower()]
    delta = (target - pub.weekday()) % 7
    if delta == 0:
        delta = 7
    return ResolvedDate(pub + dt.timedelta(days=delta), Granularity.DAY, m.group(0))


def _h_weekday(m, pub):
    target = _WEEKDAYS[m.group("weekday").lower()]
    delta = (pub.weekday() - target) % 7  # 0 keeps the publication day itself
    return ResolvedDate(pub - dt.timedelta(days=delta), Granularity.DAY, m.group(0))


def _h_yesterday(m, pub):
    return ResolvedDate(pub - dt.timedelta(days=1), Granularity.DAY, m.group(0))


def _h_today(m, pub):
    return ResolvedDate(pub, Granularity.DAY, m.group(0))


def _h_tomorrow(m, pub):
    return ResolvedDate(pub + dt.timedelta(days=1), Granularity.DAY, m.group(0))


def _h_days_ago(m, pub):
    return ResolvedDate(pub - dt.timedelta(days=int(m.group("n"))),
                        Granularity.DAY, m.group(0))


def _h_last_month(m, pub):
    year, month = (pub.year, pub.month - 1) if pub.month > 1 else (pub.year - 1, 12)
    return ResolvedDate(dt.date(year, month, 1), Granularity.MONTH, m.group(0))


def _h_this_month(m, pub):
    return ResolvedDate(dt.date(pub.year, pub.month, 1), Granularity.MONTH, m.group(0))


def _h_months_ago(m, pub):
    n = int(m.group("n"))
    month = pub.month - n
    year = pub.year
    while month < 1:
        month += 12
        year -= 1
    return ResolvedDate(dt.date(year, month, 1), Granularity.MONTH, m.group(0))


def _h_last_year(m, pub):
    return ResolvedDate(dt.date(pub.year - 1, 1, 1), Granularity.YEAR, m.group(0))


def _h_this_year(m, pub):
    return ResolvedDate(dt.date(pub.year, 1, 1), Granularity.YEAR, m.group(0))


def _h_years_ago(m, pub):
    return ResolvedDate(dt.date(pub.year - int(m.group("n")), 1, 1),
                        Granularity.YEAR, m.group(0))


def _h_year(m, pub):
    return ResolvedDate(dt.date(int(m.group("year")), 1, 1),
                        Granularity.YEAR, m.group(0))


def _rx(pattern: str) -> re.Pattern:
    return re.compile(pattern, re.IGNORECASE)


# Order matters only for matches at the same phrase position: more specific
# first.  Resolution picks the earliest-starting match.
_RULES: list[tuple[re.Pattern, object]] = [
    (_rx(r"\b(\d{4})-(\d{2})-(\d{2})\b"), _h_iso),
    (_rx(rf"\b(?P<month>{_MONTH_ALT})\s+(?P<day>\d{{1,2}})(?:st|nd|rd|th)?,?\s+(?P<year>\d{{4}})\b"),
     _h_month_day_year),
    (_rx(rf"\b(?P<day>\d{{1,2}})(?:st|nd|rd|th)?\s+(?P<month>{_MONTH_ALT}),?\s+(?P<year>\d{{4}})\b"),
     _h_month_day_year),
    (_rx(rf"\b(?P<month>{_MONTH_ALT})\s+(?P<year>\d{{4}})\b"), _h_month_year),
    (_rx(rf"\b(?P<month>{_MONTH_ALT})\s+(?P<day>\d{{1,2}})(?:st|nd|rd|th)?\b"), _h_month_day),
    (_rx(rf"\b(?P<day>\d{{1,2}})(?:st|nd|rd|th)?\s+(?P<month>{_MONTH_ALT})\b"), _h_month_day),
    (_rx(rf"\blast\s+(?P<month>{_MONTH_ALT})\b"), _h_last_month_name),
    (_rx(rf"\blast\s+(?P<weekday>{_WEEKDAY_ALT})\b"), _h_last_weekday),
    (_rx(rf"\bnext\s+(?P<weekday>{_WEEKDAY_ALT})\b"), _h_next_weekday),
    (_rx(r"\blast\s+week\b"), _h_last_week),
    (_rx(r"\blast\s+night\b|\bovernight\b"), _h_yesterday),
    (_rx(r"\bthis\s+week\b"), _h_this_week),
    (_rx(r"\bnext\s+week\b"), _h_next_week),
    (_rx(r"\blast\s+month\b"), _h_last_month),
    (_rx(r"\bthis\s+month\b"), _h_this_month),
    (_rx(r"\blast\s+year\b"), _h_last_year),
    (_rx(r"\bthis\s+year\b"), _h_this_year),
    (_rx(r"\byesterday\b"), _h_yesterday),
    (_rx(r"\btoday\b|\btonight\b"), _h_today),
    (_rx(r"\btomorrow\b"), _h_tomorrow),
    (_rx(r"\b(?P<n>\d{1,3})\s+days?\s+ago\b"), _h_days_ago),
    (_rx(r"\b(?P<n>\d{1,2})\s+weeks?\s+ago\b"), _h_weeks_ago),
    (_rx(r"\ba\s+week\s+ago\b"), _h_last_week),
    (_rx(r"\b(?P<n>\d{1,2})\s+months?\s+ago\b"), _h_months_ago),
    (_rx(r"\b(?P<n>\d{1,2})\s+years?\s+ago\b"), _h_years_ago),
    (_rx(rf"\b(?P<weekday>{_WEEKDAY_ALT})\b"), _h_weekday),
    (_rx(rf"\b(?P<month>{_MONTH_ALT})\b"), _h_month_name),
    (_rx(r"\b(?:in\s+)?(?P<year>(?:19|20)\d{2})\b"), _h_year),
]
