import datetime as dt
import random

import pytest

from eventcoder.dates import Granularity, ResolvedDate, resolve_date


def d(year, month, day):
    return dt.date(year, month, day)


def test_weekday_same_day_inclusive():
    # 2022-11-30 is a Wednesday
    out = resolve_date("Wednesday", d(2022, 11, 30))
    assert (out.date, out.granularity) == (d(2022, 11, 30), Granularity.DAY)


def test_weekday_backward():
    out = resolve_date("Monday", d(2022, 11, 30))
    assert out.date == d(2022, 11, 28)


def test_last_weekday_strictly_before():
    out = resolve_date("last Wednesday", d(2022, 11, 30))
    assert out.date == d(2022, 11, 23)


def test_explicit_year():
    out = resolve_date("in 2018", d(2022, 11, 30))
    assert (out.date, out.granularity) == (d(2018, 1, 1), Granularity.YEAR)
    out = resolve_date("in 2018", d(2023, 5, 2))
    assert out.date == d(2018, 1, 1)


def test_last_month_name():
    out = resolve_date("last November", d(2023, 3, 15))
    assert (out.date, out.granularity) == (d(2022, 11, 1), Granularity.MONTH)


def test_month_name_same_month_inclusive():
    out = resolve_date("in November", d(2022, 11, 30))
    assert out.date == d(2022, 11, 1)
    out = resolve_date("in December", d(2022, 11, 30))
    assert out.date == d(2021, 12, 1)


def test_last_week_anchors_to_monday():
    out = resolve_date("last week", d(2022, 11, 30))
    assert out.granularity is Granularity.WEEK
    assert out.date.weekday() == 0
    assert out.date == d(2022, 11, 21)


def test_embedded_tokens_first_expression_wins():
    out = resolve_date("Dehli last week", d(2023, 3, 15))
    assert out.granularity is Granularity.WEEK
    assert out.date == d(2023, 3, 6)


def test_full_date_beats_partial_at_same_position():
    out = resolve_date("November 30, 2022", d(2023, 1, 5))
    assert (out.date, out.granularity) == (d(2022, 11, 30), Granularity.DAY)


def test_month_day_without_year_resolves_backward():
    out = resolve_date("on November 30", d(2023, 1, 5))
    assert out.date == d(2022, 11, 30)
    out = resolve_date("on January 2", d(2023, 1, 5))
    assert out.date == d(2023, 1, 2)


def test_iso_date():
    out = resolve_date("2021-07-04", d(2023, 1, 5))
    assert (out.date, out.granularity) == (d(2021, 7, 4), Granularity.DAY)


def test_yesterday_today():
    assert resolve_date("yesterday", d(2023, 1, 5)).date == d(2023, 1, 4)
    assert resolve_date("today", d(2023, 1, 5)).date == d(2023, 1, 5)


def test_days_ago():
    assert resolve_date("3 days ago", d(2023, 1, 10)).date == d(2023, 1, 7)


def test_last_month_and_year():
    out = resolve_date("last month", d(2023, 1, 10))
    assert (out.date, out.granularity) == (d(2022, 12, 1), Granularity.MONTH)
    out = resolve_date("last year", d(2023, 1, 10))
    assert (out.date, out.granularity) == (d(2022, 1, 1), Granularity.YEAR)


def test_future_marker_resolves_forward():
    out = resolve_date("next week", d(2022, 11, 30))
    assert out.date > d(2022, 11, 30)
    assert out.date.weekday() == 0
    out = resolve_date("tomorrow", d(2022, 11, 30))
    assert out.date == d(2022, 12, 1)
    out = resolve_date("next Friday", d(2022, 11, 30))
    assert out.date == d(2022, 12, 2)


def test_unparseable_returns_none():
    assert resolve_date("the market district", d(2023, 1, 1)) is None
    assert resolve_date("soon", d(2023, 1, 1)) is None


def test_empty_phrase_rejected():
    with pytest.raises(ValueError):
        resolve_date("   ", d(2023, 1, 1))


def test_granularity_anchor_invariants():
    with pytest.raises(ValueError):
        ResolvedDate(d(2022, 11, 29), Granularity.WEEK, "x")  # a Tuesday
    with pytest.raises(ValueError):
        ResolvedDate(d(2022, 11, 2), Granularity.MONTH, "x")
    with pytest.raises(ValueError):
        ResolvedDate(d(2022, 2, 1), Granularity.YEAR, "x")


def test_determinism():
    for phrase in ("Wednesday", "last week", "in 2018", "last November"):
        a = resolve_date(phrase, d(2022, 11, 30))
        b = resolve_date(phrase, d(2022, 11, 30))
        assert a == b


RELATIVE_PAST_PHRASES = [
    "yesterday", "today", "last week", "last month", "last year",
    "last Monday", "last Tuesday", "last Friday", "last November",
    "last March", "Monday", "Tuesday", "Wednesday", "Thursday", "Friday",
    "Saturday", "Sunday", "{n} days ago", "{n} weeks ago", "{n} months ago",
]


def test_relative_past_never_after_publication():
    rng = random.Random(2024)
    start = d(2000, 1, 1).toordinal()
    end = d(2030, 12, 31).toordinal()
    for _ in range(2000):
        pub = dt.date.fromordinal(rng.randrange(start, end))
        phrase = rng.choice(RELATIVE_PAST_PHRASES).format(n=rng.randint(1, 90))
        out = resolve_date(phrase, pub)
        assert out is not None, phrase
        assert out.date <= pub, (phrase, pub, out)


def test_weekday_distance_at_most_six():
    rng = random.Random(7)
    weekdays = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday",
                "Saturday", "Sunday"]
    for _ in range(500):
        pub = dt.date.fromordinal(rng.randrange(d(2010, 1, 1).toordinal(),
                                                d(2030, 1, 1).toordinal()))
        out = resolve_date(rng.choice(weekdays), pub)
        assert 0 <= (pub - out.date).days <= 6


def test_last_night_is_previous_day():
    out = resolve_date("last night", d(2023, 1, 5))
    assert (out.date, out.granularity) == (d(2023, 1, 4), Granularity.DAY)
    out = resolve_date("overnight", d(2023, 1, 5))
    assert out.date == d(2023, 1, 4)
