import datetime as dt
from importlib import resources

import pytest

from eventcoder.actors import (ActorCode, AgentFileError, AgentMatcher, Basis,
                               CountryTable, code_actor, load_agent_file,
                               role_for_entity, split_country, trim_residual)
from eventcoder.backends import cosine
from eventcoder.entity import resolve_entity
from eventcoder.model import Span


@pytest.fixture(scope="module")
def country_table() -> CountryTable:
    text = (resources.files("eventcoder") / "data" / "countries.yaml").read_text()
    return CountryTable.from_yaml(text)


@pytest.fixture(scope="module")
def agents(embedder) -> AgentMatcher:
    text = (resources.files("eventcoder") / "data" / "agents.txt").read_text()
    return AgentMatcher(load_agent_file(text), embedder)


# --- agent file ------------------------------------------------------------------


def test_agent_file_parses_reference_entries():
    entries = load_agent_file(
        "VILLAGE [~CVL]\n"
        "DEPARTMENT_OF_AGRICULTURE [~GOVAGR]\n"
        "DEFENSE_MINISTER [~GOVMIL]\n"
        "REBEL_LEADER [~REB]\n"
        "INTELLIGENCE_SERVICE [~SPY]\n")
    by_pattern = {e.pattern: e.code for e in entries}
    assert by_pattern["defense minister"] == "GOVMIL"
    assert by_pattern["intelligence service"] == "SPY"
    assert by_pattern["village"] == "CVL"


def test_agent_file_comments_and_blanks():
    entries = load_agent_file("# header\n\nREGIME [~GOV]  # trailing\n")
    assert len(entries) == 1 and entries[0].code == "GOV"


def test_agent_file_malformed_line_reports_number():
    with pytest.raises(AgentFileError, match="line 2"):
        load_agent_file("REGIME [~GOV]\nBADLINE\n")


def test_agent_file_duplicate_pattern_rejected():
    with pytest.raises(AgentFileError, match="duplicate"):
        load_agent_file("REGIME [~GOV]\nregime [~OPP]\n")


def test_shipped_agent_file_size(agents):
    # drop-in adaptation of the legacy list: around 2,000 entries
    assert 1800 <= len(agents.entries) <= 2600


# --- country splitting ---------------------------------------------------------------


def test_split_country_demonym(country_table):
    assert split_country("Syrian civilians", country_table) == ("SYR", "civilians")


def test_split_country_capital_alias(country_table):
    assert split_country("Damascus regime", country_table) == ("SYR", "regime")


def test_split_country_no_term(country_table):
    code, residual = split_country("Pentagon officials", country_table)
    assert code is None and residual == "Pentagon officials"


def test_split_country_multi_token_name(country_table):
    code, residual = split_country("United States officials", country_table)
    assert code == "USA" and residual == "officials"


def test_split_country_removes_at_most_one(country_table):
    code, residual = split_country("Syrian and Iraqi fighters", country_table)
    assert code == "SYR"
    assert residual == "and iraqi fighters"  # second term untouched, order kept


def test_split_country_preserves_token_order(country_table):
    _, residual = split_country("senior Afghan border officials", country_table)
    assert residual == "senior border officials"


# --- role extraction ------------------------------------------------------------------


def test_role_for_entity_office_window(entity_index):
    obama = entity_index.get("Barack Obama")
    role, basis = role_for_entity(obama, dt.date(2012, 6, 1))
    assert role == "President of the United States"
    assert basis is Basis.KB_OFFICE


def test_role_for_entity_expired_office_falls_to_summary(entity_index):
    obama = entity_index.get("Barack Obama")
    role, basis = role_for_entity(obama, dt.date(2019, 6, 1))
    assert basis is Basis.KB_SUMMARY
    assert "politician" in role


def test_role_for_entity_summary_predicate(entity_index):
    pentagon = entity_index.get("The Pentagon")
    role, basis = role_for_entity(pentagon, dt.date(2020, 1, 1))
    assert basis is Basis.KB_SUMMARY
    assert role.startswith("military headquarters")


def test_role_for_entity_infobox_type_fallback():
    from eventcoder.kb import KBArticle

    art = KBArticle(title="X Group", infobox={"type": "Militant group"})
    role, basis = role_for_entity(art, dt.date(2020, 1, 1))
    assert (role, basis) == ("Militant group", Basis.KB_INFOBOX_TYPE)


def test_role_for_entity_intro_fallback_and_empty():
    from eventcoder.kb import KBArticle

    art = KBArticle(title="Y", intro_paragraph="Y is a brotherhood of scribes. More.")
    role, basis = role_for_entity(art, dt.date(2020, 1, 1))
    assert basis is Basis.KB_INTRO and "brotherhood" in role

    empty = KBArticle(title="Z")
    role, basis = role_for_entity(empty, dt.date(2020, 1, 1))
    assert role == ""


# --- actor coding ----------------------------------------------------------------------


def test_code_actor_generic_syr_cvl(agents, country_table):
    out = code_actor(Span("Syrian civilians"), None, dt.date(2023, 1, 1),
                     agents, country_table)
    assert (out.country, out.category) == ("SYR", "CVL")
    assert out.basis is Basis.GENERIC
    assert out.as_text() == "SYR CVL"


def test_code_actor_damascus_regime(agents, country_table):
    out = code_actor(Span("Damascus regime"), None, dt.date(2023, 1, 1),
                     agents, country_table)
    assert out.as_text() == "SYR GOV"


def test_code_actor_pentagon_officials_via_kb(entity_index, agents, country_table, embedder):
    resolved = resolve_entity(Span("Pentagon"), entity_index, embedder)
    assert resolved.article_title == "The Pentagon"
    out = code_actor(Span("Pentagon officials"), resolved, dt.date(2023, 1, 1),
                     agents, country_table)
    assert (out.country, out.category) == ("USA", "MIL")


def test_code_actor_president_obama_by_date(entity_index, agents, country_table, embedder):
    resolved = resolve_entity(Span("President Obama"), entity_index, embedder)
    in_office = code_actor(Span("President Obama"), resolved, dt.date(2012, 6, 1),
                           agents, country_table)
    assert (in_office.country, in_office.category) == ("USA", "GOV")
    assert in_office.basis is Basis.KB_OFFICE

    after = code_actor(Span("President Obama"), resolved, dt.date(2019, 6, 1),
                       agents, country_table)
    assert after.basis is not Basis.KB_OFFICE


def test_code_actor_spelling_variant_matches_by_similarity(embedder, country_table):
    # a reduced agent file without the British spelling: similarity, not an
    # exact pattern hit, must carry the match over the threshold
    matcher = AgentMatcher(load_agent_file("DEFENSE_MINISTER [~GOVMIL]\n"
                                           "REBEL_LEADER [~REB]\n"), embedder)
    va, vb = embedder.embed(["defence minister", "defense minister"])
    assert cosine(va, vb) > 0.5
    out = code_actor(Span("Defence Minister"), None, dt.date(2023, 1, 1),
                     matcher, country_table)
    assert out.category == "GOVMIL"
    assert matcher.exact("defence minister") is None


def test_code_actor_exact_pattern_ignores_threshold(agents, country_table):
    out = code_actor(Span("civilians"), None, dt.date(2023, 1, 1), agents,
                     country_table, threshold=1.1)
    assert out.category == "CVL"


def test_code_actor_uncoded_when_nothing_matches(agents, country_table):
    out = code_actor(Span("zxqv warbler"), None, dt.date(2023, 1, 1),
                     agents, country_table, threshold=0.99)
    assert out.basis is Basis.UNCODED
    assert out.as_text() == "---"


def test_code_actor_country_only(agents, country_table):
    out = code_actor(Span("Syria"), None, dt.date(2023, 1, 1), agents,
                     country_table, threshold=0.99)
    assert out.country == "SYR" and out.category == ""
    assert out.basis is Basis.GENERIC


def test_code_actor_deterministic_ties_break_by_file_order(embedder, country_table):
    matcher = AgentMatcher(load_agent_file("ALPHA_UNIT [~MIL]\nALPHA_UNIT_X [~REB]\n"),
                           embedder)
    first = code_actor(Span("alpha unit"), None, dt.date(2023, 1, 1), matcher,
                       country_table)
    assert first.category == "MIL"


def test_code_actor_embedder_failure_uncoded(country_table, embedder):
    class Broken:
        def embed(self, texts):
            raise RuntimeError("offline")

    matcher = AgentMatcher(load_agent_file("REGIME [~GOV]\n"), embedder)
    matcher.embedder = Broken()
    out = code_actor(Span("riot squads"), None, dt.date(2023, 1, 1), matcher,
                     country_table)
    assert out.basis is Basis.UNCODED


def test_trim_residual_edges_only():
    assert trim_residual("the of president of the") == "president"
    assert trim_residual("president of the republic") == "president of the republic"


def test_actor_code_validation():
    with pytest.raises(ValueError):
        ActorCode(country="", category="", basis=Basis.GENERIC)
