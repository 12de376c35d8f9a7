"""Rule constructors, schema and independence checks, rule files."""

import pytest

from socialchoice.axioms import SD, SL, SP, SSD, SSP, SV, Instance, atom, evaluate
from socialchoice.errors import ParseError
from socialchoice.prefs import parse_ranking, strictly
from socialchoice.profiles import Profile, ProfileSpace, profiles_agree_on_pair
from socialchoice.rules import (
    AggregationRule,
    borda_rule,
    classify,
    constant_rule,
    dictatorship_rule,
    pairwise_majority_raw,
    parse_rule,
    rule_to_text,
    satisfies_iia,
    satisfies_schema,
    save_rule,
    load_rule,
    uniform_dictator,
)

L32 = ProfileSpace(3, 2, "linear")
W32 = ProfileSpace(3, 2, "weak")


def borda_scores_oracle(profile):
    """Independent tally: one point per strictly beaten alternative."""
    m = profile.m
    return [
        sum(1 for o in profile.orders for y in range(m) if strictly(o, x, y))
        for x in range(m)
    ]


# ---------------------------------------------------------------------------
# constructors


def test_dictatorship_projects_its_voter():
    rule = dictatorship_rule(L32, 0)
    assert rule.for_profile(Profile.from_string("a>b>c;c>b>a")).ranking() == "a>b>c"
    rule2 = dictatorship_rule(L32, 1)
    assert rule2.for_profile(Profile.from_string("a>b>c;c>b>a")).ranking() == "c>b>a"


def test_dictatorship_satisfies_sd_sp_and_iia():
    for voter in (0, 1):
        rule = dictatorship_rule(L32, voter)
        assert satisfies_schema(rule, SD).holds
        assert satisfies_schema(rule, SP).holds
        assert satisfies_iia(rule).holds


def test_pairwise_majority_condorcet_cycle():
    space = ProfileSpace(3, 3, "linear")
    raw = pairwise_majority_raw(space)
    cycle = Profile.from_string("a>b>c;b>c>a;c>a>b")
    r = raw[space.profile_id(cycle)]
    assert not r.is_weak_order()
    assert strictly(r, 0, 1) and strictly(r, 1, 2) and strictly(r, 2, 0)


def test_pairwise_majority_on_unanimity_and_opposition():
    raw = pairwise_majority_raw(L32)
    for pid, profile in enumerate(L32.profiles()):
        if profile.orders[0] == profile.orders[1]:
            assert raw[pid].bits == profile.orders[0].bits
            assert raw[pid].is_weak_order()
    opposite = L32.profile_id(Profile.from_string("a>b>c;c>b>a"))
    assert raw[opposite].bits == (True,) * 9


def test_borda_examples():
    rule = borda_rule(L32)
    unanimous = Profile.from_string("a>b>c;a>b>c")
    assert rule.for_profile(unanimous) == unanimous.orders[0]
    split = Profile.from_string("a>b>c;b>a>c")
    assert borda_scores_oracle(split) == [3, 3, 0]
    assert rule.for_profile(split).ranking() == "a~b>c"


def test_borda_satisfies_sp_everywhere():
    assert satisfies_schema(borda_rule(L32), SP).holds


def test_borda_violates_iia_with_a_real_witness():
    verdict = satisfies_iia(borda_rule(L32))
    assert not verdict.holds
    p1, p2, x, y = verdict.witness
    prof1, prof2 = L32.profile_at(p1), L32.profile_at(p2)
    assert profiles_agree_on_pair(prof1, prof2, x, y)
    rule = borda_rule(L32)
    s1, s2 = rule.social_at(p1), rule.social_at(p2)
    assert (strictly(s1, x, y), strictly(s1, y, x)) != (strictly(s2, x, y), strictly(s2, y, x))


def test_constant_rule_fails_sp_at_the_first_unanimous_profile():
    rule = constant_rule(L32, parse_ranking("a~b~c"))
    verdict = satisfies_schema(rule, SP)
    assert not verdict.holds and verdict.failing_id == 0

    rule_weak = constant_rule(W32, parse_ranking("a~b~c"))
    verdict_weak = satisfies_schema(rule_weak, SP)
    # oracle: least profile id carrying a unanimous strict pair
    expected = next(
        pid
        for pid, p in enumerate(W32.profiles())
        if not evaluate(SP, Instance(p, parse_ranking("a~b~c")))
    )
    assert verdict_weak.failing_id == expected


# ---------------------------------------------------------------------------
# classification


def test_classify_dictatorship():
    c = classify(dictatorship_rule(L32, 0))
    assert c.uniform_dictator == 0
    assert c.per_profile_dictators
    assert c.satisfies_iia
    assert dict(c.schema_verdicts)["SP"]


def test_classify_borda():
    c = classify(borda_rule(L32))
    assert c.uniform_dictator is None
    assert not c.satisfies_iia
    assert dict(c.schema_verdicts)["SP"]


def test_classify_constant_indifference():
    c = classify(constant_rule(L32, parse_ranking("a~b~c")))
    verdicts = dict(c.schema_verdicts)
    assert not verdicts["SP"]
    # a never-reversing social order leaves every tie-free voter unvetoed
    assert verdicts["SV"]
    assert c.uniform_dictator is None


def test_uniform_dictator_implies_per_profile_dictators():
    for rule in (dictatorship_rule(L32, 0), dictatorship_rule(L32, 1)):
        c = classify(rule)
        assert c.uniform_dictator is not None
        assert c.per_profile_dictators


def test_iia_verdict_true_has_no_witness():
    v = satisfies_iia(dictatorship_rule(L32, 1))
    assert v.holds and v.witness is None


# ---------------------------------------------------------------------------
# rule files


def test_rule_file_round_trip(tmp_path):
    rule = dictatorship_rule(L32, 0)
    path = tmp_path / "d1.rule"
    save_rule(rule, path)
    again = load_rule(path)
    assert again == rule
    assert again.name == rule.name


def test_rule_text_is_stable():
    text = rule_to_text(dictatorship_rule(L32, 0))
    lines = text.splitlines()
    assert lines[:4] == ["alts: 3", "voters: 2", "class: linear",
                         "name: dictatorship(voter=1)"]
    assert lines[4] == "a>b>c;a>b>c -> a>b>c"
    assert len(lines) == 4 + 36
    assert parse_rule(text) == dictatorship_rule(L32, 0)


def test_truncated_table_names_the_missing_profile():
    text = rule_to_text(dictatorship_rule(L32, 0))
    truncated = "\n".join(text.splitlines()[:20]) + "\n"
    with pytest.raises(ParseError) as err:
        parse_rule(truncated)
    assert "missing profile id 16" in str(err.value)


def test_unknown_alternative_reports_its_line():
    text = rule_to_text(dictatorship_rule(L32, 0))
    lines = text.splitlines()
    lines[7] = lines[7].replace(" -> a>b>c", " -> a>b>z")
    with pytest.raises(ParseError) as err:
        parse_rule("\n".join(lines) + "\n")
    assert "line 8" in str(err.value)


def test_out_of_order_table_is_rejected():
    text = rule_to_text(dictatorship_rule(L32, 0))
    lines = text.splitlines()
    lines[4], lines[5] = lines[5], lines[4]
    with pytest.raises(ParseError):
        parse_rule("\n".join(lines) + "\n")


def test_trailing_lines_are_rejected():
    text = rule_to_text(dictatorship_rule(L32, 0))
    with pytest.raises(ParseError):
        parse_rule(text + "a>b>c;a>b>c -> a>b>c\n")


def test_rule_table_must_be_total():
    with pytest.raises(ValueError):
        AggregationRule(L32, (parse_ranking("a>b>c"),) * 35)
