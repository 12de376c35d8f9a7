"""Engine queries: entailment, consistency, rights, rule search, traces.

The pairwise-decomposition rule search is cross-checked against the
direct backtracking oracle; witness-bearing certificates are re-verified
through the public evaluators.
"""

import pytest

from socialchoice import engine
from socialchoice.axioms import (
    SD,
    SL,
    SLP,
    SP,
    SSD,
    SSP,
    SV,
    Instance,
    RightsAssignment,
    admissible_social_set,
    evaluate,
    negate,
    rights_axiom,
)
from socialchoice.certificates import parse_certificate
from socialchoice.errors import CapExceededError, InternalCheckError, PreconditionError
from socialchoice.prefs import enumerate_weak_orders
from socialchoice.profiles import Profile, ProfileSpace
from socialchoice.rules import (
    borda_rule,
    constant_rule,
    dictatorship_rule,
    satisfies_iia,
    satisfies_schema,
)

W32 = ProfileSpace(3, 2, "weak")
L32 = ProfileSpace(3, 2, "linear")


# ---------------------------------------------------------------------------
# instance entailment


def test_dictatorship_entails_pareto():
    cert = engine.instance_entails(W32, (SD,), SP)
    assert cert.verdict == "ENTAILS"
    assert dict(cert.stats)["nodes"] == "2197"


def test_pareto_does_not_entail_dictatorship():
    cert = engine.instance_entails(W32, (SP,), SD)
    assert cert.verdict == "COUNTERMODEL"
    w = cert.witnesses
    witness = Instance(w.profile, w.social)
    assert evaluate(SP, witness) and not evaluate(SD, witness)


def test_countermodel_is_the_least_instance():
    cert = engine.instance_entails(W32, (SP,), SD)
    pool = enumerate_weak_orders(3)
    expected = next(
        (pid, k)
        for pid, p in enumerate(W32.profiles())
        for k, w in enumerate(pool)
        if evaluate(SP, Instance(p, w)) and not evaluate(SD, Instance(p, w))
    )
    got = (W32.profile_id(cert.witnesses.profile), pool.index(cert.witnesses.social))
    assert got == expected


def test_identity_entailment():
    assert engine.instance_entails(W32, (SD,), SD).verdict == "ENTAILS"


def test_negation_duality():
    # premises entail Y exactly when premises plus the negation of Y
    # are unsatisfiable over the instance space
    for premises, conclusion in [((SD,), SP), ((SP,), SD), ((SSP,), SP)]:
        cert = engine.instance_entails(W32, premises, conclusion)
        pool = enumerate_weak_orders(3)
        satisfiable = any(
            all(evaluate(ax, Instance(p, w)) for ax in premises + (negate(conclusion),))
            for p in W32.profiles()
            for w in pool
        )
        assert (cert.verdict == "ENTAILS") == (not satisfiable)


def test_cut_rule_on_shipped_axioms():
    # from A,Y |- Z and A |- Y conclude A |- Z, on sampled triples
    triples = [
        ((), SD, SP),
        ((), SSP, SP),
        ((SSP,), SD, SV),
        ((SL,), SD, SP),
    ]
    for a_set, y, z in triples:
        ay_z = engine.instance_entails(L32, a_set + (y,), z).verdict == "ENTAILS"
        a_y = engine.instance_entails(L32, a_set, y).verdict == "ENTAILS"
        a_z = engine.instance_entails(L32, a_set, z).verdict == "ENTAILS"
        if ay_z and a_y:
            assert a_z


def test_instance_cap_refusal():
    with pytest.raises(CapExceededError) as err:
        engine.instance_entails(ProfileSpace(4, 3, "weak"), (SD,), SP)
    assert err.value.required == 75**3 * 75


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SCS_MAX_BUDGET", "10")
    with pytest.raises(CapExceededError):
        engine.instance_entails(W32, (SD,), SP)
    monkeypatch.setenv("SCS_MAX_BUDGET", "5000000")
    assert engine.node_budget() == 5000000


# ---------------------------------------------------------------------------
# schema consistency


def test_liberal_dictatorship_is_inconsistent():
    cert = engine.schema_consistent(L32, (SD, SL))
    assert cert.verdict == "INCONSISTENT"
    assert cert.witnesses.profile.as_string() == "a>b>c;c>b>a"
    assert admissible_social_set((SD, SL), cert.witnesses.profile) == ()


def test_liberal_vetoing_is_inconsistent():
    cert = engine.schema_consistent(L32, (SL, SV))
    assert cert.verdict == "INCONSISTENT"
    assert admissible_social_set((SL, SV), cert.witnesses.profile) == ()


def test_pareto_alone_is_consistent_with_an_assembled_rule():
    cert = engine.schema_consistent(L32, (SP,))
    assert cert.verdict == "CONSISTENT"
    rule = cert.witnesses.rules[0]
    assert satisfies_schema(rule, SP).holds


def test_inconsistency_witness_is_least():
    cert = engine.schema_consistent(L32, (SD, SL))
    pid = L32.profile_id(cert.witnesses.profile)
    for earlier in range(pid):
        assert admissible_social_set((SD, SL), L32.profile_at(earlier))


def test_inconsistency_is_monotone_under_extension():
    base = engine.schema_consistent(L32, (SD, SL))
    assert base.verdict == "INCONSISTENT"
    for extension in [(SD, SL, SP), (SD, SL, SV), (SD, SL, SSP, SP)]:
        assert engine.schema_consistent(L32, extension).verdict == "INCONSISTENT"


def test_literal_liberalism_findings_are_reported_not_assumed():
    # experimental scans; any verdict is acceptable but must re-verify
    for space in (L32, ProfileSpace(4, 2, "linear")):
        cert = engine.schema_consistent(space, (SP, SL))
        assert cert.verdict in ("CONSISTENT", "INCONSISTENT")
        ok, msg = engine.verify_certificate(cert.document())
        assert ok, msg


# ---------------------------------------------------------------------------
# rights


def test_sen_rights_assignment_is_inconsistent():
    ra = RightsAssignment.of({0: [(0, 1)], 1: [(1, 2)]})
    cert = engine.rights_consistent(L32, ra, (SP,))
    assert cert.verdict == "INCONSISTENT"
    witness = cert.witnesses.profile
    assert admissible_social_set((rights_axiom(ra), SP), witness) == ()


def test_single_right_alone_is_consistent():
    ra = RightsAssignment.of({0: [(0, 1)]})
    cert = engine.rights_consistent(L32, ra)
    assert cert.verdict == "CONSISTENT"
    rule = cert.witnesses.rules[0]
    assert satisfies_schema(rule, rights_axiom(ra)).holds


def test_rights_sweep_tabulates_all_assignments():
    rows = engine.rights_sweep(L32, (SP,))
    assert len(rows) == 6  # ordered pairs of distinct pairs over three alternatives
    seen = set()
    for assignment, cert in rows:
        seen.add(assignment.as_string())
        assert cert.verdict == "INCONSISTENT"  # Sen's paradox at every assignment
        assert admissible_social_set(
            (rights_axiom(assignment), SP), cert.witnesses.profile
        ) == ()
    assert len(seen) == 6


def test_rights_outside_space_is_an_error():
    ra = RightsAssignment.of({5: [(0, 1)]})
    with pytest.raises(PreconditionError):
        engine.rights_consistent(L32, ra)


# ---------------------------------------------------------------------------
# rule search under independence


def test_arrow_base_case_yields_exactly_the_projections():
    cert = engine.schema_entails_iia(L32, (SP,), SD, "linear")
    assert cert.verdict == "ENTAILS"
    assert cert.witnesses.ruleset_count == 2
    tables = {rule.table for rule in cert.witnesses.rules}
    assert tables == {dictatorship_rule(L32, 0).table, dictatorship_rule(L32, 1).table}


def test_decomposition_agrees_with_backtracking_oracle():
    cases = [
        ((SP,), "linear"),
        ((SP,), "weak"),
        ((), "linear"),
        ((SSP,), "linear"),
    ]
    for premises, social_range in cases:
        dec, _ = engine.iia_rules_by_decomposition(L32, premises, social_range)
        back = engine.iia_rules_by_backtracking(L32, premises, social_range)
        assert [r.table for r in dec] == [r.table for r in back]


def test_every_search_result_is_independent_and_premise_conforming():
    dec, _ = engine.iia_rules_by_decomposition(L32, (SP,), "weak")
    assert dec
    for rule in dec:
        assert satisfies_iia(rule).holds
        assert satisfies_schema(rule, SP).holds


def test_pareto_forces_a_vetoer_under_independence():
    cert = engine.schema_entails_iia(L32, (SP,), SV, "linear")
    assert cert.verdict == "ENTAILS"


def test_no_premises_leave_dictator_free_rules():
    cert = engine.schema_entails_iia(L32, (), SD, "linear")
    assert cert.verdict == "COUNTERMODEL"
    rule = cert.witnesses.rules[0]
    assert satisfies_iia(rule).holds
    assert not satisfies_schema(rule, SD).holds


def test_ssd_does_not_force_a_dictator_under_independence():
    cert = engine.schema_entails_iia(L32, (SSD,), SD, "linear")
    assert cert.verdict == "COUNTERMODEL"


def test_iia_search_cap_refusal():
    with pytest.raises(CapExceededError):
        engine.schema_entails_iia(W32, (), SD, "weak")


# ---------------------------------------------------------------------------
# dictator extraction


def test_traces_for_the_arrow_rules():
    cert = engine.schema_entails_iia(L32, (SP,), SD, "linear")
    dictators = set()
    for rule in cert.witnesses.rules:
        trace = engine.find_dictator(rule)
        assert engine.validate_trace(trace, rule)
        assert all(step.verified for step in trace.steps)
        dictators.add(trace.dictator)
    assert dictators == {0, 1}


def test_trace_for_a_dictatorship_rule_is_one_contraction():
    rule = dictatorship_rule(L32, 1)
    trace = engine.find_dictator(rule)
    assert trace.dictator == 1
    assert [s.tag for s in trace.steps] == [
        "PARETO_SEED",
        "GROUP_CONTRACTION",
        "FIELD_EXPANSION",
    ]
    assert engine.validate_trace(trace, rule)


def test_single_voter_trace_is_the_seed_only():
    space = ProfileSpace(3, 1, "linear")
    rule = dictatorship_rule(space, 0)
    trace = engine.find_dictator(rule)
    assert [s.tag for s in trace.steps] == ["PARETO_SEED"]
    assert trace.dictator == 0


def test_three_voter_trace_contracts_twice():
    space = ProfileSpace(3, 3, "linear")
    rule = dictatorship_rule(space, 2)
    trace = engine.find_dictator(rule)
    assert trace.dictator == 2
    contractions = [s for s in trace.steps if s.tag == "GROUP_CONTRACTION"]
    assert len(contractions) == 2
    assert engine.validate_trace(trace, rule)


def test_find_dictator_preconditions_name_the_failing_check():
    with pytest.raises(PreconditionError) as err:
        engine.find_dictator(borda_rule(L32))
    assert "independence" in str(err.value)
    from socialchoice.prefs import parse_ranking

    with pytest.raises(PreconditionError) as err:
        engine.find_dictator(constant_rule(L32, parse_ranking("a~b~c")))
    assert "SP schema" in str(err.value)


# ---------------------------------------------------------------------------
# battery, determinism, verification


@pytest.fixture(scope="module")
def battery():
    return engine.theorem_suite()


def test_battery_composition(battery):
    assert len(battery) == 24
    flags = {c.claim: c.flag for c in battery}
    for claim, flag in flags.items():
        number = int(claim.split()[0])
        assert flag == ("PASS" if number <= 18 else "REPORT"), claim


def test_battery_expected_verdicts(battery):
    by_number = {int(c.claim.split()[0]): c for c in battery}
    assert by_number[1].verdict == "ENTAILS"
    assert by_number[8].verdict == "COUNTERMODEL"
    assert by_number[11].verdict == "COUNTERMODEL"
    assert by_number[12].verdict == "INCONSISTENT"
    assert by_number[14].verdict == "CONSISTENT"
    assert by_number[15].verdict == "INCONSISTENT"
    assert by_number[16].verdict == "ENTAILS"
    assert by_number[17].verdict == "RULESET"
    # literal-semantics findings carry witness data whatever the verdict
    for number in (19, 20, 21, 22):
        cert = by_number[number]
        assert cert.witnesses.kind in ("profile", "rule")


def test_battery_is_deterministic(battery):
    again = engine.theorem_suite()
    assert [c.canonical_body() for c in battery] == [c.canonical_body() for c in again]


def test_every_battery_certificate_verifies(battery):
    for cert in battery:
        ok, message = engine.verify_certificate(cert.document())
        assert ok, f"{cert.claim}: {message}"


def test_certificate_round_trip(battery):
    for cert in battery:
        parsed = parse_certificate(cert.document())
        assert parsed.canonical_body() == cert.canonical_body()


def test_tampered_certificate_is_rejected():
    cert = engine.schema_consistent(L32, (SD, SL))
    doc = cert.document()
    broken = doc.replace("witness-profile: a>b>c;c>b>a", "witness-profile: a>b>c;a>b>c")
    ok, message = engine.verify_certificate(broken)
    assert not ok and "sha256" in message

    # re-seal the altered body: the witness re-check must catch it instead
    tampered = parse_certificate(doc)
    resealed = tampered.canonical_body().replace(
        "witness-profile: a>b>c;c>b>a", "witness-profile: a>b>c;a>b>c"
    )
    reparsed = parse_certificate(
        resealed
        + "body-sha256: "
        + __import__("hashlib").sha256(resealed.encode()).hexdigest()
        + "\nstats: nodes=0 wall-ms=0\n"
    )
    ok, message = engine.verify_certificate(
        reparsed.canonical_body()
        + "body-sha256: "
        + reparsed.body_hash()
        + "\nstats: nodes=0 wall-ms=0\n"
    )
    assert not ok


def test_verify_rejects_garbage():
    ok, message = engine.verify_certificate("not a certificate\n")
    assert not ok
