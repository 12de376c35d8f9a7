"""Command-line behavior: outputs, files, exit codes."""

import pytest

from socialchoice.cli import run
from socialchoice.certificates import parse_certificate
from socialchoice.profiles import ProfileSpace
from socialchoice.rules import dictatorship_rule, save_rule


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_weak_orders(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--alts", "3", "--class", "weak")
    lines = out.splitlines()
    assert code == 0
    assert len(lines) == 13
    assert lines[0] == "a~b~c"
    assert len(set(lines)) == 13


def test_enumerate_linear_orders(capsys):
    code, out, _ = invoke(capsys, "enumerate", "--alts", "3", "--class", "linear")
    assert code == 0
    assert out.splitlines()[0] == "a>b>c"
    assert len(out.splitlines()) == 6


def test_eval_reports_the_verdict(capsys):
    code, out, _ = invoke(
        capsys, "eval", "--axiom", "SD", "--profile", "a>b>c;c>b>a", "--social", "a>b>c"
    )
    assert code == 0 and out.strip() == "SD: true"
    code, out, _ = invoke(
        capsys, "eval", "--axiom", "SL", "--profile", "a>b>c;c>b>a", "--social", "a>b>c"
    )
    assert code == 0 and out.strip() == "SL: false"


def test_entails_instance_certificate(capsys):
    code, out, _ = invoke(
        capsys,
        "entails", "--level", "instance", "--alts", "3", "--voters", "2",
        "--class", "weak", "--premises", "SD", "--conclusion", "SP",
    )
    assert code == 0
    assert "verdict: ENTAILS" in out
    assert parse_certificate(out).verdict == "ENTAILS"


def test_consistent_reports_the_witness(capsys):
    code, out, _ = invoke(
        capsys,
        "consistent", "--alts", "3", "--voters", "2", "--class", "linear",
        "--axioms", "SD,SL",
    )
    assert code == 0
    assert "verdict: INCONSISTENT" in out
    assert "witness-profile: a>b>c;c>b>a" in out


def test_rights_subcommand(capsys):
    code, out, _ = invoke(
        capsys,
        "rights", "--assign", "1:{a,b};2:{b,c}", "--with", "SP",
        "--alts", "3", "--voters", "2", "--class", "linear",
    )
    assert code == 0
    assert "verdict: INCONSISTENT" in out


def test_arrow_subcommand(capsys):
    code, out, _ = invoke(
        capsys,
        "arrow", "--alts", "3", "--voters", "2", "--individual", "linear",
        "--social", "linear", "--axioms", "SP", "--iia",
    )
    assert code == 0
    assert "verdict: ENTAILS" in out
    assert "ruleset-count: 2" in out


def test_dictator_subcommand(tmp_path, capsys):
    path = tmp_path / "d2.rule"
    save_rule(dictatorship_rule(ProfileSpace(3, 2, "linear"), 1), path)
    code, out, _ = invoke(capsys, "dictator", "--rule", str(path))
    assert code == 0
    assert "dictator: 2" in out
    assert "tag=PARETO_SEED" in out


def test_out_flag_writes_the_document(tmp_path, capsys):
    target = tmp_path / "q.cert"
    code, out, _ = invoke(
        capsys,
        "consistent", "--alts", "3", "--voters", "2", "--class", "linear",
        "--axioms", "SP", "--out", str(target),
    )
    assert code == 0 and out == ""
    assert "verdict: CONSISTENT" in target.read_text()


def test_battery_writes_verifiable_certificates(tmp_path, capsys):
    out_dir = tmp_path / "certs"
    code, out, _ = invoke(capsys, "battery", "--out-dir", str(out_dir))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 24
    assert lines[0] == "[PASS] 01 dictatorship-entails-pareto: ENTAILS"
    files = sorted(out_dir.glob("*.cert"))
    assert len(files) == 24
    for path in files[:3]:
        code, out, _ = invoke(capsys, "verify", "--certificate", str(path))
        assert code == 0


def test_verify_failure_exits_3(tmp_path, capsys):
    target = tmp_path / "q.cert"
    invoke(
        capsys,
        "consistent", "--alts", "3", "--voters", "2", "--class", "linear",
        "--axioms", "SD,SL", "--out", str(target),
    )
    doc = target.read_text().replace("INCONSISTENT", "CONSISTENT")
    broken = tmp_path / "broken.cert"
    broken.write_text(doc)
    code, out, _ = invoke(capsys, "verify", "--certificate", str(broken))
    assert code == 3


def test_identical_invocations_share_a_body_hash(tmp_path, capsys):
    args = (
        "consistent", "--alts", "3", "--voters", "2", "--class", "linear",
        "--axioms", "SL,SV",
    )
    _, first, _ = invoke(capsys, *args)
    _, second, _ = invoke(capsys, *args)
    hash1 = next(l for l in first.splitlines() if l.startswith("body-sha256"))
    hash2 = next(l for l in second.splitlines() if l.startswith("body-sha256"))
    assert hash1 == hash2
    body1 = first.split("body-sha256")[0]
    body2 = second.split("body-sha256")[0]
    assert body1 == body2


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--axiom", "BOGUS", "--profile", "a>b", "--social", "a>b"),
        ("eval", "--axiom", "SP", "--profile", "a>zz", "--social", "a>b"),
        ("entails", "--level", "instance", "--iia", "--premises", "SD", "--conclusion", "SP"),
        ("enumerate", "--alts", "9"),
        ("rights", "--assign", "0:{a,b}"),
        ("nonsense",),
    ],
)
def test_usage_errors_exit_1(capsys, argv):
    code, _, err = invoke(capsys, *argv)
    assert code == 1
    assert err.startswith("error:")


def test_cap_refusal_exits_2(capsys):
    code, _, err = invoke(
        capsys,
        "entails", "--level", "instance", "--alts", "4", "--voters", "3",
        "--class", "weak", "--premises", "SD", "--conclusion", "SP",
    )
    assert code == 2
    assert "SCS_MAX_BUDGET" in err


def test_missing_rule_file_exits_1(capsys):
    code, _, err = invoke(capsys, "dictator", "--rule", "/nonexistent/r.rule")
    assert code == 1
