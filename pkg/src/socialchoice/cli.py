"""Command-line frontend.

Subcommands: enumerate, eval, entails, consistent, rights, arrow,
dictator, battery, verify.  Every query subcommand writes a certificate
document to stdout (or to ``--out``); exit status 0 means the query was
answered (whatever the verdict), 1 a usage or parse error, 2 a budget
refusal, and 3 a failed certificate verification.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import engine
from .axioms import parse_axiom, parse_axiom_set, parse_rights, Instance, evaluate
from .errors import CapExceededError, ScsError, ParseError
from .prefs import enumerate_linear_orders, enumerate_weak_orders, parse_ranking
from .profiles import LINEAR, PREF_CLASSES, Profile, ProfileSpace
from .rules import load_rule


class _UsageError(ScsError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit(2); the contract wants 1
        raise _UsageError(message)


def _space_flags(sub, default_class: str = LINEAR):
    sub.add_argument("--alts", type=int, default=3, help="universe size (default 3)")
    sub.add_argument("--voters", type=int, default=2, help="voter count (default 2)")
    sub.add_argument("--class", dest="pref_class", choices=PREF_CLASSES,
                     default=default_class, help="individual preference class")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scs", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("enumerate", help="list all orders of a class, canonical order")
    p.add_argument("--alts", type=int, default=3)
    p.add_argument("--class", dest="pref_class", choices=PREF_CLASSES, default="weak")

    p = subs.add_parser("eval", help="evaluate one axiom at one (profile, social) instance")
    p.add_argument("--axiom", required=True)
    p.add_argument("--profile", required=True)
    p.add_argument("--social", required=True)

    p = subs.add_parser("entails", help="entailment at instance or schema level")
    p.add_argument("--level", choices=("instance", "schema"), default="instance")
    p.add_argument("--iia", action="store_true",
                   help="independence of irrelevant alternatives (schema level only)")
    p.add_argument("--social-range", dest="social_range", choices=PREF_CLASSES, default="weak")
    p.add_argument("--premises", required=True)
    p.add_argument("--conclusion", required=True)
    _space_flags(p)
    p.add_argument("--out", type=Path)

    p = subs.add_parser("consistent", help="schema consistency without independence")
    p.add_argument("--axioms", required=True)
    _space_flags(p)
    p.add_argument("--out", type=Path)

    p = subs.add_parser("rights", help="consistency of fixed rights pairs")
    p.add_argument("--assign", required=True, help='e.g. "1:{a,b};2:{b,c}"')
    p.add_argument("--with", dest="extra", default="", help="extra axioms, e.g. SP")
    _space_flags(p)
    p.add_argument("--out", type=Path)

    p = subs.add_parser("arrow", help="rule search: do the premises force a dictator?")
    p.add_argument("--alts", type=int, default=3)
    p.add_argument("--voters", type=int, default=2)
    p.add_argument("--individual", choices=PREF_CLASSES, default=LINEAR)
    p.add_argument("--social", choices=PREF_CLASSES, default=LINEAR)
    p.add_argument("--axioms", default="SP")
    p.add_argument("--iia", action="store_true", help="accepted for clarity; always on here")
    p.add_argument("--out", type=Path)

    p = subs.add_parser("dictator", help="extract a dictator trace from a rule file")
    p.add_argument("--rule", required=True, type=Path)
    p.add_argument("--out", type=Path)

    p = subs.add_parser("battery", help="run the fixed claim battery")
    p.add_argument("--out-dir", dest="out_dir", type=Path,
                   help="write one certificate file per claim")

    p = subs.add_parser("verify", help="re-check a certificate document")
    p.add_argument("--certificate", required=True, type=Path)

    return parser


def _emit(cert, out: Path | None) -> None:
    doc = cert.document()
    if out is None:
        sys.stdout.write(doc)
    else:
        out.write_text(doc, encoding="utf-8")


def _cmd_enumerate(args) -> int:
    orders = (
        enumerate_linear_orders(args.alts)
        if args.pref_class == LINEAR
        else enumerate_weak_orders(args.alts)
    )
    for order in orders:
        print(order.ranking())
    return 0


def _cmd_eval(args) -> int:
    profile = Profile.from_string(args.profile)
    social = parse_ranking(args.social)
    ax = parse_axiom(args.axiom, profile.m)
    value = evaluate(ax, Instance(profile, social))
    print(f"{ax.token()}: {'true' if value else 'false'}")
    return 0


def _cmd_entails(args) -> int:
    space = ProfileSpace(args.alts, args.voters, args.pref_class)
    premises = parse_axiom_set(args.premises, space.m)
    conclusion = parse_axiom(args.conclusion, space.m)
    if args.level == "instance":
        if args.iia:
            raise _UsageError("--iia applies to schema-level entailment only")
        cert = engine.instance_entails(space, premises, conclusion)
    else:
        cert = engine.schema_entails_iia(space, premises, conclusion, args.social_range)
    _emit(cert, args.out)
    return 0


def _cmd_consistent(args) -> int:
    space = ProfileSpace(args.alts, args.voters, args.pref_class)
    cert = engine.schema_consistent(space, parse_axiom_set(args.axioms, space.m))
    _emit(cert, args.out)
    return 0


def _cmd_rights(args) -> int:
    space = ProfileSpace(args.alts, args.voters, args.pref_class)
    assignment = parse_rights(args.assign, space.m)
    extra = parse_axiom_set(args.extra, space.m) if args.extra else ()
    cert = engine.rights_consistent(space, assignment, extra)
    _emit(cert, args.out)
    return 0


def _cmd_arrow(args) -> int:
    space = ProfileSpace(args.alts, args.voters, args.individual)
    premises = parse_axiom_set(args.axioms, space.m)
    cert = engine.schema_entails_iia(space, premises, parse_axiom("SD"), args.social)
    _emit(cert, args.out)
    return 0


def _cmd_dictator(args) -> int:
    rule = load_rule(args.rule)
    cert = engine.dictator_certificate(rule)
    _emit(cert, args.out)
    return 0


def _cmd_battery(args) -> int:
    certs = engine.theorem_suite()
    if args.out_dir is not None:
        args.out_dir.mkdir(parents=True, exist_ok=True)
    for cert in certs:
        print(f"[{cert.flag}] {cert.claim}: {cert.verdict}")
        if args.out_dir is not None:
            slug = cert.claim.replace(" ", "-", 1)
            (args.out_dir / f"{slug}.cert").write_text(cert.document(), encoding="utf-8")
    return 0


def _cmd_verify(args) -> int:
    text = args.certificate.read_text(encoding="utf-8")
    ok, message = engine.verify_certificate(text)
    print(message)
    return 0 if ok else 3


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "eval": _cmd_eval,
    "entails": _cmd_entails,
    "consistent": _cmd_consistent,
    "rights": _cmd_rights,
    "arrow": _cmd_arrow,
    "dictator": _cmd_dictator,
    "battery": _cmd_battery,
    "verify": _cmd_verify,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except CapExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (_UsageError, ParseError, ScsError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
