"""Certificate documents: self-contained, re-checkable verdict records.

A certificate is plain UTF-8 text with LF line endings.  The canonical
body carries the query, its parameters, the verdict and all witnesses; a
`body-sha256` line seals it and a trailing `stats` line holds volatile
data (wall time) outside the hash, so identical queries produce
byte-identical bodies across runs.

Multi-line payloads (an input rule, witness rules) are embedded as blocks:
the header line carries the line count and each block line is indented by
two spaces.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .axioms import Axiom, RightsAssignment, parse_axiom_set, parse_rights
from .errors import ParseError
from .prefs import WeakOrder, parse_ranking
from .profiles import Profile, ProfileSpace
from .rules import AggregationRule, parse_rule, rule_to_text

FORMAT = "scs-certificate/1"
ENGINE_VERSION = "scs/0.1.0"

#: Inline at most this many surviving rules in a ruleset certificate.
RULESET_INLINE_LIMIT = 4

VERDICTS = ("ENTAILS", "COUNTERMODEL", "CONSISTENT", "INCONSISTENT", "RULESET")
SEMANTICS = ("instance", "schema", "schema+iia", "rights")
KINDS = (
    "INSTANCE_ENTAILS",
    "SCHEMA_CONSISTENT",
    "SCHEMA_ENTAILS_IIA",
    "RIGHTS_CONSISTENT",
    "FIND_DICTATOR",
)


@dataclass(frozen=True)
class Witnesses:
    """Structured witness payload; `kind` says which fields are meaningful."""

    kind: str = "none"  # none | instance | profile | rule | ruleset | trace
    profile: Profile | None = None
    social: WeakOrder | None = None
    rules: tuple[AggregationRule, ...] = ()
    ruleset_count: int | None = None
    ruleset_dictators: tuple[int, ...] | None = None
    trace_lines: tuple[str, ...] = ()
    dictator: int | None = None


@dataclass(frozen=True)
class Certificate:
    kind: str
    query: str
    space: ProfileSpace
    semantics: str
    verdict: str
    premises: tuple[Axiom, ...] = ()
    conclusion: Axiom | None = None
    rights: RightsAssignment | None = None
    social_range: str | None = None
    input_rule: AggregationRule | None = None
    witnesses: Witnesses = field(default_factory=Witnesses)
    claim: str | None = None
    flag: str | None = None
    stats: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown query kind {self.kind!r}")
        if self.semantics not in SEMANTICS:
            raise ValueError(f"unknown semantics {self.semantics!r}")
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    # -- rendering -----------------------------------------------------

    def canonical_body(self, with_claim: bool = True) -> str:
        lines = [f"format: {FORMAT}", f"version: {ENGINE_VERSION}"]
        if with_claim and self.claim is not None:
            lines.append(f"claim: {self.claim}")
        if with_claim and self.flag is not None:
            lines.append(f"flag: {self.flag}")
        lines.append(f"kind: {self.kind}")
        lines.append(f"query: {self.query}")
        lines.append(f"space: {self.space.describe()}")
        lines.append(f"semantics: {self.semantics}")
        premises = ",".join(ax.token() for ax in self.premises) or "-"
        lines.append(f"premises: {premises}")
        lines.append(f"conclusion: {self.conclusion.token() if self.conclusion else '-'}")
        lines.append(f"rights: {self.rights.as_string() if self.rights else '-'}")
        lines.append(f"social-range: {self.social_range or '-'}")
        if self.input_rule is not None:
            lines.extend(_block("input-rule", rule_to_text(self.input_rule)))
        lines.append(f"verdict: {self.verdict}")
        lines.extend(self._witness_lines())
        return "\n".join(lines) + "\n"

    def _witness_lines(self) -> list[str]:
        w = self.witnesses
        lines = [f"witnesses: {w.kind}"]
        if w.ruleset_count is not None:
            lines.append(f"ruleset-count: {w.ruleset_count}")
        if w.ruleset_dictators is not None:
            shown = ",".join(str(v + 1) for v in w.ruleset_dictators) or "-"
            lines.append(f"ruleset-dictators: {shown}")
        if w.kind in ("instance", "profile") and w.profile is not None:
            lines.append(f"witness-profile: {w.profile.as_string()}")
        if w.kind == "instance" and w.social is not None:
            lines.append(f"witness-social: {w.social.ranking()}")
        for rule in w.rules:
            lines.extend(_block("witness-rule", rule_to_text(rule)))
        if w.kind == "trace":
            lines.append(f"dictator: {w.dictator + 1}")
            lines.extend(w.trace_lines)
        return lines

    def body_hash(self) -> str:
        return hashlib.sha256(self.canonical_body().encode("utf-8")).hexdigest()

    def document(self) -> str:
        stats = " ".join(f"{k}={v}" for k, v in self.stats)
        return (
            self.canonical_body()
            + f"body-sha256: {self.body_hash()}\n"
            + f"stats: {stats}\n"
        )


def _block(key: str, text: str) -> list[str]:
    body = text.splitlines()
    return [f"{key}: {len(body)}"] + ["  " + line for line in body]


# ---------------------------------------------------------------------------
# parsing


def parse_certificate(text: str) -> Certificate:
    """Rebuild a certificate from its document form.

    The returned object reproduces the canonical body byte-for-byte; the
    recorded body-sha256 is checked against the rebuilt body.
    """
    lines = text.splitlines()
    fields: dict[str, str] = {}
    blocks: dict[str, list[str]] = {}
    trace_lines: list[str] = []
    recorded_hash = None
    stats_line = None
    k = 0
    while k < len(lines):
        line = lines[k]
        k += 1
        if not line.strip():
            continue
        key, sep, value = line.partition(": ")
        if not sep and line.endswith(":"):
            key, value = line[:-1], ""
            sep = ":"
        if not sep:
            raise ParseError(f"malformed certificate line {line!r}", line=k)
        value = value.strip() if key not in ("claim",) else value
        if key in ("input-rule", "witness-rule"):
            try:
                count = int(value)
            except ValueError as exc:
                raise ParseError(f"bad block length in {line!r}", line=k) from exc
            body = []
            for _ in range(count):
                if k >= len(lines) or not lines[k].startswith("  "):
                    raise ParseError(f"truncated {key} block", line=k + 1)
                body.append(lines[k][2:])
                k += 1
            blocks.setdefault(key, []).append("\n".join(body) + "\n")
        elif key == "trace-step":
            trace_lines.append(line)
        elif key == "body-sha256":
            recorded_hash = value
        elif key == "stats":
            stats_line = value
        else:
            if key in fields:
                raise ParseError(f"duplicate certificate field {key!r}", line=k)
            fields[key] = value

    for required in ("format", "version", "kind", "query", "space", "semantics",
                     "verdict", "witnesses"):
        if required not in fields:
            raise ParseError(f"certificate is missing the {required!r} field")
    if fields["format"] != FORMAT:
        raise ParseError(f"unsupported certificate format {fields['format']!r}")

    space = ProfileSpace.from_description(fields["space"])
    premises = ()
    if fields.get("premises", "-") != "-":
        premises = parse_axiom_set(fields["premises"], space.m)
    conclusion = None
    if fields.get("conclusion", "-") != "-":
        conclusion = parse_axiom_set(fields["conclusion"], space.m)[0]
    rights = None
    if fields.get("rights", "-") != "-":
        rights = parse_rights(fields["rights"], space.m)
    social_range = None
    if fields.get("social-range", "-") != "-":
        social_range = fields["social-range"]
    input_rule = None
    if "input-rule" in blocks:
        input_rule = parse_rule(blocks["input-rule"][0], provenance="certificate")

    wkind = fields["witnesses"]
    wprofile = wsocial = None
    if "witness-profile" in fields:
        wprofile = Profile.from_string(fields["witness-profile"], space.pref_class)
    if "witness-social" in fields:
        wsocial = parse_ranking(fields["witness-social"])
    wrules = tuple(
        parse_rule(block, provenance="certificate") for block in blocks.get("witness-rule", [])
    )
    count = None
    if "ruleset-count" in fields:
        count = int(fields["ruleset-count"])
    dictators = None
    if "ruleset-dictators" in fields:
        raw = fields["ruleset-dictators"]
        dictators = () if raw == "-" else tuple(int(v) - 1 for v in raw.split(","))
    dictator = None
    if "dictator" in fields:
        dictator = int(fields["dictator"]) - 1

    stats: tuple[tuple[str, str], ...] = ()
    if stats_line:
        stats = tuple(tuple(item.split("=", 1)) for item in stats_line.split())

    cert = Certificate(
        kind=fields["kind"],
        query=fields["query"],
        space=space,
        semantics=fields["semantics"],
        verdict=fields["verdict"],
        premises=premises,
        conclusion=conclusion,
        rights=rights,
        social_range=social_range,
        input_rule=input_rule,
        witnesses=Witnesses(
            kind=wkind,
            profile=wprofile,
            social=wsocial,
            rules=wrules,
            ruleset_count=count,
            ruleset_dictators=dictators,
            trace_lines=tuple(trace_lines),
            dictator=dictator,
        ),
        claim=fields.get("claim"),
        flag=fields.get("flag"),
        stats=stats,
    )
    if recorded_hash is not None and recorded_hash != cert.body_hash():
        raise ParseError("certificate body does not match its recorded sha256")
    return cert
