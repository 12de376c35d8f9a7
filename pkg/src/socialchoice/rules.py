"""Aggregation rules: total maps from a profile space to social weak orders.

Rules are extensional tables indexed by profile id.  Named constructors
build the standard specimens (dictatorships, Borda, constant rules); the
raw pairwise-majority tally is exposed separately because its output can
fail transitivity (Condorcet cycles) and therefore is not a rule.

Rule file format, one document per rule::

    alts: 3
    voters: 2
    class: linear
    name: dictatorship(voter=1)
    a>b>c;a>b>c -> a>b>c
    ...                          # one line per profile, in id order

The parser insists on a complete table in canonical profile order and
reports errors with 1-based line numbers.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import ATOM_TAGS, Axiom, Instance, atom, evaluate, _dictator_at
from .errors import ParseError
from .prefs import Relation, WeakOrder, canonical_key, strictly, trichotomy
from .profiles import PREF_CLASSES, Profile, ProfileSpace, restrict_to_pair


@dataclass(frozen=True)
class AggregationRule:
    """Profile-id-indexed table of social weak orders over one space."""

    space: ProfileSpace
    table: tuple[WeakOrder, ...]
    name: str = field(default="", compare=False)
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.table) != self.space.size:
            raise ValueError(
                f"rule table has {len(self.table)} entries, space has {self.space.size} profiles"
            )
        if any(w.m != self.space.m for w in self.table):
            raise ValueError("rule table entry over the wrong universe")

    def social_at(self, pid: int) -> WeakOrder:
        return self.table[pid]

    def for_profile(self, profile: Profile) -> WeakOrder:
        return self.table[self.space.profile_id(profile)]

    def canonical_id(self) -> tuple:
        """Representation-independent sort key for rule sets."""
        return tuple(canonical_key(w) for w in self.table)


@dataclass(frozen=True)
class SchemaVerdict:
    holds: bool
    failing_id: int | None = None
    failing_profile: Profile | None = None


@dataclass(frozen=True)
class IiaVerdict:
    holds: bool
    # (profile id 1, profile id 2, x, y): the profiles agree on {x, y} but
    # the social verdicts differ; lexicographically least such tuple.
    witness: tuple[int, int, int, int] | None = None


@dataclass(frozen=True)
class RuleClassification:
    satisfies_iia: bool
    schema_verdicts: tuple[tuple[str, bool], ...]
    uniform_dictator: int | None
    per_profile_dictators: bool


def dictatorship_rule(space: ProfileSpace, voter: int) -> AggregationRule:
    """Projection rule: the social order copies the given voter (0-based)."""
    if not 0 <= voter < space.n:
        raise ValueError(f"voter {voter} outside the space's 0..{space.n - 1}")
    table = tuple(p.orders[voter] for p in space.profiles())
    return AggregationRule(space, table, name=f"dictatorship(voter={voter + 1})",
                           provenance="constructed")


def constant_rule(space: ProfileSpace, social: WeakOrder) -> AggregationRule:
    if social.m != space.m:
        raise ValueError("constant order over the wrong universe")
    table = tuple(social for _ in range(space.size))
    return AggregationRule(space, table, name=f"constant({social.ranking()})",
                           provenance="constructed")


def pairwise_majority_raw(space: ProfileSpace) -> tuple[Relation, ...]:
    """Raw majority tally per profile: xRy iff at least as many voters have xR_iy.

    Returns plain relations; the output need not be transitive (negative
    control for why rule ranges must be vetted).
    """
    m = space.m
    out = []
    for profile in space.profiles():
        bits = []
        for x in range(m):
            for y in range(m):
                fwd = sum(1 for o in profile.orders if o.has(x, y))
                bwd = sum(1 for o in profile.orders if o.has(y, x))
                bits.append(fwd >= bwd)
        out.append(Relation(m, tuple(bits)))
    return tuple(out)


def borda_rule(space: ProfileSpace) -> AggregationRule:
    """Scores each alternative by the strict wins it collects; ties become
    social indifference, so the range stays inside the weak orders."""
    m = space.m
    table = []
    for profile in space.profiles():
        score = [0] * m
        for o in profile.orders:
            for x in range(m):
                score[x] += sum(1 for y in range(m) if strictly(o, x, y))
        bits = tuple(score[x] >= score[y] for x in range(m) for y in range(m))
        table.append(WeakOrder(m, bits))
    return AggregationRule(space, tuple(table), name="borda", provenance="constructed")


def satisfies_schema(rule: AggregationRule, ax: Axiom) -> SchemaVerdict:
    """Does the axiom hold at every profile of the rule's space?"""
    for pid, profile in enumerate(rule.space.profiles()):
        if not evaluate(ax, Instance(profile, rule.table[pid])):
            return SchemaVerdict(False, pid, profile)
    return SchemaVerdict(True)


def satisfies_iia(rule: AggregationRule) -> IiaVerdict:
    """Independence check on two-element menus.

    For weak orders the choice set over {x, y} is in bijection with the
    trichotomy verdict, so the social verdict on a pair must be a function
    of the profile's restriction to that pair.
    """
    space = rule.space
    profiles = list(space.profiles())
    best: tuple[int, int, int, int] | None = None
    for x in range(space.m):
        for y in range(space.m):
            if x >= y:
                continue
            seen: dict[tuple, tuple[int, int]] = {}  # restriction -> (first pid, verdict)
            candidate = None
            for pid, profile in enumerate(profiles):
                restriction = restrict_to_pair(profile, x, y).verdicts
                verdict = trichotomy(rule.table[pid], x, y)
                if restriction not in seen:
                    seen[restriction] = (pid, verdict)
                elif seen[restriction][1] != verdict and candidate is None:
                    candidate = (seen[restriction][0], pid, x, y)
            if candidate is not None and (best is None or candidate < best):
                best = candidate
    return IiaVerdict(best is None, best)


def uniform_dictator(rule: AggregationRule) -> int | None:
    """Voter dictating at every profile, or None."""
    for voter in range(rule.space.n):
        if all(
            _dictator_at(Instance(profile, rule.table[pid]), voter)
            for pid, profile in enumerate(rule.space.profiles())
        ):
            return voter
    return None


def classify(rule: AggregationRule) -> RuleClassification:
    verdicts = tuple((tag, satisfies_schema(rule, atom(tag)).holds) for tag in ATOM_TAGS)
    per_profile = dict(verdicts)["SD"]
    return RuleClassification(
        satisfies_iia=satisfies_iia(rule).holds,
        schema_verdicts=verdicts,
        uniform_dictator=uniform_dictator(rule),
        per_profile_dictators=per_profile,
    )


# ---------------------------------------------------------------------------
# rule files


def rule_to_text(rule: AggregationRule) -> str:
    space = rule.space
    lines = [
        f"alts: {space.m}",
        f"voters: {space.n}",
        f"class: {space.pref_class}",
        f"name: {rule.name}",
    ]
    for pid, profile in enumerate(space.profiles()):
        lines.append(f"{profile.as_string()} -> {rule.table[pid].ranking()}")
    return "\n".join(lines) + "\n"


def parse_rule(text: str, provenance: str = "parsed") -> AggregationRule:
    lines = text.splitlines()
    if len(lines) < 4:
        raise ParseError("rule file needs the four header lines alts/voters/class/name")
    header = {}
    for k, key in enumerate(("alts", "voters", "class", "name")):
        prefix = key + ":"
        if not lines[k].startswith(prefix):
            raise ParseError(f"expected {key!r} header", line=k + 1)
        header[key] = lines[k][len(prefix):].strip()
    try:
        m, n = int(header["alts"]), int(header["voters"])
    except ValueError as exc:
        raise ParseError("alts and voters must be integers", line=1) from exc
    if header["class"] not in PREF_CLASSES:
        raise ParseError(f"class must be one of {PREF_CLASSES}", line=3)
    space = ProfileSpace(m, n, header["class"])
    body = lines[4:]
    while body and not body[-1].strip():
        body.pop()
    table = []
    for pid, profile in enumerate(space.profiles()):
        lineno = 5 + pid
        if pid >= len(body):
            raise ParseError(
                f"table is incomplete: missing profile id {pid} ({profile.as_string()})",
                line=lineno,
            )
        left, sep, right = body[pid].partition(" -> ")
        if not sep:
            raise ParseError("expected '<profile> -> <ranking>'", line=lineno)
        try:
            got = Profile.from_string(left.strip(), space.pref_class)
            social = WeakOrder.from_ranking(right.strip())
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from exc
        if got != profile:
            raise ParseError(
                f"expected profile {profile.as_string()} at id {pid}, got {left.strip()}",
                line=lineno,
            )
        if social.m != m:
            raise ParseError("social order over the wrong universe", line=lineno)
        table.append(social)
    if len(body) > space.size:
        raise ParseError("trailing lines after the last profile", line=5 + space.size)
    return AggregationRule(space, tuple(table), name=header["name"], provenance=provenance)


def save_rule(rule: AggregationRule, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(rule_to_text(rule))


def load_rule(path) -> AggregationRule:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_rule(fh.read(), provenance=f"loaded from {path}")
