"""Instance-level evaluators for the simplified social choice axioms.

An instance is one (profile, social order) point.  Every axiom here is a
first-order sentence over that point; the "for all profiles" quantifier of
the schema reading lives in the engine, not in these evaluators.  All
alternative quantifiers range over ordered pairs of distinct alternatives.

Axiom tokens as used by the CLI and in certificates:

    SP    Pareto rule: unanimous strict preference is socially strict.
    SD    dictatorship: some voter's strict preferences are all followed.
    SWD   weak dictatorship: some voter is never weakly overruled.
    SV    vetoer: some tie-free voter is never strictly reversed.
    SL    liberalism: every voter has a tie-free pair followed both ways.
    SLP   liberalism, agreement form: every voter has a pair of strict
          agreement with society.
    SSP   strong Pareto: weak unanimity plus one strict vote is followed.
    SSD   strong dictatorship, literal existential-implication form.
    DEC(i,...)        the listed voters form a decisive group.
    DEC(i,...;x,y)    the listed voters are decisive over the pair {x,y}.
    RIGHTS(i:{x,y};...)  fixed rights pairs, followed both ways per voter.

Negation prefixes the token with N, shortening the four classic cases to
ND, NP, NL and NV.  Voters are 1-based in tokens and 0-based in code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError
from .prefs import WeakOrder, alt_index, alt_name, enumerate_weak_orders, strictly, indifferent
from .profiles import Profile

ATOM_TAGS = ("SP", "SD", "SWD", "SV", "SL", "SLP", "SSP", "SSD")

_SHORT_NEGATIONS = {"SD": "ND", "SP": "NP", "SL": "NL", "SV": "NV"}
_SHORT_NEGATIONS_INV = {v: k for k, v in _SHORT_NEGATIONS.items()}


@lru_cache(maxsize=None)
def distinct_pairs(m: int) -> tuple[tuple[int, int], ...]:
    return tuple((x, y) for x in range(m) for y in range(m) if x != y)


@dataclass(frozen=True)
class Instance:
    """One evaluation point: a profile together with a social weak order."""

    profile: Profile
    social: WeakOrder

    def __post_init__(self):
        if self.profile.m != self.social.m:
            raise ValueError("profile and social order disagree on universe size")

    @property
    def m(self) -> int:
        return self.profile.m

    @property
    def n(self) -> int:
        return self.profile.n


@dataclass(frozen=True)
class RightsAssignment:
    """Fixed rights pairs: (voter, (x, y)) entries with x < y, voters 0-based."""

    entries: tuple[tuple[int, tuple[int, int]], ...]

    def __post_init__(self):
        for voter, (x, y) in self.entries:
            if voter < 0:
                raise ValueError(f"voter index {voter} is negative")
            if x == y:
                raise ValueError("rights pair must name two distinct alternatives")
            if x > y:
                raise ValueError("rights pairs are stored with the smaller index first")
        if list(self.entries) != sorted(set(self.entries)):
            raise ValueError("rights entries must be sorted and free of duplicates")

    @classmethod
    def of(cls, mapping: dict[int, list[tuple[int, int]]]) -> "RightsAssignment":
        entries = sorted(
            (voter, (min(x, y), max(x, y)))
            for voter, pairs in mapping.items()
            for x, y in pairs
        )
        return cls(tuple(entries))

    def as_string(self) -> str:
        return ";".join(
            f"{voter + 1}:{{{alt_name(x)},{alt_name(y)}}}" for voter, (x, y) in self.entries
        )

    def max_voter(self) -> int:
        return max((voter for voter, _ in self.entries), default=-1)

    def max_alternative(self) -> int:
        return max((y for _, (_, y) in self.entries), default=-1)


def parse_rights(text: str, m: int = 26) -> RightsAssignment:
    """Parse a rights string such as "1:{a,b};2:{b,c}" (voters 1-based)."""
    if not text:
        raise ParseError("empty rights assignment")
    entries = []
    for chunk in text.split(";"):
        head, sep, body = chunk.partition(":")
        if not sep or not head.strip().isdigit():
            raise ParseError(f"malformed rights entry {chunk!r}")
        voter = int(head.strip()) - 1
        if voter < 0:
            raise ParseError(f"voter numbers start at 1, got {chunk!r}")
        body = body.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise ParseError(f"malformed rights pair in {chunk!r}")
        names = body[1:-1].split(",")
        if len(names) != 2:
            raise ParseError(f"rights pair needs exactly two alternatives: {chunk!r}")
        x, y = (alt_index(n.strip(), m) for n in names)
        if x == y:
            raise ParseError(f"rights pair must be distinct: {chunk!r}")
        entries.append((voter, (min(x, y), max(x, y))))
    return RightsAssignment(tuple(sorted(set(entries))))


@dataclass(frozen=True)
class Axiom:
    """An evaluable condition: an atom tag plus optional parameters and negation."""

    tag: str
    negated: bool = False
    group: tuple[int, ...] | None = None
    pair: tuple[int, int] | None = None
    rights: RightsAssignment | None = None

    def __post_init__(self):
        if self.tag in ATOM_TAGS:
            if self.group is not None or self.pair is not None or self.rights is not None:
                raise ValueError(f"axiom {self.tag} takes no parameters")
        elif self.tag == "DEC":
            if not self.group:
                raise ValueError("DEC needs a nonempty voter group")
            if list(self.group) != sorted(set(self.group)):
                raise ValueError("DEC group must be sorted and duplicate-free")
            if self.pair is not None and self.pair[0] == self.pair[1]:
                raise ValueError("DEC pair must be distinct")
        elif self.tag == "RIGHTS":
            if self.rights is None or not self.rights.entries:
                raise ValueError("RIGHTS needs a nonempty assignment")
        else:
            raise ValueError(f"unknown axiom tag {self.tag!r}")

    def token(self) -> str:
        if self.tag in ATOM_TAGS:
            base = self.tag
            if self.negated:
                return _SHORT_NEGATIONS.get(base, "N" + base)
            return base
        if self.tag == "DEC":
            voters = ",".join(str(v + 1) for v in self.group)
            if self.pair is not None:
                x, y = self.pair
                base = f"DEC({voters};{alt_name(x)},{alt_name(y)})"
            else:
                base = f"DEC({voters})"
        else:
            base = f"RIGHTS({self.rights.as_string()})"
        return ("N" + base) if self.negated else base

    def __str__(self) -> str:
        return self.token()


def atom(tag: str) -> Axiom:
    return Axiom(tag)


SP = atom("SP")
SD = atom("SD")
SWD = atom("SWD")
SV = atom("SV")
SL = atom("SL")
SLP = atom("SLP")
SSP = atom("SSP")
SSD = atom("SSD")


def decisive_group(voters, pair: tuple[int, int] | None = None) -> Axiom:
    group = tuple(sorted(set(voters)))
    if pair is not None:
        pair = (min(pair), max(pair))
    return Axiom("DEC", group=group, pair=pair)


def rights_axiom(assignment: RightsAssignment) -> Axiom:
    return Axiom("RIGHTS", rights=assignment)


def negate(ax: Axiom) -> Axiom:
    """Instance-level complement: eval(negate(ax)) == not eval(ax)."""
    return Axiom(ax.tag, not ax.negated, ax.group, ax.pair, ax.rights)


def split_axiom_list(text: str) -> list[str]:
    """Split a comma-separated axiom list, respecting (...) and {...}."""
    out, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced brackets in axiom list {text!r}")
        elif ch == "," and depth == 0:
            out.append(text[start:k])
            start = k + 1
    if depth != 0:
        raise ParseError(f"unbalanced brackets in axiom list {text!r}")
    out.append(text[start:])
    return [item.strip() for item in out if item.strip()]


def parse_axiom(token: str, m: int = 26) -> Axiom:
    """Parse one axiom token (see the module docstring for the grammar)."""
    token = token.strip()
    if token in ATOM_TAGS:
        return Axiom(token)
    if token in _SHORT_NEGATIONS_INV:
        return Axiom(_SHORT_NEGATIONS_INV[token], negated=True)
    negated = False
    body = token
    if body.startswith("N") and body not in ATOM_TAGS:
        negated, body = True, body[1:]
    if body in ATOM_TAGS:
        return Axiom(body, negated=negated)
    if body.startswith("DEC(") and body.endswith(")"):
        inner = body[4:-1]
        voters_part, sep, pair_part = inner.partition(";")
        try:
            voters = tuple(sorted({int(v) - 1 for v in voters_part.split(",") if v.strip()}))
        except ValueError as exc:
            raise ParseError(f"malformed voter list in {token!r}") from exc
        if not voters or any(v < 0 for v in voters):
            raise ParseError(f"DEC needs voter numbers starting at 1: {token!r}")
        pair = None
        if sep:
            names = pair_part.split(",")
            if len(names) != 2:
                raise ParseError(f"DEC pair needs two alternatives: {token!r}")
            x, y = (alt_index(n.strip(), m) for n in names)
            pair = (min(x, y), max(x, y))
        try:
            return Axiom("DEC", negated=negated, group=voters, pair=pair)
        except ValueError as exc:
            raise ParseError(f"invalid DEC axiom {token!r}: {exc}") from exc
    if body.startswith("RIGHTS(") and body.endswith(")"):
        return Axiom("RIGHTS", negated=negated, rights=parse_rights(body[7:-1], m))
    raise ParseError(f"unknown axiom token {token!r}")


def parse_axiom_set(text: str, m: int = 26) -> tuple[Axiom, ...]:
    return tuple(parse_axiom(tok, m) for tok in split_axiom_list(text))


# ---------------------------------------------------------------------------
# evaluators


def eval_sp(inst: Instance) -> bool:
    social = inst.social
    for x, y in distinct_pairs(inst.m):
        if all(strictly(o, x, y) for o in inst.profile.orders) and not strictly(social, x, y):
            return False
    return True


def _dictator_at(inst: Instance, voter: int) -> bool:
    order, social = inst.profile.orders[voter], inst.social
    return all(
        not strictly(order, x, y) or strictly(social, x, y)
        for x, y in distinct_pairs(inst.m)
    )


def eval_sd(inst: Instance) -> bool:
    return any(_dictator_at(inst, i) for i in range(inst.n))


def eval_swd(inst: Instance) -> bool:
    social = inst.social
    return any(
        all(
            not strictly(o, x, y) or social.has(x, y)
            for x, y in distinct_pairs(inst.m)
        )
        for o in inst.profile.orders
    )


def eval_sv(inst: Instance) -> bool:
    social = inst.social
    for o in inst.profile.orders:
        ok = True
        for x, y in distinct_pairs(inst.m):
            if indifferent(o, x, y) or (strictly(o, x, y) and strictly(social, y, x)):
                ok = False
                break
        if ok:
            return True
    return False


def eval_sl(inst: Instance) -> bool:
    social = inst.social
    for o in inst.profile.orders:
        if not any(
            not indifferent(o, x, y)
            and (not strictly(o, x, y) or strictly(social, x, y))
            and (not strictly(o, y, x) or strictly(social, y, x))
            for x, y in distinct_pairs(inst.m)
        ):
            return False
    return True


def eval_slp(inst: Instance) -> bool:
    social = inst.social
    return all(
        any(
            strictly(o, x, y) and strictly(social, x, y)
            for x, y in distinct_pairs(inst.m)
        )
        for o in inst.profile.orders
    )


def eval_ssp(inst: Instance) -> bool:
    social = inst.social
    orders = inst.profile.orders
    for x, y in distinct_pairs(inst.m):
        if (
            all(o.has(x, y) for o in orders)
            and any(strictly(o, x, y) for o in orders)
            and not strictly(social, x, y)
        ):
            return False
    return True


def eval_ssd(inst: Instance) -> bool:
    social = inst.social
    pairs = distinct_pairs(inst.m)
    for o in inst.profile.orders:
        first = any(not strictly(o, x, y) or strictly(social, x, y) for x, y in pairs)
        second = any(not o.has(x, y) or social.has(x, y) for x, y in pairs)
        if first and second:
            return True
    return False


def eval_decisive_over(inst: Instance, group, a: int, b: int) -> bool:
    voters = _check_group(inst, group)
    if a == b:
        raise ValueError("decisiveness needs two distinct alternatives")
    social = inst.social
    orders = [inst.profile.orders[i] for i in voters]
    fwd = not all(strictly(o, a, b) for o in orders) or strictly(social, a, b)
    bwd = not all(strictly(o, b, a) for o in orders) or strictly(social, b, a)
    return fwd and bwd


def eval_decisive(inst: Instance, group) -> bool:
    voters = _check_group(inst, group)
    social = inst.social
    orders = [inst.profile.orders[i] for i in voters]
    return all(
        not all(strictly(o, x, y) for o in orders) or strictly(social, x, y)
        for x, y in distinct_pairs(inst.m)
    )


def eval_rights(inst: Instance, assignment: RightsAssignment) -> bool:
    if assignment.max_voter() >= inst.n or assignment.max_alternative() >= inst.m:
        raise ValueError("rights assignment mentions a voter or alternative outside the instance")
    social = inst.social
    for voter, (x, y) in assignment.entries:
        o = inst.profile.orders[voter]
        if strictly(o, x, y) and not strictly(social, x, y):
            return False
        if strictly(o, y, x) and not strictly(social, y, x):
            return False
    return True


def _check_group(inst: Instance, group) -> tuple[int, ...]:
    voters = tuple(sorted(set(group)))
    if not voters:
        raise ValueError("a decisive group must be nonempty")
    if voters[0] < 0 or voters[-1] >= inst.n:
        raise ValueError(f"group {voters} outside the voter range 0..{inst.n - 1}")
    return voters


_ATOM_EVALUATORS = {
    "SP": eval_sp,
    "SD": eval_sd,
    "SWD": eval_swd,
    "SV": eval_sv,
    "SL": eval_sl,
    "SLP": eval_slp,
    "SSP": eval_ssp,
    "SSD": eval_ssd,
}


def evaluate(ax: Axiom, inst: Instance) -> bool:
    """Evaluate one axiom at one instance."""
    if ax.tag in _ATOM_EVALUATORS:
        value = _ATOM_EVALUATORS[ax.tag](inst)
    elif ax.tag == "DEC":
        if ax.pair is not None:
            value = eval_decisive_over(inst, ax.group, *ax.pair)
        else:
            value = eval_decisive(inst, ax.group)
    else:
        value = eval_rights(inst, ax.rights)
    return (not value) if ax.negated else value


def admissible_social_set(axioms, profile: Profile) -> tuple[WeakOrder, ...]:
    """Social weak orders satisfying every axiom at this profile, canonical order.

    This is the per-profile satisfiability kernel: a schema-level
    inconsistency (without independence) is exactly a profile whose
    admissible set is empty.
    """
    axioms = tuple(axioms)
    return tuple(
        w
        for w in enumerate_weak_orders(profile.m)
        if all(evaluate(ax, Instance(profile, w)) for ax in axioms)
    )
