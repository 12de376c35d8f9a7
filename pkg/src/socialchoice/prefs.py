"""Preference relations over a small universe of alternatives.

Alternatives are the integers 0..m-1, displayed as the letters 'a'..'e'.
A :class:`Relation` is a raw m-by-m incidence table (cell (x, y) means xRy);
a :class:`WeakOrder` is a relation that is complete and transitive, i.e. a
ranking with ties.  Strict preference and indifference are derived parts of
a weak order, and stay plain relations.

The canonical enumeration order used everywhere (certificates, profile ids,
rule tables) sorts relations lexicographically over their row-major
incidence bits with a set bit sorting first, so at m=3 the linear orders
start with "a>b>c".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainSizeError, InvalidOrderError, ParseError, ReconstructionError

#: Largest supported universe; every check in the suite needs at most 4.
MAX_ALTERNATIVES = 5

_NAMES = "abcdefghijklmnopqrstuvwxyz"


def alt_name(index: int) -> str:
    """Display letter of an alternative ('a' + index)."""
    if not 0 <= index < len(_NAMES):
        raise DomainSizeError(f"alternative index {index} has no display name")
    return _NAMES[index]


def alt_index(name: str, m: int) -> int:
    """Inverse of :func:`alt_name`, validated against universe size m."""
    idx = _NAMES.find(name)
    if len(name) != 1 or idx < 0 or idx >= m:
        raise ParseError(f"unknown alternative name {name!r} for universe size {m}")
    return idx


def check_universe(m: int, cap: int = MAX_ALTERNATIVES) -> None:
    if m < 1:
        raise DomainSizeError(f"universe size must be at least 1, got {m}")
    if m > cap:
        raise DomainSizeError(f"universe size {m} exceeds the cap of {cap}")


@dataclass(frozen=True)
class Relation:
    """Raw binary relation on 0..m-1; cell (x, y) true means xRy."""

    m: int
    bits: tuple[bool, ...]

    def __post_init__(self):
        if self.m < 1:
            raise DomainSizeError(f"universe size must be at least 1, got {self.m}")
        if len(self.bits) != self.m * self.m:
            raise InvalidOrderError(
                f"incidence table has {len(self.bits)} cells, expected {self.m * self.m}"
            )

    @classmethod
    def from_pairs(cls, m: int, pairs) -> "Relation":
        bits = [False] * (m * m)
        for x, y in pairs:
            bits[x * m + y] = True
        return cls(m, tuple(bits))

    def has(self, x: int, y: int) -> bool:
        return self.bits[x * self.m + y]

    def pairs(self) -> list[tuple[int, int]]:
        m = self.m
        return [(x, y) for x in range(m) for y in range(m) if self.bits[x * m + y]]

    # -- classification predicates ------------------------------------

    def is_complete(self) -> bool:
        m = self.m
        return all(self.has(x, y) or self.has(y, x) for x in range(m) for y in range(m))

    def is_transitive(self) -> bool:
        m = self.m
        for x in range(m):
            for y in range(m):
                if not self.has(x, y):
                    continue
                for z in range(m):
                    if self.has(y, z) and not self.has(x, z):
                        return False
        return True

    def is_weak_order(self) -> bool:
        return self.is_complete() and self.is_transitive()

    def is_asymmetric(self) -> bool:
        m = self.m
        return not any(self.has(x, y) and self.has(y, x) for x in range(m) for y in range(m))

    def is_reflexive(self) -> bool:
        return all(self.has(x, x) for x in range(self.m))

    def is_symmetric(self) -> bool:
        m = self.m
        return all(not self.has(x, y) or self.has(y, x) for x in range(m) for y in range(m))

    def is_equivalence(self) -> bool:
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()


# Strict and indifference parts are plain relations; the aliases mark intent.
StrictPart = Relation
IndiffPart = Relation


def canonical_key(rel: Relation) -> tuple[bool, ...]:
    """Sort key for the canonical enumeration order (set bits first)."""
    return tuple(not b for b in rel.bits)


@dataclass(frozen=True)
class WeakOrder(Relation):
    """Complete transitive relation: a ranking of the universe with ties."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_complete():
            raise InvalidOrderError("relation is not complete")
        if not self.is_transitive():
            raise InvalidOrderError("relation is not transitive")

    def is_linear(self) -> bool:
        """True when there is no off-diagonal indifference."""
        m = self.m
        return not any(
            self.has(x, y) and self.has(y, x)
            for x in range(m)
            for y in range(m)
            if x != y
        )

    def classes(self) -> tuple[tuple[int, ...], ...]:
        """Equivalence classes from best to worst, members sorted."""
        m = self.m
        # number of alternatives strictly above x fixes its class
        depth = [sum(1 for y in range(m) if strictly(self, y, x)) for x in range(m)]
        out: dict[int, list[int]] = {}
        for x in range(m):
            out.setdefault(depth[x], []).append(x)
        return tuple(tuple(sorted(out[d])) for d in sorted(out))

    def ranking(self) -> str:
        return format_ranking(self)

    @classmethod
    def from_ranking(cls, text: str) -> "WeakOrder":
        return parse_ranking(text)


def strictly(r: Relation, x: int, y: int) -> bool:
    """xPy under r, i.e. xRy and not yRx."""
    return r.has(x, y) and not r.has(y, x)


def indifferent(r: Relation, x: int, y: int) -> bool:
    """xIy under r, i.e. xRy and yRx."""
    return r.has(x, y) and r.has(y, x)


def trichotomy(r: Relation, x: int, y: int) -> int | None:
    """+1 if xPy, -1 if yPx, 0 if xIy, None if the pair is unrelated."""
    fwd, bwd = r.has(x, y), r.has(y, x)
    if fwd and bwd:
        return 0
    if fwd:
        return 1
    if bwd:
        return -1
    return None


def strict_of(r: WeakOrder) -> StrictPart:
    """Strict part of a weak order: cell (x, y) true iff xRy and not yRx."""
    _require_weak_order(r)
    m = r.m
    return Relation(
        m, tuple(strictly(r, x, y) for x in range(m) for y in range(m))
    )


def indiff_of(r: WeakOrder) -> IndiffPart:
    """Indifference part of a weak order: cell (x, y) true iff xRy and yRx."""
    _require_weak_order(r)
    m = r.m
    return Relation(
        m, tuple(indifferent(r, x, y) for x in range(m) for y in range(m))
    )


def weak_of(p: StrictPart, i: IndiffPart) -> WeakOrder:
    """Rebuild the weak order whose strict part is p and indifference part is i.

    Raises ReconstructionError when the union is not a weak order, i.e. the
    two parts did not come from a common weak order.
    """
    if p.m != i.m:
        raise ReconstructionError("strict and indifference parts disagree on universe size")
    m = p.m
    bits = tuple(p.bits[k] or i.bits[k] for k in range(m * m))
    try:
        return WeakOrder(m, bits)
    except InvalidOrderError as exc:
        raise ReconstructionError(f"parts do not recombine to a weak order: {exc}") from exc


def _require_weak_order(r: Relation) -> None:
    if not isinstance(r, WeakOrder) and not r.is_weak_order():
        raise InvalidOrderError("operation requires a complete transitive relation")


def choice_set(y_subset, r: Relation) -> set[int]:
    """Best elements of y_subset under r: {x in Y | for all y in Y, xRy}.

    Nonempty for any weak order; may be empty for a raw (e.g. cyclic) relation.
    """
    subset = set(y_subset)
    if not subset:
        raise ValueError("choice set of an empty menu is undefined")
    if any(not 0 <= x < r.m for x in subset):
        raise ValueError("menu contains alternatives outside the universe")
    return {x for x in subset if all(r.has(x, y) for y in subset)}


def _ordered_partitions(items: tuple[int, ...]):
    """All ordered partitions of items into nonempty blocks."""
    if not items:
        yield ()
        return
    for k in range(1, len(items) + 1):
        for block in itertools.combinations(items, k):
            taken = set(block)
            remainder = tuple(x for x in items if x not in taken)
            for tail in _ordered_partitions(remainder):
                yield (block, *tail)


@lru_cache(maxsize=None)
def enumerate_weak_orders(m: int, cap: int = MAX_ALTERNATIVES) -> tuple[WeakOrder, ...]:
    """All weak orders on m alternatives, in canonical order.

    Built from ordered set partitions (earlier block = better), then sorted;
    the count follows the recurrence a(n) = sum_k C(n,k) a(n-k).
    """
    check_universe(m, cap)
    orders = []
    for blocks in _ordered_partitions(tuple(range(m))):
        level = {}
        for rank, block in enumerate(blocks):
            for x in block:
                level[x] = rank
        bits = tuple(
            level[x] <= level[y] for x in range(m) for y in range(m)
        )
        orders.append(WeakOrder(m, bits))
    orders.sort(key=canonical_key)
    return tuple(orders)


@lru_cache(maxsize=None)
def enumerate_linear_orders(m: int, cap: int = MAX_ALTERNATIVES) -> tuple[WeakOrder, ...]:
    """All linear (tie-free) orders on m alternatives, in canonical order."""
    check_universe(m, cap)
    orders = []
    for perm in itertools.permutations(range(m)):
        level = {x: rank for rank, x in enumerate(perm)}
        bits = tuple(level[x] <= level[y] for x in range(m) for y in range(m))
        orders.append(WeakOrder(m, bits))
    orders.sort(key=canonical_key)
    return tuple(orders)


def format_ranking(order: WeakOrder) -> str:
    """Ranking string: classes best-to-worst joined by '>', ties by '~'."""
    return ">".join(
        "~".join(alt_name(x) for x in block) for block in order.classes()
    )


def parse_ranking(text: str, m: int | None = None) -> WeakOrder:
    """Parse a ranking string such as "a>b~c" back into a weak order."""
    if not text:
        raise ParseError("empty ranking string")
    blocks = text.split(">")
    seen: list[str] = []
    parsed: list[list[str]] = []
    for block in blocks:
        names = block.split("~")
        if any(not n for n in names):
            raise ParseError(f"malformed ranking string {text!r}")
        parsed.append(names)
        seen.extend(names)
    size = m if m is not None else len(seen)
    if len(seen) != len(set(seen)):
        raise ParseError(f"ranking {text!r} mentions an alternative twice")
    expected = {_NAMES[i] for i in range(size)} if size <= len(_NAMES) else set()
    if set(seen) != expected:
        raise ParseError(
            f"ranking {text!r} must mention exactly the alternatives "
            f"{','.join(sorted(expected))}"
        )
    level = {}
    for rank, names in enumerate(parsed):
        for n in names:
            level[alt_index(n, size)] = rank
    bits = tuple(level[x] <= level[y] for x in range(size) for y in range(size))
    return WeakOrder(size, bits)
