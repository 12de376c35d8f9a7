"""Voter profiles and profile spaces.

A profile is one weak order per voter over a shared universe.  A profile
space is the full Cartesian power of an order class (linear or weak) for a
given universe and voter count; enumerating it realizes the unrestricted
domain assumption.  Pair restrictions are the unit of comparison for the
independence checks: the per-voter verdicts on a single pair of
alternatives.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainSizeError, ParseError
from .prefs import (
    WeakOrder,
    enumerate_linear_orders,
    enumerate_weak_orders,
    parse_ranking,
    trichotomy,
)

LINEAR = "linear"
WEAK = "weak"
PREF_CLASSES = (LINEAR, WEAK)


def _check_class(pref_class: str) -> None:
    if pref_class not in PREF_CLASSES:
        raise ValueError(f"preference class must be one of {PREF_CLASSES}, got {pref_class!r}")


@dataclass(frozen=True)
class Profile:
    """Voter-indexed tuple of individual weak orders."""

    orders: tuple[WeakOrder, ...]
    pref_class: str = WEAK

    def __post_init__(self):
        _check_class(self.pref_class)
        if not self.orders:
            raise ValueError("a profile needs at least one voter")
        m = self.orders[0].m
        if any(o.m != m for o in self.orders):
            raise ValueError("all voters must rank the same universe")
        if self.pref_class == LINEAR and not all(o.is_linear() for o in self.orders):
            raise ValueError("linear profile contains an order with ties")

    @property
    def m(self) -> int:
        return self.orders[0].m

    @property
    def n(self) -> int:
        return len(self.orders)

    def order_of(self, voter: int) -> WeakOrder:
        return self.orders[voter]

    def as_string(self) -> str:
        return ";".join(o.ranking() for o in self.orders)

    @classmethod
    def from_string(cls, text: str, pref_class: str | None = None) -> "Profile":
        parts = text.split(";")
        if not text or any(not p for p in parts):
            raise ParseError(f"malformed profile string {text!r}")
        orders = tuple(parse_ranking(p) for p in parts)
        if pref_class is None:
            pref_class = LINEAR if all(o.is_linear() for o in orders) else WEAK
        return cls(orders, pref_class)


@lru_cache(maxsize=None)
def _pool(m: int, pref_class: str) -> tuple[WeakOrder, ...]:
    return enumerate_linear_orders(m) if pref_class == LINEAR else enumerate_weak_orders(m)


@lru_cache(maxsize=None)
def _pool_index(m: int, pref_class: str) -> dict[WeakOrder, int]:
    return {order: k for k, order in enumerate(_pool(m, pref_class))}


@dataclass(frozen=True)
class ProfileSpace:
    """All profiles of one class for a fixed universe and voter count."""

    m: int
    n: int
    pref_class: str = LINEAR

    def __post_init__(self):
        _check_class(self.pref_class)
        if self.n < 1:
            raise DomainSizeError(f"voter count must be at least 1, got {self.n}")
        _pool(self.m, self.pref_class)  # validates the universe cap

    def order_pool(self) -> tuple[WeakOrder, ...]:
        return _pool(self.m, self.pref_class)

    @property
    def size(self) -> int:
        return len(self.order_pool()) ** self.n

    def profiles(self):
        """All profiles in id order (lexicographic by component indices)."""
        for orders in itertools.product(self.order_pool(), repeat=self.n):
            yield Profile(orders, self.pref_class)

    def profile_id(self, profile: Profile) -> int:
        if profile.m != self.m or profile.n != self.n:
            raise ValueError("profile does not belong to this space")
        index = _pool_index(self.m, self.pref_class)
        base = len(self.order_pool())
        pid = 0
        for order in profile.orders:
            if order not in index:
                raise ValueError("profile component outside this space's order class")
            pid = pid * base + index[order]
        return pid

    def profile_at(self, pid: int) -> Profile:
        if not 0 <= pid < self.size:
            raise ValueError(f"profile id {pid} outside space of size {self.size}")
        pool = self.order_pool()
        base = len(pool)
        digits = []
        for _ in range(self.n):
            digits.append(pid % base)
            pid //= base
        orders = tuple(pool[d] for d in reversed(digits))
        return Profile(orders, self.pref_class)

    def describe(self) -> str:
        return f"alts={self.m} voters={self.n} class={self.pref_class}"

    @classmethod
    def from_description(cls, text: str) -> "ProfileSpace":
        fields = dict(item.split("=", 1) for item in text.split())
        try:
            return cls(int(fields["alts"]), int(fields["voters"]), fields["class"])
        except (KeyError, ValueError) as exc:
            raise ParseError(f"malformed space description {text!r}") from exc


@dataclass(frozen=True)
class PairRestriction:
    """Per-voter verdicts on one unordered pair: +1 x over y, -1 y over x, 0 tie."""

    x: int
    y: int
    verdicts: tuple[int, ...]


def restrict_to_pair(profile: Profile, x: int, y: int) -> PairRestriction:
    """Read each voter's verdict on {x, y} off the profile."""
    if x == y:
        raise ValueError("pair restriction needs two distinct alternatives")
    verdicts = tuple(trichotomy(o, x, y) for o in profile.orders)
    return PairRestriction(x, y, verdicts)


def profiles_agree_on_pair(p1: Profile, p2: Profile, x: int, y: int) -> bool:
    """True iff every voter gives the same verdict on {x, y} in both profiles."""
    if p1.m != p2.m or p1.n != p2.n or p1.pref_class != p2.pref_class:
        raise ValueError("profiles come from different spaces")
    return restrict_to_pair(p1, x, y) == restrict_to_pair(p2, x, y)
