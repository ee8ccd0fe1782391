"""Assemblies, coalitions, and the six strict rankings of three candidates.

Everything downstream is built from two small combinatorial structures:

* coalitions of an assembly of at most 64 voters, stored as one-word
  bitmasks, and
* the six strict linear orders of the candidates ``a``, ``b``, ``c``,
  labelled 1..6 so that label arithmetic is mod-6 (6 plays the role of 0).

The labelling is chosen so that consecutive labels differ by a single
swap of either the top two or bottom two candidates, and labels three
apart are exact reversals of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

CANDIDATES = ("a", "b", "c")

MAX_ASSEMBLY = 64

# Label -> ranking, best candidate first.
PROFILE_ORDERS = {
    1: ("a", "b", "c"),
    2: ("a", "c", "b"),
    3: ("c", "a", "b"),
    4: ("c", "b", "a"),
    5: ("b", "c", "a"),
    6: ("b", "a", "c"),
}

PROFILE_IDS = (1, 2, 3, 4, 5, 6)

_ORDER_TO_PROFILE = {order: p for p, order in PROFILE_ORDERS.items()}


def _check_profile(p: int) -> None:
    if p not in PROFILE_ORDERS:
        raise ValueError(f"profile id must be in 1..6, got {p!r}")


def _check_candidate(x: str) -> None:
    if x not in CANDIDATES:
        raise ValueError(f"unknown candidate {x!r}, expected one of {CANDIDATES}")


def profile_order(p: int) -> tuple[str, str, str]:
    """Return the ranking labelled ``p``, best candidate first."""
    _check_profile(p)
    return PROFILE_ORDERS[p]


def profile_of_order(order: Iterable[str]) -> int:
    """Inverse of :func:`profile_order`."""
    key = tuple(order)
    try:
        return _ORDER_TO_PROFILE[key]
    except KeyError:
        raise ValueError(f"not a ranking of {CANDIDATES}: {key!r}") from None


def prefers(p: int, x: str, y: str) -> bool:
    """True iff ranking ``p`` places candidate ``x`` above ``y``."""
    _check_profile(p)
    _check_candidate(x)
    _check_candidate(y)
    if x == y:
        raise ValueError("reflexive comparison")
    order = PROFILE_ORDERS[p]
    return order.index(x) < order.index(y)


def shift(p: int, k: int) -> int:
    """Label ``p + k`` in mod-6 arithmetic on representatives 1..6."""
    _check_profile(p)
    return (p - 1 + k) % 6 + 1


def succ(p: int) -> int:
    """The next label: succ(6) = 1."""
    return shift(p, 1)


def pred(p: int) -> int:
    """The previous label: pred(1) = 6."""
    return shift(p, -1)


def opposite(p: int) -> int:
    """The label three steps away; its ranking is the reversal of ``p``'s."""
    return shift(p, 3)


def permute_order(
    order: tuple[str, str, str], mapping: dict[str, str]
) -> tuple[str, str, str]:
    """Apply a candidate renaming to a ranking."""
    renamed = tuple(mapping[x] for x in order)
    if sorted(renamed) != sorted(CANDIDATES):
        raise ValueError(f"not a candidate permutation: {mapping!r}")
    return renamed  # type: ignore[return-value]


def permute_profile(p: int, mapping: dict[str, str]) -> int:
    """The label of ranking ``p`` after renaming candidates."""
    return profile_of_order(permute_order(profile_order(p), mapping))


@dataclass(frozen=True, slots=True)
class Assembly:
    """A voting body of ``n`` members, identified by indices 0..n-1."""

    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ASSEMBLY:
            raise ValueError(
                f"assembly size must be between 1 and {MAX_ASSEMBLY}, got {self.n}"
            )

    @property
    def members(self) -> range:
        return range(self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def coalition(self, members: Iterable[int] = ()) -> "Coalition":
        return Coalition.from_members(self.n, members)

    def full_coalition(self) -> "Coalition":
        return Coalition(self.full_mask, self.n)

    def empty_coalition(self) -> "Coalition":
        return Coalition(0, self.n)


@dataclass(frozen=True, slots=True)
class Coalition:
    """A subset of an ``n``-member assembly, stored as a bitmask."""

    mask: int
    n: int

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ASSEMBLY:
            raise ValueError(f"assembly size must be between 1 and {MAX_ASSEMBLY}")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(
                f"coalition mask {self.mask:#x} has members outside 0..{self.n - 1}"
            )

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "Coalition":
        mask = 0
        for m in members:
            if not 0 <= m < n:
                raise ValueError(f"member {m} outside assembly 0..{n - 1}")
            mask |= 1 << m
        return cls(mask, n)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(self)

    def complement(self) -> "Coalition":
        return Coalition(self.mask ^ ((1 << self.n) - 1), self.n)

    def union(self, other: "Coalition") -> "Coalition":
        self._check_same(other)
        return Coalition(self.mask | other.mask, self.n)

    def intersection(self, other: "Coalition") -> "Coalition":
        self._check_same(other)
        return Coalition(self.mask & other.mask, self.n)

    def issubset(self, other: "Coalition") -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def _check_same(self, other: "Coalition") -> None:
        if self.n != other.n:
            raise ValueError(f"assembly mismatch: n={self.n} vs n={other.n}")

    def __contains__(self, member: int) -> bool:
        return 0 <= member < self.n and bool(self.mask >> member & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __or__(self, other: "Coalition") -> "Coalition":
        return self.union(other)

    def __and__(self, other: "Coalition") -> "Coalition":
        return self.intersection(other)

    def __repr__(self) -> str:
        return f"Coalition({list(self)}, n={self.n})"
