"""Voting systems given by families of efficient coalitions.

A voting system designates a family of "efficient" coalitions subject to
two axioms:

* exactly-one: of a coalition and its complement, exactly one is
  efficient, and
* monotonicity: any coalition containing an efficient one is efficient.

Equivalently, the efficient family is a proper, strong, monotone simple
game: the same object as a self-dual monotone set system.  A system is
stored by its antichain of inclusion-minimal efficient coalitions, which
makes monotonicity structural and reduces the exactly-one axiom to two
antichain conditions:

* properness: every two minimal coalitions intersect (so a coalition and
  its complement are never both efficient), and
* strongness: every coalition meeting all minimal coalitions contains
  one of them (so a coalition and its complement are never both
  inefficient).

Strongness is decided by computing the blocker (the minimal transversals
of the antichain) and checking that each transversal absorbs a minimal
coalition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Optional, Sequence, Union

from .core import Assembly, Coalition

ENUMERATION_DEFAULT_MAX = 6
ENUMERATION_HARD_MAX = 7

# Counts of systems on n = 1..7 members (self-dual monotone families).
SYSTEM_COUNTS = {1: 1, 2: 2, 3: 4, 4: 12, 5: 81, 6: 2646, 7: 1422564}

_BITMAP_MAX_N = 24


@dataclass(frozen=True, slots=True)
class ExactlyOneViolation:
    """A coalition that breaks the exactly-one axiom together with its
    complement: both efficient, or both inefficient."""

    coalition: Coalition
    both: str  # "efficient" or "inefficient"


@dataclass(frozen=True, slots=True)
class AntichainViolation:
    """Two generators where one contains the other."""

    m1: Coalition
    m2: Coalition


@dataclass(frozen=True, slots=True)
class ValidationReport:
    valid: bool
    violation: Optional[Union[ExactlyOneViolation, AntichainViolation]] = None


class InvalidSystemError(ValueError):
    """Raised when a construction cannot yield a valid voting system."""

    def __init__(self, message: str, violation=None):
        super().__init__(message)
        self.violation = violation


@dataclass(frozen=True)
class VotingSystem:
    """An efficient-coalition family, represented by its minimal members.

    ``minimal`` is kept sorted by bitmask; equality of two systems is
    equality of families.  Construction does not validate the axioms;
    use :func:`validate`.
    """

    assembly: Assembly
    minimal: tuple[Coalition, ...]

    def __post_init__(self) -> None:
        for m in self.minimal:
            if m.n != self.assembly.n:
                raise ValueError("minimal coalition from a different assembly")
        ordered = tuple(sorted(set(self.minimal), key=lambda c: c.mask))
        if ordered != self.minimal:
            object.__setattr__(self, "minimal", ordered)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "VotingSystem":
        coalitions = tuple(
            Coalition(mask, n) for mask in sorted(set(masks))
        )
        return cls(Assembly(n), coalitions)

    @classmethod
    def from_member_lists(
        cls, n: int, coalitions: Iterable[Iterable[int]]
    ) -> "VotingSystem":
        masks = [Coalition.from_members(n, ms).mask for ms in coalitions]
        return cls.from_masks(n, masks)

    @property
    def n(self) -> int:
        return self.assembly.n

    def minimal_masks(self) -> tuple[int, ...]:
        return tuple(m.mask for m in self.minimal)

    def is_efficient(self, coalition: Coalition) -> bool:
        """True iff ``coalition`` contains some minimal efficient coalition."""
        if coalition.n != self.n:
            raise ValueError(
                f"assembly mismatch: coalition over n={coalition.n}, system over n={self.n}"
            )
        mask = coalition.mask
        return any(m.mask & ~mask == 0 for m in self.minimal)

    def __repr__(self) -> str:
        sets = ", ".join(str(list(m)) for m in self.minimal)
        return f"VotingSystem(n={self.n}, minimal=[{sets}])"


def is_efficient(system: VotingSystem, coalition: Coalition) -> bool:
    return system.is_efficient(coalition)


def _minimal_transversals(masks: Sequence[int]) -> list[int]:
    """Inclusion-minimal sets meeting every mask in ``masks``.

    Sequential construction: fold one mask in at a time, keeping the
    partial result inclusion-minimal.  Stays small whenever the input is
    (close to) self-dual, which is the only regime validate cares about.
    """
    trans = [0]
    for mask in masks:
        hit = [t for t in trans if t & mask]
        extended = set()
        for t in trans:
            if t & mask:
                continue
            m = mask
            while m:
                low = m & -m
                m ^= low
                cand = t | low
                if not any(h & ~cand == 0 for h in hit):
                    extended.add(cand)
        # Prune non-minimal among the extensions themselves.
        for cand in sorted(extended, key=int.bit_count):
            if not any(kept & ~cand == 0 for kept in hit):
                hit.append(cand)
        trans = hit
    return trans


def validate(system: VotingSystem) -> ValidationReport:
    """Check the antichain shape and the exactly-one axiom.

    Monotonicity cannot fail for a family generated by minimal
    coalitions, so the checks are: no generator contains another, every
    two generators intersect (properness), and every minimal transversal
    of the generators contains a generator (strongness).
    """
    cached = getattr(system, "_validation", None)
    if cached is not None:
        return cached
    report = _validate(system)
    object.__setattr__(system, "_validation", report)
    return report


def _validate(system: VotingSystem) -> ValidationReport:
    n = system.n
    masks = system.minimal_masks()
    full = (1 << n) - 1

    for m1, m2 in itertools.combinations(masks, 2):
        if m1 & ~m2 == 0 or m2 & ~m1 == 0:
            small, big = (m1, m2) if m1 & ~m2 == 0 else (m2, m1)
            return ValidationReport(
                False, AntichainViolation(Coalition(small, n), Coalition(big, n))
            )

    for i, m1 in enumerate(masks):
        for m2 in masks[i:]:
            if m1 & m2 == 0:
                # m1 lies inside m2's complement: both sides efficient.
                witness = min(m2 ^ full, m2)
                return ValidationReport(
                    False, ExactlyOneViolation(Coalition(witness, n), "efficient")
                )

    for t in _minimal_transversals(masks):
        if not any(m & ~t == 0 for m in masks):
            # Neither t nor its complement contains a generator.
            witness = min(t, t ^ full)
            return ValidationReport(
                False, ExactlyOneViolation(Coalition(witness, n), "inefficient")
            )

    return ValidationReport(True)


def dictatorship(n: int, d: int) -> VotingSystem:
    """The system whose efficient coalitions are exactly those containing ``d``."""
    if not 0 <= d < n:
        raise ValueError(f"dictator {d} outside assembly 0..{n - 1}")
    return VotingSystem.from_masks(n, [1 << d])


def majority_with_chair(n: int, chair: int) -> VotingSystem:
    """Majority rule, with exact ties broken by the chair's side.

    A coalition is efficient iff it outnumbers its complement, or the
    two halves tie (even ``n``) and the chair is in it.  For odd ``n``
    the tie-break never fires and this is pure majority.
    """
    if not 0 <= chair < n:
        raise ValueError(f"chair {chair} outside assembly 0..{n - 1}")
    quorum = n // 2 + 1
    masks = [
        sum(1 << m for m in members)
        for members in itertools.combinations(range(n), quorum)
    ]
    if n % 2 == 0:
        half = n // 2
        others = [m for m in range(n) if m != chair]
        masks.extend(
            (1 << chair) | sum(1 << m for m in members)
            for members in itertools.combinations(others, half - 1)
        )
    return VotingSystem.from_masks(n, _minimize(masks))


def majority(n: int) -> VotingSystem:
    """Pure majority rule; requires odd ``n``."""
    if n % 2 == 0:
        raise ValueError(f"pure majority needs an odd assembly, got n={n}")
    return majority_with_chair(n, 0)


def _minimize(masks: Iterable[int]) -> list[int]:
    out: list[int] = []
    for mask in sorted(set(masks), key=int.bit_count):
        if not any(kept & ~mask == 0 for kept in out):
            out.append(mask)
    return out


def weighted(weights: Sequence[int], quota: int) -> VotingSystem:
    """The system where a coalition is efficient iff its weight reaches ``quota``.

    Raises :class:`InvalidSystemError` when the exactly-one axiom fails,
    i.e. some achievable weight split leaves both sides below quota or
    both at-or-above it.  The witness coalition is reported.
    """
    n = len(weights)
    if not 1 <= n <= 64:
        raise ValueError(f"assembly size must be between 1 and 64, got {n}")
    if any(w < 0 for w in weights):
        raise ValueError("weights must be non-negative")
    if not any(w > 0 for w in weights):
        raise ValueError("at least one weight must be positive")
    total = sum(weights)

    # Achievable subset sums, with one representative coalition each.
    reachable: dict[int, int] = {0: 0}
    for m, w in enumerate(weights):
        update = {}
        for s, mask in reachable.items():
            if s + w not in reachable:
                update[s + w] = mask | (1 << m)
        reachable.update(update)
        if len(reachable) > 1 << 22:
            raise ValueError("weighted validation too large for these weights")

    for s, mask in sorted(reachable.items()):
        side = s >= quota
        other = total - s >= quota
        if side and other:
            raise InvalidSystemError(
                f"not a valid voting system: coalition {sorted(Coalition(mask, n))} "
                f"(weight {s}) and its complement (weight {total - s}) both reach "
                f"quota {quota}",
                ExactlyOneViolation(Coalition(mask, n), "efficient"),
            )
        if not side and not other:
            raise InvalidSystemError(
                f"not a valid voting system: coalition {sorted(Coalition(mask, n))} "
                f"(weight {s}) and its complement (weight {total - s}) both miss "
                f"quota {quota}",
                ExactlyOneViolation(Coalition(mask, n), "inefficient"),
            )

    positive = [m for m in range(n) if weights[m] > 0]
    # suffix[i] = total weight of positive[i:], for search pruning
    suffix = [0] * (len(positive) + 1)
    for i in range(len(positive) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[positive[i]]
    minimal: list[int] = []

    def extend(start: int, mask: int, s: int) -> None:
        if s >= quota:
            if all(s - weights[m] < quota for m in Coalition(mask, n)):
                minimal.append(mask)
            return
        if s + suffix[start] < quota:
            return
        for idx in range(start, len(positive)):
            m = positive[idx]
            extend(idx + 1, mask | (1 << m), s + weights[m])

    extend(0, 0, 0)
    return VotingSystem.from_masks(n, minimal)


def efficiency_bitmap(system: VotingSystem) -> int:
    """The full family as a 2^n-bit integer: bit ``K`` set iff coalition
    mask ``K`` is efficient.  Canonical sort key for enumeration order."""
    cached = getattr(system, "_bitmap", None)
    if cached is not None:
        return cached
    n = system.n
    if n > _BITMAP_MAX_N:
        raise ValueError(f"efficiency bitmap needs n <= {_BITMAP_MAX_N}, got {n}")
    bitmap = 0
    minimal = system.minimal_masks()
    for k in range(1 << n):
        if any(m & ~k == 0 for m in minimal):
            bitmap |= 1 << k
    object.__setattr__(system, "_bitmap", bitmap)
    return bitmap


def is_pure_majority(system: VotingSystem) -> bool:
    """True iff the system is majority rule on an odd assembly."""
    n = system.n
    if n % 2 == 0:
        return False
    quorum = (n + 1) // 2
    masks = system.minimal_masks()
    if len(masks) != comb(n, quorum):
        return False
    return all(m.bit_count() == quorum for m in masks)


def _closure_tables(n: int) -> tuple[list[list[int]], list[list[int]], int]:
    size = 1 << n
    full = size - 1
    supersets: list[list[int]] = [[] for _ in range(size)]
    subsets: list[list[int]] = [[] for _ in range(size)]
    for k in range(size):
        free = full ^ k
        # All strict supersets of k: k | (nonempty subset of free bits).
        sub = free
        while sub:
            supersets[k].append(k | sub)
            sub = (sub - 1) & free
        sub = k
        while sub:
            sub = (sub - 1) & k
            subsets[k].append(sub)
    return supersets, subsets, full


def _propagate(
    eff: int,
    ineff: int,
    work: list[tuple[int, int]],
    supersets: list[list[int]],
    subsets: list[list[int]],
    full: int,
) -> Optional[tuple[int, int]]:
    """Close a partial efficient/inefficient assignment under the axioms.

    ``eff``/``ineff`` are bitsets indexed by coalition mask.  Returns the
    closed pair, or None on contradiction.
    """
    while work:
        k, val = work.pop()
        bit = 1 << k
        if val:
            if ineff & bit:
                return None
            if eff & bit:
                continue
            eff |= bit
            work.append((full ^ k, 0))
            for s in supersets[k]:
                if not eff >> s & 1:
                    work.append((s, 1))
        else:
            if eff & bit:
                return None
            if ineff & bit:
                continue
            ineff |= bit
            work.append((full ^ k, 1))
            for s in subsets[k]:
                if not ineff >> s & 1:
                    work.append((s, 0))
    return eff, ineff


def _minimal_of_bitmap(bitmap: int, n: int) -> list[int]:
    out = []
    for k in range(1, 1 << n):
        if bitmap >> k & 1 and all(
            not bitmap >> (k & ~(1 << i)) & 1 for i in Coalition(k, n)
        ):
            out.append(k)
    return out


def enumerate_systems(
    n: int, max_n: int = ENUMERATION_DEFAULT_MAX
) -> Iterator[VotingSystem]:
    """Yield every valid voting system on ``n`` labelled members once.

    Systems differing only by a relabelling of members are enumerated
    separately; no isomorphism quotient is taken.  Output is sorted by
    the efficiency bitmap read as an integer.  Counts for n = 1..7 are
    1, 2, 4, 12, 81, 2646, 1422564; n = 7 must be opted into via
    ``max_n`` because of its size.
    """
    limit = min(max_n, ENUMERATION_HARD_MAX)
    if not 1 <= n <= limit:
        raise ValueError(f"enumeration supports 1 <= n <= {limit}, got {n}")

    supersets, subsets, full = _closure_tables(n)
    decided_all = (1 << (1 << n)) - 1

    seeded = _propagate(0, 0, [(0, 0), (full, 1)], supersets, subsets, full)
    assert seeded is not None

    def dfs(eff: int, ineff: int) -> Iterator[int]:
        undecided = decided_all ^ (eff | ineff)
        if not undecided:
            yield eff
            return
        k = undecided.bit_length() - 1
        # 0-branch first: keeps bitmaps ascending.
        for val in (0, 1):
            closed = _propagate(eff, ineff, [(k, val)], supersets, subsets, full)
            if closed is not None:
                yield from dfs(*closed)

    assembly = Assembly(n)
    valid = ValidationReport(True)
    for bitmap in dfs(*seeded):
        minimal = _minimal_of_bitmap(bitmap, n)
        system = VotingSystem(
            assembly, tuple(Coalition(m, n) for m in sorted(minimal))
        )
        object.__setattr__(system, "_bitmap", bitmap)
        object.__setattr__(system, "_validation", valid)
        yield system
