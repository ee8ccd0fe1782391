"""Profile assignments, collective rankings, and the cycle criterion.

Given a voting system and an assignment of one ranking to each member,
the three candidates are compared pairwise; each pair is decided by
whichever of the two opposing supporter coalitions is efficient.  The
three decisions form either a linear ranking or one of the two cycles.

The structural criterion decided here: writing ``K(p, q, r)`` for the
coalition of members whose ranking is labelled p, q, or r, the
collective ranking is linear if and only if there exists a label ``p``
with both ``K(p, p+1, p+2)`` and ``K(p+1, p+2, p+3)`` efficient.  Such a
``p`` is called a witness; when the outcome is the linear ranking ``r``,
every witness satisfies ``r ∈ {p+1, p+2}`` and ``r-1`` is itself a
witness.  :func:`verify_theorem` checks all three claims over every
assignment of a system, and :func:`exhaustive_scan` sweeps every system
of a given size.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .core import (
    CANDIDATES,
    Assembly,
    Coalition,
    permute_profile,
    prefers,
    profile_order,
    shift,
    succ,
)
from .systems import (
    SYSTEM_COUNTS,
    VotingSystem,
    efficiency_bitmap,
    enumerate_systems,
    validate,
)

VERIFY_MAX_N = 9
SCAN_DEFAULT_MAX = 6
SCAN_HARD_MAX = 7

_CHUNK = 6**7

PAIRS = (("a", "b"), ("a", "c"), ("b", "c"))

# Labels whose ranking puts x above y, for each ordered pair; each set
# turns out to be three consecutive labels.
SUPPORT_PROFILES = {
    (x, y): frozenset(p for p in range(1, 7) if prefers(p, x, y))
    for x, y in itertools.permutations(CANDIDATES, 2)
}

# The three consecutive labels starting at p.
WINDOWS = {p: (p, shift(p, 1), shift(p, 2)) for p in range(1, 7)}


@dataclass(frozen=True, slots=True)
class Linear:
    """A linear collective ranking, named by its label."""

    ranking: int

    @property
    def order(self) -> tuple[str, str, str]:
        return profile_order(self.ranking)

    def __str__(self) -> str:
        return ">".join(self.order)


@dataclass(frozen=True, slots=True)
class Cycle:
    """A cyclic collective ranking: "a>b>c>a" or "a>c>b>a"."""

    orientation: str

    def __str__(self) -> str:
        return f"cyclic: {self.orientation}"


Outcome = Union[Linear, Cycle]


def _decode_tables() -> tuple[dict[int, int], dict[int, str]]:
    linear: dict[int, int] = {}
    for r in range(1, 7):
        idx = (
            (prefers(r, "a", "b") << 2)
            | (prefers(r, "a", "c") << 1)
            | prefers(r, "b", "c")
        )
        linear[idx] = r
    cycles: dict[int, str] = {}
    for idx in range(8):
        if idx in linear:
            continue
        beats = {
            ("a", "b") if idx & 4 else ("b", "a"),
            ("a", "c") if idx & 2 else ("c", "a"),
            ("b", "c") if idx & 1 else ("c", "b"),
        }
        nxt = dict(beats)
        second = nxt["a"]
        cycles[idx] = f"a>{second}>{nxt[second]}>a"
    return linear, cycles


_LINEAR_BY_IDX, _CYCLE_BY_IDX = _decode_tables()
_LINEAR_LUT = np.array([_LINEAR_BY_IDX.get(i, 0) for i in range(8)], dtype=np.uint8)


def decode_outcome(a_over_b: bool, a_over_c: bool, b_over_c: bool) -> Outcome:
    """Assemble the three pairwise decisions into an outcome."""
    idx = (a_over_b << 2) | (a_over_c << 1) | b_over_c
    r = _LINEAR_BY_IDX.get(idx)
    if r is not None:
        return Linear(r)
    return Cycle(_CYCLE_BY_IDX[idx])


@dataclass(frozen=True, slots=True)
class Assignment:
    """One ranking label per assembly member; member i holds profiles[i]."""

    profiles: tuple[int, ...]

    def __post_init__(self) -> None:
        profiles = tuple(self.profiles)
        if profiles != self.profiles:
            object.__setattr__(self, "profiles", profiles)
        Assembly(len(profiles))
        for p in profiles:
            if p not in range(1, 7):
                raise ValueError(f"profile id must be in 1..6, got {p!r}")

    @classmethod
    def unanimous(cls, n: int, p: int) -> "Assignment":
        return cls((p,) * n)

    @classmethod
    def from_index(cls, n: int, index: int) -> "Assignment":
        """Mixed-radix base-6 decoding; member 0 is the least significant digit."""
        if not 0 <= index < 6**n:
            raise ValueError(f"assignment index {index} outside 0..6^{n}-1")
        profiles = []
        for _ in range(n):
            profiles.append(index % 6 + 1)
            index //= 6
        return cls(tuple(profiles))

    @property
    def n(self) -> int:
        return len(self.profiles)

    @property
    def assembly(self) -> Assembly:
        return Assembly(self.n)

    @property
    def index(self) -> int:
        return sum((p - 1) * 6**m for m, p in enumerate(self.profiles))

    def profile(self, member: int) -> int:
        return self.profiles[member]

    def permuted(self, mapping: dict[str, str]) -> "Assignment":
        """Rename candidates in every member's ranking."""
        return Assignment(tuple(permute_profile(p, mapping) for p in self.profiles))


def coalition_of(assignment: Assignment, ps: Iterable[int]) -> Coalition:
    """Members whose profile label lies in ``ps``."""
    wanted = frozenset(ps)
    if not wanted:
        raise ValueError("empty profile set")
    for p in wanted:
        if p not in range(1, 7):
            raise ValueError(f"profile id must be in 1..6, got {p!r}")
    mask = 0
    for m, p in enumerate(assignment.profiles):
        if p in wanted:
            mask |= 1 << m
    return Coalition(mask, assignment.n)


def supporters(assignment: Assignment, x: str, y: str) -> Coalition:
    """Members whose ranking puts ``x`` above ``y``."""
    if x == y:
        raise ValueError("reflexive comparison")
    mask = 0
    for m, p in enumerate(assignment.profiles):
        if prefers(p, x, y):
            mask |= 1 << m
    return Coalition(mask, assignment.n)


def _check_compatible(system: VotingSystem, assignment: Assignment) -> None:
    if system.n != assignment.n:
        raise ValueError(
            f"assembly mismatch: system over n={system.n}, "
            f"assignment over n={assignment.n}"
        )


def pairwise(system: VotingSystem, assignment: Assignment, x: str, y: str) -> str:
    """The collectively preferred candidate of the pair ``x``, ``y``."""
    _check_compatible(system, assignment)
    return x if system.is_efficient(supporters(assignment, x, y)) else y


def collective(system: VotingSystem, assignment: Assignment) -> Outcome:
    """The collective ranking: linear, or one of the two cycles."""
    _check_compatible(system, assignment)
    bits = tuple(
        system.is_efficient(supporters(assignment, x, y)) for x, y in PAIRS
    )
    return decode_outcome(*bits)


@dataclass(frozen=True, slots=True)
class ConditionCReport:
    holds: bool
    witnesses: frozenset[int]


def condition_c(system: VotingSystem, assignment: Assignment) -> ConditionCReport:
    """Labels ``p`` with both three-label windows at ``p`` and ``p+1`` efficient."""
    _check_compatible(system, assignment)
    window_efficient = {
        p: system.is_efficient(coalition_of(assignment, WINDOWS[p]))
        for p in range(1, 7)
    }
    witnesses = frozenset(
        p for p in range(1, 7) if window_efficient[p] and window_efficient[succ(p)]
    )
    return ConditionCReport(bool(witnesses), witnesses)


@dataclass(frozen=True, slots=True)
class Counterexample:
    """First assignment (in index order) at which a claim failed."""

    assignment_index: int
    profiles: tuple[int, ...]
    check: str  # "equivalence", "witness_ranking", or "converse_witness"


@dataclass(frozen=True, slots=True)
class TheoremReport:
    n: int
    assignments: int
    linear: int
    cyclic: int
    condition_failures: int
    equivalence_violations: int
    witness_violations: int
    converse_violations: int
    first_counterexample: Optional[Counterexample]

    @property
    def ok(self) -> bool:
        return (
            self.equivalence_violations == 0
            and self.witness_violations == 0
            and self.converse_violations == 0
        )


class _Tables:
    """Vectorized per-assignment coalition masks for one index range.

    Column i describes assignment ``start + i``: the six label
    coalitions, the six windows, the three supporter coalitions, and the
    bitmask of labels present.
    """

    def __init__(self, n: int, start: int, stop: int):
        self.n = n
        self.start = start
        self.stop = stop
        idx = np.arange(start, stop, dtype=np.int64)
        digits = [(idx // 6**m) % 6 for m in range(n)]
        self.by_label: dict[int, np.ndarray] = {}
        for p in range(1, 7):
            acc = np.zeros(len(idx), dtype=np.int64)
            for m, d in enumerate(digits):
                acc |= (d == p - 1).astype(np.int64) << m
            self.by_label[p] = acc
        self.windows = {
            p: self.by_label[w1] | self.by_label[w2] | self.by_label[w3]
            for p, (w1, w2, w3) in WINDOWS.items()
        }
        self.supporters = {}
        for x, y in PAIRS:
            acc = np.zeros(len(idx), dtype=np.int64)
            for p in SUPPORT_PROFILES[(x, y)]:
                acc |= self.by_label[p]
            self.supporters[(x, y)] = acc
        present = np.zeros(len(idx), dtype=np.int64)
        for d in digits:
            present |= np.left_shift(np.int64(1), d)
        self.present = present


def _efficiency_lut(system: VotingSystem) -> np.ndarray:
    bitmap = efficiency_bitmap(system)
    size = 1 << system.n
    return np.fromiter(
        ((bitmap >> k) & 1 for k in range(size)), dtype=np.uint8, count=size
    )


@dataclass
class _EvalBits:
    """Per-assignment verdict bits for one system over one table chunk."""

    w: dict[int, np.ndarray]  # window p efficient
    pair: dict[int, np.ndarray]  # windows p and p+1 both efficient
    holds: np.ndarray  # any pair bit set
    linear_r: np.ndarray  # outcome label, 0 when cyclic
    linear: np.ndarray  # bool


def _evaluate(lut: np.ndarray, tables: _Tables) -> _EvalBits:
    w = {p: lut[tables.windows[p]] for p in range(1, 7)}
    pair = {p: w[p] & w[succ(p)] for p in range(1, 7)}
    holds = pair[1] | pair[2] | pair[3] | pair[4] | pair[5] | pair[6]
    ab = lut[tables.supporters[("a", "b")]]
    ac = lut[tables.supporters[("a", "c")]]
    bc = lut[tables.supporters[("b", "c")]]
    oidx = (ab << 2) | (ac << 1) | bc
    linear_r = _LINEAR_LUT[oidx]
    return _EvalBits(w, pair, holds, linear_r, linear_r != 0)


def _violations(bits: _EvalBits) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    eq = (bits.holds != 0) != bits.linear
    wr = np.zeros(len(bits.holds), dtype=bool)
    for p in range(1, 7):
        off = (bits.linear_r != shift(p, 1)) & (bits.linear_r != shift(p, 2))
        wr |= (bits.pair[p] != 0) & bits.linear & off
    matched = np.zeros(len(bits.holds), dtype=bool)
    for r in range(1, 7):
        matched |= (bits.linear_r == r) & (bits.pair[shift(r, -1)] != 0)
    cv = bits.linear & ~matched
    return eq, wr, cv


def verify_theorem(system: VotingSystem, *, _tables: Optional[_Tables] = None) -> TheoremReport:
    """Check the linearity criterion over every assignment of ``system``.

    Three claims are tracked separately: condition holds iff the outcome
    is linear; every witness p of a linear outcome r has r in
    {p+1, p+2}; and r-1 is always among the witnesses.  Counts and the
    first counterexample (lowest assignment index) are reported.
    """
    n = system.n
    if n > VERIFY_MAX_N:
        raise ValueError(f"verify_theorem supports n <= {VERIFY_MAX_N}, got {n}")
    report = validate(system)
    if not report.valid:
        raise ValueError(f"system fails validation: {report.violation}")

    lut = _efficiency_lut(system)
    total = 6**n
    linear = cyclic = cond_fail = eq_count = wr_count = cv_count = 0
    first: Optional[Counterexample] = None

    ranges: Iterable[tuple[int, int]]
    if _tables is not None:
        ranges = [(_tables.start, _tables.stop)]
    else:
        ranges = ((lo, min(lo + _CHUNK, total)) for lo in range(0, total, _CHUNK))

    for lo, hi in ranges:
        tables = _tables if _tables is not None else _Tables(n, lo, hi)
        bits = _evaluate(lut, tables)
        eq, wr, cv = _violations(bits)
        linear += int(bits.linear.sum())
        cyclic += int((~bits.linear).sum())
        cond_fail += int((bits.holds == 0).sum())
        eq_count += int(eq.sum())
        wr_count += int(wr.sum())
        cv_count += int(cv.sum())
        if first is None:
            any_viol = eq | wr | cv
            if any_viol.any():
                i = int(np.argmax(any_viol))
                check = (
                    "equivalence"
                    if eq[i]
                    else "witness_ranking" if wr[i] else "converse_witness"
                )
                index = lo + i
                first = Counterexample(
                    index, Assignment.from_index(n, index).profiles, check
                )

    return TheoremReport(
        n, total, linear, cyclic, cond_fail, eq_count, wr_count, cv_count, first
    )


@dataclass(frozen=True, slots=True)
class ScanCounterexample:
    system_index: int
    minimal_coalitions: tuple[tuple[int, ...], ...]
    assignment_index: int
    profiles: tuple[int, ...]
    check: str


@dataclass(frozen=True, slots=True)
class ScanReport:
    n: int
    systems: int
    assignments_per_system: int
    checks: int
    linear: int
    cyclic: int
    condition_failures: int
    equivalence_violations: int
    witness_violations: int
    converse_violations: int
    per_system_cyclic: tuple[int, ...]
    first_counterexample: Optional[ScanCounterexample]

    @property
    def violations(self) -> int:
        return (
            self.equivalence_violations
            + self.witness_violations
            + self.converse_violations
        )


def _scan_range(n: int, lo: int, hi: int, max_n: int) -> list[TheoremReport]:
    tables = _Tables(n, 0, 6**n)
    reports = []
    for system in itertools.islice(enumerate_systems(n, max_n=max_n), lo, hi):
        reports.append(verify_theorem(system, _tables=tables))
    return reports


def exhaustive_scan(n: int, *, jobs: int = 1, max_n: int = SCAN_DEFAULT_MAX) -> ScanReport:
    """Run :func:`verify_theorem` on every system of size ``n``.

    Partitioning across ``jobs`` worker processes splits the system list
    into contiguous ranges; results are merged in enumeration order, so
    the report does not depend on ``jobs``.
    """
    limit = min(max_n, SCAN_HARD_MAX)
    if not 1 <= n <= limit:
        raise ValueError(f"scan supports 1 <= n <= {limit}, got {n}")

    count = SYSTEM_COUNTS[n]
    if jobs <= 1 or count <= 1:
        reports = _scan_range(n, 0, count, max_n)
    else:
        jobs = min(jobs, count)
        bounds = [count * k // jobs for k in range(jobs + 1)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_scan_range, n, bounds[k], bounds[k + 1], max_n)
                for k in range(jobs)
            ]
            reports = [r for f in futures for r in f.result()]

    total = 6**n
    first: Optional[ScanCounterexample] = None
    for i, rep in enumerate(reports):
        if rep.first_counterexample is not None and first is None:
            ce = rep.first_counterexample
            system = next(itertools.islice(enumerate_systems(n, max_n=max_n), i, None))
            first = ScanCounterexample(
                i,
                tuple(tuple(m) for m in system.minimal),
                ce.assignment_index,
                ce.profiles,
                ce.check,
            )
    return ScanReport(
        n=n,
        systems=len(reports),
        assignments_per_system=total,
        checks=len(reports) * total,
        linear=sum(r.linear for r in reports),
        cyclic=sum(r.cyclic for r in reports),
        condition_failures=sum(r.condition_failures for r in reports),
        equivalence_violations=sum(r.equivalence_violations for r in reports),
        witness_violations=sum(r.witness_violations for r in reports),
        converse_violations=sum(r.converse_violations for r in reports),
        per_system_cyclic=tuple(r.cyclic for r in reports),
        first_counterexample=first,
    )
