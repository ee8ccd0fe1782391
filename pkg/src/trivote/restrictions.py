"""Domain restrictions on assignments, and how they relate to cycles.

Two classical restrictions are decided for the set of rankings actually
present in an assignment:

* value restriction: some candidate is never ranked best, or never
  middle, or never worst; and
* single-peakedness: along one of the three candidate axes, no present
  ranking puts the axis's middle candidate last.

Value restriction is known to rule out majority cycles on odd
assemblies; the structural window condition of :mod:`trivote.aggregate`
is exact for every system.  :func:`gap_census` measures the gap between
the two over all assignments of a given size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .aggregate import (
    VERIFY_MAX_N,
    Assignment,
    _CHUNK,
    _efficiency_lut,
    _evaluate,
    _Tables,
)
from .core import CANDIDATES, profile_order
from .systems import VotingSystem, is_pure_majority, validate

VR_KINDS = ("never_best", "never_middle", "never_worst")

# Axes up to reversal; each is named by its left-to-right candidate order.
AXES = (("a", "b", "c"), ("a", "c", "b"), ("b", "a", "c"))


@dataclass(frozen=True, slots=True)
class NeverClause:
    """Witness for value restriction: ``candidate`` never takes ``rank``."""

    kind: str  # one of VR_KINDS
    candidate: str


@dataclass(frozen=True, slots=True)
class RestrictionVerdict:
    value_restricted: bool
    clause: Optional[NeverClause]
    single_peaked: bool
    axis: Optional[tuple[str, str, str]]


def _present_profiles(assignment: Assignment) -> frozenset[int]:
    return frozenset(assignment.profiles)


def _vr_clause_of(present: frozenset[int]) -> Optional[NeverClause]:
    orders = [profile_order(p) for p in present]
    for rank, kind in enumerate(VR_KINDS):
        for candidate in CANDIDATES:
            if all(order[rank] != candidate for order in orders):
                return NeverClause(kind, candidate)
    return None


def _sp_axis_of(present: frozenset[int]) -> Optional[tuple[str, str, str]]:
    for axis in AXES:
        middle = axis[1]
        if all(profile_order(p)[2] != middle for p in present):
            return axis
    return None


def value_restricted(assignment: Assignment) -> Optional[NeverClause]:
    """The witnessing clause if the assignment is value restricted, else None.

    The first clause in the fixed scan order wins: never-best a, b, c;
    never-middle a, b, c; never-worst a, b, c.
    """
    return _vr_clause_of(_present_profiles(assignment))


def single_peaked(assignment: Assignment) -> Optional[tuple[str, str, str]]:
    """A witnessing axis if the assignment is single-peaked, else None.

    Axes are tried in the fixed order a-b-c, a-c-b, b-a-c; a ranking is
    single-peaked on an axis iff it does not put the axis's middle
    candidate last.
    """
    return _sp_axis_of(_present_profiles(assignment))


def classify(assignment: Assignment) -> RestrictionVerdict:
    """Both restriction checks in one verdict."""
    present = _present_profiles(assignment)
    clause = _vr_clause_of(present)
    axis = _sp_axis_of(present)
    return RestrictionVerdict(clause is not None, clause, axis is not None, axis)


def _vr_lut() -> np.ndarray:
    """Value-restriction verdict per present-label bitmask (bit p-1 = label p)."""
    lut = np.zeros(64, dtype=np.uint8)
    for bits in range(1, 64):
        present = frozenset(p for p in range(1, 7) if bits >> (p - 1) & 1)
        lut[bits] = _vr_clause_of(present) is not None
    return lut


@dataclass(frozen=True, slots=True)
class CensusReport:
    """Counts over all 6^n assignments of one system.

    ``vr_not_c`` is the value-restricted assignments whose window
    condition fails (equivalently, whose outcome cycles); ``c_not_vr``
    is the converse gap: assignments the window condition clears even
    though value restriction does not.
    """

    n: int
    assignments: int
    value_restricted: int
    condition_c: int
    linear: int
    vr_not_c: int
    c_not_vr: int
    vr_sufficiency_applicable: bool  # odd pure majority only
    vr_sufficiency_holds: Optional[bool]


def gap_census(n: int, system: VotingSystem) -> CensusReport:
    """Tally restriction and window-condition verdicts over all assignments."""
    if system.n != n:
        raise ValueError(f"system is over n={system.n}, census asked for n={n}")
    if n > VERIFY_MAX_N:
        raise ValueError(f"gap_census supports n <= {VERIFY_MAX_N}, got {n}")
    report = validate(system)
    if not report.valid:
        raise ValueError(f"system fails validation: {report.violation}")

    lut = _efficiency_lut(system)
    vr_lut = _vr_lut()
    total = 6**n
    vr = cond = linear = vr_not_c = c_not_vr = 0
    for lo in range(0, total, _CHUNK):
        tables = _Tables(n, lo, min(lo + _CHUNK, total))
        bits = _evaluate(lut, tables)
        vr_bits = vr_lut[tables.present] != 0
        holds = bits.holds != 0
        vr += int(vr_bits.sum())
        cond += int(holds.sum())
        linear += int(bits.linear.sum())
        vr_not_c += int((vr_bits & ~holds).sum())
        c_not_vr += int((holds & ~vr_bits).sum())

    applicable = is_pure_majority(system)
    return CensusReport(
        n=n,
        assignments=total,
        value_restricted=vr,
        condition_c=cond,
        linear=linear,
        vr_not_c=vr_not_c,
        c_not_vr=c_not_vr,
        vr_sufficiency_applicable=applicable,
        vr_sufficiency_holds=(vr_not_c == 0) if applicable else None,
    )
