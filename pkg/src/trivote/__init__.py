"""Three-candidate voting by efficient coalitions.

Build a voting system from its minimal efficient coalitions (or one of
the stock constructors), aggregate a profile assignment into a
collective ranking, and decide whether the structural window condition
that characterizes linear (non-cyclic) outcomes holds.  Exhaustive
verifiers sweep every system and assignment at small sizes.
"""

from .aggregate import (
    Assignment,
    ConditionCReport,
    Counterexample,
    Cycle,
    Linear,
    Outcome,
    ScanReport,
    TheoremReport,
    coalition_of,
    collective,
    condition_c,
    decode_outcome,
    exhaustive_scan,
    pairwise,
    supporters,
    verify_theorem,
)
from .core import (
    CANDIDATES,
    Assembly,
    Coalition,
    opposite,
    pred,
    prefers,
    profile_of_order,
    profile_order,
    shift,
    succ,
)
from .restrictions import (
    CensusReport,
    NeverClause,
    RestrictionVerdict,
    classify,
    gap_census,
    single_peaked,
    value_restricted,
)
from .systems import (
    AntichainViolation,
    ExactlyOneViolation,
    InvalidSystemError,
    ValidationReport,
    VotingSystem,
    dictatorship,
    efficiency_bitmap,
    enumerate_systems,
    is_efficient,
    is_pure_majority,
    majority,
    majority_with_chair,
    validate,
    weighted,
)

__version__ = "0.1.0"

__all__ = [
    "Assembly",
    "Assignment",
    "AntichainViolation",
    "ExactlyOneViolation",
    "CANDIDATES",
    "CensusReport",
    "Coalition",
    "ConditionCReport",
    "Counterexample",
    "Cycle",
    "InvalidSystemError",
    "Linear",
    "NeverClause",
    "Outcome",
    "RestrictionVerdict",
    "ScanReport",
    "TheoremReport",
    "ValidationReport",
    "VotingSystem",
    "classify",
    "coalition_of",
    "collective",
    "condition_c",
    "decode_outcome",
    "dictatorship",
    "efficiency_bitmap",
    "enumerate_systems",
    "exhaustive_scan",
    "gap_census",
    "is_efficient",
    "is_pure_majority",
    "majority",
    "majority_with_chair",
    "opposite",
    "pairwise",
    "pred",
    "prefers",
    "profile_of_order",
    "profile_order",
    "shift",
    "single_peaked",
    "succ",
    "supporters",
    "validate",
    "value_restricted",
    "verify_theorem",
    "weighted",
]
