"""Analytic spread and reduction number of ideals of maximal minors.

Closed-form invariants over lattices of pinned index tuples, verified
against exhaustive poset and Hilbert-series oracles.
"""

__version__ = "0.1.0"

from .errors import (
    AntisymmetryViolation,
    InsufficientPrecision,
    InvalidSpec,
    MinorSpreadError,
    NoMaximalMinors,
    NotALattice,
    NotDistributive,
    NotJoinIrreducible,
    SelfCheckFailed,
    SizeBoundExceeded,
    TransitivityViolation,
    UnknownElement,
)
from .hibi import (
    HilbertData,
    MonoidPoint,
    a_invariant,
    asl_hilbert_function,
    birkhoff_check,
    canonical_hilbert_function,
    canonical_witness,
    hibi_hilbert_function,
    reciprocity_check,
)
from .invariants import (
    InvariantReport,
    analytic_spread,
    analytic_spread_oracle,
    full_report,
    rank_p,
    reduction_number,
    reduction_number_oracle,
)
from .lattices import (
    JoinIrredProfile,
    Minor,
    ProblemSpec,
    admissible_tuples,
    build_d1,
    build_d2,
    build_theta,
    determine_k,
    join_irreducible_pivot,
    l_indices,
    minimal_join_irreducibles,
    profile,
    theta_join_irreducibles,
)
from .posets import LatticeCheckResult, Poset, build_poset, is_order_isomorphism
from .verification import count_specs, iter_specs, run_sweep, verify_spec

__all__ = [
    "__version__",
    "AntisymmetryViolation",
    "HilbertData",
    "InsufficientPrecision",
    "InvalidSpec",
    "InvariantReport",
    "JoinIrredProfile",
    "LatticeCheckResult",
    "Minor",
    "MinorSpreadError",
    "MonoidPoint",
    "NoMaximalMinors",
    "NotALattice",
    "NotDistributive",
    "NotJoinIrreducible",
    "Poset",
    "ProblemSpec",
    "SelfCheckFailed",
    "SizeBoundExceeded",
    "TransitivityViolation",
    "UnknownElement",
    "a_invariant",
    "admissible_tuples",
    "analytic_spread",
    "analytic_spread_oracle",
    "asl_hilbert_function",
    "birkhoff_check",
    "build_d1",
    "build_d2",
    "build_poset",
    "build_theta",
    "canonical_hilbert_function",
    "canonical_witness",
    "count_specs",
    "determine_k",
    "full_report",
    "hibi_hilbert_function",
    "is_order_isomorphism",
    "iter_specs",
    "join_irreducible_pivot",
    "l_indices",
    "minimal_join_irreducibles",
    "profile",
    "rank_p",
    "reciprocity_check",
    "reduction_number",
    "reduction_number_oracle",
    "run_sweep",
    "theta_join_irreducibles",
    "verify_spec",
]
