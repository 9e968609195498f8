"""Exception hierarchy shared by every module.

Each class carries a stable ``code`` used on the wire (error JSON) and by
the CLI to pick an exit status.
"""


class MinorSpreadError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class InvalidSpec(MinorSpreadError):
    """A problem spec violates a schema invariant (ranges, monotonicity)."""

    code = "invalid_spec"


class NoMaximalMinors(MinorSpreadError):
    """u < a_1: the truncated matrix has no nonzero minors at all."""

    code = "no_maximal_minors"


class SizeBoundExceeded(MinorSpreadError):
    """A computation was asked for on a structure above its size cap."""

    code = "size_bound_exceeded"


class AntisymmetryViolation(MinorSpreadError):
    """The order predicate related two distinct elements both ways."""

    code = "antisymmetry_violation"


class TransitivityViolation(MinorSpreadError):
    """The order predicate is not transitively closed."""

    code = "transitivity_violation"


class UnknownElement(MinorSpreadError):
    """An element was passed that does not belong to the poset."""

    code = "unknown_element"


class NotALattice(MinorSpreadError):
    """Some pair of elements has no join or no meet."""

    code = "not_a_lattice"


class NotDistributive(MinorSpreadError):
    """The lattice fails the distributive law."""

    code = "not_distributive"


class NotJoinIrreducible(MinorSpreadError):
    """The tuple does not cover exactly one element of its lattice."""

    code = "not_join_irreducible"


class InsufficientPrecision(MinorSpreadError):
    """Too few Hilbert function values to pin down a numerator polynomial."""

    code = "insufficient_precision"


class SelfCheckFailed(MinorSpreadError):
    """A built-in reproduction drifted from its frozen expected values."""

    code = "self_check_failed"
