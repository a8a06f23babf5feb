"""Exception hierarchy shared across the package."""


class CMVError(Exception):
    """Base class for all cmvkit-specific failures."""


class DomainError(CMVError, ValueError):
    """A coefficient or parameter is outside its mathematical domain."""


class ParityAlignmentError(CMVError):
    """A window cannot be tiled by complete 2x2 blocks under the fixed parity convention."""


class IndexWindowError(CMVError, IndexError):
    """A lattice index falls outside the window or operator it refers to."""


class SingularSolveError(CMVError):
    """A dense solve failed because the shift is (numerically) an eigenvalue."""


class ZeroConstantTermError(CMVError, ZeroDivisionError):
    """Series division against a denominator with (numerically) vanishing constant term."""


class ConstantTermMismatchError(CMVError):
    """A series carries a constant term incompatible with what the operation requires."""


class BranchMismatchError(CMVError):
    """A square-root branch pin is inconsistent with the series constant term."""


class InsufficientMomentsError(CMVError):
    """An inner product reaches exponent gaps beyond the available moment order."""


class RankDeficiencyError(CMVError):
    """Gram-Schmidt collapsed: the moment matrix is numerically singular."""


class OutOfDiskError(CMVError):
    """A recovered coefficient left the open unit disk (inconsistent input data)."""


class HypothesisViolationError(CMVError):
    """Input data violates the hypothesis of the reconstruction being attempted."""
