"""Exception hierarchy.

Errors split into two families.  ``DomainError`` covers bad or unsupported
inputs.  ``PropertyViolation`` covers identities that are theorems and must
never fail; seeing one means a bug.
"""


class DihedralTreesError(Exception):
    pass


class DomainError(DihedralTreesError):
    pass


class PropertyViolation(DihedralTreesError):
    pass


class InvalidParameters(DomainError, ValueError):
    pass


class DegenerateFamily(DomainError):
    """All betas absent and all gammas equal: P(z) vanishes identically."""


class Disconnected(DomainError):
    pass


class ZeroPolynomial(DomainError, ValueError):
    pass


class RootFindingFailed(DomainError):
    pass


class FactorizationLimit(DomainError):
    pass


class NonPositiveSample(DomainError):
    pass


class InsufficientTerms(DomainError):
    pass


class DivisibilityViolation(PropertyViolation):
    pass


class StructureViolation(PropertyViolation):
    pass


class NoRecurrenceFound(PropertyViolation):
    pass


class NonIntegerCoefficients(PropertyViolation):
    pass
