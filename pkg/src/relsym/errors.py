"""Exception types shared across the package."""


class RelsymError(Exception):
    """Base class for all package errors."""


class DivByZero(RelsymError):
    """Division by an exact zero."""


class PoleAtZero(RelsymError):
    """Power-series expansion requested for a rational function with den(0) = 0."""


class LabelError(RelsymError):
    """Unknown row/column label on a labelled matrix."""


class SizeMismatch(RelsymError):
    """Incompatible matrix or family sizes."""


class BadGenerators(RelsymError):
    """Generator set failed to close into a finite group within the iteration cap."""


class IncompleteTable(RelsymError):
    """Character-table construction reached a fixpoint without a complete table."""


class NotASubgroup(RelsymError):
    """Claimed subgroup elements are not all contained in the ambient group."""


class NotNormal(RelsymError):
    """Subgroup is not stable under conjugation by the ambient group."""


class NonIntegralMultiplicity(RelsymError):
    """A tensor-decomposition pairing did not produce a nonnegative integer."""


class NonIntegral(RelsymError):
    """An exact product expected to be an integer polynomial has other coefficients."""


class NonCharacter(RelsymError):
    """Class function is not a nonnegative integer combination of irreducibles."""


class Unclassified(RelsymError):
    """Matrix does not match any stored affine Cartan template."""


class NoMatching(RelsymError):
    """No label bijection realizes the expected proportionality relations."""
