"""Exception types shared across the package."""

import numpy as np


class OpMeansError(Exception):
    """Base class for all errors raised by opmeans."""


class NonSymmetric(OpMeansError, ValueError):
    pass


class DimensionMismatch(OpMeansError, ValueError):
    pass


class DomainError(OpMeansError, ValueError):
    """A function was applied outside the set where it is defined."""


class BadRange(OpMeansError, ValueError):
    pass


class SingularMatrix(OpMeansError, np.linalg.LinAlgError):
    pass


class BothSingular(SingularMatrix):
    """Neither operand of a matrix mean is invertible."""


class ParamOutOfDomain(OpMeansError, ValueError):
    pass


class DuplicatePoints(OpMeansError, ValueError):
    pass


class NoConvergence(OpMeansError, ArithmeticError):
    pass


class DescriptorError(OpMeansError, ValueError):
    """A textual function descriptor could not be parsed."""


class MatrixFormatError(OpMeansError, ValueError):
    """A matrix exchange object is malformed."""


class HypothesisWarning(UserWarning):
    """The inputs do not satisfy the hypotheses of the identity being evaluated."""
