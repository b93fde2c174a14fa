"""Shared exception types.

Every error the library raises deliberately derives from QAlgebraError,
so callers can catch one base class at CLI boundaries.
"""


class QAlgebraError(Exception):
    """Base class for all errors raised by this package."""


class ZeroSpecialization(QAlgebraError):
    """Evaluation at q = 0, which lies outside the parameter domain."""


class ShapeMismatch(QAlgebraError):
    """Operands live over different matrix shapes."""


class InhomogeneousInput(QAlgebraError):
    """An operation that needs a common multidegree received mixed input."""


class PreconditionViolated(QAlgebraError):
    """A documented precondition of an operation does not hold."""


class VerificationFailed(QAlgebraError):
    """An internal certification step (re-expansion, cross-check) failed."""


class BudgetExceeded(QAlgebraError):
    """A degree or component-size budget was hit before completing."""


class NoRelationFound(QAlgebraError):
    """A relation search came back empty where one was required."""


class NotInResidualPoset(QAlgebraError):
    """An index set does not lie above the chosen poset element."""


class HypothesisViolated(QAlgebraError):
    """The structural hypothesis of a check fails for the given input."""
