class BostConnesError(Exception):
    """Base class for every error raised by the toolkit"""


class InvalidDenominatorError(BostConnesError, ValueError):
    """A Q/Z element was requested with denominator zero"""


class InvalidInputError(BostConnesError, ValueError):
    """An argument violates an operation's precondition"""


class CoefficientModeError(BostConnesError, TypeError):
    """Integer-only operation applied in rational mode, or the other way round"""


class NotAWittVectorError(BostConnesError, ArithmeticError):
    """Ghost data whose triangular solve leaves the integers"""

    def __init__(self, index, value):
        super().__init__(f"ghost components are not integral: x_{index} = {value}")
        self.index = index
        self.value = value


class TruncationError(BostConnesError, ValueError):
    """Truncation sets disagree or are too small for the requested operation"""


class DomainError(BostConnesError, ValueError):
    """Input outside the mathematical domain of the operation"""


class NotQuasiUnipotentError(DomainError):
    """A homology block has eigenvalues that are not roots of unity"""

    def __init__(self, degree, remainder):
        super().__init__(
            f"degree {degree} is not quasi-unipotent (non-cyclotomic factor {remainder})"
        )
        self.degree = degree
        self.remainder = remainder


class RelationViolationError(BostConnesError):
    """An object map does not send relations to consequences of relations"""

    def __init__(self, family):
        target, parts = family
        super().__init__(
            f"family {target} = {' + '.join(parts)} is not respected by the map"
        )
        self.family = family


class SchemaError(BostConnesError, ValueError):
    """A JSON payload does not match the expected schema"""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


class InvariantViolation(BostConnesError, AssertionError):
    """An internal invariant failed (exact arithmetic left its ring)"""
