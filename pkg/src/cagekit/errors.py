"""Exception types shared across the package."""


class CageKitError(Exception):
    """Base class for all package-specific errors."""


class FieldMismatchError(CageKitError):
    """Arithmetic attempted between elements of different fields."""


class NotInvertibleError(CageKitError, ZeroDivisionError):
    """Division by zero, or by a non-unit."""


class ReducibleModulusError(NotInvertibleError):
    """Inversion hit a nontrivial factor of the extension modulus."""


class ShapeError(CageKitError, ValueError):
    """Dimension mismatch between vectors, matrices or subspaces."""


class InvalidPointError(CageKitError, ValueError):
    """All-zero coordinate tuple where a projective point was required."""


class MustValidateError(CageKitError):
    """Cage nodes requested before a successful validate() call."""


class CageValidationError(CageKitError):
    """A construction produced a cage that fails validation.

    Carries the offending ValidationReport in .report.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class SingularNodeError(CageKitError):
    """Jacobian of an inscribed variety dropped rank at a node."""


class SchemaError(CageKitError, ValueError):
    """JSON document does not match the expected shape.

    The message carries a JSON-path-style location of the offending field.
    """

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path

