"""Exception hierarchy.

Each family maps to one CLI exit code: :class:`InvalidInput` -> 2,
:class:`Unsupported` -> 3, :class:`ResourceGuard` -> 4.
"""


class ToricError(Exception):
    exit_code = 1


class InvalidInput(ToricError, ValueError):
    exit_code = 2


class Unsupported(ToricError):
    exit_code = 3


class ResourceGuard(ToricError):
    exit_code = 4


class DimensionMismatch(InvalidInput):
    pass


class NotPrimePower(InvalidInput):
    pass


class ExactnessFailure(InvalidInput):
    pass


class RankDeficient(InvalidInput):
    pass


class OrderMismatch(InvalidInput):
    pass


class NotDiagonal(InvalidInput):
    pass


class TooLarge(Unsupported):
    pass


class TorsionClassGroup(Unsupported):
    pass


class Unbounded(Unsupported):
    """Raised when a graded piece is requested on a non-complete instance."""


class PreconditionUnverified(Unsupported):
    pass


class GuardExceeded(ResourceGuard):
    pass


class SizeGuard(ResourceGuard):
    pass


class DivisionByZero(ToricError, ZeroDivisionError):
    pass


class DlogOfZero(ToricError, ValueError):
    pass
