"""Exception hierarchy.

Every error raised by the package derives from :class:`MincodeError`.  The
``exit_code`` attribute is what the command-line front end returns when the
error escapes a subcommand: 2 for a violated precondition of a construction,
3 for an enumeration that would exceed the configured cap, 1 otherwise.
"""

from __future__ import annotations

from fractions import Fraction


class MincodeError(Exception):
    exit_code = 1


class PreconditionFailed(MincodeError):
    exit_code = 2


class ResourceLimit(MincodeError):
    exit_code = 3


# -- fields -----------------------------------------------------------------


class NotAPrimePower(MincodeError, ValueError):
    def __init__(self, q: int):
        super().__init__(f"{q} is not a prime power")
        self.q = q


class UnsupportedOrder(MincodeError, ValueError):
    def __init__(self, q: int):
        super().__init__(f"no canonical modulus registered for GF({q})")
        self.q = q


class DivisionByZero(MincodeError, ZeroDivisionError):
    pass


# -- linear algebra and codes -----------------------------------------------


class DimensionMismatch(MincodeError, ValueError):
    pass


class RankDeficient(MincodeError, ValueError):
    def __init__(self, rank: int, rows: int):
        super().__init__(f"generator matrix has rank {rank} < {rows} rows")
        self.rank = rank
        self.rows = rows


class EnumerationTooLarge(ResourceLimit):
    def __init__(self, size: int, cap: int):
        super().__init__(f"enumeration of {size} messages exceeds cap {cap}")
        self.size = size
        self.cap = cap


class WrongCharacteristic(PreconditionFailed):
    pass


class DimensionTooSmall(PreconditionFailed):
    pass


class NotACodeword(MincodeError, ValueError):
    pass


class ZeroCodeword(MincodeError, ValueError):
    pass


# -- constructions ----------------------------------------------------------


class LengthTooSmall(PreconditionFailed):
    pass


class InvalidProfile(PreconditionFailed):
    pass


class NotProjective(PreconditionFailed):
    pass


class ColumnNotFound(MincodeError):
    pass


class ABConditionFails(PreconditionFailed):
    def __init__(self, ratio: Fraction, q: int, reason: str = ""):
        msg = (
            f"Ashikhmin-Barg condition fails: w_min/w_max = {ratio.numerator}/{ratio.denominator}"
            f" <= {q - 1}/{q}"
        )
        if reason:
            msg += f" ({reason})"
        super().__init__(msg)
        self.ratio = ratio
        self.q = q


class BadValuesLength(MincodeError, ValueError):
    pass


class NotSelfOrthogonal(PreconditionFailed):
    pass


class PaddingExhausted(PreconditionFailed):
    pass


class UnsupportedDegree(MincodeError, ValueError):
    pass


class InconsistentInputs(MincodeError, ValueError):
    pass


class UnknownFamily(MincodeError, KeyError):
    def __str__(self) -> str:  # KeyError repr-quotes its message otherwise
        return str(self.args[0]) if self.args else ""


class ConstraintViolated(PreconditionFailed):
    pass


# -- file formats -----------------------------------------------------------


class MatrixFileError(MincodeError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
