"""Exception types shared across the package."""

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class ParameterError(ValueError):
    """An argument violates the documented preconditions."""


class RangeError(ParameterError):
    """An argument would not fit the signed 64-bit working range."""


def check_int64(*values: int) -> None:
    for v in values:
        if type(v) is not int and (not isinstance(v, int) or isinstance(v, bool)):
            raise ParameterError(f"expected an integer, got {v!r}")
        if v < INT64_MIN or v > INT64_MAX:
            raise RangeError(f"{v} is outside the signed 64-bit range")
