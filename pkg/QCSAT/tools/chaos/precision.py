"""
Extended-precision reference iteration of the logistic map.

Used to confirm double-precision crossing indices. Arithmetic is decimal with
a configurable number of significant digits; a and x0 are converted exactly
(floats through their shortest repr, so a=3.71 means the decimal 3.71).
"""
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import List, Optional, Union

from ..errors import InputError
from ..settings import get_extended_precision_digits

Number = Union[Fraction, Decimal, float, int, str]

HALF = Decimal(1) / Decimal(2)


def to_decimal(value: Number) -> Decimal:
    """Convert to Decimal under the active context."""
    if isinstance(value, Decimal):
        return +value
    if isinstance(value, float):
        return +Decimal(repr(value))
    if isinstance(value, (int, Rational)):
        q = Fraction(value)
        return Decimal(q.numerator) / Decimal(q.denominator)
    if isinstance(value, str):
        if "/" in value:
            return to_decimal(Fraction(value))
        return +Decimal(value)
    raise InputError(f"cannot convert {value!r} to Decimal")


def iterate_map_extended(x0: Number, a: Number, max_steps: int, digits: Optional[int] = None) -> List[Decimal]:
    """g^m(x0) for m = 0..max_steps with `digits` significant digits."""
    if digits is None:
        digits = get_extended_precision_digits()
    if digits < 17:
        raise InputError(f"extended precision needs at least 17 digits, got {digits}")

    with localcontext() as ctx:
        ctx.prec = digits
        x = to_decimal(x0)
        a_dec = to_decimal(a)
        if not 0 <= x <= 1:
            raise InputError(f"x0 must lie in [0, 1], got {x}")
        if not 0 <= a_dec <= 4:
            raise InputError(f"logistic parameter a must lie in [0, 4], got {a_dec}")
        values = [x]
        for _ in range(max_steps):
            x = a_dec * x * (1 - x)
            values.append(x)
    return values


def find_first_crossing_extended(
    x0: Number, a: Number, max_steps: int, digits: Optional[int] = None
) -> Optional[int]:
    """Least m <= max_steps with g^m(x0) > 1/2 in extended precision, or None."""
    for m, value in enumerate(iterate_map_extended(x0, a, max_steps, digits)):
        if value > HALF:
            return m
    return None
