"""Exact rational helpers shared by every recursion.

Values are plain :class:`fractions.Fraction` objects (or ``int`` where a
result is known to be integral); this module only adds the binomial
convention, guarded division and the text form used by the cache.
"""

from fractions import Fraction
from math import comb

__all__ = [
    "Fraction",
    "SchedulingError",
    "IntegralityError",
    "binom",
    "exact_div",
    "assert_integral",
    "to_text",
    "from_text",
    "pow2",
]


class SchedulingError(RuntimeError):
    """A recursion was applied outside the range where it is valid."""


class IntegralityError(ValueError):
    """A value expected to be an integer has a nontrivial denominator."""


def binom(n, k):
    """Binomial coefficient, 0 when ``k`` lies outside ``[0, n]``.

    A negative upper argument means a dispatcher picked a relation it
    should not have, so it is reported instead of being treated as 0.
    """
    if n < 0:
        raise SchedulingError("binomial with negative top: binom(%d, %d)" % (n, k))
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def exact_div(num, den, recursion="", key=""):
    if den == 0:
        raise SchedulingError(
            "zero leading coefficient in %s while computing %s" % (recursion or "?", key or "?"))
    q = Fraction(num) / Fraction(den)
    return q


def assert_integral(value, key=""):
    value = Fraction(value)
    if value.denominator != 1:
        raise IntegralityError("non-integral value %s for %s" % (to_text(value), key or "?"))
    return value.numerator


def pow2(e):
    """2**e as an exact rational; ``e`` may be negative."""
    return Fraction(1 << e) if e >= 0 else Fraction(1, 1 << -e)


def to_text(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def from_text(text):
    text = text.strip()
    if "/" in text:
        p, q = text.split("/")
        q = int(q)
        if q <= 0:
            raise ValueError("bad denominator in %r" % text)
        return Fraction(int(p), q)
    return Fraction(int(text))
