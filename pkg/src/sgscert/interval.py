"""Interval kernel facade.

Selects the compiled kernel (``sgscert._ivcore``, Cython) when it was
built, otherwise the pure-Python twin ``sgscert._ivpure``.  Setting the
environment variable ``SGSCERT_PURE=1`` forces the pure twin.  Both twins
implement identical semantics and produce bit-identical endpoints.

On top of the selected kernel this module provides construction from
decimal literals (outward-enclosed), sign verdicts, hulls and the
module-level elementary functions used throughout the package.
"""

from __future__ import annotations

import enum
import os
from decimal import Decimal
from fractions import Fraction

if os.environ.get("SGSCERT_PURE") == "1":
    from ._ivpure import (  # noqa: F401
        BACKEND,
        DomainError,
        Interval,
        IntervalError,
        IntervalOverflowError,
    )
else:
    try:
        from ._ivcore import (  # type: ignore # noqa: F401
            BACKEND,
            DomainError,
            Interval,
            IntervalError,
            IntervalOverflowError,
        )
    except ImportError:
        from ._ivpure import (  # noqa: F401
            BACKEND,
            DomainError,
            Interval,
            IntervalError,
            IntervalOverflowError,
        )

__all__ = [
    "BACKEND",
    "Interval",
    "IntervalError",
    "DomainError",
    "IntervalOverflowError",
    "Verdict",
    "make",
    "to_interval",
    "point",
    "hull",
    "intersection",
    "sign_verdict",
    "sqrt",
    "exp",
    "expm1",
    "ln",
    "log1p",
    "cosh",
    "sinh",
    "arcosh",
    "sqr",
]

import math


class Verdict(enum.Enum):
    """Guaranteed sign classification of an enclosure."""

    NEGATIVE = "negative"
    POSITIVE = "positive"
    CONTAINS_ZERO = "contains_zero"


def sign_verdict(x: Interval) -> Verdict:
    """Negative iff sup < 0, Positive iff inf > 0, else ContainsZero."""
    if x.hi < 0.0:
        return Verdict.NEGATIVE
    if x.lo > 0.0:
        return Verdict.POSITIVE
    return Verdict.CONTAINS_ZERO


def _fraction_down(f: Fraction) -> float:
    r = float(f)
    if math.isinf(r):
        raise IntervalOverflowError(f"value {f} overflows binary64")
    return r if Fraction(r) <= f else math.nextafter(r, -math.inf)


def _fraction_up(f: Fraction) -> float:
    r = float(f)
    if math.isinf(r):
        raise IntervalOverflowError(f"value {f} overflows binary64")
    return r if Fraction(r) >= f else math.nextafter(r, math.inf)


def _as_fraction(x) -> Fraction:
    if isinstance(x, str):
        try:
            return Fraction(Decimal(x))
        except ArithmeticError as exc:
            raise DomainError(f"cannot parse decimal literal {x!r}") from exc
    if isinstance(x, (Decimal, Fraction, int)):
        return Fraction(x)
    raise DomainError(f"unsupported endpoint type {type(x).__name__}")


def make(lo, hi=None) -> Interval:
    """Build an interval from endpoints.

    float/int endpoints are taken as exact binary64 values; str, Decimal
    and Fraction endpoints denote exact reals and are rounded outward, so
    e.g. ``make("0.1", "0.1")`` is a 1-ulp interval containing 1/10.
    """
    if hi is None:
        hi = lo
    if isinstance(lo, float) and isinstance(hi, float):
        return Interval(lo, hi)
    flo = float(lo) if isinstance(lo, (float, int)) else _fraction_down(_as_fraction(lo))
    fhi = float(hi) if isinstance(hi, (float, int)) else _fraction_up(_as_fraction(hi))
    return Interval(flo, fhi)


def to_interval(x) -> Interval:
    """Lift a scalar (exact float/int or decimal literal) to an interval."""
    if isinstance(x, Interval):
        return x
    return make(x)


def point(x: float) -> Interval:
    return Interval(x, x)


def hull(*xs) -> Interval:
    """Smallest interval containing all arguments (intervals or floats)."""
    lo = math.inf
    hi = -math.inf
    for x in xs:
        if isinstance(x, Interval):
            lo = min(lo, x.lo)
            hi = max(hi, x.hi)
        else:
            lo = min(lo, x)
            hi = max(hi, x)
    return Interval(lo, hi)


def intersection(a: Interval, b: Interval):
    """Intersection of two intervals, or None when disjoint."""
    lo = max(a.lo, b.lo)
    hi = min(a.hi, b.hi)
    if lo > hi:
        return None
    return Interval(lo, hi)


def sqrt(x) -> Interval:
    return to_interval(x).sqrt()


def exp(x) -> Interval:
    return to_interval(x).exp()


def expm1(x) -> Interval:
    return to_interval(x).expm1()


def ln(x) -> Interval:
    return to_interval(x).ln()


def log1p(x) -> Interval:
    return to_interval(x).log1p()


def cosh(x) -> Interval:
    return to_interval(x).cosh()


def sinh(x) -> Interval:
    return to_interval(x).sinh()


def arcosh(x) -> Interval:
    return to_interval(x).arcosh()


def sqr(x) -> Interval:
    return to_interval(x).sqr()
