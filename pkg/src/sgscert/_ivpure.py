"""Pure-Python interval kernel.

Closed finite intervals [lo, hi] of binary64 endpoints with guaranteed
containment: for every operation f and points x in X, y in Y, the real
f(x, y) lies in f(X, Y).

Rounding realization (no FPU mode switching, reentrant by construction):

* add/sub/mul use an exact error term (Knuth two-sum, Dekker two-product)
  to round each endpoint in the correct direction; results are tight
  (exact operations do not widen at all).
* div and sqrt rely on IEEE-754 correct rounding of the scalar core and
  step one ulp outward per endpoint.
* exp/expm1/ln/log1p/cosh/sinh evaluate the libm scalar at the endpoints
  and step outward by a per-function ulp margin that dominates the
  documented libm error bound (see _ULPS below); the margins are
  empirically validated by the containment fuzz suite.
* arcosh is composed from the primitives above as log1p(y + sqrt(y*(y+2)))
  with y = x-1, which stays accurate near the x=1 branch point.

Domain violations raise DomainError; overflow to non-finite endpoints
raises IntervalOverflowError. No NaN or infinite interval ever escapes.

This module is the reference twin of the compiled kernel ``_ivcore``;
both must produce bit-identical endpoints (see the parity tests).
"""

from __future__ import annotations

import math

__all__ = [
    "Interval",
    "IntervalError",
    "DomainError",
    "IntervalOverflowError",
    "BACKEND",
]

BACKEND = "pure"

_INF = math.inf

# Outward ulp margins for libm-backed functions.  glibc documents max
# errors of 1 ulp (exp, log, expm1, log1p) and 2 ulp (cosh, sinh); one
# extra ulp of headroom is added on top.
_EXP_ULPS = 2
_LOG_ULPS = 2
_COSH_ULPS = 3
_SINH_ULPS = 3

# |x| above this cannot be Dekker-split without overflow; |product| below
# the subnormal threshold loses the exact error term.  Outside the safe
# window we fall back to plain 1-ulp outward widening.
_SPLIT_MAX = 2.0**996
_TINY = 2.0**-1000


class IntervalError(ArithmeticError):
    """Base class for interval kernel failures."""


class DomainError(IntervalError):
    """Operand outside the mathematical domain of the operation."""


class IntervalOverflowError(IntervalError):
    """Result endpoint left the finite binary64 range."""


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _down_k(x: float, k: int) -> float:
    for _ in range(k):
        x = math.nextafter(x, -_INF)
    return x


def _up_k(x: float, k: int) -> float:
    for _ in range(k):
        x = math.nextafter(x, _INF)
    return x


def _two_sum(a: float, b: float) -> tuple[float, float]:
    # Knuth: s + err == a + b exactly (s finite).
    s = a + b
    bv = s - a
    err = (a - (s - bv)) + (b - bv)
    return s, err


def _split(a: float) -> tuple[float, float]:
    # Dekker split: a == hi + lo with 26-bit halves.
    c = 134217729.0 * a  # 2**27 + 1
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> tuple[float, float]:
    # p + err == a * b exactly, provided the split does not overflow and
    # p is comfortably normal (checked by callers).
    p = a * b
    ahi, alo = _split(a)
    bhi, blo = _split(b)
    err = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, err


def _add_down(a: float, b: float) -> float:
    s, err = _two_sum(a, b)
    if math.isinf(s):
        return s if s < 0 else math.nextafter(_INF, 0.0)
    return _down(s) if err < 0.0 else s


def _add_up(a: float, b: float) -> float:
    s, err = _two_sum(a, b)
    if math.isinf(s):
        return s if s > 0 else -math.nextafter(_INF, 0.0)
    return _up(s) if err > 0.0 else s


def _mul_down(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p) or abs(a) > _SPLIT_MAX or abs(b) > _SPLIT_MAX:
        return _down(p)
    if abs(p) < _TINY:
        # Underflow range: the exact error term is unreliable here.
        return -_TINY if p == 0.0 else _down(p)
    _, err = _two_prod(a, b)
    return _down(p) if err < 0.0 else p


def _mul_up(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if math.isinf(p) or abs(a) > _SPLIT_MAX or abs(b) > _SPLIT_MAX:
        return _up(p)
    if abs(p) < _TINY:
        return _TINY if p == 0.0 else _up(p)
    _, err = _two_prod(a, b)
    return _up(p) if err > 0.0 else p


class Interval:
    """Closed interval with guaranteed-containment arithmetic."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise IntervalOverflowError(
                f"non-finite interval endpoints [{lo!r}, {hi!r}]"
            )
        if lo > hi:
            raise DomainError(f"reversed interval endpoints [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    def __setattr__(self, name, value):
        raise AttributeError("Interval is immutable")

    # -- basic queries --------------------------------------------------

    @property
    def width(self) -> float:
        """Upper bound on hi - lo (plain float, diagnostic only)."""
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        m = 0.5 * (self.lo + self.hi)
        if not math.isfinite(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def mag(self) -> float:
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    @property
    def mig(self) -> float:
        """min |x| over the interval (0 if it straddles zero)."""
        if self.lo > 0.0:
            return self.lo
        if self.hi < 0.0:
            return -self.hi
        return 0.0

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __eq__(self, other) -> bool:
        # Structural endpoint equality, not set comparison.
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"

    def __reduce__(self):
        return (Interval, (self.lo, self.hi))

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _lift(x):
        if isinstance(x, Interval):
            return x
        if isinstance(x, float):
            return Interval(x, x)
        if isinstance(x, int):
            f = float(x)
            if f != x:
                raise DomainError(f"integer {x} is not exactly representable")
            return Interval(f, f)
        return None

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __abs__(self) -> "Interval":
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return Interval(-self.hi, -self.lo)
        return Interval(0.0, max(-self.lo, self.hi))

    def __add__(self, other):
        o = Interval._lift(other)
        if o is None:
            return NotImplemented
        return Interval(_add_down(self.lo, o.lo), _add_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other):
        o = Interval._lift(other)
        if o is None:
            return NotImplemented
        return Interval(_add_down(self.lo, -o.hi), _add_up(self.hi, -o.lo))

    def __rsub__(self, other):
        o = Interval._lift(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __mul__(self, other):
        o = Interval._lift(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        lo = min(_mul_down(a, c), _mul_down(a, d), _mul_down(b, c), _mul_down(b, d))
        hi = max(_mul_up(a, c), _mul_up(a, d), _mul_up(b, c), _mul_up(b, d))
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Interval._lift(other)
        if o is None:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise DomainError(f"division by interval containing zero: {o}")
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        lo = min(_down(a / c), _down(a / d), _down(b / c), _down(b / d))
        hi = max(_up(a / c), _up(a / d), _up(b / c), _up(b / d))
        return Interval(lo, hi)

    def __rtruediv__(self, other):
        o = Interval._lift(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        if n == 0:
            return Interval(1.0, 1.0)
        r = None
        base = self
        k = n
        while k:
            if k & 1:
                r = base if r is None else r * base
            k >>= 1
            if k:
                base = base.sqr()
        return r

    def sqr(self) -> "Interval":
        """x**2 without the dependency blow-up of self*self."""
        a, b = self.lo, self.hi
        if a >= 0.0:
            return Interval(_mul_down(a, a), _mul_up(b, b))
        if b <= 0.0:
            return Interval(_mul_down(b, b), _mul_up(a, a))
        return Interval(0.0, max(_mul_up(a, a), _mul_up(b, b)))

    # -- elementary functions ---------------------------------------------

    def sqrt(self) -> "Interval":
        if self.lo < 0.0:
            raise DomainError(f"sqrt of interval with negative part: {self}")
        lo = max(_down(math.sqrt(self.lo)), 0.0)
        hi = _up(math.sqrt(self.hi))
        return Interval(lo, hi)

    def exp(self) -> "Interval":
        lo = max(_down_k(math.exp(self.lo), _EXP_ULPS), 0.0)
        try:
            h = math.exp(self.hi)
        except OverflowError as exc:
            raise IntervalOverflowError(f"exp overflow on {self}") from exc
        return Interval(lo, _up_k(h, _EXP_ULPS))

    def expm1(self) -> "Interval":
        lo = max(_down_k(math.expm1(self.lo), _EXP_ULPS), -1.0)
        try:
            h = math.expm1(self.hi)
        except OverflowError as exc:
            raise IntervalOverflowError(f"expm1 overflow on {self}") from exc
        return Interval(lo, _up_k(h, _EXP_ULPS))

    def ln(self) -> "Interval":
        if self.lo <= 0.0:
            raise DomainError(f"ln of interval reaching 0 or below: {self}")
        return Interval(
            _down_k(math.log(self.lo), _LOG_ULPS),
            _up_k(math.log(self.hi), _LOG_ULPS),
        )

    def log1p(self) -> "Interval":
        if self.lo <= -1.0:
            raise DomainError(f"log1p of interval reaching -1 or below: {self}")
        return Interval(
            _down_k(math.log1p(self.lo), _LOG_ULPS),
            _up_k(math.log1p(self.hi), _LOG_ULPS),
        )

    def cosh(self) -> "Interval":
        try:
            ca = math.cosh(self.lo)
            cb = math.cosh(self.hi)
        except OverflowError as exc:
            raise IntervalOverflowError(f"cosh overflow on {self}") from exc
        if self.lo <= 0.0 <= self.hi:
            lo = 1.0
        else:
            lo = max(_down_k(min(ca, cb), _COSH_ULPS), 1.0)
        return Interval(lo, _up_k(max(ca, cb), _COSH_ULPS))

    def sinh(self) -> "Interval":
        try:
            sa = math.sinh(self.lo)
            sb = math.sinh(self.hi)
        except OverflowError as exc:
            raise IntervalOverflowError(f"sinh overflow on {self}") from exc
        return Interval(_down_k(sa, _SINH_ULPS), _up_k(sb, _SINH_ULPS))

    def arcosh(self) -> "Interval":
        if self.lo < 1.0:
            raise DomainError(f"arcosh of interval reaching below 1: {self}")
        y = self - 1.0
        r = (y + (y * (y + 2.0)).sqrt()).log1p()
        return Interval(max(r.lo, 0.0), r.hi)
