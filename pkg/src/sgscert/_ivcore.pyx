# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled interval kernel: bit-identical twin of ``sgscert._ivpure``.

Same semantics, same outward-rounding realization (exact error terms for
add/sub/mul via C fma, 1-ulp steps for div/sqrt, documented ulp margins
for libm functions).  See _ivpure for the full contract; the parity test
suite asserts endpoint-identical behavior of the two twins.
"""

from libc.math cimport (
    INFINITY,
    cosh as c_cosh,
    exp as c_exp,
    expm1 as c_expm1,
    fabs,
    fma,
    isfinite,
    isinf,
    log as c_log,
    log1p as c_log1p,
    nextafter,
    sinh as c_sinh,
    sqrt as c_sqrt,
)

from ._ivpure import BACKEND as _PURE_BACKEND  # noqa: F401 (import side effect free)
from ._ivpure import DomainError, IntervalError, IntervalOverflowError

BACKEND = "compiled"

cdef double _SPLIT_MAX = 2.0 ** 996
cdef double _TINY = 2.0 ** -1000
cdef int _EXP_ULPS = 2
cdef int _LOG_ULPS = 2
cdef int _COSH_ULPS = 3
cdef int _SINH_ULPS = 3


cdef inline double _down(double x):
    return nextafter(x, -INFINITY)


cdef inline double _up(double x):
    return nextafter(x, INFINITY)


cdef inline double _down_k(double x, int k):
    cdef int i
    for i in range(k):
        x = nextafter(x, -INFINITY)
    return x


cdef inline double _up_k(double x, int k):
    cdef int i
    for i in range(k):
        x = nextafter(x, INFINITY)
    return x


cdef inline double _add_down(double a, double b):
    cdef double s = a + b
    cdef double bv, err
    if isinf(s):
        return s if s < 0 else nextafter(INFINITY, 0.0)
    bv = s - a
    err = (a - (s - bv)) + (b - bv)
    return _down(s) if err < 0.0 else s


cdef inline double _add_up(double a, double b):
    cdef double s = a + b
    cdef double bv, err
    if isinf(s):
        return s if s > 0 else -nextafter(INFINITY, 0.0)
    bv = s - a
    err = (a - (s - bv)) + (b - bv)
    return _up(s) if err > 0.0 else s


cdef inline double _mul_down(double a, double b):
    cdef double p, err
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if isinf(p) or fabs(a) > _SPLIT_MAX or fabs(b) > _SPLIT_MAX:
        return _down(p)
    if fabs(p) < _TINY:
        return -_TINY if p == 0.0 else _down(p)
    err = fma(a, b, -p)
    return _down(p) if err < 0.0 else p


cdef inline double _mul_up(double a, double b):
    cdef double p, err
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if isinf(p) or fabs(a) > _SPLIT_MAX or fabs(b) > _SPLIT_MAX:
        return _up(p)
    if fabs(p) < _TINY:
        return _TINY if p == 0.0 else _up(p)
    err = fma(a, b, -p)
    return _up(p) if err > 0.0 else p


cdef inline double _min4(double a, double b, double c, double d):
    cdef double m = a
    if b < m: m = b
    if c < m: m = c
    if d < m: m = d
    return m


cdef inline double _max4(double a, double b, double c, double d):
    cdef double m = a
    if b > m: m = b
    if c > m: m = c
    if d > m: m = d
    return m


cdef Interval _new(double lo, double hi):
    cdef Interval r = Interval.__new__(Interval)
    if not (isfinite(lo) and isfinite(hi)):
        raise IntervalOverflowError(
            f"non-finite interval endpoints [{lo!r}, {hi!r}]"
        )
    if lo > hi:
        raise DomainError(f"reversed interval endpoints [{lo!r}, {hi!r}]")
    r.lo = lo
    r.hi = hi
    return r


cdef bint _lift(object x, double* lo, double* hi) except -1:
    cdef Interval iv
    if type(x) is Interval:
        iv = <Interval> x
        lo[0] = iv.lo
        hi[0] = iv.hi
        return True
    if isinstance(x, float):
        lo[0] = <double> x
        hi[0] = lo[0]
        return True
    if isinstance(x, int):
        lo[0] = <double> x
        hi[0] = lo[0]
        if lo[0] != x:
            raise DomainError(f"integer {x} is not exactly representable")
        return True
    if isinstance(x, Interval):
        iv = <Interval> x
        lo[0] = iv.lo
        hi[0] = iv.hi
        return True
    return False


cdef class Interval:
    """Closed interval with guaranteed-containment arithmetic."""

    cdef readonly double lo
    cdef readonly double hi

    def __init__(self, lo, hi):
        cdef double flo = <double> lo
        cdef double fhi = <double> hi
        if not (isfinite(flo) and isfinite(fhi)):
            raise IntervalOverflowError(
                f"non-finite interval endpoints [{flo!r}, {fhi!r}]"
            )
        if flo > fhi:
            raise DomainError(f"reversed interval endpoints [{flo!r}, {fhi!r}]")
        self.lo = flo
        self.hi = fhi

    # -- basic queries --------------------------------------------------

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        cdef double m = 0.5 * (self.lo + self.hi)
        if not isfinite(m):
            m = 0.5 * self.lo + 0.5 * self.hi
        if m < self.lo:
            m = self.lo
        if m > self.hi:
            m = self.hi
        return m

    @property
    def mag(self):
        return max(fabs(self.lo), fabs(self.hi))

    @property
    def mig(self):
        if self.lo > 0.0:
            return self.lo
        if self.hi < 0.0:
            return -self.hi
        return 0.0

    def is_point(self):
        return self.lo == self.hi

    def contains(self, x):
        if isinstance(x, Interval):
            return self.lo <= (<Interval> x).lo and (<Interval> x).hi <= self.hi
        return self.lo <= x <= self.hi

    def intersects(self, Interval other):
        return self.lo <= other.hi and other.lo <= self.hi

    def __eq__(self, other):
        if isinstance(other, Interval):
            return self.lo == (<Interval> other).lo and self.hi == (<Interval> other).hi
        return NotImplemented

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"

    def __str__(self):
        return f"[{self.lo!r}, {self.hi!r}]"

    def __reduce__(self):
        return (Interval, (self.lo, self.hi))

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        return _new(-self.hi, -self.lo)

    def __abs__(self):
        if self.lo >= 0.0:
            return self
        if self.hi <= 0.0:
            return _new(-self.hi, -self.lo)
        return _new(0.0, max(-self.lo, self.hi))

    def __add__(self, other):
        cdef double olo, ohi
        if not _lift(other, &olo, &ohi):
            return NotImplemented
        return _new(_add_down(self.lo, olo), _add_up(self.hi, ohi))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef double olo, ohi
        if not _lift(other, &olo, &ohi):
            return NotImplemented
        return _new(_add_down(self.lo, -ohi), _add_up(self.hi, -olo))

    def __rsub__(self, other):
        cdef double olo, ohi
        if not _lift(other, &olo, &ohi):
            return NotImplemented
        return _new(_add_down(olo, -self.hi), _add_up(ohi, -self.lo))

    def __mul__(self, other):
        cdef double c, d
        if not _lift(other, &c, &d):
            return NotImplemented
        cdef double a = self.lo, b = self.hi
        return _new(
            _min4(_mul_down(a, c), _mul_down(a, d), _mul_down(b, c), _mul_down(b, d)),
            _max4(_mul_up(a, c), _mul_up(a, d), _mul_up(b, c), _mul_up(b, d)),
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        cdef double c, d
        if not _lift(other, &c, &d):
            return NotImplemented
        if c <= 0.0 <= d:
            raise DomainError(
                f"division by interval containing zero: [{c!r}, {d!r}]"
            )
        cdef double a = self.lo, b = self.hi
        return _new(
            _min4(_down(a / c), _down(a / d), _down(b / c), _down(b / d)),
            _max4(_up(a / c), _up(a / d), _up(b / c), _up(b / d)),
        )

    def __rtruediv__(self, other):
        cdef double olo, ohi
        if not _lift(other, &olo, &ohi):
            return NotImplemented
        if self.lo <= 0.0 <= self.hi:
            raise DomainError(f"division by interval containing zero: {self}")
        cdef double a = olo, b = ohi, c = self.lo, d = self.hi
        return _new(
            _min4(_down(a / c), _down(a / d), _down(b / c), _down(b / d)),
            _max4(_up(a / c), _up(a / d), _up(b / c), _up(b / d)),
        )

    def __pow__(self, n, mod):
        if mod is not None or not isinstance(n, int) or n < 0:
            return NotImplemented
        cdef long k = n
        if k == 0:
            return _new(1.0, 1.0)
        r = None
        base = self
        while k:
            if k & 1:
                r = base if r is None else r * base
            k >>= 1
            if k:
                base = base.sqr()
        return r

    cpdef Interval sqr(self):
        """x**2 without the dependency blow-up of self*self."""
        cdef double a = self.lo, b = self.hi
        if a >= 0.0:
            return _new(_mul_down(a, a), _mul_up(b, b))
        if b <= 0.0:
            return _new(_mul_down(b, b), _mul_up(a, a))
        return _new(0.0, max(_mul_up(a, a), _mul_up(b, b)))

    # -- elementary functions --------------------------------------------

    cpdef Interval sqrt(self):
        if self.lo < 0.0:
            raise DomainError(f"sqrt of interval with negative part: {self}")
        cdef double lo = _down(c_sqrt(self.lo))
        if lo < 0.0:
            lo = 0.0
        return _new(lo, _up(c_sqrt(self.hi)))

    cpdef Interval exp(self):
        cdef double lo = _down_k(c_exp(self.lo), _EXP_ULPS)
        cdef double hi = c_exp(self.hi)
        if lo < 0.0:
            lo = 0.0
        if isinf(hi):
            raise IntervalOverflowError(f"exp overflow on {self}")
        return _new(lo, _up_k(hi, _EXP_ULPS))

    cpdef Interval expm1(self):
        cdef double lo = _down_k(c_expm1(self.lo), _EXP_ULPS)
        cdef double hi = c_expm1(self.hi)
        if lo < -1.0:
            lo = -1.0
        if isinf(hi):
            raise IntervalOverflowError(f"expm1 overflow on {self}")
        return _new(lo, _up_k(hi, _EXP_ULPS))

    cpdef Interval ln(self):
        if self.lo <= 0.0:
            raise DomainError(f"ln of interval reaching 0 or below: {self}")
        return _new(
            _down_k(c_log(self.lo), _LOG_ULPS), _up_k(c_log(self.hi), _LOG_ULPS)
        )

    cpdef Interval log1p(self):
        if self.lo <= -1.0:
            raise DomainError(f"log1p of interval reaching -1 or below: {self}")
        return _new(
            _down_k(c_log1p(self.lo), _LOG_ULPS),
            _up_k(c_log1p(self.hi), _LOG_ULPS),
        )

    cpdef Interval cosh(self):
        cdef double ca = c_cosh(self.lo)
        cdef double cb = c_cosh(self.hi)
        cdef double lo, hi
        if isinf(ca) or isinf(cb):
            raise IntervalOverflowError(f"cosh overflow on {self}")
        if self.lo <= 0.0 <= self.hi:
            lo = 1.0
        else:
            lo = _down_k(min(ca, cb), _COSH_ULPS)
            if lo < 1.0:
                lo = 1.0
        hi = _up_k(max(ca, cb), _COSH_ULPS)
        return _new(lo, hi)

    cpdef Interval sinh(self):
        cdef double sa = c_sinh(self.lo)
        cdef double sb = c_sinh(self.hi)
        if isinf(sa) or isinf(sb):
            raise IntervalOverflowError(f"sinh overflow on {self}")
        return _new(_down_k(sa, _SINH_ULPS), _up_k(sb, _SINH_ULPS))

    cpdef Interval arcosh(self):
        if self.lo < 1.0:
            raise DomainError(f"arcosh of interval reaching below 1: {self}")
        y = self - 1.0
        r = (y + (y * (y + 2.0)).sqrt()).log1p()
        cdef double lo = (<Interval> r).lo
        if lo < 0.0:
            lo = 0.0
        return _new(lo, (<Interval> r).hi)
