"""Validated integration of u'' = (V(x) - lambda) u across piecewise
linear (or constant) 1-periodic potentials.

Each step on a linear piece q(x) = q0 + q1 (x - x0) produces an interval
Taylor model: coefficients from the recurrence

    u_{k+2} = (q0 u_k + q1 u_{k-1}) / ((k+2)(k+1)),

plus a Lagrange remainder coefficient obtained by re-running the
recurrence from an a-priori trajectory enclosure (candidate box, inflated
and verified by a Picard containment test; the step is halved when the
test fails).  The models double as range evaluators, so one pass yields
the period map, the Floquet data and queryable mode profiles.

The period map M acts on (u, u'); its true determinant is exactly 1
(no first-derivative term), which floquet() exploits: the multiplier
rho = D/2 + sqrt(D^2/4 - 1) uses det = 1 as a theorem, not the interval
determinant, keeping kappa = ln rho tight near band edges.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass

from .errors import (
    DegenerateParameterError,
    SpectralConditionError,
    StepSizeError,
)
from .interval import Interval, hull, make, to_interval
from .potentials import Potential

__all__ = [
    "StateBox",
    "StepModel",
    "Profile",
    "MonodromyEnclosure",
    "FloquetData",
    "propagate_linear_piece",
    "basis_solutions",
    "monodromy",
    "floquet",
    "BlochModes",
    "bloch_modes",
    "bloch_minus_profile",
]

DEFAULT_ORDER = 16
_H_INIT = 0.1
_H_MIN = 1e-7
_PICARD_ROUNDS = 24

_ZERO = Interval(0.0, 0.0)
_ONE = Interval(1.0, 1.0)


@dataclass(frozen=True)
class StateBox:
    """Enclosure of (u, u') at a point."""

    u: Interval
    du: Interval


@dataclass(frozen=True)
class StepModel:
    """Interval Taylor model of u on [x0, x0+h] (local coordinate t):
    u(x0+t) in sum coeffs[k] t^k + tail * t^(order+1)."""

    x0: float
    h: float
    coeffs: tuple
    tail: Interval

    def range_over(self, w: Interval) -> Interval:
        """Enclosure of u over a window given in local coordinates,
        clipped to [0, h]."""
        t = Interval(min(max(w.lo, 0.0), self.h), min(max(w.hi, 0.0), self.h))
        acc = self.tail
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def _taylor_coeffs(u0: Interval, u1: Interval, q0: Interval, q1: Interval, order: int):
    coeffs = [u0, u1]
    for k in range(order - 1):
        nxt = q0 * coeffs[k]
        if k >= 1:
            nxt = nxt + q1 * coeffs[k - 1]
        coeffs.append(nxt / float((k + 2) * (k + 1)))
    return coeffs


def _inflate(x: Interval, rel: float, absd: float) -> Interval:
    pad = rel * (x.hi - x.lo) + absd
    return Interval(x.lo - pad, x.hi + pad)


def propagate_linear_piece(
    q0: Interval, q1: Interval, h: float, state: StateBox, order: int = DEFAULT_ORDER
):
    """One validated step of u'' = (q0 + q1 t) u over t in [0, h].

    Returns (end_state, step_coeffs, tail); raises StepSizeError when the
    a-priori enclosure cannot be verified at this h (caller halves h).
    """
    if not h > 0.0:
        raise ValueError(f"step width must be positive, got {h}")
    coeffs = _taylor_coeffs(state.u, state.du, q0, q1, order)
    span = Interval(0.0, h)
    q_range = q0 + q1 * span
    # a-priori trajectory enclosure by Picard containment
    bu = _inflate(hull(state.u, state.u + span * state.du), 0.5, 1e-14)
    bv = _inflate(hull(state.du, state.du + span * (q_range * bu)), 0.5, 1e-14)
    verified = False
    for _ in range(_PICARD_ROUNDS):
        nu = state.u + span * bv
        nv = state.du + span * (q_range * bu)
        if bu.contains(nu) and bv.contains(nv):
            bu, bv = nu, nv
            verified = True
            break
        bu = _inflate(hull(bu, nu), 0.3, 1e-14)
        bv = _inflate(hull(bv, nv), 0.3, 1e-14)
    if not verified:
        raise StepSizeError(f"no verified enclosure for step h={h}")
    tail_coeffs = _taylor_coeffs(bu, bv, q_range, q1, order + 1)
    tail = tail_coeffs[order + 1]
    hI = make(h)
    acc_u = tail
    for c in reversed(coeffs):
        acc_u = acc_u * hI + c
    acc_v = float(order + 1) * tail
    for k in range(order, 0, -1):
        acc_v = acc_v * hI + float(k) * coeffs[k]
    end = StateBox(acc_u, acc_v)
    return end, tuple(coeffs), tail


def _segments(p: Potential, lam: Interval):
    """Integration segments over one period: (t0, t1, q_at_t0, q_slope),
    with q = V - lambda.  Interval breakpoints produce sliver segments
    carrying the hull of both neighboring values (constant slope 0)."""
    segs = []
    bounds = [p.pieces[0].x0] + [q.x1 for q in p.pieces]
    for k, piece in enumerate(p.pieces):
        lo_b, hi_b = bounds[k], bounds[k + 1]
        if lo_b.lo < lo_b.hi:
            segs.append(
                (lo_b.lo, lo_b.hi, p.range_over(Interval(lo_b.lo, lo_b.hi)) - lam, _ZERO)
            )
        t0, t1 = lo_b.hi, hi_b.lo
        if t1 <= t0:
            continue
        if piece.v0 == piece.v1:
            slope = _ZERO
            q_at = piece.v0 - lam
        else:
            slope = (piece.v1 - piece.v0) / (piece.x1 - piece.x0)
            q_at = piece.v0 + slope * (make(t0) - piece.x0) - lam
        segs.append((t0, t1, q_at, slope))
    last = bounds[-1]
    if last.lo < last.hi:
        segs.append(
            (last.lo, last.hi, p.range_over(Interval(last.lo, last.hi)) - lam, _ZERO)
        )
    return segs


@dataclass(frozen=True)
class Profile:
    """Queryable solution model over [0, 1]: consecutive step models plus
    the endpoint states."""

    steps: tuple
    starts: tuple
    start: StateBox
    end: StateBox

    def range_over(self, w: Interval) -> Interval:
        """Enclosure of u over a window within [0, 1]."""
        lo = max(w.lo, 0.0)
        hi = min(w.hi, 1.0)
        i = max(bisect_right(self.starts, lo) - 1, 0)
        parts = []
        while i < len(self.steps):
            s = self.steps[i]
            if s.x0 > hi:
                break
            if s.x0 + s.h >= lo:
                parts.append(s.range_over(Interval(lo - s.x0, hi - s.x0)))
            i += 1
        return hull(*parts)

    def combine(self, other: "Profile", c_self: Interval, c_other: Interval) -> "Profile":
        """Linear combination c_self*self + c_other*other (shared mesh)."""
        steps = tuple(
            StepModel(
                a.x0,
                a.h,
                tuple(c_self * ca + c_other * cb for ca, cb in zip(a.coeffs, b.coeffs)),
                c_self * a.tail + c_other * b.tail,
            )
            for a, b in zip(self.steps, other.steps)
        )
        mix = lambda a, b: StateBox(
            c_self * a.u + c_other * b.u, c_self * a.du + c_other * b.du
        )
        return Profile(steps, self.starts, mix(self.start, other.start), mix(self.end, other.end))


@dataclass(frozen=True)
class MonodromyEnclosure:
    """Interval enclosure of the period map on (u, u')."""

    m11: Interval
    m12: Interval
    m21: Interval
    m22: Interval

    @property
    def trace(self) -> Interval:
        return self.m11 + self.m22

    @property
    def det(self) -> Interval:
        return self.m11 * self.m22 - self.m12 * self.m21


@dataclass(frozen=True)
class FloquetData:
    """Multiplier data for trace > 2: rho = e^kappa > 1 belongs to the
    mode growing to +inf (decaying at -inf); sigma = 1/rho to the mode
    decaying at +inf."""

    monodromy: MonodromyEnclosure
    trace: Interval
    rho: Interval
    sigma: Interval
    kappa: Interval
    v_grow: StateBox
    v_decay: StateBox


def basis_solutions(p: Potential, lam, order: int = DEFAULT_ORDER):
    """Integrate the two fundamental solutions (u(0), u'(0)) = (1, 0),
    (0, 1) across one period in lockstep (shared mesh) and return
    (profile1, profile2, monodromy)."""
    lam = to_interval(lam)
    states = [StateBox(_ONE, _ZERO), StateBox(_ZERO, _ONE)]
    steps1, steps2, starts = [], [], []
    for t0, t1, q_at, slope in _segments(p, lam):
        t = t0
        h_try = min(_H_INIT, t1 - t0)
        while t < t1:
            h = min(h_try, t1 - t)
            q_loc = q_at + slope * (make(t) - t0)
            try:
                out = [
                    propagate_linear_piece(q_loc, slope, h, s, order) for s in states
                ]
            except StepSizeError:
                if h <= _H_MIN:
                    raise StepSizeError(
                        f"validated step failed at x={t} even for h={h}"
                    ) from None
                h_try = h / 2.0
                continue
            starts.append(t)
            steps1.append(StepModel(t, h, out[0][1], out[0][2]))
            steps2.append(StepModel(t, h, out[1][1], out[1][2]))
            states = [out[0][0], out[1][0]]
            t = t + h
            h_try = min(_H_INIT, h_try * 2.0)
    e1, e2 = states
    prof1 = Profile(tuple(steps1), tuple(starts), StateBox(_ONE, _ZERO), e1)
    prof2 = Profile(tuple(steps2), tuple(starts), StateBox(_ZERO, _ONE), e2)
    mono = MonodromyEnclosure(e1.u, e2.u, e1.du, e2.du)
    return prof1, prof2, mono


def monodromy(p: Potential, lam, order: int = DEFAULT_ORDER) -> MonodromyEnclosure:
    """Enclosure of the period map; det contains 1 (Liouville)."""
    return basis_solutions(p, lam, order)[2]


def floquet(m: MonodromyEnclosure) -> FloquetData:
    """Multipliers and eigenvector enclosures from the period map, using
    det = 1 exactly."""
    d = m.trace
    if d.lo <= 2.0:
        raise SpectralConditionError(
            f"monodromy trace {d} not verifiably > 2; spectral parameter "
            "is not verifiably below the spectrum"
        )
    half = d / 2.0
    disc = half.sqr() - 1.0
    if disc.lo < 0.0:
        disc = Interval(0.0, disc.hi)
    rho = half + disc.sqrt()
    sigma = 1.0 / rho
    kappa = rho.ln()
    v_grow = _eigenvector(m, rho)
    v_decay = _eigenvector(m, sigma)
    return FloquetData(m, d, rho, sigma, kappa, v_grow, v_decay)


def _eigenvector(m: MonodromyEnclosure, mu: Interval) -> StateBox:
    """Eigenvector enclosure for eigenvalue mu, scaled so the first
    sure-nonzero component is 1: (1, (mu-m11)/m12) or (1, m21/(mu-m22)),
    whichever denominator has the larger guaranteed magnitude."""
    den_a = m.m12
    den_b = mu - m.m22
    mig_a, mig_b = den_a.mig, den_b.mig
    if mig_a == 0.0 and mig_b == 0.0:
        raise DegenerateParameterError(
            f"both eigenvector candidates degenerate (m12={den_a}, mu-m22={den_b})"
        )
    if mig_a >= mig_b:
        return StateBox(_ONE, (mu - m.m11) / den_a)
    return StateBox(_ONE, m.m21 / den_b)


class _ShiftedCopies:
    """Evaluator of u over all of R from the cell profile [0,1] and the
    per-period multiplier: u(n + r) = factor^n u(r)."""

    def __init__(self, profile: Profile, factor: Interval, inv_factor: Interval):
        self.profile = profile
        self.factor = factor
        self.inv_factor = inv_factor

    def _multiplier(self, n: int) -> Interval:
        if n == 0:
            return _ONE
        base = self.factor if n > 0 else self.inv_factor
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def copy_boundaries(self, lo: float, hi: float):
        """Step boundaries of all period copies intersecting [lo, hi]."""
        pts = []
        n = math.floor(lo)
        while n < hi:
            for s in self.profile.starts:
                x = n + s
                if lo < x < hi:
                    pts.append(x)
            if lo < n + 1.0 < hi:
                pts.append(n + 1.0)
            n += 1
        return sorted(set(pts))

    def range_over(self, w: Interval) -> Interval:
        if w.hi - w.lo >= 1.0:
            raise ValueError(f"window {w} spans a full period")
        n = math.floor(w.lo)
        lo, hi = w.lo - n, w.hi - n
        parts = [self._multiplier(n) * self.profile.range_over(Interval(lo, min(hi, 1.0)))]
        if hi > 1.0:
            parts.append(
                self._multiplier(n + 1) * self.profile.range_over(Interval(0.0, hi - 1.0))
            )
        return hull(*parts)

    def square_integral(self, w_lo: float, w_hi: float, shift: Interval) -> Interval:
        """Enclosure of the integral of u(x + shift)^2 over [w_lo, w_hi]."""
        total = _ZERO
        if w_hi <= w_lo:
            return total
        # split at preimages of copy/step boundaries (split points need not
        # be exact; exactness is recovered window by window)
        approx = [w_lo, w_hi]
        for b in self.copy_boundaries(w_lo + shift.lo - 1e-9, w_hi + shift.hi + 1e-9):
            x = b - shift.mid
            if w_lo < x < w_hi:
                approx.append(x)
        approx = sorted(set(approx))
        for x1, x2 in zip(approx[:-1], approx[1:]):
            total = total + self._window_square_integral(x1, x2, shift)
        return total

    def _window_square_integral(self, x1: float, x2: float, shift: Interval) -> Interval:
        mapped = Interval(x1, x2) + shift
        n = math.floor(mapped.lo)
        lo, hi = mapped.lo - n, mapped.hi - n
        mult_sq = self._multiplier(n).sqr()
        width = make(x2) - make(x1)
        if hi > 1.0 or not self._single_step(lo, hi):
            # straddles a copy or step boundary (sliver with interval
            # shifts): bound by range^2 * width
            return self.range_over(mapped).sqr() * width
        i = max(bisect_right(self.profile.starts, lo) - 1, 0)
        s = self.profile.steps[i]
        return mult_sq * _model_square_integral(s, make(lo) - s.x0, width)

    def _single_step(self, lo: float, hi: float) -> bool:
        i = max(bisect_right(self.profile.starts, lo) - 1, 0)
        s = self.profile.steps[i]
        return s.x0 <= lo and hi <= s.x0 + s.h


class _ReflectedCopies:
    """View of u(-x) over a _ShiftedCopies evaluator (even-potential
    shortcut for the +inf-decaying mode)."""

    def __init__(self, inner: _ShiftedCopies):
        self.inner = inner

    def copy_boundaries(self, lo: float, hi: float):
        return sorted(-b for b in self.inner.copy_boundaries(-hi, -lo))

    def range_over(self, w: Interval) -> Interval:
        return self.inner.range_over(-w)

    def square_integral(self, w_lo: float, w_hi: float, shift: Interval) -> Interval:
        return self.inner.square_integral(-w_hi, -w_lo, -shift)


def _model_square_integral(s: StepModel, t1: Interval, width: Interval) -> Interval:
    """Exact integral of the squared step model over [t1, t1+width]
    (local coordinates): Taylor-shift to the window, square, integrate."""
    n = len(s.coeffs) - 1
    # tail enclosure over the window as a constant interval
    t_win = Interval(
        min(max(t1.lo, 0.0), s.h), min(max(t1.hi + width.hi, 0.0), s.h)
    )
    tail_pow = make(1.0)
    for _ in range(n + 1):
        tail_pow = tail_pow * t_win
    r = s.tail * tail_pow
    # Taylor shift p(t1 + e) by repeated synthetic division (Horner shift)
    work = list(s.coeffs)
    shifted = []
    for j in range(n + 1):
        acc = work[-1]
        rem = [work[-1]]
        for k in range(len(work) - 2, -1, -1):
            acc = acc * t1 + work[k]
            rem.append(acc)
        shifted.append(acc)
        rem.reverse()
        work = rem[1:]
        if not work:
            break
    # square (convolution), integrate termwise, evaluate at width
    deg = len(shifted) - 1
    sq = [_ZERO] * (2 * deg + 1)
    for i_, ci in enumerate(shifted):
        sq[2 * i_] = sq[2 * i_] + ci.sqr()
        for j_ in range(i_ + 1, deg + 1):
            sq[i_ + j_] = sq[i_ + j_] + 2.0 * (ci * shifted[j_])
    acc = _ZERO
    for k in range(2 * deg, -1, -1):
        acc = acc * width + sq[k] / float(k + 1)
    int_sq = acc * width
    # linear-part integral for the cross term with the tail enclosure
    acc = _ZERO
    for k in range(deg, -1, -1):
        acc = acc * width + shifted[k] / float(k + 1)
    int_p = acc * width
    return int_sq + 2.0 * (r * int_p) + r.sqr() * width


@dataclass(frozen=True)
class BlochModes:
    """Queryable enclosures of both Bloch modes of one potential:
    minus decays at -inf (multiplier rho per period to the right),
    plus decays at +inf (multiplier sigma)."""

    floquet: FloquetData
    minus: object
    plus: object
    reflected: bool


def bloch_modes(
    p: Potential,
    lam,
    order: int = DEFAULT_ORDER,
    initial_minus: StateBox | None = None,
    initial_plus: StateBox | None = None,
    allow_reflection: bool = True,
) -> BlochModes:
    """Build both mode evaluators from one lockstep basis integration.

    For a verified-even potential the +inf mode is the reflection of the
    -inf mode (used unless explicit initial states are given); otherwise
    it is the sigma-eigenvector combination of the basis solutions.
    """
    lam = to_interval(lam)
    prof1, prof2, mono = basis_solutions(p, lam, order)
    fd = floquet(mono)
    vm = initial_minus if initial_minus is not None else fd.v_grow
    prof_minus = prof1.combine(prof2, vm.u, vm.du)
    minus = _ShiftedCopies(prof_minus, fd.rho, fd.sigma)
    use_reflection = (
        allow_reflection
        and initial_minus is None
        and initial_plus is None
        and p.is_verified_even()
    )
    if use_reflection:
        plus = _ReflectedCopies(minus)
    else:
        vp = initial_plus if initial_plus is not None else fd.v_decay
        prof_plus = prof1.combine(prof2, vp.u, vp.du)
        plus = _ShiftedCopies(prof_plus, fd.sigma, fd.rho)
    return BlochModes(fd, minus, plus, use_reflection)


def bloch_minus_profile(p: Potential, lam, x_range, n: int, order: int = DEFAULT_ORDER):
    """Per-subinterval enclosures of the -inf-decaying mode and its
    square over n equal subdivisions of [x_range[0], x_range[1]]."""
    modes = bloch_modes(p, lam, order)
    lo, hi = float(x_range[0]), float(x_range[1])
    out = []
    for k in range(n):
        w = Interval(lo + (hi - lo) * k / n, lo + (hi - lo) * (k + 1) / n)
        u = modes.minus.range_over(w)
        out.append((w, u, u.sqr()))
    return out
