"""Non-validated high-precision reference computations for the test suite.

These oracles generate expected values independently of the certified
code paths: characteristic exponents by bisection on the 4x4 matching
determinant, coefficient vectors by SVD nullspace extraction, monodromy
data by a high-order adaptive Runge-Kutta integrator, and criterion
integrals by exact piecewise-exponential antiderivatives (piecewise
constant case) or adaptive quadrature over dense ODE output (piecewise
linear case).

Everything here is test-tree-only and must never be imported by the
package itself: certification never depends on unvalidated numerics.
"""

from __future__ import annotations

from collections import namedtuple

import numpy as np
from mpmath import mp, mpf, svd_r
from scipy.integrate import quad, solve_ivp

mp.dps = 50

OracleValue = namedtuple("OracleValue", ["value", "claimed_error"])


# ----------------------------------------------------------------------
# Piecewise constant potentials: Bloch data in closed form at high precision
# ----------------------------------------------------------------------


def pwc_matrix(a, b, s, lam, kappa):
    """4x4 matching system for the coefficient vector (C1 joins at x=s,
    Floquet multiplier exp(-kappa) joins the period ends)."""
    a, b, s, lam, kappa = (mpf(v) for v in (a, b, s, lam, kappa))
    al = mp.sqrt(a - lam)
    be = mp.sqrt(b - lam)
    esa = mp.e ** (s * al)
    esb = mp.e ** (s * be)
    eb = mp.e ** be
    ek = mp.e ** (-kappa)
    return mp.matrix(
        [
            [esa, 1 / esa, -esb, -1 / esb],
            [al * esa, -al / esa, -be * esb, be / esb],
            [-ek, -ek, eb, 1 / eb],
            [-al * ek, al * ek, be * eb, -be / eb],
        ]
    )


def oracle_kappa(a, b, s, lam, tol=1e-12):
    """Positive characteristic exponent by bisection on det of the
    matching system; the determinant is quadratic in exp(-kappa) with
    reciprocal roots, so it has exactly one root on (0, inf)."""

    def f(k):
        return mp.det(pwc_matrix(a, b, s, lam, k))

    k_lo = mpf("1e-12")
    k_hi = mpf(1)
    f_lo = f(k_lo)
    while mp.sign(f(k_hi)) == mp.sign(f_lo):
        k_hi *= 2
        if k_hi > 200:
            raise RuntimeError("oracle_kappa: no sign change found")
    target = mpf(tol) * mpf("1e-18")
    while k_hi - k_lo > target:
        k_mid = (k_lo + k_hi) / 2
        if mp.sign(f(k_mid)) == mp.sign(f_lo):
            k_lo = k_mid
        else:
            k_hi = k_mid
    return OracleValue((k_lo + k_hi) / 2, float(k_hi - k_lo))


def oracle_xi_nullspace(a, b, s, lam, kappa, sign=+1):
    """Unit-norm nullspace vector of the matching system at +kappa or
    -kappa, from the smallest singular direction."""
    A = pwc_matrix(a, b, s, lam, mpf(sign) * mpf(kappa))
    U, S, V = svd_r(A)
    v = [V[3, j] for j in range(4)]
    residual = max(abs(sum(A[i, j] * v[j] for j in range(4))) for i in range(4))
    if residual > mpf("1e-30"):
        raise RuntimeError(f"oracle_xi_nullspace: residual {residual}")
    return v


def mp_xi_plus(a, b, s, lam, kappa):
    """Coefficient 4-vector of the multiplier-exp(-kappa) Bloch solution,
    in the same (unnormalized) form the certified closed-form path uses,
    evaluated at oracle precision.  Pass -kappa for the growing mode."""
    a, b, s, lam, kappa = mpf(a), mpf(b), mpf(s), mpf(lam), mpf(kappa)
    al = mp.sqrt(a - lam)
    be = mp.sqrt(b - lam)
    e = mp.e
    xi1 = (
        e ** (-s * al)
        / (2 * (e ** (s * (al + be) - kappa) - e**be))
        * (
            4 * e ** (s * al - kappa) * al * be
            - (al + be) ** 2 * e ** ((s - 1) * be)
            + (al - be) ** 2 * e ** ((1 - s) * be)
        )
    )
    xi2 = (a - b) * mp.sinh((1 - s) * be) / (e ** (s * be - kappa) - e ** (be - s * al))
    xi3 = (
        (a - lam + al * be)
        * (e ** ((al - be) * s - kappa) - e**-be)
        / (e ** ((al + be) * s - kappa) - e**be)
    )
    xi4 = lam - a + al * be
    return [xi1, xi2, xi3, xi4]


class PwcBloch:
    """High-precision evaluator for the two Bloch solutions of a
    piecewise constant cell, extended to all of R by the Floquet
    multiplier relation."""

    def __init__(self, a, b, s, lam):
        self.a, self.b, self.s, self.lam = mpf(a), mpf(b), mpf(s), mpf(lam)
        self.alpha = mp.sqrt(self.a - self.lam)
        self.beta = mp.sqrt(self.b - self.lam)
        self.kappa = mpf(oracle_kappa(a, b, s, lam).value)
        self.xi_plus = mp_xi_plus(a, b, s, lam, self.kappa)
        self.xi_minus = mp_xi_plus(a, b, s, lam, -self.kappa)

    def _cell_value(self, r, xi):
        if r < self.s:
            return xi[0] * mp.e ** (r * self.alpha) + xi[1] * mp.e ** (-r * self.alpha)
        return xi[2] * mp.e ** (r * self.beta) + xi[3] * mp.e ** (-r * self.beta)

    def u(self, y, sign):
        """sign=-1: mode decaying at -inf (multiplier e^kappa);
        sign=+1: mode decaying at +inf (multiplier e^-kappa)."""
        y = mpf(y)
        n = mp.floor(y)
        r = y - n
        xi = self.xi_minus if sign < 0 else self.xi_plus
        mult = mp.e ** (-mpf(sign) * self.kappa * n)
        return mult * self._cell_value(r, xi)

    def int_u_sq(self, y1, y2, sign):
        """Exact integral of u(y)^2 over [y1, y2]; the range must not
        cross a cell breakpoint (multiples of s and 1)."""
        y1, y2 = mpf(y1), mpf(y2)
        n = mp.floor((y1 + y2) / 2)
        r1, r2 = y1 - n, y2 - n
        xi = self.xi_minus if sign < 0 else self.xi_plus
        mult = mp.e ** (-2 * mpf(sign) * self.kappa * n)
        rm = (r1 + r2) / 2
        if rm < self.s:
            A, B, g = xi[0], xi[1], self.alpha
        else:
            A, B, g = xi[2], xi[3], self.beta

        def F(t):
            return (
                A**2 * mp.e ** (2 * g * t) / (2 * g)
                + 2 * A * B * t
                - B**2 * mp.e ** (-2 * g * t) / (2 * g)
            )

        return mult * (F(r2) - F(r1))


def _pwc_value(a, b, s, x):
    r = mpf(x) - mp.floor(mpf(x))
    return mpf(a) if r < mpf(s) else mpf(b)


def _breakpoints(lo, hi, offsets, s):
    """All points in (lo, hi) where a shifted pwc potential (or Bloch
    branch) changes piece: x + off crossing multiples of s and 1."""
    pts = set()
    for off in offsets:
        for level in (mpf(0), mpf(s)):
            k = mp.floor(mpf(lo) + mpf(off) - level)
            while True:
                x = level + k - mpf(off)
                if x >= mpf(hi):
                    break
                if x > mpf(lo):
                    pts.add(x)
                k += 1
    return sorted(pts)


def oracle_integral_pwc_dislocation(a, b, lam, tau, which, s=0.5):
    """Criterion integrals for the dislocation interface built from one
    piecewise constant cell (v1 = V0(. - tau), v2 = V0(. + tau)), by
    exact piecewise-exponential integration.

    which='I1': integral over [-1,0] of (v2-v1) u_minus(x-tau)^2.
    which='I2': integral over [0,1]  of (v1-v2) u_plus(x+tau)^2.
    """
    bloch = PwcBloch(a, b, s, lam)
    tau = mpf(tau)
    if which == "I1":
        lo, hi, sign, shift = mpf(-1), mpf(0), -1, -tau
    else:
        lo, hi, sign, shift = mpf(0), mpf(1), +1, tau
    pts = [lo] + _breakpoints(lo, hi, [tau, -tau], s) + [hi]
    total = mpf(0)
    for x1, x2 in zip(pts[:-1], pts[1:]):
        xm = (x1 + x2) / 2
        if which == "I1":
            c = _pwc_value(a, b, s, xm + tau) - _pwc_value(a, b, s, xm - tau)
        else:
            c = _pwc_value(a, b, s, xm - tau) - _pwc_value(a, b, s, xm + tau)
        if c == 0:
            continue
        total += c * bloch.int_u_sq(x1 + shift, x2 + shift, sign)
    return OracleValue(total, 1e-40)


def oracle_integral_pwc_general(a1, b1, a2, b2, lam, which, s=0.5):
    """Criterion integrals for a general interface of two piecewise
    constant cells (jumps at s), by exact integration.

    which='I1': integral over [-1,0] of (V2-V1) u1_minus^2.
    which='I2': integral over [0,1]  of (V1-V2) u2_plus^2.
    """
    if which == "I1":
        bloch = PwcBloch(a1, b1, s, lam)
        lo, hi, sign = mpf(-1), mpf(0), -1
    else:
        bloch = PwcBloch(a2, b2, s, lam)
        lo, hi, sign = mpf(0), mpf(1), +1
    pts = [lo] + _breakpoints(lo, hi, [mpf(0)], s) + [hi]
    total = mpf(0)
    for x1, x2 in zip(pts[:-1], pts[1:]):
        xm = (x1 + x2) / 2
        diff = _pwc_value(a2, b2, s, xm) - _pwc_value(a1, b1, s, xm)
        if which == "I2":
            diff = -diff
        if diff == 0:
            continue
        total += diff * bloch.int_u_sq(x1, x2, sign)
    return OracleValue(total, 1e-40)


# ----------------------------------------------------------------------
# Generic potentials: high-order adaptive ODE integration (float precision)
# ----------------------------------------------------------------------


def ode_pieces(nodes):
    """[(x0, x1, v0, v1)] linear pieces from an ordered node list."""
    return [
        (x0, x1, v0, v1)
        for (x0, v0), (x1, v1) in zip(nodes[:-1], nodes[1:])
    ]


def _propagate(pieces, lam, y0, rtol=1e-13):
    """Integrate u'' = (V(x)-lam) u across one period, piece by piece, and
    return (final state, list of (x0, x1, dense solution))."""
    state = np.asarray(y0, dtype=float)
    dense = []
    for x0, x1, v0, v1 in pieces:
        slope = (v1 - v0) / (x1 - x0)

        def rhs(x, y, x0=x0, v0=v0, slope=slope):
            q = v0 + slope * (x - x0) - lam
            return [y[1], q * y[0]]

        sol = solve_ivp(
            rhs, (x0, x1), state, method="DOP853",
            rtol=rtol, atol=1e-14, dense_output=True,
        )
        if not sol.success:
            raise RuntimeError(f"oracle ODE failed on piece {(x0, x1)}")
        dense.append((x0, x1, sol.sol))
        state = sol.y[:, -1]
    return state, dense


def oracle_monodromy(nodes, lam):
    """Float period map of (u, u') for the 1-periodic potential given by
    nodes; claimed accuracy ~1e-11 per entry."""
    pieces = ode_pieces(nodes)
    c1, _ = _propagate(pieces, lam, [1.0, 0.0])
    c2, _ = _propagate(pieces, lam, [0.0, 1.0])
    M = np.array([[c1[0], c2[0]], [c1[1], c2[1]]])
    return M


def oracle_floquet(nodes, lam):
    """(rho, kappa, v_grow, v_decay) with eigenvectors normalized to first
    component 1; rho > 1 is the multiplier of the mode growing to +inf."""
    M = oracle_monodromy(nodes, lam)
    D = M[0, 0] + M[1, 1]
    if D <= 2.0:
        raise RuntimeError(f"oracle_floquet: trace {D} <= 2")
    rho = D / 2 + np.sqrt(D * D / 4 - 1)
    v_grow = np.array([1.0, (rho - M[0, 0]) / M[0, 1]])
    v_decay = np.array([1.0, (1 / rho - M[0, 0]) / M[0, 1]])
    return rho, np.log(rho), v_grow, v_decay


class OdeBloch:
    """Dense-output evaluator for the two Bloch modes of a general
    1-periodic potential, normalized to u(0) = 1."""

    def __init__(self, nodes, lam):
        self.pieces = ode_pieces(nodes)
        self.lam = lam
        self.rho, self.kappa, v_grow, v_decay = oracle_floquet(nodes, lam)
        _, self.dense_minus = _propagate(self.pieces, lam, v_grow)
        _, self.dense_plus = _propagate(self.pieces, lam, v_decay)

    def _cell(self, r, dense):
        for x0, x1, sol in dense:
            if x0 - 1e-12 <= r <= x1 + 1e-12:
                return sol(min(max(r, x0), x1))[0]
        raise ValueError(f"point {r} outside period")

    def u(self, y, sign):
        """sign=-1: mode decaying at -inf; sign=+1: decaying at +inf."""
        n = np.floor(y)
        r = y - n
        dense = self.dense_minus if sign < 0 else self.dense_plus
        return self.rho ** (-sign * n) * self._cell(r, dense)


def oracle_integral_ode_dislocation(nodes, lam, tau, which):
    """Criterion integrals for a dislocation interface (v1 = V0(. - tau),
    v2 = V0(. + tau)) over a general potential, via adaptive quadrature on
    dense ODE output (both modes normalized to u(0)=1, matching the
    certified quadrature path)."""
    bloch = OdeBloch(nodes, lam)
    xs = sorted({p[0] for p in bloch.pieces} | {p[1] for p in bloch.pieces})

    def v0(x):
        r = x - np.floor(x)
        for x0, x1, a0, a1 in bloch.pieces:
            if x0 <= r <= x1:
                return a0 + (a1 - a0) * (r - x0) / (x1 - x0)
        return bloch.pieces[-1][3]

    if which == "I1":
        f = lambda x: (v0(x + tau) - v0(x - tau)) * bloch.u(x - tau, -1) ** 2
        lo, hi = -1.0, 0.0
    else:
        f = lambda x: (v0(x - tau) - v0(x + tau)) * bloch.u(x + tau, +1) ** 2
        lo, hi = 0.0, 1.0
    pts = sorted(
        {lo, hi}
        | {x + k - tau for x in xs for k in range(-2, 3)}
        | {x + k + tau for x in xs for k in range(-2, 3)}
    )
    pts = [p for p in pts if lo <= p <= hi]
    total = 0.0
    for x1, x2 in zip(pts[:-1], pts[1:]):
        if x2 - x1 < 1e-14:
            continue
        val, _ = quad(f, x1, x2, epsabs=1e-12, epsrel=1e-12, limit=200)
        total += val
    return OracleValue(total, 1e-10)


def oracle_integral_ode_general(nodes1, nodes2, lam, which):
    """Criterion integrals for a general two-potential interface via
    adaptive quadrature on dense ODE output (modes normalized u(0)=1)."""
    nodes = nodes1 if which == "I1" else nodes2
    bloch = OdeBloch(nodes, lam)

    def value(nds, x):
        r = x - np.floor(x)
        for (x0, v0), (x1, v1) in zip(nds[:-1], nds[1:]):
            if x0 <= r <= x1:
                return v0 + (v1 - v0) * (r - x0) / (x1 - x0)
        return nds[-1][1]

    if which == "I1":
        f = lambda x: (value(nodes2, x) - value(nodes1, x)) * bloch.u(x, -1) ** 2
        lo, hi = -1.0, 0.0
    else:
        f = lambda x: (value(nodes1, x) - value(nodes2, x)) * bloch.u(x, +1) ** 2
        lo, hi = 0.0, 1.0
    pts = sorted(
        {lo, hi}
        | {x + k for x, _ in nodes1 for k in (-1, 0)}
        | {x + k for x, _ in nodes2 for k in (-1, 0)}
    )
    pts = [p for p in pts if lo <= p <= hi]
    total = 0.0
    for x1, x2 in zip(pts[:-1], pts[1:]):
        if x2 - x1 < 1e-14:
            continue
        val, _ = quad(f, x1, x2, epsabs=1e-12, epsrel=1e-12, limit=200)
        total += val
    return OracleValue(total, 1e-10)
