"""Closed-form Bloch waves of -u'' + V0 u = lambda u for a piecewise
constant cell V0 = a on [0,s), b on [s,1).

The two solutions have the form u_pm(x) = p_pm(x) exp(-+ kappa x) with
1-periodic p_pm and kappa > 0 whenever lambda lies below the spectrum.
On the cell they are exponential sums

    u_pm = xi1 e^{x sqrt(a-l)} + xi2 e^{-x sqrt(a-l)}   on [0, s),
           xi3 e^{x sqrt(b-l)} + xi4 e^{-x sqrt(b-l)}   on [s, 1),

where the coefficient 4-vector solves the C1-matching/Floquet system
A(kappa) xi = 0 (multiplier e^{-kappa}, the mode decaying at +inf; the
growing mode's vector is the same expression evaluated at -kappa).

cosh(kappa) has an explicit arcosh-invertible form; the coefficient
vector is used unnormalized (all downstream quantities are quadratic in
xi, and sign questions are invariant under nonzero real rescaling).

Width hygiene: sqrt(a-l) - sqrt(b-l) is always evaluated in the
cancellation-free form (a-b)/(sqrt(a-l)+sqrt(b-l)), and arcosh uses a
log1p-based branch, so enclosures stay tight near a=b and near band
edges.  The constant cell a=b is handled exactly (kappa = sqrt(a-l),
xi_plus = (0,1,0,1), xi_minus = (1,0,1,0)): the general expressions
degenerate to the zero vector there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateParameterError, SpectralConditionError
from .interval import (
    DomainError,
    Interval,
    arcosh,
    cosh,
    exp,
    hull,
    make,
    sinh,
    sqr,
    to_interval,
)
from .potentials import PiecewiseConstant

__all__ = [
    "BlochPwc",
    "characteristic_exponent",
    "xi_vector",
    "bloch_data",
    "eval_bloch",
    "matching_residual",
]

_ZERO = Interval(0.0, 0.0)
_ONE = Interval(1.0, 1.0)


def _roots(cell: PiecewiseConstant, lam: Interval) -> tuple[Interval, Interval]:
    try:
        return (cell.a - lam).sqrt(), (cell.b - lam).sqrt()
    except DomainError as exc:
        raise SpectralConditionError(
            f"lambda = {lam} reaches min(a, b) for cell {cell}"
        ) from exc


def characteristic_exponent(cell: PiecewiseConstant, lam) -> Interval:
    """Enclosure of the positive characteristic exponent kappa."""
    lam = to_interval(lam)
    if cell.a == cell.b:
        return _roots(cell, lam)[0]
    al, be = _roots(cell, lam)
    s = make(cell.s)
    one_minus_s = 1.0 - to_interval(cell.s)
    sum_r = al + be
    diff_sq = sqr((cell.a - cell.b) / sum_r)
    rhs = (
        sqr(sum_r) * cosh(s * al + one_minus_s * be)
        - diff_sq * cosh(s * al - one_minus_s * be)
    ) / (4.0 * al * be)
    if rhs.hi < 1.0:
        raise SpectralConditionError(
            f"multiplier equation unsolvable (cosh kappa enclosure {rhs} < 1): "
            f"lambda = {lam} is not verifiably below the spectrum"
        )
    if rhs.lo < 1.0:
        raise SpectralConditionError(
            f"cosh kappa enclosure {rhs} straddles 1 (band edge too close "
            f"for this box); kappa > 0 cannot be verified"
        )
    return arcosh(rhs)


def xi_vector(cell: PiecewiseConstant, lam, kappa_signed: Interval):
    """Coefficient 4-vector for the Bloch mode with multiplier
    exp(-kappa_signed); pass -kappa for the growing mode's vector."""
    lam = to_interval(lam)
    if cell.a == cell.b:
        if kappa_signed.lo >= 0.0:
            return (_ZERO, _ONE, _ZERO, _ONE)
        return (_ONE, _ZERO, _ONE, _ZERO)
    al, be = _roots(cell, lam)
    s = make(cell.s)
    k = kappa_signed
    diff_r = (cell.a - cell.b) / (al + be)  # sqrt(a-l) - sqrt(b-l), stable

    den1 = exp(s * (al + be) - k) - exp(be)
    if den1.contains(0.0):
        raise DegenerateParameterError(
            f"xi denominator exp(s(alpha+beta)-kappa) - exp(beta) contains 0: {den1}"
        )
    xi1 = (
        exp(-s * al)
        / (2.0 * den1)
        * (
            4.0 * exp(s * al - k) * al * be
            - sqr(al + be) * exp((s - 1.0) * be)
            + sqr(diff_r) * exp((1.0 - s) * be)
        )
    )
    den2 = exp(s * be - k) - exp(be - s * al)
    if den2.contains(0.0):
        raise DegenerateParameterError(
            f"xi denominator exp(s beta - kappa) - exp(beta - s alpha) contains 0: {den2}"
        )
    xi2 = (cell.a - cell.b) * sinh((1.0 - s) * be) / den2
    xi3 = al * (al + be) * (exp(diff_r * s - k) - exp(-be)) / den1
    xi4 = al * (cell.b - cell.a) / (al + be)  # lambda - a + sqrt(a-l)sqrt(b-l)
    return (xi1, xi2, xi3, xi4)


@dataclass(frozen=True)
class BlochPwc:
    """Bloch data bundle for one cell and one spectral parameter."""

    cell: PiecewiseConstant
    lam: Interval
    alpha: Interval
    beta: Interval
    kappa: Interval
    xi_plus: tuple
    xi_minus: tuple


def bloch_data(cell: PiecewiseConstant, lam) -> BlochPwc:
    lam = to_interval(lam)
    kappa = characteristic_exponent(cell, lam)
    al, be = _roots(cell, lam)
    return BlochPwc(
        cell=cell,
        lam=lam,
        alpha=al,
        beta=be,
        kappa=kappa,
        xi_plus=xi_vector(cell, lam, kappa),
        xi_minus=xi_vector(cell, lam, -kappa),
    )


def _cell_eval(data: BlochPwc, xi, r_lo: float, r_hi: float) -> Interval:
    """Enclosure of the mode over a window [r_lo, r_hi] inside [0, 1]."""
    s = data.cell.s
    parts = []
    if r_lo <= s:
        w = Interval(r_lo, min(r_hi, s))
        parts.append(xi[0] * exp(data.alpha * w) + xi[1] * exp(-(data.alpha * w)))
    if r_hi >= s:
        w = Interval(max(r_lo, s), r_hi)
        parts.append(xi[2] * exp(data.beta * w) + xi[3] * exp(-(data.beta * w)))
    return hull(*parts)


def eval_bloch(data: BlochPwc, x, direction: str) -> Interval:
    """Enclosure of u_plus or u_minus over an interval x anywhere on R,
    using the multiplier relation u_pm(x+1) = exp(-+kappa) u_pm(x)."""
    x = to_interval(x)
    if direction == "plus":
        xi, msign = data.xi_plus, -1.0
    elif direction == "minus":
        xi, msign = data.xi_minus, +1.0
    else:
        raise ValueError(f"direction must be 'plus' or 'minus', got {direction!r}")
    if x.hi - x.lo >= 1.0 or abs(x.lo) > 2.0**50:
        raise DomainError(f"evaluation window {x} too wide (>= one period)")
    n = math.floor(x.lo)
    parts = []
    for k, (w_lo, w_hi) in enumerate(_unit_windows(x.lo - n, x.hi - n)):
        factor = exp(make(msign * (n + k)) * data.kappa)
        parts.append(factor * _cell_eval(data, xi, w_lo, w_hi))
    return hull(*parts)


def _unit_windows(lo: float, hi: float):
    if hi <= 1.0:
        return [(lo, hi)]
    return [(lo, 1.0), (0.0, hi - 1.0)]


def matching_residual(data: BlochPwc, which: str):
    """Interval evaluation of the 4 matching equations A(+-kappa) xi;
    each component must contain 0 (definitional residual check)."""
    if which == "plus":
        xi, k = data.xi_plus, data.kappa
    else:
        xi, k = data.xi_minus, -data.kappa
    al, be, s = data.alpha, data.beta, make(data.cell.s)
    e_sa = exp(s * al)
    e_sb = exp(s * be)
    e_b = exp(be)
    e_mk = exp(-k)
    rows = (
        (e_sa, 1.0 / e_sa, -e_sb, -(1.0 / e_sb)),
        (al * e_sa, -(al / e_sa), -(be * e_sb), be / e_sb),
        (-e_mk, -e_mk, e_b, 1.0 / e_b),
        (-(al * e_mk), al * e_mk, be * e_b, -(be / e_b)),
    )
    return tuple(
        row[0] * xi[0] + row[1] * xi[1] + row[2] * xi[2] + row[3] * xi[3]
        for row in rows
    )
