"""Closed-form interval evaluation of the two criterion integrals for
piecewise constant interfaces with mid-cell jumps (s = 1/2).

I1 integrates (V2 - V1) times the squared mode of V1 decaying at -inf
over [-1, 0]; I2 integrates (V1 - V2) times the squared mode of V2
decaying at +inf over [0, 1].  A negative I1 certifies ground-state
existence when the periodic ground-state energy of side 1 does not
exceed side 2's (c1 <= c2); a negative I2 certifies the reverse
ordering; both negative certifies existence unconditionally, and for a
dislocation interface (both sides shifts of one cell, forcing c1 = c2)
either one suffices.

Dislocation path: after substituting the shift, each criterion is an
integral of (const) * (A e^{g r} + B e^{-g r})^2 over at most three
cell-coordinate windows whose endpoints are affine in the shift tau;
the window structure changes at tau = 1/4, 1/2, 3/4, so tau boxes are
split at those boundaries and the per-branch exact antiderivatives are
evaluated and hulled.  expm1 keeps the "difference of exponentials"
factors tight near the window-collapse points tau = 0, 1/2, 1, where
the integrals vanish identically.

Scaled variants multiply each side's integral by
sqrt(a-lambda)sqrt(b-lambda) of that side (a positive factor, so sign
verdicts agree); they exist because plots near band edges are better
conditioned in that normalization.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .bloch_pwc import BlochPwc, bloch_data
from .errors import PotentialError
from .interval import Interval, Verdict, exp, expm1, hull, make, sign_verdict, to_interval
from .potentials import PiecewiseConstant

__all__ = [
    "CriterionResult",
    "Conclusion",
    "ExistenceVerdict",
    "DislocationCriteria",
    "dislocation_criteria",
    "dislocation_I1",
    "dislocation_I2",
    "general_criteria",
    "general_I1",
    "general_I2",
    "existence_verdict",
]


@dataclass(frozen=True)
class CriterionResult:
    """Enclosures of both criterion integrals (scaled=True means each is
    multiplied by its side's positive sqrt(a-l)sqrt(b-l) factor)."""

    i1: Interval
    i2: Interval
    scaled: bool = False

    @property
    def verdict1(self) -> Verdict:
        return sign_verdict(self.i1)

    @property
    def verdict2(self) -> Verdict:
        return sign_verdict(self.i2)


class Conclusion(enum.Enum):
    EXISTS_UNCONDITIONALLY = "exists_unconditionally"
    EXISTS_CONDITIONALLY = "exists_conditionally"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class ExistenceVerdict:
    conclusion: Conclusion
    condition: str | None
    reason: str

    @property
    def exists(self) -> bool:
        return self.conclusion is not Conclusion.INCONCLUSIVE


def existence_verdict(result: CriterionResult, kind: str) -> ExistenceVerdict:
    """Map sign verdicts to the existence conclusion for the interface
    kind ('dislocation' forces equal periodic ground-state energies)."""
    neg1 = result.verdict1 is Verdict.NEGATIVE
    neg2 = result.verdict2 is Verdict.NEGATIVE
    if kind == "dislocation":
        if neg1 or neg2:
            which = "I1" if neg1 else "I2"
            if neg1 and neg2:
                which = "I1 and I2"
            return ExistenceVerdict(
                Conclusion.EXISTS_UNCONDITIONALLY,
                None,
                f"{which} verified negative; dislocation sides share the "
                "periodic ground-state energy, so a ground state exists for "
                "every admissible nonlinearity and exponent",
            )
        return ExistenceVerdict(
            Conclusion.INCONCLUSIVE, None, "neither criterion integral verified negative"
        )
    if neg1 and neg2:
        return ExistenceVerdict(
            Conclusion.EXISTS_UNCONDITIONALLY,
            None,
            "I1 and I2 both verified negative; a ground state exists for any "
            "ordering of the periodic ground-state energies, hence for every "
            "admissible nonlinearity and exponent",
        )
    if neg1:
        return ExistenceVerdict(
            Conclusion.EXISTS_CONDITIONALLY,
            "c1 <= c2",
            "I1 verified negative; a ground state exists provided side 1's "
            "periodic ground-state energy does not exceed side 2's",
        )
    if neg2:
        return ExistenceVerdict(
            Conclusion.EXISTS_CONDITIONALLY,
            "c1 >= c2",
            "I2 verified negative; a ground state exists provided side 2's "
            "periodic ground-state energy does not exceed side 1's",
        )
    return ExistenceVerdict(
        Conclusion.INCONCLUSIVE, None, "neither criterion integral verified negative"
    )


# Window tables for the dislocation criteria, per tau branch.  Entries:
# (rlo0, rlo1, len0, len1, cell_branch, period_offset, sign) encode a
# window [r, r+L] in cell coordinates with r = rlo0 + rlo1*tau and
# L = len0 + len1*tau; the piece contributes
#   sign * (b - a) * mult(period_offset) * int_r^{r+L} (mode)^2.
# Derived by direct integration of the defining integrals for the
# parametrization v1 = V0(. + tau), v2 = V0(. - tau); validated
# symbolically and against high-precision quadrature on all branches.
# The package's dislocation uses the mirrored shift (v1 = V0(. - tau)),
# realized below by composing these tables with tau -> 1 - tau, which
# keeps every constant an exact dyadic.
_RAW_I1_WINDOWS = {
    "A": (
        (0.0, 1, 0.0, 1, "a", -1, +1),
        (0.5, 0, 0.0, 2, "b", -1, -1),
        (0.0, 0, 0.0, 1, "a", 0, +1),
    ),
    "B": (
        (0.0, 1, 0.5, -1, "a", -1, +1),
        (0.0, 2, 1.0, -2, "b", -1, -1),
        (-0.5, 2, 0.5, -1, "a", 0, +1),
    ),
    "C": (
        (0.0, 1, -0.5, 1, "b", -1, -1),
        (0.0, 0, -1.0, 2, "a", 0, +1),
        (0.5, 0, -0.5, 1, "b", 0, -1),
    ),
    "D": (
        (0.0, 1, 1.0, -1, "b", -1, -1),
        (-1.5, 2, 2.0, -2, "a", 0, +1),
        (-1.0, 2, 1.0, -1, "b", 0, -1),
    ),
}
_RAW_I2_WINDOWS = {
    "A": (
        (1.0, -1, 0.0, 1, "b", -1, -1),
        (0.5, -2, 0.0, 2, "a", 0, +1),
        (1.0, -2, 0.0, 1, "b", 0, -1),
    ),
    "B": (
        (1.0, -1, 0.5, -1, "b", -1, -1),
        (0.0, 0, 1.0, -2, "a", 0, +1),
        (0.5, 0, 0.5, -1, "b", 0, -1),
    ),
    "C": (
        (1.0, -1, -0.5, 1, "a", -1, +1),
        (2.0, -2, -1.0, 2, "b", -1, -1),
        (1.5, -2, -0.5, 1, "a", 0, +1),
    ),
    "D": (
        (1.0, -1, 1.0, -1, "a", -1, +1),
        (0.5, 0, 2.0, -2, "b", -1, -1),
        (0.0, 0, 1.0, -1, "a", 0, +1),
    ),
}


def _mirror_entry(entry):
    r0, r1, l0, l1, br, off, sgn = entry
    return (r0 + r1, -r1, l0 + l1, -l1, br, off, sgn)


def _mirror_table(raw):
    flip = {"A": "D", "B": "C", "C": "B", "D": "A"}
    return {
        new: tuple(_mirror_entry(e) for e in raw[old]) for new, old in flip.items()
    }


_I1_WINDOWS = _mirror_table(_RAW_I1_WINDOWS)
_I2_WINDOWS = _mirror_table(_RAW_I2_WINDOWS)
_BRANCH_BOUNDS = (0.25, 0.5, 0.75)


def _branch_of(lo: float, hi: float) -> str:
    mid = 0.5 * (lo + hi)
    if mid <= 0.25:
        return "A"
    if mid <= 0.5:
        return "B"
    if mid <= 0.75:
        return "C"
    return "D"


def _split_tau(tau: Interval):
    pts = [tau.lo]
    for b in _BRANCH_BOUNDS:
        if tau.lo < b < tau.hi:
            pts.append(b)
    pts.append(tau.hi)
    return [(lo, hi) for lo, hi in zip(pts[:-1], pts[1:])]


class DislocationCriteria:
    """Criterion evaluator for one (cell, lambda): Bloch data is computed
    once and reused across tau boxes (sweeps and scan rows)."""

    def __init__(self, cell: PiecewiseConstant, lam):
        if cell.s != 0.5:
            raise PotentialError(
                f"closed-form dislocation criteria require s = 1/2, got s = {cell.s}"
            )
        self.data: BlochPwc = bloch_data(cell, lam)
        d = self.data
        self._b_minus_a = cell.b - cell.a
        self._scale = d.alpha * d.beta
        self._mult = {
            ("I1", -1): exp(-2.0 * d.kappa),
            ("I2", -1): exp(2.0 * d.kappa),
        }
        # the mirrored parametrization moves each integration domain by
        # one period relative to the derivation tables: factor e^{-2 kappa}
        self._domain_shift = exp(-2.0 * d.kappa)

    def _window_integral(self, which, entry, tau):
        rlo0, rlo1, len0, len1, br, off, sgn = entry
        d = self.data
        xi = d.xi_minus if which == "I1" else d.xi_plus
        if br == "a":
            A, B, g = xi[0], xi[1], d.alpha
            other = d.beta
        else:
            A, B, g = xi[2], xi[3], d.beta
            other = d.alpha
        r = make(rlo0) + float(rlo1) * tau if rlo1 else make(rlo0)
        L = make(len0) + float(len1) * tau if len1 else make(len0)
        two_g = 2.0 * g
        bracket = A.sqr() * exp(two_g * r) * expm1(two_g * L) - B.sqr() * exp(
            -(two_g * r)
        ) * expm1(-(two_g * L))
        cross = 2.0 * (A * B) * L
        mult = self._mult.get((which, off))
        plain = bracket / two_g + cross
        scaled = bracket * (other / 2.0) + cross * self._scale
        if mult is not None:
            plain = mult * plain
            scaled = mult * scaled
        if sgn < 0:
            return -plain, -scaled
        return plain, scaled

    def _integral(self, which, tau: Interval):
        plain_parts = []
        scaled_parts = []
        table = _I1_WINDOWS if which == "I1" else _I2_WINDOWS
        for lo, hi in _split_tau(tau):
            box = Interval(lo, hi)
            p_sum = Interval(0.0, 0.0)
            s_sum = Interval(0.0, 0.0)
            for entry in table[_branch_of(lo, hi)]:
                p, s = self._window_integral(which, entry, box)
                p_sum = p_sum + p
                s_sum = s_sum + s
            factor = self._domain_shift * self._b_minus_a
            plain_parts.append(factor * p_sum)
            scaled_parts.append(factor * s_sum)
        return hull(*plain_parts), hull(*scaled_parts)

    def i1(self, tau) -> Interval:
        return self._integral("I1", _check_tau(tau))[0]

    def i2(self, tau) -> Interval:
        return self._integral("I2", _check_tau(tau))[0]

    def criteria(self, tau, scaled: bool = False) -> CriterionResult:
        tau = _check_tau(tau)
        p1, s1 = self._integral("I1", tau)
        p2, s2 = self._integral("I2", tau)
        if scaled:
            return CriterionResult(s1, s2, scaled=True)
        return CriterionResult(p1, p2, scaled=False)


def _check_tau(tau) -> Interval:
    tau = to_interval(tau)
    if tau.lo < 0.0 or tau.hi > 1.0:
        raise PotentialError(f"dislocation shift {tau} outside [0, 1]")
    return tau


def dislocation_criteria(cell: PiecewiseConstant, lam, tau, scaled=False) -> CriterionResult:
    return DislocationCriteria(cell, lam).criteria(tau, scaled=scaled)


def dislocation_I1(cell: PiecewiseConstant, lam, tau) -> Interval:
    return DislocationCriteria(cell, lam).i1(tau)


def dislocation_I2(cell: PiecewiseConstant, lam, tau) -> Interval:
    return DislocationCriteria(cell, lam).i2(tau)


def _half_cell_terms(data: BlochPwc, xi):
    """The two per-half-cell building blocks of the general-interface
    integrals: cross term plus exponential bracket, for each half."""
    al, be = data.alpha, data.beta
    # first half-cell, coefficients (xi1, xi2), exponent alpha
    bra_a = xi[0].sqr() * expm1(al) - xi[1].sqr() * expm1(-al)
    cross_a = xi[0] * xi[1]
    # second half-cell, coefficients (xi3, xi4), exponent beta
    bra_b = xi[2].sqr() * exp(be) * expm1(be) - xi[3].sqr() * exp(
        -(2.0 * be)
    ) * (-expm1(be))
    cross_b = xi[2] * xi[3]
    return (cross_a, bra_a, al, be), (cross_b, bra_b, be, al)


def _assemble_general(diff_a, diff_b, half_a, half_b, prefactor, scale):
    cross_a, bra_a, g_a, other_a = half_a
    cross_b, bra_b, g_b, other_b = half_b
    plain = diff_a * (cross_a + bra_a / (2.0 * g_a)) + diff_b * (
        cross_b + bra_b / (2.0 * g_b)
    )
    scaled = diff_a * (cross_a * scale + bra_a * (other_a / 2.0)) + diff_b * (
        cross_b * scale + bra_b * (other_b / 2.0)
    )
    if prefactor is not None:
        plain = prefactor * plain
        scaled = prefactor * scaled
    return plain, scaled


def _check_half_jump(cell: PiecewiseConstant, name: str):
    if cell.s != 0.5:
        raise PotentialError(
            f"closed-form general criteria require mid-cell jumps, {name} has s = {cell.s}"
        )


def general_criteria(
    cell1: PiecewiseConstant, cell2: PiecewiseConstant, lam, scaled=False
) -> CriterionResult:
    """Criterion enclosures for a general interface of two piecewise
    constant cells with s1 = s2 = 1/2."""
    _check_half_jump(cell1, "cell1")
    _check_half_jump(cell2, "cell2")
    lam = to_interval(lam)
    d1 = bloch_data(cell1, lam)
    d2 = bloch_data(cell2, lam)
    half_a1, half_b1 = _half_cell_terms(d1, d1.xi_minus)
    i1_plain, i1_scaled = _assemble_general(
        cell2.a - cell1.a,
        cell2.b - cell1.b,
        half_a1,
        half_b1,
        exp(-(2.0 * d1.kappa)),
        d1.alpha * d1.beta,
    )
    half_a2, half_b2 = _half_cell_terms(d2, d2.xi_plus)
    i2_plain, i2_scaled = _assemble_general(
        cell1.a - cell2.a,
        cell1.b - cell2.b,
        half_a2,
        half_b2,
        None,
        d2.alpha * d2.beta,
    )
    if scaled:
        return CriterionResult(i1_scaled, i2_scaled, scaled=True)
    return CriterionResult(i1_plain, i2_plain, scaled=False)


def general_I1(cell1, cell2, lam) -> Interval:
    return general_criteria(cell1, cell2, lam).i1


def general_I2(cell1, cell2, lam) -> Interval:
    return general_criteria(cell1, cell2, lam).i2
