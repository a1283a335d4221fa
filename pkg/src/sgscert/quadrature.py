"""Verified evaluation of the criterion integrals for arbitrary supported
interfaces: interval quadrature of (potential difference) * (Bloch mode
squared) against validated ODE profiles.

Each subinterval contributes

    range(V_other - V_own) * enclosure(integral of u^2)

where the second factor is either range(u)^2 * width (plain Riemann) or
the exact integral of the squared step Taylor models (antiderivative
mode, the default: strictly tighter, same rigor).  Subintervals whose
contribution stays widest are bisected until the target (sign decision
or width goal) is met or the budget is exhausted; exhaustion returns the
still-valid wide enclosure.

Dislocation interfaces reuse a single base-potential solve for every
shift: profiles are queried at shifted windows, so tau sweeps cost one
ODE integration per spectral parameter.
"""

from __future__ import annotations

from dataclasses import dataclass

from .criteria_pwc import (
    CriterionResult,
    DislocationCriteria,
    ExistenceVerdict,
    existence_verdict,
    general_criteria,
)
from .errors import ConfigError
from .interval import Interval, Verdict, hull, make, sign_verdict, to_interval
from .ode import BlochModes, bloch_modes
from .potentials import InterfaceSpec, PiecewiseConstant, Potential

__all__ = [
    "QuadratureBudget",
    "DislocationQuadrature",
    "GeneralQuadrature",
    "integral_I1",
    "integral_I2",
    "CheckOutcome",
    "check_existence",
]

_ZERO = Interval(0.0, 0.0)


@dataclass(frozen=True)
class QuadratureBudget:
    initial_subintervals: int = 128
    max_refinement_depth: int = 12
    target: str = "sign"  # "sign" | "width"
    width_goal: float = 0.0
    antiderivative: bool = True

    def __post_init__(self):
        if self.initial_subintervals < 1 or self.max_refinement_depth < 0:
            raise ConfigError("quadrature budget counts must be >= 1")
        if self.target not in ("sign", "width"):
            raise ConfigError(f"unknown quadrature target {self.target!r}")


@dataclass
class _Cell:
    x1: float
    x2: float
    depth: int
    term: Interval


class _IntegralPlan:
    """One criterion integral: a difference-range callable, a mode view,
    a window shift, and a fixed unit-length domain."""

    def __init__(self, domain, diff_range, mode, shift: Interval):
        self.domain = domain
        self.diff_range = diff_range
        self.mode = mode
        self.shift = shift

    def _term(self, x1: float, x2: float, antiderivative: bool) -> Interval:
        w = Interval(x1, x2)
        diff = self.diff_range(w)
        if diff == _ZERO:
            return _ZERO
        if antiderivative:
            s = self.mode.square_integral(x1, x2, self.shift)
            s = Interval(max(s.lo, 0.0), max(s.hi, 0.0))
        else:
            s = self.mode.range_over(w + self.shift).sqr() * (make(x2) - make(x1))
        return diff * s

    def _seeds(self, n: int):
        lo, hi = self.domain
        pts = {lo, hi}
        for b in self.mode.copy_boundaries(lo + self.shift.lo, hi + self.shift.hi):
            x = b - self.shift.mid
            if lo < x < hi:
                pts.add(x)
        pts = sorted(pts)
        mesh = []
        gap = (hi - lo) / n
        for a, b in zip(pts[:-1], pts[1:]):
            k = max(1, round((b - a) / gap))
            mesh.extend(a + (b - a) * j / k for j in range(k))
        mesh.append(hi)
        return sorted(set(mesh))

    def evaluate(self, budget: QuadratureBudget) -> Interval:
        mesh = self._seeds(budget.initial_subintervals)
        cells = [
            _Cell(a, b, 0, self._term(a, b, budget.antiderivative))
            for a, b in zip(mesh[:-1], mesh[1:])
        ]
        while True:
            total = _ZERO
            for c in cells:
                total = total + c.term
            if budget.target == "sign":
                if sign_verdict(total) is not Verdict.CONTAINS_ZERO:
                    return total
            elif total.hi - total.lo <= budget.width_goal:
                return total
            widths = [
                (c.term.hi - c.term.lo)
                for c in cells
                if c.depth < budget.max_refinement_depth
            ]
            if not widths:
                return total
            w_max = max(widths)
            if w_max <= 0.0:
                return total
            threshold = 0.5 * w_max
            new_cells = []
            for c in cells:
                if (
                    c.depth < budget.max_refinement_depth
                    and (c.term.hi - c.term.lo) >= threshold
                ):
                    mid = 0.5 * (c.x1 + c.x2)
                    if not (c.x1 < mid < c.x2):
                        new_cells.append(c)
                        continue
                    new_cells.append(
                        _Cell(c.x1, mid, c.depth + 1, self._term(c.x1, mid, budget.antiderivative))
                    )
                    new_cells.append(
                        _Cell(mid, c.x2, c.depth + 1, self._term(mid, c.x2, budget.antiderivative))
                    )
                else:
                    new_cells.append(c)
            cells = new_cells


class DislocationQuadrature:
    """Quadrature-path criteria for dislocation interfaces over one base
    potential and spectral parameter; tau varies query by query."""

    def __init__(self, base: Potential, lam, budget: QuadratureBudget | None = None, order: int = 16):
        self.base = base
        self.lam = to_interval(lam)
        self.budget = budget or QuadratureBudget()
        self.modes: BlochModes = bloch_modes(base, self.lam, order)

    def i1(self, tau) -> Interval:
        # v1 = base(. - tau), v2 = base(. + tau); the -inf mode of v1 is
        # the base mode at the shifted window
        tau = to_interval(tau)
        plan = _IntegralPlan(
            (-1.0, 0.0),
            lambda w: self.base.range_over(w + tau) - self.base.range_over(w - tau),
            self.modes.minus,
            -tau,
        )
        return plan.evaluate(self.budget)

    def i2(self, tau) -> Interval:
        tau = to_interval(tau)
        plan = _IntegralPlan(
            (0.0, 1.0),
            lambda w: self.base.range_over(w - tau) - self.base.range_over(w + tau),
            self.modes.plus,
            tau,
        )
        return plan.evaluate(self.budget)

    def criteria(self, tau) -> CriterionResult:
        return CriterionResult(self.i1(tau), self.i2(tau), scaled=False)


class GeneralQuadrature:
    """Quadrature-path criteria for a general interface (v1 right of the
    origin, v2 left); both mode solves happen once at construction."""

    def __init__(
        self,
        v1: Potential,
        v2: Potential,
        lam,
        budget: QuadratureBudget | None = None,
        order: int = 16,
        initial_minus=None,
        initial_plus=None,
    ):
        self.v1 = v1
        self.v2 = v2
        self.lam = to_interval(lam)
        self.budget = budget or QuadratureBudget()
        self.modes1 = bloch_modes(v1, self.lam, order, initial_minus=initial_minus)
        self.modes2 = bloch_modes(v2, self.lam, order, initial_plus=initial_plus)

    def i1(self) -> Interval:
        plan = _IntegralPlan(
            (-1.0, 0.0),
            lambda w: self.v2.range_over(w) - self.v1.range_over(w),
            self.modes1.minus,
            _ZERO,
        )
        return plan.evaluate(self.budget)

    def i2(self) -> Interval:
        plan = _IntegralPlan(
            (0.0, 1.0),
            lambda w: self.v1.range_over(w) - self.v2.range_over(w),
            self.modes2.plus,
            _ZERO,
        )
        return plan.evaluate(self.budget)

    def criteria(self) -> CriterionResult:
        return CriterionResult(self.i1(), self.i2(), scaled=False)


def integral_I1(spec: InterfaceSpec, budget: QuadratureBudget | None = None) -> Interval:
    """Criterion integral over [-1, 0] of (V2-V1) times the squared
    -inf-decaying mode of V1."""
    if spec.kind == "dislocation":
        return DislocationQuadrature(spec.base, spec.lam, budget).i1(spec.tau)
    return GeneralQuadrature(spec.v1, spec.v2, spec.lam, budget).i1()


def integral_I2(spec: InterfaceSpec, budget: QuadratureBudget | None = None) -> Interval:
    """Criterion integral over [0, 1] of (V1-V2) times the squared
    +inf-decaying mode of V2."""
    if spec.kind == "dislocation":
        return DislocationQuadrature(spec.base, spec.lam, budget).i2(spec.tau)
    return GeneralQuadrature(spec.v1, spec.v2, spec.lam, budget).i2()


def _closed_form_eligible(spec: InterfaceSpec) -> bool:
    if spec.kind == "dislocation":
        return isinstance(spec.base, PiecewiseConstant) and spec.base.s == 0.5
    return (
        isinstance(spec.v1, PiecewiseConstant)
        and isinstance(spec.v2, PiecewiseConstant)
        and spec.v1.s == 0.5
        and spec.v2.s == 0.5
    )


@dataclass(frozen=True)
class CheckOutcome:
    result: CriterionResult
    verdict: ExistenceVerdict
    path: str  # "closed-form" | "quadrature"


def check_existence(
    spec: InterfaceSpec, budget: QuadratureBudget | None = None, mode: str = "auto"
) -> CheckOutcome:
    """Evaluate both criteria and map them to the existence verdict.

    mode 'auto' routes piecewise-constant interfaces with mid-cell jumps
    (and pwc dislocations) to the closed forms, everything else to the
    quadrature path; 'closed' and 'quadrature' force a path.
    """
    if mode not in ("auto", "closed", "quadrature"):
        raise ConfigError(f"unknown evaluation mode {mode!r}")
    eligible = _closed_form_eligible(spec)
    if mode == "closed" and not eligible:
        raise ConfigError(
            "closed-form evaluation requires piecewise-constant cells with s = 1/2"
        )
    use_closed = eligible if mode == "auto" else (mode == "closed")
    if use_closed:
        if spec.kind == "dislocation":
            result = DislocationCriteria(spec.base, spec.lam).criteria(spec.tau)
        else:
            result = general_criteria(spec.v1, spec.v2, spec.lam)
        path = "closed-form"
    else:
        if spec.kind == "dislocation":
            ctx = DislocationQuadrature(spec.base, spec.lam, budget)
            result = ctx.criteria(spec.tau)
        else:
            result = GeneralQuadrature(spec.v1, spec.v2, spec.lam, budget).criteria()
        path = "quadrature"
    return CheckOutcome(result, existence_verdict(result, spec.kind), path)
