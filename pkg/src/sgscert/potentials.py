"""1-periodic potentials and two-sided interface descriptions.

A potential is stored as a list of linear pieces over one period [0, 1]
with interval-valued breakpoints and node values (thin intervals; exact
binary64 inputs give point breakpoints, decimal-string inputs give 1-ulp
enclosures).  Jumps are allowed at breakpoints, so piecewise constant
cells and continuous piecewise linear cells share one representation and
one set of exact range queries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import PotentialError, SpectralConditionError
from .interval import Interval, hull, make, to_interval

__all__ = [
    "Potential",
    "PiecewiseConstant",
    "PiecewiseLinear",
    "InterfaceSpec",
    "shift",
]


@dataclass(frozen=True)
class Piece:
    """Linear segment from (x0, v0) to (x1, v1); all entries intervals."""

    x0: Interval
    x1: Interval
    v0: Interval
    v1: Interval

    def value_at(self, x: Interval) -> Interval:
        if self.v0 == self.v1:
            return self.v0
        slope = (self.v1 - self.v0) / (self.x1 - self.x0)
        return self.v0 + slope * (x - self.x0)

    def range_over(self, w_lo: float, w_hi: float) -> Interval:
        # Linear in x, so the range over a window is the hull of the
        # endpoint evaluations.
        lo = self.value_at(Interval(w_lo, w_lo))
        hi = self.value_at(Interval(w_hi, w_hi))
        return hull(lo, hi)


class Potential:
    """1-periodic piecewise-linear function with jumps, on cell [0, 1]."""

    def __init__(self, pieces: list[Piece]):
        if not pieces:
            raise PotentialError("potential needs at least one piece")
        if pieces[0].x0 != Interval(0.0, 0.0) or pieces[-1].x1 != Interval(1.0, 1.0):
            raise PotentialError("pieces must span exactly [0, 1]")
        for p, q in zip(pieces[:-1], pieces[1:]):
            if p.x1 != q.x0:
                raise PotentialError("pieces must be contiguous")
            if p.x1.lo <= p.x0.hi:
                raise PotentialError("breakpoints must be strictly increasing")
        if pieces[-1].x1.lo <= pieces[-1].x0.hi:
            raise PotentialError("breakpoints must be strictly increasing")
        self.pieces = tuple(pieces)

    # -- queries ----------------------------------------------------------

    def inf_over_period(self) -> float:
        """Guaranteed lower bound of the potential over one period."""
        return min(min(p.v0.lo, p.v1.lo) for p in self.pieces)

    def sup_over_period(self) -> float:
        return max(max(p.v0.hi, p.v1.hi) for p in self.pieces)

    def _cell_range(self, w_lo: float, w_hi: float) -> Interval:
        """Range over a window inside [0, 1]; conservative at interval
        breakpoints (both adjacent pieces contribute)."""
        parts = []
        for p in self.pieces:
            lo = max(w_lo, p.x0.lo)
            hi = min(w_hi, p.x1.hi)
            if lo <= hi:
                parts.append(p.range_over(lo, hi))
        if not parts:
            raise PotentialError(f"window [{w_lo}, {w_hi}] missed all pieces")
        return hull(*parts)

    def range_over(self, x) -> Interval:
        """Exact (outward-rounded) range of the periodic extension over
        an interval of any width and location."""
        x = to_interval(x)
        if x.hi - x.lo >= 1.0 or abs(x.lo) > 2.0**50:
            return self._cell_range(0.0, 1.0)
        n = math.floor(x.lo)
        lo = x.lo - n  # exact for |x| < 2**50
        hi = x.hi - n
        if hi <= 1.0:
            return self._cell_range(lo, hi)
        return hull(self._cell_range(lo, 1.0), self._cell_range(0.0, hi - 1.0))

    def value_at(self, x) -> Interval:
        return self.range_over(to_interval(x))

    def mirrored(self) -> "Potential":
        """The reflected potential x -> P(-x) (= P(1-x) by periodicity)."""
        pieces = []
        for p in reversed(self.pieces):
            pieces.append(Piece(1.0 - p.x1, 1.0 - p.x0, p.v1, p.v0))
        return Potential(pieces)

    def is_verified_even(self) -> bool:
        """True only if reflection symmetry is verified exactly on the
        stored breakpoints; False is always safe."""
        try:
            m = self.mirrored()
        except PotentialError:
            return False
        if len(m.pieces) != len(self.pieces):
            return False
        return all(
            p.x0 == q.x0 and p.x1 == q.x1 and p.v0 == q.v0 and p.v1 == q.v1
            for p, q in zip(self.pieces, m.pieces)
        )

    def __eq__(self, other):
        if not isinstance(other, Potential):
            return NotImplemented
        return self.pieces == other.pieces

    def __hash__(self):
        return hash(self.pieces)

    def __repr__(self):
        return f"Potential({len(self.pieces)} pieces)"


def _const_pieces(segments) -> list[Piece]:
    return [Piece(x0, x1, v, v) for x0, x1, v in segments]


class PiecewiseConstant(Potential):
    """Two-piece constant cell: value a on [0, s), b on [s, 1)."""

    def __init__(self, a, b, s: float = 0.5):
        self.a = make(a)
        self.b = make(b)
        self.s = float(s)
        if not 0.0 < self.s < 1.0:
            raise PotentialError(f"jump location s={s} outside (0, 1)")
        sI = Interval(self.s, self.s)
        super().__init__(
            _const_pieces(
                [(Interval(0.0, 0.0), sI, self.a), (sI, Interval(1.0, 1.0), self.b)]
            )
        )

    def __repr__(self):
        return f"PiecewiseConstant(a={self.a}, b={self.b}, s={self.s})"


class PiecewiseLinear(Potential):
    """Continuous piecewise linear cell from an ordered node list
    [(x_0=0, v_0), ..., (x_m=1, v_m)] with v_0 = v_m."""

    def __init__(self, nodes):
        if len(nodes) < 2:
            raise PotentialError("need at least two nodes")
        xs = [make(x) for x, _ in nodes]
        vs = [make(v) for _, v in nodes]
        if xs[0] != Interval(0.0, 0.0) or xs[-1] != Interval(1.0, 1.0):
            raise PotentialError("node positions must start at 0 and end at 1")
        if vs[0] != vs[-1]:
            raise PotentialError(
                "periodic continuity violated: v(0) != v(1) "
                f"({vs[0]} vs {vs[-1]})"
            )
        self.nodes = tuple(zip(xs, vs))
        pieces = [
            Piece(xs[k], xs[k + 1], vs[k], vs[k + 1]) for k in range(len(nodes) - 1)
        ]
        super().__init__(pieces)

    def __repr__(self):
        pts = ", ".join(f"{x.lo:g}:{v.lo:g}" for x, v in self.nodes)
        return f"PiecewiseLinear({pts})"


def _reduce_mod1(x: Interval) -> Interval:
    n = math.floor(x.mid)
    r = x - float(n)
    if r.lo < 0.0:
        r = r + 1.0
    return r


def shift(p: Potential, tau) -> Potential:
    """The shifted potential x -> p(x + tau), renormalized to cell [0, 1].

    Breakpoints move by -tau (computed in interval arithmetic, so an
    inexact shift yields thin interval breakpoints and stays rigorous).
    """
    tau = to_interval(tau)
    cuts = []
    for piece in p.pieces:
        c = _reduce_mod1(piece.x0 - tau)
        if c.hi > 0.0 and c.lo < 1.0 and not (c.lo <= 0.0 or c.hi >= 1.0):
            cuts.append(c)
    cuts.sort(key=lambda c: c.mid)
    bounds = [Interval(0.0, 0.0)] + cuts + [Interval(1.0, 1.0)]
    pieces = []
    for c0, c1 in zip(bounds[:-1], bounds[1:]):
        if c1.lo <= c0.hi:
            raise PotentialError(
                f"shift by {tau} produced overlapping breakpoints {c0}, {c1}"
            )
        mid = 0.5 * (c0.hi + c1.lo)
        src = _reduce_mod1(Interval(mid, mid) + tau)
        for piece in p.pieces:
            if piece.x0.lo <= src.lo and src.hi <= piece.x1.hi:
                v0 = piece.value_at(_match_cell(c0 + tau, piece))
                v1 = piece.value_at(_match_cell(c1 + tau, piece))
                pieces.append(Piece(c0, c1, v0, v1))
                break
        else:
            raise PotentialError(f"shift: no source piece for window at {mid}")
    return Potential(pieces)


def _match_cell(x: Interval, piece: Piece) -> Interval:
    """Reduce x mod 1 into the period copy overlapping the given piece."""
    r = _reduce_mod1(x)
    if r.lo > piece.x1.hi:
        r = r - 1.0
    elif r.hi < piece.x0.lo:
        r = r + 1.0
    return r


@dataclass(frozen=True)
class InterfaceSpec:
    """Two-sided interface: potential v1 for x >= 0, v2 for x < 0, with
    spectral parameter lam below min(inf v1, inf v2)."""

    v1: Potential
    v2: Potential
    lam: Interval
    kind: str = "general"
    base: Potential | None = None
    tau: Interval | None = field(default=None)

    def __post_init__(self):
        floor_v = min(self.v1.inf_over_period(), self.v2.inf_over_period())
        if not self.lam.hi < floor_v:
            raise SpectralConditionError(
                f"sup lambda = {self.lam.hi} not below min inf V = {floor_v}"
            )

    @classmethod
    def general(cls, v1: Potential, v2: Potential, lam) -> "InterfaceSpec":
        return cls(v1=v1, v2=v2, lam=to_interval(lam), kind="general")

    @classmethod
    def dislocation(cls, base: Potential, tau, lam) -> "InterfaceSpec":
        """Dislocation interface: v1(x) = base(x - tau), v2(x) = base(x + tau)
        (both sides shifts of one cell, so their periodic ground-state
        energies coincide)."""
        tau = to_interval(tau)
        if tau.lo < 0.0 or tau.hi > 1.0:
            raise PotentialError(f"dislocation shift {tau} outside [0, 1]")
        return cls(
            v1=shift(base, -tau),
            v2=shift(base, tau),
            lam=to_interval(lam),
            kind="dislocation",
            base=base,
            tau=tau,
        )
