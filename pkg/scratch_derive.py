# Derive correct closed-form dislocation I1(tau), I2(tau) for s=1/2 by exact
# symbolic integration; check branch structure; emit factored expressions.
import sympy as sp

al, be, kap, tau = sp.symbols("alpha beta kappa tau", positive=True)
x1, x2, x3, x4 = sp.symbols("x1 x2 x3 x4", real=True)  # cell coefficients
y = sp.symbols("y", real=True)
a, b = sp.symbols("a b", real=True)

# u cell on [0,1): branch A on [0,1/2): x1*e^{al y} + x2*e^{-al y}
#                  branch B on [1/2,1): x3*e^{be y} + x4*e^{-be y}
# u_minus multiplier: u(y + n) = e^{kappa n} u_cell(y), growing to +inf
# u_plus  multiplier: u(y + n) = e^{-kappa n} u_cell(y)


def usq_int(coeffs, g, lo, hi):
    """integral of (A e^{g y} + B e^{-g y})^2 over [lo, hi]."""
    A, B = coeffs
    F = A**2 * sp.exp(2 * g * y) / (2 * g) + 2 * A * B * y - B**2 * sp.exp(-2 * g * y) / (2 * g)
    return F.subs(y, hi) - F.subs(y, lo)


def piece_int_minus(lo, hi, nshift):
    """integral of u_minus(y)^2 over [lo,hi], where y+... lies in cell branch;
    nshift = floor(y); caller guarantees [lo,hi] within one branch."""
    mult = sp.exp(2 * kap * nshift)
    r_lo, r_hi = lo - nshift, hi - nshift
    mid = sp.Rational(1, 2)
    # decide branch from the (symbolic) midpoint assuming resolved ordering
    return mult, r_lo, r_hi


def branch_int(coeffs, g, r_lo, r_hi):
    return usq_int(coeffs, g, r_lo, r_hi)


A_coef = (x1, x2)
B_coef = (x3, x4)

half = sp.Rational(1, 2)

# ---- I1, subcase tau in (0, 1/4) ----
# pieces (diff, y-range, u-branch, n):
I1_A = (
    (b - a) * sp.exp(-2 * kap) * branch_int(A_coef, al, tau - 1 + 1, 2 * tau - 1 + 1)
    + (a - b) * sp.exp(-2 * kap) * branch_int(B_coef, be, -half + 1, 2 * tau - half + 1)
    + (b - a) * branch_int(A_coef, al, 0, tau)
)

# ---- I1, subcase tau in (1/4, 1/2) ----
I1_B = (
    (b - a) * sp.exp(-2 * kap) * branch_int(A_coef, al, tau - 1 + 1, -half + 1)
    + (a - b) * sp.exp(-2 * kap) * branch_int(B_coef, be, -half + 1, 0 + 1)
    + (b - a) * branch_int(A_coef, al, 0, 2 * tau - half)
)

diff_AB = sp.simplify(sp.expand(I1_A - I1_B))
print("I1 subcase (0,1/4) == subcase (1/4,1/2):", diff_AB == 0, "| diff:", diff_AB)

# ---- I1, tau in (1/2, 3/4) ----
# y in [tau-1, tau], tau in (1/2,3/4): breakpoints of V0(y): y in {-1/2+1? ...}
# V0(y): y in [tau-1,-1/2)? tau-1 in (-1/2,-1/4) so no; y in [tau-1, 0): y+1 in
# [tau, 1) -> b ; y in [0, 1/2): a ; y in [1/2, tau): b.
# V0(y-2tau): z = y-2tau in [-tau-1, -tau] subset [-7/4, -1/2]:
#   z in [-3/2, -1) -> z+2 in [1/2, 1) -> b ; z in [-1, -1/2) -> z+1 in [0,1/2) -> a
#   breakpoints: y = 2tau - 3/2 (in (tau-1, 0) iff tau > 1/2 ... 2tau-3/2 vs tau-1:
#   > iff tau > 1/2 ok; < 0 iff tau < 3/4 ok), y = 2tau - 1 (in (0, 1/2) for tau in (1/2,3/4))
#   values: y in [tau-1, 2tau-3/2): z in [-tau-1, -3/2): z+2 in [1-tau, 1/2)?? careful:
#   z+2 in [1-tau, 1/2) with 1-tau in (1/4,1/2) -> a
#   y in [2tau-3/2, 2tau-1): z in [-3/2,-1) -> b ; y in [2tau-1, tau): z in [-1,-tau) -> z+1 in [0,1-tau) subset [0,1/2) -> a
# diffs: [tau-1, 2tau-3/2): a-b (u: b-branch n=-1)
#        [2tau-3/2, 0): b-b=0
#        [0, 2tau-1): b-a (u: a-branch n=0)
#        [2tau-1, 1/2): a-a=0
#        [1/2, tau): a-b (u: b-branch n=0)
I1_C = (
    (a - b) * sp.exp(-2 * kap) * branch_int(B_coef, be, tau - 1 + 1, 2 * tau - (sp.Rational(3, 2)) + 1)
    + (b - a) * branch_int(A_coef, al, 0, 2 * tau - 1)
    + (a - b) * branch_int(B_coef, be, half, tau)
)

# ---- I1, tau in (3/4, 1) ----
# V0(y), y in [tau-1, tau]: y in [tau-1, 0): y+1 in [tau,1) -> b; [0,1/2): a; [1/2, tau): b
# V0(y-2tau): z in [-tau-1, -tau] subset [-2, -3/4]:
#   y = 2tau-3/2 in (0, 1/2) for tau in (3/4,1); y = 2tau-2 in (-1/2, 0); y = 2tau-1 in (1/2,1)
#   y in [tau-1, 2tau-2): z in [-tau-1,-2): z+2 in [1-tau, 0)?? 1-tau<... z+2 in [1-tau,0) is wrong;
#   z in [-tau-1, -2) -> z+2 in [1-tau, 0) impossible; recompute: tau-1-2tau = -tau-1 in (-2,-7/4);
#   z+2 in (0, 1/4)ish -> a. breakpoint where z+2 = 1/2: z = -3/2: y = 2tau-3/2.
#   z in [-3/2,-1): z+2 in [1/2,1) -> b. z in [-1,-tau): z+1 in [0,1-tau) -> a.
#   y in [tau-1, 2tau-3/2): diff a-b (u: b-branch n=-1)
#   y in [2tau-3/2, 0): diff b-b = 0
#   y in [0, 2tau-3/2)?? no: 2tau-3/2 in (0,1/2) now. Redo ordering for tau in (3/4,1):
#   breakpoints: 2tau-2 (in (-1/2,0)), 2tau-3/2 (in (0,1/2)), plus V0(y) breaks at 0, 1/2.
#   y in [tau-1, 2tau-2): z in [-tau-1, -2): z+2 in [1-tau, 0+)... z+2 in [1-tau, 0)->
#   hmm z < -2 -> z+3? No: z >= -2 here since z in [-tau-1,-2) requires -tau-1 < -2 i.e. tau > 1,
#   so this piece is EMPTY for tau < 1.
#   So: y in [tau-1, 2tau-2): empty. Start: z in [-2, -3/2): z+2 in [0,1/2) -> a:
#   y - 2tau in [-2,-3/2) -> y in [2tau-2, 2tau-3/2): covers [tau-1, ...) once 2tau-2 <= tau-1
#   iff tau <= 1 ok so piece1: y in [tau-1, 2tau-3/2): V0(y-2tau)=a
#     sub-split by u/V0(y) breaks at 0: [tau-1, 0): diff a-b (u b-branch n=-1)
#                                        [0, 2tau-3/2): diff a-a=0 (u a-branch)
#   piece2: y in [2tau-3/2, 2tau-1): V0(y-2tau)=b: [2tau-3/2, 1/2): diff b-a (u a-branch n=0)
#           [1/2, 2tau-1): diff b-b = 0
#   piece3: y in [2tau-1, tau): V0(y-2tau)=a: diff a-b (u b-branch n=0)
I1_D = (
    (a - b) * sp.exp(-2 * kap) * branch_int(B_coef, be, tau - 1 + 1, 0 + 1)
    + (b - a) * branch_int(A_coef, al, 2 * tau - sp.Rational(3, 2), half)
    + (a - b) * branch_int(B_coef, be, 2 * tau - 1, tau)
)

diff_CD = sp.simplify(sp.expand(I1_C - I1_D))
print("I1 subcase (1/2,3/4) == subcase (3/4,1):", diff_CD == 0, "| diff:", diff_CD)

# ---- I2 ----
# I2 = int_{-tau}^{1-tau} (V0(y+2tau) - V0(y)) u_plus(y)^2 dy
# subcase tau in (0,1/4): pieces:
#  [-tau, 0): a-b (u: b-branch, n=-1, multiplier e^{+2kap})
#  [1/2-2tau, 1/2): b-a (u: a-branch, n=0)
#  [1-2tau, 1-tau): a-b (u: b-branch, n=0)
I2_A = (
    (a - b) * sp.exp(2 * kap) * branch_int(B_coef, be, -tau + 1, 0 + 1)
    + (b - a) * branch_int(A_coef, al, half - 2 * tau, half)
    + (a - b) * branch_int(B_coef, be, 1 - 2 * tau, 1 - tau)
)
# subcase tau in (1/4,1/2):
#  [-tau, 1/2-2tau): a-b (u: b-branch n=-1)
#  [0, 1-2tau): b-a (u: a-branch n=0)
#  [1/2, 1-tau): a-b (u: b-branch n=0)
I2_B = (
    (a - b) * sp.exp(2 * kap) * branch_int(B_coef, be, -tau + 1, half - 2 * tau + 1)
    + (b - a) * branch_int(A_coef, al, 0, 1 - 2 * tau)
    + (a - b) * branch_int(B_coef, be, half, 1 - tau)
)
print("I2 subcase (0,1/4) == subcase (1/4,1/2):", sp.simplify(sp.expand(I2_A - I2_B)) == 0)

# subcase tau in (1/2,3/4): y in [-tau, 1-tau], 1-tau in (1/4,1/2)
# V0(y): [-tau,-1/2): y+1 in [1-tau,1/2)->a ; [-1/2,0): b ; [0,1-tau): a
# V0(y+2tau): z in [tau, 1+tau]: breaks z=1/2? z>=tau>1/2 no; z=1: y=1-2tau (in (-1/2,0));
#   z=3/2: y=3/2-2tau (in (0,1/2): interior iff < 1-tau iff tau < 1/2 NO -> not interior for tau>1/2)
#   so z in [tau,1): b ; z-1 in [0, tau]: [1-2tau, ...): z-1 in [0,1/2)->a for z-1<1/2 i.e. y<3/2-2tau (>=1-tau? 3/2-2tau vs 1-tau: >= iff tau<=1/2 no -> 3/2-2tau < 1-tau) hmm:
#   for tau in (1/2,3/4): 3/2-2tau in (0,1/2) and 1-tau in (1/4,1/2): 3/2-2tau < 1-tau iff 1/2<tau ok
#   so interior break at y=3/2-2tau after all! z-1 in [1/2, tau) -> b for y in [3/2-2tau, 1-tau)
# pieces: [-tau, 1-2tau): b-a (u: a-branch n=-1)
#         [1-2tau, -1/2): a-b?? wait z>=1 for y>=1-2tau: 1-2tau in (-1/2,0) and -1/2 < 1-2tau
#         ordering: -tau < -1/2 < 1-2tau < 0 < 3/2-2tau < 1-tau
#         [-tau,-1/2): V0(y)=a, V0(y+2tau): z in [tau, 2tau-1/2): z<1 iff y<1-2tau yes -> b: diff b-a (u a-branch n=-1)
#         [-1/2, 1-2tau): V0(y)=b, V0(z)=b: 0
#         [1-2tau, 0): V0(y)=b, z-1 in [0, 2tau-1+0?): z-1 in [0,...,2tau-1) subset [0,1/2) -> a: diff a-b (u b-branch n=-1)
#         [0, 3/2-2tau): V0(y)=a, z-1 in [2tau-1, 1/2) -> a: 0
#         [3/2-2tau, 1-tau): V0(y)=a, z-1 in [1/2, tau) -> b: diff b-a (u a-branch n=0)
I2_C = (
    (b - a) * sp.exp(2 * kap) * branch_int(A_coef, al, -tau + 1, -half + 1)
    + (a - b) * sp.exp(2 * kap) * branch_int(B_coef, be, 1 - 2 * tau + 1, 0 + 1)
    + (b - a) * branch_int(A_coef, al, sp.Rational(3, 2) - 2 * tau, 1 - tau)
)
# subcase tau in (3/4,1): y in [-tau, 1-tau], 1-tau in (0,1/4)
# ordering: -tau < -1/2 < 1-2tau?? 1-2tau in (-1,-1/2) -> -tau < 1-2tau iff tau < 1 ok and
#   1-2tau < -1/2 : so -tau < 1-2tau < -1/2 < 3/2-2tau?? 3/2-2tau in (-1/2,0) -> < 0 < 1-tau
# pieces: [-tau, 1-2tau): V0(y): y+1 in [1-tau, 2-2tau): 2-2tau in (0,1/2): so y+1 crossing 1?
#   no: y in [-tau,1-2tau) -> y+1 in [1-tau, 2-2tau) crosses 1 at y=0? 0 not in range (range < -1/2).
#   y+1 in [1-tau,1)-> a?? 1-tau in (0,1/4) -> y+1 in (0, 1/2) portion -> a until y+1 = 1/2?? y = -1/2 not in range yet.
#   hmm 2-2tau <= 1/2 iff tau >= 3/4 ok so y+1 stays in [1-tau, 2-2tau) subset (0, 1/2] -> a
#   V0(y+2tau): z in [tau, 1): b  -> diff b-a (u a-branch n=-1)
#   [1-2tau, -1/2): V0(y)=a (y+1 in (2-2tau, 1/2)subset); V0: z-1 in [0, 2tau-3/2) subset [0,1/2) -> a: 0
#   [-1/2, 3/2-2tau): V0(y)=b (y+1 in [1/2, ...)); z-1 in [2tau-3/2, 1/2) -> a: diff a-b (u b-branch n=-1)
#   [3/2-2tau, 0): V0(y)=b; z-1 in [1/2, 2tau-1) -> b: 0
#   [0, 1-tau): V0(y)=a; z-1 in [2tau-1, tau) subset [1/2,1) -> b: diff b-a (u a-branch n=0)
I2_D = (
    (b - a) * sp.exp(2 * kap) * branch_int(A_coef, al, -tau + 1, 1 - 2 * tau + 1)
    + (a - b) * sp.exp(2 * kap) * branch_int(B_coef, be, -half + 1, sp.Rational(3, 2) - 2 * tau + 1)
    + (b - a) * branch_int(A_coef, al, 0, 1 - tau)
)
print("I2 subcase (1/2,3/4) == subcase (3/4,1):", sp.simplify(sp.expand(I2_C - I2_D)) == 0)

for name, expr in [("I1_low", I1_A), ("I1_high", I1_C), ("I2_low", I2_A), ("I2_high", I2_C)]:
    e = sp.simplify(sp.collect(sp.expand(expr), [x1**2, x2**2, x3**2, x4**2, x1 * x2, x3 * x4]))
    print(f"--- {name} ---")
    print(e)
