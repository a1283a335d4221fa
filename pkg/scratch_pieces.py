# Validate the 4-branch piece tables for dislocation I1/I2 against brute force.
import sys

sys.path.insert(0, "tests")
from mpmath import mp, mpf

import oracles as O
from scratch_arbiter import brute_I1, brute_I2

mp.dps = 30

# piece = (r_lo(tau), L(tau), branch, n, sign); contribution =
#   sign * (b-a) * e^{+2*kappa*n (I1) | -2*kappa*n (I2)} * int_{r_lo}^{r_lo+L} cell^2
I1_PIECES = {
    "A": [(lambda t: t, lambda t: t, "a", -1, +1),
          (lambda t: mpf(1)/2, lambda t: 2*t, "b", -1, -1),
          (lambda t: mpf(0), lambda t: t, "a", 0, +1)],
    "B": [(lambda t: t, lambda t: mpf(1)/2 - t, "a", -1, +1),
          (lambda t: 2*t, lambda t: 1 - 2*t, "b", -1, -1),
          (lambda t: 2*t - mpf(1)/2, lambda t: mpf(1)/2 - t, "a", 0, +1)],
    "C": [(lambda t: t, lambda t: t - mpf(1)/2, "b", -1, -1),
          (lambda t: mpf(0), lambda t: 2*t - 1, "a", 0, +1),
          (lambda t: mpf(1)/2, lambda t: t - mpf(1)/2, "b", 0, -1)],
    "D": [(lambda t: t, lambda t: 1 - t, "b", -1, -1),
          (lambda t: 2*t - mpf(3)/2, lambda t: 2 - 2*t, "a", 0, +1),
          (lambda t: 2*t - 1, lambda t: 1 - t, "b", 0, -1)],
}
I2_PIECES = {
    "A": [(lambda t: 1 - t, lambda t: t, "b", -1, -1),
          (lambda t: mpf(1)/2 - 2*t, lambda t: 2*t, "a", 0, +1),
          (lambda t: 1 - 2*t, lambda t: t, "b", 0, -1)],
    "B": [(lambda t: 1 - t, lambda t: mpf(1)/2 - t, "b", -1, -1),
          (lambda t: mpf(0), lambda t: 1 - 2*t, "a", 0, +1),
          (lambda t: mpf(1)/2, lambda t: mpf(1)/2 - t, "b", 0, -1)],
    "C": [(lambda t: 1 - t, lambda t: t - mpf(1)/2, "a", -1, +1),
          (lambda t: 2 - 2*t, lambda t: 2*t - 1, "b", -1, -1),
          (lambda t: mpf(3)/2 - 2*t, lambda t: t - mpf(1)/2, "a", 0, +1)],
    "D": [(lambda t: 1 - t, lambda t: 1 - t, "a", -1, +1),
          (lambda t: mpf(1)/2, lambda t: 2 - 2*t, "b", -1, -1),
          (lambda t: mpf(0), lambda t: 1 - t, "a", 0, +1)],
}


def branch_of(tau):
    if tau <= 0.25:
        return "A"
    if tau <= 0.5:
        return "B"
    if tau <= 0.75:
        return "C"
    return "D"


def cell_int(bloch, xi, br, r_lo, L):
    A, B = (xi[0], xi[1]) if br == "a" else (xi[2], xi[3])
    g = bloch.alpha if br == "a" else bloch.beta

    def F(t):
        return A**2 * mp.e**(2*g*t) / (2*g) + 2*A*B*t - B**2 * mp.e**(-2*g*t) / (2*g)

    return F(r_lo + L) - F(r_lo)


def table_I(a, b, lam, tau, which):
    bloch = O.PwcBloch(a, b, 0.5, lam)
    t = mpf(tau)
    pieces = (I1_PIECES if which == "I1" else I2_PIECES)[branch_of(tau)]
    xi = bloch.xi_minus if which == "I1" else bloch.xi_plus
    msign = +1 if which == "I1" else -1
    total = mpf(0)
    for r_lo, L, br, n, sgn in pieces:
        mult = mp.e**(2 * msign * bloch.kappa * n)
        total += sgn * (mpf(b) - mpf(a)) * mult * cell_int(bloch, xi, br, r_lo(t), L(t))
    return total


bad = 0
for (a, b, lam) in [(1, 2, 0), (1, 6, 0.94), (0.5, 3, -1)]:
    for tau in (0.05, 0.1, 0.2, 0.25, 0.3, 0.4, 0.45, 0.5, 0.55, 0.6, 0.7, 0.75, 0.8, 0.9, 0.95):
        t1 = table_I(a, b, lam, tau, "I1")
        b1 = brute_I1(a, b, lam, tau)
        t2 = table_I(a, b, lam, tau, "I2")
        b2 = brute_I2(a, b, lam, tau)
        d1, d2 = abs(t1 - b1), abs(t2 - b2)
        ok = d1 < 1e-25 and d2 < 1e-25
        bad += not ok
        if not ok:
            print(f"MISMATCH a={a} b={b} lam={lam} tau={tau}: d1={mp.nstr(d1,3)} d2={mp.nstr(d2,3)}")
print("piece tables: ", "ALL MATCH" if bad == 0 else f"{bad} mismatches")
