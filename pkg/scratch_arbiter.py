# Arbiter: brute-force mpmath.quad of the defining integrals vs (a) the
# exact-integration oracle and (b) the printed branch formulas.
import sys

sys.path.insert(0, "tests")
from mpmath import mp, mpf

import oracles as O
from scratch_validate import mp_disloc_I1, mp_disloc_I2

mp.dps = 30


def brute_I1(a, b, lam, tau, s=0.5):
    bloch = O.PwcBloch(a, b, s, lam)
    tau = mpf(tau)

    def f(x):
        return (O._pwc_value(a, b, s, x - tau) - O._pwc_value(a, b, s, x + tau)) * bloch.u(x + tau, -1) ** 2

    pts = [mpf(-1)] + O._breakpoints(-1, 0, [tau, -tau], s) + [mpf(0)]
    return sum(mp.quad(f, [x1, x2]) for x1, x2 in zip(pts[:-1], pts[1:]))


def brute_I2(a, b, lam, tau, s=0.5):
    bloch = O.PwcBloch(a, b, s, lam)
    tau = mpf(tau)

    def f(x):
        return (O._pwc_value(a, b, s, x + tau) - O._pwc_value(a, b, s, x - tau)) * bloch.u(x - tau, +1) ** 2

    pts = [mpf(0)] + O._breakpoints(0, 1, [tau, -tau], s) + [mpf(1)]
    return sum(mp.quad(f, [x1, x2]) for x1, x2 in zip(pts[:-1], pts[1:]))


for (a, b, lam, tau) in [(1, 2, 0, 0.25), (1, 2, 0, 0.7), (1, 6, 0.94, 0.45)]:
    bf1 = brute_I1(a, b, lam, tau)
    or1 = O.oracle_integral_pwc_dislocation(a, b, lam, tau, "I1").value
    pf1 = mp_disloc_I1(a, b, lam, tau)
    bf2 = brute_I2(a, b, lam, tau)
    or2 = O.oracle_integral_pwc_dislocation(a, b, lam, tau, "I2").value
    pf2 = mp_disloc_I2(a, b, lam, tau)
    print(f"a={a} b={b} lam={lam} tau={tau}:")
    print(f"  I1 brute={mp.nstr(bf1, 12)} oracle={mp.nstr(or1, 12)} printed={mp.nstr(pf1, 12)}")
    print(f"  I2 brute={mp.nstr(bf2, 12)} oracle={mp.nstr(or2, 12)} printed={mp.nstr(pf2, 12)}")
