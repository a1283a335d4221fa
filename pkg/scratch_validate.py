# Scratch: validate the printed closed-form expressions against independent
# oracles before freezing them into the package.  Not part of the deliverable.
import sys

sys.path.insert(0, "tests")
from mpmath import mp, mpf

import oracles as O

mp.dps = 50


def mp_kappa_formula(a, b, s, lam):
    a, b, s, lam = map(mpf, (a, b, s, lam))
    al = mp.sqrt(a - lam)
    be = mp.sqrt(b - lam)
    rhs = (
        (al + be) ** 2 * mp.cosh(s * al + (1 - s) * be)
        - (al - be) ** 2 * mp.cosh(s * al - (1 - s) * be)
    ) / (4 * al * be)
    return mp.acosh(rhs)


print("=== kappa: arcosh formula vs det-bisection oracle ===")
for (a, b, s, lam) in [(1, 2, 0.5, 0), (1, 6, 0.5, 0.94), (1, 2, 0.5, 0.9),
                       (0.5, 2.5, 0.5, 0), (2, 2, 0.5, 0), (1, 2.5, 0.25, -1),
                       (-1, 3, 0.7, -2)]:
    k_form = mp_kappa_formula(a, b, s, lam)
    k_orac = O.oracle_kappa(a, b, s, lam).value
    print(f"  a={a} b={b} s={s} lam={lam}: formula={mp.nstr(k_form, 20)} "
          f"oracle={mp.nstr(k_orac, 20)} diff={mp.nstr(abs(k_form - k_orac), 3)}")

print("=== xi: printed formulas vs SVD nullspace (componentwise ratio) ===")
for (a, b, s, lam) in [(1, 2, 0.5, 0), (1, 6, 0.5, 0.94), (0.5, 2.5, 0.5, 0), (1, 2.5, 0.25, -1)]:
    k = O.oracle_kappa(a, b, s, lam).value
    for sign in (+1, -1):
        xi_form = O.mp_xi_plus(a, b, s, lam, sign * k)
        xi_null = O.oracle_xi_nullspace(a, b, s, lam, k, sign)
        ratios = [xi_form[i] / xi_null[i] for i in range(4) if abs(xi_null[i]) > 1e-25]
        spread = max(abs(r - ratios[0]) for r in ratios)
        print(f"  a={a} b={b} s={s} lam={lam} sign={sign:+d}: ratio spread={mp.nstr(spread, 3)}")

print("=== residual A(k) xi = 0 for printed xi ===")
for (a, b, s, lam) in [(1, 2, 0.5, 0), (1, 6, 0.5, 0.94)]:
    k = O.oracle_kappa(a, b, s, lam).value
    for sign in (+1, -1):
        A = O.pwc_matrix(a, b, s, lam, sign * k)
        xi = O.mp_xi_plus(a, b, s, lam, sign * k)
        res = max(abs(sum(A[i, j] * xi[j] for j in range(4))) for i in range(4))
        print(f"  a={a} b={b} lam={lam} sign={sign:+d}: residual={mp.nstr(res, 3)}")


def mp_disloc_I1(a, b, lam, tau):
    # printed branch formulas, s = 1/2
    a, b, lam, tau = map(mpf, (a, b, lam, tau))
    al = mp.sqrt(a - lam)
    be = mp.sqrt(b - lam)
    k = O.oracle_kappa(a, b, 0.5, lam).value
    x1, x2, x3, x4 = O.mp_xi_plus(a, b, 0.5, lam, -k)  # xi minus
    e = mp.e
    if tau < 0.5:
        Ta = x1**2 * e**((1 + 2*tau)*al) * (e**((2*tau - 1)*al) - 1) * (1 - e**(-2*tau*al)) \
           + x2**2 * e**(-(1 + 2*tau)*al) * (e**((1 - 2*tau)*al) - 1) * (e**(2*tau*al) - 1)
        Tb = x3**2 * e**((1 + 2*tau)*be) * (e**((1 - 2*tau)*be) - 1) * (e**(2*tau*be) - 1) \
           + x4**2 * e**(-(1 + 2*tau)*be) * (e**((2*tau - 1)*be) - 1) * (1 - e**(-2*tau*be))
    else:
        Ta = x1**2 * e**((1 + 2*tau)*al) * (e**((1 - 2*tau)*al) - 1) * (e**(2*(tau - 1)*al) - 1) \
           + x2**2 * e**(-(1 + 2*tau)*al) * (e**((2*tau - 1)*al) - 1) * (1 - e**(2*(1 - tau)*al))
        Tb = x3**2 * e**(2*(tau + 1)*be) * (e**((1 - 2*tau)*be) - 1) * (1 - e**(2*(tau - 1)*be)) \
           + x4**2 * e**(-2*(tau + 1)*be) * (e**((2*tau - 1)*be) - 1) * (e**(2*(1 - tau)*be) - 1)
    return (b - a) / (2 * al) * e**(-2*k) * Ta + (b - a) / (2 * be) * e**(-2*k) * Tb


def mp_disloc_I2(a, b, lam, tau):
    a, b, lam, tau = map(mpf, (a, b, lam, tau))
    al = mp.sqrt(a - lam)
    be = mp.sqrt(b - lam)
    k = O.oracle_kappa(a, b, 0.5, lam).value
    x1, x2, x3, x4 = O.mp_xi_plus(a, b, 0.5, lam, k)  # xi plus
    e = mp.e
    if tau < 0.5:
        Ta = x1**2 * e**((1 - 2*tau)*al) * (e**((2*tau - 1)*al) - 1) * (1 - e**(-2*tau*al)) \
           + x2**2 * e**((2*tau - 1)*al) * (e**((1 - 2*tau)*al) - 1) * (e**(2*tau*al) - 1)
        Tb = x3**2 * e**((1 - 2*tau)*be) * (e**((1 - 2*tau)*be) - 1) * (e**(2*tau*be) - 1) \
           + x4**2 * e**((2*tau - 1)*be) * (e**((2*tau - 1)*be) - 1) * (1 - e**(-2*tau*be))
    else:
        Ta = x1**2 * e**((1 - 2*tau)*al) * (e**((1 - 2*tau)*al) - 1) * (e**(2*(tau - 1)*al) - 1) \
           + x2**2 * e**((2*tau - 1)*al) * (e**((2*tau - 1)*al) - 1) * (1 - e**(2*(1 - tau)*al))
        Tb = x3**2 * e**(2*(1 - tau)*be) * (e**((1 - 2*tau)*be) - 1) * (1 - e**(2*(tau - 1)*be)) \
           + x4**2 * e**(2*(tau - 1)*be) * (e**((2*tau - 1)*be) - 1) * (e**(2*(1 - tau)*be) - 1)
    return (a - b) / (2 * al) * Ta + (a - b) / (2 * be) * Tb


print("=== dislocation I1/I2 printed formulas vs exact-integration oracle ===")
for (a, b, lam) in [(1, 2, 0), (1, 2, 0.94), (1, 6, 0), (1, 6, 0.94), (0.5, 3, -1)]:
    for tau in (0.25, 0.1, 0.45, 0.55, 0.7, 0.9):
        i1_f = mp_disloc_I1(a, b, lam, tau)
        i1_o = O.oracle_integral_pwc_dislocation(a, b, lam, tau, "I1").value
        i2_f = mp_disloc_I2(a, b, lam, tau)
        i2_o = O.oracle_integral_pwc_dislocation(a, b, lam, tau, "I2").value
        d1 = abs(i1_f - i1_o)
        d2 = abs(i2_f - i2_o)
        flag = "" if d1 < 1e-30 and d2 < 1e-30 else "  <-- MISMATCH"
        print(f"  a={a} b={b} lam={lam} tau={tau}: |dI1|={mp.nstr(d1,3)} |dI2|={mp.nstr(d2,3)}"
              f" (I1={mp.nstr(i1_f,8)}, I2={mp.nstr(i2_f,8)}){flag}")


def mp_general_I1(a1, b1, a2, b2, lam):
    a1, b1, a2, b2, lam = map(mpf, (a1, b1, a2, b2, lam))
    al = mp.sqrt(a1 - lam)
    be = mp.sqrt(b1 - lam)
    k1 = O.oracle_kappa(a1, b1, 0.5, lam).value
    x1, x2, x3, x4 = O.mp_xi_plus(a1, b1, 0.5, lam, -k1)
    e = mp.e
    return (
        e**(-2*k1) * (a2 - a1) * x1 * x2
        + e**(-2*k1) * (a2 - a1) / (2 * al) * (x1**2 * (e**al - 1) + x2**2 * (1 - e**-al))
        + e**(-2*k1) * (b2 - b1) * x3 * x4
        + e**(-2*k1) * (b2 - b1) / (2 * be)
        * (x3**2 * (e**(2*be) - e**be) + x4**2 * (e**-be - e**(-2*be)))
    )


def mp_general_I2(a1, b1, a2, b2, lam):
    a1, b1, a2, b2, lam = map(mpf, (a1, b1, a2, b2, lam))
    al = mp.sqrt(a2 - lam)
    be = mp.sqrt(b2 - lam)
    k2 = O.oracle_kappa(a2, b2, 0.5, lam).value
    z1, z2, z3, z4 = O.mp_xi_plus(a2, b2, 0.5, lam, k2)
    e = mp.e
    return (
        (a1 - a2) * z1 * z2
        + (a1 - a2) / (2 * al) * (z1**2 * (e**al - 1) + z2**2 * (1 - e**-al))
        + (b1 - b2) * z3 * z4
        + (b1 - b2) / (2 * be)
        * (z3**2 * (e**(2*be) - e**be) + z4**2 * (e**-be - e**(-2*be)))
    )


print("=== general-interface I1/I2 printed formulas vs exact-integration oracle ===")
for (a1, b1, a2, b2, lam) in [(0.5, 2.5, 2, 2, 0), (0.2, 2.5, 2, 2, 0.1),
                              (1.2, 2.5, 2, 2, 0.8), (1, 3, 1.5, 2.2, -0.5)]:
    i1_f = mp_general_I1(a1, b1, a2, b2, lam)
    i1_o = O.oracle_integral_pwc_general(a1, b1, a2, b2, lam, "I1").value
    i2_f = mp_general_I2(a1, b1, a2, b2, lam)
    i2_o = O.oracle_integral_pwc_general(a1, b1, a2, b2, lam, "I2").value
    d1, d2 = abs(i1_f - i1_o), abs(i2_f - i2_o)
    flag = "" if d1 < 1e-30 and d2 < 1e-30 else "  <-- MISMATCH"
    print(f"  a1={a1} b1={b1} a2={a2} b2={b2} lam={lam}: |dI1|={mp.nstr(d1,3)} "
          f"|dI2|={mp.nstr(d2,3)} (I1={mp.nstr(i1_f,8)}, I2={mp.nstr(i2_f,8)}){flag}")

print("=== sanity: reported sign facts ===")
print("  general a1=0.5,b1=2.5,a2=b2=2,lam=0: I1,I2 =",
      mp.nstr(mp_general_I1(0.5, 2.5, 2, 2, 0), 8), mp.nstr(mp_general_I2(0.5, 2.5, 2, 2, 0), 8))
print("  expect both negative")
for a1 in (0.9, 1.0, 1.3):
    print(f"  general a1={a1},lam=0.8: I2 =", mp.nstr(mp_general_I2(a1, 2.5, 2, 2, 0.8), 8), "expect > 0")
