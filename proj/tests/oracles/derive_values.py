"""Independent high-precision oracle for the frozen expected values used in the
C++ test suites. Run: python3 tests/oracles/derive_values.py

Nothing here imports project code; every quantity is computed from the closed
forms (mpmath, 50 digits) or by direct enumeration.
"""
import mpmath as mp

mp.mp.dps = 50


def omega_d(m, k, mu):
    return mp.sqrt(4 * k / m - mu**2 / m**2) / 2


def period(m, k, mu):
    return 2 * mp.pi / omega_d(m, k, mu)


def ratio(m, k, mu):
    return mp.e ** (-mp.pi * (mu / m) / omega_d(m, k, mu))


def f_corrected(m, k, mu, g0):
    return abs(mp.log(g0)) * mp.sqrt(4 * k / m - mu**2 / m**2) / (2 * mp.pi * mu / m)


def f_printed(m, k, mu, g0):
    return mp.sqrt(mp.log(g0) ** 2 * (4 * k / m - mu**2 / m**2) / (4 * mp.pi * mu**2 / m**2))


def mu_for(m, k, g0, target):
    l2 = mp.log(g0) ** 2
    return m * mp.sqrt((l2 * k / m) / (target**2 * mp.pi**2 + l2 / 4))


def count_by_enumeration(m, k, mu, g0):
    # number of cycles i >= 1 with A_i / A_0 > g0
    r = ratio(m, k, mu)
    i = 0
    while r ** (i + 1) > g0:
        i += 1
    return i


def exact_x(m, k, mu, x0, v0, t):
    b = mu / (2 * m)
    w = omega_d(m, k, mu)
    return mp.e ** (-b * t) * (x0 * mp.cos(w * t) + (v0 + b * x0) / w * mp.sin(w * t))


P = dict(m=1, k=100)
mu = mp.mpf("0.73")
T = period(1, 100, mu)
print("T(mu=0)            ", mp.nstr(period(1, 100, 0), 17))
print("T(mu=0.73)         ", mp.nstr(T, 17))
print("omega_d(0.73)      ", mp.nstr(omega_d(1, 100, mu), 17))
print("10 T               ", mp.nstr(10 * T, 17))
print("r(0.73)            ", mp.nstr(ratio(1, 100, mu), 17))
print("A_1 (A0=5)         ", mp.nstr(5 * ratio(1, 100, mu), 17))
print("A_10/A0            ", mp.nstr(ratio(1, 100, mu) ** 10, 17))
print("A_11/A0            ", mp.nstr(ratio(1, 100, mu) ** 11, 17))
print("x(T), x0=5,v0=0    ", mp.nstr(exact_x(1, 100, mu, 5, 0, T), 17))
print("f corrected        ", mp.nstr(f_corrected(1, 100, mu, mp.mpf("0.1")), 17))
print("f printed          ", mp.nstr(f_printed(1, 100, mu, mp.mpf("0.1")), 17))
print("count enum         ", count_by_enumeration(1, 100, mu, mp.mpf("0.1")))
print("count enum g0=0.05 ", count_by_enumeration(1, 100, mu, mp.mpf("0.05")))
for M in (1, 10, 20):
    print(f"mu_for M={M:<3}        ", mp.nstr(mu_for(1, 100, mp.mpf('0.1'), M), 17))
for M in (1, 10, 20):
    print(f"mu_for M={M}+0.05     ", mp.nstr(mu_for(1, 100, mp.mpf('0.1'), M + mp.mpf('0.05')), 17))
g = mu_for(1, 100, mp.mpf("0.1"), mp.mpf("10.05"))
print("count enum g0=0.05 at mu(10.05)", count_by_enumeration(1, 100, g, mp.mpf("0.05")),
      mp.nstr(f_corrected(1, 100, g, mp.mpf("0.05")), 10))
print("E(0) x=-5          ", mp.nstr(mp.mpf(100) / 2 * 25, 17))
