"""Print the reference values frozen in tests/fixtures.py, evaluated at 40 digits."""

from mpmath import acos, acosh, asinh, atanh, cos, cosh, log, mp, mpf, pi, sin, sinh, sqrt, tanh

mp.dps = 40


def s17(x):
    return mp.nstr(x, 17)


def quad(a, d):
    ell = acosh(sin(a) * cosh(d))
    L = atanh(cos(a) / (sin(a) * sinh(d)))
    h = asinh(cosh(d) * sinh(L)) - L
    s = tanh(d / 2)
    return ell, L, h, s, s * cos(a) / (1 + sin(a))


def tripod(ells):
    c = [cosh(mpf(x)) for x in ells]
    al = [acos((c[(i + 1) % 3] ** 2 + c[(i + 2) % 3] ** 2 - c[i] ** 2) / (2 * c[(i + 1) % 3] * c[(i + 2) % 3]))
          for i in range(3)]
    p = sum(c) / 2
    d = acosh(c[0] * c[1] * c[2] / (2 * sqrt(p * (p - c[0]) * (p - c[1]) * (p - c[2]))))
    Ls = [atanh(cos(a) / (sin(a) * sinh(d))) for a in al]
    return al, d, Ls


if __name__ == "__main__":
    print("QUAD_PI3_D1", [s17(x) for x in quad(pi / 3, mpf(1))])
    al, d, Ls = tripod(("1", "1", "1"))
    print("REGULAR d", s17(d), "L", s17(Ls[0]), "lambda", s17(2 * Ls[0]), "foot_radius", s17(tanh(d / 2)))
    dK = acosh(2 * cosh(d))
    LK = atanh(cos(al[0]) / (sin(al[0]) * sinh(dK)))
    k = acosh(2 * cosh(mpf(1)))
    print("REGULAR_K2 k", s17(k), "log_k", s17(log(k)), "L", s17(LK))
    al, d, Ls = tripod(("0.8", "1.0", "1.2"))
    print("SCALENE alphas", [s17(a) for a in al], "d", s17(d), "L", [s17(x) for x in Ls],
          "lambda", [s17(Ls[1] + Ls[2]), s17(Ls[0] + Ls[2]), s17(Ls[0] + Ls[1])])
    print("SCALENE_K2 k_i", [s17(acosh(2 * cosh(mpf(e))) / mpf(e)) for e in ("0.8", "1.0", "1.2")])
