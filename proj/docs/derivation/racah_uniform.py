"""Symbolic and numerical checks behind the uniform Racah coefficients.

Run with `python3 racah_uniform.py`. Needs sympy and mpmath.

1. Substitutes alpha = 1/a, beta = 1/(ab), delta = (1/(bdv) + 1)/a, N = 1/(bv)
   into the rescaled Racah recurrence and prints the factored B and C.
2. Compares the resulting closed form with direct evaluation on a grid.
3. Fits each boundary stratum against its target family at the sample point.
"""
import itertools

import mpmath as mp
import sympy as sp

n, al, be, de, N = sp.symbols("n alpha beta delta N")
a, b, d, v = sp.symbols("a b d v", positive=True)


def racah_bc(al, be, de, N, n):
    s = al + be
    t1 = (n + s + 1) * (n + al + 1) * (n + be + de + 1) * (N - n) / ((2 * n + s + 1) * (2 * n + s + 2))
    t2 = n * (n + be) * (de - al - n) * (n + N + s + 1) / ((2 * n + s) * (2 * n + s + 1))
    c = (n * (n + al) * (n + be) * (n + s) * (n + be + de) * (de - al - n) * (n + N + s + 1) * (N + 1 - n)
         / ((2 * n + s - 1) * (2 * n + s) ** 2 * (2 * n + s + 1)))
    return t1 + t2, c


def racah_map(al, be, de, N, sqrt):
    s = al + be
    rho = sqrt(s ** 3 / (al * be * (be + de) * (N + s) * (de - al) * N))
    sigma = -N * (al + 1) * (be + de + 1) / (s + 2)
    return rho, sigma


def symbolic():
    sub = {al: 1 / a, be: 1 / (a * b), de: (1 / (b * d * v) + 1) / a, N: 1 / (b * v)}
    bn, cn = racah_bc(al, be, de, N, n)
    _, sigma = racah_map(al, be, de, N, sp.sqrt)
    shifted = sp.factor(sp.together(bn + sigma))
    print("B_n + sigma =", shifted)
    s = al + be
    rho2 = s ** 3 / (al * be * (be + de) * (N + s) * (de - al) * N)
    print("rho^2 C_n =", sp.factor(sp.together((rho2 * cn).subs(sub))))
    print("rho^2 (B_n + sigma)^2 =", sp.factor(sp.together((rho2 * shifted ** 2).subs(sub))))


def poly_p(a, b, d, v, n):
    return (4*a**3*b**3*d*n**2*v**2 + 4*a**3*b**3*d*n*v**2 + 2*a**2*b**3*d*n**2*v**2
            + 6*a**2*b**3*d*n*v**2 + 2*a**2*b**3*d*v**2 + 2*a**2*b**2*d*n**2*v**2
            + 6*a**2*b**2*d*n*v**2 + 2*a**2*b**2*d*v**2 + 2*a*b**3*d*n*v**2 + 3*a*b**3*d*v**2
            + 4*a*b**2*d*n*v**2 + 4*a*b**2*d*v**2 + a*b**2*d*v + 2*a*b**2*v + 2*a*b*d*n*v**2
            + a*b*d*v**2 - 2*a*b*v + 2*a*b - a*d*v - 2*a + b**3*d*v**2 + 2*b**2*d*v**2
            + b**2*v + b*d*v**2 - v)


def uniform(a, b, d, v, n):
    u = a * b / (1 + b)
    w = 0 if a == 0 and v == 0 else a * b * v / (a + v + b * v)
    e = a * b * d * v / (1 + d * v + b * d * v)
    c = (n * (1 + n * a) * (1 + n * a * b) * (1 + n * e) * (1 - n * a * b * d * v) * (1 - (n - 1) * b * v)
         * (1 + (n + 1) * w) * (1 + n * u)
         / ((1 + (2 * n - 1) * u) * (1 + 2 * n * u) ** 2 * (1 + (2 * n + 1) * u)))
    energy = (1 + b) * (a + v + b * v) * (1 + d * v + b * d * v)
    g = 0 if a == 0 and v == 0 else poly_p(a, b, d, v, n) / mp.sqrt(energy)
    bn = -n * (1 + (n + 1) * u) / ((1 + 2 * u) * (1 + 2 * n * u) * (1 + (2 * n + 2) * u)) * g
    return bn, c


def direct(a, b, d, v, n):
    al = 1 / a
    be, de, nn = al / b, (1 / (b * d * v) + 1) * al, 1 / (b * v)
    rho, sigma = racah_map(al, be, de, nn, mp.sqrt)
    bn, cn = racah_bc(al, be, de, nn, n)
    return rho * (bn + sigma), rho ** 2 * cn


def grid_check():
    worst = 0
    grid = [mp.mpf("0.05"), mp.mpf("0.1"), mp.mpf("0.2")]
    for a_, b_, d_, v_ in itertools.product(grid, repeat=4):
        for k in range(9):
            b1, c1 = uniform(a_, b_, d_, v_, k)
            b2, c2 = direct(a_, b_, d_, v_, k)
            scale = max(abs(b2), mp.sqrt(abs(c2)) if k > 0 else 1)
            worst = max(worst, abs(b1 - b2) / scale, abs(c1 - c2) / abs(c2) if k > 0 else 0)
    print("uniform vs direct, worst relative deviation:", mp.nstr(worst, 5))


def hermite(k):
    return 0, mp.mpf(k) / 2


def laguerre(al):
    return lambda k: (2 * k + al + 1, k * (k + al))


def jacobi(al, be):
    def f(k):
        s = al + be
        bn = (be ** 2 - al ** 2) / ((2 * k + s) * (2 * k + s + 2))
        cn = 4*k*(k + al)*(k + be)*(k + s) / ((2*k + s - 1)*(2*k + s)**2*(2*k + s + 1)) if k else 0
        return bn, cn
    return f


def hahn(al, be, nn):
    def f(k):
        s = al + be
        up = lambda j: (j + s + 1) * (j + al + 1) * (nn - j) / ((2 * j + s + 1) * (2 * j + s + 2))
        down = lambda j: j * (j + s + nn + 1) * (j + be) / ((2 * j + s) * (2 * j + s + 1))
        return up(k) + down(k), up(k - 1) * down(k) if k else 0
    return f


def meixner(be, c):
    c = 1 / c if c > 1 else c
    return lambda k: ((k + (k + be) * c) / (1 - c), k * (k + be - 1) * c / (1 - c) ** 2)


def krawtchouk(p, nn):
    return lambda k: (p * (nn - k) + k * (1 - p), k * p * (1 - p) * (nn + 1 - k))


def charlier(x):
    return lambda k: (k + x, x * k)


def racah(al, be, de, nn):
    return lambda k: racah_bc(al, be, de, nn, k)


# zero set letters: a = 1/alpha, b = 1/b, d = 1/d, v = 1/nu
ROWS = [
    ("", lambda a, b, d, v: racah(1 / a, 1 / (a * b), (1 / (b * d * v) + 1) / a, 1 / (b * v))),
    ("d", lambda a, b, d, v: hahn(1 / a, 1 / (a * b), 1 / (b * v))),
    ("v", lambda a, b, d, v: jacobi(1 / a, 1 / (a * b))),
    ("b", lambda a, b, d, v: meixner(1 / a + 1, a * (1 + d * v) / (a + v))),
    ("a", lambda a, b, d, v: krawtchouk(b * (1 + d * v * (1 + b)) / (1 + b * (1 + d * v * (1 + b))), 1 / (b * v))),
    ("dv", lambda a, b, d, v: jacobi(1 / a, 1 / (a * b))),
    ("db", lambda a, b, d, v: meixner(1 / a + 1, a * (1 + d * v) / (a + v))),
    ("da", lambda a, b, d, v: krawtchouk(b * (1 + d * v * (1 + b)) / (1 + b * (1 + d * v * (1 + b))), 1 / (b * v))),
    ("vb", lambda a, b, d, v: laguerre(1 / a)),
    ("va", lambda a, b, d, v: hermite),
    ("ba", lambda a, b, d, v: charlier(1 / v + d)),
    ("dvb", lambda a, b, d, v: laguerre(1 / a)),
    ("dva", lambda a, b, d, v: hermite),
    ("dba", lambda a, b, d, v: charlier(1 / v + d)),
    ("vba", lambda a, b, d, v: hermite),
    ("dvba", lambda a, b, d, v: hermite),
]


def fit(a, b, d, v, cand, n_max=8):
    best = None
    for o in (1, -1):
        rho = mp.sqrt(uniform(a, b, d, v, 1)[1] / cand(1)[1])
        sigma = uniform(a, b, d, v, 0)[0] / rho - o * cand(0)[0]
        res = 0
        for k in range(n_max + 1):
            bn, cn = uniform(a, b, d, v, k)
            cb, cc = cand(k)
            bh, ch = rho * (o * cb + sigma), rho ** 2 * cc
            length = mp.sqrt(abs(cn) if k else uniform(a, b, d, v, 1)[1])
            res = max(res, abs(bn - bh) / max(abs(bn), abs(bh), length))
            if k:
                res = max(res, abs(cn - ch) / abs(cn))
        if best is None or res < best[0]:
            best = (res, o, rho, sigma)
    return best


def row_check():
    mp.mp.dps = 30
    sample = dict(a=mp.mpf("0.25"), b=mp.mpf("0.5"), d=mp.mpf("0.5"), v=mp.mpf("0.125"))
    for zeros, target in ROWS:
        p = {k: (mp.mpf(0) if k in zeros else x) for k, x in sample.items()}
        res, o, rho, sigma = fit(p["a"], p["b"], p["d"], p["v"], target(**p))
        print(f"{zeros or '-':5s} residual {mp.nstr(res, 3):10s} orientation {o:+d} "
              f"rho {mp.nstr(rho, 8)} sigma {mp.nstr(sigma, 8)}")


if __name__ == "__main__":
    mp.mp.dps = 40
    symbolic()
    grid_check()
    row_check()
