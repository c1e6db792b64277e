"""Regenerate ``src/gramdisc/_rs_coeffs.py``.

The Riemann-Siegel remainder terms C_0..C_4 are polynomials in
z = 2p - 1 (p the fractional part of sqrt(t / 2pi)) obtained from the
Taylor series of

    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)

which is entire, so a fixed-degree truncation is uniformly accurate on
|z| <= 1.  Coefficients are computed at 60 digits with mpmath and rounded
to binary64.

    python tools/gen_rs_coeffs.py > src/gramdisc/_rs_coeffs.py
"""
import mpmath as mp

DEGREE = 80
KEEP = 48


def psi(z):
    p = (z + 1) / 2
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def d_dp(coef, m):
    out = list(coef)
    for _ in range(m):
        out = [2 * (j + 1) * out[j + 1] for j in range(len(out) - 1)]
    return out


def combine(terms):
    size = max(len(d) for _, d in terms)
    res = [mp.mpf(0)] * size
    for factor, d in terms:
        for j, x in enumerate(d):
            res[j] += factor * x
    return res


def main():
    mp.mp.dps = 60
    pi = mp.pi
    c = mp.taylor(psi, 0, DEGREE)
    P = lambda m: d_dp(c, m)  # noqa: E731
    polys = [
        P(0),
        combine([(-1 / (96 * pi**2), P(3))]),
        combine([(1 / (64 * pi**2), P(2)), (1 / (18432 * pi**4), P(6))]),
        combine([
            (-1 / (64 * pi**2), P(1)),
            (-1 / (3840 * pi**4), P(5)),
            (-1 / (5308416 * pi**6), P(9)),
        ]),
        combine([
            (1 / (128 * pi**2), P(0)),
            (mp.mpf(19) / (24576 * pi**4), P(4)),
            (mp.mpf(11) / (5898240 * pi**6), P(8)),
            (1 / (2038431744 * pi**8), P(12)),
        ]),
    ]
    print('"""Riemann-Siegel remainder polynomials C_j(z), z = 2p - 1, ascending powers.')
    print()
    print("Generated by tools/gen_rs_coeffs.py; do not edit by hand.")
    print('"""')
    print()
    print("RS_COEFFS = (")
    for poly in polys:
        print("    (")
        for x in poly[:KEEP]:
            print(f"        {float(x)!r},")
        print("    ),")
    print(")")


if __name__ == "__main__":
    main()
