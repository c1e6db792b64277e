"""Resolve the constant c in  a^T Hess a = c (-1)^n (Z'(g_n; a) / ln(g_n/2pi))^2.

Compares each candidate against the rank-one double sum of closed-form
Hessian entries (which carries no convention) and the reference values
H_90(1) = 0.00203615, H_126(1) = 2.22893.  The winner is frozen in
src/gramdisc/constants.py.
"""
import math

from gramdisc.discriminant import _closed, hessian_factor, z_prime_via_gradient
from gramdisc.section import ParameterVector

REFERENCE = {90: 0.00203615, 126: 2.22893}


def main():
    ones = ParameterVector.ones()
    print("factor  n    form           rank-one sum   rel.gap    vs reference")
    for c in (2.0, 4.0):
        for n, ref in REFERENCE.items():
            cl = _closed(n)
            v = hessian_factor(n)
            rank_one = cl.sign * math.fsum(v) ** 2
            form = c * cl.sign * (z_prime_via_gradient(n, ones) / cl.lg) ** 2
            gap = abs(form - rank_one) / abs(rank_one)
            print(f"{c:<7g} {n:<4d} {form:<14.9g} {rank_one:<14.9g} {gap:<10.2e} "
                  f"{(form - ref) / ref:+.4%}")


if __name__ == "__main__":
    main()
