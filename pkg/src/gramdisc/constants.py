"""Frozen convention constants.

HESSIAN_ZPRIME_FACTOR relates the Hessian quadratic form to the section
derivative at the Gram point:

    a^T Hess_n(0) a = HESSIAN_ZPRIME_FACTOR * (-1)^n * (Z_N'(g_n; a) / ln(g_n/2pi))^2

Candidates were 2 and 4.  Resolved by tools/resolve_hessian_factor.py
against the convention-free rank-one sum  sum_{k1,k2} a_k1 a_k2 Hess_k1k2
and the reference values H_90(1) = 0.00203615, H_126(1) = 2.22893:

    factor  n    form           rank-one sum   rel.gap    vs reference
    2       90   0.00101281708  0.00202563415  5.00e-01   -50.2582%
    2       126  1.11472441     2.22944883     5.00e-01   -49.9884%
    4       90   0.00202563415  0.00202563415  1.01e-14   -0.5165%
    4       126  2.22944883     2.22944883     0.00e+00   +0.0233%

Only 4 reproduces both the rank-one sum and the reference values
(H_90 within 0.52%, H_126 within 0.02%).
"""

HESSIAN_ZPRIME_FACTOR = 4.0
