"""Gram discriminants of the Hardy Z-function.

Gram points, Z-sections over the A-parameter space, the n-th Gram
discriminant with its closed-form gradient and Hessian, Gram-point
classification, viscosity, and repulsion scans.
"""

from .classification import (
    GramBlock,
    GramClassRecord,
    block_containing,
    blocks,
    classify,
    classify_range,
    is_isolated_bad,
    repulsion_scan,
    scan_rows,
)
from .curves import (
    CurveSpec,
    CurveTrace,
    curve_eval,
    sign_violations,
    suggest_shift_indices,
    trace_discriminant,
)
from .discriminant import (
    ContinuationOptions,
    DiscriminantRecord,
    ExtendedGramPoint,
    discriminant_gradient,
    extend_gram_point,
    gram_point_gradient,
    hessian_entry,
    hessian_form,
    second_order_approx,
    z_prime_via_gradient,
)
from .errors import (
    DomainError,
    ExtremumLost,
    GramError,
    NoConvergence,
    RangeUnclassifiable,
    WindowEscape,
)
from .gram import CoreZero, GramPoint, core_zero, gram_point, z0
from .kernels import BACKEND
from .section import (
    ParameterVector,
    SectionContext,
    hardy_z,
    term_table,
    z_afe,
    z_prime_afe,
    z_section,
    z_section_dt,
    z_section_dtt,
)
from .special import lambert_w0, theta, theta_prime, theta_second

__version__ = "0.1.0"
