"""Exact syzygies, Tjurina numbers and eigenschemes of plane curves.

>>> from syzlab import parse_poly, analyze
>>> rep = analyze(parse_poly("y^4*z + x^5"))
>>> rep.r, rep.tau, str(rep.freeness)
(1, 12, 'NearlyFree(1,4)')
"""

from .algebra import (
    BinaryForm,
    DegreeMismatch,
    HPoly,
    NotDivisible,
    binary_gcd_squarefree,
    divides,
    evaluate,
    exact_divide,
    hessian_det,
    linear_change,
    monomials,
    partial_derivative,
    poly_arith,
    product,
    restrict_to_line,
    substitute,
)
from .arrangements import (
    CurveInput,
    FamilyTag,
    PencilClass,
    detect_pencil,
    generate_family,
    line_role,
    pair_class,
    recognize,
    validate,
)
from .eigenscheme import (
    HBMatrix,
    NotEigenscheme,
    NotZeroDimensional,
    Tensor,
    blowup_class,
    buchweitz_conca_matrix,
    contains_point,
    eigenscheme_degree,
    jacobian_to_tensor,
    minors_ideal,
)
from .exactla import QMat, kernel_basis, rank, span_equal
from .graded import NoPlateau
from .jacobian import (
    Freeness,
    Jacobian,
    JacobianReport,
    SyzygyVec,
    analyze,
    dpw_check,
    hilbert_function,
    lift_syzygy,
    mdr,
    resolution_probe,
    syzygy_space,
    tjurina,
)
from .parsing import ParseError, format_poly, parse_poly
from .polar import (
    PolarReport,
    contracted_component_lines,
    fiber_over_point,
    hessian_report,
    is_contracted,
    polar_degree_qh,
)

__version__ = "0.1.0"
