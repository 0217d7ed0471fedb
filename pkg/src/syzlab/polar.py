"""Geometry of the polar map ``p -> grad f(p)``.

Only exact tests are used: contracted lines by a rank condition on the
restricted gradient, fiber sizes by squarefree parts of binary forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .algebra import BinaryForm, HPoly, as_point, binary_gcd_squarefree, divides, exact_divide, hessian_det, restrict_to_line
from .arrangements import CurveInput
from .eigenscheme import hilbert_burch_columns
from .exactla import kernel_basis, rank
from .jacobian import tjurina

__all__ = [
    "PolarReport",
    "FiberReport",
    "is_contracted",
    "restricted_gradient_pairwise_proportional",
    "line_points",
    "contracted_component_lines",
    "polar_degree_qh",
    "fiber_over_point",
    "hessian_report",
    "polar_report",
]


@dataclass
class FiberReport:
    line: HPoly
    roots_total: int
    roots_distinct: int
    degenerate: bool = False

    def to_dict(self) -> dict:
        return {
            "line": str(self.line),
            "roots_total": self.roots_total,
            "roots_distinct": self.roots_distinct,
            "degenerate": self.degenerate,
        }


@dataclass
class PolarReport:
    degree_estimate: int | None
    quasihomogeneous: bool
    contracted_lines: list[HPoly] = field(default_factory=list)
    hessian_divisible_by: list[int] = field(default_factory=list)
    hessian_divisible_by_f: bool = False
    hessian_quotient_vars: list[str] | None = None

    def to_dict(self) -> dict:
        return {
            "degree_estimate": self.degree_estimate,
            "quasihomogeneous_assumed": self.quasihomogeneous,
            "contracted_lines": [str(l) for l in self.contracted_lines],
            "hessian_divisible_by": self.hessian_divisible_by,
            "hessian_divisible_by_f": self.hessian_divisible_by_f,
            "hessian_quotient_vars": self.hessian_quotient_vars,
        }


def _restricted_gradient(f: HPoly, P, Q) -> list[BinaryForm]:
    if f.degree < 2:
        raise ValueError("contracted lines need deg f >= 2")
    return [restrict_to_line(g, P, Q) for g in f.gradient()]


def is_contracted(f: HPoly, P, Q) -> bool:
    """Whether the polar map sends the line ``PQ`` to a single point."""
    forms = _restricted_gradient(f, P, Q)
    r = rank([list(b.coefficients) for b in forms])
    if r == 0:
        raise ValueError("all partials vanish on the line; f is not reduced")
    return r == 1


def restricted_gradient_pairwise_proportional(f: HPoly, P, Q) -> bool:
    """Second formulation of :func:`is_contracted`: nonzero restricted partials are pairwise proportional."""
    forms = [b for b in _restricted_gradient(f, P, Q) if not b.is_zero()]
    if not forms:
        raise ValueError("all partials vanish on the line; f is not reduced")
    return all(forms[0].is_proportional(b) for b in forms[1:])


def line_points(l: HPoly):
    """Two distinct rational points spanning the line ``l = 0``."""
    if l.degree != 1 or l.is_zero():
        raise ValueError("not a line")
    P, Q = kernel_basis([l.to_vector()])
    return tuple(P), tuple(Q)


def contracted_component_lines(c: CurveInput) -> list[HPoly]:
    f = c.product
    return [l for l in c.lines if is_contracted(f, *line_points(l))]


def polar_degree_qh(f: HPoly) -> int:
    """``(d-1)^2 - tau``: the polar degree when every singularity is quasihomogeneous."""
    return (f.degree - 1) ** 2 - tjurina(f)


def fiber_over_point(f: HPoly, q) -> FiberReport:
    """Preimage of ``q`` under the polar map of a curve free with exponents ``(1, d-2)``.

    With Hilbert-Burch columns ``L`` and ``G`` the gradient is proportional
    to ``L(p) x G(p)``, so the fiber is the line ``q . L = 0`` cut with the
    curve ``q . G = 0``.
    """
    q = as_point(q)
    L, G = hilbert_burch_columns(f)
    line = sum((e * c for e, c in zip(L.entries, q)), HPoly.zero(1))
    curve = sum((e * c for e, c in zip(G.entries, q)), HPoly.zero(G.degree))
    P, Q = line_points(line)
    restricted = restrict_to_line(curve, P, Q)
    if restricted.is_zero():
        return FiberReport(line, 0, 0, degenerate=True)
    _, sqf = binary_gcd_squarefree(restricted)
    return FiberReport(line, restricted.degree, sqf.degree)


def hessian_report(f: HPoly, c: CurveInput | None = None) -> PolarReport:
    """Divisibility of the Hessian determinant by the line components and by ``f``."""
    if f.degree < 3:
        raise ValueError("Hessian report needs deg f >= 3")
    h = hessian_det(f)
    comps = c.components if c is not None else []
    div_by = [i for i, g in enumerate(comps) if g.degree == 1 and not h.is_zero() and divides(g, h)]
    by_f = not h.is_zero() and divides(f, h)
    qvars = sorted(exact_divide(h, f).variables()) if by_f else None
    return PolarReport(None, False, [], div_by, by_f, qvars)


def polar_report(c: CurveInput) -> PolarReport:
    f = c.product
    rep = hessian_report(f, c) if f.degree >= 3 else PolarReport(None, False)
    rep.degree_estimate = polar_degree_qh(f)
    rep.quasihomogeneous = True
    rep.contracted_lines = contracted_component_lines(c)
    return rep
