"""Eigenschemes of partially symmetric tensors and Hilbert-Burch matrices.

A tensor ``T = (g1, g2, g3)`` of degree ``e`` defines the subscheme cut out
by the 2x2 minors of::

    | x   y   z  |
    | g1  g2  g3 |

A Jacobian scheme is such an eigenscheme exactly when ``J_f`` has a
Hilbert-Burch matrix whose linear column has three independent entries:
writing that column as ``A @ (x, y, z)`` and the other as ``G``, the tensor
``A^{-1} G`` has the same minor ideal up to an invertible change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import flint

from .algebra import HPoly, as_point, partial_derivative
from .exactla import rank, span_equal
from .graded import GradedIdeal, NoPlateau
from .jacobian import Jacobian, SyzygyVec

__all__ = [
    "Tensor",
    "HBMatrix",
    "NotZeroDimensional",
    "NotEigenscheme",
    "minors_ideal",
    "eigenscheme_degree",
    "contains_point",
    "hilbert_burch_columns",
    "jacobian_to_tensor",
    "buchweitz_conca_matrix",
    "blowup_class",
    "random_tensor",
]

x, y, z = HPoly.gens()


class NotZeroDimensional(ValueError):
    """The minors do not cut out a finite scheme."""


class NotEigenscheme(ValueError):
    """The Jacobian scheme is not the eigenscheme of any tensor; ``reason`` says why."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class Tensor:
    g1: HPoly
    g2: HPoly
    g3: HPoly

    def __post_init__(self):
        if not (self.g1.degree == self.g2.degree == self.g3.degree):
            raise ValueError("tensor components must share a degree")
        if self.degree < 1:
            raise ValueError("tensor degree must be at least 1")
        if all(g.is_zero() for g in self.components):
            raise ValueError("the zero tensor has no eigenscheme")

    @property
    def degree(self) -> int:
        return self.g1.degree

    @property
    def components(self) -> tuple[HPoly, HPoly, HPoly]:
        return self.g1, self.g2, self.g3

    def __str__(self) -> str:
        return f"({self.g1}, {self.g2}, {self.g3})"


@dataclass(frozen=True)
class HBMatrix:
    """3x2 Hilbert-Burch matrix: a linear column and a column of higher degree."""

    linear_column: tuple[HPoly, HPoly, HPoly]
    high_column: tuple[HPoly, HPoly, HPoly]

    def minors(self) -> tuple[HPoly, HPoly, HPoly]:
        (a1, a2, a3), (b1, b2, b3) = self.linear_column, self.high_column
        return a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1


def minors_ideal(T: Tensor) -> tuple[HPoly, HPoly, HPoly]:
    g1, g2, g3 = T.components
    return x * g2 - y * g1, x * g3 - z * g1, y * g3 - z * g2


def eigenscheme_degree(T: Tensor) -> int:
    """Length of the eigenscheme, as the stable Hilbert function of R / minors."""
    minors = minors_ideal(T)
    if all(m.is_zero() for m in minors):
        raise NotZeroDimensional("all minors vanish: every point is an eigenpoint")
    ideal = GradedIdeal(minors)
    try:
        return ideal.stable_value(T.degree + 2)
    except NoPlateau as exc:
        raise NotZeroDimensional(f"Hilbert function keeps growing ({exc})") from None


def contains_point(T: Tensor, P) -> bool:
    P = as_point(P)
    return all(m(*P) == 0 for m in minors_ideal(T))


def _span_vectors(polys: Sequence[HPoly]) -> list[list[Fraction]]:
    return [p.to_vector() for p in polys]


def _coefficient_matrix(L: Sequence[HPoly]) -> list[list[Fraction]]:
    # L_i = A[i] . (x, y, z)
    return [[l.coeff(e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))] for l in L]


def hilbert_burch_columns(f: HPoly) -> tuple[SyzygyVec, SyzygyVec]:
    """The linear syzygy and a complementary syzygy of degree ``d - 2`` of a curve
    free with exponents ``(1, d - 2)``.

    Raises :class:`NotEigenscheme` when the linear syzygy is missing or not unique,
    or the curve is not free with those exponents.
    """
    J = Jacobian(f)
    d = J.d
    if J.mdr() != 1:
        raise NotEigenscheme("no linear syzygy", f"mdr = {J.mdr()}")
    lin = J.syzygy_space(1)
    if len(lin) != 1:
        raise NotEigenscheme("linear syzygy not unique", f"dim Syz_1 = {len(lin)}")
    probe = J.resolution_probe()
    if not (probe.is_free and probe.exponents == (1, d - 2)):
        raise NotEigenscheme("not free with exponents (1, d-2)", str(probe))
    new = J.ideal.new_generators(d - 2)
    if not new:
        raise NotEigenscheme("no syzygy of degree d-2 independent of the linear one")
    G = SyzygyVec.from_vector([Fraction(c) for c in new[0]], d - 2, f).normalized()
    return lin[0], G


def jacobian_to_tensor(f: HPoly) -> Tensor:
    """A tensor whose eigenscheme is the Jacobian scheme of ``f``.

    Raises :class:`NotEigenscheme` with a ``reason`` when none exists, in
    particular when the linear syzygy has dependent entries.
    """
    L, G = hilbert_burch_columns(f)
    A = _coefficient_matrix(L.entries)
    if rank(A) < 3:
        raise NotEigenscheme("entries dependent", f"linear syzygy {L} has dependent entries")
    Ainv = flint.fmpq_mat(3, 3, [flint.fmpq(c.numerator, c.denominator) for row in A for c in row]).inv()
    inv = [[Fraction(int(Ainv[i, j].p), int(Ainv[i, j].q)) for j in range(3)] for i in range(3)]
    comps = [sum((G.entries[j] * inv[i][j] for j in range(3)), HPoly.zero(G.degree)) for i in range(3)]
    T = Tensor(*comps)
    if not span_equal(_span_vectors(minors_ideal(T)), _span_vectors(f.gradient())):
        raise NotEigenscheme("span mismatch", "minors do not span the partials in degree d-1")
    return T


def _diagonal_weights(s: SyzygyVec) -> tuple[Fraction, Fraction, Fraction]:
    weights = []
    for entry, e in zip(s.entries, ((1, 0, 0), (0, 1, 0), (0, 0, 1))):
        if entry.degree != 1 or any(k != e for k in entry.terms):
            raise ValueError(f"syzygy {s} is not of the shape (a x, b y, c z)")
        weights.append(entry.coeff(e))
    return tuple(weights)


def buchweitz_conca_matrix(f: HPoly, s: SyzygyVec) -> HBMatrix:
    """Hilbert-Burch matrix of ``J_f`` from a linear syzygy ``(a x, b y, c z)`` with ``abc != 0``."""
    if not s.is_valid(f):
        raise ValueError(f"{s} is not a syzygy of f")
    a, b, c = _diagonal_weights(s)
    if a * b * c == 0:
        raise ValueError("need abc != 0")
    d = f.degree
    k = Fraction(1, d + 2)
    fx, fy, fz = f.gradient()
    high = (
        partial_derivative(fy, "z") * ((1 / c - 1 / b) * k),
        partial_derivative(fx, "z") * ((1 / a - 1 / c) * k),
        partial_derivative(fx, "y") * ((1 / b - 1 / a) * k),
    )
    M = HBMatrix(s.entries, high)
    if not SyzygyVec(*high).is_valid(f):
        raise ArithmeticError("second column is not a syzygy")
    if not span_equal(_span_vectors(M.minors()), _span_vectors(f.gradient())):
        raise ArithmeticError("minors do not generate the Jacobian ideal")
    return M


def blowup_class(d: int) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients of ``h1^2, h1 h2, h2^2`` in the class of the graph of the polar map."""
    if d < 3:
        raise ValueError("blow-up class needs d >= 3")
    return Fraction(d - 1), Fraction(d), Fraction(1)


def random_tensor(e: int, rng, bound: int = 5) -> Tensor:
    """Tensor with independent integer coefficients in ``[-bound, bound]``."""
    n = (e + 1) * (e + 2) // 2
    while True:
        comps = [HPoly.from_vector([int(v) for v in rng.integers(-bound, bound + 1, size=n)], e) for _ in range(3)]
        if not all(g.is_zero() for g in comps):
            return Tensor(*comps)
