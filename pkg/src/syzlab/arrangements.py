"""Conic-line arrangements of maximal and submaximal Tjurina number.

Nine families are built here in normal form or after a random change of
coordinates, and recognized again without normalizing coordinates:

========  ===============================  ==========
tag       normal form                      degree
========  ===============================  ==========
``L``     ``z * prod(a_i x + b_i y)``      ``m + 1``
``C1``    ``prod(x^2 + a_i (xz + y^2))``   ``2m``
``CL1``   ``x * C1``                       ``2m + 1``
``C2``    ``prod(xz + a_i y^2)``           ``2m``
``CL2``   ``x * C2``                       ``2m + 1``
``CL3``   ``x z * C2``                     ``2m + 2``
``CL4``   ``x y * C2``                     ``2m + 2``
``CL5``   ``x y z * C2``                   ``2m + 3``
``CL6``   ``y * C2``                       ``2m + 1``
========  ===============================  ==========

For ``L``, ``m`` counts the concurrent lines; otherwise it counts conics.
The conics of ``C1``/``CL1`` span a hyperosculating pencil, those of the
other conic families a bitangent pencil.
"""

from __future__ import annotations

import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .algebra import HPoly, linear_change, product
from .exactla import rank
from .jacobian import tjurina

__all__ = [
    "FamilyTag",
    "CurveInput",
    "Diagnostic",
    "PencilClass",
    "InvalidArrangement",
    "CONIC_FAMILIES",
    "family_degree",
    "generate_family",
    "random_params",
    "random_coordinate_change",
    "random_instance",
    "perturbed_instance",
    "change_coordinates",
    "validate",
    "conic_matrix",
    "pair_class",
    "detect_pencil",
    "line_role",
    "recognize",
    "MAX_TAU_TAGS",
    "MIN_TAU_TAGS",
]


class FamilyTag(enum.Enum):
    L = "L"
    C1 = "C1"
    C2 = "C2"
    CL1 = "CL1"
    CL2 = "CL2"
    CL3 = "CL3"
    CL4 = "CL4"
    CL5 = "CL5"
    CL6 = "CL6"
    NONE = "None"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, name: str) -> "FamilyTag":
        for tag in cls:
            if tag.value.lower() == name.lower():
                return tag
        raise ValueError(f"unknown family {name!r}")


MAX_TAU_TAGS = (FamilyTag.L, FamilyTag.C1, FamilyTag.CL1, FamilyTag.CL2, FamilyTag.CL3, FamilyTag.CL4, FamilyTag.CL5)
MIN_TAU_TAGS = (FamilyTag.C2, FamilyTag.CL6)

x, y, z = HPoly.gens()

# conic pencil ("hyper" or "bitangent") and the extra line components
CONIC_FAMILIES = {
    FamilyTag.C1: ("hyper", []),
    FamilyTag.CL1: ("hyper", [x]),
    FamilyTag.C2: ("bitangent", []),
    FamilyTag.CL2: ("bitangent", [x]),
    FamilyTag.CL3: ("bitangent", [x, z]),
    FamilyTag.CL4: ("bitangent", [x, y]),
    FamilyTag.CL5: ("bitangent", [x, y, z]),
    FamilyTag.CL6: ("bitangent", [y]),
}


class InvalidArrangement(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.message for d in self.diagnostics))


@dataclass(frozen=True)
class Diagnostic:
    kind: str  # zero | duplicate | degenerate_conic | high_degree
    message: str
    indices: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "message": self.message, "indices": list(self.indices)}


@dataclass
class CurveInput:
    """A curve given by its components; the product is computed once."""

    components: list[HPoly]
    _product: HPoly | None = field(default=None, repr=False, compare=False)

    @property
    def product(self) -> HPoly:
        if self._product is None:
            self._product = product(self.components)
        return self._product

    @property
    def degree(self) -> int:
        return sum(c.degree for c in self.components)

    @property
    def lines(self) -> list[HPoly]:
        return [c for c in self.components if c.degree == 1]

    @property
    def conics(self) -> list[HPoly]:
        return [c for c in self.components if c.degree == 2]


@dataclass(frozen=True)
class PencilClass:
    kind: str  # bitangent | hyperosculating | other
    basis: tuple[HPoly, ...] = ()

    def __str__(self) -> str:
        return self.kind.capitalize()


# -- construction -------------------------------------------------------------


def family_degree(tag: FamilyTag, m: int) -> int:
    if tag is FamilyTag.L:
        return m + 1
    return 2 * m + len(CONIC_FAMILIES[tag][1])


def _conic(kind: str, a) -> HPoly:
    if kind == "hyper":
        return x * x + (x * z + y * y) * a
    return x * z + y * y * a


def generate_family(tag: FamilyTag, params: Sequence, normal_form: bool = True, rng=None) -> CurveInput:
    """Components of a family member.

    ``params`` are pairs ``(a, b)`` for ``L`` (the lines ``a x + b y``)
    and the pencil parameters ``a_i`` otherwise.  With ``normal_form``
    false a random integer coordinate change drawn from ``rng`` is applied.
    """
    if tag is FamilyTag.NONE:
        raise ValueError("cannot generate the None family")
    if tag is FamilyTag.L:
        pairs = [(Fraction(a), Fraction(b)) for a, b in params]
        if len(pairs) < 2:
            raise ValueError("a concurrent-line family needs at least 2 lines through the point (d >= 3)")
        for i, (a, b) in enumerate(pairs):
            if a == 0 and b == 0:
                raise ValueError(f"line parameter {i} is zero")
        for (i, p), (j, q) in itertools.combinations(enumerate(pairs), 2):
            if p[0] * q[1] == p[1] * q[0]:
                raise ValueError(f"line parameters {i} and {j} give the same line")
        comps = [z] + [x * a + y * b for a, b in pairs]
    else:
        kind, lines = CONIC_FAMILIES[tag]
        values = [Fraction(a) for a in params]
        if len(values) < 2:
            raise ValueError("a conic family needs m >= 2 conics")
        if any(a == 0 for a in values):
            raise ValueError("pencil parameters must be nonzero")
        if len(set(values)) != len(values):
            raise ValueError("pencil parameters must be distinct")
        comps = list(lines) + [_conic(kind, a) for a in values]
    c = CurveInput(comps)
    if not normal_form:
        if rng is None:
            raise ValueError("random coordinates need an rng")
        c = change_coordinates(c, random_coordinate_change(rng))
    return c


def change_coordinates(c: CurveInput, M) -> CurveInput:
    return CurveInput([linear_change(g, M) for g in c.components])


def _rng(seed_or_rng):
    if isinstance(seed_or_rng, np.random.Generator):
        return seed_or_rng
    return np.random.default_rng(seed_or_rng)


def random_params(tag: FamilyTag, m: int, rng) -> list:
    """Distinct nonzero integers in [-9, 9]; for ``L``, pairwise independent integer pairs."""
    rng = _rng(rng)
    if tag is FamilyTag.L:
        # x, y and lines x + a y with distinct nonzero slopes a
        slopes = rng.choice([a for a in range(-9, 10) if a], size=max(m - 2, 0), replace=False)
        return [(1, 0), (0, 1)][:m] + [(1, int(a)) for a in slopes]
    values = rng.choice([a for a in range(-9, 10) if a], size=m, replace=False)
    return [int(a) for a in values]


def random_coordinate_change(rng) -> list[list[int]]:
    """Integer 3x3 matrix with determinant in [1, 50]."""
    rng = _rng(rng)
    while True:
        M = rng.integers(-3, 4, size=(3, 3)).tolist()
        det = (
            M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
            - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
            + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
        )
        if 1 <= det <= 50:
            return M


def random_instance(tag: FamilyTag, m: int, rng, normal_form: bool = False) -> tuple[CurveInput, list]:
    rng = _rng(rng)
    params = random_params(tag, m, rng)
    return generate_family(tag, params, normal_form=normal_form, rng=rng), params


def perturbed_instance(tag: FamilyTag, params: Sequence, eps=1, M=None) -> CurveInput:
    """Negative control: move one component off its pencil (or off the concurrency point).

    A conic gains ``eps * x^2``, or ``eps * z^2`` when ``x^2`` is itself a
    member of the pencil; for ``L`` the last concurrent line gains ``eps * z``.
    """
    c = generate_family(tag, params)
    comps = list(c.components)
    if tag is FamilyTag.L:
        comps[-1] = comps[-1] + z * eps
    else:
        kind = CONIC_FAMILIES[tag][0]
        bump = (z * z if kind == "hyper" else x * x) * eps
        comps[-1] = comps[-1] + bump
    out = CurveInput(comps)
    return change_coordinates(out, M) if M is not None else out


# -- validation -------------------------------------------------------------


def conic_matrix(q: HPoly) -> list[list[Fraction]]:
    """Symmetric matrix ``S`` with ``q = (x,y,z) S (x,y,z)^T``."""
    if q.degree != 2:
        raise ValueError("not a conic")
    S = [[Fraction(0)] * 3 for _ in range(3)]
    for e, c in q.terms.items():
        idx = [i for i in range(3) for _ in range(e[i])]
        i, j = idx
        if i == j:
            S[i][i] = c
        else:
            S[i][j] = S[j][i] = c / 2
    return S


def validate(c: CurveInput, recognition: bool = True) -> list[Diagnostic]:
    """Problems with ``c``; an empty list means it is a valid reduced input."""
    out = []
    for i, g in enumerate(c.components):
        if g.is_zero() or g.degree == 0:
            out.append(Diagnostic("zero", f"component {i} is constant or zero", (i,)))
        elif recognition and g.degree == 2:
            r = rank(conic_matrix(g))
            if r < 3:
                out.append(Diagnostic("degenerate_conic", f"conic component {i} is degenerate (rank {r})", (i,)))
        elif recognition and g.degree >= 3:
            out.append(Diagnostic("high_degree", f"component {i} has degree {g.degree} >= 3", (i,)))
    for i, j in itertools.combinations(range(len(c.components)), 2):
        a, b = c.components[i], c.components[j]
        if a.degree == b.degree and not a.is_zero() and a.is_proportional(b):
            out.append(Diagnostic("duplicate", f"components {i} and {j} are proportional", (i, j)))
    return out


# -- pencils ------------------------------------------------------------------


def pair_class(c1: HPoly, c2: HPoly) -> str:
    """``tacnodal`` (tau = 6), ``hyperosculating`` (tau = 7) or ``other`` for two smooth conics."""
    bad = validate(CurveInput([c1, c2]))
    if bad:
        raise InvalidArrangement(bad)
    tau = tjurina(c1 * c2)
    return {6: "tacnodal", 7: "hyperosculating"}.get(tau, "other")


def detect_pencil(conics: Sequence[HPoly]) -> PencilClass:
    conics = list(conics)
    if len(conics) < 2:
        raise ValueError("a pencil needs at least 2 conics")
    if rank([q.to_vector() for q in conics]) != 2:
        return PencilClass("other")
    kinds = {pair_class(a, b) for a, b in itertools.combinations(conics, 2)}
    if len(kinds) != 1:
        return PencilClass("other")
    kind = kinds.pop()
    if kind == "other":
        return PencilClass("other")
    basis = (conics[0], conics[1])
    return PencilClass("bitangent" if kind == "tacnodal" else "hyperosculating", basis)


def line_role(l: HPoly, pencil: PencilClass) -> str:
    """``tangent``, ``base`` or ``generic`` for a line against a special pencil.

    In a hyperosculating pencil the only singular member is the double
    tangent line at the base point, so ``l^2`` in the span marks a tangent
    line there; in a bitangent pencil it marks the line through the two
    base points.
    """
    if pencil.kind not in ("bitangent", "hyperosculating"):
        raise ValueError("line roles are defined only for bitangent or hyperosculating pencils")
    if l.degree != 1 or l.is_zero():
        raise ValueError("not a line")
    basis = [q.to_vector() for q in pencil.basis]
    square_in = rank(basis + [(l * l).to_vector()]) == 2
    if pencil.kind == "hyperosculating":
        return "tangent" if square_in else "generic"
    if square_in:
        return "base"
    # some l * l' in the pencil iff the two spans meet
    products = [(l * v).to_vector() for v in (x, y, z)]
    if rank(basis + products) < 5:
        return "tangent"
    return "generic"


# (pencil kind, tangent lines, base lines) -> family
_INVENTORY = {
    ("hyperosculating", 0, 0): FamilyTag.C1,
    ("hyperosculating", 1, 0): FamilyTag.CL1,
    ("bitangent", 0, 0): FamilyTag.C2,
    ("bitangent", 1, 0): FamilyTag.CL2,
    ("bitangent", 2, 0): FamilyTag.CL3,
    ("bitangent", 1, 1): FamilyTag.CL4,
    ("bitangent", 2, 1): FamilyTag.CL5,
    ("bitangent", 0, 1): FamilyTag.CL6,
}


def _intersection(l1: HPoly, l2: HPoly):
    a, b = [l.to_vector() for l in (l1, l2)]
    p = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    lead = next(c for c in p if c)
    return tuple(c / lead for c in p)


def _recognize_lines(lines: list[HPoly]) -> FamilyTag:
    d = len(lines)
    if d < 3:
        return FamilyTag.NONE
    points = Counter(_intersection(a, b) for a, b in itertools.combinations(lines, 2))
    P, _ = points.most_common(1)[0]
    through = sum(1 for l in lines if l(*P) == 0)
    return FamilyTag.L if through == d - 1 else FamilyTag.NONE


def recognize(c: CurveInput) -> FamilyTag:
    high = [i for i, g in enumerate(c.components) if g.degree >= 3]
    if high:
        raise ValueError(f"component {high[0]} has degree >= 3; only lines and conics are recognized")
    bad = validate(c)
    if bad:
        raise InvalidArrangement(bad)
    lines, conics = c.lines, c.conics
    if not conics:
        return _recognize_lines(lines)
    if len(conics) < 2:
        return FamilyTag.NONE
    pencil = detect_pencil(conics)
    if pencil.kind == "other":
        return FamilyTag.NONE
    roles = Counter(line_role(l, pencil) for l in lines)
    if roles["generic"]:
        return FamilyTag.NONE
    return _INVENTORY.get((pencil.kind, roles["tangent"], roles["base"]), FamilyTag.NONE)
