"""Jacobian syzygies, Tjurina numbers and freeness of plane curves.

Everything here is finite-dimensional linear algebra on graded pieces of
the Jacobian ideal ``J_f = (f_x, f_y, f_z)``; see :mod:`syzlab.graded`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .algebra import HPoly
from .graded import GradedIdeal, NoPlateau, dim_R

__all__ = [
    "NoPlateau",
    "SyzygyVec",
    "Freeness",
    "JacobianReport",
    "DPWCheck",
    "Jacobian",
    "syzygy_space",
    "mdr",
    "hilbert_function",
    "tjurina",
    "dpw_check",
    "dpw_bounds",
    "resolution_probe",
    "lift_syzygy",
    "analyze",
]


@dataclass(frozen=True)
class SyzygyVec:
    """A relation ``a*f_x + b*f_y + c*f_z = 0`` with ``a, b, c`` of one degree."""

    a: HPoly
    b: HPoly
    c: HPoly
    f: HPoly | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        # a zero entry takes the degree of the others
        nonzero = {e.degree for e in (self.a, self.b, self.c) if not e.is_zero()}
        if len(nonzero) == 1:
            deg = nonzero.pop()
            for name in "abc":
                if getattr(self, name).is_zero():
                    object.__setattr__(self, name, HPoly.zero(deg))
        if not (self.a.degree == self.b.degree == self.c.degree):
            raise ValueError("syzygy entries must share a degree")

    @property
    def degree(self) -> int:
        return self.a.degree

    @property
    def entries(self) -> tuple[HPoly, HPoly, HPoly]:
        return self.a, self.b, self.c

    def __iter__(self):
        return iter(self.entries)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero() and self.c.is_zero()

    def apply(self, g: HPoly) -> HPoly:
        """The derivation ``a*d/dx + b*d/dy + c*d/dz`` applied to ``g``."""
        gx, gy, gz = g.gradient()
        return self.a * gx + self.b * gy + self.c * gz

    def is_valid(self, f: HPoly | None = None) -> bool:
        f = self.f if f is None else f
        if f is None:
            raise ValueError("no polynomial to check the relation against")
        return self.apply(f).is_zero()

    def scaled(self, k) -> "SyzygyVec":
        return SyzygyVec(self.a * k, self.b * k, self.c * k, self.f)

    def times(self, h: HPoly) -> "SyzygyVec":
        return SyzygyVec(self.a * h, self.b * h, self.c * h, self.f)

    def to_vector(self) -> list[Fraction]:
        return self.a.to_vector() + self.b.to_vector() + self.c.to_vector()

    @classmethod
    def from_vector(cls, vec: Sequence, degree: int, f: HPoly | None = None) -> "SyzygyVec":
        n = dim_R(degree)
        if len(vec) != 3 * n:
            raise ValueError(f"expected {3 * n} coordinates for degree {degree}")
        parts = [HPoly.from_vector(vec[i * n : (i + 1) * n], degree) for i in range(3)]
        return cls(*parts, f=f)

    def normalized(self) -> "SyzygyVec":
        """Scale to coprime integer coefficients with a positive first nonzero coordinate."""
        vec = self.to_vector()
        nz = [c for c in vec if c]
        if not nz:
            return self
        den = math.lcm(*(c.denominator for c in nz))
        g = math.gcd(*(int(c * den) for c in nz))
        k = Fraction(den, g)
        if nz[0] < 0:
            k = -k
        return self.scaled(k)

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class Freeness:
    """Outcome of :func:`resolution_probe`.

    ``kind`` is one of ``free``, ``nearly_free``, ``neither`` or
    ``concurrent_lines``; ``generator_degrees`` lists the minimal syzygy
    generators found in degrees up to ``d - 1`` (partial data for ``neither``).
    """

    kind: str
    exponents: tuple[int, int] | None
    generator_degrees: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "free":
            return "Free({},{})".format(*self.exponents)
        if self.kind == "nearly_free":
            return "NearlyFree({},{})".format(*self.exponents)
        if self.kind == "concurrent_lines":
            return "ConcurrentLines"
        return "Neither({})".format(",".join(map(str, self.generator_degrees)))

    @property
    def is_free(self) -> bool:
        return self.kind == "free"

    @property
    def is_nearly_free(self) -> bool:
        return self.kind == "nearly_free"


class DPWCheck(NamedTuple):
    lower: int
    upper: int
    tau: int
    holds: bool


@dataclass(frozen=True)
class JacobianReport:
    d: int
    r: int
    tau: int
    dpw_lower: int | None
    dpw_upper: int | None
    freeness: Freeness
    hilbert_table: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "r": self.r,
            "tau": self.tau,
            "dpw_lower": self.dpw_lower,
            "dpw_upper": self.dpw_upper,
            "freeness": str(self.freeness),
            "freeness_kind": self.freeness.kind,
            "exponents": list(self.freeness.exponents) if self.freeness.exponents else None,
            "generator_degrees": list(self.freeness.generator_degrees),
            "hilbert_table": [list(p) for p in self.hilbert_table],
        }


def dpw_bounds(d: int, r: int) -> tuple[int, int]:
    """The du Plessis-Wall interval for a degree-``d`` curve with ``mdr = r``."""
    lower = (d - 1) * (d - r - 1)
    return lower, lower + r * r


class Jacobian:
    """The Jacobian ideal of ``f`` together with memoized graded data.

    A fresh instance holds all intermediate bases for one curve, so repeated
    queries (``mdr``, ``tjurina``, ``resolution_probe``) share work.
    """

    def __init__(self, f: HPoly):
        if f.is_zero():
            raise ValueError("the zero polynomial defines no curve")
        if f.degree < 1:
            raise ValueError("a curve needs degree at least 1")
        self.f = f
        self.d = f.degree
        self.partials = f.gradient()
        self.ideal = GradedIdeal(self.partials)
        self._mdr: int | None = None
        self._tau: int | None = None

    def syzygy_space(self, t: int) -> list[SyzygyVec]:
        if t < 0:
            return []
        return [SyzygyVec.from_vector(v, t, self.f).normalized() for v in self.ideal.syzygies(t)]

    def syzygy_dim(self, t: int) -> int:
        return len(self.ideal.syzygy_basis(t))

    def mdr(self) -> int:
        if self._mdr is None:
            # Koszul relations guarantee a syzygy in degree d - 1
            for t in range(self.d):
                if self.ideal.syzygy_basis(t):
                    self._mdr = t
                    break
            else:
                raise AssertionError("no syzygy up to degree d-1; Koszul relations missing")
        return self._mdr

    def hilbert_function(self, t: int) -> int:
        return self.ideal.hilbert(t)

    def tjurina(self) -> int:
        if self._tau is None:
            self._tau = self.ideal.stable_value(self.d)
        return self._tau

    def dpw_check(self) -> DPWCheck:
        r = self.mdr()
        if r == 0:
            raise ValueError("du Plessis-Wall bounds do not apply to concurrent lines (mdr = 0)")
        lower, upper = dpw_bounds(self.d, r)
        tau = self.tjurina()
        return DPWCheck(lower, upper, tau, lower <= tau <= upper)

    def resolution_probe(self) -> Freeness:
        d = self.d
        degrees = tuple(self.ideal.generator_degrees(d - 1))
        if self.mdr() == 0:
            return Freeness("concurrent_lines", None, degrees)
        if len(degrees) == 2 and sum(degrees) == d - 1:
            return Freeness("free", (degrees[0], degrees[1]), degrees)
        if len(degrees) == 3 and degrees[1] == degrees[2] and degrees[0] + degrees[1] == d:
            return Freeness("nearly_free", (degrees[0], degrees[1]), degrees)
        return Freeness("neither", None, degrees)

    def hilbert_table(self) -> tuple[tuple[int, int], ...]:
        self.tjurina()
        last = self.ideal.plateau[1]
        return tuple((t, self.ideal.hilbert(t)) for t in range(0, last + 1))

    def report(self) -> JacobianReport:
        r = self.mdr()
        tau = self.tjurina()
        lower, upper = dpw_bounds(self.d, r) if r >= 1 else (None, None)
        return JacobianReport(
            d=self.d,
            r=r,
            tau=tau,
            dpw_lower=lower,
            dpw_upper=upper,
            freeness=self.resolution_probe(),
            hilbert_table=self.hilbert_table(),
        )


def syzygy_space(f: HPoly, t: int) -> list[SyzygyVec]:
    """Basis of ``Syz(J_f)_t``: kernel of ``(a, b, c) -> a f_x + b f_y + c f_z`` on ``(R_t)^3``."""
    return Jacobian(f).syzygy_space(t)


def mdr(f: HPoly) -> int:
    """Minimal degree of a Jacobian syzygy; 0 exactly when the partials are dependent."""
    return Jacobian(f).mdr()


def hilbert_function(f: HPoly, t: int) -> int:
    """``dim (R/J_f)_t``."""
    return Jacobian(f).hilbert_function(t)


def tjurina(f: HPoly) -> int:
    """Global Tjurina number, read off as the stable value of the Hilbert function.

    Raises :class:`NoPlateau` when no constant window is found, which
    happens for non-reduced input.
    """
    return Jacobian(f).tjurina()


def dpw_check(f: HPoly) -> DPWCheck:
    return Jacobian(f).dpw_check()


def resolution_probe(f: HPoly) -> Freeness:
    """Free / nearly free discrimination from minimal syzygy generators of degree < d."""
    return Jacobian(f).resolution_probe()


def analyze(f: HPoly) -> JacobianReport:
    return Jacobian(f).report()


def lift_syzygy(delta1: SyzygyVec, f1: HPoly, f2: HPoly) -> SyzygyVec:
    """Lift a syzygy of ``f1`` to one of ``f1*f2``.

    Returns ``f2*delta1 - (delta1(f2)/d) * (x, y, z)`` with ``d = deg f1 + deg f2``.
    """
    if not delta1.is_valid(f1):
        raise ValueError("delta1 is not a syzygy of f1")
    if f2.degree < 1 or f2.is_zero():
        raise ValueError("f2 must be a nonconstant form")
    d = f1.degree + f2.degree
    x, y, z = HPoly.gens()
    h = delta1.apply(f2) * Fraction(1, d)
    f = f1 * f2
    return SyzygyVec(f2 * delta1.a - h * x, f2 * delta1.b - h * y, f2 * delta1.c - h * z, f)
