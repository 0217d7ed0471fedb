"""Exact homogeneous polynomials in x, y, z over the rationals.

Polynomials are stored sparsely as a mapping from exponent triples to
nonzero :class:`fractions.Fraction` coefficients.  Every polynomial carries
a degree tag, including the zero polynomial, so graded operations are total.

Binary forms in two parameters ``s, t`` appear when a ternary form is
restricted to a parametrized line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

import flint

__all__ = [
    "VARS",
    "DegreeMismatch",
    "NotDivisible",
    "HPoly",
    "BinaryForm",
    "monomials",
    "poly_arith",
    "partial_derivative",
    "evaluate",
    "restrict_to_line",
    "exact_divide",
    "divides",
    "binary_gcd_squarefree",
    "hessian_det",
    "substitute",
    "as_point",
    "linear_change",
    "product",
]

VARS = ("x", "y", "z")

Exponent = tuple[int, int, int]


class DegreeMismatch(ValueError):
    """Raised when adding or subtracting forms of different degrees."""


class NotDivisible(ArithmeticError):
    """Raised by :func:`exact_divide` when the quotient is not a polynomial."""


@lru_cache(maxsize=None)
def monomials(t: int) -> tuple[Exponent, ...]:
    """Exponent triples of degree ``t`` in descending graded-lex order."""
    if t < 0:
        return ()
    return tuple((i, j, t - i - j) for i in range(t, -1, -1) for j in range(t - i, -1, -1))


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"expected a rational coefficient, got {type(c).__name__}")


def _var_index(var) -> int:
    if isinstance(var, int):
        if var not in (0, 1, 2):
            raise ValueError(f"variable index must be 0, 1 or 2, got {var}")
        return var
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}") from None


class HPoly:
    """A homogeneous polynomial in ``x, y, z`` with rational coefficients.

    Instances are immutable by convention; all operations return new
    objects.  ``terms`` maps exponent triples to nonzero coefficients.

    >>> x, y, z = HPoly.gens()
    >>> (x + y) * (x - y) == x**2 - y**2
    True
    """

    __slots__ = ("degree", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, degree: int | None = None):
        clean: dict[Exponent, Fraction] = {}
        deg = degree
        for e, c in (terms or {}).items():
            c = _frac(c)
            if c == 0:
                continue
            e = (int(e[0]), int(e[1]), int(e[2]))
            if min(e) < 0:
                raise ValueError(f"negative exponent in {e}")
            s = sum(e)
            if deg is None:
                deg = s
            elif s != deg:
                raise DegreeMismatch(f"term {e} has degree {s}, expected {deg}")
            clean[e] = c
        if deg is None:
            deg = 0
        if deg < 0:
            raise ValueError("degree must be non-negative")
        self.degree: int = deg
        self.terms: dict[Exponent, Fraction] = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, degree: int = 0) -> "HPoly":
        return cls({}, degree)

    @classmethod
    def constant(cls, c) -> "HPoly":
        return cls({(0, 0, 0): c}, 0)

    @classmethod
    def var(cls, name) -> "HPoly":
        e = [0, 0, 0]
        e[_var_index(name)] = 1
        return cls({tuple(e): 1}, 1)

    @classmethod
    def gens(cls) -> tuple["HPoly", "HPoly", "HPoly"]:
        return cls.var(0), cls.var(1), cls.var(2)

    @classmethod
    def linear(cls, a, b, c) -> "HPoly":
        """The linear form ``a*x + b*y + c*z``."""
        return cls({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}, 1)

    @classmethod
    def from_vector(cls, coeffs: Sequence, degree: int) -> "HPoly":
        """Inverse of :meth:`to_vector`."""
        mons = monomials(degree)
        if len(coeffs) != len(mons):
            raise ValueError(f"expected {len(mons)} coefficients for degree {degree}")
        return cls({m: c for m, c in zip(mons, coeffs) if c}, degree)

    # -- queries ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def to_vector(self) -> list[Fraction]:
        """Coefficients in the :func:`monomials` basis of this degree."""
        return [self.terms.get(m, Fraction(0)) for m in monomials(self.degree)]

    def variables(self) -> set[str]:
        """Names of the variables that actually occur."""
        out = set()
        for e in self.terms:
            for k in range(3):
                if e[k]:
                    out.add(VARS[k])
        return out

    def leading(self) -> tuple[Exponent, Fraction]:
        e = max(self.terms)
        return e, self.terms[e]

    def content_denominator(self) -> int:
        """Least common multiple of the coefficient denominators."""
        return math.lcm(1, *(c.denominator for c in self.terms.values()))

    def integer_coefficients(self) -> dict[Exponent, int]:
        """Coefficients scaled to coprime integers (positive leading term)."""
        if not self.terms:
            return {}
        den = self.content_denominator()
        ints = {e: int(c * den) for e, c in self.terms.items()}
        g = math.gcd(*ints.values())
        if ints[max(ints)] < 0:
            g = -g
        return {e: v // g for e, v in ints.items()}

    def primitive(self) -> "HPoly":
        return HPoly(self.integer_coefficients(), self.degree)

    def is_proportional(self, other: "HPoly") -> bool:
        if self.degree != other.degree or self.is_zero() or other.is_zero():
            return False
        if self.terms.keys() != other.terms.keys():
            return False
        e = next(iter(self.terms))
        ratio = other.terms[e] / self.terms[e]
        return all(other.terms[k] == ratio * v for k, v in self.terms.items())

    # -- arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "HPoly":
        if isinstance(other, HPoly):
            return other
        return HPoly({(0, 0, 0): other}, 0) if other else HPoly.zero(0)

    def __add__(self, other) -> "HPoly":
        if not isinstance(other, HPoly):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot add degree {self.degree} and degree {other.degree}")
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return HPoly._raw(out, self.degree)

    def __neg__(self) -> "HPoly":
        return HPoly._raw({e: -c for e, c in self.terms.items()}, self.degree)

    def __sub__(self, other) -> "HPoly":
        if not isinstance(other, HPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "HPoly":
        if isinstance(other, HPoly):
            out: dict[Exponent, Fraction] = {}
            for (a0, a1, a2), c in self.terms.items():
                for (b0, b1, b2), d in other.terms.items():
                    e = (a0 + b0, a1 + b1, a2 + b2)
                    out[e] = out.get(e, 0) + c * d
            return HPoly._raw({e: c for e, c in out.items() if c}, self.degree + other.degree)
        try:
            k = _frac(other)
        except TypeError:
            return NotImplemented
        if k == 0:
            return HPoly.zero(self.degree)
        return HPoly._raw({e: c * k for e, c in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HPoly":
        if isinstance(other, HPoly):
            return exact_divide(self, other)
        k = _frac(other)
        if k == 0:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self * (1 / k)

    def __pow__(self, n: int) -> "HPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = HPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, HPoly):
            return NotImplemented
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .parsing import format_poly

        return f"HPoly({format_poly(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        from .parsing import format_poly

        return format_poly(self)

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items(), reverse=True))

    @classmethod
    def _raw(cls, terms: dict, degree: int) -> "HPoly":
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.terms = terms
        obj._hash = None
        return obj

    # -- calculus -------------------------------------------------------
    def diff(self, var) -> "HPoly":
        return partial_derivative(self, var)

    def gradient(self) -> tuple["HPoly", "HPoly", "HPoly"]:
        return partial_derivative(self, 0), partial_derivative(self, 1), partial_derivative(self, 2)

    def __call__(self, *point) -> Fraction:
        if len(point) == 1:
            point = point[0]
        return evaluate(self, point)


def poly_arith(op: str, *args) -> HPoly:
    """Dispatch ``add``, ``sub``, ``mul``, ``scale`` or ``pow`` on its arguments."""
    if op == "add":
        a, b = args
        return a + b
    if op == "sub":
        a, b = args
        return a - b
    if op == "mul":
        result = args[0]
        for g in args[1:]:
            result = result * g
        return result
    if op == "scale":
        f, k = args
        return f * _frac(k)
    if op == "pow":
        f, n = args
        return f**n
    raise ValueError(f"unknown operation {op!r}")


def partial_derivative(f: HPoly, var) -> HPoly:
    k = _var_index(var)
    out = {}
    for e, c in f.terms.items():
        if e[k]:
            ne = list(e)
            ne[k] -= 1
            out[tuple(ne)] = c * e[k]
    return HPoly._raw(out, max(f.degree - 1, 0))


def as_point(P) -> tuple[Fraction, Fraction, Fraction]:
    """Coerce a coordinate triple to rationals, rejecting the zero vector."""
    if len(P) != 3:
        raise ValueError("a projective point needs three coordinates")
    pt = tuple(_frac(c) for c in P)
    if not any(pt):
        raise ValueError("(0, 0, 0) is not a projective point")
    return pt


def evaluate(f: HPoly, P) -> Fraction:
    """Value of ``f`` at the affine representative ``P`` of a point."""
    p0, p1, p2 = as_point(P)
    total = Fraction(0)
    for (i, j, k), c in f.terms.items():
        total += c * p0**i * p1**j * p2**k
    return total


@dataclass(frozen=True)
class BinaryForm:
    """A form in ``s, t``; ``coefficients[i]`` multiplies ``s^(degree-i) t^i``."""

    degree: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.degree + 1:
            raise ValueError("a binary form of degree n needs n + 1 coefficients")
        object.__setattr__(self, "coefficients", tuple(_frac(c) for c in self.coefficients))

    @classmethod
    def zero(cls, degree: int) -> "BinaryForm":
        return cls(degree, (Fraction(0),) * (degree + 1))

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
        return BinaryForm(self.degree + other.degree, tuple(out))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if other.degree != self.degree:
            raise DegreeMismatch("binary forms of different degrees")
        return BinaryForm(self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, k) -> "BinaryForm":
        k = _frac(k)
        return BinaryForm(self.degree, tuple(c * k for c in self.coefficients))

    def __call__(self, s, t) -> Fraction:
        n = self.degree
        return sum((c * _frac(s) ** (n - i) * _frac(t) ** i for i, c in enumerate(self.coefficients)), Fraction(0))

    def is_proportional(self, other: "BinaryForm") -> bool:
        """True when the two forms are scalar multiples (the zero form is proportional to anything)."""
        if self.degree != other.degree:
            return False
        a, b = self.coefficients, other.coefficients
        return all(a[i] * b[j] == a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a)))

    # dehomogenization at t = 1: p(u) = g(u, 1), coefficient list in increasing powers of u
    def _dehomogenize(self) -> tuple[flint.fmpq_poly, int]:
        coeffs = list(reversed(self.coefficients))
        p = flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in coeffs])
        return p, self.degree - p.degree()

    @classmethod
    def _homogenize(cls, p: flint.fmpq_poly, degree: int) -> "BinaryForm":
        cs = [Fraction(int(c.p), int(c.q)) for c in p.coeffs()]
        cs += [Fraction(0)] * (degree + 1 - len(cs))
        return cls(degree, tuple(reversed(cs)))

    def __str__(self) -> str:
        parts = []
        n = self.degree
        for i, c in enumerate(self.coefficients):
            if c:
                parts.append(f"{c}*s^{n - i}*t^{i}")
        return " + ".join(parts) if parts else "0"


_T_FORM = BinaryForm(1, (0, 1))


def restrict_to_line(f: HPoly, P, Q) -> BinaryForm:
    """The binary form ``f(s*P + t*Q)`` of degree ``deg f``."""
    P, Q = as_point(P), as_point(Q)
    if all(P[i] * Q[j] == P[j] * Q[i] for i in range(3) for j in range(i + 1, 3)):
        raise ValueError("the two points coincide projectively")
    lin = [BinaryForm(1, (P[k], Q[k])) for k in range(3)]
    pows: list[list[BinaryForm]] = []
    for k in range(3):
        row = [BinaryForm(0, (1,))]
        for _ in range(f.degree):
            row.append(row[-1] * lin[k])
        pows.append(row)
    out = [Fraction(0)] * (f.degree + 1)
    for (i, j, k), c in f.terms.items():
        g = pows[0][i] * pows[1][j] * pows[2][k]
        for idx, v in enumerate(g.coefficients):
            out[idx] += c * v
    return BinaryForm(f.degree, tuple(out))


def exact_divide(f: HPoly, g: HPoly) -> HPoly:
    """Quotient ``q`` with ``f == q * g``; raises :class:`NotDivisible` otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.degree < g.degree:
        if f.is_zero():
            raise NotDivisible("zero of lower degree has no homogeneous quotient")
        raise NotDivisible(f"degree {f.degree} is smaller than degree {g.degree}")
    qdeg = f.degree - g.degree
    lg, lc = g.leading()
    rem = dict(f.terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        le = max(rem)
        diff = (le[0] - lg[0], le[1] - lg[1], le[2] - lg[2])
        if min(diff) < 0:
            raise NotDivisible(f"leading term {le} is not divisible by {lg}")
        c = rem[le] / lc
        quot[diff] = c
        for e, v in g.terms.items():
            k = (e[0] + diff[0], e[1] + diff[1], e[2] + diff[2])
            nv = rem.get(k, 0) - c * v
            if nv:
                rem[k] = nv
            else:
                rem.pop(k, None)
    return HPoly._raw(quot, qdeg)


def divides(g: HPoly, f: HPoly) -> bool:
    try:
        exact_divide(f, g)
    except NotDivisible:
        return False
    return True


def binary_gcd_squarefree(g: BinaryForm) -> tuple[BinaryForm, BinaryForm]:
    """Return ``(gcd(g, g'), squarefree part of g)`` for a nonzero binary form.

    The squarefree part has each distinct root of ``g`` in P^1 exactly once,
    so its degree counts the distinct roots over the complex numbers.
    """
    if g.is_zero():
        raise ValueError("the zero form has no squarefree part")
    p, mult_inf = g._dehomogenize()
    common = p.gcd(p.derivative())
    sqf_affine = p // common
    common_deg = common.degree() + max(mult_inf - 1, 0)
    sqf_deg = sqf_affine.degree() + (1 if mult_inf else 0)
    # homogenizing to a higher degree multiplies by powers of t
    return BinaryForm._homogenize(common, common_deg), BinaryForm._homogenize(sqf_affine, sqf_deg)


def hessian_det(f: HPoly) -> HPoly:
    """Determinant of the matrix of second partials, of degree ``3(deg f - 2)``."""
    if f.degree < 2:
        raise ValueError("the Hessian needs degree at least 2")
    first = f.gradient()
    H = [[partial_derivative(first[i], j) for j in range(3)] for i in range(3)]
    return (
        H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1])
        - H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0])
        + H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0])
    )


def substitute(f: HPoly, forms: Sequence[HPoly]) -> HPoly:
    """Compose ``f`` with three forms of a common degree: ``f(forms[0], forms[1], forms[2])``."""
    if len(forms) != 3:
        raise ValueError("need exactly three substitution forms")
    e = forms[0].degree
    if any(g.degree != e for g in forms):
        raise DegreeMismatch("substitution forms must share a degree")
    pows = []
    for g in forms:
        row = [HPoly.constant(1)]
        for _ in range(f.degree):
            row.append(row[-1] * g)
        pows.append(row)
    out = HPoly.zero(e * f.degree)
    for (i, j, k), c in f.terms.items():
        out = out + (pows[0][i] * pows[1][j] * pows[2][k]) * c
    return out


def linear_change(f: HPoly, M: Sequence[Sequence]) -> HPoly:
    """``f(M @ (x, y, z))`` for a 3x3 rational matrix ``M``."""
    forms = [HPoly.linear(*row) for row in M]
    return substitute(f, forms)


def product(polys: Iterable[HPoly]) -> HPoly:
    result = HPoly.constant(1)
    for g in polys:
        result = result * g
    return result
