"""Graded pieces of ideals generated in a single degree.

For an ideal ``I = (g_1, ..., g_k)`` with all ``g_i`` of degree ``g`` the
degree-``t`` piece is the image of the multiplication map
``(R_s)^k -> R_t``, ``s = t - g``.  Its kernel is the space of degree-``s``
syzygies of the generators.

Ranks of the large multiplication maps are certified without a full
rational elimination:

* the rank modulo a prime is a lower bound for the rational rank;
* monomial multiples of exact syzygies (computed over Q up to degree ``g``)
  are exact kernel vectors, so the modular rank of their span bounds the
  kernel dimension from below and hence the rank from above.

When the bounds meet the rank is exact.  Otherwise a second prime is tried
and finally FLINT's exact integer rank is used.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import flint

from .algebra import HPoly, monomials
from .exactla import PRIMES, modular_rank

__all__ = ["NoPlateau", "GradedIdeal", "dim_R", "plateau_window"]

log = logging.getLogger(__name__)


class NoPlateau(RuntimeError):
    """The Hilbert function did not stabilize inside the search range."""


def dim_R(t: int) -> int:
    return (t + 1) * (t + 2) // 2 if t >= 0 else 0


@lru_cache(maxsize=None)
def _index(t: int) -> dict:
    return {m: i for i, m in enumerate(monomials(t))}


def plateau_window(d: int) -> tuple[int, int, int]:
    """``(first start, width, last admissible end)`` of the stabilization search."""
    return max(3 * d - 6, 0), max(d, 4), 6 * d


def _pivot_columns(cols: list[list[int]], length: int) -> list[int]:
    """Indices of a maximal independent subset of ``cols``, chosen greedily from the left."""
    if not cols:
        return []
    R, r = flint.fmpq_mat(flint.fmpz_mat(cols).transpose()).rref()
    pivots = []
    j = 0
    for i in range(r):
        while R[i, j] == 0:
            j += 1
        pivots.append(j)
    return pivots


class GradedIdeal:
    """Ideal generated by forms of one common degree.

    Syzygy vectors live in ``(R_s)^k`` with coordinates ordered by generator
    block, then by :func:`~syzlab.algebra.monomials` within a block.
    """

    def __init__(self, gens: Sequence[HPoly]):
        # zero generators keep their slot so syzygy coordinates line up with ``gens``
        gens = list(gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator (possibly zero)")
        degrees = {g.degree for g in gens}
        if len(degrees) > 1:
            raise ValueError(f"generators of mixed degrees {sorted(degrees)}")
        self.gens = gens
        self.k = len(gens)
        self.gen_degree = degrees.pop()
        # one common scale for all generators keeps syzygy coordinates exact
        den = math.lcm(1, *(g.content_denominator() for g in gens))
        self._int_gens = [[(e, int(c * den)) for e, c in g.terms.items()] for g in gens]
        self._hilbert: dict[int, int] = {}
        self._syz: dict[int, list[list[int]]] = {}
        self._new_gens: dict[int, list[list[int]]] = {}
        self.plateau: tuple[int, int] | None = None

    # -- matrices ---------------------------------------------------------
    def image_rows(self, s: int) -> list[list[int]]:
        """Rows ``m * g_i`` (block ``i``, monomial ``m`` of degree ``s``) in the basis of ``R_{s+g}``."""
        idx = _index(s + self.gen_degree)
        n = len(idx)
        rows = []
        for terms in self._int_gens:
            for m in monomials(s):
                row = [0] * n
                for e, c in terms:
                    row[idx[(e[0] + m[0], e[1] + m[1], e[2] + m[2])]] = c
                rows.append(row)
        return rows

    def multiplication_matrix(self, s: int) -> flint.fmpz_mat:
        """The map ``(R_s)^k -> R_{s+g}``: columns indexed by (generator, monomial)."""
        rows = self.image_rows(s)
        n = dim_R(s + self.gen_degree)
        if not rows:
            return flint.fmpz_mat(n, 0)
        return flint.fmpz_mat(rows).transpose()

    # -- syzygies -----------------------------------------------------------
    def syzygy_basis(self, s: int) -> list[list[int]]:
        """Integer basis of the degree-``s`` syzygies."""
        if s < 0 or self.k == 0:
            return []
        if s not in self._syz:
            M = self.multiplication_matrix(s)
            N, nullity = M.nullspace()
            n = M.ncols()
            self._syz[s] = [[int(N[i, j]) for i in range(n)] for j in range(nullity)]
        return self._syz[s]

    def syzygies(self, s: int) -> list[list[Fraction]]:
        """Reduced echelon basis of the degree-``s`` syzygies over Q."""
        basis = self.syzygy_basis(s)
        if not basis:
            return []
        n = len(basis[0])
        R, r = flint.fmpq_mat(flint.fmpz_mat(basis)).rref()
        return [[Fraction(int(R[i, j].p), int(R[i, j].q)) for j in range(n)] for i in range(r)]

    def shift(self, vec: Sequence[int], s: int, m: tuple[int, int, int]) -> list[int]:
        """Multiply a syzygy vector of degree ``s`` by the monomial ``m``."""
        e = sum(m)
        src, tgt = monomials(s), _index(s + e)
        n_old, n_new = len(src), len(tgt)
        out = [0] * (self.k * n_new)
        for blk in range(self.k):
            for pos, mon in enumerate(src):
                c = vec[blk * n_old + pos]
                if c:
                    out[blk * n_new + tgt[(mon[0] + m[0], mon[1] + m[1], mon[2] + m[2])]] = c
        return out

    def times_linear(self, vectors: Sequence[Sequence[int]], s: int) -> list[list[int]]:
        """``{x*v, y*v, z*v}`` for each ``v`` of degree ``s``."""
        return [self.shift(v, s, m) for v in vectors for m in monomials(1)]

    def new_generators(self, s: int) -> list[list[int]]:
        """Syzygies of degree ``s`` completing ``R_1 * Syz_{s-1}`` to a basis of ``Syz_s``.

        Their number is the count of minimal generators of the syzygy module in degree ``s``.
        """
        if s in self._new_gens:
            return self._new_gens[s]
        basis = self.syzygy_basis(s)
        if not basis:
            out = []
        else:
            old = self.times_linear(self.syzygy_basis(s - 1), s - 1) if s > 0 else []
            n = len(basis[0])
            old_rank = flint.fmpz_mat(old).rank() if old else 0
            if old_rank == len(basis):
                out = []
            else:
                if old:
                    # keep an independent subset of the old part first
                    keep = _pivot_columns(old, n)
                    old = [old[i] for i in keep]
                piv = _pivot_columns(old + basis, n)
                out = [basis[i - len(old)] for i in piv if i >= len(old)]
        self._new_gens[s] = out
        return out

    def generator_degrees(self, max_degree: int) -> list[int]:
        """Degrees (with multiplicity) of minimal syzygy generators up to ``max_degree``."""
        return [s for s in range(max_degree + 1) for _ in self.new_generators(s)]

    # -- ranks --------------------------------------------------------------
    def _exact_rank(self, s: int) -> int:
        rows = self.image_rows(s)
        if not rows:
            return 0
        return flint.fmpz_mat(rows).rank()

    def _certificate_rows(self, s: int) -> list[list[int]]:
        # exact kernel vectors of degree s generated by syzygies of degree <= g
        rows = []
        for e in range(self.gen_degree + 1):
            for g in self.new_generators(e):
                for m in monomials(s - e):
                    rows.append(self.shift(g, e, m))
        return rows

    def image_rank(self, s: int) -> int:
        """Exact rational rank of the multiplication map out of ``(R_s)^k``."""
        if s < 0 or self.k == 0:
            return 0
        n_src, n_tgt = self.k * dim_R(s), dim_R(s + self.gen_degree)
        if s <= self.gen_degree:
            return n_src - len(self.syzygy_basis(s))
        rows = self.image_rows(s)
        cert = None
        for p in PRIMES[:2]:
            lower = modular_rank(rows, n_tgt, p)
            if lower == min(n_src, n_tgt):
                return lower
            if cert is None:
                cert = self._certificate_rows(s)
            upper = n_src - modular_rank(cert, n_src, p)
            if lower == upper:
                return lower
            log.debug("rank bounds %d..%d at s=%d mod %d; retrying", lower, upper, s, p)
        log.info("falling back to exact integer rank at s=%d (%dx%d)", s, len(rows), n_tgt)
        return self._exact_rank(s)

    def hilbert(self, t: int) -> int:
        """``dim (R/I)_t``."""
        if t < 0:
            return 0
        if t not in self._hilbert:
            self._hilbert[t] = dim_R(t) - self.image_rank(t - self.gen_degree)
        return self._hilbert[t]

    def stable_value(self, d: int) -> int:
        """Stable Hilbert function value, using the plateau window of a degree-``d`` curve."""
        start, width, limit = plateau_window(d)
        first = start
        while True:
            vals = [self.hilbert(t) for t in range(start, start + width + 1)]
            if len(set(vals)) == 1:
                self.plateau = (start, start + width)
                return vals[0]
            log.debug("no plateau on [%d, %d]: %s", start, start + width, vals)
            start += d
            if start + width > max(limit, first + width):
                raise NoPlateau(
                    f"Hilbert function not constant on any window up to t={limit}; last values {vals}"
                )
