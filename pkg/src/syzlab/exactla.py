"""Exact linear algebra over the rationals.

Matrices are cleared of denominators row by row (which changes neither the
rank nor the right kernel) and handed to FLINT's fraction-free integer
routines.  Reduction modulo a word-size prime is also exposed: a modular
rank is always a lower bound for the rational rank of an integer matrix,
which :mod:`syzlab.graded` turns into certified ranks.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import flint

__all__ = [
    "QMat",
    "PRIMES",
    "rank",
    "kernel_basis",
    "span_equal",
    "row_space_basis",
    "integer_rows",
    "modular_rank",
]

# large primes below 2**62, for certified modular ranks
PRIMES = (4611686018427387847, 4611686018427387817, 4611686018427387787)


class QMat:
    """A dense ``rows x cols`` matrix of rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        grid = [[c if isinstance(c, Fraction) else Fraction(c) for c in row] for row in entries]
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(row) != cols for row in grid):
            raise ValueError("ragged matrix")
        self.rows = len(grid)
        self.cols = cols
        self.entries = grid

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __matmul__(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in self.entries]

    def __repr__(self) -> str:
        return f"QMat({self.rows}x{self.cols})"


def _as_qmat(M) -> QMat:
    return M if isinstance(M, QMat) else QMat(M)


def integer_rows(M) -> list[list[int]]:
    """Scale each row of a rational matrix to integers."""
    out = []
    for row in _as_qmat(M).entries:
        den = math.lcm(1, *(c.denominator for c in row))
        out.append([int(c * den) for c in row])
    return out


def _fmpz(rows: list[list[int]], cols: int) -> flint.fmpz_mat:
    if not rows:
        return flint.fmpz_mat(0, cols)
    return flint.fmpz_mat(rows)


def rank(M, cols: int | None = None) -> int:
    """Exact rank over Q."""
    M = _as_qmat(M) if cols is None else QMat(M, cols)
    if M.rows == 0 or M.cols == 0:
        return 0
    return _fmpz(integer_rows(M), M.cols).rank()


def _rref_rational(rows: list[list[int]], cols: int) -> list[list[Fraction]]:
    if not rows:
        return []
    R, r = flint.fmpq_mat(flint.fmpz_mat(rows)).rref()
    return [[Fraction(int(R[i, j].p), int(R[i, j].q)) for j in range(cols)] for i in range(r)]


def kernel_basis(M, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right null space, in reduced row echelon form."""
    M = _as_qmat(M) if cols is None else QMat(M, cols)
    n = M.cols
    if n == 0:
        return []
    if M.rows == 0:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    N, nullity = _fmpz(integer_rows(M), n).nullspace()
    if nullity == 0:
        return []
    vecs = [[int(N[i, j]) for i in range(n)] for j in range(nullity)]
    return _rref_rational(vecs, n)


def row_space_basis(vectors: Iterable[Sequence], length: int) -> list[list[Fraction]]:
    """Reduced echelon basis of the span of ``vectors``."""
    rows = integer_rows(QMat(list(vectors), length))
    return _rref_rational(rows, length)


def span_equal(A: Sequence[Sequence], B: Sequence[Sequence]) -> bool:
    """True iff the row spans of ``A`` and ``B`` coincide."""
    lengths = {len(v) for v in list(A) + list(B)}
    if len(lengths) > 1:
        raise ValueError(f"vectors of different lengths: {sorted(lengths)}")
    if not lengths:
        return True
    n = lengths.pop()
    ra, rb = rank(QMat(A, n)), rank(QMat(B, n))
    return ra == rb and rank(QMat(list(A) + list(B), n)) == ra


def _nmod(rows: Sequence[Sequence[int]], cols: int, p: int) -> flint.nmod_mat:
    # going through fmpz_mat is much faster than building nmod entries one by one
    return flint.nmod_mat(flint.fmpz_mat(rows), p)


def modular_rank(rows: Sequence[Sequence[int]], cols: int, p: int = PRIMES[0]) -> int:
    """Rank of an integer matrix modulo ``p``; never exceeds the rational rank."""
    if not rows or cols == 0:
        return 0
    return _nmod(rows, cols, p).rank()

