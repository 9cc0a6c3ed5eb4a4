"""Exact row reduction.

``row_reduce`` is the reference implementation over Fractions or
cyclotomic numbers.  The ``qq_*`` helpers wrap python-flint's FLINT
matrices and are what the Hilbert-series engine uses on large rational
systems.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

import flint

from ..errors import DomainError
from .cyclotomic import Cyclotomic


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _prepare(rows: Sequence[Sequence]):
    """Convert entries to a common field; returns (rows, conductor or None)."""
    conductor = None
    for row in rows:
        for v in row:
            if isinstance(v, Cyclotomic):
                if conductor is None:
                    conductor = v.k
                elif v.k != conductor:
                    raise DomainError(f"conductor mismatch in row_reduce: {conductor} vs {v.k}")
    if conductor is None:
        return [[Fraction(v) for v in row] for row in rows], None
    return [[v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v, conductor) for v in row]
            for row in rows], conductor


def _normalize_rational(row: List[Fraction]) -> List[Fraction]:
    den = 1
    for v in row:
        if v:
            den = _lcm(den, v.denominator)
    ints = [int(v * den) for v in row]
    g = 0
    for v in ints:
        if v:
            g = gcd(g, v)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return [Fraction(v // g) for v in ints]


def _normalize_cyclotomic(row: List[Cyclotomic]) -> List[Cyclotomic]:
    lead = next(v for v in row if v)
    inv = lead.inverse()
    return [v * inv for v in row]


def row_reduce(rows: Sequence[Sequence]) -> Tuple[int, list, List[int]]:
    """Echelonize ``rows`` by first-nonzero pivoting.

    Rows are processed in input order.  Each incoming row is reduced
    against the rows kept so far; if something survives it is normalized
    (primitive integer content for rational rows, leading coefficient one
    for cyclotomic rows) and appended.  Returns (rank, basis, pivots),
    where ``pivots[i]`` is the pivot column of ``basis[i]``.
    """
    if not rows:
        return 0, [], []
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise DomainError("rows of unequal length")
    prepared, conductor = _prepare(rows)
    normalize = _normalize_rational if conductor is None else _normalize_cyclotomic
    basis: list = []
    pivots: List[int] = []
    for row in prepared:
        r = list(row)
        for b, p in zip(basis, pivots):
            c = r[p]
            if c:
                bp = b[p]
                r = [bp * x - c * y for x, y in zip(r, b)]
        if any(r):
            r = normalize(r)
            basis.append(r)
            pivots.append(next(i for i, v in enumerate(r) if v))
    return len(basis), basis, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return row_reduce(rows)[0]


# -- FLINT-backed rational matrices -------------------------------------------

def qq_stack(blocks: Sequence, ncols: int) -> "flint.fmpq_mat":
    """Vertically stack fmpz_mat/fmpq_mat blocks with ``ncols`` columns."""
    blocks = [b for b in blocks if b is not None and b.nrows() > 0]
    total = sum(b.nrows() for b in blocks)
    out = flint.fmpq_mat(total, ncols)
    r0 = 0
    for b in blocks:
        for i in range(b.nrows()):
            for j in range(ncols):
                v = b[i, j]
                if v:
                    out[r0 + i, j] = v
        r0 += b.nrows()
    return out


def qq_rref(mat: "flint.fmpq_mat") -> Tuple[int, "flint.fmpq_mat", List[int]]:
    """Reduced row echelon form: (rank, basis rows, pivot columns)."""
    ncols = mat.ncols()
    if mat.nrows() == 0 or ncols == 0:
        return 0, flint.fmpq_mat(0, ncols), []
    reduced, rk = mat.rref()
    pivots = []
    entries = []
    for i in range(rk):
        for j in range(ncols):
            if reduced[i, j] != 0:
                pivots.append(j)
                break
        entries.extend(reduced[i, j] for j in range(ncols))
    return rk, flint.fmpq_mat(rk, ncols, entries), pivots


def qq_identity(n: int) -> "flint.fmpq_mat":
    m = flint.fmpq_mat(n, n)
    for i in range(n):
        m[i, i] = 1
    return m


def qq_matrix(rows: Sequence[Sequence], ncols: int) -> "flint.fmpq_mat":
    m = flint.fmpq_mat(len(rows), ncols)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                f = Fraction(v)
                m[i, j] = flint.fmpq(f.numerator, f.denominator)
    return m
