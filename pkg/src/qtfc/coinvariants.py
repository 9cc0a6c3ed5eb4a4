"""Determinantal components, ideal powers and their minimal generating spaces.

Let A be the ideal of C[x, y] generated by the det-isotypic polynomials and
let I+ be the invariants without constant term.  The space of minimal
generators of A^m is isomorphic, as a bigraded space, to

    At(m) / I+ At(m),

where At(m) is the span of all m-fold products of isotypic polynomials (it
sits inside the det^m component).  Everything below is computed one
bidegree at a time inside the det^m component, in orbit-sum coordinates
(see ``orbits``), with FLINT doing the rational row reductions.

Two structural facts keep the work small:

* At(m) = sum over minimal generators s of At(1) of s * At(m-1), because
  At(1) = (generators) * Invariants and Invariants * At(m-1) = At(m-1).
* Hence every minimal generator of A^m has bidegree in the m-fold
  Minkowski sum of the generator bidegrees of A, so for m >= 2 no degree
  box is needed at all.
"""

from __future__ import annotations

import json
import time
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import flint

from .arith import Monomial, MultiPoly, QTPoly, monomials_of_bidegree, row_reduce
from .arith.linalg import qq_rref
from .errors import DomainError, IncompleteResultError, ResourceError
from .groups import GroupSpec, character_power, det_project, trivial_project
from .orbits import OrbitModel, divide_rep, rep_monomial, sort_pairs

Cell = Tuple[int, int]

DEFAULT_SLACK = 2
DEFAULT_MAX_ROWS = 400_000


class SlackBandWarning(UserWarning):
    """A generator showed up outside the conjectured support."""


class TruncationWarning(UserWarning):
    """A user-supplied degree box cut off part of the exact support region."""


# -- bases of single bidegrees -------------------------------------------------

@dataclass(frozen=True)
class BidegreeBasis:
    group: GroupSpec
    bidegree: Cell
    vectors: Tuple[MultiPoly, ...]

    @property
    def dim(self) -> int:
        return len(self.vectors)


def _coefficient_rows(polys: Sequence[MultiPoly], monos: Sequence[Monomial]):
    return [[p.coefficient(m) for m in monos] for p in polys]


def _echelon_basis(g: GroupSpec, cell: Cell, polys: List[MultiPoly]) -> BidegreeBasis:
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return BidegreeBasis(g, cell, ())
    monos = monomials_of_bidegree(g.nvars, *cell)
    rows = [[c.embed(g.k) if c.k != g.k else c for c in row]
            for row in _coefficient_rows(polys, monos)]
    _, basis, _ = row_reduce(rows)
    vectors = tuple(MultiPoly(g.nvars, {m: c for m, c in zip(monos, row) if c}) for row in basis)
    return BidegreeBasis(g, cell, vectors)


def determinantal_basis(g: GroupSpec, bidegree: Cell, orientation: str = "standard") -> BidegreeBasis:
    """Echelon basis of the det-isotypic polynomials of one bidegree.

    Projects every monomial with ``det_project`` and row-reduces.  This is
    the slow reference path; the engine uses orbit sums instead.
    """
    a, b = bidegree
    polys = [det_project(g, MultiPoly.monomial(m), orientation)
             for m in monomials_of_bidegree(g.nvars, a, b)]
    return _echelon_basis(g, bidegree, polys)


def invariant_spanners(g: GroupSpec, bidegree: Cell) -> BidegreeBasis:
    """Echelon basis of the invariants of bidegree (c, d) via ``trivial_project``."""
    if tuple(bidegree) == (0, 0):
        raise DomainError("invariant spanners are only defined for nonzero bidegrees")
    c, d = bidegree
    polys = [trivial_project(g, MultiPoly.monomial(m)) for m in monomials_of_bidegree(g.nvars, c, d)]
    return _echelon_basis(g, bidegree, polys)


# -- explicit generator families --------------------------------------------------

def _det(matrix: List[List[MultiPoly]], nvars: int) -> MultiPoly:
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    total = MultiPoly.zero(nvars)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _det(minor, nvars)
        total = total + term if j % 2 == 0 else total - term
    return total


def bivariate_vandermonde(pairs: Sequence[Tuple[int, int]]) -> MultiPoly:
    """det[x_i^alpha_j y_i^beta_j] for the exponent set ``pairs``."""
    n = len(pairs)
    rows = []
    for i in range(n):
        row = []
        for alpha, beta in pairs:
            x = [0] * n
            y = [0] * n
            x[i] = alpha
            y[i] = beta
            row.append(MultiPoly.monomial(Monomial(tuple(x), tuple(y))))
        rows.append(row)
    return _det(rows, n)


def _vandermonde_ok(kind: str, pairs) -> bool:
    if kind == "A":
        return True
    if kind == "B":
        return all((a + b) % 2 == 1 for a, b in pairs)
    if kind == "D":
        return len({(a + b) % 2 for a, b in pairs}) == 1
    raise DomainError(f"Vandermonde generators exist for types A, B, D, not {kind!r}")


def vandermonde_sets(kind: str, n: int, box: Tuple[int, int]):
    """Exponent sets X (sorted tuples of distinct pairs) with bidegree in the box."""
    qmax, tmax = box
    pairs = [(a, b) for a in range(qmax + 1) for b in range(tmax + 1)]
    out = []

    def extend(start, chosen, qa, tb):
        if len(chosen) == n:
            if _vandermonde_ok(kind, chosen):
                out.append(tuple(chosen))
            return
        for i in range(start, len(pairs)):
            a, b = pairs[i]
            if qa + a <= qmax and tb + b <= tmax:
                extend(i + 1, chosen + [pairs[i]], qa + a, tb + b)

    extend(0, [], 0, 0)
    return out


def vandermonde_generators(kind: str, n: int, box: Tuple[int, int]) -> List[MultiPoly]:
    """Bivariate Vandermonde determinants for type A_{n-1}, B_n or D_n.

    Type A uses n variable pairs (the G(1,1,n) model).  For B only sets
    with every alpha+beta odd are kept, for D only sets where alpha+beta
    has constant parity.
    """
    return [bivariate_vandermonde(X) for X in vandermonde_sets(kind, n, box)]


def delta_operator(p: MultiPoly) -> MultiPoly:
    """sum_i y_i d/dx_i, lowering x-degree by one and raising y-degree by one."""
    n = p.nvars
    out: Dict[Monomial, object] = {}
    for mono, c in p.terms.items():
        for i in range(n):
            e = mono.xexp[i]
            if e == 0:
                continue
            x = list(mono.xexp)
            y = list(mono.yexp)
            x[i] -= 1
            y[i] += 1
            m = Monomial(tuple(x), tuple(y))
            v = c * e
            out[m] = out[m] + v if m in out else v
    return MultiPoly(n, out)


def twisted_delta_operator(p: MultiPoly) -> MultiPoly:
    """y_2 d/dx_1 + y_1 d/dx_2.

    In the monomial model of G(k,k,2) the invariant symmetric form pairs
    e_1 with e_2, so this is the polarization that commutes with the group.
    """
    if p.nvars != 2:
        raise DomainError("the twisted polarization is defined for two variable pairs")
    out: Dict[Monomial, object] = {}
    for mono, c in p.terms.items():
        for i, j in ((0, 1), (1, 0)):
            e = mono.xexp[i]
            if e == 0:
                continue
            x = list(mono.xexp)
            y = list(mono.yexp)
            x[i] -= 1
            y[j] += 1
            m = Monomial(tuple(x), tuple(y))
            v = c * e
            out[m] = out[m] + v if m in out else v
    return MultiPoly(2, out)


def dihedral_delta_generators(k: int) -> List[MultiPoly]:
    """Generators D, Delta D, ..., Delta^k D and one bidegree-(1,1) form for I2(k).

    D = x1^k - x2^k is the product of the reflecting hyperplane forms in
    the monomial model.  Delta is the polarization for that model (see
    ``twisted_delta_operator``) and the (1,1) element is x1*y1 - x2*y2.
    For k = 2 this is the set {x1^2-x2^2, 2(x1y1-x2y2), 2(y1^2-y2^2),
    x1y2-x2y1} with the two variable blocks relabelled, up to signs.
    """
    if k < 2:
        raise DomainError(f"dihedral generators need k >= 2, got {k}")
    x1, x2 = MultiPoly.x(2, 1), MultiPoly.x(2, 2)
    y1, y2 = MultiPoly.y(2, 1), MultiPoly.y(2, 2)
    gens = [x1 ** k - x2 ** k]
    for _ in range(k):
        gens.append(twisted_delta_operator(gens[-1]))
    gens.append(x1 * y1 - x2 * y2)
    return gens


# -- generator tables ----------------------------------------------------------------

@dataclass
class GeneratorTable:
    group: str
    m: int
    counts: Dict[Cell, int]
    degree_box: Tuple[int, int, int]
    orientation: str = "standard"
    generators: str = "minimal"
    total_degree_cap: Optional[int] = None
    warnings: List[str] = field(default_factory=list)
    incomplete: bool = False
    runtime: float = 0.0

    @property
    def polynomial(self) -> QTPoly:
        return QTPoly({cell: c for cell, c in self.counts.items() if c})

    def to_dict(self) -> dict:
        return {
            "group": self.group,
            "m": self.m,
            "cells": [{"qdeg": a, "tdeg": b, "count": c}
                      for (a, b), c in sorted(self.counts.items(), key=lambda kv: (sum(kv[0]), kv[0][0])) if c],
            "polynomial": str(self.polynomial),
            "degree_box": {"qmax": self.degree_box[0], "tmax": self.degree_box[1],
                           "slack": self.degree_box[2], "total_max": self.total_degree_cap},
            "det_orientation": self.orientation,
            "generators": self.generators,
            "incomplete": self.incomplete,
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "GeneratorTable":
        box = data["degree_box"]
        return cls(
            group=data["group"], m=data["m"],
            counts={(c["qdeg"], c["tdeg"]): c["count"] for c in data["cells"]},
            degree_box=(box["qmax"], box["tmax"], box["slack"]),
            orientation=data["det_orientation"], generators=data["generators"],
            total_degree_cap=box.get("total_max"),
            warnings=list(data.get("warnings", [])), incomplete=data.get("incomplete", False),
        )


def conjectured_bounds(g: GroupSpec, m: int, orientation: str = "standard") -> Tuple[int, int]:
    """(max q-degree, max t-degree) predicted for minimal generators of A^m."""
    if orientation == "standard":
        return m * g.Nstar, m * g.N
    return m * g.N, m * g.Nstar


def default_box(g: GroupSpec, m: int, slack: int = DEFAULT_SLACK) -> Tuple[int, int, int]:
    """(qmax, tmax, total degree max): m*max(N, N*) + slack in every direction."""
    top = m * max(g.N, g.Nstar) + slack
    return top, top, top


def _box_cells(qmax: int, tmax: int, dmax: Optional[int] = None) -> List[Cell]:
    if dmax is None:
        dmax = qmax + tmax
    cells = [(a, b) for a in range(qmax + 1) for b in range(tmax + 1) if a + b <= dmax]
    return sorted(cells, key=lambda c: (c[0] + c[1], c[0]))


def _down_closure(cells: Iterable[Cell]) -> List[Cell]:
    out = set()
    for a, b in cells:
        for i in range(a + 1):
            for j in range(b + 1):
                out.add((i, j))
    return sorted(out, key=lambda c: (c[0] + c[1], c[0]))


def _minkowski(cells_a: Iterable[Cell], cells_b: Iterable[Cell]) -> set:
    return {(a + c, b + d) for a, b in cells_a for c, d in cells_b}


def _fmpq(v):
    if isinstance(v, Fraction):
        return flint.fmpq(v.numerator, v.denominator)
    return v


# -- the engine -------------------------------------------------------------------------

FULL = "full"


@dataclass
class Level:
    """Bases of At(m) over a down-closed set of bidegrees."""

    m: int
    s: int
    cells: Tuple[Cell, ...]
    bases: Dict[Cell, object]
    counts: Dict[Cell, int]
    new_generators: Dict[Cell, list]


class HilbertEngine:
    """Caches orbit data and invariant generators for one group and orientation."""

    def __init__(self, g: GroupSpec, orientation: str = "standard", max_rows: int = DEFAULT_MAX_ROWS):
        self.g = g
        self.orientation = orientation
        self.s1 = character_power(orientation, 1)
        self.model = OrbitModel(g)
        self.max_rows = max_rows
        self.invgen: Dict[Cell, list] = {}
        self._inv_done: set = set()
        self.levels: Dict[int, Level] = {}

    # multiplication in orbit coordinates
    def mulmat(self, f_terms: Dict[tuple, object], f_cell: Cell, src: Cell, s_src: int, s_tgt: int):
        """Matrix of v -> f*v from the s_src orbit basis at ``src`` to the s_tgt basis at src+f_cell."""
        tgt = (src[0] + f_cell[0], src[1] + f_cell[1])
        targets = self.model.orbits(tgt[0], tgt[1], s_tgt)
        sources = self.model.orbits(src[0], src[1], s_src)
        sidx = self.model.index(src[0], src[1], s_src)
        entries: Dict[Tuple[int, int], object] = {}
        odd = s_src % 2
        for j, r in enumerate(targets):
            for mono, c in f_terms.items():
                q = divide_rep(r, mono)
                if q is None:
                    continue
                rep, sign, _ = sort_pairs(q)
                i = sidx.get(rep)
                if i is None:
                    continue
                entries[i, j] = entries.get((i, j), 0) + (c * sign if odd else c)
        mat = flint.fmpq_mat(len(sources), len(targets))
        for (i, j), v in entries.items():
            if v:
                mat[i, j] = _fmpq(v)
        return mat

    def _rref_rows(self, blocks: List, ncols: int, cell: Cell, m: int):
        blocks = [b for b in blocks if b.nrows() > 0]
        total = sum(b.nrows() for b in blocks)
        if total > self.max_rows:
            raise ResourceError(f"{self.g.display_name} m={m} bidegree {cell}: {total} rows exceed cap {self.max_rows}")
        if total == 0 or ncols == 0:
            return 0, None, []
        entries = []
        for b in blocks:
            entries.extend(b.entries())
        return qq_rref(flint.fmpq_mat(total, ncols, entries))

    @staticmethod
    def _times(basis, mat):
        return mat if basis is FULL else basis * mat

    # invariant algebra generators
    def ensure_invariant_generators(self, cells: Iterable[Cell]):
        todo = [c for c in _down_closure(cells) if c not in self._inv_done]
        for cell in todo:
            self._inv_done.add(cell)
            if cell == (0, 0):
                continue
            c, d = cell
            targets = self.model.orbits(c, d, 0)
            if not targets:
                continue
            blocks = []
            for (c1, d1), gens in self.invgen.items():
                if c1 <= c and d1 <= d and (c1, d1) != cell:
                    src = (c - c1, d - d1)
                    for rep in gens:
                        blocks.append(self.mulmat(self.model.expand(rep, 0), (c1, d1), src, 0, 0))
            _, _, piv = self._rref_rows(blocks, len(targets), cell, 0)
            pivset = set(piv)
            new = [targets[j] for j in range(len(targets)) if j not in pivset]
            if new:
                self.invgen[cell] = new

    def _quotient_rank(self, m: int, s: int, cell: Cell, bases: Dict[Cell, object]):
        a, b = cell
        ncols = self.model.dim(a, b, s)
        blocks = []
        for (c, d), gens in self.invgen.items():
            if c <= a and d <= b and (c, d) != (0, 0):
                src = (a - c, b - d)
                basis = bases.get(src)
                if basis is None:
                    continue
                for rep in gens:
                    blocks.append(self._times(basis, self.mulmat(self.model.expand(rep, 0), (c, d), src, s, s)))
        return self._rref_rows(blocks, ncols, cell, m)

    def level_one(self, cells: Iterable[Cell], generators=None) -> Level:
        """At(1) over a down-closed region.

        ``generators`` is None for the full isotypic space, or a dict
        cell -> list of term dicts for an explicit generating family.
        """
        s = self.s1
        cells = tuple(_down_closure(cells))
        self.ensure_invariant_generators(cells)
        bases: Dict[Cell, object] = {}
        counts: Dict[Cell, int] = {}
        new: Dict[Cell, list] = {}
        for cell in cells:
            a, b = cell
            dim = self.model.dim(a, b, s)
            if dim == 0:
                continue
            if generators is None:
                bases[cell] = FULL
                rank = dim
            else:
                blocks = []
                for (c, d), terms_list in generators.items():
                    if c <= a and d <= b:
                        src = (a - c, b - d)
                        if self.model.dim(src[0], src[1], 0) == 0:
                            continue
                        for terms in terms_list:
                            blocks.append(self.mulmat(terms, (c, d), src, 0, s))
                rank, basis, _ = self._rref_rows(blocks, dim, cell, 1)
                if rank == 0:
                    continue
                bases[cell] = FULL if rank == dim else basis
            rq, _, piv = self._quotient_rank(1, s, cell, bases)
            if rank - rq:
                counts[cell] = rank - rq
                if generators is None:
                    pivset = set(piv)
                    targets = self.model.orbits(a, b, s)
                    new[cell] = [targets[j] for j in range(dim) if j not in pivset]
        level = Level(1, s, cells, bases, counts, new)
        self.levels[1] = level
        return level

    def full_level(self, cells: Iterable[Cell], counts: Dict[Cell, int], new: Dict[Cell, list]) -> Level:
        """At(1) = the whole isotypic space over ``cells``, with known generator counts."""
        cells = tuple(_down_closure(cells))
        self.ensure_invariant_generators(cells)
        bases = {c: FULL for c in cells if self.model.dim(c[0], c[1], self.s1)}
        level = Level(1, self.s1, cells, bases, dict(counts), dict(new))
        self.levels[1] = level
        return level

    def next_level(self, prev: Level, cells: Iterable[Cell], generators: Dict[Cell, list],
                   count_cells: Optional[Iterable[Cell]] = None) -> Level:
        """At(m+1) = sum of g * At(m) over the generators g of At(1).

        Bases are built on ``cells``; ``prev`` must cover every cell minus
        every generator bidegree below it.  Generators are only counted on
        ``count_cells`` (default: all cells).
        """
        m = prev.m + 1
        s = prev.s + self.s1
        cells = tuple(_down_closure(cells))
        counted = set(cells) if count_cells is None else set(count_cells)
        self.ensure_invariant_generators(cells)
        bases: Dict[Cell, object] = {}
        counts: Dict[Cell, int] = {}
        for cell in cells:
            a, b = cell
            dim = self.model.dim(a, b, s)
            if dim == 0:
                continue
            blocks = []
            for (c, d), terms_list in generators.items():
                if c <= a and d <= b:
                    src = (a - c, b - d)
                    basis = prev.bases.get(src)
                    if basis is None:
                        continue
                    for terms in terms_list:
                        blocks.append(self._times(basis, self.mulmat(terms, (c, d), src, prev.s, s)))
            rank, basis, _ = self._rref_rows(blocks, dim, cell, m)
            if rank == 0:
                continue
            bases[cell] = FULL if rank == dim else basis
            if cell not in counted:
                continue
            rq, _, _ = self._quotient_rank(m, s, cell, bases)
            if rank < rq:
                raise AssertionError(f"{self.g.display_name} m={m} {cell}: quotient rank {rq} exceeds rank {rank}")
            if rank - rq:
                counts[cell] = rank - rq
        level = Level(m, s, cells, bases, counts, {})
        self.levels[m] = level
        return level

    def terms_for(self, rep, s) -> Dict[tuple, int]:
        return self.model.expand(rep, s)

    def poly_terms(self, poly: MultiPoly, s: int) -> Tuple[Cell, Dict[tuple, Fraction]]:
        """A bihomogeneous isotypic polynomial as a term dict over pair tuples."""
        bd, _ = self.model.coordinates(poly, s)
        terms = {}
        for mono, c in poly.terms.items():
            terms[tuple(zip(mono.xexp, mono.yexp))] = c.to_fraction()
        return bd, terms


def _support_region(support: Iterable[Cell], m: int) -> set:
    support = set(support)
    region = {(0, 0)}
    for _ in range(m):
        region = _minkowski(region, support)
    return region


def _clip(cells: Iterable[Cell], box) -> List[Cell]:
    if box is None:
        return list(cells)
    qmax, tmax, dmax = box
    return [(a, b) for a, b in cells if a <= qmax and b <= tmax and a + b <= dmax]


def _normalize_box(g, m, degree_box, slack):
    if degree_box is None:
        return None
    if len(degree_box) == 2:
        qmax, tmax = degree_box
        return (qmax, tmax, qmax + tmax)
    return tuple(degree_box)


def _outside_conjecture(counts, g, m, orientation):
    qb, tb = conjectured_bounds(g, m, orientation)
    top = m * max(g.N, g.Nstar)
    return sorted(c for c in counts if c[0] > qb or c[1] > tb or c[0] + c[1] > top)


def _prepare_generators(engine: HilbertEngine, generators) -> Dict[Cell, list]:
    out: Dict[Cell, list] = {}
    for poly in generators:
        for bd in poly.bidegrees():
            comp = poly.component(*bd)
            cell, terms = engine.poly_terms(comp, engine.s1)
            out.setdefault(cell, []).append(terms)
    return out


def generator_tables(
    g: GroupSpec,
    mmax: int,
    degree_box=None,
    orientation: str = "standard",
    generators: Union[str, Sequence[MultiPoly]] = "minimal",
    slack: int = DEFAULT_SLACK,
    engine: Optional[HilbertEngine] = None,
    max_rows: int = DEFAULT_MAX_ROWS,
) -> List[GeneratorTable]:
    """Generator tables for m = 1..mmax in one pass.

    ``generators`` selects how At(1) is spanned: ``"minimal"`` (the
    minimal generators found at m = 1, the fast default), ``"full"`` (every
    isotypic orbit sum) or an explicit list of isotypic polynomials that
    generate A.  ``degree_box`` = (qmax, tmax[, total max]) restricts the
    computed region; by default m = 1 uses ``default_box`` and the higher
    levels use their exact support region.
    """
    if mmax < 1:
        raise DomainError(f"m must be positive, got {mmax}")
    engine = engine or HilbertEngine(g, orientation, max_rows)
    if engine.orientation != orientation:
        raise DomainError("engine orientation does not match the request")
    user_box = _normalize_box(g, mmax, degree_box, slack)
    started = time.perf_counter()
    notes: List[str] = []

    if generators == "minimal":
        box1 = user_box if (user_box is not None and mmax == 1) else default_box(g, 1, slack)
        level = engine.level_one(_box_cells(*box1))
        band = _outside_conjecture(level.counts, g, 1, orientation)
        if band:
            msg = (f"{g.display_name}: generators of A outside the conjectured support at {band}; "
                   f"retrying with a larger box")
            warnings.warn(msg, SlackBandWarning, stacklevel=2)
            notes.append(msg)
            old = box1
            box1 = tuple(v + 2 * slack for v in box1)
            level = engine.level_one(_box_cells(*box1))
            beyond = [c for c in level.counts if c not in set(_box_cells(*old))]
            if beyond:
                raise IncompleteResultError(
                    f"{g.display_name}: generators keep appearing beyond the enlarged box at {sorted(beyond)}",
                    partial=level.counts)
        support = {cell for cell, reps in level.new_generators.items()}
        gen_terms = {cell: [engine.model.expand(r, engine.s1) for r in reps]
                     for cell, reps in level.new_generators.items()}
        first_box = box1
    else:
        first_box = user_box or default_box(g, mmax, slack)
        if generators == "full":
            explicit = None
        else:
            explicit = _prepare_generators(engine, generators)
        level = engine.level_one(_box_cells(*first_box), explicit)
        if explicit is None:
            support = set(level.bases)
            gen_terms = {cell: [engine.model.expand(r, engine.s1) for r in engine.model.orbits(cell[0], cell[1], engine.s1)]
                         for cell in level.bases}
        else:
            support = set(explicit)
            gen_terms = explicit

    tables = [_table(g, level, first_box, orientation, generators, notes, started, slack)]
    if mmax == 1:
        return tables
    region_box = user_box if generators == "minimal" else first_box
    sums = [{(0, 0)}]
    for _ in range(mmax):
        sums.append(_minkowski(sums[-1], support))
    top = set(_clip(_down_closure(sums[mmax]), region_box))
    if generators == "minimal":
        level = engine.full_level(sorted(top | set(level.cells)), level.counts, level.new_generators)
    for m in range(2, mmax + 1):
        exact = _down_closure(sums[m])
        count_cells = _clip(exact, region_box)
        work = _working_region(top, sums[mmax - m])
        lvl_notes = list(notes)
        if len(count_cells) < len(exact):
            msg = f"{g.display_name} m={m}: degree box truncates the exact support region"
            warnings.warn(msg, TruncationWarning, stacklevel=2)
            lvl_notes.append(msg)
        prev = level
        level = engine.next_level(prev, work, gen_terms, count_cells)
        band = _outside_conjecture(level.counts, g, m, orientation)
        if band:
            msg = f"{g.display_name} m={m}: generators outside the conjectured support at {band}"
            warnings.warn(msg, SlackBandWarning, stacklevel=2)
            lvl_notes.append(msg)
        engine.levels.pop(m - 1, None)
        extent = (max(a for a, _ in count_cells), max(b for _, b in count_cells),
                  max(a + b for a, b in count_cells))
        box_used = region_box if region_box is not None else extent
        tables.append(_table(g, level, box_used, orientation, generators, lvl_notes, started,
                             slack=0 if region_box is None else slack))
    return tables


def _working_region(top: set, shifts: set) -> List[Cell]:
    """Cells y with y + sigma in ``top`` for some sigma in ``shifts`` (down-closed if top is)."""
    return sorted({(a, b) for a, b in top if any((a + c, b + d) in top for c, d in shifts)},
                  key=lambda c: (c[0] + c[1], c[0]))


def _table(g, level, box, orientation, generators, notes, started, slack):
    gen_label = generators if isinstance(generators, str) else "explicit"
    return GeneratorTable(
        group=g.display_name, m=level.m, counts=dict(level.counts),
        degree_box=(box[0], box[1], slack), total_degree_cap=box[2],
        orientation=orientation, generators=gen_label, warnings=list(notes),
        runtime=time.perf_counter() - started,
    )


def minimal_generator_dims(g: GroupSpec, m: int, degree_box=None, orientation: str = "standard",
                           generators="minimal", **kwargs) -> Tuple[GeneratorTable, QTPoly]:
    """Per-bidegree dimensions of the minimal generating space of A^m, and Cat^(m)(W; q, t)."""
    table = generator_tables(g, m, degree_box, orientation, generators, **kwargs)[-1]
    return table, table.polynomial


def hilbert_series(g: GroupSpec, m: int, orientation: str = "standard", **kwargs) -> QTPoly:
    return minimal_generator_dims(g, m, orientation=orientation, **kwargs)[1]


def product_space_component(g: GroupSpec, m: int, bidegree: Cell, cache: Optional[HilbertEngine] = None,
                            orientation: str = "standard") -> BidegreeBasis:
    """Echelon basis of At(m) in one bidegree, as explicit polynomials.

    Only bidegrees below ``bidegree`` are touched, so no degree box is
    involved.  ``cache`` may be a HilbertEngine reused across calls.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    engine = cache or HilbertEngine(g, orientation)
    cells = _down_closure([tuple(bidegree)])
    level = engine.level_one(cells)
    gen_terms = {cell: [engine.model.expand(r, engine.s1) for r in reps]
                 for cell, reps in level.new_generators.items()}
    for _ in range(m - 1):
        level = engine.next_level(level, cells, gen_terms)
    a, b = bidegree
    reps = engine.model.orbits(a, b, level.s)
    basis = level.bases.get((a, b))
    if basis is None:
        return BidegreeBasis(g, (a, b), ())
    if basis is FULL:
        rows = [[1 if i == j else 0 for j in range(len(reps))] for i in range(len(reps))]
    else:
        rows = [[Fraction(int(v.p), int(v.q)) for v in basis.table()[i]] for i in range(basis.nrows())]
    vectors = tuple(engine.model.to_poly(reps, row, level.s) for row in rows)
    return BidegreeBasis(g, (a, b), vectors)


def isotypic_dimension(g: GroupSpec, bidegree: Cell, s: int = 1) -> int:
    """Dimension of the det^s-isotypic component of one bidegree (orbit count)."""
    return OrbitModel(g).dim(bidegree[0], bidegree[1], s)


# -- the full coinvariant ring ------------------------------------------------------------

def full_coinvariant_hilbert(g: GroupSpec, degree_box: Optional[int] = None,
                             engine: Optional[HilbertEngine] = None) -> QTPoly:
    """Bigraded Hilbert series of C[x, y] / (I+), computed in the full ring.

    Works up through total degree in monomial coordinates and stops at the
    first positive total degree where every bidegree of the quotient
    vanishes.  ``degree_box`` caps the total degree searched.
    """
    engine = engine or HilbertEngine(g)
    if degree_box is None:
        degree_box = 2 * max(g.N, g.Nstar, 1) + 2
    n = g.nvars
    counts: Dict[Cell, int] = {(0, 0): 1}
    for d in range(1, degree_box + 1):
        cells = [(a, d - a) for a in range(d + 1)]
        engine.ensure_invariant_generators(cells)
        level_total = 0
        for a, b in cells:
            monos = monomials_of_bidegree(n, a, b)
            index = {tuple(zip(mm.xexp, mm.yexp)): i for i, mm in enumerate(monos)}
            rows = []
            for (c, e), gens in engine.invgen.items():
                if c <= a and e <= b:
                    rest = monomials_of_bidegree(n, a - c, b - e)
                    for rep in gens:
                        poly = engine.model.expand(rep, 0)
                        for mu in rest:
                            mu_pairs = tuple(zip(mu.xexp, mu.yexp))
                            row = {}
                            for nu in poly:
                                prod = tuple((x1 + x2, y1 + y2) for (x1, y1), (x2, y2) in zip(nu, mu_pairs))
                                j = index[prod]
                                row[j] = row.get(j, 0) + 1
                            rows.append(row)
            if rows:
                mat = flint.fmpz_mat(len(rows), len(monos))
                for i, row in enumerate(rows):
                    for j, v in row.items():
                        mat[i, j] = v
                rk = mat.rank()
            else:
                rk = 0
            dim = len(monos) - rk
            if dim:
                counts[(a, b)] = dim
            level_total += dim
        if level_total == 0:
            return QTPoly(counts)
    raise IncompleteResultError(
        f"{g.display_name}: quotient still nonzero at total degree {degree_box}", partial=QTPoly(counts))
