"""Regions of extended and truncated Shi arrangements.

Points are written in the coordinates u_i = (alpha_i, x) for the simple
roots alpha_i, so (alpha, x) = sum_i c_i u_i when alpha = sum_i c_i alpha_i.
Every hyperplane condition is then an integer linear form in u, and region
existence reduces to exact Fourier-Motzkin elimination over Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod
from typing import Dict, List, Optional, Sequence, Tuple

from .arith import LaurentQPoly
from .combinatorics import positive_roots
from .errors import DomainError, ResourceError

CANDIDATE_CAP = 10 ** 7

# a strict inequality sum_i coeffs[i] * x_i + const > 0
Ineq = Tuple[Tuple[Fraction, ...], Fraction]


def _normalize(coeffs, const) -> Optional[Ineq]:
    """Scale to primitive integers; returns None for constant inequalities."""
    vals = [Fraction(c) for c in coeffs] + [Fraction(const)]
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints[:-1]:
        g = gcd(g, abs(v))
    if g == 0:
        return None
    return tuple(Fraction(v // g) for v in ints[:-1]), Fraction(ints[-1], g)


def _tighten(system: Sequence[Ineq]):
    """Drop constant and parallel-redundant rows; None if a constant row fails."""
    best: Dict[tuple, Fraction] = {}
    for coeffs, const in system:
        norm = _normalize(coeffs, const)
        if norm is None:
            if not const > 0:
                return None
            continue
        key, c = norm
        if key not in best or c < best[key]:
            best[key] = c
    return [(k, c) for k, c in best.items()]


def fm_feasible(system: Sequence, nvars: Optional[int] = None):
    """Decide whether a system of strict inequalities sum a_i x_i + c > 0 has a solution.

    Each inequality is a pair (coefficients, constant).  Returns
    (feasible, witness) where the witness is a tuple of Fractions
    (midpoints of the residual intervals during back-substitution).
    """
    system = [(tuple(Fraction(a) for a in co), Fraction(c)) for co, c in system]
    if nvars is None:
        nvars = len(system[0][0]) if system else 0
    stages = []
    current = _tighten(system)
    if current is None:
        return False, None
    for var in range(nvars - 1, -1, -1):
        stages.append((var, current))
        lower, upper, rest = [], [], []
        for co, c in current:
            a = co[var]
            if a > 0:
                lower.append((co, c))
            elif a < 0:
                upper.append((co, c))
            else:
                rest.append((co, c))
        combined = list(rest)
        for lo_co, lo_c in lower:
            for up_co, up_c in upper:
                a, b = lo_co[var], -up_co[var]
                co = tuple(b * x + a * y for x, y in zip(lo_co, up_co))
                combined.append((co, b * lo_c + a * up_c))
        current = _tighten(combined)
        if current is None:
            return False, None
    # back-substitute from the first variable upwards
    point = [Fraction(0)] * nvars
    for var, rows in reversed(stages):
        lo, hi = None, None
        for co, c in rows:
            a = co[var]
            if a == 0:
                continue
            rest = c + sum(co[i] * point[i] for i in range(var))
            bound = -rest / a
            if a > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        if lo is not None and hi is not None:
            if not lo < hi:
                return False, None
            point[var] = (lo + hi) / 2
        elif lo is not None:
            point[var] = lo + 1
        elif hi is not None:
            point[var] = hi - 1
        else:
            point[var] = Fraction(0)
    return True, tuple(point)


def satisfies(system: Sequence, point: Sequence) -> bool:
    return all(sum(Fraction(a) * x for a, x in zip(co, point)) + Fraction(c) > 0 for co, c in system)


@dataclass(frozen=True)
class ShiArrangement:
    name: str
    roots: Tuple[Tuple[int, ...], ...]
    m: int
    caps: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.roots[0])

    @property
    def hyperplanes(self) -> int:
        return sum(self.m + c for c in self.caps)


@dataclass(frozen=True)
class Region:
    levels: Tuple[int, ...]
    witness: Tuple[Fraction, ...]
    caps: Tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.levels)

    @property
    def coheight(self) -> int:
        return sum(c - f for c, f in zip(self.caps, self.levels))

    def to_dict(self) -> dict:
        return {
            "levels": list(self.levels),
            "coheight": self.coheight,
            "witness": [[w.numerator, w.denominator] for w in self.witness],
        }


def shi_arrangement(kind: str, m: int, truncate: Optional[int] = None) -> ShiArrangement:
    """Shi^(m) for a crystallographic type like ``A2``, ``B3`` or ``G2``.

    ``truncate`` caps the positive levels of the highest root at that
    value, which for G2 is the truncated arrangement Shi^(m,k).
    """
    text = kind.strip().replace("(", "").replace(")", "")
    if not text or text[0] not in "ABCDG" or not text[1:].isdigit():
        raise DomainError(f"cannot parse root system {kind!r}")
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    roots = tuple(positive_roots(text[0], int(text[1:])))
    caps = [m] * len(roots)
    name = f"Shi^({m})({text})"
    if truncate is not None:
        if not 0 <= truncate <= m:
            raise DomainError(f"truncation level must satisfy 0 <= k <= m, got k={truncate}, m={m}")
        top = max(range(len(roots)), key=lambda i: sum(roots[i]))
        caps[top] = truncate
        name = f"Shi^({m},{truncate})({text})"
    return ShiArrangement(name, roots, m, tuple(caps))


def g2_truncated(m: int, k: int) -> ShiArrangement:
    """Shi^(m)(G2) without the hyperplanes H_{3a+2b}^(i), i > k."""
    if k > m:
        raise DomainError(f"truncation needs k <= m, got k={k}, m={m}")
    return shi_arrangement("G2", m, truncate=k)


def _cell_constraints(root, level, low, cap, bounded_below=False) -> List[Ineq]:
    """Inequalities putting (root, x) into the given cell.

    Cells are level < (root, x) < level + 1, except the cell ``cap``
    meaning (root, x) > cap and, unless ``bounded_below``, the cell ``low``
    meaning (root, x) < low + 1.
    """
    co = tuple(Fraction(c) for c in root)
    neg = tuple(-c for c in co)
    rows = []
    if level > low or bounded_below:
        rows.append((co, Fraction(-level)))
    if level < cap:
        rows.append((neg, Fraction(level + 1)))
    return rows


def _enumerate(arr: ShiArrangement, lows: Sequence[int], cap_total: int, positive: bool):
    candidates = prod(c - lo + 1 for c, lo in zip(arr.caps, lows))
    if candidates > cap_total:
        raise ResourceError(f"{arr.name}: {candidates} level vectors exceed cap {cap_total}")
    n = len(arr.roots)
    out = []

    def rec(i, levels, system, witness):
        if i == n:
            out.append((tuple(levels), witness))
            return
        root = arr.roots[i]
        for f in range(lows[i], arr.caps[i] + 1):
            rows = _cell_constraints(root, f, lows[i], arr.caps[i], positive)
            trial = system + rows
            if witness is not None and satisfies(rows, witness):
                rec(i + 1, levels + [f], trial, witness)
                continue
            ok, point = fm_feasible(trial, arr.rank)
            if ok:
                rec(i + 1, levels + [f], trial, point)

    rec(0, [], [], None)
    return out


def positive_regions(arr: ShiArrangement, cap: int = CANDIDATE_CAP) -> List[Region]:
    """Regions inside the fundamental chamber, in lexicographic level order."""
    zero = [0] * len(arr.roots)
    return [Region(levels, witness, arr.caps) for levels, witness in _enumerate(arr, zero, cap, True)]


def all_regions_count(arr: ShiArrangement, cap: int = CANDIDATE_CAP) -> int:
    """Number of regions of the whole arrangement (each root has m + cap + 1 cells)."""
    lows = [-arr.m] * len(arr.roots)
    return len(_enumerate(arr, lows, cap, False))


def region_constraints(arr: ShiArrangement, region: Region) -> List[Ineq]:
    rows = []
    for root, f, c in zip(arr.roots, region.levels, arr.caps):
        rows.extend(_cell_constraints(root, f, 0, c, True))
    return rows


def coheight_genfun(arr: ShiArrangement, regions: Optional[List[Region]] = None) -> LaurentQPoly:
    """sum over positive regions of q^coheight."""
    regions = positive_regions(arr) if regions is None else regions
    counts: Dict[int, int] = {}
    for r in regions:
        counts[r.coheight] = counts.get(r.coheight, 0) + 1
    return LaurentQPoly(counts)
