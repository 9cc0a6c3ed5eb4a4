"""Independent brute-force reference implementations used by the tests.

Nothing here imports the package.  Polynomials are dicts from exponent
tuples (x_1..x_n, y_1..y_n) to Fractions, groups are explicit lists of
signed permutations, and ranks come from plain Fraction elimination.
"""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction
from math import comb


# -- linear algebra -----------------------------------------------------------------------

def echelon(rows, basis=None):
    """Incrementally reduce sparse rows {col: value}; returns the list of pivot rows."""
    basis = [] if basis is None else basis
    for row in rows:
        row = {k: Fraction(v) for k, v in row.items() if v}
        for piv, b in basis:
            if piv in row:
                c = row[piv]
                for k, v in b.items():
                    nv = row.get(k, 0) - c * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        if row:
            piv = min(row)
            inv = 1 / row[piv]
            row = {k: v * inv for k, v in row.items()}
            for i, (p2, b2) in enumerate(basis):
                if piv in b2:
                    c = b2[piv]
                    for k, v in row.items():
                        nv = b2.get(k, 0) - c * v
                        if nv:
                            b2[k] = nv
                        else:
                            b2.pop(k, None)
            basis.append((piv, row))
    return basis


def dense_rank(matrix):
    rows = [{j: v for j, v in enumerate(r) if v} for r in matrix]
    return len(echelon(rows))


def minor_rank(matrix):
    """Rank as the size of the largest nonzero minor (exponential; tiny matrices only)."""
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    for size in range(min(m, n), 0, -1):
        for rs in itertools.combinations(range(m), size):
            for cs in itertools.combinations(range(n), size):
                if _det([[matrix[i][j] for j in cs] for i in rs]) != 0:
                    return size
    return 0


def _det(mat):
    n = len(mat)
    if n == 1:
        return Fraction(mat[0][0])
    total = Fraction(0)
    for j in range(n):
        if mat[0][j]:
            minor = [row[:j] + row[j + 1:] for row in mat[1:]]
            total += (-1) ** j * Fraction(mat[0][j]) * _det(minor)
    return total


# -- real signed-permutation groups ------------------------------------------------------------

def signed_permutation_group(kind: str, n: int):
    """Elements (perm, signs) of S_n (kind 'A'), B_n or D_n acting on n coordinates."""
    out = []
    for perm in itertools.permutations(range(n)):
        if kind == "A":
            out.append((perm, (1,) * n))
            continue
        for signs in itertools.product((1, -1), repeat=n):
            if kind == "D" and signs.count(-1) % 2:
                continue
            out.append((perm, signs))
    return out


def perm_sign(perm):
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def element_det(el):
    perm, signs = el
    d = perm_sign(perm)
    for s in signs:
        d *= s
    return d


def act(el, poly, n):
    """x_i -> s_i x_{perm(i)}, same on y."""
    perm, signs = el
    out = {}
    for exps, c in poly.items():
        new = [0] * (2 * n)
        coeff = c
        for i in range(n):
            new[perm[i]] += exps[i]
            new[n + perm[i]] += exps[n + i]
            if signs[i] == -1 and (exps[i] + exps[n + i]) % 2:
                coeff = -coeff
        key = tuple(new)
        out[key] = out.get(key, 0) + coeff
    return {k: v for k, v in out.items() if v}


def monomials(n, a, b):
    def comps(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in comps(total - first, parts - 1):
                yield (first,) + rest
    return [xa + yb for xa in comps(a, n) for yb in comps(b, n)]


def mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(u + v for u, v in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


class RealGroupOracle:
    """dim of minimal generators of A^m by direct linear algebra in the full polynomial ring."""

    def __init__(self, kind: str, n: int):
        self.kind, self.n = kind, n
        self.group = signed_permutation_group(kind, n)
        self._iso = {}
        self._power = {}

    def isotypic(self, a, b):
        """Echelon basis of {p : w p = det(w) p} in bidegree (a, b)."""
        if (a, b) not in self._iso:
            rows = []
            for mono in monomials(self.n, a, b):
                avg = {}
                for el in self.group:
                    d = element_det(el)
                    for k, v in act(el, {mono: Fraction(1)}, self.n).items():
                        avg[k] = avg.get(k, 0) + d * v
                rows.append({k: v for k, v in avg.items() if v})
            self._iso[(a, b)] = [row for _, row in echelon(rows)]
        return self._iso[(a, b)]

    def ideal_power(self, m, a, b):
        """Echelon basis of the (a, b) component of A^m (A^0 = the whole ring)."""
        key = (m, a, b)
        if key in self._power:
            return self._power[key]
        if m == 0:
            basis = [{mono: Fraction(1)} for mono in monomials(self.n, a, b)]
        else:
            rows = []
            for c in range(a + 1):
                for d in range(b + 1):
                    if (c, d) == (0, 0):
                        continue
                    iso = self.isotypic(c, d)
                    if not iso:
                        continue
                    for p in iso:
                        for q in self.ideal_power(m - 1, a - c, b - d):
                            rows.append(mul(p, q))
            basis = [row for _, row in echelon(rows)]
        self._power[key] = basis
        return basis

    def generators(self, m, a, b):
        top = self.ideal_power(m, a, b)
        if not top:
            return 0
        rows = []
        n = self.n
        for i in range(n):
            xi = tuple(1 if j == i else 0 for j in range(2 * n))
            yi = tuple(1 if j == n + i else 0 for j in range(2 * n))
            if a >= 1:
                rows += [mul({xi: 1}, q) for q in self.ideal_power(m, a - 1, b)]
            if b >= 1:
                rows += [mul({yi: 1}, q) for q in self.ideal_power(m, a, b - 1)]
        return len(top) - len(echelon(rows))

    def series(self, m, dmax):
        """{(a, b): count} over a + b <= dmax."""
        out = {}
        for total in range(dmax + 1):
            for a in range(total + 1):
                c = self.generators(m, a, total - a)
                if c:
                    out[(a, total - a)] = c
        return out


# -- character formula for G(k,p,n) -------------------------------------------------------------

def _is_member(phases, k, p):
    return sum(phases) % p == 0


def character_dimension(k, p, n, a, b, s):
    """dim of {f : w f = det(w)^s f} in bidegree (a, b) via (1/|G|) sum conj(det^s) tr.

    x_i -> z^{c_i} x_{perm(i)}, y_i -> z^{-c_i} y_{perm(i)}; the trace on
    monomials counts monomials fixed by the permutation, weighted by the scalar.
    """
    z = cmath.exp(2j * cmath.pi / k)
    total = 0j
    order = 0
    monos = monomials(n, a, b)
    for perm in itertools.permutations(range(n)):
        sgn = perm_sign(perm)
        for phases in itertools.product(range(k), repeat=n):
            if not _is_member(phases, k, p):
                continue
            order += 1
            det = sgn * z ** sum(phases)
            trace = 0j
            for e in monos:
                if all(e[perm[i]] == e[i] and e[n + perm[i]] == e[n + i] for i in range(n)):
                    trace += z ** sum(phases[i] * (e[i] - e[n + i]) for i in range(n))
            total += (det ** s).conjugate() * trace
    return total / order


# -- combinatorics ---------------------------------------------------------------------------

def dyck_area_counts(n, m):
    """{area: count} for m-Dyck paths via a1 = 0, a_{i+1} <= a_i + m."""
    out = {}

    def rec(seq):
        if len(seq) == n:
            area = sum(seq)
            out[area] = out.get(area, 0) + 1
            return
        for v in range(seq[-1] + m + 1):
            rec(seq + [v])

    if n == 0:
        return {0: 1}
    rec([0])
    return out


def fuss_count_type_a(n, m):
    return comb((m + 1) * n, n) // (m * n + 1)

