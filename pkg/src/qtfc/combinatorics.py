"""Fuss-Catalan numbers, their q and q,t closed forms, Dyck paths, root posets
and filtered chains of order ideals."""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .arith import LaurentQPoly, QTPoly, q_binomial, q_integer, qt_bracket
from .errors import DomainError
from .groups import GroupSpec


# -- numbers and closed forms ----------------------------------------------------

def fuss_catalan(g: GroupSpec, m: int) -> int:
    """prod_i (d_i + m h) / d_i."""
    if not g.well_generated:
        warnings.warn(f"{g.display_name} is not well-generated; the product formula may not apply")
    value = Fraction(1)
    for d in g.degrees:
        value *= Fraction(d + m * g.h, d)
    if value.denominator != 1:
        raise DomainError(f"Fuss-Catalan product for {g.display_name}, m={m} is {value}, not an integer")
    return int(value)


def fuss_catalan_q(g: GroupSpec, m: int) -> LaurentQPoly:
    """prod_i [d_i + m h]_q / [d_i]_q as an exact polynomial."""
    num = LaurentQPoly.one()
    den = LaurentQPoly.one()
    for d in g.degrees:
        num = num * q_integer(d + m * g.h)
        den = den * q_integer(d)
    quotient = num.exact_div(den)
    if g.well_generated and not quotient.is_nonnegative():
        raise DomainError(f"q-Fuss-Catalan polynomial of {g.display_name} has a negative coefficient")
    return quotient


def type_a_fuss_catalan(n: int, m: int) -> int:
    """1/(mn+1) * binom((m+1)n, n)."""
    return comb((m + 1) * n, n) // (m * n + 1)


def dihedral_qt(k: int, m: int) -> QTPoly:
    """sum_{j=0}^m (qt)^{m-j} [jk+1]_{q,t}."""
    if k < 2 or m < 0:
        raise DomainError(f"dihedral closed form needs k >= 2, m >= 0 (got k={k}, m={m})")
    total = QTPoly()
    for j in range(m + 1):
        total = total + QTPoly.monomial(m - j, m - j) * qt_bracket(j * k + 1)
    return total


def cyclic_qt(k: int, m: int) -> QTPoly:
    """sum_{i=0}^m q^i t^{(m-i)(k-1)}."""
    if k < 2:
        raise DomainError(f"cyclic closed form needs k >= 2, got {k}")
    return QTPoly({(i, (m - i) * (k - 1)): 1 for i in range(m + 1)})


def macmahon_q(n: int, m: int) -> LaurentQPoly:
    """[(m+1)n choose n]_q / [mn+1]_q."""
    q, r = q_binomial((m + 1) * n, n).divmod(q_integer(m * n + 1))
    assert not r.terms, "q-binomial not divisible by [mn+1]_q"
    return q


# -- Dyck paths ----------------------------------------------------------------------

@dataclass(frozen=True)
class DyckPath:
    m: int
    seq: Tuple[int, ...]

    @property
    def area(self) -> int:
        return sum(self.seq)

    def is_valid(self) -> bool:
        if not self.seq or self.seq[0] != 0:
            return False
        return all(0 <= b <= a + self.m for a, b in zip(self.seq, self.seq[1:])) and min(self.seq) >= 0


def dyck_paths(n: int, m: int) -> Iterator[DyckPath]:
    """m-Dyck paths of length n as sequences a_1 = 0, 0 <= a_{i+1} <= a_i + m."""
    if n < 1:
        raise DomainError(f"Dyck paths need n >= 1, got {n}")

    def rec(prefix):
        if len(prefix) == n:
            yield DyckPath(m, tuple(prefix))
            return
        for v in range(prefix[-1] + m + 1):
            yield from rec(prefix + [v])

    yield from rec([0])


def area_genfun(n: int, m: int) -> LaurentQPoly:
    counts: Dict[int, int] = {}
    for path in dyck_paths(n, m):
        counts[path.area] = counts.get(path.area, 0) + 1
    return LaurentQPoly(counts)


# -- root posets ---------------------------------------------------------------------

def cartan_matrix(kind: str, n: int) -> List[List[int]]:
    """A[i][j] = <alpha_i, alpha_j^vee> (Bourbaki numbering)."""
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    if kind == "G":
        if n != 2:
            raise DomainError("G2 has rank 2")
        # alpha_1 short, alpha_2 long
        return [[2, -1], [-3, 2]]
    for i in range(n - 1):
        A[i][i + 1] = A[i + 1][i] = -1
    if kind == "A":
        return A
    if kind == "B":
        if n >= 2:
            A[n - 1][n - 2] = -2
        return A
    if kind == "C":
        if n >= 2:
            A[n - 2][n - 1] = -2
        return A
    if kind == "D":
        if n < 2:
            raise DomainError("D_n needs n >= 2")
        A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        if n >= 3:
            A[n - 3][n - 1] = A[n - 1][n - 3] = -1
        return A
    raise DomainError(f"unknown Cartan type {kind!r}")


def positive_roots(kind: str, n: int) -> List[Tuple[int, ...]]:
    """Positive roots in simple-root coordinates, sorted by height then lex.

    Uses root strings: if beta - q*alpha_i, ..., beta is the alpha_i-string
    ending at beta, then beta + alpha_i is a root iff q > <beta, alpha_i^vee>.
    """
    A = cartan_matrix(kind, n)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * A[j][i] for j in range(n))
                q = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        q += 1
                    else:
                        break
                if q - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda r: (sum(r), tuple(-v for v in r)))


@dataclass(frozen=True)
class RootPoset:
    name: str
    elements: int
    leq: Tuple[Tuple[bool, ...], ...]
    roots: Optional[Tuple[Tuple[int, ...], ...]] = None
    kind: Optional[str] = None
    rank: Optional[int] = None

    @property
    def positive_roots(self):
        return self.roots

    @property
    def covers(self) -> List[Tuple[int, int]]:
        out = []
        for a in range(self.elements):
            for b in range(self.elements):
                if a != b and self.leq[a][b]:
                    if not any(c not in (a, b) and self.leq[a][c] and self.leq[c][b] for c in range(self.elements)):
                        out.append((a, b))
        return out

    def sum_index(self):
        """sums[i][j] = index of root_i + root_j, or None."""
        if self.roots is None:
            raise DomainError(f"{self.name} has no root vectors; sums are undefined")
        look = {r: i for i, r in enumerate(self.roots)}
        return [[look.get(tuple(a + b for a, b in zip(r, s))) for s in self.roots] for r in self.roots]


def _poset_from_roots(name, kind, n, roots) -> RootPoset:
    leq = tuple(tuple(all(x <= y for x, y in zip(a, b)) for b in roots) for a in roots)
    return RootPoset(name, len(roots), leq, tuple(roots), kind, n)


def armstrong_i2_poset(k: int) -> RootPoset:
    """Two atoms under a common cover, followed by a chain: k elements in total."""
    if k < 2:
        raise DomainError("ArmstrongI2(k) needs k >= 2")
    size = k
    below = {i: set() for i in range(size)}
    for top in range(2, size):
        below[top] = {0, 1} | set(range(2, top))
    leq = tuple(tuple(a == b or a in below[b] for b in range(size)) for a in range(size))
    return RootPoset(f"ArmstrongI2({k})", size, leq)


def root_poset(spec: str) -> RootPoset:
    """``A3``, ``A(3)``, ``B2``, ``C3``, ``D4``, ``G2`` or ``ArmstrongI2(k)``."""
    text = spec.strip().replace(" ", "")
    m = re.fullmatch(r"ArmstrongI2\((\d+)\)", text)
    if m:
        return armstrong_i2_poset(int(m.group(1)))
    m = re.fullmatch(r"([ABCDG])\(?(\d+)\)?", text)
    if not m:
        raise DomainError(f"cannot parse root poset {spec!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A" and n == 0:
        # type A0, the empty poset: lets chain_to_dyck cover paths of length 1
        return RootPoset("A0", 0, (), (), "A", 0)
    if n < 1:
        raise DomainError("rank must be positive")
    if kind == "G" and n != 2:
        raise DomainError("only G2 exists")
    return _poset_from_roots(f"{kind}{n}", kind, n, positive_roots(kind, n))


# -- ideals and filtered chains ----------------------------------------------------------------

def order_ideals(poset: RootPoset) -> List[frozenset]:
    """All down-closed subsets, sorted by size then contents."""
    n = poset.elements
    below = [frozenset(j for j in range(n) if j != i and poset.leq[j][i]) for i in range(n)]
    out = []

    def rec(i, chosen):
        if i == n:
            out.append(frozenset(chosen))
            return
        rec(i + 1, chosen)
        if below[i] <= chosen:
            rec(i + 1, chosen | {i})

    # elements are listed with every element after the ones below it
    if any(j > i for i in range(n) for j in below[i]):
        raise DomainError("poset elements must be listed in a linear extension")
    rec(0, frozenset())
    return sorted(out, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class FilteredChain:
    ideals: Tuple[frozenset, ...]

    @property
    def m(self) -> int:
        return len(self.ideals)

    @property
    def weight(self) -> int:
        return sum(len(I) for I in self.ideals)


def _sum_closed(sums, A, B, target) -> bool:
    for i in A:
        row = sums[i]
        for j in B:
            r = row[j]
            if r is not None and r not in target:
                return False
    return True


def filtered_chains(poset: RootPoset, m: int) -> Iterator[FilteredChain]:
    """Chains I_1 <= ... <= I_m of order ideals with
    (I_i + I_j) & roots <= I_{i+j} for i + j <= m and
    (J_i + J_j) & roots <= J_{i+j} for all i, j, where J_i is the complement
    of I_i and J_i = J_m once i > m.
    """
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    ideals = order_ideals(poset)
    if poset.roots is None:
        if m > 1:
            raise DomainError(f"filtered chains of length {m} need root sums; {poset.name} is a "
                              "non-crystallographic poset where only order ideals (m = 1) make sense")
        for I in ideals:
            yield FilteredChain((I,))
        return
    sums = poset.sum_index()
    everything = frozenset(range(poset.elements))

    def rec(chain: List[frozenset]):
        s = len(chain)
        if s == m:
            yield FilteredChain(tuple(chain))
            return
        s += 1
        last = chain[-1] if chain else frozenset()
        for I in ideals:
            if not last <= I:
                continue
            trial = chain + [I]
            ok = True
            for i in range(1, s):
                j = s - i
                if i <= j and not _sum_closed(sums, trial[i - 1], trial[j - 1], I):
                    ok = False
                    break
            if ok:
                comp = [everything - X for X in trial]
                if s < m:
                    for i in range(1, s):
                        j = s - i
                        if i <= j and not _sum_closed(sums, comp[i - 1], comp[j - 1], comp[s - 1]):
                            ok = False
                            break
                else:
                    for i in range(1, m + 1):
                        for j in range(i, m + 1):
                            if i + j >= m and not _sum_closed(sums, comp[i - 1], comp[j - 1], comp[m - 1]):
                                ok = False
                                break
                        if not ok:
                            break
            if ok:
                yield from rec(trial)

    yield from rec([])


def coheight_genfun_chains(poset: RootPoset, m: int) -> LaurentQPoly:
    counts: Dict[int, int] = {}
    for ch in filtered_chains(poset, m):
        counts[ch.weight] = counts.get(ch.weight, 0) + 1
    return LaurentQPoly(counts)


def _type_a_positions(poset: RootPoset) -> List[Tuple[int, int]]:
    """(i, j) with root = e_j - e_i, 1-based, for a type A poset."""
    if poset.kind != "A":
        raise DomainError("chain_to_dyck needs a type A root poset")
    out = []
    for r in poset.roots:
        ones = [t for t, v in enumerate(r) if v]
        i, j = ones[0] + 1, ones[-1] + 2
        out.append((i, j))
    return out


def ideal_to_dyck(poset: RootPoset, ideal: Sequence[int]) -> Tuple[int, ...]:
    """a_j(I) = #{i < j : e_j - e_i in I}."""
    n = poset.rank + 1
    pos = _type_a_positions(poset)
    seq = [0] * n
    for idx in ideal:
        _, j = pos[idx]
        seq[j - 1] += 1
    return tuple(seq)


def chain_to_dyck(poset: RootPoset, chain: FilteredChain) -> DyckPath:
    """Componentwise sum of the 1-Dyck paths of the ideals in the chain."""
    n = poset.rank + 1
    total = [0] * n
    for I in chain.ideals:
        for j, v in enumerate(ideal_to_dyck(poset, I)):
            total[j] += v
    return DyckPath(chain.m, tuple(total))
