"""Rational bases of the det^s-isotypic components of C[x, y] for G(k,p,n).

A monomial x^alpha y^beta is a list of exponent pairs (alpha_i, beta_i).
Diagonal elements of G(k,p,n) multiply it by a root of unity and
permutations shuffle the pairs, so every det^s-isotypic polynomial is a
combination of signed permutation-orbit sums

    e_r = sum over arrangements nu of r of sign(nu -> r)^s * x^nu y^nu,

one for each multiset r of pairs that is admissible for s.  With
delta_i = alpha_i - beta_i - s, admissibility means: all delta_i agree
mod k, p*delta = 0 mod k, and for odd s the pairs are distinct.  These
orbit sums have coefficients in {0, 1, -1}, so all linear algebra on
isotypic components happens over Q even when k > 2.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from .arith import Monomial, MultiPoly
from .errors import DomainError
from .groups import GroupSpec

Pair = Tuple[int, int]
Rep = Tuple[Pair, ...]


def sort_pairs(pairs) -> Tuple[Rep, int, bool]:
    """Sort pairs descending; returns (rep, sign of the sorting permutation, all distinct)."""
    arr = list(pairs)
    sign = 1
    n = len(arr)
    for i in range(1, n):
        j = i
        while j > 0 and arr[j - 1] < arr[j]:
            arr[j - 1], arr[j] = arr[j], arr[j - 1]
            sign = -sign
            j -= 1
    rep = tuple(arr)
    distinct = all(rep[i] != rep[i + 1] for i in range(n - 1))
    return rep, sign, distinct


def rep_monomial(rep: Rep) -> Monomial:
    return Monomial(tuple(a for a, _ in rep), tuple(b for _, b in rep))


def _pair_multisets(a: int, b: int, n: int, bound: Pair):
    """Non-increasing n-tuples of pairs, each <= bound lexicographically, summing to (a, b)."""
    if n == 0:
        if a == 0 and b == 0:
            yield ()
        return
    if n == 1:
        if (a, b) <= bound:
            yield ((a, b),)
        return
    top_alpha = min(a, bound[0])
    for alpha in range(top_alpha, -1, -1):
        if a - alpha > (n - 1) * alpha:
            break
        top_beta = b if alpha < bound[0] else min(b, bound[1])
        for beta in range(top_beta, -1, -1):
            if alpha == 0 and b - beta > (n - 1) * beta:
                break
            for rest in _pair_multisets(a - alpha, b - beta, n - 1, (alpha, beta)):
                yield ((alpha, beta),) + rest


class OrbitModel:
    """Orbit-sum coordinates for the isotypic components of one group."""

    def __init__(self, g: GroupSpec):
        self.g = g
        self.n = g.nvars
        self._orbits: Dict[tuple, Tuple[Rep, ...]] = {}
        self._index: Dict[tuple, Dict[Rep, int]] = {}

    def _skey(self, s: int) -> int:
        return s % (2 * self.g.k)

    def admissible(self, rep: Rep, s: int, distinct: bool = None) -> bool:
        k, p = self.g.k, self.g.p
        if distinct is None:
            distinct = len(set(rep)) == len(rep)
        if s % 2 and not distinct:
            return False
        if k == 1:
            return True
        d0 = (rep[0][0] - rep[0][1] - s) % k
        if any((a - b - s) % k != d0 for a, b in rep[1:]):
            return False
        return (p * d0) % k == 0

    def orbits(self, a: int, b: int, s: int) -> Tuple[Rep, ...]:
        """Admissible orbit representatives of bidegree (a, b), in a fixed order."""
        key = (a, b, self._skey(s))
        cached = self._orbits.get(key)
        if cached is None:
            reps = [r for r in _pair_multisets(a, b, self.n, (a, b)) if self.admissible(r, s)]
            cached = tuple(reps)
            self._orbits[key] = cached
            self._index[key] = {r: i for i, r in enumerate(cached)}
        return cached

    def index(self, a: int, b: int, s: int) -> Dict[Rep, int]:
        self.orbits(a, b, s)
        return self._index[(a, b, self._skey(s))]

    def dim(self, a: int, b: int, s: int) -> int:
        return len(self.orbits(a, b, s))

    def expand(self, rep: Rep, s: int) -> Dict[Rep, int]:
        """Arrangements of ``rep`` with their signs in the orbit sum."""
        return _expand(rep, s % 2)

    def orbit_sum(self, rep: Rep, s: int) -> MultiPoly:
        terms = {}
        for nu, c in self.expand(rep, s).items():
            terms[rep_monomial(nu)] = c
        return MultiPoly(self.n, terms)

    def to_poly(self, reps, coords, s: int) -> MultiPoly:
        terms = {}
        for rep, c in zip(reps, coords):
            if c:
                for nu, sg in self.expand(rep, s).items():
                    terms[rep_monomial(nu)] = Fraction(c) * sg
        return MultiPoly(self.n, terms)

    def coordinates(self, poly: MultiPoly, s: int):
        """Coordinates of a bihomogeneous det^s-isotypic polynomial.

        Returns (bidegree, {rep: Fraction}).  Raises DomainError if the
        polynomial is not a rational combination of admissible orbit sums.
        """
        bd = poly.bidegree
        if bd is None:
            raise DomainError("coordinates need a nonzero bihomogeneous polynomial")
        coords: Dict[Rep, Fraction] = {}
        for mono, c in poly.terms.items():
            if not c.is_rational():
                raise DomainError("orbit coordinates are only available for rational coefficients")
            pairs = tuple(zip(mono.xexp, mono.yexp))
            rep, sign, distinct = sort_pairs(pairs)
            if not self.admissible(rep, s, distinct):
                raise DomainError(f"monomial {mono.format()} is not admissible for det^{s}")
            value = c.to_fraction() * (sign if s % 2 else 1)
            if rep in coords and coords[rep] != value:
                raise DomainError("polynomial is not an isotypic combination of orbit sums")
            coords[rep] = value
        for rep, value in coords.items():
            for nu, sg in self.expand(rep, s).items():
                mono = rep_monomial(nu)
                if poly.coefficient(mono) != value * sg:
                    raise DomainError("polynomial is not an isotypic combination of orbit sums")
        return bd, coords


@lru_cache(maxsize=200000)
def _expand(rep: Rep, odd: int) -> Dict[Rep, int]:
    n = len(rep)
    out: Dict[Rep, int] = {}
    for perm in itertools.permutations(range(n)):
        nu = tuple(rep[perm[i]] for i in range(n))
        if nu in out:
            continue
        if odd:
            inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            out[nu] = -1 if inversions % 2 else 1
        else:
            out[nu] = 1
    return out


def divide_rep(target: Rep, mono: Rep):
    """target / mono as a pair list, or None if mono does not divide target."""
    out: List[Pair] = []
    for (ta, tb), (ma, mb) in zip(target, mono):
        if ma > ta or mb > tb:
            return None
        out.append((ta - ma, tb - mb))
    return out
