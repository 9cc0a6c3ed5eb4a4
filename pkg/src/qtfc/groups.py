"""Complex reflection groups G(k,p,n) in the monomial-matrix model.

An element is a pair (perm, phases) acting on the basis of V by
``e_i -> zeta^{phases[i]} e_{perm[i]}``.  On the polynomial ring
C[x, y] = C[V + V*] the variables transform as

    x_i -> zeta^{c_i} x_{perm(i)},    y_i -> zeta^{-c_i} y_{perm(i)},

so that the generator of the cyclic group sends x^a y^b to zeta^{a-b} x^a y^b.
Type A_{n-1} is realized as G(1,1,n) acting on n variable pairs; the extra
trivial summand changes neither the invariant theory that matters here nor
the isotypic components.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Dict, List, Tuple

from .arith import Cyclotomic, Monomial, MultiPoly, row_reduce
from .errors import DomainError, ResourceError

ELEMENT_CAP = 10 ** 5

ORIENTATIONS = ("standard", "swapped")


@dataclass(frozen=True)
class GroupSpec:
    k: int
    p: int
    nvars: int
    rank: int
    degrees: Tuple[int, ...]
    coxeter_number: int
    order: int
    N: int
    Nstar: int
    well_generated: bool
    display_name: str

    @property
    def is_real(self) -> bool:
        return self.k <= 2 or (self.k == self.p and self.nvars == 2)

    @property
    def h(self) -> int:
        return self.coxeter_number

    def __str__(self):
        return self.display_name


@dataclass(frozen=True)
class GroupElement:
    perm: Tuple[int, ...]
    phases: Tuple[int, ...]
    k: int

    @property
    def n(self) -> int:
        return len(self.perm)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self * other, i.e. apply ``other`` first."""
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        phases = tuple((other.phases[i] + self.phases[other.perm[i]]) % self.k for i in range(self.n))
        return GroupElement(perm, phases, self.k)

    __mul__ = compose

    def inverse(self) -> "GroupElement":
        perm = [0] * self.n
        phases = [0] * self.n
        for i, j in enumerate(self.perm):
            perm[j] = i
            phases[j] = (-self.phases[i]) % self.k
        return GroupElement(tuple(perm), tuple(phases), self.k)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.perm)) and not any(self.phases)

    def perm_sign(self) -> int:
        return permutation_sign(self.perm)

    def det(self) -> Cyclotomic:
        return Cyclotomic.zeta(self.k, sum(self.phases)) * self.perm_sign()

    def matrix(self) -> List[List[Cyclotomic]]:
        """Dense matrix on V; column i holds the image of e_i."""
        zero = Cyclotomic.rational(0, self.k)
        m = [[zero] * self.n for _ in range(self.n)]
        for i, (j, c) in enumerate(zip(self.perm, self.phases)):
            m[j][i] = Cyclotomic.zeta(self.k, c)
        return m


def permutation_sign(perm) -> int:
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


def _degrees(k: int, p: int, n: int) -> Tuple[int, ...]:
    # degree-1 invariants span a trivial summand (S_n = G(1,1,n), and the
    # trivial group G(k,k,1)); they are not part of the reflection data
    return tuple(d for d in sorted([k * i for i in range(1, n)] + [n * k // p]) if d > 1)


def _default_name(k: int, p: int, n: int) -> str:
    if k == 1 and p == 1:
        return f"A{n - 1}"
    if k == 2 and p == 1:
        return f"B{n}"
    if k == 2 and p == 2:
        return f"D{n}"
    if n == 2 and k == p:
        return f"I2({k})"
    if n == 1 and p == 1:
        return f"C{k}"
    return f"G({k},{p},{n})"


_NAME_PATTERNS = [
    (re.compile(r"^A\s*(\d+)$"), lambda r: (1, 1, r + 1)),
    (re.compile(r"^B\s*(\d+)$"), lambda r: (2, 1, r)),
    (re.compile(r"^D\s*(\d+)$"), lambda r: (2, 2, r)),
    (re.compile(r"^C\s*(\d+)$"), lambda r: (r, 1, 1)),
    (re.compile(r"^Cyclic\s*\(\s*(\d+)\s*\)$"), lambda r: (r, 1, 1)),
]


def parse_group(name: str) -> Tuple[int, int, int, str]:
    """Resolve ``A2``, ``B3``, ``D4``, ``I2(5)``, ``C6``/``C 6``/``Cyclic(6)`` or ``G(k,p,l)``.

    Returns (k, p, n, display_name).
    """
    text = name.strip()
    m = re.fullmatch(r"I2\s*\(\s*(\d+)\s*\)", text)
    if m:
        k = int(m.group(1))
        if k < 2:
            raise DomainError(f"I2(k) needs k >= 2, got {k}")
        return k, k, 2, f"I2({k})"
    if text == "G2":
        return 6, 6, 2, "G2"
    m = re.fullmatch(r"G\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", text)
    if m:
        k, p, n = (int(g) for g in m.groups())
        return k, p, n, f"G({k},{p},{n})"
    for pattern, resolve in _NAME_PATTERNS:
        m = pattern.fullmatch(text)
        if m:
            r = int(m.group(1))
            if r < 1:
                raise DomainError(f"rank must be positive in {name!r}")
            k, p, n = resolve(r)
            return k, p, n, text.replace(" ", "")
    raise DomainError(f"cannot parse group name {name!r}")


def build_group(name_or_k, p: int = None, n: int = None, name: str = None) -> GroupSpec:
    """Build a GroupSpec from a name (``"B3"``) or from parameters (k, p, n).

    The reflection and hyperplane counts come from enumerating the group,
    and the reflection count is checked against the degrees.
    """
    if isinstance(name_or_k, str):
        k, p, n, display = parse_group(name_or_k)
    else:
        k = name_or_k
        if p is None or n is None:
            raise DomainError("build_group needs (k, p, n) or a name")
        display = name or _default_name(k, p, n)
    if k < 1 or p < 1 or n < 1:
        raise DomainError(f"G({k},{p},{n}) needs positive parameters")
    if k % p:
        raise DomainError(f"G({k},{p},{n}): p={p} does not divide k={k}")
    degrees = _degrees(k, p, n)
    rank = len(degrees)
    order = k ** n * factorial(n) // p
    N, Nstar = _count_reflections(k, p, n)
    if N != sum(d - 1 for d in degrees):
        raise AssertionError(f"reflection count {N} disagrees with degrees {degrees}")
    return GroupSpec(
        k=k, p=p, nvars=n, rank=rank, degrees=degrees,
        coxeter_number=max(degrees) if degrees else 1,
        order=order, N=N, Nstar=Nstar,
        well_generated=(p == 1 or p == k),
        display_name=display,
    )


def _elements(k: int, p: int, n: int) -> Tuple[GroupElement, ...]:
    order = k ** n * factorial(n) // p
    if order > ELEMENT_CAP:
        raise ResourceError(f"G({k},{p},{n}) has order {order} > cap {ELEMENT_CAP}")
    out = []
    for perm in itertools.permutations(range(n)):
        for phases in itertools.product(range(k), repeat=n):
            if sum(phases) % p == 0:
                out.append(GroupElement(perm, phases, k))
    return tuple(out)


_elements_cached = lru_cache(maxsize=32)(_elements)


def enumerate_elements(g: GroupSpec, cap: int = ELEMENT_CAP) -> Tuple[GroupElement, ...]:
    """All elements in a fixed order (permutations lex, then phases lex)."""
    if g.order > cap:
        raise ResourceError(f"{g.display_name} has order {g.order} > cap {cap}")
    return _elements_cached(g.k, g.p, g.nvars)


def _count_reflections(k: int, p: int, n: int) -> Tuple[int, int]:
    reflections = 0
    hyperplanes = set()
    for w in _elements_cached(k, p, n):
        if w.is_identity():
            continue
        mat = w.matrix()
        diff = [[mat[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)]
        # fixed space has codimension rank(w - 1); reflections have rank one
        rk, basis, _ = row_reduce(diff)
        if rk == 1:
            reflections += 1
            # the fixed hyperplane is the kernel of this row
            hyperplanes.add(tuple(basis[0]))
    return reflections, len(hyperplanes)


def count_reflections_and_hyperplanes(g: GroupSpec) -> Tuple[int, int]:
    return _count_reflections(g.k, g.p, g.nvars)


# -- action on polynomials -----------------------------------------------------

def act_on_monomial(w: GroupElement, mono: Monomial) -> Tuple[int, Monomial]:
    """Image of a monomial: returns (power of zeta, monomial)."""
    n = w.n
    x = [0] * n
    y = [0] * n
    power = 0
    for i in range(n):
        j = w.perm[i]
        x[j] = mono.xexp[i]
        y[j] = mono.yexp[i]
        power += w.phases[i] * (mono.xexp[i] - mono.yexp[i])
    return power % w.k, Monomial(tuple(x), tuple(y))


def apply_element(w: GroupElement, poly: MultiPoly) -> MultiPoly:
    out: Dict[Monomial, Cyclotomic] = {}
    for mono, c in poly.terms.items():
        power, image = act_on_monomial(w, mono)
        v = c * Cyclotomic.zeta(w.k, power)
        out[image] = out[image] + v if image in out else v
    return MultiPoly(poly.nvars, out)


def _character_power(orientation: str) -> int:
    if orientation not in ORIENTATIONS:
        raise DomainError(f"orientation must be one of {ORIENTATIONS}, got {orientation!r}")
    return 1 if orientation == "standard" else -1


def _project(g: GroupSpec, poly: MultiPoly, weight) -> MultiPoly:
    out: Dict[Monomial, Cyclotomic] = {}
    inv_order = Fraction(1, g.order)
    for w in enumerate_elements(g):
        wt = weight(w)
        for mono, c in poly.terms.items():
            power, image = act_on_monomial(w, mono)
            v = c * wt * Cyclotomic.zeta(g.k, power)
            out[image] = out[image] + v if image in out else v
    return MultiPoly(poly.nvars, {m: v * inv_order for m, v in out.items()})


def trivial_project(g: GroupSpec, poly: MultiPoly) -> MultiPoly:
    """e(p) = (1/|W|) sum_w w(p)."""
    one = Cyclotomic.rational(1, g.k)
    return _project(g, poly, lambda w: one)


def det_project(g: GroupSpec, poly: MultiPoly, orientation: str = "standard") -> MultiPoly:
    """e_det(p) = (1/|W|) sum_w det(w)^{-1} w(p).

    With ``orientation="swapped"`` the weight is det(w) instead, which
    projects onto the det^{-1}-isotypic component.
    """
    s = _character_power(orientation)
    return _project(g, poly, lambda w: _det_power(w, -s))


def _det_power(w: GroupElement, s: int) -> Cyclotomic:
    return Cyclotomic.zeta(w.k, s * sum(w.phases)) * (w.perm_sign() ** (s % 2))


def character_power(orientation: str, m: int = 1) -> int:
    """Exponent s such that the module in question lives in the det^s component."""
    return _character_power(orientation) * m


def group_generators(g: GroupSpec) -> List[GroupElement]:
    """A small generating set: adjacent transpositions, a diagonal phase and a twisted swap."""
    n, k, p = g.nvars, g.k, g.p
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(GroupElement(tuple(perm), (0,) * n, k))
    if k > 1:
        if p < k:
            gens.append(GroupElement(tuple(range(n)), (p,) + (0,) * (n - 1), k))
        if n >= 2:
            perm = (1, 0) + tuple(range(2, n))
            gens.append(GroupElement(perm, (1, k - 1) + (0,) * (n - 2), k))
    return gens
