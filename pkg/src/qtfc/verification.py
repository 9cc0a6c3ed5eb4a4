"""Golden data and the conjecture-check harness.

Every check returns a CheckReport; resource problems become
``skipped-resource`` instead of exceptions so a whole tier always runs to
completion.  Checks are grouped in a fixed catalog and reports always come
back in catalog order, also when run in parallel.
"""

from __future__ import annotations

import re
import time
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Tuple, Union

from .arith import LaurentQPoly, QTPoly, q_integer, qt_bracket, specialize
from .coinvariants import full_coinvariant_hilbert, generator_tables
from .combinatorics import (chain_to_dyck, coheight_genfun_chains, cyclic_qt, dihedral_qt,
                            dyck_paths, filtered_chains, fuss_catalan, fuss_catalan_q, root_poset)
from .errors import DomainError, QTFCError, ResourceError
from .groups import GroupSpec, build_group
from .shi import all_regions_count, coheight_genfun, g2_truncated, positive_regions, region_constraints, \
    satisfies, shi_arrangement

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped-resource"
PASS_AFTER_SWAP = "pass-after-swap"
STATUSES = (PASS, FAIL, SKIPPED, PASS_AFTER_SWAP)

_BRACKET_TERM = re.compile(r"^(\d*)(?:q(?:\^(\d+))?)?(?:t(?:\^(\d+))?)?\[(\d+)\]$")


def bracket_form(text: str) -> QTPoly:
    """Expand a sum like ``[5]+qt[1]+2q^2t^2[3]`` of monomial multiples of [n]_{q,t}."""
    total = QTPoly()
    for raw in text.replace(" ", "").split("+"):
        match = _BRACKET_TERM.match(raw)
        if not match or not raw:
            raise DomainError(f"cannot parse bracket term {raw!r}")
        coeff, qe, te, n = match.groups()
        has_q = "q" in raw.split("[")[0]
        has_t = "t" in raw.split("[")[0]
        i = (int(qe) if qe else 1) if has_q else 0
        j = (int(te) if te else 1) if has_t else 0
        total = total + QTPoly.monomial(i, j, int(coeff) if coeff else 1) * qt_bracket(int(n))
    return total


@dataclass(frozen=True)
class GoldenEntry:
    group: str
    m: int
    expected: Union[QTPoly, int, str]
    source: str
    documentation_only: bool = False
    note: str = ""


@dataclass
class CheckReport:
    check_id: str
    status: str
    details: str
    runtime: float = 0.0
    orientation: Optional[str] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == PASS_AFTER_SWAP and not self.check_id.startswith("complex-rank2:"):
            raise ValueError("pass-after-swap is reserved for the rank-2 complex table")

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_dict(self) -> dict:
        return asdict(self)

    def line(self) -> str:
        extra = f" [{self.orientation}]" if self.orientation else ""
        return f"{self.status:16s} {self.check_id}{extra}: {self.details} ({self.runtime:.2f}s)"


# -- golden data -------------------------------------------------------------------------

_DIMS_B = {1: (2, 3, 4, 5), 2: (6, 15, 28, 45), 3: (20, 84), 4: (70, 495)}
_DIMS_D = {1: (1, 1, 1, 1), 2: (4, 9, 16, 25), 3: (14, 55, 140, 285), 4: (50, 336)}

_SERIES_B = {
    (2, 1): "[5]+qt[1]",
    (2, 2): "[9]+qt[5]+q^2t^2[1]",
    (2, 3): "[13]+qt[9]+q^2t^2[5]+q^3t^3[1]",
    (3, 1): "[10]+qt[6]+qt[4]",
    (3, 2): "[19]+qt[15]+qt[13]+q^2t^2[11]+q^2t^2[9]+q^3t^3[7]+q^2t^2[7]+q^4t^4[3]",
    (3, 3): "[28]+qt[24]+qt[22]+q^2t^2[20]+q^2t^2[18]+q^3t^3[16]+q^2t^2[16]+q^3t^3[14]"
            "+q^4t^4[12]+q^3t^3[12]+q^4t^4[10]+q^5t^5[8]+q^3t^3[10]+q^5t^5[6]+q^6t^6[4]",
    (4, 1): "[17]+qt[13]+qt[11]+q^2t^2[9]+qt[9]+q^3t^3[5]+q^2t^2[5]+q^4t^4[1]",
    # printed with a lone q^3t^2[19]; kept verbatim, see B4_M2_NOTE
    (4, 2): "[33]+qt[29]+qt[27]+q^2t^2[25]+qt[25]+q^2t^2[23]+q^3t^3[21]+2q^2t^2[21]+q^3t^2[19]"
            "+q^4t^4[17]+q^2t^2[19]+2q^3t^3[17]+q^4t^4[15]+q^5t^5[13]+q^2t^2[17]+q^3t^3[15]"
            "+2q^4t^4[13]+q^5t^5[11]+q^6t^6[9]+q^3t^3[13]+q^4t^4[11]+2q^5t^5[9]+q^6t^6[7]"
            "+q^7t^7[5]+q^9t^9[1]+q^4t^4[9]+2q^6t^6[5]+q^8t^8[1]",
}
B4_M2_NOTE = ("the printed B4, m=2 row contains q^3t^2[19], which breaks q<->t symmetry; "
              "the symmetric reading q^3t^3[19] is used for comparisons")

_SERIES_D = {
    (2, 1): "[3]+qt[1]",
    (2, 2): "[5]+qt[3]+q^2t^2[1]",
    (2, 3): "[7]+qt[5]+q^2t^2[3]+q^3t^3[1]",
    (3, 1): "[7]+qt[4]+qt[3]",
    (3, 2): "[13]+qt[10]+qt[9]+q^2t^2[7]+q^2t^2[6]+q^2t^2[5]+q^3t^3[4]+q^4t^4[1]",
    (3, 3): "[19]+qt[16]+qt[15]+q^2t^2[13]+q^2t^2[12]+q^3t^3[10]+q^2t^2[11]+q^3t^3[9]"
            "+q^4t^4[7]+q^3t^3[8]+q^4t^4[6]+q^5t^5[4]+q^3t^3[7]+q^5t^5[3]",
    (4, 1): "[13]+2qt[9]+qt[7]+2q^2t^2[5]+q^4t^4[1]+q^3t^3[1]",
    (4, 2): "[25]+2qt[21]+qt[19]+3q^2t^2[17]+2q^2t^2[15]+4q^3t^3[13]+q^2t^2[13]+2q^3t^3[11]"
            "+5q^4t^4[9]+q^5t^5[7]+2q^6t^6[5]+q^8t^8[1]+q^4t^4[7]+2q^5t^5[5]+q^7t^7[1]+q^6t^6[1]",
}

_COMPLEX_RANK2 = {
    "G(3,1,2)": "q^7 + q^5*t + q^3*t^2 + q^2*t + q*t^3 + t^5",
    "G(4,1,2)": "q^10 + q^7*t + q^4*t^2 + q^3*t + q*t^3 + t^6",
    "G(6,1,2)": "q^16 + q^11*t + q^6*t^2 + q^5*t + q*t^3 + t^8",
    "G(4,2,2)": "q^6 + q^4*t^2 + 2*q^3*t + q^2*t^4 + 2*q*t^3 + t^6",
    "G(6,2,2)": "q^10 + q^6*t^2 + 2*q^5*t + q^3*t^5 + q^2*t^4 + q*t^3 + t^8",
}
# the table also prints a row G(3,2,2) identical to G(3,1,2); 2 does not divide 3
COMPLEX_TYPO_NOTE = "row G(3,2,2) is not a valid G(k,p,n) (p must divide k) and repeats G(3,1,2)"

A2_M2_SERIES = "[7]+qt[4]+q^2t^2[1]"
A2_M2_T1 = "1 + 2*q + 3*q^2 + 2*q^3 + 2*q^4 + q^5 + q^6"


def golden_tables() -> List[GoldenEntry]:
    entries: List[GoldenEntry] = []
    for letter, dims in (("B", _DIMS_B), ("D", _DIMS_D)):
        for n, row in dims.items():
            for m, value in enumerate(row, start=1):
                entries.append(GoldenEntry(f"{letter}{n}", m, value, "tabulated-dimensions"))
    for letter, table in (("B", _SERIES_B), ("D", _SERIES_D)):
        for (n, m), text in table.items():
            note = B4_M2_NOTE if (letter, n, m) == ("B", 4, 2) else ""
            entries.append(GoldenEntry(f"{letter}{n}", m, bracket_form(text), f"tabulated-{letter}-series", note=note))
    for name, text in _COMPLEX_RANK2.items():
        entries.append(GoldenEntry(name, 1, QTPoly.parse(text), "tabulated-complex-rank2"))
    entries.append(GoldenEntry("G(3,2,2)", 1, QTPoly.parse(_COMPLEX_RANK2["G(3,1,2)"]), "tabulated-complex-rank2",
                               documentation_only=True, note=COMPLEX_TYPO_NOTE))
    entries.append(GoldenEntry("A2", 2, bracket_form(A2_M2_SERIES), "inline-A2"))
    entries.append(GoldenEntry("A2", 2, A2_M2_T1, "inline-A2-t1"))
    for name, value in (("B4", "9^4+1"), ("B5", "11^5+33"), ("D4", "7^4+40")):
        entries.append(GoldenEntry(name, 1, value, "full-coinvariant-dimension", documentation_only=True,
                                   note="dimension of the full diagonal coinvariant ring; never computed"))
    return entries


def lookup(group: str, m: int, source_prefix: str = "tabulated") -> GoldenEntry:
    """First golden entry for (group, m) whose source starts with ``source_prefix``."""
    for entry in golden_tables():
        if entry.group == group and entry.m == m and entry.source.startswith(source_prefix):
            return entry
    raise KeyError((group, m, source_prefix))


def golden_series(letter: str, n: int, m: int, corrected: bool = True) -> QTPoly:
    table = _SERIES_B if letter == "B" else _SERIES_D
    text = table[(n, m)]
    if corrected and (letter, n, m) == ("B", 4, 2):
        text = text.replace("q^3t^2[19]", "q^3t^3[19]")
    return bracket_form(text)


# -- computed series, cached per process ---------------------------------------------------

_SERIES_CACHE: Dict[Tuple[str, str], List[QTPoly]] = {}


def computed_series(g: GroupSpec, m: int, orientation: str = "standard") -> QTPoly:
    key = (g.display_name, orientation)
    have = _SERIES_CACHE.get(key, [])
    if len(have) < m:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            tables = generator_tables(g, m, orientation=orientation)
        have = [t.polynomial for t in tables]
        _SERIES_CACHE[key] = have
    return have[m - 1]


def clear_cache():
    _SERIES_CACHE.clear()


def _timed(check_id: str, body: Callable[[], Tuple[str, str, Optional[str]]]) -> CheckReport:
    start = time.perf_counter()
    try:
        status, details, orientation = body()
    except ResourceError as exc:
        status, details, orientation = SKIPPED, str(exc), None
    except QTFCError as exc:
        status, details, orientation = FAIL, f"{type(exc).__name__}: {exc}", None
    return CheckReport(check_id, status, details, time.perf_counter() - start, orientation)


def _group(g) -> GroupSpec:
    return build_group(g) if isinstance(g, str) else g


# -- individual checks ----------------------------------------------------------------------

def check_golden(group: str, m: int) -> CheckReport:
    """Compare the computed series against every tabulated entry for (group, m)."""
    g = _group(group)

    def body():
        poly = computed_series(g, m)
        found = []
        for entry in golden_tables():
            if entry.group != g.display_name or entry.m != m or entry.documentation_only:
                continue
            if entry.source == "tabulated-dimensions":
                ok = poly.value_at_one() == entry.expected
                found.append((ok, f"dim {poly.value_at_one()} vs {entry.expected}"))
            elif entry.source.endswith("-series") or entry.source == "inline-A2":
                expected = entry.expected
                if entry.note == B4_M2_NOTE:
                    expected = golden_series("B", 4, 2)
                found.append((poly == expected, "series equal" if poly == expected else
                              f"series differ: got {poly}, expected {expected}"))
        if not found:
            raise DomainError(f"no golden data for {g.display_name}, m={m}")
        status = PASS if all(ok for ok, _ in found) else FAIL
        return status, "; ".join(text for _, text in found), "standard"

    return _timed(f"golden:{g.display_name}:m={m}", body)


def check_complex_rank2(group: str) -> CheckReport:
    """Rank-2 complex table: exact match, or match after the global q<->t exchange."""
    g = _group(group)

    def body():
        poly = computed_series(g, 1)
        expected = QTPoly.parse(_COMPLEX_RANK2[g.display_name])
        if poly == expected:
            return PASS, f"{poly}", "standard"
        if poly.swap() == expected:
            return PASS_AFTER_SWAP, f"computed {poly}; printed table uses the q<->t exchanged orientation", "swapped"
        return FAIL, f"computed {poly}, printed {expected}", None

    return _timed(f"complex-rank2:{g.display_name}", body)


def check_dimension_conjecture(g, m: int) -> CheckReport:
    g = _group(g)
    if not g.well_generated:
        raise DomainError(f"{g.display_name} is not well-generated; no product formula to compare with")

    def body():
        value = computed_series(g, m).value_at_one()
        target = fuss_catalan(g, m)
        return (PASS if value == target else FAIL), f"{value} vs {target}", None

    return _timed(f"dimension:{g.display_name}:m={m}", body)


def shifted_specializations(poly: QTPoly, g: GroupSpec, m: int) -> Dict[Tuple[str, str], LaurentQPoly]:
    """All four candidates q^{mN}P(q,1/q), q^{mN*}P(q,1/q) and their t-variable mirrors."""
    out = {}
    for mode in ("t=1/q", "q=1/t"):
        for label, shift in (("N", m * g.N), ("N*", m * g.Nstar)):
            out[(mode, label)] = specialize(poly, mode).shift(shift)
    return out


def _same(a: LaurentQPoly, b: LaurentQPoly) -> bool:
    return dict(a.terms) == dict(b.terms)


def check_specialization(g, m: int, orientation: str = "standard") -> CheckReport:
    """Shifted t = 1/q specialization against prod [d_i + mh]_q / [d_i]_q.

    For the standard orientation the expected form is q^{mN} P(q, 1/q);
    for the swapped one it is its mirror t^{mN} P(1/t, t).  All four
    candidates are tried and the ones that hold are reported.
    """
    g = _group(g)

    def body():
        poly = computed_series(g, m, orientation)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            target = fuss_catalan_q(g, m)
        holding = [k for k, v in shifted_specializations(poly, g, m).items() if _same(v, target)]
        expected = ("t=1/q", "N") if orientation == "standard" else ("q=1/t", "N")
        text = ", ".join(f"{mode} shift m{label}" for mode, label in holding) or "none"
        status = PASS if expected in holding else FAIL
        return status, f"forms holding: {text}", orientation

    return _timed(f"specialization:{g.display_name}:m={m}:{orientation}", body)


def root_system_of(g: GroupSpec) -> Optional[str]:
    """Crystallographic type whose Shi arrangement models g, or None."""
    name = g.display_name
    if name == "G2" or (g.k == 6 and g.p == 6 and g.nvars == 2):
        return "G2"
    if g.k == 1:
        return f"A{g.nvars - 1}" if g.nvars >= 2 else None
    if g.nvars == 2 and g.k == g.p and g.k in (3, 4):
        return {3: "A2", 4: "B2"}[g.k]
    if g.k == 2 and g.p == 1:
        return f"B{g.nvars}"
    if g.k == 2 and g.p == 2 and g.nvars >= 3:
        return f"D{g.nvars}"
    return None


def check_t1(g, m: int) -> CheckReport:
    """P(q, 1) against Shi coheights and filtered-chain weights."""
    g = _group(g)
    kind = root_system_of(g)
    if kind is None:
        raise DomainError(f"{g.display_name} has no crystallographic root system here")

    def body():
        series = specialize(computed_series(g, m), "t=1")
        shi = coheight_genfun(shi_arrangement(kind, m))
        chains = coheight_genfun_chains(root_poset(kind), m)
        ok = _same(series, shi) and _same(series, chains)
        return (PASS if ok else FAIL), f"t=1: {series}; shi: {shi}; chains: {chains}", None

    return _timed(f"t1:{g.display_name}:m={m}", body)


def check_inline_a2() -> CheckReport:
    def body():
        g = build_group("A2")
        poly = computed_series(g, 2)
        expected = bracket_form(A2_M2_SERIES)
        t1 = LaurentQPoly.parse(A2_M2_T1)
        shi = coheight_genfun(shi_arrangement("A2", 2))
        chains = coheight_genfun_chains(root_poset("A2"), 2)
        ok = poly == expected and all(_same(x, t1) for x in (specialize(poly, "t=1"), shi, chains))
        return (PASS if ok else FAIL), f"{poly}; t=1 {specialize(poly, 't=1')}", None

    return _timed("inline:A2:m=2", body)


def check_dihedral(k: int, m: int) -> CheckReport:
    def body():
        poly = computed_series(build_group(f"I2({k})"), m)
        expected = dihedral_qt(k, m)
        return (PASS if poly == expected else FAIL), f"{poly}", None

    return _timed(f"dihedral:k={k}:m={m}", body)


def check_dihedral_recurrence(kmax: int = 8, mmax: int = 5) -> CheckReport:
    """Cat^(m) = [mk+1]_{q,t} + qt Cat^(m-1), using the closed form on both sides."""
    def body():
        bad = []
        for k in range(2, kmax + 1):
            for m in range(1, mmax + 1):
                lhs = dihedral_qt(k, m)
                rhs = qt_bracket(m * k + 1) + QTPoly.monomial(1, 1) * dihedral_qt(k, m - 1)
                if lhs != rhs:
                    bad.append((k, m))
        return (FAIL if bad else PASS), f"failures {bad}" if bad else f"k<={kmax}, m<={mmax}", None

    return _timed("dihedral-recurrence", body)


def alfano_reiner(k: int) -> QTPoly:
    total = QTPoly.one() + qt_bracket(k + 1) + QTPoly.monomial(1, 1)
    for i in range(1, k):
        total = total + qt_bracket(i + 1) * QTPoly({(0, 0): 2})
    return total


def check_alfano_reiner(k: int) -> CheckReport:
    def body():
        poly = full_coinvariant_hilbert(build_group(f"I2({k})"))
        expected = alfano_reiner(k)
        return (PASS if poly == expected else FAIL), f"{poly}", None

    return _timed(f"full-coinvariants:I2({k})", body)


def check_cyclic(k: int, m: int) -> CheckReport:
    """Closed form and shifted specialization 1 + q^k + ... + q^{mk}."""
    def body():
        g = build_group(f"Cyclic({k})")
        poly = computed_series(g, m)
        closed = poly == cyclic_qt(k, m)
        spec = specialize(poly, "t=1/q").shift(m * (k - 1))
        target = LaurentQPoly({i * k: 1 for i in range(m + 1)})
        ok = closed and _same(spec, target)
        return (PASS if ok else FAIL), f"{poly}; shifted {spec}", None

    return _timed(f"cyclic:k={k}:m={m}", body)


def g2_recurrence_rhs(m: int, k: int, lookup_fn) -> LaurentQPoly:
    """Right-hand sides of the truncated G2 recurrences (m >= 1)."""
    q = LaurentQPoly.monomial
    if k == 0:
        out = lookup_fn(m - 1, 0).shift(1) + q_integer(5 * m + 1)
        for ell in range(1, -(-(m - 1) // 3) + 1):
            out = out + q(5 * m + 4 - 7 * ell)
        return out
    if k == 1:
        return lookup_fn(m, 0) + q(5 * m + 1)
    out = lookup_fn(m - 1, k - 2).shift(1) + q_integer(5 * m + k + 1)
    for ell in range(1, k // 3 + (k - 1) // 3 + 1):
        out = out + q(5 * m + k - 5 * ell)
    for ell in range(k // 3 + 1, -(-(m - 1) // 3) + 1):
        out = out + q(5 * m + 4 - 7 * ell)
    return out


def check_g2_recurrences(mmax: int = 4) -> CheckReport:
    def body():
        cache: Dict[Tuple[int, int], LaurentQPoly] = {}

        def cat(m, k):
            if (m, k) not in cache:
                cache[(m, k)] = coheight_genfun(g2_truncated(m, k))
            return cache[(m, k)]

        bad = []
        if not _same(cat(0, 0), LaurentQPoly.one()):
            bad.append((0, 0))
        for m in range(1, mmax + 1):
            for k in range(0, m + 1):
                if not _same(cat(m, k), g2_recurrence_rhs(m, k, cat)):
                    bad.append((m, k))
            if not _same(cat(m, m), q_integer(6 * m + 1) + cat(m - 1, m - 1).shift(1)):
                bad.append((m, "diag"))
        return (FAIL if bad else PASS), f"failures {bad}" if bad else f"all (m,k) with m<={mmax}", None

    return _timed("g2-truncated-recurrences", body)


def check_b2_recurrence(mmax: int = 5) -> CheckReport:
    def body():
        prev = coheight_genfun(shi_arrangement("B2", 0))
        bad = []
        for m in range(1, mmax + 1):
            cur = coheight_genfun(shi_arrangement("B2", m))
            if not _same(cur, q_integer(4 * m + 1) + prev.shift(1)):
                bad.append(m)
            prev = cur
        return (FAIL if bad else PASS), f"failures {bad}" if bad else f"m<={mmax}", None

    return _timed("b2-shi-recurrence", body)


def check_shi_counts(kind: str, m: int, all_regions: bool = True) -> CheckReport:
    """Positive regions = Fuss-Catalan, witnesses valid, all regions = (mh+1)^rank."""
    def body():
        g = build_group(kind)
        arr = shi_arrangement(kind, m)
        regions = positive_regions(arr)
        target = fuss_catalan(g, m)
        bad_witness = sum(1 for r in regions if not satisfies(region_constraints(arr, r), r.witness))
        parts = [f"positive {len(regions)} vs {target}"]
        ok = len(regions) == target and bad_witness == 0
        if bad_witness:
            parts.append(f"{bad_witness} invalid witnesses")
        if all_regions:
            total = all_regions_count(arr)
            expected = (m * g.h + 1) ** g.rank
            parts.append(f"all {total} vs {expected}")
            ok = ok and total == expected
        return (PASS if ok else FAIL), "; ".join(parts), None

    return _timed(f"shi:{kind}:m={m}", body)


def check_chains(kind: str, m: int) -> CheckReport:
    """Filtered-chain count and generating function against the Shi model."""
    def body():
        poset = root_poset(kind)
        chains = coheight_genfun_chains(poset, m)
        shi = coheight_genfun(shi_arrangement(kind, m))
        target = fuss_catalan(build_group(kind), m)
        ok = _same(chains, shi) and chains.value_at_one() == target
        return (PASS if ok else FAIL), f"{chains}", None

    return _timed(f"chains:{kind}:m={m}", body)


def check_chain_to_dyck(n: int, m: int) -> CheckReport:
    """chain_to_dyck is a bijection onto m-Dyck paths of length n carrying weight to area."""
    def body():
        poset = root_poset(f"A{n - 1}")
        images = []
        bad = 0
        for chain in filtered_chains(poset, m):
            path = chain_to_dyck(poset, chain)
            images.append(path.seq)
            if path.area != chain.weight or not path.is_valid():
                bad += 1
        paths = {p.seq for p in dyck_paths(n, m)}
        ok = bad == 0 and len(images) == len(set(images)) and set(images) == paths
        return (PASS if ok else FAIL), f"{len(images)} chains, {len(paths)} paths, {bad} bad", None

    return _timed(f"chain-dyck:n={n}:m={m}", body)


def check_closed_forms() -> List[CheckReport]:
    reports = [check_dihedral(k, m) for k in (3, 4, 5, 6) for m in (1, 2, 3)]
    reports += [check_cyclic(k, m) for k in range(2, 7) for m in range(1, 5)]
    reports += [check_alfano_reiner(k) for k in (3, 4, 5)]
    reports.append(check_dihedral_recurrence())
    reports.append(check_g2_recurrences())
    reports += [check_t1("G2", m) for m in (1, 2, 3)]
    return reports


# -- the catalog --------------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogItem:
    check_id: str
    tier: int
    func: str
    args: tuple = ()
    groups: Tuple[str, ...] = field(default=())
    m: Optional[int] = None


def catalog() -> List[CatalogItem]:
    items: List[CatalogItem] = []

    def add(tier, func, *args, groups=(), m=None):
        items.append(CatalogItem(f"{func}{args}", tier, func, args, tuple(groups), m))

    # tabulated dimensions and series
    for n, row in _DIMS_B.items():
        for m in range(1, len(row) + 1):
            tier = 0 if n <= 2 else (1 if (n, m) != (3, 3) else 2)
            tier = 2 if n == 4 else tier
            add(tier, "check_golden", f"B{n}", m, groups=[f"B{n}"], m=m)
    for n, row in _DIMS_D.items():
        for m in range(1, len(row) + 1):
            tier = 0 if n <= 2 else (1 if n == 3 else 2)
            add(tier, "check_golden", f"D{n}", m, groups=[f"D{n}"], m=m)
    add(2, "check_golden", "B3", 3, groups=["B3"], m=3)
    for name in _COMPLEX_RANK2:
        add(0, "check_complex_rank2", name, groups=[name], m=1)
    add(0, "check_inline_a2", groups=["A2"], m=2)

    # specialization identity for every computed well-generated case
    spec_cases = [("A1", m) for m in (1, 2, 3)] + [("A2", m) for m in (1, 2, 3)]
    spec_cases += [(f"B{n}", m) for n in (1, 2) for m in (1, 2, 3, 4)]
    spec_cases += [(f"D2", m) for m in (1, 2, 3, 4)]
    spec_cases += [(name, 1) for name in ("G(3,1,2)", "G(4,1,2)", "G(6,1,2)")]
    for name, m in spec_cases:
        add(0, "check_specialization", name, m, groups=[name], m=m)
    for name, m in [("A3", 1), ("A3", 2), ("B3", 1), ("B3", 2), ("D3", 1), ("D3", 2), ("D3", 3), ("D3", 4)]:
        add(1, "check_specialization", name, m, groups=[name], m=m)
    for name, m in [("B3", 3), ("B4", 1), ("D4", 1)]:
        add(2, "check_specialization", name, m, groups=[name], m=m)
    for name in ("G(3,1,2)", "G(4,1,2)"):
        add(0, "check_specialization", name, 1, "swapped", groups=[name], m=1)

    for name, m in [("B2", m) for m in (1, 2, 3)] + [("A2", m) for m in (1, 2, 3)] + [("A1", 2)]:
        add(0, "check_dimension_conjecture", name, m, groups=[name], m=m)
        add(0, "check_t1", name, m, groups=[name], m=m)
    for name, m in [("A3", 1), ("A3", 2), ("B3", 1), ("B3", 2), ("D3", 1), ("D3", 2)]:
        add(1, "check_t1", name, m, groups=[name], m=m)

    # closed forms
    for k in (3, 4, 5, 6):
        for m in (1, 2, 3):
            add(0, "check_dihedral", k, m, groups=[f"I2({k})"], m=m)
    add(0, "check_dihedral_recurrence", 8, 5)
    for k in (3, 4, 5):
        add(0, "check_alfano_reiner", k, groups=[f"I2({k})"])
    for k in range(2, 7):
        for m in range(1, 5):
            add(0, "check_cyclic", k, m, groups=[f"Cyclic({k})"], m=m)
    for m in (1, 2, 3):
        add(0, "check_t1", "G2", m, groups=["G2"], m=m)

    # arrangements and chains
    for kind in ("A2", "B2", "G2"):
        for m in (1, 2, 3):
            add(0, "check_shi_counts", kind, m, groups=[kind], m=m)
            add(0, "check_chains", kind, m, groups=[kind], m=m)
    for kind in ("A3", "B3"):
        for m in (1, 2):
            add(1, "check_shi_counts", kind, m, groups=[kind], m=m)
        for m in (1, 2, 3):
            add(1, "check_chains", kind, m, groups=[kind], m=m)
    for n in (1, 2, 3, 4):
        for m in (1, 2, 3):
            add(0 if n <= 3 else 1, "check_chain_to_dyck", n, m, m=m)
    add(0, "check_g2_recurrences", 4, groups=["G2"])
    add(0, "check_b2_recurrence", 5, groups=["B2"])
    return items


def _run_item(item: CatalogItem) -> CheckReport:
    return globals()[item.func](*item.args)


def select(tier: int, group: Optional[str] = None, m: Optional[int] = None) -> List[CatalogItem]:
    out = []
    for item in catalog():
        if item.tier > tier:
            continue
        if group is not None and group not in item.groups:
            continue
        if m is not None and item.m != m:
            continue
        out.append(item)
    return out


def run_tier(tier: int, jobs: int = 1, group: Optional[str] = None, m: Optional[int] = None) -> List[CheckReport]:
    """Run every catalog check up to ``tier``; reports come back in catalog order."""
    if tier not in (0, 1, 2):
        raise DomainError(f"tier must be 0, 1 or 2, got {tier}")
    items = select(tier, group, m)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_item, items))
    return [_run_item(item) for item in items]
