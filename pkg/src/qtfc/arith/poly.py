"""Sparse polynomials: bigraded polynomials in x, y and integer q,t-polynomials."""

from __future__ import annotations

import re
from collections import defaultdict
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Optional, Tuple

from ..errors import DomainError
from .cyclotomic import Cyclotomic, as_cyclotomic

Bidegree = Tuple[int, int]


class Monomial(NamedTuple):
    """x^xexp * y^yexp."""

    xexp: Tuple[int, ...]
    yexp: Tuple[int, ...]

    @property
    def bidegree(self) -> Bidegree:
        return (sum(self.xexp), sum(self.yexp))

    @property
    def degree(self) -> int:
        return sum(self.xexp) + sum(self.yexp)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(
            tuple(a + b for a, b in zip(self.xexp, other.xexp)),
            tuple(a + b for a, b in zip(self.yexp, other.yexp)),
        )

    def format(self) -> str:
        parts = []
        for name, exps in (("x", self.xexp), ("y", self.yexp)):
            for i, e in enumerate(exps, start=1):
                if e == 1:
                    parts.append(f"{name}{i}")
                elif e > 1:
                    parts.append(f"{name}{i}^{e}")
        return "*".join(parts)


def _mono_key(mono: Monomial):
    # graded, then lex with x-block before y-block
    return (mono.degree, tuple(-e for e in mono.xexp + mono.yexp))


def monomials_of_bidegree(nvars: int, a: int, b: int) -> list:
    """All monomials of bidegree (a, b) in graded-lex order."""
    xs = list(compositions(a, nvars))
    ys = list(compositions(b, nvars))
    return [Monomial(x, y) for x in xs for y in ys]


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` pieces, lex-descending."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _format_coeff_term(c, mono_text: str, first: bool) -> str:
    """Render one signed term of a sum."""
    if isinstance(c, Cyclotomic) and not c.is_rational():
        body = str(c) + ("*" + mono_text if mono_text else "")
        return body if first else "+ " + body
    value = c.to_fraction() if isinstance(c, Cyclotomic) else c
    neg = value < 0
    mag = -value if neg else value
    if mono_text:
        body = mono_text if mag == 1 else f"{mag}*{mono_text}"
    else:
        body = str(mag)
    if first:
        return ("-" if neg else "") + body
    return ("- " if neg else "+ ") + body


class MultiPoly:
    """Immutable sparse polynomial in x_1..x_n, y_1..y_n over a cyclotomic field."""

    __slots__ = ("nvars", "terms", "_by_bidegree")

    def __init__(self, nvars: int, terms: Optional[Mapping[Monomial, object]] = None):
        self.nvars = nvars
        clean = {}
        index = defaultdict(list)
        for mono, c in (terms or {}).items():
            if not isinstance(mono, Monomial):
                mono = Monomial(tuple(mono[0]), tuple(mono[1]))
            if len(mono.xexp) != nvars or len(mono.yexp) != nvars:
                raise DomainError(f"monomial {mono} does not have {nvars} variables per block")
            c = as_cyclotomic(c)
            if c:
                clean[mono] = c
                index[mono.bidegree].append(mono)
        self.terms: Dict[Monomial, Cyclotomic] = clean
        self._by_bidegree = {bd: tuple(ms) for bd, ms in index.items()}

    # constructors
    @classmethod
    def zero(cls, nvars: int) -> "MultiPoly":
        return cls(nvars)

    @classmethod
    def one(cls, nvars: int) -> "MultiPoly":
        return cls(nvars, {Monomial((0,) * nvars, (0,) * nvars): 1})

    @classmethod
    def x(cls, nvars: int, i: int) -> "MultiPoly":
        """The variable x_i (1-based)."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {Monomial(tuple(e), (0,) * nvars): 1})

    @classmethod
    def y(cls, nvars: int, i: int) -> "MultiPoly":
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {Monomial((0,) * nvars, tuple(e)): 1})

    @classmethod
    def monomial(cls, mono: Monomial, coeff=1) -> "MultiPoly":
        return cls(len(mono.xexp), {mono: coeff})

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def bidegrees(self) -> list:
        return sorted(self._by_bidegree)

    def component(self, a: int, b: int) -> "MultiPoly":
        """The bihomogeneous component of bidegree (a, b)."""
        return MultiPoly(self.nvars, {m: self.terms[m] for m in self._by_bidegree.get((a, b), ())})

    def is_bihomogeneous(self) -> bool:
        return len(self._by_bidegree) <= 1

    @property
    def bidegree(self) -> Optional[Bidegree]:
        if len(self._by_bidegree) != 1:
            return None
        return next(iter(self._by_bidegree))

    def conductor(self) -> int:
        k = 1
        for c in self.terms.values():
            k = k * c.k // gcd(k, c.k)
        return k

    def coefficient(self, mono: Monomial) -> Cyclotomic:
        return self.terms.get(mono, Cyclotomic.rational(0))

    # arithmetic
    def _check(self, other: "MultiPoly"):
        if self.nvars != other.nvars:
            raise DomainError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.one(self.nvars).scale(other)
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return MultiPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            return self + (-other)
        return self + (-as_cyclotomic(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MultiPoly":
        c = as_cyclotomic(c)
        return MultiPoly(self.nvars, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        result = MultiPoly.one(self.nvars)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            pieces.append(_format_coeff_term(c, m.format(), i == 0))
        return " ".join(pieces)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {self})"


def multiply(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Exact product; coefficients are coerced to the lcm conductor."""
    a._check(b)
    out: Dict[Monomial, Cyclotomic] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = ma * mb
            v = ca * cb
            out[m] = out[m] + v if m in out else v
    return MultiPoly(a.nvars, out)


# -- integer polynomials in q, t ---------------------------------------------

def _split_terms(text: str):
    text = text.replace(" ", "")
    if not text:
        raise DomainError("empty polynomial text")
    out = []
    sign = 1
    buf = ""
    for ch in text:
        if ch in "+-" and buf and buf[-1] != "^":
            out.append((sign, buf))
            sign = 1 if ch == "+" else -1
            buf = ""
        elif ch in "+-" and not buf:
            sign = sign * (1 if ch == "+" else -1)
        else:
            buf += ch
    out.append((sign, buf))
    return out


def _parse_term(body: str) -> Tuple[int, Dict[str, int]]:
    coeff = 1
    exps = {"q": 0, "t": 0}
    for factor in body.split("*"):
        if not factor:
            raise DomainError(f"malformed term {body!r}")
        if factor.isdigit():
            coeff *= int(factor)
            continue
        m = re.fullmatch(r"([qt])(?:\^(-?\d+))?", factor)
        if not m:
            raise DomainError(f"malformed factor {factor!r}")
        exps[m.group(1)] += int(m.group(2)) if m.group(2) else 1
    return coeff, exps


class QTPoly:
    """Immutable polynomial in q and t with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[int, int], int]] = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise DomainError(f"negative exponent in QTPoly term q^{i} t^{j}")
            if c:
                clean[(int(i), int(j))] = int(c)
        self.terms: Dict[Tuple[int, int], int] = clean

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "QTPoly":
        return cls({(i, j): c})

    @classmethod
    def one(cls) -> "QTPoly":
        return cls({(0, 0): 1})

    @classmethod
    def parse(cls, text: str) -> "QTPoly":
        """Parse the shared text format, e.g. ``1 + 2*q + 3*q^2*t``."""
        acc: Dict[Tuple[int, int], int] = defaultdict(int)
        text = text.strip()
        if text == "0":
            return cls()
        for sign, body in _split_terms(text):
            coeff, exps = _parse_term(body)
            acc[(exps["q"], exps["t"])] += sign * coeff
        return cls(acc)

    def __add__(self, other):
        if not isinstance(other, QTPoly):
            other = QTPoly({(0, 0): other})
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return QTPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, QTPoly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QTPoly):
            return QTPoly({k: c * other for k, c in self.terms.items()})
        out: Dict[Tuple[int, int], int] = defaultdict(int)
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                out[(i1 + i2, j1 + j2)] += c1 * c2
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = QTPoly.one()
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, QTPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, q=1, t=1):
        return sum(c * q ** i * t ** j for (i, j), c in self.terms.items())

    def value_at_one(self) -> int:
        return sum(self.terms.values())

    def swap(self) -> "QTPoly":
        """Exchange q and t."""
        return QTPoly({(j, i): c for (i, j), c in self.terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap()

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def max_degrees(self) -> Tuple[int, int]:
        if not self.terms:
            return (0, 0)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for n, ((i, j), c) in enumerate(self.sorted_terms()):
            factors = []
            if i:
                factors.append("q" if i == 1 else f"q^{i}")
            if j:
                factors.append("t" if j == 1 else f"t^{j}")
            pieces.append(_format_coeff_term(Fraction(c), "*".join(factors), n == 0))
        return " ".join(pieces)

    def __repr__(self):
        return f"QTPoly({self})"


class LaurentQPoly:
    """Immutable Laurent polynomial in one variable with integer coefficients."""

    __slots__ = ("terms", "var")

    def __init__(self, terms: Optional[Mapping[int, int]] = None, var: str = "q"):
        self.terms: Dict[int, int] = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self.var = var

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], var: str = "q") -> "LaurentQPoly":
        return cls({e: c for e, c in enumerate(coeffs)}, var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "q") -> "LaurentQPoly":
        return cls({e: c}, var)

    @classmethod
    def one(cls, var: str = "q") -> "LaurentQPoly":
        return cls({0: 1}, var)

    @classmethod
    def parse(cls, text: str, var: str = "q") -> "LaurentQPoly":
        text = text.strip()
        if text == "0":
            return cls(var=var)
        acc: Dict[int, int] = defaultdict(int)
        for sign, body in _split_terms(text):
            coeff, exps = _parse_term(body.replace(var, "q") if var != "q" else body)
            if exps["t"]:
                raise DomainError(f"unexpected second variable in {text!r}")
            acc[exps["q"]] += sign * coeff
        return cls(acc, var)

    def _wrap(self, other) -> "LaurentQPoly":
        if isinstance(other, LaurentQPoly):
            return other
        return LaurentQPoly({0: other}, self.var)

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentQPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentQPoly):
            return LaurentQPoly({e: c * other for e, c in self.terms.items()}, self.var)
        out: Dict[int, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] += c1 * c2
        return LaurentQPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = LaurentQPoly.one(self.var)
        for _ in range(e):
            result = result * self
        return result

    def shift(self, k: int) -> "LaurentQPoly":
        """Multiply by var^k."""
        return LaurentQPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, LaurentQPoly):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, q):
        return sum(c * Fraction(q) ** e for e, c in self.terms.items())

    def value_at_one(self) -> int:
        return sum(self.terms.values())

    def min_degree(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_degree(self) -> int:
        return max(self.terms) if self.terms else 0

    def is_polynomial(self) -> bool:
        return self.min_degree() >= 0

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def coeffs(self) -> list:
        """Dense coefficient list from degree 0 (requires a polynomial)."""
        if not self.is_polynomial():
            raise DomainError("negative exponents present")
        if not self.terms:
            return []
        return [self.terms.get(e, 0) for e in range(self.max_degree() + 1)]

    def divmod(self, other: "LaurentQPoly"):
        """Polynomial long division over the integers (divisor must be monic up to sign)."""
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        lo = min(self.min_degree(), 0)
        num = {e - lo: c for e, c in self.terms.items()}
        dlo = other.min_degree()
        den = {e - dlo: c for e, c in other.terms.items()}
        dd = max(den)
        lead = den[dd]
        quot: Dict[int, int] = {}
        num = dict(num)
        while num and max(num) >= dd:
            top = max(num)
            c = num[top]
            if c % lead:
                break
            qc = c // lead
            shift = top - dd
            quot[shift] = qc
            for e, v in den.items():
                num[e + shift] = num.get(e + shift, 0) - qc * v
                if num[e + shift] == 0:
                    del num[e + shift]
        q = LaurentQPoly(quot, self.var).shift(lo - dlo)
        r = LaurentQPoly(num, self.var).shift(lo)
        return q, r

    def exact_div(self, other: "LaurentQPoly") -> "LaurentQPoly":
        q, r = self.divmod(other)
        if r.terms:
            raise DomainError(f"{self} is not divisible by {other}")
        return q

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for n, e in enumerate(sorted(self.terms)):
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            pieces.append(_format_coeff_term(Fraction(self.terms[e]), mono, n == 0))
        return " ".join(pieces)

    def __repr__(self):
        return f"LaurentQPoly({self})"


def qt_bracket(n: int) -> QTPoly:
    """[n]_{q,t} = q^{n-1} + q^{n-2} t + ... + t^{n-1}."""
    if n < 1:
        raise DomainError(f"[n]_(q,t) needs n >= 1, got {n}")
    return QTPoly({(n - 1 - i, i): 1 for i in range(n)})


def q_integer(n: int, var: str = "q") -> LaurentQPoly:
    """[n]_q = 1 + q + ... + q^{n-1}."""
    if n < 0:
        raise DomainError(f"[n]_q needs n >= 0, got {n}")
    return LaurentQPoly({i: 1 for i in range(n)}, var)


def q_factorial(n: int) -> LaurentQPoly:
    out = LaurentQPoly.one()
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


def q_binomial(n: int, k: int) -> LaurentQPoly:
    if k < 0 or k > n:
        return LaurentQPoly()
    return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k))


_MODES = {
    "t=1": "t=1", "t:=1": "t=1",
    "q=1": "q=1", "q:=1": "q=1",
    "t=1/q": "t=1/q", "t:=q^-1": "t=1/q", "t:=1/q": "t=1/q", "t=q^-1": "t=1/q",
    "q=1/t": "q=1/t", "q:=t^-1": "q=1/t", "q:=1/t": "q=1/t", "q=t^-1": "q=1/t",
}


def specialize(p: QTPoly, mode: str) -> LaurentQPoly:
    """Substitute into a q,t-polynomial.

    ``mode`` is one of ``t=1``, ``q=1``, ``t=1/q`` or ``q=1/t`` (the
    ``:=`` and ``^-1`` spellings are accepted too).  The result is in q
    except for ``q=1`` and ``q=1/t``, which give a polynomial in t.
    """
    key = _MODES.get(mode.replace(" ", ""))
    if key is None:
        raise DomainError(f"unknown specialization {mode!r}")
    out: Dict[int, int] = defaultdict(int)
    for (i, j), c in p.terms.items():
        if key == "t=1":
            out[i] += c
        elif key == "q=1":
            out[j] += c
        elif key == "t=1/q":
            out[i - j] += c
        else:
            out[j - i] += c
    return LaurentQPoly(out, "t" if key in ("q=1", "q=1/t") else "q")
