"""Elements of the cyclotomic fields Q(zeta_k) in canonical power-basis form."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational as _RationalABC
from typing import Sequence, Tuple, Union

from ..errors import DomainError

Scalar = Union[int, Fraction, "Cyclotomic"]


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod_monic(num, den):
    """Divide ``num`` by a monic ``den`` (coefficient lists, low degree first)."""
    num = list(num)
    dd = len(den) - 1
    if len(num) <= dd:
        return [], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    return quot, num[:dd]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_k, constant term first.

    Phi_k is obtained from x^k - 1 by exact division by Phi_d for every
    proper divisor d of k.
    """
    if k < 1:
        raise DomainError(f"cyclotomic polynomial needs k >= 1, got {k}")
    num = [-1] + [0] * (k - 1) + [1]
    for d in range(1, k):
        if k % d == 0:
            num, rem = _divmod_monic(num, cyclotomic_polynomial(d))
            assert not any(rem)
    return tuple(_trim(num))


def euler_phi(k: int) -> int:
    return len(cyclotomic_polynomial(k)) - 1


def format_upoly(coeffs: Sequence[int], var: str = "x") -> str:
    """Render a univariate integer polynomial, low degree first."""
    parts = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@lru_cache(maxsize=None)
def _power_table(k: int) -> Tuple[Tuple[Fraction, ...], ...]:
    """Reductions of x^e modulo Phi_k for 0 <= e < k."""
    phi = cyclotomic_polynomial(k)
    n = len(phi) - 1
    rows = []
    for e in range(k):
        mono = [0] * e + [1]
        _, rem = _divmod_monic(mono, phi)
        rem = list(rem) + [0] * (n - len(rem))
        rows.append(tuple(Fraction(c) for c in rem[:n]))
    return tuple(rows)


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a rational scalar: {x!r}")


class Cyclotomic:
    """An element of Q(zeta_k) stored as a polynomial in zeta reduced mod Phi_k.

    Two elements of the same conductor are equal iff their coefficient
    vectors agree.  Mixed-conductor arithmetic coerces both sides to the
    lcm conductor first.  Hashes agree with equality for rational values
    and for values sharing a conductor.
    """

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: Sequence = ()):
        if k < 1:
            raise DomainError(f"conductor must be positive, got {k}")
        n = euler_phi(k)
        cs = [_to_fraction(c) for c in coeffs]
        if len(cs) > n:
            # reduce an unreduced polynomial in zeta
            acc = [Fraction(0)] * n
            table = _power_table(k)
            for e, c in enumerate(cs):
                if c:
                    row = table[e % k]
                    for i in range(n):
                        if row[i]:
                            acc[i] += c * row[i]
            cs = acc
        else:
            cs = cs + [Fraction(0)] * (n - len(cs))
        self.k = k
        self.coeffs = tuple(cs)

    # constructors
    @classmethod
    def zeta(cls, k: int, power: int = 1) -> "Cyclotomic":
        """zeta_k raised to ``power`` (any integer)."""
        return cls(k, _power_table(k)[power % k])

    @classmethod
    def rational(cls, value, k: int = 1) -> "Cyclotomic":
        return cls(k, [_to_fraction(value)])

    # structure
    def embed(self, L: int) -> "Cyclotomic":
        """View this element inside Q(zeta_L); requires k | L."""
        if L == self.k:
            return self
        if L % self.k:
            raise DomainError(f"cannot embed conductor {self.k} into {L}")
        step = L // self.k
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for e, c in enumerate(self.coeffs):
            poly[e * step] = c
        return Cyclotomic(L, poly)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise DomainError(f"{self} is not rational")
        return self.coeffs[0]

    def _pair(self, other):
        if isinstance(other, Cyclotomic):
            if other.k == self.k:
                return self, other
            L = self.k * other.k // gcd(self.k, other.k)
            return self.embed(L), other.embed(L)
        return self, Cyclotomic.rational(other, self.k)

    # arithmetic
    def __add__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.k, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.k, [-x for x in self.coeffs])

    def __sub__(self, other):
        try:
            a, b = self._pair(other)
        except TypeError:
            return NotImplemented
        return Cyclotomic(a.k, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Cyclotomic):
            try:
                c = _to_fraction(other)
            except TypeError:
                return NotImplemented
            return Cyclotomic(self.k, [x * c for x in self.coeffs])
        a, b = self._pair(other)
        if a.is_rational():
            return b * a.coeffs[0]
        if b.is_rational():
            return a * b.coeffs[0]
        n = len(a.coeffs)
        prod = [Fraction(0)] * (2 * n - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return Cyclotomic(a.k, prod)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return Cyclotomic(self.k, [1 / self.coeffs[0]])
        # extended Euclid: find u with u*a = 1 mod Phi_k
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.k)]
        r0, r1 = phi, _trim(self.coeffs)
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            lead = r1[-1]
            q = [Fraction(0)] * (len(r0) - len(r1) + 1)
            r = list(r0)
            for i in range(len(r) - 1, len(r1) - 2, -1):
                c = r[i] / lead
                if c:
                    q[i - len(r1) + 1] = c
                    for j in range(len(r1)):
                        r[i - len(r1) + 1 + j] -= c * r1[j]
            r = _trim(r)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
        c = r1[0]
        return Cyclotomic(self.k, [x / c for x in s1])

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            a, b = self._pair(other)
            return a * b.inverse()
        c = _to_fraction(other)
        if c == 0:
            raise ZeroDivisionError("division by zero")
        return Cyclotomic(self.k, [x / c for x in self.coeffs])

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other, self.k) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = Cyclotomic.rational(1, self.k)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^{-1}."""
        acc = Cyclotomic(self.k)
        for e, c in enumerate(self.coeffs):
            if c:
                acc = acc + Cyclotomic.zeta(self.k, -e) * c
        return acc

    # comparisons
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            a, b = self._pair(other)
            return a.coeffs == b.coeffs
        try:
            c = _to_fraction(other)
        except TypeError:
            return NotImplemented
        return self.is_rational() and self.coeffs[0] == c

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.k, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self.k}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return f"({out})"


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([Fraction(x) - y for x, y in zip(a, b)])


def as_cyclotomic(value: Scalar, k: int = 1) -> Cyclotomic:
    """Coerce an int, Fraction or Cyclotomic into a Cyclotomic of conductor divisible by k."""
    if isinstance(value, Cyclotomic):
        if value.k % k == 0:
            return value
        L = value.k * k // gcd(value.k, k)
        return value.embed(L)
    return Cyclotomic.rational(value, k)
