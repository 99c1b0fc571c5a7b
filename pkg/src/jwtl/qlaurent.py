"""
Exact arithmetic in Z[q, q^-1] and its fraction field.

A Laurent polynomial is stored densely as a valuation together with a
coefficient tuple starting at that valuation; the zero polynomial is the
empty tuple with valuation 0. All arithmetic is over arbitrary-precision
integers, so every operation in this module is exact.

Rational functions (QRat) are kept in a canonical form: numerator and
denominator share no polynomial factor over the rationals and no integer
content, the denominator is an ordinary polynomial with nonzero constant
term (powers of q, being units, live in the numerator), and the denominator
has a positive leading coefficient. Equal values therefore have identical
representations, which makes QRat hashable and usable as an exact
coefficient type.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class ZeroDenominator(ZeroDivisionError):
    """Raised when a rational function would be constructed with denominator 0."""


class PoleAtOne(ArithmeticError):
    """Raised by eval_at_one on a rational function with a genuine pole at q=1."""


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True, order=True)
class LaurentPoly:
    """
    An integer Laurent polynomial in q.

    >>> LaurentPoly.zero()
    LaurentPoly('0')
    >>> qint(3)
    LaurentPoly('q^2 + 1 + q^-2')
    >>> qint(2) * qint(2)
    LaurentPoly('q^2 + 2 + q^-2')
    """

    val: int
    coeffs: tuple[int, ...]

    def __init__(self, val: int, coeffs: Sequence[int]):
        lo, hi = 0, len(coeffs)
        while lo < hi and coeffs[lo] == 0:
            lo += 1
            val += 1
        while lo < hi and coeffs[hi - 1] == 0:
            hi -= 1
        if lo == hi:
            self.val = 0
            self.coeffs = ()
        else:
            self.val = val
            self.coeffs = tuple(coeffs[lo:hi])

    @staticmethod
    def zero() -> LaurentPoly:
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> LaurentPoly:
        return LaurentPoly(0, (1,))

    @staticmethod
    def monomial(exp: int, coeff: int = 1) -> LaurentPoly:
        return LaurentPoly(exp, (coeff,))

    @staticmethod
    def from_dict(d: Mapping[int, int]) -> LaurentPoly:
        if not d:
            return LaurentPoly.zero()
        lo = min(d)
        coeffs = [0] * (max(d) - lo + 1)
        for e, c in d.items():
            coeffs[e - lo] = c
        return LaurentPoly(lo, coeffs)

    def to_dict(self) -> dict[int, int]:
        return {self.val + i: c for i, c in enumerate(self.coeffs) if c != 0}

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.val == 0 and self.coeffs == (1,)

    def degree(self) -> int:
        return self.val + len(self.coeffs) - 1

    def leading_coeff(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.val, other.val)
        hi = max(self.degree(), other.degree())
        coeffs = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[self.val + i - lo] += c
        for i, c in enumerate(other.coeffs):
            coeffs[other.val + i - lo] += c
        return LaurentPoly(lo, coeffs)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.val, tuple(-c for c in self.coeffs))

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        coeffs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    coeffs[i + j] += c * d
        return LaurentPoly(self.val + other.val, coeffs)

    def scale(self, k: int) -> LaurentPoly:
        return LaurentPoly(self.val, tuple(k * c for c in self.coeffs))

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            raise ValueError("negative powers of a Laurent polynomial are not defined here")
        acc, base = LaurentPoly.one(), self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by q^k."""
        return LaurentPoly(self.val + k, self.coeffs)

    def exact_div(self, other: LaurentPoly) -> LaurentPoly | None:
        """Return self/other if the division is exact over Z, else None."""
        if other.is_zero():
            raise ZeroDenominator("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        if len(self.coeffs) < len(other.coeffs):
            return None
        rem = list(self.coeffs)
        div = other.coeffs
        qlen = len(rem) - len(div) + 1
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = rem[k + len(div) - 1]
            if c % div[-1] != 0:
                return None
            quot[k] = c // div[-1]
            if quot[k]:
                for j, d in enumerate(div):
                    rem[k + j] -= quot[k] * d
        if any(rem):
            return None
        return LaurentPoly(self.val - other.val, quot)

    def eval_one(self) -> int:
        return sum(self.coeffs)

    def substitute_inverse(self) -> LaurentPoly:
        """The bar involution q -> q^-1."""
        return LaurentPoly(-self.degree(), tuple(reversed(self.coeffs)))

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.fmt()}')"

    def fmt(self, latex: bool = False) -> str:
        if not self.coeffs:
            return "0"
        power = "q^{{{}}}" if latex else "q^{}"
        parts: list[str] = []
        for e, c in sorted(self.to_dict().items(), reverse=True):
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            mono = "" if e == 0 else "q" if e == 1 else power.format(e)
            coeff = str(abs(c)) if (e == 0 or abs(c) != 1) else ""
            parts.append(sign + coeff + mono)
        return "".join(parts)


def qint(n: int) -> LaurentPoly:
    """
    The q-integer [n] = (q^n - q^-n)/(q - q^-1) as a Laurent polynomial.

    >>> qint(0)
    LaurentPoly('0')
    >>> qint(2)
    LaurentPoly('q + q^-1')
    >>> qint(-3) == -qint(3)
    True
    """
    if n < 0:
        return -qint(-n)
    if n == 0:
        return LaurentPoly.zero()
    return LaurentPoly(1 - n, tuple(1 if i % 2 == 0 else 0 for i in range(2 * n - 1)))


def _primitive(coeffs: list[int]) -> list[int]:
    g = math.gcd(*coeffs)
    return [c // g for c in coeffs]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of dense integer polynomials (low-to-high, trimmed)."""
    rem = list(a)
    lb = b[-1]
    while len(rem) >= len(b) and any(rem):
        k = len(rem) - len(b)
        lead = rem[-1]
        rem = [c * lb for c in rem]
        for j, d in enumerate(b):
            rem[k + j] -= lead * d
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Q of two dense integer polynomials, positive leading coefficient."""
    a = _primitive([c for c in a])
    b = _primitive([c for c in b])
    while b:
        if len(a) < len(b):
            a, b = b, a
            continue
        r = _pseudo_rem(a, b)
        a, b = b, (_primitive(r) if r else [])
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def laurent_gcd(x: LaurentPoly, y: LaurentPoly) -> LaurentPoly:
    """Primitive polynomial gcd, ignoring powers of q and integer content."""
    if x.is_zero():
        return LaurentPoly(0, [c for c in y.coeffs])
    if y.is_zero():
        return LaurentPoly(0, [c for c in x.coeffs])
    return LaurentPoly(0, _poly_gcd(list(x.coeffs), list(y.coeffs)))


@dataclasses.dataclass(frozen=True, eq=True)
class QRat:
    """
    A rational function in q in canonical reduced form.

    >>> QRat.of(qint(4)) / QRat.of(qint(2))
    QRat('q^2 + q^-2')
    >>> QRat.ratio(qint(3), qint(6)) == QRat.ratio(qint(3) * qint(2), qint(6) * qint(2))
    True
    """

    num: LaurentPoly
    den: LaurentPoly

    @staticmethod
    def normalize(num: LaurentPoly, den: LaurentPoly) -> QRat:
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if num.is_zero():
            return QRat(LaurentPoly.zero(), LaurentPoly.one())
        shift = min(num.val, den.val)
        num, den = num.shift(-shift), den.shift(-shift)
        g = laurent_gcd(num, den)
        if not g.is_one():
            # The primitive gcd divides both primitive parts over Z, so split off
            # the integer contents first and divide exactly.
            cn, cd = num.content(), den.content()
            num_p = num.exact_div(LaurentPoly(0, (cn,)))
            den_p = den.exact_div(LaurentPoly(0, (cd,)))
            assert num_p is not None and den_p is not None
            num_q = num_p.exact_div(g)
            den_q = den_p.exact_div(g)
            assert num_q is not None and den_q is not None
            num = num_q.scale(cn)
            den = den_q.scale(cd)
        c = math.gcd(num.content(), den.content())
        if c > 1:
            num = LaurentPoly(num.val, tuple(x // c for x in num.coeffs))
            den = LaurentPoly(den.val, tuple(x // c for x in den.coeffs))
        if den.leading_coeff() < 0:
            num, den = -num, -den
        # Powers of q are units: push them all into the numerator so the
        # denominator is an ordinary polynomial with nonzero constant term.
        if den.val:
            num, den = num.shift(-den.val), den.shift(-den.val)
        return QRat(num, den)

    @staticmethod
    def ratio(num: LaurentPoly, den: LaurentPoly) -> QRat:
        return QRat.normalize(num, den)

    @staticmethod
    def of(p: LaurentPoly) -> QRat:
        return QRat.normalize(p, LaurentPoly.one())

    @staticmethod
    def integer(n: int) -> QRat:
        return QRat.of(LaurentPoly(0, (n,)))

    @staticmethod
    def zero() -> QRat:
        return QRat(LaurentPoly.zero(), LaurentPoly.one())

    @staticmethod
    def one() -> QRat:
        return QRat(LaurentPoly.one(), LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num == self.den

    def __add__(self, other: QRat) -> QRat:
        return QRat.normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: QRat) -> QRat:
        return QRat.normalize(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> QRat:
        return QRat.normalize(-self.num, self.den)

    def __mul__(self, other: QRat) -> QRat:
        return QRat.normalize(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: QRat) -> QRat:
        if other.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return QRat.normalize(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> QRat:
        if n < 0:
            return QRat.one() / self ** (-n)
        acc = QRat.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def bar(self) -> QRat:
        """The involution q -> q^-1."""
        return QRat.normalize(self.num.substitute_inverse(), self.den.substitute_inverse())

    def eval_at_one(self) -> Fraction:
        """Exact value at q=1; raises PoleAtOne if the denominator vanishes to lower order."""
        num, den = self.num, self.den
        one = LaurentPoly(0, (-1, 1))  # q - 1, up to the common shift
        while den.eval_one() == 0:
            if num.eval_one() != 0:
                raise PoleAtOne(f"pole at q=1 in {self!r}")
            num_d, den_d = num.exact_div(one), den.exact_div(one)
            if num_d is None or den_d is None:  # pragma: no cover - q-1 divides iff value is 0
                raise ArithmeticError("division by q-1 failed")
            num, den = num_d, den_d
        return Fraction(num.eval_one(), den.eval_one())

    def __repr__(self) -> str:
        if self.den.is_one():
            return f"QRat('{self.num.fmt()}')"
        return f"QRat('({self.num.fmt()}) / ({self.den.fmt()})')"


def qint_rat(n: int) -> QRat:
    return QRat.of(qint(n))


def qprod(ns: Iterable[int]) -> LaurentPoly:
    """Product of q-integers [n1][n2]..."""
    acc = LaurentPoly.one()
    for n in ns:
        acc = acc * qint(n)
    return acc


def qfrac(num_ns: Iterable[int], den_ns: Iterable[int]) -> QRat:
    """The rational function [a1][a2].../([b1][b2]...)."""
    return QRat.ratio(qprod(num_ns), qprod(den_ns))


def arith(op: str, a: QRat, b: QRat) -> QRat:
    """Dispatch for the four field operations; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
