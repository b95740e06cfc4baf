"""Binary Laurent polynomials in the delay variable D.

A polynomial is stored as an exponent offset plus an integer bitmask: bit ``i``
of ``bits`` is the coefficient of ``D**(min_exp + i)``. Values are immutable
and always normalized, so structural equality is polynomial equality.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "D",
    "add",
    "mul",
    "time_reverse",
    "positive_part",
    "negative_part",
    "gcd",
    "exact_div",
    "parse_poly",
]


def _clmul(a: int, b: int) -> int:
    """Carry-less product of two bitmasks (multiplication in Z2[D])."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    while b:
        low = b & -b
        out ^= a << (low.bit_length() - 1)
        b ^= low
    return out


def _poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    q = 0
    db = b.bit_length()
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q ^= 1 << s
        a ^= b << s
    return q, a


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_divmod(a, b)[1]
    return a


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """Finitely supported Laurent polynomial over Z2.

    Use :meth:`from_exponents` or :func:`parse_poly` rather than the raw
    constructor; the constructor normalizes its arguments anyway.
    """

    min_exp: int = 0
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("bits must be a non-negative bitmask")
        if self.bits == 0:
            object.__setattr__(self, "min_exp", 0)
            return
        tz = (self.bits & -self.bits).bit_length() - 1
        if tz:
            object.__setattr__(self, "bits", self.bits >> tz)
            object.__setattr__(self, "min_exp", self.min_exp + tz)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> LaurentPoly:
        """Sum of ``D**e`` over ``exps``; repeated exponents cancel in pairs."""
        exps = list(exps)
        if not exps:
            return ZERO
        lo = min(exps)
        bits = 0
        for e in exps:
            bits ^= 1 << (e - lo)
        return cls(lo, bits)

    @classmethod
    def monomial(cls, e: int) -> LaurentPoly:
        return cls(e, 1)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], min_exp: int = 0) -> LaurentPoly:
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(min_exp, bits)

    # -- inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    def is_zero(self) -> bool:
        return self.bits == 0

    def is_monomial(self) -> bool:
        return self.bits == 1

    @property
    def delay(self) -> int:
        if self.bits == 0:
            raise ValueError("the zero polynomial has no delay")
        return self.min_exp

    @property
    def degree(self) -> int:
        if self.bits == 0:
            raise ValueError("the zero polynomial has no degree")
        return self.min_exp + self.bits.bit_length() - 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def coeff(self, e: int) -> int:
        i = e - self.min_exp
        if i < 0:
            return 0
        return (self.bits >> i) & 1

    def exponents(self) -> Iterator[int]:
        b, e = self.bits, self.min_exp
        while b:
            if b & 1:
                yield e
            b >>= 1
            e += 1

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``D**k``."""
        if self.bits == 0:
            return self
        return LaurentPoly(self.min_exp + k, self.bits)

    def split_delay(self) -> tuple[int, LaurentPoly]:
        """Return ``(k, g)`` with ``self == D**k * g`` and ``g(0) == 1``."""
        if self.bits == 0:
            raise ValueError("the zero polynomial has no delay")
        return self.min_exp, LaurentPoly(0, self.bits)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return add(self, other)

    __sub__ = __add__

    def __mul__(self, other: LaurentPoly) -> LaurentPoly:
        return mul(self, other)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __str__(self) -> str:
        if self.bits == 0:
            return "0"
        return "+".join(_term(e) for e in self.exponents())

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


def _term(e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return "D"
    return f"D^{e}"


ZERO = LaurentPoly(0, 0)
ONE = LaurentPoly(0, 1)
D = LaurentPoly(1, 1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.bits == 0:
        return b
    if b.bits == 0:
        return a
    lo = min(a.min_exp, b.min_exp)
    return LaurentPoly(lo, (a.bits << (a.min_exp - lo)) ^ (b.bits << (b.min_exp - lo)))


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if a.bits == 0 or b.bits == 0:
        return ZERO
    return LaurentPoly(a.min_exp + b.min_exp, _clmul(a.bits, b.bits))


def time_reverse(a: LaurentPoly) -> LaurentPoly:
    """Substitute ``D -> D**-1``."""
    if a.bits == 0:
        return a
    width = a.bits.bit_length()
    rev = int(format(a.bits, f"0{width}b")[::-1], 2)
    return LaurentPoly(-a.degree, rev)


def positive_part(a: LaurentPoly) -> LaurentPoly:
    """Terms with strictly positive exponent."""
    if a.bits == 0 or a.degree < 1:
        return ZERO
    if a.min_exp >= 1:
        return a
    return LaurentPoly(1, a.bits >> (1 - a.min_exp))


def negative_part(a: LaurentPoly) -> LaurentPoly:
    """Terms with strictly negative exponent."""
    if a.bits == 0 or a.min_exp >= 0:
        return ZERO
    keep = -a.min_exp
    return LaurentPoly(a.min_exp, a.bits & ((1 << keep) - 1))


def gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Greatest common divisor ``D**k * g`` with ``g(0) == 1``.

    ``k`` is the smaller of the two delays (the common power of D); ``g`` is
    the ordinary Z2[D] gcd of the delay-free parts. A zero argument is
    ignored, so ``gcd(0, b)`` is ``b`` itself.
    """
    if a.bits == 0 and b.bits == 0:
        raise ValueError("gcd of two zero polynomials is undefined")
    if a.bits == 0:
        return b
    if b.bits == 0:
        return a
    k = min(a.min_exp, b.min_exp)
    return LaurentPoly(k, _poly_gcd(a.bits, b.bits))


def gcd_all(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out = ZERO
    for p in polys:
        if p.bits:
            out = p if out.bits == 0 else gcd(out, p)
    if out.bits == 0:
        raise ValueError("gcd of an all-zero collection is undefined")
    return out


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``a / b``; raises ``ValueError`` unless ``b`` divides ``a``."""
    if b.bits == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.bits == 0:
        return ZERO
    q, r = _poly_divmod(a.bits, b.bits)
    if r:
        raise ValueError(f"{b} does not divide {a}")
    return LaurentPoly(a.min_exp - b.min_exp, q)


_TERM = re.compile(r"^(?:(?P<one>1)|D(?:\^(?P<exp>-?\d+))?)$")


def parse_poly(text: str) -> LaurentPoly:
    """Parse ``1+D^3``, ``D^-1+D`` and the like; ``0`` is the zero polynomial.

    Terms may appear in any order, but a repeated exponent is rejected.
    """
    s = "".join(text.split())
    if s in ("", "0"):
        if s == "":
            raise ValueError("empty polynomial")
        return ZERO
    seen: set[int] = set()
    for term in s.split("+"):
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"bad polynomial term {term!r} in {text!r}")
        e = 0 if m.group("one") else int(m.group("exp") or 1)
        if e in seen:
            raise ValueError(f"duplicate exponent {e} in {text!r}")
        seen.add(e)
    return LaurentPoly.from_exponents(seen)
