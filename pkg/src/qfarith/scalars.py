"""Exact scalars: integers, rationals, Gaussian rationals, and the small
number-theory toolkit (primality, Legendre symbol, integer square root)
used by the rest of the package.

Rationals are :class:`fractions.Fraction`, which already keeps lowest terms
with a positive denominator.  Gaussian rationals are implemented here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "GaussianRational",
    "I",
    "isqrt",
    "is_prime",
    "legendre",
    "factorize",
    "parse_rational",
    "format_rational",
    "parse_gaussian",
    "round_half_toward_zero",
]

# Deterministic Miller-Rabin witness set, exact for n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXACT_BELOW = 3_317_044_064_679_887_385_961_981


def isqrt(n: int) -> int:
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_prime(n: int) -> bool:
    """Primality test, deterministic for every ``n`` below ~3.3e24.

    Larger inputs fall back to trial division: still exact, but only
    practical when such an input has a small factor.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= _MR_EXACT_BELOW:
        return _trial_division_is_prime(n)
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _trial_division_is_prime(n: int) -> bool:
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return n % 2 != 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime ``p``, via Euler's criterion."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"legendre symbol needs an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division. ``n`` must be nonzero."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def round_half_toward_zero(x: Fraction) -> int:
    """Nearest integer to ``x``; exact halves go toward zero."""
    x = Fraction(x)
    if x < 0:
        return -round_half_toward_zero(-x)
    fl = math.floor(x)
    return fl + 1 if x - fl > Fraction(1, 2) else fl


# --- text formats -----------------------------------------------------------

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``."""
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """Element ``re + im*i`` of Q(i), with i^2 = -1."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, _RationalABC)):
            return cls(Fraction(x), Fraction(0))
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact scalars")
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")

    # arithmetic
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Field norm re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (1 / self) ** (-k)
        out, base = GaussianRational(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_rational(self) -> bool:
        return self.im == 0

    def __str__(self):
        if self.im == 0:
            return format_rational(self.re)
        im = format_rational(abs(self.im))
        im_term = "i" if im == "1" else f"{im}*i"
        if self.re == 0:
            return im_term if self.im > 0 else f"-{im_term}"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{im_term}"

    def __repr__(self):
        return f"GaussianRational({self})"


I = GaussianRational(0, 1)

_GAUSS_TERM_RE = re.compile(
    r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*?\s*)?(i)?", re.ASCII
)


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``"p/q+r/s*i"``; either term may be omitted (``"3i"``, ``"-i"``, ``"1/2"``)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty Gaussian rational literal")
    pos = 0
    re_part = Fraction(0)
    im_part = Fraction(0)
    seen = False
    while pos < len(s):
        m = _GAUSS_TERM_RE.match(s, pos)
        if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"not a Gaussian rational literal: {text!r}")
        if "*" in m.group(0) and not m.group(3):
            raise ValueError(f"dangling '*' in {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if seen and not m.group(1):
            raise ValueError(f"missing operator in {text!r}")
        coef = parse_rational(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(3):
            im_part += sign * coef
        else:
            re_part += sign * coef
        seen = True
        pos = m.end()
    return GaussianRational(re_part, im_part)
