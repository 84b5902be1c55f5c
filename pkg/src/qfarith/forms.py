"""Diagonal quaternary forms a x1^2 + b x2^2 + c x3^2 + d x4^2.

Representations are searched exhaustively in a fixed order (x4 outermost,
x1 innermost, all coordinates from 0 upward), so results are reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import isqrt

__all__ = [
    "FormTuple",
    "NORM_FORM_PAIRS",
    "NORM_FORMS",
    "CLASSICAL_FORMS",
    "represent",
    "verify_universal",
    "UniversalCheck",
    "represent_rational",
    "Variant",
    "compose",
    "form_value",
]


@dataclass(frozen=True)
class FormTuple:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for v in self:
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"form coefficients must be positive integers, got {tuple(self)}")

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    @classmethod
    def parse(cls, text: str) -> "FormTuple":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"a form needs 4 comma-separated coefficients, got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self):
        return ",".join(str(v) for v in self)


# (b, c) whose norm form x1^2 + b x2^2 + c x3^2 + bc x4^2 is universal
NORM_FORM_PAIRS: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (2, 5),
)
NORM_FORMS = tuple(FormTuple(1, b, c, b * c) for b, c in NORM_FORM_PAIRS)

# eleven classical universal diagonal forms
CLASSICAL_FORMS = tuple(
    FormTuple(*t)
    for t in (
        (1, 1, 1, 1), (1, 1, 2, 2), (1, 2, 2, 2), (1, 1, 1, 4),
        (1, 1, 2, 4), (1, 2, 2, 4), (1, 2, 4, 4), (1, 1, 2, 8),
        (1, 2, 4, 8), (1, 1, 3, 3), (1, 2, 5, 10),
    )
)


def form_value(f: Sequence[int] | FormTuple, x: Sequence) -> Fraction | int:
    a, b, c, d = f
    x1, x2, x3, x4 = x
    return a * x1 * x1 + b * x2 * x2 + c * x3 * x3 + d * x4 * x4


def represent(n: int, f: FormTuple) -> tuple[int, int, int, int] | None:
    """First nonnegative solution of f(x) = n, or None if there is none.

    None is a proof: every coordinate of a solution obeys coeff * x^2 <= n
    and signs do not change squares, so the search covers all candidates.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    a, b, c, d = f
    for x4 in range(isqrt(n // d) + 1):
        r4 = n - d * x4 * x4
        for x3 in range(isqrt(r4 // c) + 1):
            r3 = r4 - c * x3 * x3
            for x2 in range(isqrt(r3 // b) + 1):
                r2 = r3 - b * x2 * x2
                if r2 % a:
                    continue
                s = r2 // a
                x1 = isqrt(s)
                if x1 * x1 == s:
                    return (x1, x2, x3, x4)
    return None


@dataclass(frozen=True)
class UniversalCheck:
    form: FormTuple
    limit: int
    universal: bool
    counterexample: int | None

    def __bool__(self):
        return self.universal

    def to_json(self) -> dict:
        return {
            "form": list(self.form),
            "limit": self.limit,
            "universal": self.universal,
            "counterexample": self.counterexample,
        }


def _values_mask(coeffs: Sequence[int], limit: int) -> int:
    """Bitmask with bit v set iff v = sum coeff*x^2 <= limit for some x."""
    mask = 1
    full = (1 << (limit + 1)) - 1
    for k in coeffs:
        step = 0
        for x in range(isqrt(limit // k) + 1):
            step |= mask << (k * x * x)
        mask = step & full
    return mask


def verify_universal(f: FormTuple, limit: int = 10_000) -> UniversalCheck:
    """Check that f represents every n in [1, limit]; report the least failure.

    Uses a bitmask sumset over the four diagonal terms.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    mask = _values_mask(tuple(f), limit)
    missing = ~mask & ((1 << (limit + 1)) - 2)
    if missing == 0:
        return UniversalCheck(f, limit, True, None)
    least = (missing & -missing).bit_length() - 1
    return UniversalCheck(f, limit, False, least)


def represent_rational(m: Fraction, b: int, c: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Rational x with x1^2 + b x2^2 + c x3^2 + bc x4^2 = m.

    For m = p/q in lowest terms, represent p*q by the integer norm form and
    divide every coordinate by q.
    """
    if (b, c) not in NORM_FORM_PAIRS:
        raise ValueError(
            f"(b, c) = ({b}, {c}) is not one of the universal norm-form pairs {NORM_FORM_PAIRS}"
        )
    m = Fraction(m)
    if m <= 0:
        raise ValueError("m must be a positive rational")
    p, q = m.numerator, m.denominator
    rep = represent(p * q, FormTuple(1, b, c, b * c))
    if rep is None:  # pragma: no cover - excluded by universality
        raise ArithmeticError(f"{p * q} not represented by (1,{b},{c},{b * c})")
    return tuple(Fraction(x, q) for x in rep)


class Variant(str, enum.Enum):
    """Which bilinear composition law to use for x1^2 + x2^2 + 2x3^2 + 2x4^2."""

    PRODUCT = "product"        # coordinates of x*y in H(-1,-2)
    CONJUGATED = "conjugated"  # the sign-flipped companion law


def compose(x: Sequence[int], y: Sequence[int], variant: Variant = Variant.PRODUCT) -> tuple[int, int, int, int]:
    """u with q(u) = q(x) q(y), where q = x1^2 + x2^2 + 2x3^2 + 2x4^2."""
    x1, x2, x3, x4 = x
    y1, y2, y3, y4 = y
    if Variant(variant) is Variant.PRODUCT:
        return (
            x1 * y1 - x2 * y2 - 2 * x3 * y3 - 2 * x4 * y4,
            x1 * y2 + x2 * y1 + 2 * x3 * y4 - 2 * x4 * y3,
            x1 * y3 + x3 * y1 - x2 * y4 + x4 * y2,
            x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2,
        )
    return (
        x1 * y1 + x2 * y2 + 2 * x3 * y3 + 2 * x4 * y4,
        x1 * y2 - x2 * y1 + 2 * x3 * y4 - 2 * x4 * y3,
        x1 * y3 - x3 * y1 - x2 * y4 + x4 * y2,
        x1 * y4 - x4 * y1 + x2 * y3 - x3 * y2,
    )

