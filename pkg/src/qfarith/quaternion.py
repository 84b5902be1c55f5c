"""Generalized quaternion algebras H(-b,-c) over Q or Q(i).

Basis {1, e2, e3, e4} with

    e2^2 = -b     e3^2 = -c     e4^2 = -bc
    e2 e3 = e4 = -e3 e2
    e3 e4 = c e2 = -e4 e3
    e4 e2 = b e3 = -e2 e4
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import GaussianRational, format_rational, parse_gaussian, parse_rational

__all__ = [
    "BaseField",
    "AlgebraParams",
    "Quaternion",
    "ParamsMismatch",
    "mul",
    "conj",
    "trace",
    "norm",
    "inverse",
    "parse_quaternion",
    "format_quaternion",
]


class BaseField(str, enum.Enum):
    Q = "Q"
    QI = "Q(i)"

    def scalar(self, x):
        if self is BaseField.Q:
            if isinstance(x, GaussianRational):
                if not x.is_rational():
                    raise ValueError(f"{x} is not a rational number")
                return x.re
            if isinstance(x, float):
                raise TypeError("floats are not exact scalars")
            return Fraction(x)
        return GaussianRational.coerce(x)


class ParamsMismatch(ValueError):
    """Operands belong to different algebras."""


@dataclass(frozen=True)
class AlgebraParams:
    """Parameters (b, c) of H(-b,-c); both must be positive integers."""

    b: int
    c: int
    base_field: BaseField = BaseField.Q

    def __post_init__(self):
        for name in ("b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int, got {v!r}")
            if v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v}")
        object.__setattr__(self, "base_field", BaseField(self.base_field))

    @property
    def bc(self) -> int:
        return self.b * self.c

    def describe(self) -> str:
        return f"H_{self.base_field.value}(-{self.b},-{self.c})"

    def to_json(self) -> dict:
        return {"b": self.b, "c": self.c, "field": self.base_field.value}

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraParams":
        return cls(int(data["b"]), int(data["c"]), BaseField(data.get("field", "Q")))


HAMILTON = AlgebraParams(1, 1)


class Quaternion:
    """x1 + x2 e2 + x3 e3 + x4 e4 with exact coordinates in the base field."""

    __slots__ = ("coords", "params")

    def __init__(self, coords: Iterable, params: AlgebraParams = HAMILTON):
        cs = tuple(params.base_field.scalar(x) for x in coords)
        if len(cs) != 4:
            raise ValueError(f"a quaternion needs 4 coordinates, got {len(cs)}")
        object.__setattr__(self, "coords", cs)
        object.__setattr__(self, "params", params)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def scalar(cls, s, params: AlgebraParams = HAMILTON) -> "Quaternion":
        return cls((s, 0, 0, 0), params)

    @classmethod
    def basis(cls, i: int, params: AlgebraParams = HAMILTON) -> "Quaternion":
        """Basis element: 1 for i=1, e2, e3, e4 for i=2, 3, 4."""
        cs = [0, 0, 0, 0]
        cs[i - 1] = 1
        return cls(cs, params)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other: "Quaternion"):
        if self.params != other.params:
            raise ParamsMismatch(
                f"{self.params.describe()} vs {other.params.describe()}"
            )

    def _lift(self, other) -> "Quaternion | None":
        if isinstance(other, Quaternion):
            self._check(other)
            return other
        try:
            return Quaternion.scalar(other, self.params)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quaternion((a + b for a, b in zip(self.coords, o.coords)), self.params)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion((-a for a in self.coords), self.params)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Quaternion((a - b for a, b in zip(self.coords, o.coords)), self.params)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        try:
            s = self.params.base_field.scalar(other)
        except (TypeError, ValueError):
            return NotImplemented
        return Quaternion((a * s for a in self.coords), self.params)

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, inverse(other))
        s = self.params.base_field.scalar(other)
        if s == 0:
            raise ZeroDivisionError("quaternion division by zero scalar")
        return Quaternion((a / s for a in self.coords), self.params)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.params == other.params and self.coords == other.coords
        try:
            o = Quaternion.scalar(other, self.params)
        except (TypeError, ValueError):
            return NotImplemented
        return self.coords == o.coords

    def __hash__(self):
        return hash((self.coords, self.params))

    def __bool__(self):
        return any(self.coords)

    def is_integral(self) -> bool:
        return all(_is_int(x) for x in self.coords)

    def conj(self) -> "Quaternion":
        return conj(self)

    def norm(self):
        return norm(self)

    def trace(self):
        return trace(self)

    def __repr__(self):
        return f"Quaternion({format_quaternion(self)!r}, {self.params.describe()})"

    def __str__(self):
        return format_quaternion(self)


def _is_int(x) -> bool:
    if isinstance(x, GaussianRational):
        return x.re.denominator == 1 and x.im.denominator == 1
    return Fraction(x).denominator == 1


def mul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Product in H(-b,-c), expanded over the basis multiplication table."""
    x._check(y)
    b, c = x.params.b, x.params.c
    x1, x2, x3, x4 = x.coords
    y1, y2, y3, y4 = y.coords
    return Quaternion(
        (
            x1 * y1 - b * x2 * y2 - c * x3 * y3 - b * c * x4 * y4,
            x1 * y2 + x2 * y1 + c * (x3 * y4 - x4 * y3),
            x1 * y3 + x3 * y1 + b * (x4 * y2 - x2 * y4),
            x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2,
        ),
        x.params,
    )


def conj(x: Quaternion) -> Quaternion:
    x1, x2, x3, x4 = x.coords
    return Quaternion((x1, -x2, -x3, -x4), x.params)


def trace(x: Quaternion):
    return 2 * x.coords[0]


def norm(x: Quaternion):
    """Reduced norm x1^2 + b x2^2 + c x3^2 + bc x4^2."""
    b, c = x.params.b, x.params.c
    x1, x2, x3, x4 = x.coords
    return x1 * x1 + b * x2 * x2 + c * x3 * x3 + b * c * x4 * x4


def inverse(x: Quaternion) -> Quaternion:
    n = norm(x)
    if n == 0:
        if x:
            raise ZeroDivisionError(f"{x} has zero norm (isotropic in a split algebra)")
        raise ZeroDivisionError("inverse of zero quaternion")
    return conj(x) / n


# --- text format --------------------------------------------------------------

_UNITS = ("", "e2", "e3", "e4")


def _split_terms(s: str) -> list[str]:
    """Split at top-level + and - (outside parentheses), keeping signs."""
    terms, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parentheses in {s!r}")
        elif ch in "+-" and depth == 0 and i > start:
            # exponent-like "/-" never occurs in our grammar; a sign after '*' does not split
            if s[i - 1] in "*/":
                continue
            terms.append(s[start:i])
            start = i
    if depth:
        raise ValueError(f"unbalanced parentheses in {s!r}")
    terms.append(s[start:])
    return [t for t in terms if t not in ("", "+")]


def _parse_coef(text: str, field: BaseField):
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if field is BaseField.Q:
        return parse_rational(text)
    return parse_gaussian(text)


def parse_quaternion(text: str, params: AlgebraParams = HAMILTON) -> Quaternion:
    """Parse ``"a + b*e2 + c*e3 + d*e4"``; omitted terms are zero.

    Over Q(i) wrap compound coefficients in parentheses: ``"(1+i)*e2"``.
    """
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty quaternion literal")
    coords = [0, 0, 0, 0]
    for term in _split_terms(s):
        sign = 1
        if term[0] in "+-":
            sign = -1 if term[0] == "-" else 1
            term = term[1:]
        m = re.fullmatch(r"(?:(.+?)\*?)?e([234])", term)
        if m:
            idx = int(m.group(2)) - 1
            coef = _parse_coef(m.group(1), params.base_field) if m.group(1) else 1
        else:
            idx = 0
            coef = _parse_coef(term, params.base_field)
        coords[idx] = coords[idx] + sign * coef
    return Quaternion(coords, params)


def _fmt_scalar(x) -> str:
    if isinstance(x, GaussianRational):
        return str(x)
    return format_rational(x)


def format_quaternion(x: Quaternion) -> str:
    parts = []
    for coef, unit in zip(x.coords, _UNITS):
        if coef == 0:
            continue
        neg = False
        if isinstance(coef, GaussianRational) and not coef.is_rational():
            body = f"({coef})"
        else:
            r = coef.re if isinstance(coef, GaussianRational) else coef
            neg = r < 0
            body = format_rational(abs(r))
        if unit:
            body = unit if body == "1" else f"{body}*{unit}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts) if parts else "0"


def coords_to_json(x: Quaternion) -> list[str]:
    return [_fmt_scalar(c) for c in x.coords]


def quaternion_to_json(x: Quaternion) -> dict:
    return {"algebra": x.params.to_json(), "coords": coords_to_json(x)}


def quaternion_from_json(data: dict) -> Quaternion:
    params = AlgebraParams.from_json(data["algebra"])
    return Quaternion(
        (_parse_coef(c, params.base_field) for c in data["coords"]), params
    )


def basis_elements(params: AlgebraParams) -> Sequence[Quaternion]:
    return tuple(Quaternion.basis(i, params) for i in range(1, 5))
