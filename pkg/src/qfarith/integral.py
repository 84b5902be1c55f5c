"""Integer quaternions: Lipschitz and Hurwitz points, division with
remainder, right congruence, and the commutative subring Z[v] with
v = (1 + e2 + e3 + e4)/2 together with its residue rings.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .quaternion import HAMILTON, AlgebraParams, Quaternion, conj, mul, norm
from .scalars import is_prime, round_half_toward_zero

__all__ = [
    "Lattice",
    "LatticePoint",
    "lipschitz",
    "hurwitz",
    "divide_with_scaled_remainder",
    "right_divide",
    "is_right_congruent",
    "count_residues",
    "is_unit",
    "is_prime_quaternion",
    "SubringElement",
    "V",
    "subring_norm",
    "ResidueSystem",
    "residue_system",
    "to_residue",
]

HALF = Fraction(1, 2)


class Lattice(str, enum.Enum):
    LIPSCHITZ = "Lipschitz"
    HURWITZ = "Hurwitz"


@dataclass(frozen=True)
class LatticePoint:
    """An integral quaternion: Lipschitz (all coordinates in Z) or Hurwitz
    (all in Z or all in Z + 1/2; only in H(-1,-1))."""

    q: Quaternion
    lattice: Lattice = Lattice.LIPSCHITZ

    def __post_init__(self):
        lat = Lattice(self.lattice)
        object.__setattr__(self, "lattice", lat)
        cs = self.q.coords
        if lat is Lattice.LIPSCHITZ:
            if not all(Fraction(x).denominator == 1 for x in cs):
                raise ValueError(f"{self.q} is not a Lipschitz integer")
        else:
            if self.q.params != HAMILTON:
                raise ValueError("Hurwitz integers are only defined in H(-1,-1)")
            dens = {Fraction(x).denominator for x in cs}
            if dens not in ({1}, {2}):
                raise ValueError(f"{self.q} is not a Hurwitz integer")

    @property
    def params(self) -> AlgebraParams:
        return self.q.params

    @property
    def coords(self):
        return self.q.coords

    def norm(self) -> int:
        n = norm(self.q)
        assert n.denominator == 1
        return int(n)

    def _join(self, other: "LatticePoint") -> Lattice:
        if Lattice.HURWITZ in (self.lattice, other.lattice):
            return Lattice.HURWITZ
        return Lattice.LIPSCHITZ

    def _wrap(self, q: Quaternion, lat: Lattice) -> "LatticePoint":
        if lat is Lattice.HURWITZ:
            return LatticePoint(q, Lattice.HURWITZ)
        return LatticePoint(q, Lattice.LIPSCHITZ)

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        return self._wrap(self.q + other.q, self._join(other))

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return self._wrap(self.q - other.q, self._join(other))

    def __neg__(self) -> "LatticePoint":
        return LatticePoint(-self.q, self.lattice)

    def __mul__(self, other: "LatticePoint") -> "LatticePoint":
        return self._wrap(mul(self.q, other.q), self._join(other))

    def conj(self) -> "LatticePoint":
        return LatticePoint(conj(self.q), self.lattice)

    def __bool__(self):
        return bool(self.q)

    def __str__(self):
        return str(self.q)


def lipschitz(x1, x2=0, x3=0, x4=0, params: AlgebraParams = HAMILTON) -> LatticePoint:
    return LatticePoint(Quaternion((x1, x2, x3, x4), params), Lattice.LIPSCHITZ)


def hurwitz(x1, x2=0, x3=0, x4=0) -> LatticePoint:
    return LatticePoint(Quaternion((x1, x2, x3, x4), HAMILTON), Lattice.HURWITZ)


def _as_lipschitz(x: LatticePoint | Quaternion) -> LatticePoint:
    if isinstance(x, Quaternion):
        return LatticePoint(x, Lattice.LIPSCHITZ)
    if x.lattice is not Lattice.LIPSCHITZ:
        x = LatticePoint(x.q, Lattice.LIPSCHITZ)
    return x


def _rounded_quotient(x: Quaternion, y: Quaternion) -> Quaternion:
    n = norm(y)
    return Quaternion(
        (round_half_toward_zero(t / n) for t in mul(x, conj(y)).coords), x.params
    )


def divide_with_scaled_remainder(x, y) -> tuple[LatticePoint, LatticePoint]:
    """(gamma, theta) with n(y) x = gamma y + n(y) theta and n(theta) < n(y).

    theta is x minus the coordinate-rounded quotient times y; when that is not
    small enough (possible when 1 + b + c + bc > 4) theta = 0 is used, which
    always satisfies the bound.  gamma = (x - theta) conj(y).
    """
    x, y = _as_lipschitz(x), _as_lipschitz(y)
    if x.params != y.params:
        raise ValueError("operands belong to different algebras")
    if not y:
        raise ZeroDivisionError("division by the zero quaternion")
    ny = y.norm()
    theta = x.q - mul(_rounded_quotient(x.q, y.q), y.q)
    if norm(theta) >= ny:
        theta = Quaternion.scalar(0, x.params)
    gamma = mul(x.q - theta, conj(y.q))
    assert ny * x.q == mul(gamma, y.q) + ny * theta
    return LatticePoint(gamma), LatticePoint(theta)


def right_divide(x, y) -> tuple[LatticePoint, LatticePoint]:
    """(gamma, theta) with x = gamma y + theta and n(theta) < n(y), in H(-1,-1).

    gamma rounds each coordinate of x conj(y) / n(y); n(y) must be odd so no
    coordinate sits exactly halfway.
    """
    x, y = _as_lipschitz(x), _as_lipschitz(y)
    if x.params != HAMILTON or y.params != HAMILTON:
        raise ValueError("right division with remainder is implemented for H(-1,-1) only")
    if not y:
        raise ZeroDivisionError("division by the zero quaternion")
    ny = y.norm()
    if ny % 2 == 0:
        raise ValueError(f"divisor norm {ny} is even; the remainder bound needs an odd norm")
    gamma = _rounded_quotient(x.q, y.q)
    theta = x.q - mul(gamma, y.q)
    assert norm(theta) < ny
    return LatticePoint(gamma), LatticePoint(theta)


def _check_odd_modulus(phi: LatticePoint) -> int:
    phi = _as_lipschitz(phi)
    if phi.params != HAMILTON:
        raise ValueError("right congruence is implemented for H(-1,-1) only")
    n = phi.norm()
    if n == 0 or n % 2 == 0:
        raise ValueError(f"modulus must be an odd quaternion, got norm {n}")
    return n


def is_right_congruent(x, y, phi) -> bool:
    """x = y (mod phi) on the right: x - y = theta phi with theta Lipschitz."""
    n = _check_odd_modulus(phi)
    x, y, phi = _as_lipschitz(x), _as_lipschitz(y), _as_lipschitz(phi)
    return all(t % n == 0 for t in mul((x - y).q, conj(phi.q)).coords)


def _class_label(coords: tuple[int, int, int, int], phi_conj: tuple[int, int, int, int], n: int):
    # coordinates of x * conj(phi) mod n; H(-1,-1) product with ints
    x1, x2, x3, x4 = coords
    y1, y2, y3, y4 = phi_conj
    return (
        (x1 * y1 - x2 * y2 - x3 * y3 - x4 * y4) % n,
        (x1 * y2 + x2 * y1 + x3 * y4 - x4 * y3) % n,
        (x1 * y3 + x3 * y1 + x4 * y2 - x2 * y4) % n,
        (x1 * y4 + x4 * y1 + x2 * y3 - x3 * y2) % n,
    )


def count_residues(phi, box: int | None = None) -> int:
    """Number of right-congruence classes mod phi met by Lipschitz points with
    coordinates in [0, box).  With box >= n(phi) every class is met."""
    n = _check_odd_modulus(phi)
    phi = _as_lipschitz(phi)
    if box is None:
        box = n
    pc = tuple(int(t) for t in conj(phi.q).coords)
    labels = {
        _class_label(c, pc, n) for c in itertools.product(range(box), repeat=4)
    }
    return len(labels)


def is_unit(q) -> bool:
    return norm(q.q if isinstance(q, LatticePoint) else q) == 1


def is_prime_quaternion(q) -> bool:
    n = norm(q.q if isinstance(q, LatticePoint) else q)
    return n.denominator == 1 and is_prime(int(n))


# --- the subring Z[v] ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SubringElement:
    """alpha + beta*v with v = (1 + e2 + e3 + e4)/2 in H(-1,-1); v^2 = v - 1."""

    alpha: int
    beta: int

    def __add__(self, other):
        o = _sub_lift(other)
        return SubringElement(self.alpha + o.alpha, self.beta + o.beta)

    __radd__ = __add__

    def __neg__(self):
        return SubringElement(-self.alpha, -self.beta)

    def __sub__(self, other):
        return self + (-_sub_lift(other))

    def __rsub__(self, other):
        return _sub_lift(other) - self

    def __mul__(self, other):
        o = _sub_lift(other)
        a, b, c, d = self.alpha, self.beta, o.alpha, o.beta
        return SubringElement(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conj(self) -> "SubringElement":
        # conj(v) = 1 - v
        return SubringElement(self.alpha + self.beta, -self.beta)

    def norm(self) -> int:
        return subring_norm(self.alpha, self.beta)

    def to_quaternion(self) -> Quaternion:
        h = Fraction(self.beta, 2)
        return Quaternion((self.alpha + h, h, h, h), HAMILTON)

    def to_lattice_point(self) -> LatticePoint:
        return LatticePoint(self.to_quaternion(), Lattice.HURWITZ)

    def is_divisible_by(self, phi: "SubringElement") -> bool:
        n = phi.norm()
        if n == 0:
            return not self
        t = self * phi.conj()
        return t.alpha % n == 0 and t.beta % n == 0

    def __bool__(self):
        return bool(self.alpha or self.beta)

    def __str__(self):
        a, b = self.alpha, self.beta
        if b == 0:
            return str(a)
        vt = "v" if abs(b) == 1 else f"{abs(b)}*v"
        if a == 0:
            return vt if b > 0 else f"-{vt}"
        return f"{a}{'+' if b > 0 else '-'}{vt}"

    @classmethod
    def parse(cls, text: str) -> "SubringElement":
        """Parse ``"a+b*v"``, ``"-1+2v"``, ``"v"``, ``"3"``, or ``"a,b"``."""
        s = text.replace(" ", "")
        if re.fullmatch(r"[+-]?\d+,[+-]?\d+", s):
            a, b = s.split(",")
            return cls(int(a), int(b))
        m = re.fullmatch(r"([+-]?)(\d*)\*?v", s)
        if m:
            alpha, sign, coef = 0, m.group(1), m.group(2)
        else:
            m = re.fullmatch(r"([+-]?\d+)(?:([+-])(\d*)\*?v)?", s)
            if not m:
                raise ValueError(f"not a subring literal: {text!r}")
            alpha, sign, coef = int(m.group(1)), m.group(2), m.group(3)
            if sign is None:
                return cls(alpha, 0)
        beta = int(coef) if coef else 1
        return cls(alpha, -beta if sign == "-" else beta)


V = SubringElement(0, 1)


def _sub_lift(x) -> SubringElement:
    if isinstance(x, SubringElement):
        return x
    if isinstance(x, int):
        return SubringElement(x, 0)
    raise TypeError(f"cannot use {type(x).__name__} as a subring element")


def subring_norm(alpha: int, beta: int) -> int:
    return alpha * alpha + alpha * beta + beta * beta


def _reduce(x: SubringElement, phi: SubringElement) -> SubringElement:
    """Remainder of x modulo phi with the nearest quotient in the norm metric.

    The exact quotient x conj(phi) / n(phi) lies in a cell of the lattice
    spanned by 1 and v; the nearest lattice point is one of the cell's four
    corners.  Ties prefer a remainder with no negative coordinate, then the
    smaller (alpha, beta).
    """
    n = phi.norm()
    t = x * phi.conj()
    fa, fb = t.alpha // n, t.beta // n
    best, best_key = None, None
    for qa, qb in ((fa, fb), (fa + 1, fb), (fa, fb + 1), (fa + 1, fb + 1)):
        r = x - SubringElement(qa, qb) * phi
        key = (r.norm(), r.alpha < 0 or r.beta < 0, r.alpha, r.beta)
        if best_key is None or key < best_key:
            best, best_key = r, key
    assert best.norm() < n
    return best


@dataclass(frozen=True)
class ResidueSystem:
    """Residue ring Z[v]/(phi) for primitive phi, identified with Z_n, n = n(phi).

    ``representatives[m]`` is the remainder of the integer m modulo phi.
    """

    modulus: SubringElement
    representatives: tuple[SubringElement, ...]
    v_residue: int

    @property
    def size(self) -> int:
        return len(self.representatives)

    def int_map(self, m: int) -> SubringElement:
        return self.representatives[m % self.size]

    def to_residue(self, q: SubringElement) -> int:
        return (q.alpha + q.beta * self.v_residue) % self.size

    def reduce(self, q: SubringElement) -> SubringElement:
        return _reduce(q, self.modulus)

    def to_json(self) -> dict:
        return {
            "modulus": str(self.modulus),
            "norm": self.size,
            "v_residue": self.v_residue,
            "representatives": [str(r) for r in self.representatives],
        }


def _check_primitive(phi: SubringElement) -> int:
    if math.gcd(phi.alpha, phi.beta) != 1:
        raise ValueError(f"modulus {phi} must have gcd(alpha, beta) = 1")
    n = phi.norm()
    if n <= 1:
        raise ValueError(f"modulus {phi} must have norm > 1, got {n}")
    return n


@functools.lru_cache(maxsize=512)
def residue_system(phi: SubringElement) -> ResidueSystem:
    n = _check_primitive(phi)
    reps = tuple(_reduce(SubringElement(m, 0), phi) for m in range(n))
    # v = t (mod phi) for a unique t in [0, n)
    t = next(t for t in range(n) if (V - t).is_divisible_by(phi))
    return ResidueSystem(phi, reps, t)


def to_residue(q: SubringElement, phi: SubringElement) -> int:
    """The unique m in [0, n(phi)) with q = m (mod phi)."""
    return residue_system(phi).to_residue(q)
