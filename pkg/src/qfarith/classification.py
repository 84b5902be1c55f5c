"""Split/division decisions for quaternion algebras.

Over Q the algebra H_Q(-b,-c) ramifies at p exactly when the Hilbert symbol
(-b,-c)_p is -1; the reduced discriminant is the product of the ramified
finite primes and classifies the algebra up to isomorphism.

Over Q(i) we only search for conic points (a witness proves the algebra
split; failing to find one proves nothing).  A local-degree count gives an
independent indication of which rational primes still ramify there.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Union

from .quaternion import AlgebraParams, BaseField
from .scalars import GaussianRational, factorize, is_prime, legendre

__all__ = [
    "INFINITY",
    "Verdict",
    "ClassificationResult",
    "hilbert_symbol",
    "reduced_discriminant",
    "are_isomorphic",
    "conic_point",
    "conic_solutions",
    "verify_conic_point",
    "GaussianSearch",
    "GaussianWitness",
    "classify_over_gaussian",
    "gaussian_ramified_primes",
    "gaussian_isqrt",
]

INFINITY = "infinity"
Place = Union[int, str]


class Verdict(str, enum.Enum):
    SPLIT = "Split"
    DIVISION = "Division"


@dataclass(frozen=True)
class ClassificationResult:
    b: int
    c: int
    verdict: Verdict
    ramified_primes: tuple[int, ...]
    reduced_discriminant: int
    ramified_at_infinity: bool = False

    def to_json(self) -> dict:
        return {
            "algebra": f"H_Q(-{self.b},-{self.c})",
            "verdict": self.verdict.value,
            "reduced_discriminant": self.reduced_discriminant,
            "ramified_primes": list(self.ramified_primes),
            "ramified_at_infinity": self.ramified_at_infinity,
        }


def _split_p(n: int, p: int) -> tuple[int, int]:
    """Write n = p^v * u with p not dividing u."""
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def hilbert_symbol(a: int, b: int, p: Place) -> int:
    """Hilbert symbol (a,b)_p over Q_p (or R for ``p == INFINITY``)."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    if p == INFINITY:
        return -1 if a < 0 and b < 0 else 1
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"Hilbert symbol needs a prime or the infinite place, got {p!r}")
    alpha, u = _split_p(a, p)
    beta, w = _split_p(b, p)
    if p == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_w = ((w - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_w = ((w * w - 1) // 8) % 2
        e = (eps_u * eps_w + alpha * om_w + beta * om_u) % 2
        return -1 if e else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    return sign * legendre(u, p) ** beta * legendre(w, p) ** alpha


def reduced_discriminant(b: int, c: int) -> ClassificationResult:
    """Classify H_Q(-b,-c).

    Only primes dividing 2bc can ramify, so those are the only candidates.
    """
    if b == 0 or c == 0:
        raise ValueError("b and c must be nonzero")
    x, y = -b, -c
    candidates = sorted(factorize(2 * b * c))
    ramified = tuple(p for p in candidates if hilbert_symbol(x, y, p) == -1)
    at_inf = hilbert_symbol(x, y, INFINITY) == -1
    # product formula: total number of ramified places is even
    assert (len(ramified) + at_inf) % 2 == 0, (b, c, ramified, at_inf)
    disc = math.prod(ramified)
    verdict = Verdict.DIVISION if ramified else Verdict.SPLIT
    return ClassificationResult(b, c, verdict, ramified, disc, at_inf)


def are_isomorphic(a1: AlgebraParams, a2: AlgebraParams) -> bool:
    """Rational quaternion algebras are isomorphic iff their reduced discriminants agree."""
    for a in (a1, a2):
        if a.base_field is not BaseField.Q:
            raise ValueError("isomorphism testing is only supported over Q")
    return (
        reduced_discriminant(a1.b, a1.c).reduced_discriminant
        == reduced_discriminant(a2.b, a2.c).reduced_discriminant
    )


def conic_point(m: int, a: int, b: int) -> tuple[int, int, int]:
    """Point (a^2 - m b^2, 2ab, a^2 + m b^2) on x^2 + m y^2 = z^2."""
    return a * a - m * b * b, 2 * a * b, a * a + m * b * b


def conic_solutions(m: int, count: int) -> list[tuple[int, int, int]]:
    """First ``count`` distinct solutions of x^2 + m y^2 = z^2 from the
    (a, b) parametrization, a >= 1, b >= 0, by increasing max(a, b)."""
    if m < 1 or count < 1:
        raise ValueError("need m >= 1 and count >= 1")
    out: list[tuple[int, int, int]] = []
    seen = set()
    h = 1
    while len(out) < count:
        for a, b in _pairs_of_height(h):
            t = conic_point(m, a, b)
            if t not in seen:
                seen.add(t)
                out.append(t)
                if len(out) == count:
                    break
        h += 1
    return out


def _pairs_of_height(h: int) -> Iterator[tuple[int, int]]:
    for a in range(1, h + 1):
        for b in range(0, h + 1):
            if max(a, b) == h:
                yield a, b


def verify_conic_point(b, c, point) -> bool:
    """True iff ``point`` is nonzero and b x^2 + c y^2 = z^2 exactly (over Q(i))."""
    x, y, z = (GaussianRational.coerce(t) for t in point)
    if not (x or y or z):
        return False
    return b * x * x + c * y * y == z * z


# --- Q(i) ---------------------------------------------------------------------


class GaussianSearch(str, enum.Enum):
    SPLIT_WITNESSED = "SplitWitnessed"
    NO_WITNESS_FOUND = "NoWitnessFound"


@dataclass(frozen=True)
class GaussianWitness:
    status: GaussianSearch
    witness: tuple[GaussianRational, GaussianRational, GaussianRational] | None
    search_bound: int
    b: int
    c: int
    ramified_rational_primes: tuple[int, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "algebra": f"H_Q(i)(-{self.b},-{self.c})",
            "status": self.status.value,
            "witness": None if self.witness is None else [str(t) for t in self.witness],
            "search_bound": self.search_bound,
            "ramified_rational_primes": list(self.ramified_rational_primes),
            "note": (
                None
                if self.status is GaussianSearch.SPLIT_WITNESSED
                else "no conic point up to the bound; this is not a proof of division"
            ),
        }


def gaussian_isqrt(re: int, im: int) -> tuple[int, int] | None:
    """A Gaussian integer z with z^2 = re + im*i, or None.

    Returns the root with positive real part (or zero real part and
    nonnegative imaginary part).
    """
    n2 = re * re + im * im
    n = math.isqrt(n2)
    if n * n != n2:
        return None
    if (n + re) % 2:
        return None
    u2, v2 = (n + re) // 2, (n - re) // 2
    u, v = math.isqrt(u2), math.isqrt(v2)
    if u * u != u2 or v * v != v2:
        return None
    if u * v != 0 and (2 * u * v > 0) != (im > 0):
        v = -v
    if 2 * u * v != im or u * u - v * v != re:
        return None
    if u == 0 and v < 0:
        v = -v
    return u, v


def _height(z: tuple[int, int]) -> int:
    return max(abs(z[0]), abs(z[1]))


def _coord_key(z: tuple[int, int]):
    return abs(z[0]), abs(z[1]), z[0] < 0, z[1] < 0


def classify_over_gaussian(b: int, c: int, search_bound: int) -> GaussianWitness:
    """Search Gaussian-integer points on -b x^2 - c y^2 = z^2 of height <= bound.

    The first witness is returned in the order: max coordinate height,
    then coordinates x, y, z compared by (|Re|, |Im|, Re < 0, Im < 0), so
    small nonnegative parts come first.
    """
    if search_bound < 0:
        raise ValueError("search bound must be nonnegative")
    rng = range(-search_bound, search_bound + 1)
    best = None
    best_key = None
    for xr, xi, yr, yi in itertools.product(rng, repeat=4):
        # -b x^2 - c y^2
        x2r, x2i = xr * xr - xi * xi, 2 * xr * xi
        y2r, y2i = yr * yr - yi * yi, 2 * yr * yi
        wr = -b * x2r - c * y2r
        wi = -b * x2i - c * y2i
        root = gaussian_isqrt(wr, wi)
        if root is None:
            continue
        for z in {root, (-root[0], -root[1])}:
            if _height(z) > search_bound:
                continue
            trip = ((xr, xi), (yr, yi), z)
            if trip == ((0, 0), (0, 0), (0, 0)):
                continue
            key = (max(_height(t) for t in trip), tuple(_coord_key(t) for t in trip))
            if best_key is None or key < best_key:
                best_key, best = key, trip
    ram = gaussian_ramified_primes(b, c)
    if best is None:
        return GaussianWitness(GaussianSearch.NO_WITNESS_FOUND, None, search_bound, b, c, ram)
    wit = tuple(GaussianRational(r, i) for r, i in best)
    assert verify_conic_point(-b, -c, wit)
    return GaussianWitness(GaussianSearch.SPLIT_WITNESSED, wit, search_bound, b, c, ram)


def gaussian_ramified_primes(b: int, c: int) -> tuple[int, ...]:
    """Rational primes below the primes of Z[i] ramified in H_Q(i)(-b,-c).

    For rational arguments the local symbol over a completion of degree d
    is (-b,-c)_p ** d.  2 ramifies and p = 3 mod 4 is inert in Z[i] (d = 2),
    and the complex place never ramifies, so only p = 1 mod 4 can survive.
    """
    return tuple(
        p
        for p in sorted(factorize(2 * b * c))
        if p % 4 == 1 and hilbert_symbol(-b, -c, p) == -1
    )
