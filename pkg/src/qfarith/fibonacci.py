"""Fibonacci and Lucas numbers, classical identities, Pisano periods, and
the sigma-permutated Fibonacci-Hurwitz quaternions in H(-1,-2).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .quaternion import AlgebraParams, Quaternion, mul, norm, trace

__all__ = [
    "fib",
    "lucas",
    "IDENTITIES",
    "check_identity",
    "pisano_period",
    "SigmaPermutation",
    "NORM_LAW_SIGMAS",
    "FibQuaternion",
    "fib_hurwitz",
    "SpecialProduct",
    "special_product",
    "FIB_ALGEBRA",
]

FIB_ALGEBRA = AlgebraParams(1, 2)

_lock = threading.Lock()
_fib_memo = [0, 1]
_lucas_memo = [2, 1]


def _extend(memo: list[int], n: int) -> int:
    if n < len(memo):
        return memo[n]
    with _lock:
        while len(memo) <= n:
            memo.append(memo[-1] + memo[-2])
        return memo[n]


def fib(n: int) -> int:
    if n < 0:
        raise ValueError(f"negative Fibonacci index {n}")
    return _extend(_fib_memo, n)


def lucas(n: int) -> int:
    if n < 0:
        raise ValueError(f"negative Lucas index {n}")
    return _extend(_lucas_memo, n)


# --- identities ------------------------------------------------------------------
#
# each entry: (arity, domain check, lhs, rhs)


def _sum_of_squares(n):
    return fib(n) ** 2 + fib(n + 1) ** 2, fib(2 * n + 1)


def _square_recurrence(n):
    return fib(n + 3) ** 2, 2 * fib(n + 2) ** 2 + 2 * fib(n + 1) ** 2 - fib(n) ** 2


def _addition(n, m):
    return fib(n - 1) * fib(m) + fib(n) * fib(m + 1), fib(n + m)


def _vajda(n, m, k):
    lhs = fib(n) * fib(m) - fib(n - k) * fib(m + k)
    sign = -1 if (n - k) % 2 else 1
    j = m + k - n
    # f_{-j} = (-1)^(j+1) f_j extends the right side to m + k < n
    fj = fib(j) if j >= 0 else (-1) ** (-j + 1) * fib(-j)
    return lhs, sign * fib(k) * fj


def _shift_three(n, l):
    return fib(n) * fib(l) + fib(n + 3) * fib(l + 3), 2 * fib(n + l + 3)


def _cassini(n):
    return fib(n + 1) * fib(n - 1) - fib(n) ** 2, (-1) ** n


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    domain: Callable[..., bool]
    sides: Callable[..., tuple[int, int]]
    text: str


IDENTITIES: dict[str, Identity] = {
    i.name: i
    for i in (
        Identity("sum-of-squares", 1, lambda n: n >= 0, _sum_of_squares,
                 "f(n)^2 + f(n+1)^2 = f(2n+1)"),
        Identity("square-recurrence", 1, lambda n: n >= 1, _square_recurrence,
                 "f(n+3)^2 = 2 f(n+2)^2 + 2 f(n+1)^2 - f(n)^2"),
        Identity("addition", 2, lambda n, m: n >= 1 and m >= 1, _addition,
                 "f(n-1) f(m) + f(n) f(m+1) = f(n+m)"),
        Identity("vajda", 3, lambda n, m, k: min(n, m, k) >= 0 and k <= n, _vajda,
                 "f(n) f(m) - f(n-k) f(m+k) = (-1)^(n-k) f(k) f(m+k-n)"),
        Identity("shift-three", 2, lambda n, l: n >= 0 and l >= 0, _shift_three,
                 "f(n) f(l) + f(n+3) f(l+3) = 2 f(n+l+3)"),
        Identity("cassini", 1, lambda n: n >= 1, _cassini,
                 "f(n+1) f(n-1) - f(n)^2 = (-1)^n"),
    )
}


def check_identity(name: str, *args: int) -> bool:
    try:
        ident = IDENTITIES[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}") from None
    if len(args) != ident.arity:
        raise ValueError(f"{name} takes {ident.arity} argument(s), got {len(args)}")
    if not ident.domain(*args):
        raise ValueError(f"arguments {args} are outside the domain of {name}")
    lhs, rhs = ident.sides(*args)
    return lhs == rhs


def pisano_period(m: int) -> int:
    """Least p > 0 with f(p) = 0 and f(p+1) = 1 modulo m."""
    if m < 2:
        raise ValueError("Pisano period needs m >= 2")
    a, b = 0, 1
    # the period never exceeds 6m
    for p in range(1, 6 * m + 1):
        a, b = b, (a + b) % m
        if a == 0 and b == 1:
            return p
    raise AssertionError(f"no period found for m={m}")  # pragma: no cover


# --- Fibonacci-Hurwitz quaternions -------------------------------------------------


@dataclass(frozen=True)
class SigmaPermutation:
    """sigma(n + i) = n + offsets[i] for i = 0..3."""

    offsets: tuple[int, int, int, int]

    def __post_init__(self):
        offs = tuple(int(o) for o in self.offsets)
        if sorted(offs) != [0, 1, 2, 3]:
            raise ValueError(f"offsets must be a permutation of 0,1,2,3, got {self.offsets}")
        object.__setattr__(self, "offsets", offs)

    @classmethod
    def parse(cls, text: str) -> "SigmaPermutation":
        return cls(tuple(int(p) for p in text.split(",")))

    def __call__(self, n: int, i: int) -> int:
        return n + self.offsets[i]

    def __str__(self):
        return ",".join(map(str, self.offsets))


IDENTITY_SIGMA = SigmaPermutation((0, 1, 2, 3))
NORM_LAW_SIGMAS = tuple(
    SigmaPermutation(o) for o in ((3, 0, 1, 2), (0, 3, 1, 2), (3, 0, 2, 1), (0, 3, 2, 1))
)


@dataclass(frozen=True)
class FibQuaternion:
    n: int
    sigma: SigmaPermutation
    value: Quaternion

    def norm(self) -> Fraction:
        return norm(self.value)


def _fib_coords(n: int, sigma: SigmaPermutation) -> list[int]:
    return [fib(sigma(n, i)) for i in range(4)]


def fib_hurwitz(n: int, sigma: SigmaPermutation = NORM_LAW_SIGMAS[0]) -> FibQuaternion:
    """(f(s(n)) + f(s(n+1)) e2 + f(s(n+2)) e3 + f(s(n+3)) e4) / 2 in H(-1,-2)."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    value = Quaternion((Fraction(f, 2) for f in _fib_coords(n, sigma)), FIB_ALGEBRA)
    return FibQuaternion(n, sigma, value)


def _signed(n: int, signs: tuple[int, int, int, int], sigma: SigmaPermutation) -> Quaternion:
    return Quaternion(
        (Fraction(s * f, 2) for s, f in zip(signs, _fib_coords(n, sigma))), FIB_ALGEBRA
    )


@dataclass(frozen=True)
class SpecialProduct:
    """Product of the two sign-patterned quaternions for indices n < l.

    ``vector_part`` is product - trace/2.  ``stated_form`` is the closed form
    ((-1)^n / 2)(f(k+1) e2 + f(k) e4), k = l - n, as commonly quoted
    for this vector part; ``holds`` records whether they actually agree.
    """

    n: int
    l: int
    product: Quaternion
    trace: int
    vector_part: Quaternion
    stated_form: Quaternion

    @property
    def k(self) -> int:
        return self.l - self.n

    @property
    def holds(self) -> bool:
        return self.vector_part == self.stated_form


def special_product(n: int, l: int) -> SpecialProduct:
    """F'(n) F''(l) for sigma = (3,0,1,2), where F' negates the e2, e3
    coordinates and F'' negates the e4 coordinate of the Fibonacci-Hurwitz
    quaternion."""
    if n < 1 or l <= n:
        raise ValueError(f"need 1 <= n < l, got n={n}, l={l}")
    sigma = NORM_LAW_SIGMAS[0]
    left = _signed(n, (1, -1, -1, 1), sigma)
    right = _signed(l, (1, 1, 1, -1), sigma)
    product = mul(left, right)
    t = trace(product)
    assert t.denominator == 1
    vector_part = product - t / 2
    k = l - n
    sign = -1 if n % 2 else 1
    stated = Quaternion(
        (0, Fraction(sign * fib(k + 1), 2), 0, Fraction(sign * fib(k), 2)), FIB_ALGEBRA
    )
    return SpecialProduct(n, l, product, int(t), vector_part, stated)
