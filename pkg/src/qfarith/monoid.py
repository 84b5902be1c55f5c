"""The finite totally ordered commutative monoid A = {y_0 <= ... <= y_{2^k-1}}
and Fibonacci-type sequences v_{n+2} = v_n * v_{n+1} on it.

Two products are available:

* ``TRUNCATED_ADD``: y_i * y_j = y_{min(i+j, 2^k-1)}
* ``COMPONENTWISE_OR``: the product of k copies of the two-element
  join monoid {o < x}, i.e. bitwise OR on indices.

They agree on many pairs (y1*y2 = y3, y3*y6 = y7) but not all (y1*y1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

__all__ = ["Variant", "MonoidElement", "monoid_op", "FibTrace", "fib_sequence"]


class Variant(str, enum.Enum):
    TRUNCATED_ADD = "add"
    COMPONENTWISE_OR = "or"


@dataclass(frozen=True, order=True)
class MonoidElement:
    k: int
    index: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if not 0 <= self.index <= self.top_index:
            raise ValueError(f"index {self.index} out of range [0, {self.top_index}]")

    @property
    def top_index(self) -> int:
        return (1 << self.k) - 1

    @property
    def is_zero(self) -> bool:
        return self.index == 0

    @property
    def is_one(self) -> bool:
        return self.index == self.top_index

    def bits(self) -> tuple[int, ...]:
        """Coordinates in A_1 x ... x A_k, most significant first (1 = x_i, 0 = o_i)."""
        return tuple((self.index >> (self.k - 1 - j)) & 1 for j in range(self.k))

    def __str__(self):
        if self.is_one:
            return "1"
        if self.is_zero:
            return "0"
        return f"y{self.index}"


def monoid_op(a: MonoidElement, b: MonoidElement, variant: Variant = Variant.TRUNCATED_ADD) -> MonoidElement:
    if a.k != b.k:
        raise ValueError(f"elements of different monoids (k={a.k} vs k={b.k})")
    if Variant(variant) is Variant.TRUNCATED_ADD:
        return MonoidElement(a.k, min(a.index + b.index, a.top_index))
    return MonoidElement(a.k, a.index | b.index)


@dataclass(frozen=True)
class FibTrace:
    terms: tuple[MonoidElement, ...]
    t: int
    limit: MonoidElement
    variant: Variant

    def to_json(self) -> dict:
        return {
            "k": self.limit.k,
            "variant": self.variant.value,
            "terms": [str(x) for x in self.terms],
            "term_indices": [x.index for x in self.terms],
            "t": self.t,
            "limit": str(self.limit),
        }


def fib_sequence(
    a: MonoidElement,
    b: MonoidElement,
    variant: Variant = Variant.TRUNCATED_ADD,
    max_steps: int | None = None,
) -> FibTrace:
    """Iterate v0 = a, v1 = b, v_{n+2} = v_n * v_{n+1} until it is stationary.

    Stops at the first consecutive pair (v, v) with v * v = v; from there the
    sequence is constant.  ``t`` is the least index after which every term
    equals the limit.
    """
    if a.k != b.k:
        raise ValueError(f"elements of different monoids (k={a.k} vs k={b.k})")
    variant = Variant(variant)
    if max_steps is None:
        max_steps = (1 << a.k) + 4
    if max_steps < 2:
        raise ValueError("max_steps must be >= 2")
    terms = [a, b]
    while not (terms[-1] == terms[-2] and monoid_op(terms[-1], terms[-1], variant) == terms[-1]):
        if len(terms) >= max_steps:
            raise RuntimeError(
                f"sequence from ({a}, {b}) did not stabilize within {max_steps} terms"
            )
        terms.append(monoid_op(terms[-2], terms[-1], variant))
    limit = terms[-1]
    t = len(terms) - 1
    while t > 0 and terms[t - 1] == limit:
        t -= 1
    return FibTrace(tuple(terms), t, limit, variant)
