"""Exact arithmetic for rational quaternion algebras, quaternary quadratic
forms, integer quaternions, Fibonacci quaternions and a finite monoid."""

from .quaternion import AlgebraParams, BaseField, Quaternion, conj, inverse, mul, norm, trace

__version__ = "0.1.0"

__all__ = [
    "AlgebraParams",
    "BaseField",
    "Quaternion",
    "conj",
    "inverse",
    "mul",
    "norm",
    "trace",
]
