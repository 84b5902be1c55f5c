import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qfarith.forms import (
    CLASSICAL_FORMS,
    NORM_FORM_PAIRS,
    NORM_FORMS,
    FormTuple,
    Variant,
    compose,
    form_value,
    represent,
    represent_rational,
    verify_universal,
)
from qfarith.quaternion import AlgebraParams, Quaternion, mul


def _naive_first(n, f):
    a, b, c, d = f
    r = int(n**0.5) + 1
    for x4, x3, x2, x1 in itertools.product(range(r), repeat=4):
        if a * x1 * x1 + b * x2 * x2 + c * x3 * x3 + d * x4 * x4 == n:
            return (x1, x2, x3, x4)
    return None


def test_represent_examples():
    assert represent(1, FormTuple(1, 1, 2, 2)) == (1, 0, 0, 0)
    assert represent(7, FormTuple(1, 1, 3, 3)) == (2, 0, 1, 0)
    assert represent(3, FormTuple(1, 2, 5, 10)) == (1, 1, 0, 0)
    assert represent(0, FormTuple(1, 1, 1, 1)) == (0, 0, 0, 0)
    assert represent(7, FormTuple(1, 1, 1, 16)) is None


@pytest.mark.parametrize("f", [FormTuple(1, 1, 1, 1), FormTuple(1, 2, 5, 10), FormTuple(1, 1, 1, 16), FormTuple(2, 3, 5, 7)])
def test_represent_matches_naive_order(f):
    for n in range(0, 120):
        assert represent(n, f) == _naive_first(n, f), n


@given(st.integers(0, 5000), st.sampled_from(NORM_FORMS + CLASSICAL_FORMS))
def test_represent_is_valid(n, f):
    rep = represent(n, f)
    assert rep is not None
    assert form_value(f, rep) == n


def test_form_tuple_parse():
    assert FormTuple.parse("1, 2,5,10") == FormTuple(1, 2, 5, 10)
    for bad in ["1,2,3", "1,2,3,0", "a,b,c,d", "1,2,3,-4"]:
        with pytest.raises(ValueError):
            FormTuple.parse(bad)


def _naive_least_missing(f, limit):
    for n in range(1, limit + 1):
        if _naive_first(n, f) is None:
            return n
    return None


@pytest.mark.parametrize("f", [FormTuple(1, 1, 1, 16), FormTuple(1, 1, 1, 1), FormTuple(1, 2, 3, 5), FormTuple(2, 2, 3, 5), FormTuple(1, 1, 1, 7)])
def test_verify_universal_against_naive(f):
    res = verify_universal(f, 150)
    want = _naive_least_missing(f, 150)
    assert res.universal == (want is None)
    assert res.counterexample == want


def test_verify_universal_examples():
    assert verify_universal(FormTuple(1, 2, 5, 10), 1000)
    assert verify_universal(FormTuple(1, 1, 1, 1), 1000)
    res = verify_universal(FormTuple(1, 1, 1, 16), 100)
    assert not res.universal
    # 7 is not a sum of three squares and 16 x4^2 > 7 unless x4 = 0
    assert res.counterexample == 7
    assert represent(15, FormTuple(1, 1, 1, 16)) is None


def test_all_listed_forms_universal_to_thousand():
    assert len(NORM_FORMS) == 7 and len(CLASSICAL_FORMS) == 11
    for f in NORM_FORMS + CLASSICAL_FORMS:
        assert verify_universal(f, 1000).universal, f


def test_represent_rational_examples():
    assert represent_rational(Fraction(1, 2), 1, 2) == (Fraction(1, 2), Fraction(1, 2), 0, 0)
    assert represent_rational(Fraction(4), 1, 1) == (2, 0, 0, 0)
    # 15 = 3^2 + 3 + 3 first in search order, then divide by 3
    assert represent_rational(Fraction(5, 3), 1, 3) == (1, 0, Fraction(1, 3), Fraction(1, 3))


@given(st.integers(1, 2000), st.integers(1, 2000), st.sampled_from(NORM_FORM_PAIRS))
def test_represent_rational_valid(p, q, bc):
    b, c = bc
    m = Fraction(p, q)
    rep = represent_rational(m, b, c)
    assert form_value((1, b, c, b * c), rep) == m


def test_represent_rational_rejects():
    with pytest.raises(ValueError):
        represent_rational(Fraction(1, 2), 1, 7)
    with pytest.raises(ValueError):
        represent_rational(Fraction(-1, 2), 1, 1)


def _q(x):
    return form_value((1, 1, 2, 2), x)


def test_compose_examples():
    assert compose((1, 0, 0, 0), (3, -1, 4, 1)) == (3, -1, 4, 1)
    u = compose((0, 2, 1, 0), (1, 0, 1, 0), Variant.PRODUCT)
    assert u == (-2, 2, 1, 2) and _q(u) == 18
    w = compose((0, 2, 1, 0), (1, 0, 1, 0), Variant.CONJUGATED)
    assert w == (2, -2, -1, 2) and _q(w) == 18


vec = st.tuples(*[st.integers(-10**4, 10**4)] * 4)


@given(vec, vec)
def test_compose_laws(x, y):
    H = AlgebraParams(1, 2)
    u = compose(x, y, Variant.PRODUCT)
    assert u == mul(Quaternion(x, H), Quaternion(y, H)).coords
    for variant in Variant:
        assert _q(compose(x, y, variant)) == _q(x) * _q(y)
    # the companion law is a product of sign-flipped operands with e4 negated
    xs = Quaternion((x[0], -x[1], -x[2], x[3]), H)
    ys = Quaternion((y[0], y[1], y[2], -y[3]), H)
    p = mul(xs, ys).coords
    assert compose(x, y, Variant.CONJUGATED) == (p[0], p[1], p[2], -p[3])
