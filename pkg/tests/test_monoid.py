import itertools

import pytest

from qfarith.monoid import MonoidElement, Variant, fib_sequence, monoid_op


def y(i, k=3):
    return MonoidElement(k, i)


def elements(k):
    return [MonoidElement(k, i) for i in range(1 << k)]


def test_op_examples():
    for v in Variant:
        assert monoid_op(y(1), y(2), v) == y(3)
        assert monoid_op(y(3), y(6), v) == y(7)
        assert monoid_op(y(3), y(6), v).is_one
    assert monoid_op(y(1), y(1), Variant.TRUNCATED_ADD) == y(2)
    assert monoid_op(y(1), y(1), Variant.COMPONENTWISE_OR) == y(1)


def test_element_validation():
    with pytest.raises(ValueError):
        MonoidElement(3, 8)
    with pytest.raises(ValueError):
        MonoidElement(0, 0)
    with pytest.raises(ValueError):
        monoid_op(y(1, 2), y(1, 3))


def test_rendering_and_bits():
    assert str(y(0)) == "0" and str(y(7)) == "1" and str(y(5)) == "y5"
    assert y(6).bits() == (1, 1, 0)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
@pytest.mark.parametrize("variant", list(Variant))
def test_monoid_laws(k, variant):
    els = elements(k)
    zero = els[0]
    for a in els:
        assert monoid_op(a, zero, variant) == a
        for b in els:
            ab = monoid_op(a, b, variant)
            assert ab == monoid_op(b, a, variant)
            assert ab >= max(a, b)
            for c in els:
                assert monoid_op(ab, c, variant) == monoid_op(a, monoid_op(b, c, variant), variant)


def test_componentwise_or_is_product_of_two_element_monoids():
    # each factor {o < x}: o*o = o, o*x = x*o = x*x = x
    k = 3
    for a, b in itertools.product(elements(k), repeat=2):
        bits = tuple(p | q for p, q in zip(a.bits(), b.bits()))
        assert monoid_op(a, b, Variant.COMPONENTWISE_OR).bits() == bits


def test_fib_sequence_examples():
    tr = fib_sequence(y(2), y(4))
    assert [t.index for t in tr.terms[:5]] == [2, 4, 6, 7, 7]
    assert tr.t == 3 and tr.limit.is_one
    tr = fib_sequence(y(0), y(0))
    assert tr.t == 0 and tr.limit.is_zero
    tr = fib_sequence(y(1), y(1))
    assert [t.index for t in tr.terms[:7]] == [1, 1, 2, 3, 5, 7, 7]
    assert tr.t == 5 and tr.limit.is_one


def _naive_trace(a, b, variant, length=80):
    seq = [a, b]
    while len(seq) < length:
        seq.append(monoid_op(seq[-2], seq[-1], variant))
    last = seq[-1]
    t = len(seq) - 1
    while t > 0 and seq[t - 1] == last:
        t -= 1
    return seq, t, last


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6])
@pytest.mark.parametrize("variant", list(Variant))
def test_stationarity_exhaustive(k, variant):
    for a, b in itertools.product(elements(k), repeat=2):
        tr = fib_sequence(a, b, variant)
        assert len(tr.terms) <= (1 << k) + 4
        for i in range(len(tr.terms) - 2):
            assert tr.terms[i + 2] == monoid_op(tr.terms[i], tr.terms[i + 1], variant)
        seq, t, last = _naive_trace(a, b, variant)
        assert (tr.t, tr.limit) == (t, last)
        if variant is Variant.TRUNCATED_ADD and not a.is_zero and not b.is_zero:
            assert tr.limit.is_one
        if variant is Variant.COMPONENTWISE_OR:
            assert tr.limit.index == a.index | b.index
            assert tr.t <= 2


def test_max_steps_guard():
    with pytest.raises(ValueError):
        fib_sequence(y(1), y(1), max_steps=1)
    with pytest.raises(RuntimeError):
        fib_sequence(y(1), y(1), max_steps=3)


def test_trace_json():
    data = fib_sequence(y(2), y(4)).to_json()
    assert data["terms"] == ["y2", "y4", "y6", "1", "1"]
    assert data["t"] == 3 and data["limit"] == "1"
