import itertools
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qfarith.integral import (
    V,
    Lattice,
    LatticePoint,
    SubringElement,
    count_residues,
    divide_with_scaled_remainder,
    hurwitz,
    is_prime_quaternion,
    is_right_congruent,
    is_unit,
    lipschitz,
    residue_system,
    right_divide,
    subring_norm,
    to_residue,
)
from qfarith.quaternion import HAMILTON, AlgebraParams, Quaternion, conj, inverse, mul, parse_quaternion

ALGEBRAS = [AlgebraParams(b, c) for b, c in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3), (2, 4), (2, 5)]]


def lp(text, params=HAMILTON):
    return LatticePoint(parse_quaternion(text, params))


def test_scaled_division_examples():
    g, t = divide_with_scaled_remainder(lp("e3"), lp("1+e2"))
    assert g.q == 0 and t.q == parse_quaternion("e3")
    y = lp("2+e2-e4")
    g, t = divide_with_scaled_remainder(y, y)
    assert t.q == 0 and g.q == y.norm()


def test_right_divide_examples():
    g, t = right_divide(lp("5"), lp("1+e2+e3"))
    assert g.q == parse_quaternion("2-2*e2-2*e3")
    assert t.q == -1
    g, t = right_divide(lp("0"), lp("1+e2+e3"))
    assert not g and not t
    g, t = right_divide(lp("1+e2+e3"), lp("1+e2+e3"))
    assert g.q == 1 and not t


def test_right_divide_restrictions():
    with pytest.raises(ValueError):
        right_divide(lp("3"), lp("1+e2"))
    with pytest.raises(ValueError):
        right_divide(lp("3", ALGEBRAS[1]), lp("1", ALGEBRAS[1]))
    with pytest.raises(ZeroDivisionError):
        divide_with_scaled_remainder(lp("3"), lp("0"))


coord = st.integers(-40, 40)
quad = st.tuples(coord, coord, coord, coord)


@given(quad, quad, st.sampled_from(ALGEBRAS))
def test_scaled_division_identity(x, y, params):
    if not any(y):
        return
    X, Y = lipschitz(*x, params=params), lipschitz(*y, params=params)
    g, t = divide_with_scaled_remainder(X, Y)
    n = Y.norm()
    assert n * X.q == mul(g.q, Y.q) + n * t.q
    assert t.norm() < n


@given(quad, quad)
def test_right_division_identity(x, y):
    Y = lipschitz(*y)
    if Y.norm() % 2 == 0:
        return
    X = lipschitz(*x)
    g, t = right_divide(X, Y)
    assert X.q == mul(g.q, Y.q) + t.q
    assert t.norm() < Y.norm()
    assert g.lattice is Lattice.LIPSCHITZ


def test_right_congruence_examples():
    phi = lp("1+e2+e3")
    assert is_right_congruent(lp("2+e4"), lp("2+e4"), phi)
    assert not is_right_congruent(lp("2"), lp("0"), phi)
    assert is_right_congruent(phi, lp("0"), phi)


def _congruent_oracle(x, y, phi):
    theta = mul((x.q - y.q), inverse(phi.q))
    return theta.is_integral()


def _class_count_oracle(phi, box):
    reps = []
    for c in itertools.product(range(box), repeat=4):
        x = lipschitz(*c)
        if not any(_congruent_oracle(x, r, phi) for r in reps):
            reps.append(x)
    return len(reps)


@pytest.mark.parametrize("phi", ["1+e2+e3", "1-e3+e4", "2+e2", "1+2*e4"])
def test_count_residues_matches_oracle(phi):
    phi = lp(phi)
    n = phi.norm()
    assert count_residues(phi, n) == n * n == _class_count_oracle(phi, n)


def test_count_residues_examples():
    assert count_residues(lp("1"), 1) == 1
    assert count_residues(lp("1+e2+e3"), 3) == 9
    with pytest.raises(ValueError):
        count_residues(lp("1+e2"), 2)


def test_unit_and_prime():
    assert is_unit(lp("1")) and not is_prime_quaternion(lp("1"))
    assert is_prime_quaternion(lp("1+e2+e3+2*e4"))
    assert not is_unit(lp("2")) and not is_prime_quaternion(lp("2"))
    assert is_unit(V.to_lattice_point())


def test_hurwitz_validation():
    h = Fraction(1, 2)
    hurwitz(h, h, -h, 3 * h)
    with pytest.raises(ValueError):
        hurwitz(h, 1, 0, 0)
    with pytest.raises(ValueError):
        LatticePoint(Quaternion((h, h, h, h), AlgebraParams(1, 2)), Lattice.HURWITZ)
    with pytest.raises(ValueError):
        lipschitz(h, 0, 0, 0)


half_or_int = st.tuples(st.booleans(), quad)


def _hurwitz_from(flag, c):
    return hurwitz(*(Fraction(2 * x + 1, 2) if flag else x for x in c))


@given(half_or_int, half_or_int)
def test_hurwitz_closed_under_ring_ops(a, b):
    x, y = _hurwitz_from(*a), _hurwitz_from(*b)
    for z in (x + y, x - y, x * y):
        assert z.lattice is Lattice.HURWITZ
        assert isinstance(z.norm(), int)


# --- subring Z[v] ---


def test_v_minimal_polynomial():
    v = V.to_quaternion()
    assert mul(v, v) == v - 1
    assert V * V == V - 1


def test_subring_norm_examples():
    assert subring_norm(-1, 2) == 3
    assert subring_norm(1, 2) == 7
    assert subring_norm(0, 0) == 0


sub = st.builds(SubringElement, st.integers(-200, 200), st.integers(-200, 200))


@given(sub, sub)
def test_subring_matches_quaternions(a, b):
    assert (a * b).to_quaternion() == mul(a.to_quaternion(), b.to_quaternion())
    assert (a + b).to_quaternion() == a.to_quaternion() + b.to_quaternion()
    assert a.conj().to_quaternion() == conj(a.to_quaternion())
    assert a.norm() == a.to_lattice_point().norm()
    assert (a * b).norm() == a.norm() * b.norm()
    assert a * b == b * a


@given(sub)
def test_subring_text_roundtrip(a):
    assert SubringElement.parse(str(a)) == a


def test_subring_parse():
    P = SubringElement.parse
    assert P("-1+2v") == SubringElement(-1, 2)
    assert P("1+2*v") == SubringElement(1, 2)
    assert P("2v") == SubringElement(0, 2)
    assert P("-v") == SubringElement(0, -1)
    assert P("3") == SubringElement(3, 0)
    assert P("-1,2") == SubringElement(-1, 2)
    for bad in ["", "v+1", "1+", "x"]:
        with pytest.raises(ValueError):
            P(bad)


def test_residue_system_examples():
    rs = residue_system(SubringElement(-1, 2))
    assert rs.representatives == (SubringElement(0, 0), SubringElement(1, 0), V)
    rs7 = residue_system(SubringElement(1, 2))
    assert rs7.size == 7
    assert rs7.int_map(2) == V - 1
    assert residue_system(SubringElement(1, 1)).size == 3


def test_to_residue_examples():
    phi = SubringElement(-1, 2)
    assert to_residue(SubringElement(2, 0), phi) == 2
    assert to_residue(SubringElement(0, 0), phi) == 0
    assert to_residue(phi, phi) == 0


def test_residue_listing_congruent_to_worked_example():
    # the worked listing for modulus 1+2v pairs 0..6 with these elements
    listing = [(0, 0), (1, 0), (-1, 1), (0, 1), (1, 1), (-1, 2), (0, 2)]
    phi = SubringElement(1, 2)
    rs = residue_system(phi)
    for m, ab in enumerate(listing):
        elem = SubringElement(*ab)
        assert (rs.int_map(m) - elem).is_divisible_by(phi)
        assert to_residue(elem, phi) == m


def test_residue_system_rejects():
    for bad in [SubringElement(2, 4), SubringElement(1, 0), SubringElement(0, 0)]:
        with pytest.raises(ValueError):
            residue_system(bad)


def _primitive_moduli(max_norm):
    out = []
    for a in range(-8, 9):
        for b in range(-8, 9):
            if math.gcd(a, b) == 1 and 1 < subring_norm(a, b) <= max_norm:
                out.append(SubringElement(a, b))
    return out


@pytest.mark.parametrize("phi", _primitive_moduli(30), ids=str)
def test_residue_ring_isomorphic_to_integers_mod_n(phi):
    rs = residue_system(phi)
    n = rs.size
    assert n == phi.norm()
    for m, r in enumerate(rs.representatives):
        assert r.norm() < n
        assert (r - m).is_divisible_by(phi)
        assert rs.to_residue(r) == m
    for a in range(n):
        for b in range(n):
            ra, rb = rs.int_map(a), rs.int_map(b)
            assert rs.reduce(ra + rb) == rs.int_map((a + b) % n)
            assert rs.reduce(ra * rb) == rs.int_map(a * b % n)


@given(sub, st.sampled_from(_primitive_moduli(50)))
def test_to_residue_is_ring_hom(q, phi):
    rs = residue_system(phi)
    m = to_residue(q, phi)
    assert 0 <= m < rs.size
    assert (q - m).is_divisible_by(phi)
    rng = random.Random(q.alpha * 1000 + q.beta)
    p = SubringElement(rng.randint(-50, 50), rng.randint(-50, 50))
    n = rs.size
    assert to_residue(q * p, phi) == m * to_residue(p, phi) % n
    assert to_residue(q + p, phi) == (m + to_residue(p, phi)) % n
