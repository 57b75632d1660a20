import cmath
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordergamma.reptheory.cyclotomic import (
    Cyclotomic,
    coefficient_vector,
    conj,
    cyclotomic_polynomial,
    from_coefficient_vector,
    is_rational,
)


def _approx(x):
    return x.to_complex() if isinstance(x, Cyclotomic) else complex(x)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_roots_of_unity_sum_to_zero():
    for n in (2, 3, 4, 5, 6, 8, 12):
        total = sum((Cyclotomic.zeta(n, k) for k in range(n)), 0)
        assert total == 0


def test_cube_root_relations():
    w = Cyclotomic.zeta(3)
    assert w * w * w == 1
    assert 1 + w + w * w == 0
    assert conj(w) == w * w
    assert is_rational(w * conj(w))


def test_mixed_fields_lift_to_common_order():
    i = Cyclotomic.zeta(4)
    w = Cyclotomic.zeta(3)
    x = i * w
    assert isinstance(x, Cyclotomic) and x.n % 12 == 0
    assert abs(_approx(x) - 1j * cmath.exp(2j * cmath.pi / 3)) < 1e-12
    assert i * i == -1


def test_rational_results_normalise():
    i = Cyclotomic.zeta(4)
    assert (i * conj(i)) == 1
    assert isinstance((i * conj(i)), int | Fraction)
    assert (i + conj(i)) == 0


def test_division_by_integer():
    w = Cyclotomic.zeta(5)
    assert (w + w) / 2 == w


def test_coefficient_vector_round_trip():
    w = Cyclotomic.zeta(5, 2) + Fraction(1, 3)
    v = coefficient_vector(w, 5)
    assert from_coefficient_vector(5, v) == w


def test_unhashable():
    with pytest.raises(TypeError):
        hash(Cyclotomic.zeta(3))


orders = st.sampled_from([3, 4, 5, 6, 8, 12])


@st.composite
def elements(draw):
    n = draw(orders)
    powers = draw(st.dictionaries(st.integers(0, n - 1), st.integers(-3, 3), max_size=4))
    return Cyclotomic.from_powers(n, powers)


@given(elements(), elements(), elements())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert abs(_approx(a * b) - _approx(a) * _approx(b)) < 1e-9


@given(elements())
def test_conjugation_matches_complex(a):
    assert abs(_approx(conj(a)) - _approx(a).conjugate()) < 1e-9
    assert is_rational(a * conj(a)) or abs(_approx(a * conj(a)).imag) < 1e-9
