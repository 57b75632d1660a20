import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordergamma import demos
from ordergamma.errors import DegreeMismatch
from ordergamma.polynomials import (
    CharPolynomial,
    IntPolynomial,
    binomial_hstar,
    format_terms,
)
from ordergamma.reptheory.characters import ClassFunction

coeff_lists = st.lists(st.integers(-5, 5), max_size=6)


def test_basic_arithmetic():
    p = IntPolynomial([1, 1])
    assert p * p == [1, 2, 1]
    assert (p**3).coeffs == (1, 3, 3, 1)
    assert p - p == IntPolynomial()
    assert IntPolynomial([0, 0]).degree == -1
    assert IntPolynomial.geometric(4) == [1, 1, 1, 1]
    assert IntPolynomial.monomial(2, 5) == [0, 0, 5]
    assert p(2) == 3


def test_shift():
    p = IntPolynomial([0, 0, 1, 2])
    assert p.shift(-2) == [1, 2]
    assert p.shift(1) == [0, 0, 0, 1, 2]
    with pytest.raises(DegreeMismatch):
        p.shift(-3)


def test_palindromic():
    assert IntPolynomial([1, 4, 1]).is_palindromic()
    assert IntPolynomial([0, 1, 0]).is_palindromic(2)
    assert not IntPolynomial([1, 2]).is_palindromic()


def test_format():
    assert str(IntPolynomial([1, 38, 263])) == "1 + 38t + 263t^2"
    assert str(IntPolynomial([0, -1, 0, 1])) == "-t + t^3"
    assert format_terms([]) == "0"
    assert format_terms([(1, "1 + χ1")]) == "(1 + χ1)t"


def test_binomial_hstar_of_simplex_and_cube():
    # unit segment: counts m + 1
    assert binomial_hstar([m + 1 for m in range(3)], 1) == [1]
    # unit square: (m + 1)^2
    assert binomial_hstar([(m + 1) ** 2 for m in range(4)], 2) == [1, 1]


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    a, b, c = IntPolynomial(a), IntPolynomial(b), IntPolynomial(c)
    assert a * (b + c) == a * b + a * c
    assert (a * b)(3) == a(3) * b(3)
    assert a + b - b == a


def test_char_polynomial_operations():
    group = demos.d4_group()
    table = demos.d4_table()
    reg = ClassFunction.regular(group)
    p = CharPolynomial(group, [ClassFunction.trivial(group), reg])
    assert p.degree == 1
    assert p.at_identity() == [1, 8]
    q = p * IntPolynomial([1, 1])
    assert q.at_identity() == [1, 9, 8]
    assert [list(v.multiplicities) for v in p.decompose(table)] == [[1, 0, 0, 0, 0], [1, 1, 1, 1, 2]]
    assert (p - p).degree == -1
    assert p.shift(2).shift(-2) == p
    with pytest.raises(DegreeMismatch):
        p.shift(-1)
    assert p.is_effective()
    assert not (p * -1).is_effective()


def test_restrict_then_induce_of_trivial():
    group = demos.d4_group()
    from ordergamma.reptheory.perm import PermGroup

    trivial = PermGroup.trivial(8)
    one = CharPolynomial.one(group)
    assert one.restrict(trivial).induce(group) == CharPolynomial(group, [ClassFunction.regular(group)])


def test_to_json_shape():
    group = demos.d4_group()
    data = CharPolynomial.one(group).to_json()
    assert data["coefficients"] == [[1, 0, 0, 0, 0]]
    assert set(data) == {"irreducibles", "coefficients", "evaluations"}
