import itertools
import math

import pytest

from ordergamma import demos
from ordergamma.ehrhart import (
    Inequality,
    LatticePolytopeHRep,
    count_points,
    count_points_bruteforce,
    cross_polytope,
    dilate_counts,
    equivariant_hstar,
    equivariant_hstar_bruteforce,
    evaluation_at,
    generic_equivariant_hstar,
    hstar,
    hstar_linear_extensions,
    hstar_via_saturations,
    numerator_from_series,
    parity_shift_exponent,
)
from ordergamma.errors import (
    GroupDoesNotPreserve,
    NotAnAutomorphism,
    NotASubgroupOfAut,
    NotConsistent,
    TruncationUnstable,
    Unbounded,
)
from ordergamma.polynomials import IntPolynomial
from ordergamma.poset import FinitePoset, analyze, antichain, chain, to_parity_form
from ordergamma.reptheory.perm import PermGroup, from_cycles, power


def _desc_eulerian(d):
    """Descent enumeration over all permutations (independent of the poset code)."""
    coeffs = [0] * d
    for w in itertools.permutations(range(d)):
        coeffs[sum(w[i] > w[i + 1] for i in range(d - 1))] += 1
    return IntPolynomial(coeffs)


def test_count_points_small():
    two = chain(["a", "b"])
    assert count_points(two, 2) == 6
    assert count_points(antichain(list("abc")), 1) == 8
    assert count_points(chain(["a", "b"], [-1]), 2) == 3
    assert count_points(two, 0) == 1


def test_count_points_fixed():
    lp = antichain(list("abc"))
    cyc = from_cycles(3, [(0, 1, 2)])
    # fixed points of a 3-cycle are the constant maps
    assert [count_points(lp, m, cyc) for m in range(4)] == [1, 2, 3, 4]
    with pytest.raises(NotAnAutomorphism):
        count_points_bruteforce(chain(list("ab")), 1, (1, 0))


def test_fig1_counts_match_brute_force():
    lp = demos.d4_poset()
    for g in demos.d4_class_representatives():
        for m in range(3):
            assert count_points(lp, m, g) == count_points_bruteforce(lp, m, g)


@pytest.mark.parametrize("d", range(1, 7))
def test_antichain_hstar_is_eulerian(d):
    assert hstar(antichain([f"a{i}" for i in range(d)])) == _desc_eulerian(d)


def test_hstar_examples():
    assert hstar(antichain(list("abc"))) == [1, 4, 1]
    assert hstar(chain(["a", "b"])) == [1]
    lp = demos.d4_poset()
    h = hstar(lp)
    assert h == [1, 38, 263, 484, 263, 38, 1]
    assert h == hstar_linear_extensions(lp)
    assert h.degree == len(lp) - lp.grade_value - 1 and h.is_palindromic()


def test_fig1_linear_extension_count():
    lp = demos.d4_poset()
    covers = [(lp.poset.index[a], lp.poset.index[b]) for a, b in demos.D4_COVERS]
    count = sum(
        1
        for w in itertools.permutations(range(8))
        if all(w.index(a) < w.index(b) for a, b in covers)
    )
    assert count == hstar(lp)(1) == 1088


def test_hstar_requires_consistency():
    p = FinitePoset(list("abc"), [("a", "c"), ("b", "c")])
    with pytest.raises(NotConsistent):
        hstar(analyze(p, {("a", "c"): 1, ("b", "c"): -1}))


def test_evaluation_at_rotation():
    lp = demos.d4_poset()
    assert evaluation_at(lp, demos.SIGMA) == IntPolynomial.geometric(4) ** 2
    assert evaluation_at(lp, power(demos.SIGMA, 2)) == IntPolynomial([1, 1]) ** 6


# multiplicities over (1, χ1, χ2, χ3, χ4), computed by the quotient formula and
# confirmed by the fixed-point series and by the saturation sum
FIG1_HSTAR = [
    [1, 0, 0, 0, 0],
    [11, 1, 5, 5, 8],
    [51, 20, 34, 34, 62],
    [86, 42, 62, 62, 116],
    [51, 20, 34, 34, 62],
    [11, 1, 5, 5, 8],
    [1, 0, 0, 0, 0],
]


def test_fig1_equivariant_hstar():
    lp, group, table = demos.d4_poset(), demos.d4_group(), demos.d4_table()
    h = equivariant_hstar(lp, group)
    assert [list(v.multiplicities) for v in h.decompose(table)] == FIG1_HSTAR
    assert h == equivariant_hstar_bruteforce(lp, group)
    assert h == hstar_via_saturations(lp, group)
    assert h.at_identity() == hstar(lp)
    assert h.is_palindromic(6) and h.is_effective()


def test_cube_under_full_symmetric_group():
    lp = antichain(list("abc"))
    s3 = PermGroup.symmetric(3)
    h = equivariant_hstar(lp, s3)
    from ordergamma.reptheory.characters import character_table

    table = character_table(s3)
    std = table.index("χ^(2,1)")
    one = table.index("1")
    chi = table[std]
    expected = IntPolynomial([1, 1]) ** 2
    for k, g in enumerate(s3.classes):
        assert h.evaluate(g) == expected * table[one].values[k] + IntPolynomial([0, chi.values[k]])
    assert h == hstar_via_saturations(lp, s3)


def test_trivial_group_and_chain():
    lp = demos.d4_poset()
    h = equivariant_hstar(lp, PermGroup.trivial(8))
    assert h.at_identity() == hstar(lp)
    two = chain(["a", "b"])
    assert equivariant_hstar_bruteforce(two, PermGroup.trivial(2)).at_identity() == hstar(two) == [1]
    assert hstar_via_saturations(two, PermGroup.trivial(2)).at_identity() == [1]


def test_group_must_preserve_labels():
    with pytest.raises(NotASubgroupOfAut):
        equivariant_hstar(demos.d4_poset(), PermGroup(8, [from_cycles(8, [(0, 4)])]))


def test_numerator_truncation_guard():
    # unit segment: counts m + 1, identity acting on one coordinate
    assert numerator_from_series([1, 2, 3, 4, 5], [1], 1) == [1]
    with pytest.raises(TruncationUnstable):
        numerator_from_series([1, 2, 3], [1], 1)
    with pytest.raises(TruncationUnstable):
        numerator_from_series([1, 3, 9, 27, 81], [1], 2)


def test_parity_shift_exponent():
    # chain a < b < c with +1 labels has grade value 2; its parity form has grade value 0
    assert parity_shift_exponent(chain(list("abc"))) == (0 - 2) // 2
    assert parity_shift_exponent(demos.d4_poset()) == 0
    lp = chain(list("abc"))
    assert equivariant_hstar(lp, PermGroup.trivial(3)) == equivariant_hstar(
        to_parity_form(lp), PermGroup.trivial(3)
    ).shift(parity_shift_exponent(lp))


def test_cross_polytope():
    octa = cross_polytope(3)
    assert len(octa.points(1)) == 7
    assert len(octa.points(2)) == 25
    h = generic_equivariant_hstar(octa, PermGroup.symmetric(3))
    assert h.at_identity() == IntPolynomial([1, 1]) ** 3
    from ordergamma.reptheory.characters import character_table

    table = character_table(PermGroup.symmetric(3))
    mults = [v.named() for v in h.decompose(table)]
    assert mults == [{"1": 1}, {"1": 1, "χ^(2,1)": 1}, {"1": 1, "χ^(2,1)": 1}, {"1": 1}]


def test_unit_segment():
    seg = LatticePolytopeHRep(1, (Inequality((1,), 1), Inequality((-1,), 0)))
    assert generic_equivariant_hstar(seg, PermGroup.trivial(1)).at_identity() == [1]


def test_order_polytope_through_generic_path():
    # order polytope of the V poset a < c, b < c: 0 <= x_c <= x_a, x_b <= 1 (reversed order)
    rows = (
        Inequality((1, 0, 0), 1),
        Inequality((0, 1, 0), 1),
        Inequality((0, 0, -1), 0),
        Inequality((-1, 0, 1), 0),
        Inequality((0, -1, 1), 0),
    )
    poly = LatticePolytopeHRep(3, rows)
    swap = PermGroup(3, [from_cycles(3, [(0, 1)])])
    v = analyze(FinitePoset(list("abc"), [("a", "c"), ("b", "c")]))
    generic = generic_equivariant_hstar(poly, swap)
    direct = equivariant_hstar(v, PermGroup(3, [from_cycles(3, [(0, 1)])]))
    assert generic.evaluations() == direct.evaluations()


def test_generic_path_errors():
    octa = cross_polytope(3)
    with pytest.raises(GroupDoesNotPreserve):
        generic_equivariant_hstar(octa, PermGroup.symmetric(2))
    half = LatticePolytopeHRep(1, (Inequality((1,), 1),))
    with pytest.raises(Unbounded):
        half.bounding_box()
    skew = LatticePolytopeHRep(
        2, (Inequality((1, 0), 2), Inequality((-1, 0), 0), Inequality((0, 1), 1), Inequality((0, -1), 0))
    )
    with pytest.raises(GroupDoesNotPreserve):
        generic_equivariant_hstar(skew, PermGroup.symmetric(2))


def test_dilate_counts_are_polynomial_in_m():
    lp = demos.d4_poset()
    counts = dilate_counts(lp, 10)
    h = hstar(lp)
    # Ehrhart polynomial from h*: sum_i h_i binom(m + n - i, n)
    for m, c in enumerate(counts):
        assert c == sum(h[i] * math.comb(m + 8 - i, 8) for i in range(7))
