import pytest

from ordergamma import demos
from ordergamma.ehrhart import equivariant_hstar, generic_equivariant_hstar
from ordergamma.errors import (
    DegreeMismatch,
    GuardExceeded,
    NotOneGraded,
    NotPalindromic,
)
from ordergamma.gamma import (
    GammaPolynomial,
    cube_gamma,
    cube_gamma_multiplicities,
    effectiveness_report,
    eulerian_gamma,
    eulerian_polynomial,
    gamma_extract,
    gamma_extract_int,
    gamma_from_hstar,
    gamma_reconstruct_int,
    gamma_via_saturations,
    gamma_via_saturations_detailed,
    tableau_data,
)
from ordergamma.polynomials import CharPolynomial, IntPolynomial
from ordergamma.poset import antichain, chain
from ordergamma.reptheory.characters import ClassFunction, character_table
from ordergamma.reptheory.perm import PermGroup, YoungGroup


def test_integer_gamma():
    assert gamma_extract_int(IntPolynomial([1, 4, 1]), 2) == [1, 2]
    assert gamma_extract_int(IntPolynomial([1, 1]) ** 5, 5) == [1]
    assert gamma_reconstruct_int(IntPolynomial([1, 2]), 2) == [1, 4, 1]
    with pytest.raises(NotPalindromic):
        gamma_extract_int(IntPolynomial([1, 2]), 1)


def test_eulerian_gamma():
    assert eulerian_gamma(1) == [1]
    assert eulerian_gamma(3) == [1, 2]
    for d in range(1, 8):
        assert eulerian_gamma(d) == gamma_extract_int(eulerian_polynomial(d), d - 1)


def test_eulerian_polynomial_by_count():
    assert eulerian_polynomial(3) == [1, 4, 1]
    assert eulerian_polynomial(4) == [1, 11, 11, 1]


def _names(gamma):
    table = character_table(gamma.group)
    return [v.named() for v in gamma.virtual(table)]


def test_cube_gamma_small_cases():
    assert _names(cube_gamma(3)) == [{"χ^(3)": 1}, {"χ^(2,1)": 1}]
    assert _names(cube_gamma(4)) == [{"χ^(4)": 1}, {"χ^(3,1)": 2, "χ^(2,2)": 1}]
    assert _names(cube_gamma(5)) == [
        {"χ^(5)": 1},
        {"χ^(4,1)": 3, "χ^(3,2)": 2},
        {"χ^(3,2)": 1, "χ^(3,1,1)": 1, "χ^(2,2,1)": 1},
    ]


@pytest.mark.parametrize("d", range(1, 8))
def test_cube_gamma_matches_extraction(d):
    lp = antichain([f"a{i}" for i in range(d)])
    group = YoungGroup(d, [range(d)])
    from ordergamma.ehrhart import saturation_hstar

    h = saturation_hstar([tuple(range(d))], [], d)
    assert gamma_extract(h, d - 1) == cube_gamma(d)
    # at the identity the cube gamma counts permutations by the same rule
    assert cube_gamma(d).at_identity() == eulerian_gamma(d)
    assert len(lp) == d and group.order > 0


def test_cube_gamma_against_equivariant_hstar():
    for d in (2, 3, 4):
        lp = antichain([f"a{i}" for i in range(d)])
        g = PermGroup.symmetric(d)
        via = gamma_from_hstar(lp, g)
        cube = cube_gamma(d)
        for k, u in enumerate(g.classes):
            assert [c(u) for c in via.coefficients] == [c.values[cube.group.class_index(u)] for c in cube.coefficients]


def test_tableau_data_counts():
    data = tableau_data(4)
    assert len(data) == 10
    assert sum(1 for t in data if t.admissible) == sum(sum(m.values()) for m in cube_gamma_multiplicities(4))


def test_cube_guard():
    with pytest.raises(GuardExceeded):
        cube_gamma_multiplicities(9)


def test_cross_polytope_counterexample():
    g = PermGroup.symmetric(3)
    h = generic_equivariant_hstar(demos.octahedron(), g)
    gamma = gamma_extract(h, 3)
    table = character_table(g)
    assert [v.named() for v in gamma.virtual(table)] == [{"1": 1}, {"1": -2, "χ^(2,1)": 1}]
    assert not gamma.is_effective()
    assert gamma.at_identity() == [1, 0]


def test_gamma_extract_errors():
    g = PermGroup.symmetric(2)
    one = ClassFunction.trivial(g)
    p = CharPolynomial(g, [one, one * 2])
    with pytest.raises(NotPalindromic):
        gamma_extract(p, 1)
    with pytest.raises(DegreeMismatch):
        gamma_extract(CharPolynomial(g, [one, one, one]), 1)


def test_gamma_round_trip():
    g = PermGroup.symmetric(3)
    h = equivariant_hstar(antichain(list("abc")), g)
    gamma = gamma_extract(h, 2)
    assert gamma.reconstruct() == h
    assert isinstance(gamma, GammaPolynomial)


# gamma of the dihedral example, multiplicities over (1, χ1, χ2, χ3, χ4)
FIG1_GAMMA = [[1, 0, 0, 0, 0], [5, 1, 5, 5, 8], [16, 16, 14, 14, 30], [4, 4, 4, 4, 8]]


def test_fig1_gamma():
    lp, group, table = demos.d4_poset(), demos.d4_group(), demos.d4_table()
    via = gamma_via_saturations(lp, group)
    assert [list(v.multiplicities) for v in via.virtual(table)] == FIG1_GAMMA
    assert via == gamma_from_hstar(lp, group)
    assert via.is_effective()


def test_fig1_orbit_contributions():
    lp, group, table = demos.d4_poset(), demos.d4_group(), demos.d4_table()
    detailed = gamma_via_saturations_detailed(lp, group)
    reg = [1, 1, 1, 1, 2]
    got = [[list(table.decompose(c).multiplicities) for c in o.contribution.coeffs] for o in detailed.orbits]
    zero = [0] * 5
    assert got[0] == [[1, 0, 0, 0, 0], [2, 0, 3, 3, 4], [9, 9, 7, 7, 16]]
    assert got[1] == [zero, reg, [4 * x for x in reg], [4 * x for x in reg]]
    assert got[2] == [zero, [1, 0, 0, 1, 1], reg]
    assert got[3] == [zero, [1, 0, 1, 0, 1], reg]
    assert got[4] == [zero, zero, reg]
    assert [o.shift for o in detailed.orbits] == [0, 1, 1, 1, 2]


def test_report_fields():
    report = effectiveness_report(demos.d4_poset(), demos.d4_group(), demos.d4_table())
    assert report["gamma"] == FIG1_GAMMA
    assert report["effective"] and report["verified_against_hstar"]
    assert report["irreducibles"] == ["1", "χ1", "χ2", "χ3", "χ4"]
    assert [o["orbit_size"] for o in report["orbits"]] == [1, 8, 4, 4, 8]
    assert report["orbits"][2]["contribution_text"] == "(1 + χ3 + χ4)t + (1 + χ1 + χ2 + χ3 + 2χ4)t^2"


def test_two_chain_and_antichain():
    two = chain(["a", "b"])
    report = effectiveness_report(two, PermGroup.trivial(2))
    assert report["gamma"] == [[1]] and report["effective"]
    for d in (2, 3, 4):
        lp = antichain([f"a{i}" for i in range(d)])
        g = PermGroup.symmetric(d)
        assert gamma_via_saturations(lp, g) == gamma_from_hstar(lp, g)


def test_requires_one_graded():
    with pytest.raises(NotOneGraded):
        gamma_via_saturations(chain(["a", "b"], [-1]), PermGroup.trivial(2))
    # a < b < c and a < d is consistent but not graded
    from ordergamma.poset import FinitePoset, analyze

    lp = analyze(FinitePoset(list("abcd"), [("a", "b"), ("b", "c"), ("a", "d")]))
    with pytest.raises(NotOneGraded):
        gamma_from_hstar(lp, PermGroup.trivial(4))


def test_all_one_graded_small_posets_are_gamma_effective():
    from generators import graded_posets

    from ordergamma.poset import automorphism_group

    for lp in graded_posets(5):
        g = automorphism_group(lp)
        gamma = gamma_via_saturations(lp, g)
        assert gamma.is_effective()
        assert all(c >= 0 for c in gamma.at_identity())
        assert gamma.at_identity()[0] == 1
