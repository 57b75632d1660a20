"""Gamma expansions of palindromic polynomials and the saturation formula for them."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import permutations
from math import comb

from .ehrhart import equivariant_hstar
from .errors import DegreeMismatch, GuardExceeded, NotOneGraded, NotPalindromic
from .polynomials import CharPolynomial, IntPolynomial, format_terms
from .poset import (
    LabeledPoset,
    check_subgroup_of_aut,
    saturation_orbits,
    to_parity_form,
)
from .reptheory.characters import (
    CharacterTable,
    ClassFunction,
    Group,
    VirtualCharacter,
    character_table,
)
from .reptheory.perm import PermGroup, YoungGroup, partitions
from .reptheory.symmetric import standard_tableaux, tableau_descents

CUBE_GUARD = 8


def _gamma_coefficients(f, s: int, zero, sub, scale):
    """Back-substitution ``g_j = f_j - sum_{i<j} g_i C(s - 2i, j - i)``."""
    gammas = []
    for j in range(s // 2 + 1):
        acc = f(j)
        for i, g in enumerate(gammas):
            c = comb(s - 2 * i, j - i)
            if c:
                acc = sub(acc, scale(g, c))
        gammas.append(acc)
    return gammas


def gamma_extract_int(p: IntPolynomial, s: int) -> IntPolynomial:
    """Gamma vector of an integer polynomial palindromic of degree ``s``."""
    if p.degree > s:
        raise DegreeMismatch(f"degree {p.degree} exceeds {s}")
    if not p.is_palindromic(s):
        raise NotPalindromic(f"{p} is not palindromic of degree {s}")
    g = _gamma_coefficients(lambda j: p[j], s, 0, lambda a, b: a - b, lambda a, c: a * c)
    out = IntPolynomial(g)
    if gamma_reconstruct_int(out, s) != p:
        raise AssertionError("gamma expansion does not reconstruct its source")
    return out


def gamma_reconstruct_int(g: IntPolynomial, s: int) -> IntPolynomial:
    total = IntPolynomial()
    for i, c in enumerate(g.coeffs):
        total = total + IntPolynomial.monomial(i, c) * IntPolynomial([1, 1]) ** (s - 2 * i)
    return total


@dataclass
class GammaPolynomial:
    """``sum_i gamma_i t^i`` with ``f = sum_i gamma_i t^i (1 + t)^(s - 2i)``."""

    group: Group
    coefficients: list[ClassFunction]
    degree_s: int

    @property
    def center(self) -> Fraction:
        return Fraction(self.degree_s, 2)

    def __getitem__(self, i: int) -> ClassFunction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return ClassFunction.constant(self.group, 0)

    def as_char_polynomial(self) -> CharPolynomial:
        return CharPolynomial(self.group, self.coefficients)

    def reconstruct(self) -> CharPolynomial:
        one_plus_t = IntPolynomial([1, 1])
        total = CharPolynomial(self.group, [])
        for i, c in enumerate(self.coefficients):
            total = total + CharPolynomial(self.group, [c]) * (IntPolynomial.monomial(i) * one_plus_t ** (self.degree_s - 2 * i))
        return total

    def virtual(self, table: CharacterTable | None = None) -> list[VirtualCharacter]:
        table = table or character_table(self.group)
        return [table.decompose(c) for c in self.coefficients]

    def is_effective(self) -> bool:
        return all(v.is_effective() for v in self.virtual())

    def at_identity(self) -> IntPolynomial:
        return IntPolynomial(c.values[0] for c in self.coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GammaPolynomial):
            return NotImplemented
        return self.degree_s == other.degree_s and self.as_char_polynomial() == other.as_char_polynomial()

    __hash__ = None  # type: ignore[assignment]

    def format(self, table: CharacterTable | None = None) -> str:
        return format_terms([(i, str(v)) for i, v in enumerate(self.virtual(table)) if not v.is_zero()])

    def __str__(self) -> str:
        return self.format()


def gamma_extract(p: CharPolynomial, expected_degree: int) -> GammaPolynomial:
    s = expected_degree
    if p.degree > s:
        raise DegreeMismatch(f"polynomial degree {p.degree} exceeds the expected {s}")
    if p.degree >= 0 and p.degree != s:
        raise DegreeMismatch(f"polynomial degree {p.degree} differs from the expected {s}")
    if not p.is_palindromic(s):
        raise NotPalindromic(f"coefficients are not symmetric about {Fraction(s, 2)}")
    coeffs = _gamma_coefficients(lambda j: p[j], s, None, lambda a, b: a - b, lambda a, c: a * c)
    out = GammaPolynomial(p.group, coeffs, s)
    if out.reconstruct() != p:
        raise AssertionError("gamma expansion does not reconstruct its source")
    return out


# ---------------------------------------------------------------------------
# cubes and Eulerian polynomials


@dataclass(frozen=True)
class TableauDatum:
    shape: tuple[int, ...]
    descent_count: int
    has_double_descent: bool
    has_final_descent: bool

    @property
    def admissible(self) -> bool:
        return not self.has_double_descent and not self.has_final_descent


def tableau_data(d: int) -> list[TableauDatum]:
    """Descent data of every standard tableau with ``d`` boxes."""
    out = []
    for lam in partitions(d):
        for T in standard_tableaux(lam):
            des = tableau_descents(T)
            ds = set(des)
            out.append(
                TableauDatum(
                    shape=lam,
                    descent_count=len(des),
                    has_double_descent=any(i + 1 in ds for i in ds),
                    has_final_descent=(d - 1) in ds,
                )
            )
    return out


def symmetric_group(d: int) -> YoungGroup:
    return YoungGroup(d, [range(d)])


@cache
def cube_gamma_multiplicities(d: int) -> tuple[dict[tuple[int, ...], int], ...]:
    """For each ``i``, the multiplicity of every shape in the ``i``-th cube gamma character."""
    if d < 1:
        raise ValueError("d must be positive")
    if d > CUBE_GUARD:
        raise GuardExceeded(f"cube gamma guard is d <= {CUBE_GUARD}")
    out: list[dict[tuple[int, ...], int]] = [dict() for _ in range((d - 1) // 2 + 1)]
    for datum in tableau_data(d):
        if datum.admissible:
            bucket = out[datum.descent_count]
            bucket[datum.shape] = bucket.get(datum.shape, 0) + 1
    return tuple(out)


def cube_gamma(d: int) -> GammaPolynomial:
    """Gamma polynomial of the unit ``d``-cube under ``S_d``, from tableaux."""
    group = symmetric_group(d)
    table = character_table(group)
    coeffs = []
    for mults in cube_gamma_multiplicities(d):
        f = ClassFunction.constant(group, 0)
        for lam, m in mults.items():
            f = f + m * table[table.index(_shape_name(lam))]
        coeffs.append(f)
    return GammaPolynomial(group, coeffs, d - 1)


def _shape_name(lam: Sequence[int]) -> str:
    if len(lam) == 1:
        return "χ^(" + str(lam[0]) + ")"
    return "χ^(" + ",".join(map(str, lam)) + ")"


@cache
def _cube_gamma_at(d: int) -> dict[tuple[int, ...], IntPolynomial]:
    """Cube gamma evaluated at each cycle type of ``S_d``."""
    g = cube_gamma(d)
    group = g.group
    return {types[0]: IntPolynomial(c.values[k] for c in g.coefficients) for k, types in enumerate(group.class_types)}


def eulerian_polynomial(d: int) -> IntPolynomial:
    """``sum_w t^des(w)`` over all permutations of ``d`` letters."""
    coeffs = [0] * max(d, 1)
    for w in permutations(range(d)):
        coeffs[sum(1 for i in range(d - 1) if w[i] > w[i + 1])] += 1
    return IntPolynomial(coeffs)


def eulerian_gamma(d: int) -> IntPolynomial:
    """Count permutations with neither a double descent nor a final descent, by descents."""
    if d > CUBE_GUARD + 2:
        raise GuardExceeded("d too large for permutation enumeration")
    coeffs = [0] * ((d - 1) // 2 + 1 if d else 1)
    for w in permutations(range(d)):
        des = {i for i in range(d - 1) if w[i] > w[i + 1]}
        if any(i + 1 in des for i in des) or (d - 2) in des:
            continue
        coeffs[len(des)] += 1
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# saturation formula


def require_one_graded(lp: LabeledPoset) -> None:
    if not (lp.is_graded and lp.all_positive):
        raise NotOneGraded("expected a graded poset with every cover labelled +1")


def saturation_gamma(blocks: Sequence[Sequence[int]], degree: int) -> CharPolynomial:
    """Product of cube gammas over the blocks, as a polynomial on the Young subgroup."""
    group = YoungGroup(degree, blocks)
    evals = []
    for types in group.class_types:
        out = IntPolynomial([1])
        for mu in types:
            out = out * _cube_gamma_at(sum(mu))[mu]
        evals.append(out)
    return CharPolynomial.from_evaluations(group, evals)


@dataclass
class OrbitContribution:
    blocks: list[list[str]]
    orbit_size: int
    stabilizer: PermGroup
    shift: int
    contribution: CharPolynomial


@dataclass
class GammaViaSaturations:
    gamma: GammaPolynomial
    orbits: list[OrbitContribution] = field(default_factory=list)


def gamma_via_saturations_detailed(lp: LabeledPoset, group: PermGroup) -> GammaViaSaturations:
    require_one_graded(lp)
    check_subgroup_of_aut(lp, group)
    par = to_parity_form(lp)
    r = lp.grade_value
    s = len(lp) - r - 1
    total = CharPolynomial(group, [])
    ledger = []
    for orbit in saturation_orbits(par, group):
        rep = orbit.representative
        k = rep.grade_value_one
        if (k - r) % 2:
            raise DegreeMismatch(f"odd shift {k - r} for saturation {rep}")
        shift = (k - r) // 2
        local = saturation_gamma(rep.blocks, len(lp)).shift(shift)
        contribution = local.restrict(orbit.stabilizer).induce(group)
        total = total + contribution
        ledger.append(OrbitContribution(rep.named_blocks(), len(orbit), orbit.stabilizer, shift, contribution))
    coeffs = [total[i] for i in range(s // 2 + 1)]
    if total.degree > s // 2:
        raise DegreeMismatch("saturation sum has terms beyond half the palindromic degree")
    return GammaViaSaturations(GammaPolynomial(group, coeffs, s), ledger)


def gamma_via_saturations(lp: LabeledPoset, group: PermGroup) -> GammaPolynomial:
    return gamma_via_saturations_detailed(lp, group).gamma


def gamma_from_hstar(lp: LabeledPoset, group: PermGroup) -> GammaPolynomial:
    require_one_graded(lp)
    return gamma_extract(equivariant_hstar(lp, group), len(lp) - lp.grade_value - 1)


def effectiveness_report(lp: LabeledPoset, group: PermGroup, table: CharacterTable | None = None) -> dict:
    """Both gamma computations, their agreement and the per-orbit ledger."""
    table = table or character_table(group)
    detailed = gamma_via_saturations_detailed(lp, group)
    via_sat = detailed.gamma
    extracted = gamma_from_hstar(lp, group)
    coeffs = via_sat.virtual(table)
    return {
        "irreducibles": list(table.names),
        "degree_s": via_sat.degree_s,
        "gamma": [list(v.multiplicities) for v in coeffs],
        "gamma_text": via_sat.format(table),
        "effective": all(v.is_effective() for v in coeffs),
        "coefficient_effective": [v.is_effective() for v in coeffs],
        "verified_against_hstar": extracted == via_sat,
        "orbits": [
            {
                "blocks": o.blocks,
                "orbit_size": o.orbit_size,
                "stabilizer_order": o.stabilizer.order,
                "shift": o.shift,
                "contribution": [list(table.decompose(c).multiplicities) for c in o.contribution.coeffs],
                "contribution_text": format_terms(
                    [(i, str(table.decompose(c))) for i, c in enumerate(o.contribution.coeffs) if not c.is_zero()]
                ),
            }
            for o in detailed.orbits
        ],
    }
