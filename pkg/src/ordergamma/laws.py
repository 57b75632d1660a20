"""Identities that must hold between independently computed quantities.

Each check returns ``True``/``False``; the CLI ``verify`` command and the
property tests both run them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ehrhart import (
    count_points,
    count_points_bruteforce,
    equivariant_hstar,
    equivariant_hstar_bruteforce,
    hstar,
    hstar_linear_extensions,
    hstar_via_saturations,
    parity_shift_exponent,
)
from .gamma import gamma_from_hstar, gamma_via_saturations
from .polynomials import CharPolynomial
from .poset import (
    LabeledPoset,
    antichain,
    enumerate_saturations,
    is_automorphism,
    ordinal_sum,
    quotient,
    to_parity_form,
)
from .reptheory.perm import PermGroup, direct_product


@dataclass
class Verdict:
    law: str
    holds: bool | None  # None: not applicable to this input
    detail: str = ""

    def line(self) -> str:
        status = {True: "PASS", False: "FAIL", None: "SKIP"}[self.holds]
        return f"{status} {self.law}" + (f": {self.detail}" if self.detail else "")


def evaluation_law(lp: LabeledPoset, group: PermGroup) -> bool:
    return equivariant_hstar(lp, group) == equivariant_hstar_bruteforce(lp, group)


def hstar_paths_law(lp: LabeledPoset) -> bool:
    return hstar(lp) == hstar_linear_extensions(lp)


def identity_law(lp: LabeledPoset, group: PermGroup) -> bool:
    return equivariant_hstar(lp, group).at_identity() == hstar(lp)


def main_theorem_law(lp: LabeledPoset, group: PermGroup) -> bool:
    """Saturation sum equals the direct equivariant h* (input in parity form)."""
    return hstar_via_saturations(lp, group) == equivariant_hstar(lp, group)


def parity_shift_law(lp: LabeledPoset, group: PermGroup) -> bool:
    par = to_parity_form(lp)
    k = parity_shift_exponent(lp)
    return equivariant_hstar(lp, group) == equivariant_hstar(par, group).shift(k)


def lift_to_product(p: CharPolynomial, product_group: PermGroup, left: bool, split: int) -> CharPolynomial:
    """View a polynomial on one factor of ``G x H`` as one on the product."""

    def part(u):
        if left:
            return u[:split]
        return tuple(x - split for x in u[split:])

    return CharPolynomial.from_function(product_group, lambda u: p.evaluate(part(u)))


def ordinal_sum_law(lp: LabeledPoset, group: PermGroup, other: LabeledPoset, other_group: PermGroup) -> bool:
    """h* of ``P (+)_1 Q`` under ``G x H`` is the product of the factors' h*."""
    total = ordinal_sum(lp, other, 1)
    gh = direct_product(group, other_group)
    lhs = equivariant_hstar(total, gh)
    n = len(lp)
    rhs = lift_to_product(equivariant_hstar(lp, group), gh, True, n) * lift_to_product(
        equivariant_hstar(other, other_group), gh, False, n
    )
    return lhs == rhs


def palindromic_law(lp: LabeledPoset, group: PermGroup) -> bool:
    h = equivariant_hstar(lp, group)
    s = len(lp) - lp.grade_value - 1
    return h.degree == s and h.is_palindromic(s) and h.is_effective()


def saturation_bijection_law(lp: LabeledPoset, group: PermGroup) -> bool:
    """Saturations of ``P/G`` versus ``G``-invariant saturations of ``P`` (parity form)."""
    q, _ = quotient(lp, group)
    lhs = len(enumerate_saturations(q))
    rhs = sum(
        1
        for s in enumerate_saturations(lp)
        if all(is_automorphism(s.to_labeled_poset(), g) for g in group.generators)
    )
    return lhs == rhs


def gamma_law(lp: LabeledPoset, group: PermGroup) -> bool:
    via = gamma_via_saturations(lp, group)
    return via == gamma_from_hstar(lp, group) and via.is_effective()


def counting_law(lp: LabeledPoset, group: PermGroup, max_dilate: int = 5) -> bool:
    return all(
        count_points(lp, m, g) == count_points_bruteforce(lp, m, g)
        for g in group.elements
        for m in range(max_dilate + 1)
    )


def run_all(lp: LabeledPoset, group: PermGroup, brute_force_limit: int = 6) -> list[Verdict]:
    out = []
    consistent = lp.is_consistent
    one_graded = lp.is_graded and lp.all_positive
    if not consistent:
        return [Verdict("consistency", False, "labelling is not consistent")]
    par = to_parity_form(lp)
    out.append(Verdict("h* from counts equals the linear-extension descent sum", hstar_paths_law(lp)))
    out.append(Verdict("evaluation at identity equals classical h*", identity_law(lp, group)))
    out.append(Verdict("evaluation lemma versus fixed-point series", evaluation_law(lp, group)))
    out.append(Verdict("saturation decomposition of equivariant h*", main_theorem_law(par, group)))
    if lp.is_graded:
        out.append(Verdict("parity-shift identity", parity_shift_law(lp, group)))
    else:
        out.append(Verdict("parity-shift identity", None, "needs a graded labelling"))
    ac = antichain(["_q1", "_q2"])
    out.append(Verdict("ordinal-sum multiplicativity (with a 2-antichain under S_2)",
                       ordinal_sum_law(lp, group, ac, PermGroup.symmetric(2))))
    out.append(Verdict("saturation bijection with the quotient", saturation_bijection_law(par, group)))
    if one_graded:
        out.append(Verdict("palindromic, degree |P|-r-1, effective coefficients", palindromic_law(lp, group)))
        out.append(Verdict("gamma via saturations equals gamma of h*, effective", gamma_law(lp, group)))
    else:
        out.append(Verdict("palindromic, degree |P|-r-1, effective coefficients", None, "needs all labels +1"))
        out.append(Verdict("gamma via saturations equals gamma of h*, effective", None, "needs all labels +1"))
    if len(lp) <= brute_force_limit:
        out.append(Verdict("transfer-matrix counts equal brute force (m <= 5)", counting_law(lp, group)))
    else:
        out.append(Verdict("transfer-matrix counts equal brute force (m <= 5)", None, f"|P| > {brute_force_limit}"))
    return out
