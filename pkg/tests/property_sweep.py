"""Law checks over every small graded poset and a batch of random sign-graded ones.

Results are cached so the property tests and the acceptance summary share one run.
"""

from __future__ import annotations

import functools
import random

from generators import graded_posets, random_sign_graded

from ordergamma import laws
from ordergamma.poset import antichain, automorphism_group, chain, to_parity_form
from ordergamma.reptheory.perm import PermGroup, all_subgroups, from_cycles

MAX_SIZE = 6
RANDOM_CASES = 200
SEED = 20240229

LAWS = {
    "a": "evaluation lemma",
    "b": "saturation decomposition",
    "c": "parity shift",
    "d": "ordinal-sum multiplicativity",
    "e": "palindromic and effective h*",
    "f": "saturation bijection",
    "g": "gamma via saturations",
}


def _second_factors():
    v = antichain(["_u", "_v"])
    return [
        (v, PermGroup.symmetric(2)),
        (chain(["_u", "_v"]), PermGroup.trivial(2)),
        (chain(["_u", "_v"], [-1]), PermGroup.trivial(2)),
        (antichain(["_u", "_v", "_w"]), PermGroup(3, [from_cycles(3, [(0, 1, 2)])])),
    ]


@functools.cache
def graded_cases():
    return graded_posets(MAX_SIZE)


@functools.cache
def random_cases():
    rng = random.Random(SEED)
    return [random_sign_graded(rng, MAX_SIZE) for _ in range(RANDOM_CASES)]


def check(lp, group, factor_index: int = 0) -> dict[str, bool | None]:
    par = to_parity_form(lp)
    one_graded = lp.is_graded and lp.all_positive
    other, other_group = _second_factors()[factor_index % len(_second_factors())]
    return {
        "a": laws.evaluation_law(lp, group),
        "b": laws.main_theorem_law(par, group),
        "c": laws.parity_shift_law(lp, group),
        "d": laws.ordinal_sum_law(lp, group, other, other_group),
        "e": laws.palindromic_law(lp, group) if one_graded else None,
        "f": laws.saturation_bijection_law(par, group),
        "g": laws.gamma_law(lp, group) if one_graded else None,
    }


@functools.cache
def graded_result(index: int) -> list[tuple[str, str, bool]]:
    """Failures for one graded poset over all subgroups of its automorphism group."""
    lp = graded_cases()[index]
    failures = []
    checks = 0
    for k, group in enumerate(all_subgroups(automorphism_group(lp))):
        for law, ok in check(lp, group, k).items():
            if ok is not None:
                checks += 1
                if not ok:
                    failures.append((law, repr(group.generators)))
    return failures, checks


@functools.cache
def random_result(index: int):
    lp = random_cases()[index]
    subgroups = all_subgroups(automorphism_group(lp))
    rng = random.Random(SEED + index)
    picked = [subgroups[-1]] + ([rng.choice(subgroups)] if len(subgroups) > 1 else [])
    failures = []
    checks = 0
    for k, group in enumerate(picked):
        for law, ok in check(lp, group, index + k).items():
            if ok is not None:
                checks += 1
                if not ok:
                    failures.append((law, repr(group.generators)))
    return failures, checks


@functools.cache
def counting_result(index: int):
    lp = graded_cases()[index]
    aut = automorphism_group(lp)
    return laws.counting_law(lp, aut, 5), aut.order * 6


def summary() -> dict:
    graded = [graded_result(i) for i in range(len(graded_cases()))]
    randoms = [random_result(i) for i in range(len(random_cases()))]
    return {
        "graded_posets": len(graded),
        "random_labelings": len(randoms),
        "non_positive_random": sum(not lp.all_positive for lp in random_cases()),
        "checks": sum(c for _, c in graded) + sum(c for _, c in randoms),
        "failures": [f for fs, _ in graded for f in fs] + [f for fs, _ in randoms for f in fs],
    }
