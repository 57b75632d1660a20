"""Lattice points of half-open order polytopes and (equivariant) h*-polynomials.

A lattice point of the ``m``-th dilate is a map ``f: P -> {0..m}`` that
weakly reverses the order and strictly separates nonascending pairs.  Such an
``f`` is the same thing as a descending chain of down-sets
``P = D_0 >= D_1 >= ... >= D_m >= D_{m+1} = {}`` (``D_v = {f >= v}``) in which
no difference ``D_v - D_{v+1}`` contains a nonascending pair, so counts are
powers of a transfer matrix on down-sets.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cache
from itertools import product

from .errors import (
    GroupDoesNotPreserve,
    NotAnAutomorphism,
    TruncationUnstable,
    Unbounded,
)
from .polynomials import CharPolynomial, IntPolynomial, binomial_hstar
from .poset import (
    FinitePoset,
    LabeledPoset,
    analyze,
    check_subgroup_of_aut,
    derive_vertex_labeling,
    is_automorphism,
    quotient,
    saturation_orbits,
    to_parity_form,
)
from .reptheory.perm import Perm, PermGroup, YoungGroup, cycle_type, cycles, identity

# ---------------------------------------------------------------------------
# counting


class _Transfer:
    """Transfer matrix on the (optionally ``g``-invariant) down-sets of a poset."""

    def __init__(self, lp: LabeledPoset, fix: Perm | None = None):
        lp.require_consistent()
        P = lp.poset
        n = len(P)
        if fix is not None and not is_automorphism(lp, fix):
            raise NotAnAutomorphism(f"{fix} is not an automorphism of the labelled poset")
        downsets = P.downsets()
        if fix is not None:
            downsets = [d for d in downsets if _image(d, fix) == d]
        self.full = (1 << n) - 1
        bad = [0] * n
        for i, j in lp.nonascending:
            bad[i] |= 1 << j
        position = {d: k for k, d in enumerate(downsets)}
        self.size = len(downsets)
        self.full_index = position[self.full]
        self.empty_index = position[0]
        # edges[k]: indices of the down-sets reachable from downsets[k] in one level
        self.edges: list[list[int]] = []
        for d in downsets:
            row = []
            sub = d
            while True:
                if sub in position and _clean(d & ~sub, bad):
                    row.append(position[sub])
                if sub == 0:
                    break
                sub = (sub - 1) & d
            self.edges.append(row)

    def counts(self, max_dilate: int) -> list[int]:
        vec = [0] * self.size
        vec[self.full_index] = 1
        out = []
        for _ in range(max_dilate + 1):
            nxt = [0] * self.size
            for k, v in enumerate(vec):
                if v:
                    for j in self.edges[k]:
                        nxt[j] += v
            vec = nxt
            out.append(vec[self.empty_index])
        return out


def _image(mask: int, g: Perm) -> int:
    out = 0
    k = 0
    while mask:
        if mask & 1:
            out |= 1 << g[k]
        mask >>= 1
        k += 1
    return out


def _clean(mask: int, bad: list[int]) -> bool:
    k = 0
    m = mask
    while m:
        if m & 1 and bad[k] & mask:
            return False
        m >>= 1
        k += 1
    return True


def dilate_counts(lp: LabeledPoset, max_dilate: int, fix: Perm | None = None) -> list[int]:
    """``[c_0, ..., c_max_dilate]``, optionally counting only ``fix``-invariant points."""
    return _Transfer(lp, fix).counts(max_dilate)


def count_points(lp: LabeledPoset, m: int, fix: Perm | None = None) -> int:
    if m < 0:
        raise ValueError("dilation factor must be nonnegative")
    return dilate_counts(lp, m, fix)[m]


def count_points_bruteforce(lp: LabeledPoset, m: int, fix: Perm | None = None) -> int:
    """Direct enumeration of maps to ``{0..m}`` (reference for small posets).

    With ``fix`` only maps constant on its cycles are generated, one value per cycle.
    """
    lp.require_consistent()
    P = lp.poset
    n = len(P)
    if fix is None:
        fix = identity(n)
    elif not is_automorphism(lp, fix):
        raise NotAnAutomorphism(f"{fix} is not an automorphism of the labelled poset")
    weak = [(i, j) for i in range(n) for j in range(n) if P.less(i, j)]
    strict = lp.nonascending
    orbit = cycles(fix)
    total = 0
    f = [0] * n
    for values in product(range(m + 1), repeat=len(orbit)):
        for cyc, v in zip(orbit, values):
            for i in cyc:
                f[i] = v
        if all(f[i] >= f[j] for i, j in weak) and all(f[i] > f[j] for i, j in strict):
            total += 1
    return total


# ---------------------------------------------------------------------------
# classical h*


def hstar(lp: LabeledPoset) -> IntPolynomial:
    """h*-polynomial from the first ``|P| + 1`` dilate counts."""
    n = len(lp)
    return binomial_hstar(dilate_counts(lp, n), n)


def hstar_linear_extensions(lp: LabeledPoset) -> IntPolynomial:
    """``sum_w t^des(w)`` over linear extensions ``w``, read through the vertex labelling."""
    lp.require_consistent()
    omega = derive_vertex_labeling(lp)
    P = lp.poset
    label = [omega[e] for e in P.elements]
    coeffs = [0] * (len(P) + 1)

    @cache
    def walk(placed: int, last: int) -> tuple[int, ...]:
        # descent counts of the extensions of the current prefix, as a coefficient tuple
        if placed == (1 << len(P)) - 1:
            return (1,)
        acc: list[int] = [0] * (len(P) + 1)
        for k in range(len(P)):
            if not placed >> k & 1 and P.below[k] & placed == P.below[k]:
                step = 1 if last >= 0 and label[last] > label[k] else 0
                for i, c in enumerate(walk(placed | (1 << k), k)):
                    if c:
                        acc[i + step] += c
        return tuple(acc)

    for i, c in enumerate(walk(0, -1)):
        coeffs[i] += c
    return IntPolynomial(coeffs)


# ---------------------------------------------------------------------------
# equivariant h*


def cyclic_subgroup(degree: int, u: Perm) -> PermGroup:
    return PermGroup(degree, [u]) if u != identity(degree) else PermGroup.trivial(degree)


def evaluation_at(lp: LabeledPoset, u: Perm) -> IntPolynomial:
    """h* of the orbit poset of ``<u>`` times ``prod_j (1 + ... + t^(mu_j - 1))``."""
    q, _ = quotient(lp, cyclic_subgroup(len(lp), u))
    out = hstar(q)
    for part in cycle_type(u):
        out = out * IntPolynomial.geometric(part)
    return out


def equivariant_hstar(lp: LabeledPoset, group: PermGroup) -> CharPolynomial:
    lp.require_consistent()
    check_subgroup_of_aut(lp, group)
    return CharPolynomial.from_function(group, lambda u: evaluation_at(lp, u))


def _truncated_product(series: Sequence[int], factor: IntPolynomial, length: int) -> list[int]:
    out = [0] * length
    for i, a in enumerate(series[:length]):
        if a:
            for j, b in enumerate(factor.coeffs):
                if i + j < length:
                    out[i + j] += a * b
    return out


def numerator_from_series(counts: Sequence[int], mu: Sequence[int], expected_degree: int) -> IntPolynomial:
    """``(1 - t) prod_j (1 - t^mu_j) * sum_m counts[m] t^m``, checked to stop at ``expected_degree``."""
    longest = max(mu, default=1)
    if len(counts) < expected_degree + longest + 2:
        raise TruncationUnstable(
            f"need counts up to dilate {expected_degree + longest + 1} to certify the numerator, got {len(counts) - 1}"
        )
    factor = IntPolynomial([1, -1])
    for part in mu:
        factor = factor * IntPolynomial([1] + [0] * (part - 1) + [-1])
    coeffs = _truncated_product(counts, factor, len(counts))
    tail = coeffs[expected_degree + 1 :]
    if any(tail):
        raise TruncationUnstable(f"nonzero coefficients beyond degree {expected_degree}: {tail}")
    return IntPolynomial(coeffs)


def equivariant_hstar_bruteforce(lp: LabeledPoset, group: PermGroup, max_dilate: int | None = None) -> CharPolynomial:
    """Series route: fixed-point counts of every class representative times the determinant factor."""
    lp.require_consistent()
    check_subgroup_of_aut(lp, group)
    n = len(lp)
    longest = max((max(cycle_type(u)) for u in group.classes), default=1)
    if max_dilate is None:
        max_dilate = n + longest + 1

    def at(u: Perm) -> IntPolynomial:
        return numerator_from_series(dilate_counts(lp, max_dilate, u), cycle_type(u), n)

    return CharPolynomial.from_function(group, at)


def antichain_sum_hstar(sizes: Sequence[int], signs: Sequence[int]) -> IntPolynomial:
    return _antichain_sum_hstar(tuple(sizes), tuple(signs))


@cache
def _antichain_sum_hstar(sizes: tuple[int, ...], signs: tuple[int, ...]) -> IntPolynomial:
    names = []
    labels = {}
    for b, size in enumerate(sizes):
        names.append([f"b{b}_{i}" for i in range(size)])
    for b, s in enumerate(signs):
        for x in names[b]:
            for y in names[b + 1]:
                labels[(x, y)] = s
    poset = FinitePoset([x for block in names for x in block], labels.keys())
    return hstar(analyze(poset, labels))


def saturation_hstar(blocks: Sequence[Sequence[int]], signs: Sequence[int], degree: int) -> CharPolynomial:
    """Equivariant h* of an ordinal sum of antichains under its full automorphism group."""
    group = YoungGroup(degree, blocks)

    def at(types) -> IntPolynomial:
        out = antichain_sum_hstar([len(mu) for mu in types], signs)
        for mu in types:
            for part in mu:
                out = out * IntPolynomial.geometric(part)
        return out

    return CharPolynomial.from_evaluations(group, [at(t) for t in group.class_types])


def hstar_via_saturations(lp: LabeledPoset, group: PermGroup) -> CharPolynomial:
    """Sum over saturation orbits of ``Ind Res`` of each saturation's equivariant h*."""
    total = CharPolynomial(group, [])
    for orbit in saturation_orbits(lp, group):
        rep = orbit.representative
        local = saturation_hstar(rep.blocks, rep.block_signs, len(lp))
        total = total + local.restrict(orbit.stabilizer).induce(group)
    return total


def parity_shift_exponent(lp: LabeledPoset) -> int:
    """``(r(eps_par) - r(eps)) / 2`` for a graded labelled poset."""
    if not lp.is_graded:
        raise ValueError("the labelled poset must be graded")
    par = to_parity_form(lp)
    diff = par.grade_value - lp.grade_value
    assert diff % 2 == 0
    return diff // 2


# ---------------------------------------------------------------------------
# explicit lattice polytopes


@dataclass(frozen=True)
class Inequality:
    normal: tuple[int, ...]
    offset: int
    strict: bool = False

    def holds(self, x: Sequence[int], m: int) -> bool:
        lhs = sum(a * b for a, b in zip(self.normal, x))
        return lhs < m * self.offset if self.strict else lhs <= m * self.offset


@dataclass(frozen=True)
class LatticePolytopeHRep:
    """``{x : normal . x <= offset}`` (``<`` for strict rows), dilated by scaling offsets."""

    dimension: int
    inequalities: tuple[Inequality, ...]

    def contains(self, x: Sequence[int], m: int = 1) -> bool:
        return all(ineq.holds(x, m) for ineq in self.inequalities)

    def bounding_box(self) -> list[tuple[float, float]]:
        """Coordinate ranges of the closed region at dilate 1 (linear programs)."""
        from scipy.optimize import linprog

        a = [list(i.normal) for i in self.inequalities]
        b = [i.offset for i in self.inequalities]
        box = []
        for k in range(self.dimension):
            lo_hi = []
            for sign in (1, -1):
                c = [0] * self.dimension
                c[k] = sign
                res = linprog(c, A_ub=a, b_ub=b, bounds=[(None, None)] * self.dimension, method="highs")
                if res.status == 3:
                    raise Unbounded(f"coordinate {k} is unbounded")
                if res.status == 2:
                    return [(0.0, -1.0)] * self.dimension  # empty region
                if res.status != 0:
                    raise Unbounded(f"linear program failed on coordinate {k}: {res.message}")
                lo_hi.append(sign * res.fun)
            box.append((lo_hi[0], lo_hi[1]))
        return box

    def points(self, m: int, fix: Perm | None = None) -> list[tuple[int, ...]]:
        """Lattice points of the ``m``-th dilate, optionally only those fixed by ``fix``."""
        box = self._box()
        ranges = [range(math.floor(lo * m) - 1, math.ceil(hi * m) + 2) for lo, hi in box]
        if fix is None:
            return [x for x in product(*ranges) if self.contains(x, m)]
        out = []
        cyc = cycles(fix)
        # a fixed point is constant on each cycle: intersect the ranges of its coordinates
        per_cycle = [range(max(ranges[i].start for i in c), min(ranges[i].stop for i in c)) for c in cyc]
        for vals in product(*per_cycle):
            x = [0] * self.dimension
            for c, v in zip(cyc, vals):
                for i in c:
                    x[i] = v
            if self.contains(x, m):
                out.append(tuple(x))
        return out

    def _box(self):
        try:
            return self._cached_box
        except AttributeError:
            box = self.bounding_box()
            object.__setattr__(self, "_cached_box", box)
            return box

    def check_preserved(self, group: PermGroup, dilates: Sequence[int] = (1, 2)) -> None:
        for m in dilates:
            pts = set(self.points(m))
            for g in group.generators:
                moved = {tuple(x[_inv_index(g, i)] for i in range(self.dimension)) for x in pts}
                if moved != pts:
                    raise GroupDoesNotPreserve(f"{g} does not map the {m}-th dilate to itself")

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "inequalities": [
                {"normal": list(i.normal), "offset": i.offset, "strict": i.strict} for i in self.inequalities
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> LatticePolytopeHRep:
        ineqs = tuple(
            Inequality(tuple(int(a) for a in row["normal"]), int(row["offset"]), bool(row.get("strict", False)))
            for row in data["inequalities"]
        )
        dim = int(data.get("dimension", len(ineqs[0].normal) if ineqs else 0))
        return cls(dim, ineqs)


def _inv_index(g: Perm, i: int) -> int:
    return g.index(i)


def cross_polytope(d: int) -> LatticePolytopeHRep:
    """``{x : |x_1| + ... + |x_d| <= 1}``."""
    rows = tuple(Inequality(tuple(s), 1) for s in product((1, -1), repeat=d))
    return LatticePolytopeHRep(d, rows)


def generic_equivariant_hstar(poly: LatticePolytopeHRep, group: PermGroup, max_dilate: int | None = None) -> CharPolynomial:
    """Brute-force equivariant h* of a lattice polytope under coordinate permutations."""
    if group.degree != poly.dimension:
        raise GroupDoesNotPreserve("group degree differs from the ambient dimension")
    if max_dilate is None:
        max_dilate = poly.dimension + 8
    poly.check_preserved(group)

    def at(u: Perm) -> IntPolynomial:
        counts = [len(poly.points(m, u)) for m in range(max_dilate + 1)]
        return numerator_from_series(counts, cycle_type(u), poly.dimension)

    return CharPolynomial.from_function(group, at)
