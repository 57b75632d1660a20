"""Finite posets with a +1/-1 labelling of their cover relations.

Elements carry string identifiers but everything is computed on indices
``0..n-1`` in the order the identifiers were given; permutations act on
those indices.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    EmptyPoset,
    IdentifierClash,
    InvalidCovers,
    NotASubgroupOfAut,
    NotConsistent,
    NotParityConsistent,
    QuotientNotPartialOrder,
    RankOutOfParityRange,
)
from .reptheory.perm import Perm, PermGroup, cycle_notation

Cover = tuple[int, int]


class FinitePoset:
    """A poset given by its cover relations.

    >>> P = FinitePoset(["a", "b", "c"], [("a", "c"), ("b", "c")])
    >>> P.leq(0, 2), P.leq(0, 1)
    (True, False)
    """

    def __init__(self, elements: Sequence[str], covers: Iterable[Sequence[str]]):
        self.elements = tuple(str(e) for e in elements)
        if not self.elements:
            raise EmptyPoset("a poset needs at least one element")
        if len(set(self.elements)) != len(self.elements):
            raise IdentifierClash("element identifiers must be unique")
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        cover_set: set[Cover] = set()
        for pair in covers:
            a, b = pair
            if a not in self.index or b not in self.index:
                raise InvalidCovers(f"cover {a}<{b} mentions an unknown element")
            if a == b:
                raise InvalidCovers(f"cover {a}<{b} is a loop")
            cover_set.add((self.index[a], self.index[b]))
        self.covers = frozenset(cover_set)
        self.up = [sorted(j for (i, j) in self.covers if i == k) for k in range(n)]
        self.down = [sorted(i for (i, j) in self.covers if j == k) for k in range(n)]
        self.topological_order = self._toposort()
        # above[i] is a bitmask of the elements strictly greater than i
        above = [0] * n
        for i in reversed(self.topological_order):
            for j in self.up[i]:
                above[i] |= (1 << j) | above[j]
        self.above = above
        below = [0] * n
        for i in range(n):
            for j in range(n):
                if above[i] >> j & 1:
                    below[j] |= 1 << i
        self.below = below
        for i, j in self.covers:
            if any(above[i] >> k & 1 and above[k] >> j & 1 for k in range(n)):
                raise InvalidCovers(
                    f"{self.elements[i]}<{self.elements[j]} is not a cover: there is an element in between"
                )

    def _toposort(self) -> list[int]:
        n = len(self.elements)
        indeg = [len(self.down[k]) for k in range(n)]
        ready = [k for k in range(n) if indeg[k] == 0]
        order = []
        while ready:
            k = ready.pop(0)
            order.append(k)
            for j in self.up[k]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        if len(order) != n:
            raise InvalidCovers("the cover relation contains a cycle")
        return order

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        cov = ", ".join(f"{self.elements[i]}<{self.elements[j]}" for i, j in sorted(self.covers))
        return f"FinitePoset({list(self.elements)}, [{cov}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and self.covers == other.covers

    def __hash__(self) -> int:
        return hash((self.elements, self.covers))

    def less(self, i: int, j: int) -> bool:
        return bool(self.above[i] >> j & 1)

    def leq(self, i: int, j: int) -> bool:
        return i == j or self.less(i, j)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    @cached_property
    def minimal(self) -> list[int]:
        return [k for k in range(len(self)) if not self.down[k]]

    @cached_property
    def maximal(self) -> list[int]:
        return [k for k in range(len(self)) if not self.up[k]]

    def cover_names(self) -> list[tuple[str, str]]:
        return [(self.elements[i], self.elements[j]) for i, j in sorted(self.covers)]

    def maximal_chains_to(self, y: int) -> Iterator[tuple[int, ...]]:
        """Saturated chains from a minimal element up to ``y``."""
        if not self.down[y]:
            yield (y,)
            return
        for x in self.down[y]:
            for chain in self.maximal_chains_to(x):
                yield chain + (y,)

    def maximal_chains(self) -> Iterator[tuple[int, ...]]:
        for y in self.maximal:
            yield from self.maximal_chains_to(y)

    def downsets(self) -> list[int]:
        """All order ideals as bitmasks."""
        out = [0]
        for k in self.topological_order:
            # an ideal containing k must contain everything below k
            need = self.below[k]
            out += [d | (1 << k) for d in out if d & need == need and not self.above[k] & d]
        return sorted(set(out))


class Consistency(enum.Enum):
    NOT_CONSISTENT = "not consistent"
    CONSISTENT = "consistent"
    GRADED = "graded"


@dataclass(frozen=True, eq=False)
class LabeledPoset:
    """A poset together with a sign for every cover, already classified."""

    poset: FinitePoset
    signs: Mapping[Cover, int]
    consistency: Consistency
    rank: tuple[int, ...] | None
    grade_value: int | None
    is_parity_labeling: bool = field(default=False)

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    def __len__(self) -> int:
        return len(self.poset)

    @property
    def is_consistent(self) -> bool:
        return self.consistency is not Consistency.NOT_CONSISTENT

    @property
    def is_graded(self) -> bool:
        return self.consistency is Consistency.GRADED

    def sign(self, a: int, b: int) -> int:
        return self.signs[(a, b)]

    def labels_by_name(self) -> dict[tuple[str, str], int]:
        e = self.poset.elements
        return {(e[i], e[j]): s for (i, j), s in sorted(self.signs.items())}

    def require_consistent(self) -> None:
        if not self.is_consistent:
            raise NotConsistent("the labelling is not consistent")

    @cached_property
    def all_positive(self) -> bool:
        return all(s == 1 for s in self.signs.values())

    @cached_property
    def nonascending(self) -> list[tuple[int, int]]:
        """Pairs ``p < q`` joined by at least one saturated chain through a -1 cover."""
        n = len(self.poset)
        # bad[i]: elements reachable from i by an upward path that uses a -1 cover
        bad = [0] * n
        for i in reversed(self.poset.topological_order):
            for j in self.poset.up[i]:
                if self.signs[(i, j)] == -1:
                    bad[i] |= (1 << j) | self.poset.above[j]
                else:
                    bad[i] |= bad[j]
        return [(i, j) for i in range(n) for j in range(n) if bad[i] >> j & 1]

    def __repr__(self) -> str:
        return f"LabeledPoset({self.poset!r}, {self.consistency.value}, rank={self.rank})"


def _labels_to_indices(poset: FinitePoset, labeling: Mapping | None) -> dict[Cover, int]:
    if labeling is None:
        return {c: 1 for c in poset.covers}
    signs: dict[Cover, int] = {}
    for key, s in labeling.items():
        a, b = key
        if isinstance(a, str):
            if a not in poset.index or b not in poset.index:
                raise InvalidCovers(f"label on unknown pair {a}<{b}")
            a, b = poset.index[a], poset.index[b]
        if (a, b) not in poset.covers:
            raise InvalidCovers(f"label on a non-cover {poset.elements[a]}<{poset.elements[b]}")
        if s not in (1, -1):
            raise InvalidCovers(f"labels must be +1 or -1, got {s}")
        signs[(a, b)] = int(s)
    missing = poset.covers - signs.keys()
    if missing:
        i, j = min(missing)
        raise InvalidCovers(f"cover {poset.elements[i]}<{poset.elements[j]} has no label")
    return signs


def analyze(poset: FinitePoset, labeling: Mapping | None = None) -> LabeledPoset:
    """Classify ``(poset, labeling)``; ``labeling`` defaults to all +1.

    Keys of ``labeling`` may be identifier pairs or index pairs.
    """
    signs = _labels_to_indices(poset, labeling)
    # possible chain sums from a minimal element up to each element
    sums: list[set[int]] = [set() for _ in poset.elements]
    for k in poset.topological_order:
        if not poset.down[k]:
            sums[k] = {0}
        for j in poset.up[k]:
            sums[j] |= {s + signs[(k, j)] for s in sums[k]}
    if any(len(s) != 1 for s in sums):
        return LabeledPoset(poset, signs, Consistency.NOT_CONSISTENT, None, None, False)
    rank = tuple(next(iter(s)) for s in sums)
    tops = {rank[k] for k in poset.maximal}
    parity = all(r in (0, 1) for r in rank)
    if len(tops) == 1:
        return LabeledPoset(poset, signs, Consistency.GRADED, rank, tops.pop(), parity)
    return LabeledPoset(poset, signs, Consistency.CONSISTENT, rank, None, parity)


def chain_sums_oracle(poset: FinitePoset, labeling: Mapping | None = None) -> Consistency:
    """Consistency by listing every saturated chain (slow reference)."""
    signs = _labels_to_indices(poset, labeling)

    def total(chain):
        return sum(signs[(a, b)] for a, b in zip(chain, chain[1:]))

    for y in range(len(poset)):
        if len({total(c) for c in poset.maximal_chains_to(y)}) != 1:
            return Consistency.NOT_CONSISTENT
    if len({total(c) for c in poset.maximal_chains()}) == 1:
        return Consistency.GRADED
    return Consistency.CONSISTENT


def parity_labeling(poset: FinitePoset) -> dict[tuple[str, str], int]:
    """The labelling ``(-1)^l(p)`` on every cover ``p < q``."""
    lengths: list[set[int]] = [set() for _ in poset.elements]
    for k in poset.topological_order:
        if not poset.down[k]:
            lengths[k] = {0}
        for j in poset.up[k]:
            lengths[j] |= {(s + 1) % 2 for s in lengths[k]}
    if any(len(s) != 1 for s in lengths):
        raise NotParityConsistent("chains below some element disagree in length parity")
    e = poset.elements
    return {(e[i], e[j]): (-1) ** next(iter(lengths[i])) for i, j in sorted(poset.covers)}


def to_parity_form(lp: LabeledPoset) -> LabeledPoset:
    return analyze(lp.poset, parity_labeling(lp.poset))


def derive_vertex_labeling(lp: LabeledPoset) -> dict[str, int]:
    """Numbering ``1..n`` by rank, ties broken by identifier order."""
    lp.require_consistent()
    order = sorted(range(len(lp)), key=lambda k: (lp.rank[k], k))
    return {lp.elements[k]: pos + 1 for pos, k in enumerate(order)}


def ordinal_sum(lhs: LabeledPoset, rhs: LabeledPoset, joining_sign: int) -> LabeledPoset:
    """Every element of ``lhs`` placed below every element of ``rhs``."""
    if joining_sign not in (1, -1):
        raise ValueError("joining sign must be +1 or -1")
    clash = set(lhs.elements) & set(rhs.elements)
    if clash:
        raise IdentifierClash(f"shared identifiers {sorted(clash)}")
    labels = dict(lhs.labels_by_name())
    labels.update(rhs.labels_by_name())
    for i in lhs.poset.maximal:
        for j in rhs.poset.minimal:
            labels[(lhs.elements[i], rhs.elements[j])] = joining_sign
    poset = FinitePoset(lhs.elements + rhs.elements, labels.keys())
    return analyze(poset, labels)


def antichain(names: Sequence[str]) -> LabeledPoset:
    return analyze(FinitePoset(names, []))


def chain(names: Sequence[str], signs: Sequence[int] | None = None) -> LabeledPoset:
    covers = list(zip(names, names[1:]))
    if signs is None:
        signs = [1] * len(covers)
    return analyze(FinitePoset(names, covers), dict(zip(covers, signs)))


# ---------------------------------------------------------------------------
# automorphisms


def is_automorphism(lp: LabeledPoset, g: Perm) -> bool:
    n = len(lp)
    if len(g) != n or sorted(g) != list(range(n)):
        return False
    for (i, j), s in lp.signs.items():
        if lp.signs.get((g[i], g[j])) != s:
            return False
    return True


def automorphism_group(lp: LabeledPoset) -> PermGroup:
    """All label-preserving automorphisms, found by backtracking."""
    P = lp.poset
    n = len(P)
    rank = lp.rank or (None,) * n

    def signature(k: int):
        ups = sorted(lp.signs[(k, j)] for j in P.up[k])
        downs = sorted(lp.signs[(i, k)] for i in P.down[k])
        return (rank[k], tuple(ups), tuple(downs), bin(P.above[k]).count("1"), bin(P.below[k]).count("1"))

    sig = [signature(k) for k in range(n)]
    # visit elements so that each one after the first touches an earlier one when possible
    order: list[int] = []
    seen: set[int] = set()
    for start in range(n):
        if start in seen:
            continue
        stack = [start]
        while stack:
            k = stack.pop(0)
            if k in seen:
                continue
            seen.add(k)
            order.append(k)
            stack.extend(j for j in P.up[k] + P.down[k] if j not in seen)

    found: list[Perm] = []
    image = [-1] * n
    used = [False] * n

    def fits(k: int, t: int) -> bool:
        for j in P.up[k]:
            if image[j] >= 0 and lp.signs.get((t, image[j])) != lp.signs[(k, j)]:
                return False
        for j in P.down[k]:
            if image[j] >= 0 and lp.signs.get((image[j], t)) != lp.signs[(j, k)]:
                return False
        return True

    def extend(pos: int):
        if pos == n:
            g = tuple(image)
            if is_automorphism(lp, g):
                found.append(g)
            return
        k = order[pos]
        for t in range(n):
            if not used[t] and sig[t] == sig[k] and fits(k, t):
                image[k] = t
                used[t] = True
                extend(pos + 1)
                used[t] = False
                image[k] = -1

    extend(0)
    return PermGroup(n, elements=found)


def check_subgroup_of_aut(lp: LabeledPoset, group: PermGroup) -> None:
    if group.degree != len(lp):
        raise NotASubgroupOfAut(f"group acts on {group.degree} points, poset has {len(lp)}")
    for g in group.generators:
        if not is_automorphism(lp, g):
            raise NotASubgroupOfAut(f"{cycle_notation(g, lp.elements)} does not preserve the labelled poset")


# ---------------------------------------------------------------------------
# quotients


def quotient(lp: LabeledPoset, group: PermGroup) -> tuple[LabeledPoset, list[tuple[int, ...]]]:
    """The orbit poset ``P/G`` with induced labels, plus the orbits themselves.

    Orbit ``O`` lies below ``O'`` when some member of ``O`` lies below some
    member of ``O'``.
    """
    lp.require_consistent()
    check_subgroup_of_aut(lp, group)
    P = lp.poset
    orbits = group.orbits()
    m = len(orbits)
    where = {x: a for a, orb in enumerate(orbits) for x in orb}
    rel = [[False] * m for _ in range(m)]
    for a in range(m):
        rel[a][a] = True
    for i in range(len(P)):
        for j in range(len(P)):
            if P.less(i, j):
                rel[where[i]][where[j]] = True
    for a in range(m):
        for b in range(m):
            if a != b and rel[a][b] and rel[b][a]:
                raise QuotientNotPartialOrder(f"orbits {orbits[a]} and {orbits[b]} lie below each other")
            for c in range(m):
                if rel[a][b] and rel[b][c] and not rel[a][c]:
                    raise QuotientNotPartialOrder("the induced orbit relation is not transitive")
    names = ["{" + ",".join(P.elements[x] for x in orb) + "}" for orb in orbits]
    labels: dict[tuple[str, str], int] = {}
    for a in range(m):
        for b in range(m):
            if a == b or not rel[a][b]:
                continue
            if any(c not in (a, b) and rel[a][c] and rel[c][b] for c in range(m)):
                continue
            signs = {lp.signs[(i, j)] for i in orbits[a] for j in orbits[b] if (i, j) in P.covers}
            if len(signs) != 1:
                raise QuotientNotPartialOrder(
                    f"orbit cover {names[a]}<{names[b]} has representative cover signs {sorted(signs)}"
                )
            labels[(names[a], names[b])] = signs.pop()
    qp = analyze(FinitePoset(names, labels.keys()), labels)
    return qp, orbits


# ---------------------------------------------------------------------------
# saturations


class Saturation:
    """An ordered block decomposition ``A_0, ..., A_k`` of a labelled poset.

    The saturated poset is the ordinal sum of the blocks (each an antichain)
    with ``block_signs[i]`` on every cover between ``A_i`` and ``A_{i+1}``.
    """

    __slots__ = ("base", "block_signs", "blocks")

    def __init__(self, base: LabeledPoset, blocks: Sequence[Iterable[int]], block_signs: Sequence[int] | None = None):
        self.base = base
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)
        if block_signs is None:
            block_signs = [1 if i % 2 == 0 else -1 for i in range(len(self.blocks) - 1)]
        self.block_signs = tuple(block_signs)
        if len(self.block_signs) != len(self.blocks) - 1:
            raise ValueError("need one sign between each pair of consecutive blocks")

    @classmethod
    def from_names(cls, base: LabeledPoset, blocks: Sequence[Iterable[str]], block_signs=None) -> Saturation:
        idx = base.poset.index
        return cls(base, [[idx[x] for x in b] for b in blocks], block_signs)

    @property
    def grade_value_one(self) -> int:
        return len(self.blocks) - 1

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.blocks)

    @property
    def key(self) -> tuple:
        return self.blocks, self.block_signs

    def __eq__(self, other) -> bool:
        if not isinstance(other, Saturation):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return "Saturation(" + " | ".join(self.named_blocks_str()) + ")"

    def named_blocks(self) -> list[list[str]]:
        e = self.base.elements
        return [[e[x] for x in b] for b in self.blocks]

    def named_blocks_str(self) -> list[str]:
        return ["{" + ",".join(b) + "}" for b in self.named_blocks()]

    def block_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b}

    def act(self, g: Perm) -> Saturation:
        return Saturation(self.base, [[g[x] for x in b] for b in self.blocks], self.block_signs)

    def to_labeled_poset(self) -> LabeledPoset:
        """The saturated poset ``(Q, delta)`` on the base's identifiers."""
        e = self.base.elements
        labels = {}
        for i, s in enumerate(self.block_signs):
            for x in self.blocks[i]:
                for y in self.blocks[i + 1]:
                    labels[(e[x], e[y])] = s
        return analyze(FinitePoset(e, labels.keys()), labels)

    def automorphism_blocks(self) -> list[tuple[int, ...]]:
        return list(self.blocks)


def is_saturation(candidate: Saturation) -> bool:
    """Check the four defining conditions directly on the saturated poset."""
    base = candidate.base
    n = len(base)
    flat = sorted(x for b in candidate.blocks for x in b)
    if flat != list(range(n)) or any(not b for b in candidate.blocks):
        return False
    if not base.is_consistent:
        return False
    try:
        q = candidate.to_labeled_poset()
    except (InvalidCovers, IdentifierClash):
        return False
    if not q.is_consistent:
        return False
    P, Q = base.poset, q.poset
    for x in range(n):
        if q.rank[x] != base.rank[x]:
            return False
        for y in range(n):
            if P.less(x, y) and not Q.less(x, y):
                return False
            if abs(q.rank[y] - q.rank[x]) == 1 and not Q.comparable(x, y):
                return False
    return True


def _require_parity_form(lp: LabeledPoset) -> None:
    lp.require_consistent()
    if not all(r in (0, 1) for r in lp.rank):
        raise RankOutOfParityRange("saturations are enumerated for rank values in {0, 1} only")


def enumerate_saturations(lp: LabeledPoset) -> list[Saturation]:
    """All saturations of a labelled poset whose ranks lie in ``{0, 1}``."""
    _require_parity_form(lp)
    P = lp.poset
    n = len(P)
    full = (1 << n) - 1
    by_rank = [sum(1 << k for k in range(n) if lp.rank[k] == r) for r in (0, 1)]
    out: list[Saturation] = []
    blocks: list[int] = []

    def submasks(mask: int) -> Iterator[int]:
        sub = mask
        while sub:
            yield sub
            sub = (sub - 1) & mask

    def place(placed: int, i: int):
        if placed == full:
            out.append(Saturation(lp, [[k for k in range(n) if b >> k & 1] for b in blocks]))
            return
        # elements all of whose lower covers are already placed
        free = 0
        for k in range(n):
            if not placed >> k & 1 and P.below[k] & placed == P.below[k]:
                free |= 1 << k
        for block in sorted(submasks(free & by_rank[i % 2]), reverse=True):
            blocks.append(block)
            place(placed | block, i + 1)
            blocks.pop()

    place(0, 0)
    return out


def candidate_block_decompositions(lp: LabeledPoset) -> Iterator[Saturation]:
    """Every ordered set partition into blocks (reference for tiny posets)."""
    n = len(lp)

    def ordered_partitions(items: list[int]):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for part in ordered_partitions(rest):
            for i in range(len(part) + 1):
                yield part[:i] + [[first]] + part[i:]
            for i in range(len(part)):
                yield part[:i] + [[first] + part[i]] + part[i + 1 :]

    for part in ordered_partitions(list(range(n))):
        yield Saturation(lp, part)


@dataclass
class SaturationOrbit:
    representative: Saturation
    members: list[Saturation]
    stabilizer: PermGroup

    def __len__(self) -> int:
        return len(self.members)


def saturation_orbits(lp: LabeledPoset, group: PermGroup) -> list[SaturationOrbit]:
    """Orbits of ``group`` on the saturations.

    Ordered coarsest first (fewest blocks), then larger orbits first, then by
    the sequence of block sizes of the representative.

    Stabilizers are computed as the fixed-point set and, separately, as the
    elements of ``group`` that are automorphisms of the saturated poset.
    """
    check_subgroup_of_aut(lp, group)
    sats = enumerate_saturations(lp)
    position = {s: i for i, s in enumerate(sats)}
    seen: set[Saturation] = set()
    orbits = []
    for s in sats:
        if s in seen:
            continue
        members = []
        member_set = set()
        fixers = []
        for g in group.elements:
            t = s.act(g)
            if t == s:
                fixers.append(g)
            if t not in member_set:
                member_set.add(t)
                members.append(t)
        q = s.to_labeled_poset()
        via_aut = [g for g in group.elements if is_automorphism(q, g)]
        if via_aut != fixers:
            raise AssertionError("stabilizer disagrees with the automorphisms of the saturated poset")
        seen |= member_set
        members.sort(key=position.__getitem__)
        orbits.append(SaturationOrbit(s, members, PermGroup(group.degree, elements=fixers)))
    orbits.sort(key=lambda o: (len(o.representative.blocks), -len(o), o.representative.block_sizes))
    return orbits

