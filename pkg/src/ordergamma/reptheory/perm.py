"""Permutations of ``range(n)`` and explicitly enumerated permutation groups.

A permutation is a plain tuple ``g`` with ``g[i]`` the image of ``i``.
Composition is right-to-left: ``compose(g, h)[i] == g[h[i]]``.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property
from itertools import permutations, product

from ..errors import GroupTooLarge, NotASubgroup

Perm = tuple

MAX_GROUP_ORDER = 100_000


def identity(n: int) -> Perm:
    return tuple(range(n))


def compose(g: Perm, h: Perm) -> Perm:
    return tuple(g[x] for x in h)


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def conjugate(u: Perm, r: Perm) -> Perm:
    """``r^-1 u r``."""
    return compose(inverse(r), compose(u, r))


def power(g: Perm, k: int) -> Perm:
    if k < 0:
        g, k = inverse(g), -k
    result = identity(len(g))
    base = g
    while k:
        if k & 1:
            result = compose(base, result)
        base = compose(base, base)
        k >>= 1
    return result


def cycles(g: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(g)
    out = []
    for start in range(len(g)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = g[x]
        out.append(tuple(cyc))
    return out


def cycle_type(g: Perm, points: Iterable[int] | None = None) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, optionally of ``g`` restricted to an invariant set."""
    if points is None:
        lengths = [len(c) for c in cycles(g)]
    else:
        pts = set(points)
        seen: set[int] = set()
        lengths = []
        for start in sorted(pts):
            if start in seen:
                continue
            n = 0
            x = start
            while x not in seen:
                seen.add(x)
                n += 1
                x = g[x]
            lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def order_of(g: Perm) -> int:
    return math.lcm(*cycle_type(g)) if g else 1


def from_cycles(n: int, cyc: Iterable[Sequence[int]]) -> Perm:
    img = list(range(n))
    for c in cyc:
        for a, b in zip(c, c[1:] + type(c)(c[:1])):
            img[a] = b
    return tuple(img)


def cycle_notation(g: Perm, names: Sequence[str] | None = None) -> str:
    parts = []
    for c in cycles(g):
        if len(c) == 1:
            continue
        labels = [names[x] if names else str(x + 1) for x in c]
        parts.append("(" + " ".join(labels) + ")")
    return "".join(parts) or "e"


def _closure(gens: Sequence[Perm], n: int, limit: int = MAX_GROUP_ORDER) -> list[Perm]:
    e = identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = compose(s, x)
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise GroupTooLarge(f"group order exceeds {limit}")
                queue.append(y)
    return sorted(seen)


class PermGroup:
    """A finite permutation group with all of its elements listed.

    Elements are sorted lexicographically, so the identity comes first.
    Conjugacy classes are ordered by their lexicographically least member,
    which is also the class representative; class 0 is always ``{e}``.
    """

    def __init__(self, degree: int, generators: Iterable[Perm] = (), elements: Iterable[Perm] | None = None):
        self.degree = degree
        gens = [tuple(g) for g in generators]
        for g in gens:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise ValueError(f"not a permutation of {degree} points: {g}")
        if elements is None:
            self.elements = _closure(gens, degree)
        else:
            self.elements = sorted(set(tuple(x) for x in elements))
            if len(self.elements) > MAX_GROUP_ORDER:
                raise GroupTooLarge(f"group order exceeds {MAX_GROUP_ORDER}")
            if not gens:
                gens = _greedy_generators(self.elements, degree)
        self._given_generators = gens

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls(degree, elements=[identity(degree)])

    @classmethod
    def symmetric(cls, degree: int) -> PermGroup:
        return cls(degree, elements=permutations(range(degree)))

    @classmethod
    def cyclic(cls, g: Perm) -> PermGroup:
        return cls(len(g), [g])

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return tuple(g) in self.element_set

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash((self.degree, self.element_set))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @property
    def generators(self) -> list[Perm]:
        return list(self._given_generators)

    @cached_property
    def _class_data(self):
        index: dict[Perm, int] = {}
        classes: list[list[Perm]] = []
        gens = self.generators
        ginv = [inverse(s) for s in gens]
        for x in self.elements:
            if x in index:
                continue
            members = {x}
            queue = deque([x])
            while queue:
                y = queue.popleft()
                for s, si in zip(gens, ginv):
                    z = compose(s, compose(y, si))
                    if z not in members:
                        members.add(z)
                        queue.append(z)
            k = len(classes)
            for m in members:
                index[m] = k
            classes.append(sorted(members))
        return classes, index

    @property
    def conjugacy_classes(self) -> list[list[Perm]]:
        return self._class_data[0]

    @cached_property
    def classes(self) -> list[Perm]:
        """Class representatives."""
        return [c[0] for c in self.conjugacy_classes]

    @cached_property
    def class_sizes(self) -> list[int]:
        return [len(c) for c in self.conjugacy_classes]

    def class_index(self, g: Perm) -> int:
        try:
            return self._class_data[1][tuple(g)]
        except KeyError:
            raise NotASubgroup(f"{g} is not an element of {self!r}") from None

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(order_of(g) for g in self.classes))

    def orbits(self) -> list[tuple[int, ...]]:
        """Orbits on points, each sorted, ordered by least point."""
        parent = list(range(self.degree))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.generators:
            for i, j in enumerate(g):
                a, b = find(i), find(j)
                if a != b:
                    parent[max(a, b)] = min(a, b)
        groups: dict[int, list[int]] = {}
        for i in range(self.degree):
            groups.setdefault(find(i), []).append(i)
        return sorted(tuple(v) for v in groups.values())

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and self.element_set <= other.element_set

    def subgroup(self, elements: Iterable[Perm]) -> PermGroup:
        sub = PermGroup(self.degree, elements=elements)
        if not sub.is_subgroup_of(self):
            raise NotASubgroup("elements are not contained in the parent group")
        return sub

    def generated_subgroup(self, gens: Iterable[Perm]) -> PermGroup:
        gens = list(gens)
        sub = PermGroup(self.degree, gens) if gens else PermGroup.trivial(self.degree)
        if not sub.is_subgroup_of(self):
            raise NotASubgroup("generators are not contained in the parent group")
        return sub

    def left_transversal(self, sub: PermGroup) -> list[Perm]:
        """Lexicographically first representative of each left coset ``rH``."""
        if not sub.is_subgroup_of(self):
            raise NotASubgroup(f"{sub!r} is not a subgroup of {self!r}")
        covered: set[Perm] = set()
        reps = []
        for r in self.elements:
            if r in covered:
                continue
            reps.append(r)
            covered.update(compose(r, h) for h in sub.elements)
        return reps

    def is_symmetric_on_support(self) -> bool:
        moved = [i for i in range(self.degree) if any(g[i] != i for g in self.generators)]
        return self.order == math.factorial(len(moved))


def _greedy_generators(elements: Sequence[Perm], degree: int) -> list[Perm]:
    """A generating set for ``elements``; raises unless they form a group."""
    target = set(elements)
    if identity(degree) not in target:
        raise NotASubgroup("element list does not contain the identity")
    gens: list[Perm] = []
    span = {identity(degree)}
    for g in elements:
        if g not in span:
            gens.append(g)
            span = set(_closure(gens, degree))
            if not span <= target:
                raise NotASubgroup("element list is not closed under composition")
    if span != target:
        raise NotASubgroup("element list is not closed under composition")
    return gens


def all_subgroups(group: PermGroup) -> list[PermGroup]:
    """Every subgroup, ordered by (order, sorted element list)."""
    n = group.degree
    cyclic: dict[frozenset, PermGroup] = {}
    for g in group.elements:
        c = PermGroup(n, [g])
        cyclic.setdefault(c.element_set, c)
    found: dict[frozenset, PermGroup] = dict(cyclic)
    queue = deque(found.values())
    cyc_list = list(cyclic.values())
    while queue:
        h = queue.popleft()
        for c in cyc_list:
            if c.element_set <= h.element_set:
                continue
            j = PermGroup(n, h.generators + c.generators)
            if j.element_set not in found:
                found[j.element_set] = j
                queue.append(j)
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def direct_product(g: PermGroup, h: PermGroup) -> PermGroup:
    """``G x H`` acting on the disjoint union, ``G`` on the first ``g.degree`` points."""
    shift = g.degree
    elems = [a + tuple(x + shift for x in b) for a, b in product(g.elements, h.elements)]
    return PermGroup(g.degree + h.degree, elements=elems)


def partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of ``n`` in reverse lexicographic order, ``(n,)`` first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def centralizer_order(mu: Sequence[int]) -> int:
    """``z_mu``: the order of the centralizer of a permutation of cycle type ``mu``."""
    z = 1
    for part in set(mu):
        m = list(mu).count(part)
        z *= part**m * math.factorial(m)
    return z


class YoungGroup:
    """The direct product of the symmetric groups on the blocks of a set partition.

    Realized as a permutation group on ``range(degree)`` without listing
    its elements; classes are tuples of per-block cycle types.
    """

    def __init__(self, degree: int, blocks: Sequence[Sequence[int]]):
        self.degree = degree
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)
        covered = sorted(x for b in self.blocks for x in b)
        if covered != list(range(degree)):
            raise ValueError("blocks must partition range(degree)")
        self._block_of = {x: k for k, b in enumerate(self.blocks) for x in b}
        order = math.prod(math.factorial(len(b)) for b in self.blocks)
        if order > 10**12:
            raise GroupTooLarge("Young subgroup too large")

    def __eq__(self, other) -> bool:
        if not isinstance(other, YoungGroup):
            return NotImplemented
        return self.degree == other.degree and sorted(self.blocks) == sorted(other.blocks)

    def __hash__(self) -> int:
        return hash((self.degree, tuple(sorted(self.blocks))))

    def __repr__(self) -> str:
        return f"YoungGroup(blocks={[len(b) for b in self.blocks]})"

    @property
    def order(self) -> int:
        return math.prod(math.factorial(len(b)) for b in self.blocks)

    @cached_property
    def class_types(self) -> list[tuple[tuple[int, ...], ...]]:
        per_block = [list(reversed(partitions(len(b)))) for b in self.blocks]
        return list(product(*per_block))

    @cached_property
    def _type_index(self) -> dict:
        return {t: i for i, t in enumerate(self.class_types)}

    @cached_property
    def classes(self) -> list[Perm]:
        reps = []
        for types in self.class_types:
            cyc = []
            for block, mu in zip(self.blocks, types):
                pos = 0
                for part in mu:
                    cyc.append(block[pos : pos + part])
                    pos += part
            reps.append(from_cycles(self.degree, cyc))
        return reps

    @cached_property
    def class_sizes(self) -> list[int]:
        return [
            math.prod(math.factorial(sum(mu)) // centralizer_order(mu) for mu in types)
            for types in self.class_types
        ]

    def __contains__(self, g) -> bool:
        return all(self._block_of[g[x]] == self._block_of[x] for x in range(self.degree))

    def class_index(self, g: Perm) -> int:
        if g not in self:
            raise NotASubgroup(f"{g} does not preserve the blocks {self.blocks}")
        return self._type_index[tuple(cycle_type(g, b) for b in self.blocks)]

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(order_of(g) for g in self.classes))

    @property
    def elements(self) -> Iterator[Perm]:
        for parts in product(*(permutations(b) for b in self.blocks)):
            img = list(range(self.degree))
            for block, images in zip(self.blocks, parts):
                for x, y in zip(block, images):
                    img[x] = y
            yield tuple(img)

    def as_perm_group(self) -> PermGroup:
        return PermGroup(self.degree, elements=self.elements)
