"""Small posets for exhaustive and randomised property checks."""

from __future__ import annotations

import itertools
import random

from ordergamma.poset import Consistency, FinitePoset, LabeledPoset, analyze


def compositions(n: int):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def _connected(n: int, edges) -> bool:
    adj = {i: set() for i in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, stack = {0}, [0]
    while stack:
        for y in adj[stack.pop()] - seen:
            seen.add(y)
            stack.append(y)
    return len(seen) == n


def _canonical(levels, edges) -> tuple:
    """Smallest edge list over relabellings that permute each level."""
    best = None
    offsets = list(itertools.accumulate((0,) + levels))
    for perms in itertools.product(*(itertools.permutations(range(k)) for k in levels)):
        relabel = {}
        for lvl, p in enumerate(perms):
            for i, j in enumerate(p):
                relabel[offsets[lvl] + i] = offsets[lvl] + j
        key = tuple(sorted((relabel[a], relabel[b]) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


def graded_posets(max_size: int):
    """Connected posets, all maximal chains of one length, with at most ``max_size`` elements.

    Built level by level: every element above level 0 covers something on the
    level below and every element below the top is covered.
    """
    out = []
    for n in range(1, max_size + 1):
        seen = set()
        for levels in compositions(n):
            offsets = list(itertools.accumulate((0,) + levels))
            slots = [
                [(offsets[i] + a, offsets[i + 1] + b) for a in range(levels[i]) for b in range(levels[i + 1])]
                for i in range(len(levels) - 1)
            ]
            choices = []
            for i, pairs in enumerate(slots):
                ok = []
                for mask in range(1, 1 << len(pairs)):
                    chosen = [pairs[j] for j in range(len(pairs)) if mask >> j & 1]
                    lows = {a for a, _ in chosen}
                    highs = {b for _, b in chosen}
                    if len(lows) == levels[i] and len(highs) == levels[i + 1]:
                        ok.append(chosen)
                choices.append(ok)
            for combo in itertools.product(*choices):
                edges = [e for part in combo for e in part]
                if not _connected(n, edges):
                    continue
                key = (levels, _canonical(levels, edges))
                if key in seen:
                    continue
                seen.add(key)
                names = [f"x{i}" for i in range(n)]
                out.append(analyze(FinitePoset(names, [(names[a], names[b]) for a, b in edges])))
    return out


def random_poset(rng: random.Random, n: int) -> FinitePoset:
    """Transitive reduction of a random DAG on ``n`` points."""
    rel = {(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45}
    closure = set(rel)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if (i, k) in closure and (k, j) in closure:
                    closure.add((i, j))
    covers = [
        (i, j) for (i, j) in closure if not any((i, k) in closure and (k, j) in closure for k in range(n))
    ]
    order = list(range(n))
    rng.shuffle(order)
    names = [f"y{order[i]}" for i in range(n)]
    return FinitePoset(names, [(names[a], names[b]) for a, b in covers])


def random_sign_graded(rng: random.Random, max_size: int = 6) -> LabeledPoset:
    """A random connected poset with a random labelling that is graded."""
    while True:
        n = rng.choice([3, 4, 5, 5] + [max_size] * 3)
        poset = random_poset(rng, n)
        covers = poset.cover_names()
        if not covers or not _connected(n, [(poset.index[a], poset.index[b]) for a, b in covers]):
            continue
        # random height function along the Hasse diagram, signs read off from it
        height = {poset.elements[0]: 0}
        frontier = [poset.elements[0]]
        adjacent = {e: [] for e in poset.elements}
        for a, b in covers:
            adjacent[a].append((b, 1))
            adjacent[b].append((a, -1))
        ok = True
        while frontier and ok:
            x = frontier.pop()
            for y, direction in adjacent[x]:
                step = rng.choice((1, -1))
                if y not in height:
                    height[y] = height[x] + direction * step
                    frontier.append(y)
        labels = {}
        for a, b in covers:
            d = height[b] - height[a]
            if abs(d) != 1:
                ok = False
                break
            labels[(a, b)] = d
        if not ok:
            continue
        lp = analyze(poset, labels)
        if lp.consistency is Consistency.GRADED:
            return lp


def random_cases_small(count: int = 40, seed: int = 7) -> list[LabeledPoset]:
    rng = random.Random(seed)
    return [random_sign_graded(rng, 5) for _ in range(count)]
