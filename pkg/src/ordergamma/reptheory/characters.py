"""Class functions, character tables and the ring of virtual characters.

Tables of explicitly enumerated groups come from the Dixon-Burnside method:
the class-sum structure constants are diagonalized over a prime field and the
resulting modular characters are lifted back to Q(zeta_N).  Young subgroups
(products of symmetric groups) get their tables from Murnaghan-Nakayama.
"""

from __future__ import annotations

import math
import random
from collections.abc import Callable, Iterable, Sequence
from fractions import Fraction
from itertools import product
from typing import Union

from ..errors import NotASubgroup, NotVirtual
from .cyclotomic import Cyclotomic, Number, coefficient_vector, conj, sort_key
from .perm import (
    Perm,
    PermGroup,
    YoungGroup,
    compose,
    conjugate,
    cycle_notation,
    cycle_type,
    inverse,
    power,
)
from .symmetric import symmetric_character

Group = Union[PermGroup, YoungGroup]


def _same_group(a: Group, b: Group) -> bool:
    return a is b or a == b


def is_subgroup(sub: Group, parent: Group) -> bool:
    if sub.degree != parent.degree:
        return False
    if isinstance(sub, YoungGroup) and isinstance(parent, YoungGroup):
        return all(any(set(b) <= set(c) for c in parent.blocks) for b in sub.blocks)
    return all(g in parent for g in sub.elements)


class ClassFunction:
    """A function on the conjugacy classes of ``group``, stored class by class."""

    __slots__ = ("group", "values")

    def __init__(self, group: Group, values: Iterable[Number]):
        self.group = group
        self.values = tuple(values)
        if len(self.values) != len(group.classes):
            raise ValueError("one value per conjugacy class is required")

    @classmethod
    def constant(cls, group: Group, c: Number) -> ClassFunction:
        return cls(group, [c] * len(group.classes))

    @classmethod
    def trivial(cls, group: Group) -> ClassFunction:
        return cls.constant(group, 1)

    @classmethod
    def from_function(cls, group: Group, fn: Callable[[Perm], Number]) -> ClassFunction:
        return cls(group, [fn(g) for g in group.classes])

    @classmethod
    def regular(cls, group: Group) -> ClassFunction:
        return cls(group, [group.order] + [0] * (len(group.classes) - 1))

    def __call__(self, g: Perm) -> Number:
        return self.values[self.group.class_index(g)]

    def _check(self, other: ClassFunction):
        if not _same_group(self.group, other.group):
            raise ValueError("class functions live on different groups")

    def __add__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])
        if other == 0:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ClassFunction(self.group, [-a for a in self.values])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return ClassFunction(self.group, [a * other for a in self.values])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return _same_group(self.group, other.group) and all(a == b for a, b in zip(self.values, other.values))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"ClassFunction({list(self.values)})"

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def inner(self, other: ClassFunction) -> Number:
        """``<self, other> = (1/|G|) sum_g self(g) conj(other(g))``."""
        self._check(other)
        total: Number = 0
        for size, a, b in zip(self.group.class_sizes, self.values, other.values):
            total = total + size * a * conj(b)
        return total / self.group.order if isinstance(total, Cyclotomic) else Fraction(total, self.group.order)

    @property
    def degree(self) -> Number:
        return self.values[0]


class CharacterTable:
    """Irreducible characters of a group, trivial character first."""

    def __init__(self, group: Group, irreducibles: Sequence[ClassFunction], names: Sequence[str] | None = None):
        self.group = group
        self.irreducibles = list(irreducibles)
        if names is None:
            names = ["1"] + [f"χ{i}" for i in range(1, len(self.irreducibles))]
        self.names = list(names)

    def __len__(self) -> int:
        return len(self.irreducibles)

    def __getitem__(self, i: int) -> ClassFunction:
        return self.irreducibles[i]

    @property
    def degrees(self) -> list[int]:
        return [int(chi.values[0]) for chi in self.irreducibles]

    def decompose(self, f: ClassFunction) -> VirtualCharacter:
        if not _same_group(f.group, self.group):
            raise ValueError("class function lives on a different group")
        mults = []
        for chi in self.irreducibles:
            m = f.inner(chi)
            if isinstance(m, Cyclotomic) or Fraction(m).denominator != 1:
                raise NotVirtual(f"multiplicity {m} is not an integer")
            mults.append(int(m))
        return VirtualCharacter(self, mults)

    def virtual(self, mults: Sequence[int]) -> VirtualCharacter:
        return VirtualCharacter(self, mults)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def aligned(
        self, reference: Sequence[Sequence[Number]], representatives: Sequence[Perm], names: Sequence[str]
    ) -> tuple[CharacterTable, list[int]]:
        """Reorder rows to match ``reference`` (rows of values at ``representatives``).

        Returns the reordered table and, for each reference row, the index of
        the matching row in ``self``.
        """
        if len(reference) != len(self) or len(names) != len(self):
            raise ValueError("reference must list every irreducible")
        perm = []
        for ref in reference:
            hits = [
                k for k, chi in enumerate(self.irreducibles) if all(chi(g) == v for g, v in zip(representatives, ref))
            ]
            if len(hits) != 1:
                raise ValueError(f"reference row {list(ref)} matches {len(hits)} computed irreducibles")
            perm.append(hits[0])
        if sorted(perm) != list(range(len(self))):
            raise ValueError("reference rows do not match distinct irreducibles")
        return CharacterTable(self.group, [self.irreducibles[k] for k in perm], names), perm

    def to_json(self) -> dict:
        n = self.group.exponent
        return {
            "classes": [
                {"representative": cycle_notation(g), "size": s}
                for g, s in zip(self.group.classes, self.group.class_sizes)
            ],
            "exponent": n,
            "names": self.names,
            "degrees": self.degrees,
            "values": [
                [[str(c) for c in coefficient_vector(v, n)] for v in chi.values] for chi in self.irreducibles
            ],
        }


class VirtualCharacter:
    """An integer combination of the irreducibles of a fixed table."""

    __slots__ = ("multiplicities", "table")

    def __init__(self, table: CharacterTable, multiplicities: Iterable[int]):
        self.table = table
        self.multiplicities = tuple(int(m) for m in multiplicities)
        if len(self.multiplicities) != len(table):
            raise ValueError("one multiplicity per irreducible is required")

    @classmethod
    def zero(cls, table: CharacterTable) -> VirtualCharacter:
        return cls(table, [0] * len(table))

    def class_function(self) -> ClassFunction:
        out = ClassFunction.constant(self.table.group, 0)
        for m, chi in zip(self.multiplicities, self.table.irreducibles):
            if m:
                out = out + m * chi
        return out

    def is_effective(self) -> bool:
        return all(m >= 0 for m in self.multiplicities)

    def is_zero(self) -> bool:
        return not any(self.multiplicities)

    def __add__(self, other):
        if isinstance(other, VirtualCharacter):
            return VirtualCharacter(self.table, [a + b for a, b in zip(self.multiplicities, other.multiplicities)])
        if other == 0:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return VirtualCharacter(self.table, [-a for a in self.multiplicities])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k: int):
        if isinstance(k, int):
            return VirtualCharacter(self.table, [a * k for a in self.multiplicities])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, VirtualCharacter):
            return self.multiplicities == other.multiplicities and _same_group(self.table.group, other.table.group)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.multiplicities)

    def __str__(self) -> str:
        terms = []
        for m, name in zip(self.multiplicities, self.table.names):
            if not m:
                continue
            if name == "1":
                body = str(abs(m))
            else:
                body = name if abs(m) == 1 else f"{abs(m)}{name}"
            sign = "-" if m < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"VirtualCharacter({self})"

    def named(self) -> dict[str, int]:
        return {n: m for n, m in zip(self.table.names, self.multiplicities) if m}


def is_effective(v: VirtualCharacter) -> bool:
    return v.is_effective()


def decompose(table: CharacterTable, f: ClassFunction) -> VirtualCharacter:
    return table.decompose(f)


def restrict(parent: Group, sub: Group, f: ClassFunction) -> ClassFunction:
    """Evaluate ``f`` on the classes of the subgroup ``sub``."""
    if not _same_group(f.group, parent):
        raise ValueError("class function does not live on the parent group")
    if not is_subgroup(sub, parent):
        raise NotASubgroup(f"{sub!r} is not a subgroup of {parent!r}")
    return ClassFunction(sub, [f(g) for g in sub.classes])


def induce(
    sub: Group, parent: PermGroup, f: ClassFunction, transversal: Sequence[Perm] | None = None
) -> ClassFunction:
    """``Ind_sub^parent f`` via a left-coset transversal (lexicographic by default)."""
    if not _same_group(f.group, sub):
        raise ValueError("class function does not live on the subgroup")
    if not is_subgroup(sub, parent):
        raise NotASubgroup(f"{sub!r} is not a subgroup of {parent!r}")
    if transversal is None:
        transversal = parent.left_transversal(sub)
    values = []
    for u in parent.classes:
        total: Number = 0
        for r in transversal:
            x = conjugate(u, r)
            if x in sub:
                total = total + f(x)
        values.append(total)
    return ClassFunction(parent, values)


# ---------------------------------------------------------------------------
# Character tables

_TABLE_CACHE: dict = {}


def character_table(group: Group) -> CharacterTable:
    """The irreducible characters of ``group`` (cached per group)."""
    if isinstance(group, YoungGroup):
        key = ("young", group.degree, group.blocks)
    else:
        key = ("perm", group.degree, group.element_set)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = _young_table(group) if isinstance(group, YoungGroup) else _dixon_table(group)
        _TABLE_CACHE[key] = table
    return table


def _partition_name(lam: Sequence[int]) -> str:
    return "χ^(" + ",".join(map(str, lam)) + ")"


def _young_table(group: YoungGroup) -> CharacterTable:
    from .perm import partitions

    shapes = list(product(*(partitions(len(b)) for b in group.blocks)))
    rows = []
    for shape in shapes:
        values = [
            math.prod(symmetric_character(lam, mu) for lam, mu in zip(shape, types)) for types in group.class_types
        ]
        rows.append((shape, ClassFunction(group, values)))
    rows.sort(key=lambda item: (item[1].values[0] != 1 or any(v != 1 for v in item[1].values), item[1].values[0],
                                tuple(item[1].values)))
    if len(group.blocks) == 1:
        names = [_partition_name(s[0]) for s, _ in rows]
    else:
        names = ["⊗".join(_partition_name(lam) for lam in s) for s, _ in rows]
    return CharacterTable(group, [chi for _, chi in rows], names)


def symmetric_group_table(d: int) -> CharacterTable:
    """Table of ``S_d`` indexed by cycle types, rows named by partitions."""
    return character_table(YoungGroup(d, [range(d)]))


def _dixon_table(group: PermGroup) -> CharacterTable:
    k = len(group.classes)
    order = group.order
    n_exp = group.exponent
    sizes = group.class_sizes
    inv_class = [group.class_index(inverse(g)) for g in group.classes]

    p = _choose_prime(n_exp, max(2 * math.isqrt(order) + 2, k + 1))
    # structure constants a[j][s][r] = #{x in C_j : x^-1 g_r in C_s}
    mats = [[[0] * k for _ in range(k)] for _ in range(k)]
    for r, gr in enumerate(group.classes):
        for x in group.elements:
            j = group.class_index(x)
            s = group.class_index(compose(inverse(x), gr))
            mats[j][s][r] += 1
    mats = [[[v % p for v in row] for row in m] for m in mats]

    vectors = _common_eigenvectors(mats, k, p)
    z = pow(_primitive_root(p), (p - 1) // n_exp, p)
    power_class = [[group.class_index(power(g, l)) for l in range(n_exp)] for g in group.classes]

    rows = []
    for v in vectors:
        inv0 = pow(v[0], p - 2, p)
        omega = [x * inv0 % p for x in v]
        norm = sum(omega[r] * omega[inv_class[r]] * pow(sizes[r], p - 2, p) for r in range(k)) % p
        d2 = order * pow(norm, p - 2, p) % p
        d = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == d2), None)
        if d is None:
            raise ArithmeticError("could not recover a character degree")
        chi_p = [d * omega[r] * pow(sizes[r], p - 2, p) % p for r in range(k)]
        values = [_lift(chi_p, power_class[r], n_exp, z, p, d) for r in range(k)]
        rows.append(ClassFunction(group, values))

    def key(chi: ClassFunction):
        trivial = all(v == 1 for v in chi.values)
        return (not trivial, chi.values[0], tuple(sort_key(v, n_exp) for v in chi.values))

    rows.sort(key=key)
    names = None
    if group.is_symmetric_on_support():
        names = _symmetric_names(group, rows)
    return CharacterTable(group, rows, names)


def _symmetric_names(group: PermGroup, rows: list[ClassFunction]) -> list[str] | None:
    from .perm import partitions

    support = [i for i in range(group.degree) if any(g[i] != i for g in group.generators)]
    if not support:
        return None
    types = [cycle_type(g, support) for g in group.classes]
    names = []
    for chi in rows:
        match = [lam for lam in partitions(len(support)) if all(
            symmetric_character(lam, mu) == v for mu, v in zip(types, chi.values))]
        if len(match) != 1:
            return None
        names.append("1" if len(support) and match[0] == (len(support),) else _partition_name(match[0]))
    return names


def _lift(chi_p: list[int], classes_of_powers: list[int], n: int, z: int, p: int, d: int) -> Number:
    inv_n = pow(n, p - 2, p)
    zinv = pow(z, p - 2, p)
    mult = {}
    for kk in range(n):
        s = 0
        step = pow(zinv, kk, p)
        w = 1
        for l in range(n):
            s += chi_p[classes_of_powers[l]] * w
            w = w * step % p
        m = s * inv_n % p
        if m > d:
            raise ArithmeticError("eigenvalue multiplicity out of range")
        if m:
            mult[kk] = m
    return Cyclotomic.from_powers(n, mult)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % f for f in range(2, math.isqrt(q) + 1))


def _choose_prime(n: int, lower: int) -> int:
    q = n + 1
    while q <= lower or not _is_prime(q):
        q += n
    return q


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = {f for f in range(2, phi + 1) if phi % f == 0 and _is_prime(f)}
    for g in range(2, p):
        if all(pow(g, phi // f, p) != 1 for f in factors):
            return g
    return 1  # p == 2


def _nullspace(m: list[list[int]], p: int) -> list[list[int]]:
    """Basis of ``{x : m x = 0}`` over F_p."""
    rows = _row_reduce(m, p)
    ncols = len(m[0])
    pivots = [next(c for c in range(ncols) if row[c]) for row in rows]
    basis = []
    for fc in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = -row[fc] % p
        basis.append(v)
    return basis


def _charpoly_roots(m: list[list[int]], p: int) -> list[int]:
    """Distinct roots in F_p of the characteristic polynomial (Faddeev-LeVerrier)."""
    n = len(m)
    coeffs = [1]  # x^n + c_{1} x^{n-1} + ...
    mk = [[0] * n for _ in range(n)]
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    c_prev = 1
    for k in range(1, n + 1):
        base = [[(mk[i][j] + c_prev * ident[i][j]) % p for j in range(n)] for i in range(n)]
        mk = [[sum(m[i][t] * base[t][j] for t in range(n)) % p for j in range(n)] for i in range(n)]
        trace = sum(mk[i][i] for i in range(n)) % p
        c_prev = -trace * pow(k, p - 2, p) % p
        coeffs.append(c_prev)
    roots = []
    for x in range(p):
        acc = 0
        for c in coeffs:
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _common_eigenvectors(mats: list[list[list[int]]], k: int, p: int) -> list[list[int]]:
    rng = random.Random(0)
    spaces = [[[int(i == j) for j in range(k)] for i in range(k)]]
    done = []
    coeffs = [rng.randrange(1, p) for _ in mats]
    combo = [[sum(c * m[i][j] for c, m in zip(coeffs, mats)) % p for j in range(k)] for i in range(k)]
    candidates = [combo] + mats
    while spaces:
        basis = spaces.pop()
        if len(basis) == 1:
            done.append(basis[0])
            continue
        for mat in candidates:
            parts = _split(basis, mat, p)
            if len(parts) > 1:
                spaces.extend(parts)
                break
        else:
            raise ArithmeticError("class algebra did not split; unexpected for a good prime")
    return done


def _split(basis: list[list[int]], mat: list[list[int]], p: int) -> list[list[list[int]]]:
    """Eigenspaces of ``mat`` restricted to the invariant subspace spanned by ``basis``."""
    k = len(mat)
    d = len(basis)
    # echelonize the basis so coordinates can be read off pivot positions
    ech = _row_reduce(basis, p)
    pivots = [next(c for c in range(k) if row[c]) for row in ech]
    images = [[sum(mat[i][t] * b[t] for t in range(k)) % p for i in range(k)] for b in ech]
    restricted = [[images[col][pivots[row]] for col in range(d)] for row in range(d)]
    parts = []
    for lam in _charpoly_roots(restricted, p):
        shifted = [[(restricted[i][j] - (lam if i == j else 0)) % p for j in range(d)] for i in range(d)]
        coords_basis = _nullspace(shifted, p)
        parts.append([[sum(c * ech[i][t] for i, c in enumerate(coords)) % p for t in range(k)] for coords in coords_basis])
    return parts


def _row_reduce(rows: list[list[int]], p: int) -> list[list[int]]:
    rows = [r[:] for r in rows]
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[rank], rows[pr] = rows[pr], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rows[:rank]
