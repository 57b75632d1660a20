"""Polynomials in ``t`` with integer or class-function coefficients."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from math import comb

from .errors import DegreeMismatch
from .reptheory.characters import (
    CharacterTable,
    ClassFunction,
    Group,
    VirtualCharacter,
    character_table,
    induce,
    restrict,
)
from .reptheory.perm import Perm


class IntPolynomial:
    """Integer polynomial, lowest degree first.

    >>> IntPolynomial([1, 1]) * IntPolynomial([1, 1])
    IntPolynomial(1 + 2t + t^2)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls([0] * k + [c])

    @classmethod
    def geometric(cls, k: int) -> IntPolynomial:
        """``1 + t + ... + t^(k-1)``."""
        return cls([1] * k)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other):
        other = _as_int_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_int_poly(other))

    def __rsub__(self, other):
        return _as_int_poly(other) - self

    def __mul__(self, other):
        other = _as_int_poly(other)
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (IntPolynomial, int, list, tuple)):
            return self.coeffs == _as_int_poly(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, k: int) -> IntPolynomial:
        """Multiply by ``t^k``; negative ``k`` requires the low coefficients to vanish."""
        if k >= 0:
            return IntPolynomial([0] * k + list(self.coeffs))
        if any(self.coeffs[: -k]):
            raise DegreeMismatch(f"cannot divide {self} by t^{-k}")
        return IntPolynomial(self.coeffs[-k:])

    def truncate(self, n: int) -> IntPolynomial:
        return IntPolynomial(self.coeffs[: n + 1])

    def is_palindromic(self, degree: int | None = None) -> bool:
        d = self.degree if degree is None else degree
        return all(self[i] == self[d - i] for i in range(d + 1)) and self.degree <= d

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"

    def __str__(self) -> str:
        return format_terms([(i, str(c)) for i, c in enumerate(self.coeffs) if c])

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _as_int_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial([x])
    if isinstance(x, (list, tuple)):
        return IntPolynomial(x)
    raise TypeError(f"cannot treat {x!r} as an integer polynomial")


def format_terms(terms: Sequence[tuple[int, str]]) -> str:
    """Render ``(power, coefficient text)`` pairs as ``c0 + c1 t + ...``."""
    if not terms:
        return "0"
    parts = []
    for k, text in terms:
        compound = any(ch in text for ch in "+ ") and not text.startswith("(")
        body = f"({text})" if compound and k else text
        if k == 0:
            parts.append(text)
        elif body == "1":
            parts.append("t" if k == 1 else f"t^{k}")
        elif body == "-1":
            parts.append("-t" if k == 1 else f"-t^{k}")
        else:
            parts.append(f"{body}t" if k == 1 else f"{body}t^{k}")
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def binomial_hstar(counts: Sequence[int], dim: int) -> IntPolynomial:
    """Numerator of ``sum_m counts[m] t^m`` times ``(1 - t)^(dim + 1)``, up to degree ``dim``."""
    return IntPolynomial(
        sum((-1) ** (j - i) * comb(dim + 1, j - i) * counts[i] for i in range(j + 1)) for j in range(dim + 1)
    )


class CharPolynomial:
    """A polynomial whose coefficients are class functions of one group."""

    __slots__ = ("coeffs", "group")

    def __init__(self, group: Group, coeffs: Iterable[ClassFunction]):
        self.group = group
        c = list(coeffs)
        for f in c:
            if f.group is not group and f.group != group:
                raise ValueError("coefficient lives on a different group")
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_evaluations(cls, group: Group, evals: Sequence[IntPolynomial]) -> CharPolynomial:
        """Assemble from one integer polynomial per conjugacy class."""
        deg = max((p.degree for p in evals), default=-1)
        return cls(group, [ClassFunction(group, [p[i] for p in evals]) for i in range(deg + 1)])

    @classmethod
    def from_function(cls, group: Group, fn: Callable[[Perm], IntPolynomial]) -> CharPolynomial:
        return cls.from_evaluations(group, [fn(u) for u in group.classes])

    @classmethod
    def one(cls, group: Group) -> CharPolynomial:
        return cls(group, [ClassFunction.trivial(group)])

    @classmethod
    def from_virtual(cls, coeffs: Sequence[VirtualCharacter]) -> CharPolynomial:
        group = coeffs[0].table.group
        return cls(group, [v.class_function() for v in coeffs])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> ClassFunction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ClassFunction.constant(self.group, 0)

    def evaluate(self, g: Perm) -> IntPolynomial:
        """Specialization at the group element ``g``."""
        k = self.group.class_index(g)
        return IntPolynomial(c.values[k] for c in self.coeffs)

    def at_class(self, k: int) -> IntPolynomial:
        return IntPolynomial(c.values[k] for c in self.coeffs)

    def at_identity(self) -> IntPolynomial:
        return self.at_class(0)

    def evaluations(self) -> list[IntPolynomial]:
        return [self.at_class(k) for k in range(len(self.group.classes))]

    def __add__(self, other):
        if isinstance(other, CharPolynomial):
            n = max(len(self.coeffs), len(other.coeffs))
            return CharPolynomial(self.group, [self[i] + other[i] for i in range(n)])
        if other == 0:
            return self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return CharPolynomial(self.group, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return CharPolynomial(self.group, [c * other for c in self.coeffs])
        if isinstance(other, IntPolynomial):
            other = CharPolynomial(self.group, [ClassFunction.constant(self.group, c) for c in other.coeffs])
        if not isinstance(other, CharPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return CharPolynomial(self.group, [])
        out = [ClassFunction.constant(self.group, 0) for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return CharPolynomial(self.group, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharPolynomial):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return all(self[i] == other[i] for i in range(n))

    __hash__ = None  # type: ignore[assignment]

    def shift(self, k: int) -> CharPolynomial:
        zero = ClassFunction.constant(self.group, 0)
        if k >= 0:
            return CharPolynomial(self.group, [zero] * k + list(self.coeffs))
        if any(not c.is_zero() for c in self.coeffs[: -k]):
            raise DegreeMismatch(f"cannot divide by t^{-k}: low coefficients are nonzero")
        return CharPolynomial(self.group, self.coeffs[-k:])

    def induce(self, parent: Group) -> CharPolynomial:
        return CharPolynomial(parent, [induce(self.group, parent, c) for c in self.coeffs])

    def restrict(self, sub: Group) -> CharPolynomial:
        return CharPolynomial(sub, [restrict(self.group, sub, c) for c in self.coeffs])

    def table(self) -> CharacterTable:
        return character_table(self.group)

    def decompose(self, table: CharacterTable | None = None) -> list[VirtualCharacter]:
        table = table or self.table()
        return [table.decompose(c) for c in self.coeffs]

    def is_effective(self) -> bool:
        return all(v.is_effective() for v in self.decompose())

    def is_palindromic(self, degree: int | None = None) -> bool:
        d = self.degree if degree is None else degree
        return self.degree <= d and all(self[i] == self[d - i] for i in range(d + 1))

    def __str__(self) -> str:
        return format_terms([(i, str(v)) for i, v in enumerate(self.decompose()) if not v.is_zero()])

    def __repr__(self) -> str:
        return f"CharPolynomial({self})"

    def to_json(self) -> dict:
        table = self.table()
        return {
            "irreducibles": table.names,
            "coefficients": [list(v.multiplicities) for v in self.decompose(table)],
            "evaluations": {
                _class_label(self.group, k): list(p.coeffs) for k, p in enumerate(self.evaluations())
            },
        }


def _class_label(group: Group, k: int) -> str:
    from .reptheory.perm import cycle_notation

    return cycle_notation(group.classes[k])
