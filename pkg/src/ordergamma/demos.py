"""Built-in examples: an 8-element bipartite poset with a dihedral action, and the octahedron."""

from __future__ import annotations

from .ehrhart import LatticePolytopeHRep, cross_polytope
from .poset import FinitePoset, LabeledPoset, analyze
from .reptheory.characters import CharacterTable, character_table
from .reptheory.perm import Perm, PermGroup, compose, from_cycles, power

D4_ELEMENTS = [f"p{i}" for i in range(1, 9)]
D4_COVERS = [(f"p{i}", f"p{i + 4}") for i in range(1, 5)] + [("p1", "p6"), ("p2", "p7"), ("p3", "p8"), ("p4", "p5")]

# rotation of both levels, and the reflection fixing p1 and p3
SIGMA: Perm = from_cycles(8, [(0, 1, 2, 3), (4, 5, 6, 7)])
TAU: Perm = from_cycles(8, [(1, 3), (4, 5), (6, 7)])

D4_CLASS_LABELS = ["e", "{σ,σ³}", "σ²", "{τ,τσ²}", "{τσ,τσ³}"]
D4_IRREDUCIBLE_NAMES = ["1", "χ1", "χ2", "χ3", "χ4"]
# rows: irreducibles; columns: the classes above
D4_REFERENCE_TABLE = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [1, -1, 1, 1, -1],
    [1, -1, 1, -1, 1],
    [2, 0, -2, 0, 0],
]

# the eight labelled copies of the four-block saturation with block sizes 3,1,1,3
Q2_ORBIT = [
    [["p2", "p3", "p4"], ["p7"], ["p1"], ["p5", "p6", "p8"]],
    [["p2", "p3", "p4"], ["p8"], ["p1"], ["p5", "p6", "p7"]],
    [["p1", "p3", "p4"], ["p5"], ["p2"], ["p6", "p7", "p8"]],
    [["p1", "p3", "p4"], ["p8"], ["p2"], ["p5", "p6", "p7"]],
    [["p1", "p2", "p4"], ["p5"], ["p3"], ["p6", "p7", "p8"]],
    [["p1", "p2", "p4"], ["p6"], ["p3"], ["p5", "p7", "p8"]],
    [["p1", "p2", "p3"], ["p6"], ["p4"], ["p5", "p7", "p8"]],
    [["p1", "p2", "p3"], ["p7"], ["p4"], ["p5", "p6", "p8"]],
]


def d4_poset() -> LabeledPoset:
    return analyze(FinitePoset(D4_ELEMENTS, D4_COVERS))


def d4_group() -> PermGroup:
    return PermGroup(8, [SIGMA, TAU])


def d4_class_representatives() -> list[Perm]:
    return [tuple(range(8)), SIGMA, power(SIGMA, 2), TAU, compose(TAU, SIGMA)]


def d4_table() -> CharacterTable:
    """The computed table of the dihedral group, rows renamed to the reference order."""
    table, _ = character_table(d4_group()).aligned(
        D4_REFERENCE_TABLE, d4_class_representatives(), D4_IRREDUCIBLE_NAMES
    )
    return table


def octahedron() -> LatticePolytopeHRep:
    return cross_polytope(3)


def octahedron_group() -> PermGroup:
    return PermGroup.symmetric(3)


# symmetric-group tables on the classes e, (12), (123) and e, (12), (123), (1234), (12)(34)
S3_REFERENCE = {
    "classes": [[], [(0, 1)], [(0, 1, 2)]],
    "names": ["1", "χ^(1,1,1)", "χ^(2,1)"],
    "rows": [[1, 1, 1], [1, -1, 1], [2, 0, -1]],
}
S4_REFERENCE = {
    "classes": [[], [(0, 1)], [(0, 1, 2)], [(0, 1, 2, 3)], [(0, 1), (2, 3)]],
    "names": ["1", "χ^(1,1,1,1)", "χ^(2,2)", "χ^(3,1)", "χ^(2,1,1)"],
    "rows": [[1, 1, 1, 1, 1], [1, -1, 1, -1, 1], [2, 0, -1, 0, 2], [3, 1, 0, -1, -1], [3, -1, 0, 1, -1]],
}
