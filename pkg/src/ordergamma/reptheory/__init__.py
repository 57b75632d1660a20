"""Permutation groups, exact character tables and virtual characters."""

from .characters import (
    CharacterTable,
    ClassFunction,
    VirtualCharacter,
    character_table,
    decompose,
    induce,
    is_effective,
    restrict,
    symmetric_group_table,
)
from .cyclotomic import Cyclotomic
from .perm import (
    PermGroup,
    YoungGroup,
    all_subgroups,
    cycle_type,
    direct_product,
    from_cycles,
)
from .symmetric import standard_tableaux, symmetric_character

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "Cyclotomic",
    "PermGroup",
    "VirtualCharacter",
    "YoungGroup",
    "all_subgroups",
    "character_table",
    "cycle_type",
    "decompose",
    "direct_product",
    "from_cycles",
    "induce",
    "is_effective",
    "restrict",
    "standard_tableaux",
    "symmetric_character",
    "symmetric_group_table",
]
