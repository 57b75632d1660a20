"""JSON input and output for posets, groups and polytopes."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

from .ehrhart import LatticePolytopeHRep
from .errors import GuardExceeded, OrderGammaError, ParseError
from .poset import FinitePoset, LabeledPoset, analyze, check_subgroup_of_aut
from .reptheory.perm import MAX_GROUP_ORDER, Perm, PermGroup, cycles

MAX_ELEMENTS = 12


def read_json(source: str | Path | dict) -> dict:
    if isinstance(source, dict):
        return source
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}: malformed JSON ({exc})") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{source}: expected a JSON object")
    return data


def poset_from_json(data: dict) -> tuple[LabeledPoset, PermGroup | None]:
    """Parse ``{"elements", "covers", "labels"?, "group"?}``."""
    try:
        elements = [str(e) for e in data["elements"]]
        covers = [(str(a), str(b)) for a, b in data.get("covers", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"poset JSON needs 'elements' and a list of [a, b] 'covers' ({exc})") from exc
    if len(elements) > MAX_ELEMENTS:
        raise GuardExceeded(f"posets are limited to {MAX_ELEMENTS} elements")
    known = set(elements)
    for a, b in covers:
        if a not in known or b not in known:
            raise ParseError(f"cover [{a}, {b}] mentions an unknown element")
    labels = None
    if "labels" in data:
        labels = {(a, b): 1 for a, b in covers}
        try:
            for row in data["labels"]:
                a, b = row["cover"]
                labels[(str(a), str(b))] = int(row["sign"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"labels must look like {{'cover': [a, b], 'sign': 1}} ({exc})") from exc
    poset = FinitePoset(elements, covers)
    lp = analyze(poset, labels)
    group = None
    if data.get("group") is not None:
        group = group_from_json(lp, data["group"])
    return lp, group


def group_from_json(lp: LabeledPoset, data: Any) -> PermGroup:
    """Generators given as element-to-element maps; unmentioned elements stay fixed."""
    try:
        gens_raw = data["generators"]
    except (KeyError, TypeError) as exc:
        raise ParseError("group JSON needs a 'generators' list") from exc
    index = lp.poset.index
    gens = []
    for mapping in gens_raw:
        if not isinstance(mapping, dict):
            raise ParseError("each generator must be an object mapping elements to elements")
        img = list(range(len(lp)))
        for a, b in mapping.items():
            if a not in index or b not in index:
                raise ParseError(f"generator mentions unknown element {a if a not in index else b}")
            img[index[a]] = index[b]
        if sorted(img) != list(range(len(lp))):
            raise ParseError(f"generator {mapping} is not a bijection")
        gens.append(tuple(img))
    group = PermGroup(len(lp), gens) if gens else PermGroup.trivial(len(lp))
    check_subgroup_of_aut(lp, group)
    return group


def parse_subgroup(lp: LabeledPoset, text: str) -> PermGroup:
    """``"(p1 p2)(p3 p4); (p5 p6)"``: generators in cycle notation, ``;``-separated."""
    text = text.strip()
    index = lp.poset.index
    if text in ("", "e", "trivial"):
        return PermGroup.trivial(len(lp))
    gens = []
    for part in text.split(";"):
        img = list(range(len(lp)))
        part = part.strip()
        if not re.fullmatch(r"(\([^()]*\))+", part):
            raise ParseError(f"cannot read generator {part!r}; use cycle notation like (a b c)(d e)")
        for cyc in re.findall(r"\(([^()]*)\)", part):
            names = cyc.replace(",", " ").split()
            for x in names:
                if x not in index:
                    raise ParseError(f"unknown element {x!r} in subgroup generator")
            if len(set(names)) != len(names):
                raise ParseError(f"repeated element in cycle ({cyc})")
            for a, b in zip(names, names[1:] + names[:1]):
                img[index[a]] = index[b]
        if sorted(img) != list(range(len(lp))):
            raise ParseError(f"generator {part} is not a permutation (overlapping cycles)")
        gens.append(tuple(img))
    try:
        group = PermGroup(len(lp), gens)
    except OrderGammaError as exc:
        raise GuardExceeded(f"subgroup too large (limit {MAX_GROUP_ORDER})") from exc
    check_subgroup_of_aut(lp, group)
    return group


def poset_to_json(lp: LabeledPoset, group: PermGroup | None = None) -> dict:
    out: dict[str, Any] = {
        "elements": list(lp.elements),
        "covers": [list(c) for c in lp.poset.cover_names()],
        "labels": [{"cover": [a, b], "sign": s} for (a, b), s in lp.labels_by_name().items()],
    }
    if group is not None:
        out["group"] = {"generators": [_perm_to_json(lp, g) for g in group.generators]}
    return out


def _perm_to_json(lp: LabeledPoset, g: Perm) -> dict:
    e = lp.elements
    return {e[i]: e[g[i]] for i in range(len(g)) if g[i] != i}


def perm_to_cycles(lp: LabeledPoset, g: Perm) -> str:
    e = lp.elements
    parts = ["(" + " ".join(e[x] for x in c) + ")" for c in cycles(g) if len(c) > 1]
    return "".join(parts) or "e"


def polytope_from_json(data: dict) -> tuple[LatticePolytopeHRep, PermGroup | None]:
    try:
        poly = LatticePolytopeHRep.from_json(data)
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ParseError(f"polytope JSON needs 'inequalities' with 'normal' and 'offset' ({exc})") from exc
    group = None
    if data.get("group") is not None:
        try:
            gens = [tuple(int(x) for x in g) for g in data["group"]["generators"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError("polytope group needs 'generators' as lists of coordinate images") from exc
        for g in gens:
            if sorted(g) != list(range(poly.dimension)):
                raise ParseError(f"generator {list(g)} is not a permutation of the {poly.dimension} coordinates")
        group = PermGroup(poly.dimension, gens) if gens else PermGroup.trivial(poly.dimension)
    return poly, group
