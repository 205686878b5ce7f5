"""Computed tables (cascades, r, longest elements, signs) and the golden reference copy."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .cascade import kostant_cascade
from .lifting import colon, r_recursive
from .root_datum import build_root_datum
from .tits_arithmetic import highest_root_reflection, tits_square, tits_dot
from .weyl_group import eigen_subsystem, longest_element

__all__ = ["SECTIONS", "load_golden", "compute_section", "compare_section"]

SECTIONS = ("cascade", "r", "longest", "e8-signs", "e7-signs", "tits")


@lru_cache(maxsize=1)
def load_golden() -> dict:
    return json.loads(resources.files("invlift").joinpath("data/tables.json").read_text())


def _ints(a) -> list[int]:
    return [int(x) for x in a]


def cascade_of(label: str) -> list[list[int]]:
    return [_ints(c) for c in kostant_cascade(build_root_datum(label)).coroots]


def r_of(label: str) -> list[int]:
    return _ints(r_recursive(longest_element(build_root_datum(label))))


def longest_of(label: str) -> dict:
    w = longest_element(build_root_datum(label))
    return {
        "cascade": [_ints(c) for c in kostant_cascade(eigen_subsystem(w)).coroots],
        "r": _ints(r_recursive(w)),
    }


def signs_of(label: str, J=None) -> list[int]:
    d = build_root_datum(label)
    w = longest_element(d, J)
    idx = range(1, d.rank + 1) if J is None else J
    return [colon(w, s) for s in idx]


def tits_of(label: str) -> dict:
    d = build_root_datum(label)
    sq = tits_square(tits_dot(highest_root_reflection(d)))
    return {"word": "".join(map(str, highest_root_reflection(d).word)), "square": [i + 1 for i, x in enumerate(sq) if x]}


def compute_section(section: str, label: str | None = None) -> dict:
    """Computed table for a section, restricted to one type if given."""
    golden = load_golden()
    if section in ("cascade", "r", "longest"):
        keys = sorted(golden[section]) if label is None else [label]
        fn = {"cascade": cascade_of, "r": r_of, "longest": longest_of}[section]
        for k in keys:
            if k not in golden[section]:
                raise KeyError(f"no {section} table for {k}")
        return {k: fn(k) for k in keys}
    if section == "e8-signs":
        return {"E8": signs_of("E8")}
    if section == "e7-signs":
        return {"E7": signs_of("E8", list(range(1, 8)))}
    if section == "tits":
        keys = sorted(golden["tits_reference"]) if label is None else [label]
        return {k: tits_of(k) for k in keys}
    raise KeyError(f"unknown section {section!r}; choose from {', '.join(SECTIONS)}")


def _as_set(vectors) -> set[tuple[int, ...]]:
    return {tuple(v) for v in vectors}


def compare_section(section: str, label: str | None = None) -> dict[str, bool]:
    """Per-type agreement with the golden copy (cascades compared as sets)."""
    computed = compute_section(section, label)
    golden = load_golden()
    out = {}
    for k, val in computed.items():
        if section == "cascade":
            out[k] = _as_set(val) == _as_set(golden["cascade"][k])
        elif section == "r":
            out[k] = val == golden["r"][k]
        elif section == "longest":
            g = golden["longest"][k]
            out[k] = _as_set(val["cascade"]) == _as_set(g["cascade"]) and val["r"] == g["r"]
        elif section in ("e8-signs", "e7-signs"):
            out[k] = val == golden["signs_reference"][k]
        elif section == "tits":
            out[k] = val["square"] == golden["tits_reference"][k]["square"]
    return out
