"""Write src/invlift/data/tables.json from hand-transcribed closed forms.

Nothing here calls the library: each family is typed in as its explicit
coefficient pattern so the JSON is an independent reference for the tests.
Vectors are coefficient lists in the simple-coroot basis (Bourbaki order).
"""
from __future__ import annotations

import json
import re
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "invlift" / "data" / "tables.json"


def vec(l, coeffs):
    v = [0] * l
    for i, c in coeffs.items():
        v[i - 1] = c
    return v


def span(l, a, b, c=1):
    return {i: c for i in range(a, b + 1)} if a <= b else {}


def ceil2(k):
    return 2 * ((k + 1) // 2)


# ----- cascades of types whose longest element is -1 -----

def cascade_A1():
    return [[1]]


def cascade_B(l):
    out = []
    if l % 2:  # l = 2n+1
        n = (l - 1) // 2
        for k in range(1, 2 * n, 2):
            out.append(vec(l, {k: 1, **span(l, k + 1, 2 * n, 2), l: 1}))
        out += [vec(l, {k: 1}) for k in range(1, l + 1, 2)]
    else:  # l = 2n
        n = l // 2
        for k in range(1, 2 * n, 2):
            out.append(vec(l, {k: 1, **span(l, k + 1, 2 * n - 1, 2), l: 1}))
        out += [vec(l, {k: 1}) for k in range(1, l, 2)]
    return out


def cascade_C(l):
    return [vec(l, span(l, k, l)) for k in range(1, l + 1)]


def cascade_D_even(l):
    n = l // 2
    out = [vec(l, {k: 1, **span(l, k + 1, 2 * n - 2, 2), l - 1: 1, l: 1}) for k in range(1, 2 * n - 2, 2)]
    out += [vec(l, {k: 1}) for k in range(1, 2 * n - 2, 2)]
    out += [vec(l, {l - 1: 1}), vec(l, {l: 1})]
    return out


CASCADE_EXCEPTIONAL = {
    "E7": [[2, 2, 3, 4, 3, 2, 1], [0, 1, 1, 2, 2, 2, 1], [0, 1, 1, 2, 1, 0, 0],
           [0, 0, 0, 0, 0, 0, 1], [0, 1, 0, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0]],
    "E8": [[2, 3, 4, 6, 5, 4, 3, 2], [2, 2, 3, 4, 3, 2, 1, 0], [0, 1, 1, 2, 2, 2, 1, 0],
           [0, 1, 1, 2, 1, 0, 0, 0], [0, 0, 0, 0, 0, 0, 1, 0], [0, 1, 0, 0, 0, 0, 0, 0],
           [0, 0, 1, 0, 0, 0, 0, 0], [0, 0, 0, 0, 1, 0, 0, 0]],
    "F4": [[2, 3, 2, 1], [0, 1, 1, 1], [0, 1, 1, 0], [0, 1, 0, 0]],
    "G2": [[1, 2], [1, 0]],
}

# ----- r -----

def r_B(l):
    if l % 2:
        n = (l - 1) // 2
        return [ceil2(k) for k in range(1, 2 * n + 1)] + [n + 1]
    n = l // 2
    return [ceil2(k) for k in range(1, 2 * n)] + [n]


def r_C(l):
    return list(range(1, l + 1))


def r_D_even(l):
    n = l // 2
    return [ceil2(k) for k in range(1, 2 * n - 1)] + [n, n]


R_EXCEPTIONAL = {
    "A1": [1],
    "E7": [2, 5, 6, 8, 7, 4, 3],
    "E8": [4, 8, 10, 14, 12, 8, 6, 2],
    "F4": [2, 6, 4, 2],
    "G2": [2, 2],
}

# ----- longest elements that are not -1 -----

def longest_A(l):
    if l % 2 == 0:
        n = l // 2
        cas = [vec(l, span(l, k, 2 * n + 1 - k)) for k in range(1, n + 1)]
        r = [min(k, 2 * n + 1 - k) for k in range(1, l + 1)]
    else:
        n = (l - 1) // 2
        cas = [vec(l, span(l, k, 2 * n + 2 - k)) for k in range(1, n + 2)]
        r = [min(k, 2 * n + 2 - k) for k in range(1, l + 1)]
    return cas, r


def longest_D_odd(l):
    n = (l - 1) // 2
    cas = [vec(l, {k: 1, **span(l, k + 1, 2 * n - 1, 2), 2 * n: 1, 2 * n + 1: 1}) for k in range(1, 2 * n - 2, 2)]
    cas.append(vec(l, {2 * n - 1: 1, 2 * n: 1, 2 * n + 1: 1}))
    cas += [vec(l, {k: 1}) for k in range(1, 2 * n, 2)]
    r = [ceil2(k) for k in range(1, 2 * n - 1)] + [2 * n, n, n]
    return cas, r


LONGEST_E6 = (
    [[1, 2, 2, 3, 2, 1], [1, 0, 1, 1, 1, 1], [0, 0, 1, 1, 1, 0], [0, 0, 0, 1, 0, 0]],
    [2, 2, 4, 6, 4, 2],
)

# colon signs (r_{s_i w} - r_w coefficient) for w the longest element (reference values)
SIGNS_REFERENCE = {
    "E8": [-1, 1, 1, -1, 1, -1, 1, -1],
    "E7": [-1, 1, 1, -1, 1, -1, 1],
}

# squares of the highest-root reflection, reference values (1-based indices of eps factors)
TITS_REFERENCE = {
    "A2": {"word": "121", "square": [], "r_mod2": [1, 2]},
    "D4": {"word": "234212342", "square": []},
    "E7": {"word": "134567243156432545234651342765431", "square": [3, 5, 7]},
    "E8": {"word": "876542314563457624587634524313425436785426754365413245678", "square": [2, 5, 7]},
}


def build():
    cascade = {"A1": cascade_A1()}
    r = dict(R_EXCEPTIONAL)
    for l in range(3, 10):
        cascade[f"B{l}"] = cascade_B(l)
        r[f"B{l}"] = r_B(l)
    for l in range(2, 9):
        cascade[f"C{l}"] = cascade_C(l)
        r[f"C{l}"] = r_C(l)
    for n in range(2, 5):
        cascade[f"D{2 * n}"] = cascade_D_even(2 * n)
        r[f"D{2 * n}"] = r_D_even(2 * n)
    cascade.update(CASCADE_EXCEPTIONAL)
    longest = {}
    for l in range(2, 10):
        c, rr = longest_A(l)
        longest[f"A{l}"] = {"cascade": c, "r": rr}
    for l in (5, 7, 9):
        c, rr = longest_D_odd(l)
        longest[f"D{l}"] = {"cascade": c, "r": rr}
    longest["E6"] = {"cascade": LONGEST_E6[0], "r": LONGEST_E6[1]}
    return {
        "cascade": cascade,
        "r": r,
        "longest": longest,
        "signs_reference": SIGNS_REFERENCE,
        "tits_reference": TITS_REFERENCE,
    }


if __name__ == "__main__":
    OUT.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(build(), indent=1, sort_keys=True)
    # one vector per line
    text = re.sub(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]", lambda m: "[" + re.sub(r"\s+", " ", m.group(1)) + "]", text)
    OUT.write_text(text + "\n")
    print(f"wrote {OUT}")
