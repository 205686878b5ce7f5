"""Exact arithmetic in the Tits extension of W by the 2-torsion of T.

An element (w, t) stands for w_dot * t(eps), eps = -1, with t in L/2L written
in the simple-coroot basis.  The only relations needed are

    s_dot^2 = alpha_s^vee(eps),   t s_dot = s_dot s(t),
    w_dot s_dot = (ws)_dot   when |ws| > |w|,

so multiplication pushes the generators of a reduced word of the right factor
through one at a time.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lifting import Halving, b_recursive, canonical_halving, r_recursive, reflect_mod2
from .root_datum import RootDatum
from .weyl_group import WeylElem, longest_element, reflection, require_involution

__all__ = [
    "TitsElem",
    "tits_dot",
    "tits_torus",
    "tits_mul",
    "tits_square",
    "inversion_square",
    "highest_root_reflection",
    "is_admissible",
    "verify_central_square",
    "verify_property_v",
    "word_square",
]


def _bits(t, rank: int) -> tuple[int, ...]:
    v = tuple(int(x) % 2 for x in t)
    if len(v) != rank:
        raise ValueError(f"torus part must have length {rank}")
    return v


@dataclass(frozen=True)
class TitsElem:
    w: WeylElem
    t: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", _bits(self.t, self.w.datum.rank))

    @property
    def datum(self) -> RootDatum:
        return self.w.datum

    def __mul__(self, other: "TitsElem") -> "TitsElem":
        return tits_mul(self, other)

    def __str__(self) -> str:
        eps = "".join(f"e{i + 1}" for i, x in enumerate(self.t) if x) or "1"
        return f"({self.w.word or 'e'}, {eps})"


def tits_dot(w: WeylElem) -> TitsElem:
    return TitsElem(w, (0,) * w.datum.rank)


def tits_torus(datum: RootDatum, t) -> TitsElem:
    return TitsElem(WeylElem.identity(datum), t)


def _push_simple(w: WeylElem, t: np.ndarray, s: int) -> tuple[WeylElem, np.ndarray]:
    """(w, t) * (s, 0)."""
    d = w.datum
    t = reflect_mod2(d, s, t)
    if w.right_descent(s):
        t[s - 1] ^= 1
    return w.rmul_simple(s), t


def tits_mul(a: TitsElem, b: TitsElem) -> TitsElem:
    if a.datum is not b.datum:
        raise ValueError("datum mismatch")
    w, t = a.w, np.array(a.t, dtype=np.int64)
    for s in b.w.word:
        w, t = _push_simple(w, t, s)
    return TitsElem(w, tuple((t + np.array(b.t)) % 2))


def tits_square(a: TitsElem) -> tuple[int, ...]:
    """Torus part of a*a; the Weyl part must be an involution."""
    require_involution(a.w)
    sq = tits_mul(a, a)
    assert sq.w.is_identity()
    return sq.t


def inversion_square(w: WeylElem) -> tuple[int, ...]:
    """w_dot^2 for an involution as the sum of the coroots of its inversions, mod 2.

    Uses w_dot (w^-1)_dot = prod_{beta > 0, w^-1 beta < 0} beta^vee(eps) and
    w^-1 = w; independent of the generator-pushing rule.
    """
    require_involution(w)
    d = w.datum
    C = d.positive_coroots
    neg = (C @ w.matrix.T).sum(axis=1) < 0
    return tuple(int(x) for x in C[neg].sum(axis=0) % 2)


def highest_root_reflection(datum: RootDatum, J=None) -> WeylElem:
    support = None if J is None else [j - 1 for j in J]
    return reflection(datum, datum.highest_root_index(support))


def _irreducible(datum: RootDatum, J: list[int]) -> bool:
    seen, stack = {J[0]}, [J[0]]
    while stack:
        i = stack.pop()
        for j in J:
            if j not in seen and datum.cartan[i - 1, j - 1] != 0:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(J)


def is_admissible(datum: RootDatum, J) -> bool:
    """W_J irreducible with w_J central in W_J (w_J acts as -1 on J)."""
    J = sorted(J)
    if not J or not _irreducible(datum, J):
        return False
    M = longest_element(datum, J).matrix
    return all(M[j - 1, j - 1] == -1 and int(np.abs(M[:, j - 1]).sum()) == 1 for j in J)


def verify_central_square(datum: RootDatum, J=None) -> bool:
    """w_J_dot^2 = r_{w_J}(eps) and s_alpha_dot^2 = alpha^vee(eps), alpha the highest root of J."""
    J = list(range(1, datum.rank + 1)) if J is None else sorted(J)
    if not is_admissible(datum, J):
        raise ValueError(f"J={J} is not irreducible with central longest element")
    wJ = longest_element(datum, J)
    ok_b = tits_square(tits_dot(wJ)) == tuple(int(x) % 2 for x in r_recursive(wJ))
    sa = highest_root_reflection(datum, J)
    alpha = datum.positive_coroots[datum.highest_root_index([j - 1 for j in J])]
    ok_a = tits_square(tits_dot(sa)) == tuple(int(x) % 2 for x in alpha)
    return bool(ok_a and ok_b)


def verify_property_v(w: WeylElem, halving: Halving | None = None, b=None) -> bool:
    """(w_dot b_w(eps))^2 = r_w(eps)."""
    h = halving or canonical_halving(w.datum)
    b = b_recursive(w, h) if b is None else b
    x = tits_mul(tits_dot(w), tits_torus(w.datum, b))
    return tits_square(x) == tuple(int(v) % 2 for v in r_recursive(w))


def word_square(datum: RootDatum, word) -> tuple[int, ...]:
    """Square of s_{i1}_dot ... s_{ik}_dot for a literal word (reduced or not)."""
    x = tits_dot(WeylElem.identity(datum))
    for s in word:
        x = tits_mul(x, tits_dot(datum.s(s)))
    sq = tits_mul(x, x)
    if not sq.w.is_identity():
        raise ValueError("word does not represent an involution")
    return sq.t

