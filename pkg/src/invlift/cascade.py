"""Kostant cascades of root (sub)systems and the coroot sums r_w.

The maximal elements of a set of positive roots closed under the subsystem
structure are the highest roots of its irreducible components; within a
component the highest root is the unique root of largest ambient height, since
the subsystem's positive cone sits inside the ambient one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .root_datum import RootDatum
from .weyl_group import EigenSubsystem, WeylElem, eigen_subsystem, reflection

__all__ = [
    "Cascade",
    "CascadeError",
    "kostant_cascade",
    "r_from_cascade",
    "cascade_reflection_product",
    "signed_permutation",
    "from_signed_permutation",
    "e_to_coroot",
    "coroot_to_e",
    "typeD_cascade_oracle",
]


class CascadeError(ValueError):
    """The subsystem's longest element is not -1, so the cascade is not a basis."""


@dataclass
class Cascade:
    datum: RootDatum
    layers: list[list[int]]  # positive-root indices, layer by layer
    flat: list[int] = field(init=False)

    def __post_init__(self):
        self.flat = [i for layer in self.layers for i in layer]

    @property
    def coroots(self) -> np.ndarray:
        return self.datum.positive_coroots[self.flat].reshape(-1, self.datum.rank)

    @property
    def roots(self) -> np.ndarray:
        return self.datum.positive_roots[self.flat].reshape(-1, self.datum.rank)

    def coroot_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in c) for c in self.coroots}

    def r(self) -> np.ndarray:
        return self.coroots.sum(axis=0).astype(np.int64)


def _components(idx: list[int], P: np.ndarray) -> list[list[int]]:
    left = set(idx)
    comps = []
    for start in idx:
        if start not in left:
            continue
        left.discard(start)
        comp, stack = [start], [start]
        while stack:
            a = stack.pop()
            for b in [b for b in left if P[a, b] != 0]:
                left.discard(b)
                comp.append(b)
                stack.append(b)
        comps.append(comp)
    return comps


def _lowest_support(root: np.ndarray) -> int:
    return int(np.nonzero(root)[0][0])


def _source(source) -> tuple[RootDatum, list[int], int]:
    if isinstance(source, EigenSubsystem):
        return source.datum, [int(i) for i in source.positives], source.rank
    if isinstance(source, RootDatum):
        return source, list(range(source.num_positive)), source.rank
    raise TypeError("expected an EigenSubsystem or a RootDatum")


def kostant_cascade(source: EigenSubsystem | RootDatum, check: bool = True) -> Cascade:
    """Cascade of a full datum or of an eigen-subsystem R_w."""
    datum, remaining, rank = _source(source)
    P = datum.pairing_matrix
    H = datum.heights
    R = datum.positive_roots
    layers = []
    while remaining:
        comps = _components(remaining, P)
        layer = [max(c, key=lambda i: H[i]) for c in comps]
        layer.sort(key=lambda i: (_lowest_support(R[i]), tuple(R[i])))
        layers.append(layer)
        remaining = [b for b in remaining if all(P[a, b] == 0 for a in layer)]
    cas = Cascade(datum, layers)
    if check and len(cas.flat) != rank:
        raise CascadeError(
            f"cascade has {len(cas.flat)} elements but the subsystem has rank {rank}; "
            "its longest element is not -1"
        )
    return cas


def r_from_cascade(w: WeylElem) -> np.ndarray:
    """r_w: sum of the cascade coroots of R_w (zero for w = 1)."""
    return kostant_cascade(eigen_subsystem(w)).r()


def cascade_reflection_product(w: WeylElem) -> WeylElem:
    cas = kostant_cascade(eigen_subsystem(w))
    out = WeylElem.identity(w.datum)
    for i in cas.flat:
        out = out * reflection(w.datum, i)
    return out


# -- type D in the e-basis: alpha_i = e_i - e_{i+1} (i < l), alpha_l = e_{l-1} + e_l --

def _check_D(datum: RootDatum) -> int:
    if not datum.label.upper().startswith("D") or "X" in datum.label.upper():
        raise ValueError(f"type-D model needs an irreducible D_l datum, got {datum.label}")
    return datum.rank


def _basis_D(l: int) -> np.ndarray:
    """Columns are the simple coroots in e-coordinates."""
    B = np.zeros((l, l), dtype=np.int64)
    for k in range(l - 1):
        B[k, k], B[k + 1, k] = 1, -1
    B[l - 2, l - 1] = B[l - 1, l - 1] = 1
    return B


def coroot_to_e(v, l: int) -> np.ndarray:
    return _basis_D(l) @ np.asarray(v, dtype=np.int64)


def e_to_coroot(x, l: int) -> np.ndarray:
    """Inverse change of basis; the input must lie in the coroot lattice."""
    x = [int(t) for t in x]
    c = [0] * l
    acc = 0
    for k in range(l - 2):
        acc += x[k]
        c[k] = acc
    p = acc + x[l - 2]
    if (p + x[l - 1]) % 2:
        raise ValueError("vector is not in the D_l coroot lattice")
    c[l - 1] = (p + x[l - 1]) // 2
    c[l - 2] = (p - x[l - 1]) // 2
    return np.array(c, dtype=np.int64)


def signed_permutation(w: WeylElem) -> tuple[int, ...]:
    """w(e_i) = sign * e_j encoded as the signed integer +-j at position i-1."""
    l = _check_D(w.datum)
    B = _basis_D(l)
    out = []
    for i in range(l):
        # 2 e_i lies in the coroot lattice
        img = B @ w.act(e_to_coroot(2 * np.eye(l, dtype=np.int64)[i], l)) // 2
        j = int(np.nonzero(img)[0][0])
        out.append((j + 1) * int(img[j]))
    return tuple(out)


def from_signed_permutation(datum: RootDatum, perm: Sequence[int]) -> WeylElem:
    l = _check_D(datum)
    if sorted(abs(p) for p in perm) != list(range(1, l + 1)):
        raise ValueError("not a signed permutation")
    if sum(p < 0 for p in perm) % 2:
        raise ValueError("odd number of sign changes: not in W(D_l)")
    E = np.zeros((l, l), dtype=np.int64)
    for i, p in enumerate(perm):
        E[abs(p) - 1, i] = 1 if p > 0 else -1
    B = _basis_D(l)
    cols = [e_to_coroot(E @ B[:, k], l) for k in range(l)]
    return WeylElem(datum, np.array(cols, dtype=np.int64).T)


def typeD_cascade_oracle(perm: Sequence[int], l: int) -> set[tuple[int, ...]]:
    """Cascade coroots of an involution of W(D_l) from its signed-permutation data.

    Pairs swapped by w contribute e_i - e_j, pairs swapped with signs contribute
    e_i + e_j, and the negated indices i_1 < i_2 < ... are paired consecutively,
    each pair contributing both e_a - e_b and e_a + e_b.
    """
    if len(perm) != l:
        raise ValueError("length mismatch")
    if sum(p < 0 for p in perm) % 2:
        raise ValueError("odd number of sign changes: not in W(D_l)")
    e = np.eye(l, dtype=np.int64)
    vecs = []
    minus = []
    for i in range(1, l + 1):
        p = perm[i - 1]
        j = abs(p)
        if perm[j - 1] != (i if p > 0 else -i):
            raise ValueError("not an involution")
        if j == i:
            if p < 0:
                minus.append(i)
        elif i < j:
            vecs.append(e[i - 1] - e[j - 1] if p > 0 else e[i - 1] + e[j - 1])
    for a, b in zip(minus[0::2], minus[1::2]):
        vecs.append(e[a - 1] - e[b - 1])
        vecs.append(e[a - 1] + e[b - 1])
    return {tuple(int(t) for t in e_to_coroot(v, l)) for v in vecs}
