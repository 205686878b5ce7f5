"""Finite root systems from Cartan data, in exact integer coordinates.

Roots are stored in the simple-root basis and coroots in the simple-coroot
basis.  The Cartan matrix follows the row convention

    A[i, j] = <alpha_i^vee, alpha_j>

so a short simple root has a -2 (or -3) in its row.  Simple roots are numbered
as in Bourbaki; indices are 1-based at the public surface and 0-based inside
arrays.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from math import factorial

import numpy as np

__all__ = [
    "CartanSpec",
    "RootDatum",
    "NotFiniteType",
    "cartan_matrix",
    "build_root_datum",
    "pairing",
    "simple_reflection",
    "weyl_group_order",
]

_EDGES_E = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]
_LABEL = re.compile(r"^([ABCDEFG])(\d+)$")


class NotFiniteType(ValueError):
    """Raised for Cartan matrices that are not of finite type."""


def _simple_cartan(kind: str, rank: int) -> np.ndarray:
    A = 2 * np.eye(rank, dtype=np.int64)

    def join(i, j, aij=-1, aji=-1):
        A[i - 1, j - 1] = aij
        A[j - 1, i - 1] = aji

    if kind == "A":
        if rank < 1:
            raise ValueError("A_l needs l >= 1")
        for i in range(1, rank):
            join(i, i + 1)
    elif kind in "BC":
        if rank < 2:
            raise ValueError(f"{kind}_l needs l >= 2")
        for i in range(1, rank - 1):
            join(i, i + 1)
        # the short simple root carries the -2 in its row
        if kind == "B":
            join(rank - 1, rank, -1, -2)
        else:
            join(rank - 1, rank, -2, -1)
    elif kind == "D":
        if rank < 4:
            raise ValueError("D_l needs l >= 4")
        for i in range(1, rank - 1):
            join(i, i + 1)
        join(rank - 2, rank)
    elif kind == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E_l needs l in {6, 7, 8}")
        for i, j in _EDGES_E:
            if i <= rank and j <= rank:
                join(i, j)
    elif kind == "F":
        if rank != 4:
            raise ValueError("F_l needs l = 4")
        join(1, 2)
        join(2, 3, -1, -2)
        join(3, 4)
    elif kind == "G":
        if rank != 2:
            raise ValueError("G_l needs l = 2")
        join(1, 2, -3, -1)
    else:
        raise ValueError(f"unknown type {kind!r}")
    return A


def split_label(label: str) -> list[tuple[str, int]]:
    """Split 'A1xB2' into [('A', 1), ('B', 2)]."""
    parts = [p.strip() for p in re.split(r"[x×*]", label.replace(" ", "")) if p.strip()]
    if not parts:
        raise ValueError("empty type label")
    out = []
    for p in parts:
        m = _LABEL.match(p.upper())
        if not m:
            raise ValueError(f"bad type label component {p!r}")
        out.append((m.group(1), int(m.group(2))))
    return out


def cartan_matrix(label: str) -> np.ndarray:
    """Block-diagonal Cartan matrix for a (product) type label."""
    blocks = [_simple_cartan(k, r) for k, r in split_label(label)]
    n = sum(b.shape[0] for b in blocks)
    A = np.zeros((n, n), dtype=np.int64)
    o = 0
    for b in blocks:
        k = b.shape[0]
        A[o:o + k, o:o + k] = b
        o += k
    return A


def weyl_group_order(label: str) -> int:
    order = 1
    for kind, l in split_label(label):
        order *= {
            "A": lambda: factorial(l + 1),
            "B": lambda: 2 ** l * factorial(l),
            "C": lambda: 2 ** l * factorial(l),
            "D": lambda: 2 ** (l - 1) * factorial(l),
            "E": lambda: {6: 51840, 7: 2903040, 8: 696729600}[l],
            "F": lambda: 1152,
            "G": lambda: 12,
        }[kind]()
    return order


@dataclass(frozen=True)
class CartanSpec:
    label: str
    matrix: np.ndarray

    @classmethod
    def from_label(cls, label: str) -> "CartanSpec":
        A = cartan_matrix(label)
        A.setflags(write=False)
        return cls(label, A)

    def check(self) -> None:
        A = self.matrix
        n = A.shape[0]
        if A.shape != (n, n):
            raise NotFiniteType("Cartan matrix must be square")
        if any(A[i, i] != 2 for i in range(n)):
            raise NotFiniteType("diagonal entries must equal 2")
        for i in range(n):
            for j in range(n):
                if i != j and (A[i, j] > 0 or (A[i, j] == 0) != (A[j, i] == 0)):
                    raise NotFiniteType(f"bad off-diagonal pair at ({i + 1}, {j + 1})")


def _closure(A: np.ndarray, max_roots: int) -> tuple[list[tuple], list[tuple]]:
    """Positive roots and aligned coroots by closure under simple reflections."""
    n = A.shape[0]
    At = A.T
    unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = {u: u for u in unit}  # root -> coroot
    frontier = list(unit)
    while frontier:
        nxt = []
        for r in frontier:
            c = seen[r]
            for i in range(n):
                k = sum(int(A[i, j]) * r[j] for j in range(n))
                if k == 0:
                    continue
                r2 = list(r)
                r2[i] -= k
                if min(r2) < 0:
                    continue
                r2 = tuple(r2)
                if r2 in seen:
                    continue
                kc = sum(int(At[i, j]) * c[j] for j in range(n))
                c2 = list(c)
                c2[i] -= kc
                seen[r2] = tuple(c2)
                nxt.append(r2)
                if len(seen) > max_roots:
                    raise NotFiniteType("root closure does not terminate; not of finite type")
        frontier = nxt
    # height, then simple roots in index order
    roots = sorted(seen, key=lambda r: (sum(r), tuple(-x for x in r)))
    return roots, [seen[r] for r in roots]


class RootDatum:
    """Positive roots and coroots of a finite root system, aligned by index.

    Instances are treated as immutable; the arrays are read-only.
    """

    def __init__(self, spec: CartanSpec, max_roots: int = 20000):
        spec.check()
        self.spec = spec
        self.label = spec.label
        self.cartan = np.array(spec.matrix, dtype=np.int64)
        self.cartan.setflags(write=False)
        self.rank = int(self.cartan.shape[0])
        roots, coroots = _closure(self.cartan, max_roots)
        self.positive_roots = np.array(roots, dtype=np.int64).reshape(-1, self.rank)
        self.positive_coroots = np.array(coroots, dtype=np.int64).reshape(-1, self.rank)
        self.positive_roots.setflags(write=False)
        self.positive_coroots.setflags(write=False)
        self.root_index = {r: k for k, r in enumerate(roots)}
        self.coroot_index = {c: k for k, c in enumerate(coroots)}
        self.heights = self.positive_roots.sum(axis=1)
        # symmetrizability-free positivity check on the closure itself
        if len(self.coroot_index) != len(roots):
            raise NotFiniteType("coroot closure is not aligned with the root closure")

    def __repr__(self) -> str:
        return f"RootDatum({self.label!r}, rank={self.rank}, positive_roots={self.num_positive})"

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def pairing_matrix(self) -> np.ndarray:
        """P[a, b] = <coroot a, root b> over positive indices."""
        P = self.positive_coroots @ self.cartan @ self.positive_roots.T
        P.setflags(write=False)
        return P

    @cached_property
    def components(self) -> list[list[int]]:
        """Connected components of the Coxeter graph (0-based simple indices)."""
        n = self.rank
        seen: set[int] = set()
        comps = []
        for start in range(n):
            if start in seen:
                continue
            comp, stack = [], [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if j not in seen and self.cartan[i, j] != 0:
                        seen.add(j)
                        stack.append(j)
            comps.append(sorted(comp))
        return comps

    def component_of(self, s: int) -> list[int]:
        """Component containing 1-based simple index s (returned 0-based)."""
        for c in self.components:
            if s - 1 in c:
                return c
        raise IndexError(s)

    def is_simply_laced(self, component: list[int] | None = None) -> bool:
        idx = range(self.rank) if component is None else component
        return all(self.cartan[i, j] in (0, -1) for i in idx for j in idx if i != j)

    def highest_root_index(self, support: list[int] | None = None) -> int:
        """Index of the highest positive root supported on a connected set of simple indices."""
        if support is None:
            if len(self.components) != 1:
                raise ValueError("highest root needs an irreducible datum or a connected support")
            support = list(range(self.rank))
        mask = np.zeros(self.rank, dtype=bool)
        mask[list(support)] = True
        ok = np.where(~(self.positive_roots[:, ~mask] != 0).any(axis=1))[0]
        return int(ok[np.argmax(self.heights[ok])])

    def coroot_sign_index(self, c) -> tuple[int, int]:
        """(sign, positive index) of a coroot vector; KeyError if not a coroot."""
        c = tuple(int(x) for x in c)
        if c in self.coroot_index:
            return 1, self.coroot_index[c]
        return -1, self.coroot_index[tuple(-x for x in c)]

    def is_coroot(self, c) -> bool:
        try:
            self.coroot_sign_index(c)
        except KeyError:
            return False
        return True

    # Weyl group entry points live in weyl_group; thin wrappers for convenience.
    def identity(self):
        from .weyl_group import WeylElem
        return WeylElem.identity(self)

    def s(self, i: int):
        return simple_reflection(self, i)

    def word(self, word):
        from .weyl_group import WeylElem
        return WeylElem.from_word(self, word)


_CACHE: dict[str, RootDatum] = {}


def build_root_datum(spec: CartanSpec | str) -> RootDatum:
    """Build (and cache, for labels) the root datum of a finite type."""
    if isinstance(spec, str):
        key = spec.replace(" ", "").upper().replace("×", "X").replace("*", "X")
        if key not in _CACHE:
            _CACHE[key] = RootDatum(CartanSpec.from_label(spec))
        return _CACHE[key]
    return RootDatum(spec)


def pairing(datum: RootDatum, coroot, root) -> int:
    """<coroot, root> for vectors in the simple-coroot and simple-root bases."""
    c = np.asarray(coroot, dtype=np.int64)
    r = np.asarray(root, dtype=np.int64)
    if c.shape != (datum.rank,) or r.shape != (datum.rank,):
        raise ValueError(f"dimension mismatch: expected length {datum.rank}")
    return int(c @ datum.cartan @ r)


def simple_reflection(datum: RootDatum, i: int):
    """Matrix of s_i on the coroot lattice: x -> x - <x, alpha_i> alpha_i^vee."""
    from .weyl_group import WeylElem
    if not 1 <= i <= datum.rank:
        raise IndexError(f"simple index {i} out of range 1..{datum.rank}")
    M = np.eye(datum.rank, dtype=np.int64)
    M[i - 1, :] -= datum.cartan[:, i - 1]
    return WeylElem(datum, M)
