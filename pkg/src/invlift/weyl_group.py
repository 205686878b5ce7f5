"""Weyl group elements as integer matrices on the coroot lattice.

A WeylElem is determined by its matrix, which is what equality and hashing
use; a reduced word is computed on demand and cached.  Descents are read off
the columns: w(alpha_i^vee) is the i-th column, and |w s_i| < |w| exactly when
that column is a negative coroot.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .root_datum import RootDatum, weyl_group_order

__all__ = [
    "WeylElem",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "mul",
    "inv",
    "length",
    "longest_element",
    "reflection",
    "parse_word",
    "all_elements",
    "central_parabolics",
    "enumerate_involutions",
    "Decomposition",
    "descent_decompose",
    "EigenSubsystem",
    "eigen_subsystem",
]

# exhaustive enumeration allowed up to this Weyl group order
DEFAULT_BUDGET = 100_000


class BudgetExceeded(RuntimeError):
    pass


class WeylElem:
    __slots__ = ("datum", "matrix", "_key", "_word", "_length", "_inverse")

    def __init__(self, datum: RootDatum, matrix, word: Sequence[int] | None = None):
        m = np.array(matrix, dtype=np.int64)
        m.setflags(write=False)
        self.datum = datum
        self.matrix = m
        self._key = m.tobytes()
        self._word = tuple(word) if word is not None else None
        self._length = len(self._word) if word is not None else None
        self._inverse = None

    @classmethod
    def identity(cls, datum: RootDatum) -> "WeylElem":
        return cls(datum, np.eye(datum.rank, dtype=np.int64), word=())

    @classmethod
    def from_word(cls, datum: RootDatum, word: Sequence[int]) -> "WeylElem":
        w = cls.identity(datum)
        for i in word:
            w = w.rmul_simple(i)
        return w

    @property
    def key(self) -> bytes:
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElem) and self.datum is other.datum and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"WeylElem({self.datum.label}, word={word_str(self.word)})"

    def _check(self, other: "WeylElem") -> None:
        if self.datum is not other.datum:
            raise ValueError("Weyl elements belong to different root data")

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        self._check(other)
        return WeylElem(self.datum, self.matrix @ other.matrix)

    # -- simple-generator shortcuts (1-based index) --
    def rmul_simple(self, i: int) -> "WeylElem":
        A = self.datum.cartan
        M = self.matrix - np.outer(self.matrix[:, i - 1], A[:, i - 1])
        return WeylElem(self.datum, M)

    def lmul_simple(self, i: int) -> "WeylElem":
        A = self.datum.cartan
        M = self.matrix.copy()
        M[i - 1, :] -= A[:, i - 1] @ self.matrix
        return WeylElem(self.datum, M)

    def conj_simple(self, i: int) -> "WeylElem":
        """s_i w s_i."""
        A = self.datum.cartan
        M = self.matrix.copy()
        M[i - 1, :] -= A[:, i - 1] @ self.matrix
        M = M - np.outer(M[:, i - 1], A[:, i - 1])
        return WeylElem(self.datum, M)

    def right_descent(self, i: int) -> bool:
        """|w s_i| < |w|."""
        return int(self.matrix[:, i - 1].sum()) < 0

    def left_descent(self, i: int) -> bool:
        """|s_i w| < |w|."""
        return self.inverse().right_descent(i)

    def commutes_with_simple(self, i: int) -> bool:
        # w s_i w^-1 = s_{w(alpha_i)}
        col = self.matrix[:, i - 1]
        return col[i - 1] in (1, -1) and int(np.abs(col).sum()) == 1

    @property
    def length(self) -> int:
        if self._length is None:
            sums = self.matrix.sum(axis=0) @ self.datum.positive_coroots.T
            self._length = int((sums < 0).sum())
        return self._length

    @property
    def word(self) -> tuple[int, ...]:
        """Reduced word, stripping the lowest right descent each step."""
        if self._word is None:
            out = []
            w = self
            while True:
                for i in range(1, self.datum.rank + 1):
                    if w.right_descent(i):
                        out.append(i)
                        w = w.rmul_simple(i)
                        break
                else:
                    break
            self._word = tuple(reversed(out))
            self._length = len(out)
        return self._word

    def inverse(self) -> "WeylElem":
        if self._inverse is None:
            if self.is_involution():
                self._inverse = self
            else:
                self._inverse = WeylElem.from_word(self.datum, tuple(reversed(self.word)))
                self._inverse._inverse = self
        return self._inverse

    def is_identity(self) -> bool:
        return bool((self.matrix == np.eye(self.datum.rank, dtype=np.int64)).all())

    def is_involution(self) -> bool:
        return bool((self.matrix @ self.matrix == np.eye(self.datum.rank, dtype=np.int64)).all())

    def act(self, coroot) -> np.ndarray:
        """Image of an integer vector in the simple-coroot basis."""
        return self.matrix @ np.asarray(coroot, dtype=np.int64)

    def act_mod2(self, bits) -> tuple[int, ...]:
        return tuple(int(x) for x in (self.matrix @ np.asarray(bits, dtype=np.int64)) % 2)


def mul(a: WeylElem, b: WeylElem) -> WeylElem:
    return a * b


def inv(a: WeylElem) -> WeylElem:
    return a.inverse()


def length(a: WeylElem) -> int:
    return a.length


def word_str(word: Sequence[int]) -> str:
    if not word:
        return "e"
    if all(i < 10 for i in word):
        return "".join(str(i) for i in word)
    return ",".join(str(i) for i in word)


def parse_word(text: str, rank: int | None = None) -> tuple[int, ...]:
    """Parse '121', '1,2,1' or '1 2 1'; 'e' or '' is the empty word."""
    text = text.strip()
    if text in ("", "e", "1_W", "id"):
        return ()
    if "," in text or " " in text:
        word = tuple(int(x) for x in text.replace(",", " ").split())
    else:
        word = tuple(int(ch) for ch in text)
    if rank is not None and any(not 1 <= i <= rank for i in word):
        raise ValueError(f"letter out of range 1..{rank} in word {text!r}")
    return word


def reflection(datum: RootDatum, root_index: int) -> WeylElem:
    """s_beta on the coroot lattice for the positive root with the given index."""
    root = datum.positive_roots[root_index]
    coroot = datum.positive_coroots[root_index]
    M = np.eye(datum.rank, dtype=np.int64) - np.outer(coroot, datum.cartan @ root)
    return WeylElem(datum, M)


def longest_element(datum: RootDatum, J: Sequence[int] | None = None) -> WeylElem:
    """Longest element of the standard parabolic subgroup W_J (1-based J)."""
    J = range(1, datum.rank + 1) if J is None else sorted(J)
    w = WeylElem.identity(datum)
    word: list[int] = []
    grew = True
    while grew:
        grew = False
        for i in J:
            if not w.right_descent(i):
                w = w.rmul_simple(i)
                word.append(i)
                grew = True
                break
    return WeylElem(datum, w.matrix, word=word)


def all_elements(datum: RootDatum, budget: int = DEFAULT_BUDGET) -> list[WeylElem]:
    """The whole group by breadth-first closure (brute-force oracle)."""
    e = WeylElem.identity(datum)
    seen = {e: e}
    frontier = [e]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(1, datum.rank + 1):
                v = w.rmul_simple(i)
                if v not in seen:
                    seen[v] = v
                    nxt.append(v)
                    if len(seen) > budget:
                        raise BudgetExceeded(f"|W({datum.label})| exceeds budget {budget}")
        frontier = nxt
    return list(seen)


def central_parabolics(datum: RootDatum) -> list[frozenset[int]]:
    """All J such that w_J is central in W_J, i.e. w_J(alpha_s) = -alpha_s for s in J."""
    out = []
    n = datum.rank
    for mask in range(1 << n):
        J = [i + 1 for i in range(n) if mask >> i & 1]
        wJ = longest_element(datum, J)
        M = wJ.matrix
        if all(M[i - 1, i - 1] == -1 and int(np.abs(M[:, i - 1]).sum()) == 1 for i in J):
            out.append(frozenset(J))
    return out


def _sort_key(w: WeylElem):
    return (w.length, w.word)


def enumerate_involutions(
    datum: RootDatum,
    mode: str = "exhaustive",
    n: int | None = None,
    seed: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> Iterator[WeylElem]:
    """Yield involutions of W (the identity included).

    exhaustive: each involution once, sorted by (length, reduced word); every
    involution is reached from some central w_J by simple conjugations.
    sampled: n distinct random conjugates x w_J x^-1 of admissible w_J.
    """
    if mode == "exhaustive":
        order = weyl_group_order(datum.label)
        if order > budget:
            raise BudgetExceeded(
                f"exhaustive enumeration of W({datum.label}) (order {order}) exceeds budget {budget}"
            )
        seen: set[WeylElem] = set()
        for J in central_parabolics(datum):
            w = longest_element(datum, J)
            if w in seen:
                continue
            seen.add(w)
            stack = [w]
            while stack:
                v = stack.pop()
                for i in range(1, datum.rank + 1):
                    u = v.conj_simple(i)
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
        yield from sorted(seen, key=_sort_key)
    elif mode == "sampled":
        if n is None:
            raise ValueError("sampled mode needs n")
        rng = random.Random(seed)
        bases = [longest_element(datum, J) for J in central_parabolics(datum)]
        bases.sort(key=_sort_key)
        max_len = 2 * datum.num_positive
        seen = set()
        tries = 0
        while len(seen) < n and tries < 50 * n:
            tries += 1
            v = rng.choice(bases)
            for _ in range(rng.randint(0, max_len)):
                v = v.conj_simple(rng.randint(1, datum.rank))
            if v not in seen:
                seen.add(v)
                yield v
    else:
        raise ValueError(f"unknown mode {mode!r}")


def require_involution(w: WeylElem) -> None:
    if not w.is_involution():
        raise ValueError(f"{w!r} is not an involution")


@dataclass(frozen=True)
class Decomposition:
    """Either a descent s with sw != ws (case 'i'), or w = w_J central in W_J (case 'ii')."""
    case: str
    s: int | None = None
    J: frozenset[int] | None = None


def descent_decompose(w: WeylElem) -> Decomposition:
    require_involution(w)
    n = w.datum.rank
    descents = [i for i in range(1, n + 1) if w.right_descent(i)]
    for i in descents:
        if not w.commutes_with_simple(i):
            return Decomposition("i", s=i)
    J = frozenset(descents)
    M = w.matrix
    for i in J:
        # w(alpha_s) = -alpha_s for s in J
        assert M[i - 1, i - 1] == -1 and int(np.abs(M[:, i - 1]).sum()) == 1
    return Decomposition("ii", J=J)


def _root_keys(rows: np.ndarray) -> np.ndarray:
    """Injective keys for nonnegative coefficient vectors, additive on pair sums."""
    base = 2 * int(rows.max(initial=0)) + 1
    if base ** rows.shape[1] >= 1 << 62:
        return np.array([sum(int(x) * base ** k for k, x in enumerate(r)) for r in rows], dtype=object)
    return rows @ (base ** np.arange(rows.shape[1], dtype=np.int64))


class EigenSubsystem:
    """R_w: the roots negated by an involution, with positives and simple system.

    Indices refer to datum.positive_roots; the full R_w is the positives and
    their negatives.
    """

    def __init__(self, w: WeylElem):
        require_involution(w)
        d = w.datum
        self.datum = d
        self.w = w
        C = d.positive_coroots
        img = C @ w.matrix.T
        self.positives = np.where((img == -C).all(axis=1))[0]
        R = d.positive_roots[self.positives]
        keys = _root_keys(R)
        sums = np.add.outer(keys, keys).ravel()
        simple_mask = ~np.isin(keys, sums)
        self.simple = self.positives[simple_mask]

    @property
    def rank(self) -> int:
        return len(self.simple)

    @property
    def positive_roots(self) -> np.ndarray:
        return self.datum.positive_roots[self.positives]

    @property
    def positive_coroots(self) -> np.ndarray:
        return self.datum.positive_coroots[self.positives]

    @property
    def roots(self) -> np.ndarray:
        R = self.positive_roots
        return np.vstack([R, -R])

    @property
    def coroots(self) -> np.ndarray:
        C = self.positive_coroots
        return np.vstack([C, -C])

    @property
    def simple_coroots(self) -> np.ndarray:
        return self.datum.positive_coroots[self.simple]

    def dynkin_edges(self) -> list[tuple[int, int]]:
        """Pairs of simple-system positions joined in the Dynkin diagram."""
        P = self.datum.pairing_matrix
        s = list(self.simple)
        return [(a, b) for a in range(len(s)) for b in range(a + 1, len(s)) if P[s[a], s[b]] != 0]


def eigen_subsystem(w: WeylElem) -> EigenSubsystem:
    return EigenSubsystem(w)
