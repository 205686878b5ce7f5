"""Points of T and N over F_{q^2}, Frobenius, and the lifts n_{w,c,S'}.

q = p is an odd prime.  F_{p^2} = F_p(delta) with delta^2 = d a fixed
non-residue.  The torus is identified with (k*)^l through the simple coroots
(simply connected convention): the tuple (c_1, ..., c_l) is the point
prod_i alpha_i^vee(c_i).  A NormalizerPoint (w, t) is w_dot * t.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exact import det_int
from .lifting import Halving, b_recursive, canonical_halving, r_recursive
from .root_datum import RootDatum
from .weyl_group import WeylElem, require_involution

__all__ = [
    "FieldContext",
    "Fq2Elem",
    "make_field",
    "special_c",
    "TorusPoint",
    "NormalizerPoint",
    "torus_eval",
    "torus_act",
    "normalizer_mul",
    "normalizer_dot",
    "build_lift",
    "frobenius",
    "verify_antifixed_lift",
    "verify_family_identity",
    "count_antifixed_torus",
    "predicted_antifixed_torus",
]


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % k for k in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class FieldContext:
    p: int
    d: int  # delta^2 = d, a non-residue mod p

    @property
    def q(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        """|F_{q^2}^*|."""
        return self.p * self.p - 1

    def __call__(self, a: int, b: int = 0) -> "Fq2Elem":
        return Fq2Elem(self, a % self.p, b % self.p)

    @property
    def one(self) -> "Fq2Elem":
        return self(1)

    @property
    def eps(self) -> "Fq2Elem":
        return self(-1)

    def nonzero(self):
        for a in range(self.p):
            for b in range(self.p):
                if a or b:
                    yield self(a, b)

    def random_nonzero(self, rng: random.Random) -> "Fq2Elem":
        while True:
            x = self(rng.randrange(self.p), rng.randrange(self.p))
            if not x.is_zero():
                return x

    @cached_property
    def generator(self) -> "Fq2Elem":
        N = self.order
        primes = [f for f in range(2, N + 1) if N % f == 0 and _is_prime(f)]
        for g in self.nonzero():
            if all(g ** (N // f) != self.one for f in primes):
                return g
        raise AssertionError("F_{q^2}^* is cyclic")

    def prime_field(self):
        return [self(a) for a in range(1, self.p)]


@dataclass(frozen=True, eq=False)
class Fq2Elem:
    ctx: FieldContext
    a: int
    b: int

    def __eq__(self, other) -> bool:
        return isinstance(other, Fq2Elem) and self.a == other.a and self.b == other.b and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.ctx.p))

    def __repr__(self) -> str:
        return f"{self.a}+{self.b}d" if self.b else f"{self.a}"

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __add__(self, o: "Fq2Elem") -> "Fq2Elem":
        return self.ctx(self.a + o.a, self.b + o.b)

    def __neg__(self) -> "Fq2Elem":
        return self.ctx(-self.a, -self.b)

    def __mul__(self, o: "Fq2Elem") -> "Fq2Elem":
        c = self.ctx
        return c(self.a * o.a + c.d * self.b * o.b, self.a * o.b + self.b * o.a)

    def norm(self) -> int:
        return (self.a * self.a - self.ctx.d * self.b * self.b) % self.ctx.p

    def inverse(self) -> "Fq2Elem":
        if self.is_zero():
            raise ZeroDivisionError("0 has no inverse")
        n_inv = pow(self.norm(), -1, self.ctx.p)
        return self.ctx(self.a * n_inv, -self.b * n_inv)

    def __truediv__(self, o: "Fq2Elem") -> "Fq2Elem":
        return self * o.inverse()

    def __pow__(self, k: int) -> "Fq2Elem":
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        out = self.ctx.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def frob(self) -> "Fq2Elem":
        """x -> x^q, i.e. a + b delta -> a - b delta."""
        return self.ctx(self.a, -self.b)


def make_field(p: int) -> FieldContext:
    if p == 2:
        raise ValueError("characteristic 2 excluded: eps = -1 must have order 2")
    if not _is_prime(p):
        raise ValueError(f"{p} is not a prime")
    d = next(x for x in range(2, p) if pow(x, (p - 1) // 2, p) == p - 1)
    return FieldContext(p, d)


def special_c(ctx: FieldContext) -> Fq2Elem:
    """c = g^((q+1)/2), so that c^q = -c."""
    return ctx.generator ** ((ctx.q + 1) // 2)


@dataclass(frozen=True)
class TorusPoint:
    coords: tuple[Fq2Elem, ...]

    def __post_init__(self):
        if any(c.is_zero() for c in self.coords):
            raise ValueError("torus coordinates must be nonzero")

    @classmethod
    def identity(cls, ctx: FieldContext, rank: int) -> "TorusPoint":
        return cls((ctx.one,) * rank)

    def __mul__(self, o: "TorusPoint") -> "TorusPoint":
        return TorusPoint(tuple(x * y for x, y in zip(self.coords, o.coords)))

    def inverse(self) -> "TorusPoint":
        return TorusPoint(tuple(x.inverse() for x in self.coords))

    def pow(self, k: int) -> "TorusPoint":
        return TorusPoint(tuple(x ** k for x in self.coords))

    def is_identity(self) -> bool:
        return all(x == x.ctx.one for x in self.coords)


def torus_eval(y, c: Fq2Elem) -> TorusPoint:
    """y(c) for y in L: coordinate i is c^{y_i}."""
    if c.is_zero():
        raise ValueError("c must be nonzero")
    return TorusPoint(tuple(c ** int(k) for k in y))


def torus_act(w: WeylElem, t: TorusPoint) -> TorusPoint:
    """w(t): coordinate j is prod_i c_i^{M[j, i]}, M the matrix of w on L."""
    M = w.matrix
    ctx = t.coords[0].ctx
    out = []
    for j in range(len(t.coords)):
        x = ctx.one
        for i, c in enumerate(t.coords):
            if M[j, i]:
                x = x * c ** int(M[j, i])
        out.append(x)
    return TorusPoint(tuple(out))


def _simple_act(datum: RootDatum, s: int, coords: list) -> list:
    """s(t): only coordinate s changes, to c_s^{-1} prod_{i != s} c_i^{-A[i, s]}."""
    A = datum.cartan
    x = coords[s - 1].inverse()
    for i, c in enumerate(coords):
        if i != s - 1 and A[i, s - 1]:
            x = x * c ** int(-A[i, s - 1])
    coords = list(coords)
    coords[s - 1] = x
    return coords


@dataclass(frozen=True)
class NormalizerPoint:
    w: WeylElem
    t: TorusPoint

    @property
    def datum(self) -> RootDatum:
        return self.w.datum

    def __mul__(self, o: "NormalizerPoint") -> "NormalizerPoint":
        return normalizer_mul(self, o)

    def is_identity(self) -> bool:
        return self.w.is_identity() and self.t.is_identity()


def normalizer_dot(w: WeylElem, ctx: FieldContext) -> NormalizerPoint:
    return NormalizerPoint(w, TorusPoint.identity(ctx, w.datum.rank))


def normalizer_mul(a: NormalizerPoint, b: NormalizerPoint) -> NormalizerPoint:
    if a.datum is not b.datum:
        raise ValueError("datum mismatch")
    d = a.datum
    eps = a.t.coords[0].ctx.eps
    w, coords = a.w, list(a.t.coords)
    for s in b.w.word:
        coords = _simple_act(d, s, coords)
        if w.right_descent(s):
            coords[s - 1] = coords[s - 1] * eps
        w = w.rmul_simple(s)
    return NormalizerPoint(w, TorusPoint(tuple(coords)) * b.t)


def build_lift(w: WeylElem, c: Fq2Elem, halving: Halving | None = None) -> NormalizerPoint:
    """n_{w,c,S'} = w_dot r_w(c) b_w^{S'}(eps)."""
    require_involution(w)
    h = halving or canonical_halving(w.datum)
    t = torus_eval(r_recursive(w), c) * torus_eval(b_recursive(w, h), c.ctx.eps)
    return NormalizerPoint(w, t)


def frobenius(n: NormalizerPoint) -> NormalizerPoint:
    """phi fixes every w_dot and raises torus coordinates to the q-th power."""
    return NormalizerPoint(n.w, TorusPoint(tuple(x.frob() for x in n.t.coords)))


def verify_antifixed_lift(
    w: WeylElem,
    halving: Halving | None,
    ctx: FieldContext,
    rng: random.Random | None = None,
    samples: int = 5,
) -> bool:
    """phi(n_{w,c}) n_{w,-c^q} = 1 for random c in k*, and phi(n) n = 1 for c with c^q = -c."""
    rng = rng or random.Random(0)
    h = halving or canonical_halving(w.datum)
    for _ in range(samples):
        c = ctx.random_nonzero(rng)
        if not normalizer_mul(frobenius(build_lift(w, c, h)), build_lift(w, -c.frob(), h)).is_identity():
            return False
    c0 = special_c(ctx)
    for _ in range(samples):
        c = c0 * ctx(rng.randrange(1, ctx.p))
        assert c.frob() == -c
        n = build_lift(w, c, h)
        if not normalizer_mul(frobenius(n), n).is_identity():
            return False
    return True


def verify_family_identity(w: WeylElem, c: Fq2Elem, halving: Halving | None = None) -> bool:
    """n_{w,c,S-S'} = n_{w,eps*c,S'}."""
    h = halving or canonical_halving(w.datum)
    return build_lift(w, c, h.complement()) == build_lift(w, -c, h)


def count_antifixed_torus(ctx: FieldContext, datum: RootDatum, w: WeylElem, budget: int = 10 ** 6) -> int:
    """Brute-force #{t in T(F_{q^2}) : w(t^q) t = 1}."""
    total = ctx.order ** datum.rank
    if total > budget:
        raise ValueError(f"brute force over {total} torus points exceeds budget {budget}")
    g = ctx.generator
    powers = [g ** k for k in range(ctx.order)]
    q, N = ctx.q, ctx.order
    count = 0
    for x in np.ndindex(*(N,) * datum.rank):
        t = TorusPoint(tuple(powers[k] for k in x))
        if (torus_act(w, t.pow(q)) * t).is_identity():
            count += 1
    return count


def predicted_antifixed_torus(ctx: FieldContext, w: WeylElem) -> int:
    """#T^{F^2} / #T^{F} for F = w . phi, with #T^F = |det(qM - 1)|."""
    l = w.datum.rank
    fixed = abs(det_int(ctx.q * w.matrix - np.eye(l, dtype=np.int64)))
    return ctx.order ** l // fixed
