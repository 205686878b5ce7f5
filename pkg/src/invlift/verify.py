"""Property suites over populations of involutions, with reports.

Each suite maps an involution to a list of failure messages; a report counts
checked/passed/failed involutions and keeps the failing words as witnesses.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations

import numpy as np

from .cascade import r_from_cascade
from .exact import solve_exact
from .lifting import (
    all_halvings,
    b_flip,
    b_recursive,
    b_weak,
    colon,
    r_recursive,
    reflect,
    reflect_mod2,
)
from .rational_points import make_field, verify_family_identity, verify_antifixed_lift
from .root_datum import RootDatum, build_root_datum, weyl_group_order
from .tits_arithmetic import (
    inversion_square,
    is_admissible,
    tits_dot,
    tits_square,
    verify_central_square,
    verify_property_v,
)
from .weyl_group import DEFAULT_BUDGET, WeylElem, eigen_subsystem, enumerate_involutions, word_str

__all__ = [
    "SuiteConfig",
    "VerificationReport",
    "SUITES",
    "population",
    "run_suite",
    "r_checks",
    "b_checks",
    "tits_checks",
    "frobenius_checks",
    "coefficient_sum_ok",
    "datum_checks",
]

SUITES = ("r", "b", "tits", "frobenius", "all")


@dataclass
class SuiteConfig:
    samples: int = 1000
    seed: int = 0
    budget: int = DEFAULT_BUDGET
    prime: int = 3
    orders: int = 5  # randomized descent orders per element
    c_samples: int = 5  # random c per involution in the Frobenius suite
    workers: int = 1
    max_witnesses: int = 20
    mode: str = "auto"  # auto: exhaustive when |W| <= budget, else sampled


@dataclass
class VerificationReport:
    suite: str
    label: str
    mode: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    witnesses: list[dict] = field(default_factory=list)
    global_failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and not self.global_failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["ok"] = self.ok
        return d

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", {len(self.global_failures)} global failures" if self.global_failures else ""
        return (
            f"{status} {self.suite} {self.label} [{self.mode}]: checked {self.checked}, "
            f"failed {self.failed}{extra} ({self.seconds:.2f}s)"
        )


def population(datum: RootDatum, cfg: SuiteConfig) -> tuple[str, list[WeylElem]]:
    if cfg.mode not in ("auto", "exhaustive", "sampled"):
        raise ValueError(f"unknown population mode {cfg.mode!r}")
    if cfg.mode == "exhaustive" or (cfg.mode == "auto" and weyl_group_order(datum.label) <= cfg.budget):
        return "exhaustive", list(enumerate_involutions(datum, budget=cfg.budget))
    return "sampled", list(enumerate_involutions(datum, mode="sampled", n=cfg.samples, seed=cfg.seed))


# ---------------------------------------------------------------- r

def coefficient_sum_ok(w: WeylElem) -> bool:
    """Coefficients of r_w in the simple coroots of R_w sum to (|R_w^+| + rank)/2."""
    sub = eigen_subsystem(w)
    if sub.rank == 0:
        return not np.any(r_recursive(w))
    coeffs = solve_exact(sub.simple_coroots.T, r_recursive(w))
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return False
    return 2 * sum(coeffs) == len(sub.positives) + sub.rank


def r_checks(w: WeylElem, cfg: SuiteConfig, rng: random.Random) -> list[str]:
    d = w.datum
    out = []
    r = r_recursive(w)
    if not np.array_equal(r, r_from_cascade(w)):
        out.append("recursion != cascade")
    if not np.array_equal(r_recursive(w, base="split"), r):
        out.append("split base != cascade")
    for _ in range(cfg.orders):
        if not np.array_equal(r_recursive(w, base="split", rng=rng), r):
            out.append("r depends on descent order")
            break
    if not np.array_equal(w.act(r), -r):
        out.append("w(r_w) != -r_w")
    if not coefficient_sum_ok(w):
        out.append("coefficient-sum identity")
    for s in range(1, d.rank + 1):
        if not w.commutes_with_simple(s):
            if not np.array_equal(reflect(d, s, r), r_recursive(w.conj_simple(s))):
                out.append(f"s{s}(r_w) != r_sws")
            continue
        try:
            n = colon(w, s)
        except ArithmeticError as exc:
            out.append(str(exc))
            continue
        if n not in (-1, 0, 1):
            out.append(f"(w:s{s}) = {n}")
        if n == 0 and d.is_simply_laced(d.component_of(s)):
            out.append(f"(w:s{s}) = 0 in a simply-laced component")
        if not w.right_descent(s) and not np.array_equal(reflect(d, s, r), r):
            out.append(f"s{s}(r_w) != r_w with |sw| > |w|")
    return out


# ---------------------------------------------------------------- b

def b_checks(w: WeylElem, cfg: SuiteConfig, rng: random.Random) -> list[str]:
    d = w.datum
    out = []
    e = np.eye(d.rank, dtype=np.int64)
    for h in all_halvings(d):
        b = b_recursive(w, h)
        if w.length <= 1:
            expect = np.zeros(d.rank, dtype=np.int64)
            if w.length == 1 and w.word[0] in h.subset:
                expect[w.word[0] - 1] = 1
            if not np.array_equal(b, expect):
                out.append(f"base value for {h}")
        for _ in range(cfg.orders):
            if not np.array_equal(b_recursive(w, h, rng=rng), b):
                out.append(f"b depends on descent order for {h}")
                break
        if not np.array_equal(b_flip(w, h), b_recursive(w, h.complement())):
            out.append(f"flip identity for {h}")
        for s in range(1, d.rank + 1):
            sb = reflect_mod2(d, s, b)
            if not w.commutes_with_simple(s):
                if not np.array_equal(sb, (b_recursive(w.conj_simple(s), h) + e[s - 1]) % 2):
                    out.append(f"s{s}(b_w) != b_sws + a_s for {h}")
                continue
            diff = (b_recursive(w.lmul_simple(s), h) - b) % 2
            if np.delete(diff, s - 1).any():
                out.append(f"b_sw - b_w not in {{0, a_s}} for s{s}, {h}")
            n = colon(w, s)
            if not np.array_equal(sb, (b + (n + 1) * e[s - 1]) % 2):
                out.append(f"s{s}(b_w) != b_w + ((w:s)+1) a_s for {h}")
    return out


# ---------------------------------------------------------------- tits

def tits_checks(w: WeylElem, cfg: SuiteConfig, rng: random.Random) -> list[str]:
    out = []
    if tits_square(tits_dot(w)) != inversion_square(w):
        out.append("w_dot^2 differs from inversion-sum formula")
    for h in all_halvings(w.datum):
        if not verify_property_v(w, h):
            out.append(f"(w_dot b_w)^2 != r_w(eps) for {h}")
    if not verify_property_v(w, b=b_weak(w)):
        out.append("weak b fails the square identity")
    return out


# ---------------------------------------------------------------- frobenius

def frobenius_checks(w: WeylElem, cfg: SuiteConfig, rng: random.Random) -> list[str]:
    ctx = make_field(cfg.prime)
    out = []
    for h in all_halvings(w.datum):
        if not verify_antifixed_lift(w, h, ctx, rng, samples=cfg.c_samples):
            out.append(f"Frobenius identity fails for {h}")
        if not verify_family_identity(w, ctx.random_nonzero(rng), h):
            out.append(f"family identity fails for {h}")
    return out


_CHECKS = {"r": r_checks, "b": b_checks, "tits": tits_checks, "frobenius": frobenius_checks}


def datum_checks(datum: RootDatum) -> list[str]:
    """Checks attached to the datum rather than to one involution."""
    out = []
    n = datum.rank
    for k in range(1, n + 1):
        for J in combinations(range(1, n + 1), k):
            if is_admissible(datum, J) and not verify_central_square(datum, J):
                out.append(f"central square fails for J={list(J)}")
    return out


def _run_words(args) -> list[tuple[str, list[str]]]:
    suite, label, words, cfg_dict = args
    cfg = SuiteConfig(**cfg_dict)
    d = build_root_datum(label)
    checks = [_CHECKS[s] for s in (("r", "b", "tits", "frobenius") if suite == "all" else (suite,))]
    out = []
    for word in words:
        w = WeylElem.from_word(d, word)
        rng = random.Random(hash((cfg.seed, word)) & 0xFFFFFFFF)
        msgs = []
        for fn in checks:
            msgs += fn(w, cfg, rng)
        out.append((word_str(word), msgs))
    return out


def run_suite(suite: str, label: str, cfg: SuiteConfig | None = None) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    cfg = cfg or SuiteConfig()
    t0 = time.perf_counter()
    d = build_root_datum(label)
    mode, pop = population(d, cfg)
    words = [w.word for w in pop]
    cfg_dict = asdict(cfg)
    if cfg.workers > 1 and len(words) > 1:
        chunks = [words[i::cfg.workers] for i in range(cfg.workers)]
        with ProcessPoolExecutor(cfg.workers) as ex:
            results = [r for part in ex.map(_run_words, [(suite, label, c, cfg_dict) for c in chunks]) for r in part]
    else:
        results = _run_words((suite, label, words, cfg_dict))
    results.sort(key=lambda x: (len(x[0]), x[0]))
    rep = VerificationReport(suite, label, mode)
    for word, msgs in results:
        rep.checked += 1
        if msgs:
            rep.failed += 1
            if len(rep.witnesses) < cfg.max_witnesses:
                rep.witnesses.append({"word": word, "failures": msgs})
        else:
            rep.passed += 1
    if suite in ("tits", "all"):
        rep.global_failures = datum_checks(d)
    rep.seconds = time.perf_counter() - t0
    return rep
