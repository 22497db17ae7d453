"""
Property reports for the coset layer: double-coset counts, U-power
representatives, normal-form invariance, Hecke commutativity and refined
key consistency.
"""

from __future__ import annotations

import random

from loguru import logger

from cosets import (
    Factor,
    FormalSum,
    MinusculeCochar,
    apply_generator,
    bfs_double_coset_keys,
    decompose_double_coset,
    gaussian_binomial,
    left_translate_cosets,
)
from groups import coset_pair_key, random_group_element, random_h, random_k_pair
from iwahori import UConfig, u_power_apply
from orbits import Level, coarsen, invariant_of, refined_key, translate_key
from utils import CheckStatus, OperationBudget, Report, Stopwatch, fail_report, guarded


def _pass(check: str, params, counts, watch: Stopwatch) -> Report:
    return Report(check=check, params=params, status=CheckStatus.PASS, counts=counts, millis=watch.millis)


def check_coset_counts(m: int, q: int) -> Report:
    """|K lambda_k K / K| three ways: Gaussian binomial, explicit family, BFS oracle."""
    params = {"m": m, "q": q}

    def run() -> Report:
        watch = Stopwatch()
        counts = {}
        for k in range(1, m + 1):
            expected = gaussian_binomial(m, k, q)
            explicit = len(decompose_double_coset(MinusculeCochar(Factor.V, k, m - 1), q))
            oracle = len(bfs_double_coset_keys(m, k, q))
            if not expected == explicit == oracle:
                return fail_report("coset-counts", params, {"k": k, "gaussian": expected, "explicit": explicit,
                                                            "bfs": oracle}, watch.millis)
            counts[f"k={k}"] = expected
        return _pass("coset-counts", params, counts, watch)

    return guarded("coset-counts", params, run)


def check_u_power_cosets(n: int, q: int, k: int, cap: int = 10_000_000) -> Report:
    """q^{k(2n-1)} representatives with pairwise distinct cosets."""
    params = {"n": n, "q": q, "k": k}

    def run() -> Report:
        watch = Stopwatch()
        cfg = UConfig(n, q, k)
        x = u_power_apply(cfg, OperationBudget(cap))
        if len(x) != cfg.size or x.total_mass() != cfg.size:
            return fail_report("u-power-cosets", params, {"cosets": len(x), "expected": cfg.size}, watch.millis)
        return _pass("u-power-cosets", params, {"cosets": len(x)}, watch)

    return guarded("u-power-cosets", params, run)


def check_normal_form_invariance(n: int, q: int, trials: int, seed: int) -> Report:
    """invariant(h g k) = invariant(g) and the H^der key moves by det h."""
    params = {"n": n, "q": q, "trials": trials}

    def run() -> Report:
        watch = Stopwatch()
        rng = random.Random(seed + 1000 * n + q)
        for trial in range(trials):
            g = random_group_element(rng, n, q)
            h = random_h(rng, n, q)
            k = random_k_pair(rng, n, q)
            moved = h * g * k
            if invariant_of(moved) != invariant_of(g):
                return fail_report("normal-form-invariance", params,
                                   {"trial": trial, "before": invariant_of(g).token(),
                                    "after": invariant_of(moved).token()}, watch.millis)
            expected = translate_key(refined_key(g), h.g2.det())
            if refined_key(moved) != expected:
                return fail_report("normal-form-invariance", params,
                                   {"trial": trial, "expected": expected.token(),
                                    "computed": refined_key(moved).token()}, watch.millis)
        logger.info(f"{trials} normal-form trials passed for n={n}, q={q}")
        return _pass("normal-form-invariance", params, {"trials": trials}, watch)

    return guarded("normal-form-invariance", params, run)


def _generators(n: int):
    gens = [MinusculeCochar(Factor.V, k, n) for k in range(1, n + 2)]
    return gens + [MinusculeCochar(Factor.W, k, n) for k in range(1, n + 1)]


def check_hecke_commutativity(n: int, q: int, trials: int, seed: int) -> Report:
    """Generators commute with each other and with left translation by H."""
    params = {"n": n, "q": q, "trials": trials}

    def run() -> Report:
        watch = Stopwatch()
        rng = random.Random(seed + 31 * n + q)
        gens = _generators(n)
        for trial in range(trials):
            x = FormalSum.from_pairs((coset_pair_key(random_group_element(rng, n, q, spread=1)), rng.randint(-3, 3))
                                     for _ in range(2))
            a, b = rng.sample(gens, 2)
            if apply_generator(a, apply_generator(b, x)) != apply_generator(b, apply_generator(a, x)):
                return fail_report("hecke-commutativity", params, {"trial": trial, "generators": [a.symbol, b.symbol],
                                                                   "sum": x.to_report()}, watch.millis)
            h = random_h(rng, n, q, spread=1)
            if left_translate_cosets(h, apply_generator(a, x)) != apply_generator(a, left_translate_cosets(h, x)):
                return fail_report("hecke-commutativity", params, {"trial": trial, "generator": a.symbol,
                                                                   "translation": "left H"}, watch.millis)
        return _pass("hecke-commutativity", params, {"trials": trials}, watch)

    return guarded("hecke-commutativity", params, run)


def check_refined_keys(n: int, q: int, trials: int, seed: int) -> Report:
    """Computing a key at a level agrees with coarsening the H^der key."""
    params = {"n": n, "q": q, "trials": trials}

    def run() -> Report:
        watch = Stopwatch()
        rng = random.Random(seed + 77 * n + q)
        for trial in range(trials):
            g = random_group_element(rng, n, q)
            fine = refined_key(g)
            for level in (Level.H1, Level.H0):
                if coarsen(fine, level) != refined_key(g, level):
                    return fail_report("refined-keys", params, {"trial": trial, "level": level.value,
                                                                "key": fine.token()}, watch.millis)
        return _pass("refined-keys", params, {"trials": trials}, watch)

    return guarded("refined-keys", params, run)
