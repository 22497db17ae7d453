"""
The acceptance grid: every checker over its parameter ranges, run serially
or in worker processes, with reports in parameter-sorted order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Tuple

from loguru import logger

from config import LabConfig
from hecke import build_hecke_polynomial, diff_against_fixture, fixture_path, verify_dictionary
from orbits import verify_stabilizer_formula
from orders import check_local_orders
from utils import CheckStatus, OperationBudget, Report, Stopwatch, configure_logging, fail_report, guarded

from .congruence import congruence_table
from .coset_checks import (
    check_coset_counts,
    check_hecke_commutativity,
    check_normal_form_invariance,
    check_refined_keys,
    check_u_power_cosets,
)
from .divisibility import check_count_j, check_divisibility_lemma
from .lift import construct_horizontal_lift
from .report import sort_reports, write_reports
from .root_identity import check_root_identity


class Profile(str, Enum):
    """Suite grids.

    quick runs 50 normal-form and 10 commutativity trials and leaves out the
    stabilizer (2, 3) and n=2 root-identity cells; full runs everything.
    """
    QUICK = "quick"
    FULL = "full"


@dataclass(frozen=True)
class SuiteTask:
    """One checker call; kwargs are kept as sorted pairs so tasks pickle and hash."""
    check: str
    kwargs: Tuple[Tuple[str, Any], ...]

    @classmethod
    def of(cls, check: str, **kwargs) -> "SuiteTask":
        return cls(check, tuple(sorted(kwargs.items())))


def check_hecke_fixture(n: int, fixtures_dir: str) -> Report:
    """The symbolic polynomial against its regression fixture, plus monicity and even s-powers."""
    params = {"n": n}

    def run() -> Report:
        watch = Stopwatch()
        poly = build_hecke_polynomial(n)
        problems = diff_against_fixture(poly, fixture_path(n, fixtures_dir))
        if problems:
            return fail_report("hecke-polynomial", params, {"differences": problems}, watch.millis)
        odd = [e for e in poly.s_exponents() if e % 2]
        if not poly.is_monic() or odd:
            return fail_report("hecke-polynomial", params, {"monic": poly.is_monic(), "odd_s_exponents": odd},
                               watch.millis)
        return Report(check="hecke-polynomial", params=params, status=CheckStatus.PASS,
                      counts={"degree": poly.degree}, millis=watch.millis)

    return guarded("hecke-polynomial", params, run)


def _stabilizer(n: int, q: int, cap: int) -> Report:
    return guarded("stabilizer-det", {"n": n, "q": q, "precision": 3},
                   lambda: verify_stabilizer_formula(n, q, budget=OperationBudget(cap)))


def _satake(n: int, q: int, cap: int) -> Report:
    return guarded("satake-dictionary", {"n": n, "q": q}, lambda: verify_dictionary(n, q, OperationBudget(cap)))


def _congruence(n: int, q: int, cap: int) -> Report:
    # only tilde/H_0 decides; the other cells live in counts and notes
    return congruence_table(n, q, cap)[0]


def _lift(n: int, q: int, cap: int) -> Report:
    return construct_horizontal_lift(n, q, cap=cap)[1]


CHECKS: Dict[str, Callable[..., Any]] = {
    "hecke-polynomial": check_hecke_fixture,
    "root-identity": check_root_identity,
    "divisibility": check_divisibility_lemma,
    "count-J": check_count_j,
    "congruence": _congruence,
    "horizontal-lift": _lift,
    "satake-dictionary": _satake,
    "coset-counts": check_coset_counts,
    "u-power-cosets": check_u_power_cosets,
    "normal-form-invariance": check_normal_form_invariance,
    "stabilizer-det": _stabilizer,
    "hecke-commutativity": check_hecke_commutativity,
    "refined-keys": check_refined_keys,
    "local-orders": check_local_orders,
}


def build_tasks(profile: Profile, config: LabConfig) -> List[SuiteTask]:
    full = Profile(profile) == Profile.FULL
    cap, seed = config.operation_cap, config.trials.seed
    nf_trials = config.trials.normal_form_trials if full else 50
    comm_trials = config.trials.commutativity_trials if full else 10
    tasks = [SuiteTask.of("hecke-polynomial", n=n, fixtures_dir=config.fixtures_dir) for n in (1, 2)]
    tasks += [SuiteTask.of("root-identity", n=1, q=q, cap=cap) for q in (2, 3, 5)]
    if full:
        tasks.append(SuiteTask.of("root-identity", n=2, q=2, cap=cap))
    divisibility_grid = [(1, q, k) for q in (3, 5) for k in range(1, 5)]
    divisibility_grid += [(2, q, k) for q in (2, 3) for k in (1, 2)]
    for n, q, k in divisibility_grid:
        tasks.append(SuiteTask.of("divisibility", n=n, q=q, k=k, cap=cap))
        tasks.append(SuiteTask.of("u-power-cosets", n=n, q=q, k=k, cap=cap))
    tasks += [SuiteTask.of("count-J", n=n, k=k, q=q) for n in (1, 2) for k in (1, 2, 3) for q in (2, 3)]
    tasks += [SuiteTask.of("congruence", n=n, q=q, cap=cap) for n, q in ((1, 3), (1, 5), (2, 3))]
    tasks += [SuiteTask.of("horizontal-lift", n=1, q=q, cap=cap) for q in (3, 5)]
    tasks += [SuiteTask.of("satake-dictionary", n=n, q=q, cap=cap) for n in (1, 2) for q in (2, 3)]
    tasks += [SuiteTask.of("coset-counts", m=m, q=q) for m in range(1, 5) for q in (2, 3, 5)]
    small = [(n, q) for n in (1, 2) for q in (2, 3)]
    tasks += [SuiteTask.of("normal-form-invariance", n=n, q=q, trials=nf_trials, seed=seed) for n, q in small]
    tasks += [SuiteTask.of("refined-keys", n=n, q=q, trials=max(nf_trials // 5, 1), seed=seed) for n, q in small]
    tasks += [SuiteTask.of("hecke-commutativity", n=n, q=q, trials=comm_trials, seed=seed)
              for n, q in ((1, 2), (1, 3), (2, 2))]
    stabilizer_grid = small if full else [(1, 2), (1, 3), (2, 2)]
    tasks += [SuiteTask.of("stabilizer-det", n=n, q=q, cap=cap) for n, q in stabilizer_grid]
    tasks += [SuiteTask.of("local-orders", q=q, eps=eps, cmax=3, cap=config.orders_cap)
              for q in (2, 3, 5) for eps in (1, -1)]
    return tasks


def execute_task(task: SuiteTask) -> List[Report]:
    return [CHECKS[task.check](**dict(task.kwargs))]


def run_suite(profile: Profile, config: LabConfig) -> List[Report]:
    """Run the grid with ``config.jobs`` workers; the output order never depends on the worker count."""
    tasks = build_tasks(profile, config)
    watch = Stopwatch()
    logger.info(f"Running the {Profile(profile).value} suite: {len(tasks)} tasks on {config.jobs} worker(s)")
    if config.jobs > 1:
        with ProcessPoolExecutor(max_workers=config.jobs, initializer=configure_logging,
                                 initargs=(config,)) as pool:
            batches = list(pool.map(execute_task, tasks))
    else:
        batches = [execute_task(task) for task in tasks]
    reports = sort_reports(r for batch in batches for r in batch)
    failed = sum(1 for r in reports if r.status == CheckStatus.FAIL)
    skipped = sum(1 for r in reports if r.status == CheckStatus.SKIP)
    logger.info(f"Suite finished in {watch.millis} ms: {len(reports)} reports, {failed} FAIL, {skipped} SKIP")
    if config.reports_dir:
        write_reports(reports, Path(config.reports_dir) / f"suite-{Profile(profile).value}.json")
    return reports
