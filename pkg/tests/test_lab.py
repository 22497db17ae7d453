"""
Tests for the verifiers: root identity, divisibility lemma, congruence
table, horizontal lift, coset checks, reports and the suite.
"""

import json
from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from cli import exit_code
from config import LabConfig
from cosets import FormalSum
from localfield import FieldElem, LaurentPoly
from orbits import Level, project, trace_1_0
from lab import (
    Profile,
    SuiteTask,
    Variant,
    build_tasks,
    bruteforce_count_J,
    check_congruence_theorem,
    check_count_j,
    check_coset_counts,
    check_divisibility_lemma,
    check_hecke_commutativity,
    check_hecke_fixture,
    check_normal_form_invariance,
    check_refined_keys,
    check_root_identity,
    check_u_power_cosets,
    coefficient_divisible,
    congruence_modulus,
    congruence_table,
    construct_horizontal_lift,
    count_J,
    epsilon_alpha_decompose,
    epsilon_patterns,
    estimate_cost,
    execute_task,
    hecke_frobenius_sum,
    parse_level,
    regrouped_difference,
    reports_json,
    run_suite,
    variant_polynomial,
    write_reports,
)
from lab.lift import _lift
from lab.suite import CHECKS
from hecke import build_hecke_polynomial, specialize
from utils import CheckStatus, DomainError, InternalError, Report, ResourceError, guarded

FIXTURES = str(Path(__file__).resolve().parents[1] / "fixtures" / "v1")


def _poly(*digits, q, start=0):
    return LaurentPoly.from_digits(digits, q, start)


class TestReports:
    """The Report record and its helpers."""

    def test_fail_needs_witness(self):
        with pytest.raises(ValidationError):
            Report(check="x", status=CheckStatus.FAIL)

    def test_passed(self):
        assert Report(check="x", status=CheckStatus.PASS_VACUOUS).passed
        assert not Report(check="x", status=CheckStatus.SKIP).passed

    def test_guarded_maps_errors(self):
        def refuse():
            raise ResourceError("too big")

        def broken():
            raise InternalError("bad witness")

        skipped = guarded("x", {"n": 1}, refuse)
        assert skipped.status == CheckStatus.SKIP
        assert skipped.notes == ["too big"]
        failed = guarded("x", {"n": 1}, broken)
        assert failed.status == CheckStatus.FAIL
        assert failed.witness == {"error": "InternalError", "message": "bad witness"}

    def test_json_is_sorted_and_untimed(self):
        a = Report(check="b", params={"q": 3}, status=CheckStatus.PASS, millis=12)
        b = Report(check="a", params={"q": 5}, status=CheckStatus.PASS, millis=40)
        c = Report(check="b", params={"q": 2}, status=CheckStatus.PASS, millis=1)
        data = json.loads(reports_json([a, b, c]))
        assert [(r["check"], r["params"]["q"]) for r in data] == [("a", 5), ("b", 2), ("b", 3)]
        assert all("millis" not in r for r in data)
        assert reports_json([a, b, c]) == reports_json([c, a, b])

    def test_write_reports(self, tmp_path):
        path = write_reports([Report(check="a", status=CheckStatus.PASS)], tmp_path / "out" / "r.json")
        assert json.loads(path.read_text())[0]["status"] == "PASS"


class TestEpsilonAlpha:
    """iota(c_bar) u_{k,c} c_under = diag(alpha, 1, ..., 1) u_{k,eps}."""

    def test_single_unit(self):
        split = epsilon_alpha_decompose([LaurentPoly.constant(2, 3)], 1, 3, 1)
        assert split.eps == (0,)
        assert split.alpha == FieldElem.from_int(2, 3)

    def test_all_units(self):
        c = [LaurentPoly.constant(1, 5), _poly(3, 1, q=5), LaurentPoly.constant(4, 5)]
        split = epsilon_alpha_decompose(c, 3, 5, 2)
        assert split.eps == (0, 0, 0)
        assert split.c_bar.det().is_one()

    def test_mixed_orders(self):
        q = 3
        split = epsilon_alpha_decompose([LaurentPoly.monomial(1, q), LaurentPoly.constant(1, q)], 2, q, 2)
        assert split.eps == (1, 0)
        assert split.token() == "w^1,w^0"

    def test_zero_entry(self):
        q = 3
        split = epsilon_alpha_decompose([LaurentPoly.constant(2, q), LaurentPoly.zero(q)], 2, q, 1)
        assert split.eps == (0, None)
        assert split.token() == "w^0,0"

    def test_rejects_zero(self):
        with pytest.raises(DomainError):
            epsilon_alpha_decompose([LaurentPoly.zero(3)], 1, 3, 1)

    def test_rejects_entries_outside_s_k(self):
        with pytest.raises(DomainError):
            epsilon_alpha_decompose([LaurentPoly.monomial(2, 3)], 1, 3, 2)


class TestCountJ:
    """Number of c with a given order pattern."""

    def test_single_order_zero(self):
        assert count_J((0,), 1, 3) == 2

    def test_two_entries(self):
        assert count_J((1, 0), 2, 2) == 2
        assert bruteforce_count_J((1, 0), 2, 2) == 2

    def test_rejects_zero_pattern(self):
        with pytest.raises(DomainError):
            count_J((None, None), 2, 3)

    def test_patterns(self):
        assert epsilon_patterns(1, 2) == [(0,), (1,)]
        assert len(epsilon_patterns(2, 1)) == 3
        assert len(epsilon_patterns(2, 3)) == 15

    @pytest.mark.parametrize("n,k", [(1, 1), (1, 3), (2, 1), (2, 2)])
    def test_patterns_partition_nonzero_tuples(self, n, k):
        q = 3
        assert sum(count_J(eps, k, q) for eps in epsilon_patterns(n, k)) == q ** (k * n) - 1

    @pytest.mark.parametrize("n,k,q", [(1, 1, 3), (1, 3, 3), (2, 2, 3), (2, 3, 2)])
    def test_check(self, n, k, q):
        report = check_count_j(n, k, q)
        assert report.passed
        assert report.status == (CheckStatus.PASS_VACUOUS if q == 2 else CheckStatus.PASS)


class TestDivisibility:
    """phi_0((U^k - q^{k(n-1)} Frob^k)[1]) modulo q^{k(n-1)}(q-1)."""

    def test_n1_q3_k1(self):
        report = check_divisibility_lemma(1, 3, 1)
        assert report.status == CheckStatus.PASS
        assert report.counts["classes"] == 2
        assert report.counts["total_mass"] == 3
        assert report.counts["frob_coefficient"] == 1
        assert report.counts["decompositions"] == 2

    def test_n1_q5_k2(self):
        report = check_divisibility_lemma(1, 5, 2)
        assert report.status == CheckStatus.PASS
        assert report.counts["modulus"] == 4

    def test_n2_q3_k1(self):
        report = check_divisibility_lemma(2, 3, 1)
        assert report.status == CheckStatus.PASS
        assert report.counts["modulus"] == 6
        assert report.counts["frob_coefficient"] == 3

    def test_q2_is_vacuous(self):
        assert check_divisibility_lemma(1, 2, 2).status == CheckStatus.PASS_VACUOUS

    def test_k0_is_rejected(self):
        report = check_divisibility_lemma(1, 3, 0)
        assert report.status == CheckStatus.FAIL
        assert report.witness["error"] == "DomainError"

    def test_cap_skips(self):
        report = check_divisibility_lemma(2, 3, 2, cap=10)
        assert report.status == CheckStatus.SKIP

    @pytest.mark.parametrize("n,q,k", [(1, 3, 2), (2, 2, 1)])
    def test_regrouped_mass(self, n, q, k):
        regrouped = regrouped_difference(n, q, k)
        assert regrouped.total_mass() == q ** (k * (2 * n - 1)) - q ** (k * (n - 1))

    @pytest.mark.slow
    @pytest.mark.parametrize("n,q,k", [(1, 3, 4), (1, 5, 4), (2, 2, 2), (2, 3, 2)])
    def test_acceptance_grid(self, n, q, k):
        assert check_divisibility_lemma(n, q, k).passed


class TestRootIdentity:
    """sum_k A_k U^k [1] = 0."""

    @pytest.mark.parametrize("q", [2, 3])
    def test_n1(self, q):
        report = check_root_identity(1, q)
        assert report.status == CheckStatus.PASS
        assert report.counts["degree"] == 2
        assert report.counts["operations"] <= report.counts["estimated_operations"]

    @pytest.mark.slow
    def test_n1_q5(self):
        assert check_root_identity(1, 5).status == CheckStatus.PASS

    def test_estimate_grows_with_q(self):
        poly2 = specialize(build_hecke_polynomial(1), 2)
        poly3 = specialize(build_hecke_polynomial(1), 3)
        assert 0 < estimate_cost(poly2, 1, 2) < estimate_cost(poly3, 1, 3)

    def test_cap_skips(self):
        report = check_root_identity(1, 3, cap=5)
        assert report.status == CheckStatus.SKIP
        assert report.notes


class TestCongruence:
    """H(Frob)[1] in the coinvariant modules."""

    def test_modulus(self):
        assert congruence_modulus(2, 3, Variant.TILDE) == 6
        assert congruence_modulus(2, 3, Variant.PLAIN) == 2

    def test_parse_level(self):
        assert parse_level("HDER") == Level.HDER
        assert parse_level("h0") == Level.H0
        with pytest.raises(DomainError):
            parse_level("h7")

    def test_coefficient_divisible(self):
        assert coefficient_divisible(Fraction(6), 3, 6, Variant.TILDE)
        assert not coefficient_divisible(Fraction(6), 3, 4, Variant.TILDE)
        assert not coefficient_divisible(Fraction(2, 3), 3, 2, Variant.TILDE)
        assert coefficient_divisible(Fraction(2, 9), 3, 2, Variant.PLAIN)
        assert coefficient_divisible(Fraction(-18), 3, 2, Variant.PLAIN)
        assert not coefficient_divisible(Fraction(2, 5), 3, 2, Variant.PLAIN)

    def test_tilde_equals_plain_for_n1(self):
        assert variant_polynomial(1, 3, Variant.TILDE).coefficients == \
            variant_polynomial(1, 3, Variant.PLAIN).coefficients

    @pytest.mark.parametrize("q", [3, 5])
    def test_tilde_h0_n1(self, q):
        report = check_congruence_theorem(1, q, Variant.TILDE, Level.H0)
        assert report.status == CheckStatus.PASS
        assert report.params == {"n": 1, "q": q, "variant": "tilde", "level": "H0"}

    def test_table(self):
        summary, cells = congruence_table(1, 3)
        assert len(cells) == 4
        assert set(summary.counts) == {"plain/Hder", "plain/H0", "tilde/Hder", "tilde/H0"}
        assert summary.status == CheckStatus.PASS
        assert summary.counts["tilde/H0"] == "PASS"
        informational = [c for c in cells if c.status == CheckStatus.FAIL]
        assert len(summary.notes) == len(informational)
        assert all(note.split(" ")[0] in summary.counts for note in summary.notes)

    @pytest.mark.slow
    def test_tilde_h0_n2_q3(self):
        assert check_congruence_theorem(2, 3, Variant.TILDE, Level.H0).status == CheckStatus.PASS


class TestHorizontalLift:
    """Tr_{1,0} x = H(Frob) phi([1])."""

    @pytest.mark.parametrize("q", [3, 5])
    def test_trace_identity(self, q):
        x, report = construct_horizontal_lift(1, q)
        assert report.status == CheckStatus.PASS
        y = project(hecke_frobenius_sum(variant_polynomial(1, q, Variant.TILDE)), Level.HDER)
        assert trace_1_0(x) == y
        assert report.counts["lift_terms"] == len(x)

    def test_zero_input(self):
        x, counts, witness = _lift(FormalSum.zero(), 3, Variant.TILDE)
        assert not x
        assert not witness
        assert counts == {"conductor_0": 0, "higher_conductor": 0}

    def test_cap_skips(self):
        x, report = construct_horizontal_lift(1, 3, cap=1)
        assert report.status == CheckStatus.SKIP
        assert not x


class TestCosetChecks:
    """Property reports over the coset layer."""

    def test_coset_counts(self):
        report = check_coset_counts(3, 2)
        assert report.status == CheckStatus.PASS
        assert report.counts == {"k=1": 7, "k=2": 7, "k=3": 1}

    def test_u_power_cosets(self):
        report = check_u_power_cosets(1, 3, 2)
        assert report.status == CheckStatus.PASS
        assert report.counts["cosets"] == 9

    def test_u_power_cap(self):
        assert check_u_power_cosets(2, 3, 2, cap=10).status == CheckStatus.SKIP

    @pytest.mark.parametrize("n,q", [(1, 3), (2, 2)])
    def test_normal_form_invariance(self, n, q):
        assert check_normal_form_invariance(n, q, trials=10, seed=1).status == CheckStatus.PASS

    def test_hecke_commutativity(self):
        assert check_hecke_commutativity(1, 2, trials=5, seed=1).status == CheckStatus.PASS

    def test_refined_keys(self):
        assert check_refined_keys(2, 2, trials=5, seed=1).status == CheckStatus.PASS


class TestSuite:
    """The acceptance grid."""

    @pytest.fixture
    def config(self):
        return LabConfig(log_file=None, fixtures_dir=FIXTURES)

    def test_task_kwargs_sorted(self):
        task = SuiteTask.of("divisibility", q=3, n=1, k=2)
        assert task.kwargs == (("k", 2), ("n", 1), ("q", 3))

    def test_every_task_is_registered(self, config):
        tasks = build_tasks(Profile.QUICK, config)
        assert all(task.check in CHECKS for task in tasks)
        assert len(set(tasks)) == len(tasks)

    def test_quick_counts_cosets_at_q5(self, config):
        tasks = build_tasks(Profile.QUICK, config)
        assert {dict(t.kwargs)["q"] for t in tasks if t.check == "coset-counts"} == {2, 3, 5}

    def test_full_extends_quick(self, config):
        quick = {t.check for t in build_tasks(Profile.QUICK, config)}
        full = build_tasks(Profile.FULL, config)
        assert quick <= {t.check for t in full}
        assert len(full) > len(build_tasks(Profile.QUICK, config))

    def test_hecke_fixture(self):
        assert check_hecke_fixture(1, FIXTURES).status == CheckStatus.PASS

    def test_missing_fixture_fails(self, tmp_path):
        report = check_hecke_fixture(1, str(tmp_path))
        assert report.status == CheckStatus.FAIL
        assert report.witness["error"] == "DomainError"

    def test_execute_congruence_task(self):
        reports = execute_task(SuiteTask.of("congruence", n=1, q=3, cap=10_000_000))
        assert [r.check for r in reports] == ["congruence-table"]
        assert reports[0].status == CheckStatus.PASS
        assert set(reports[0].counts) == {"plain/Hder", "plain/H0", "tilde/Hder", "tilde/H0"}

    @pytest.mark.slow
    def test_job_count_does_not_change_output(self, config, tmp_path):
        serial = run_suite(Profile.QUICK, config.model_copy(update={"jobs": 1}))
        parallel = run_suite(Profile.QUICK, config.model_copy(update={"jobs": 4, "reports_dir": str(tmp_path)}))
        assert reports_json(serial) == reports_json(parallel)
        assert (tmp_path / "suite-quick.json").exists()
        assert all(r.status != CheckStatus.FAIL for r in serial)

    @pytest.mark.slow
    def test_quick_profile_passes(self, config):
        reports = run_suite(Profile.QUICK, config)
        failed = [(r.check, r.params) for r in reports if r.status == CheckStatus.FAIL]
        assert failed == []
        assert exit_code(reports) == 0
        assert "congruence" not in {r.check for r in reports}
