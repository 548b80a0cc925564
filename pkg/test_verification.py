"""
Tests for reports, the sweep service, sweep analytics and the verification suites
"""
import json

import pandas as pd
import pytest

from src.analytics import SWEEP_COLUMNS, SweepAnalytics
from src.graphs import path, path_power
from src.pebbling import EtaKind, EtaResult
from src.services import SweepService
from src.utils import dumps_json, to_jsonable, write_json, write_jsonl
from src.verification import (
    GstJob,
    SuiteManager,
    SuiteOptions,
    SuiteStatus,
    VerificationReport,
    gst_jobs,
    path_bound,
    record_violations,
    root_edge_monotonicity
)
from src.verification.jobs import esg_equivalence_job, gin_g_job, multipartite_boundary_job, oracle_sweep_job


def _square(x):
    return x * x


class TestReport:

    def test_check_and_status(self):
        report = VerificationReport("demo", {"seed": 0})
        assert report.check(True)
        assert not report.check(False, {"expected": 1, "got": 2})
        assert (report.cases, report.agreements) == (2, 1)
        assert report.status is SuiteStatus.FAILED
        assert report.disagreements == [{"expected": 1, "got": 2}]

    def test_findings_do_not_fail(self):
        report = VerificationReport("demo")
        report.check(True)
        report.add_finding("note", {"graph": "P_9^2"})
        assert report.passed
        assert report.findings == [{"kind": "note", "graph": "P_9^2"}]

    def test_merge(self):
        report = VerificationReport("demo")
        report.merge(3, 2, [{"x": 1}], [{"kind": "f"}])
        assert (report.cases, report.agreements, len(report.disagreements), len(report.findings)) == (3, 2, 1, 1)

    def test_timing_is_opt_in(self):
        report = VerificationReport("demo").finish()
        assert "wall_time" not in report.to_dict()
        assert report.to_dict(include_timing=True)["wall_time"] >= 0

    def test_deterministic_json(self):
        first = VerificationReport("demo", {"b": 1, "a": (2, 3)}).finish()
        second = VerificationReport("demo", {"a": (2, 3), "b": 1}).finish()
        assert dumps_json(first.to_dict()) == dumps_json(second.to_dict())


class TestHelpers:

    def test_to_jsonable(self):
        assert to_jsonable({"s": frozenset({3, 1}), "t": (1, 2), 1: SuiteStatus.PASSED}) == {
            "s": [1, 3], "t": [1, 2], "1": "passed"
        }

    def test_dumps_json(self):
        assert dumps_json({"b": 1, "a": 2}, indent=None) == '{"a": 2, "b": 1}\n'

    def test_write_json_and_jsonl(self, tmp_path):
        path = write_json({"x": (1,)}, tmp_path / "out" / "r.json")
        assert json.loads(path.read_text()) == {"x": [1]}
        lines = write_jsonl([{"a": 1}, {"a": 2}], tmp_path / "r.jsonl").read_text().splitlines()
        assert [json.loads(line)["a"] for line in lines] == [1, 2]


class TestSweepService:

    def test_inline(self):
        assert SweepService(workers=1).run(_square, [3, 1, 2]) == [9, 1, 4]

    def test_thread_pool_keeps_job_order(self):
        assert SweepService(workers=3, executor="thread").run(_square, list(range(10))) == [i * i for i in range(10)]

    def test_empty(self):
        assert SweepService(workers=4).run(_square, []) == []

    def test_bad_executor(self):
        with pytest.raises(ValueError):
            SweepService(executor="cluster")


class TestSweepAnalytics:

    ROWS = [
        {"s": 1, "t": 2, "h": "H", "config": "0 1 1 0", "rule": "k-odd-table", "oracle": "defender",
         "brute": "defender", "agree": True},
        {"s": 1, "t": 2, "h": "H", "config": "0 3 1 0", "rule": "k-odd-table", "oracle": "mover",
         "brute": "mover", "agree": True},
        {"s": 1, "t": 2, "h": "H", "config": "0 2 2 0", "rule": "multi-even-T", "oracle": "defender",
         "brute": "mover", "agree": False},
    ]

    def test_rule_counts(self):
        counts = SweepAnalytics(self.ROWS).rule_counts()
        assert counts == {
            "k-odd-table": {"cases": 2, "agree": 2, "disagree": 0},
            "multi-even-T": {"cases": 1, "agree": 0, "disagree": 1},
        }

    def test_winner_split_and_disagreements(self):
        analytics = SweepAnalytics(self.ROWS)
        assert analytics.winner_split() == {"defender": 1, "mover": 2}
        assert list(analytics.disagreements()["config"]) == ["0 2 2 0"]

    def test_empty(self):
        analytics = SweepAnalytics()
        assert analytics.rule_counts() == {}
        assert analytics.summary()["cases"] == 0

    def test_csv(self, tmp_path):
        path = SweepAnalytics(self.ROWS).to_csv(tmp_path / "sweep.csv")
        frame = pd.read_csv(path)
        assert list(frame.columns) == SWEEP_COLUMNS
        assert len(frame) == 3


class TestJobs:

    def test_gst_jobs(self):
        jobs = gst_jobs([1, 2], [2, 3], max_pebbles=6)
        assert len(jobs) == (1 + 2) * 2
        assert jobs[0] == GstJob(1, 2, (), 6, "esg")
        assert jobs[-1].descriptor.h_edges == frozenset({(0, 1)})

    def test_oracle_sweep_job(self):
        result = oracle_sweep_job(GstJob(2, 2, ((0, 1),), max_pebbles=6, fallback="brute-force"))
        assert result.cases == result.agreements > 0
        assert len(result.rows) == result.cases
        assert set(result.rows[0]) == set(SWEEP_COLUMNS)

    def test_gin_g_job(self):
        result = gin_g_job(GstJob(1, 2, ()))
        assert result.cases == 3
        assert result.agreements == 3

    def test_multipartite_job_skips_small_s(self):
        result = multipartite_boundary_job(GstJob(2, 2, ((0, 1),), max_pebbles=8))
        assert result.cases == 0

    def test_esg_equivalence_job(self):
        result = esg_equivalence_job(GstJob(2, 2, ((0, 1),), max_pebbles=9))
        reports = result.extra["reports"]
        assert reports
        assert result.disagreements == []
        assert all(report.brute is not None for report in reports)


class TestSuites:

    def test_path_bound(self):
        assert [path_bound(n) for n in (4, 5, 6)] == [8, 19, 42]

    def test_options_defaults(self):
        options = SuiteOptions()
        assert options.t_values == (2, 3)
        assert options.fallback == "esg"
        assert options.parameters()["stretch"] is False

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            SuiteManager().run("nope")

    def test_list_suites(self):
        assert SuiteManager().list_suites() == [
            "esg-equivalence", "gin-g", "infinity", "multipartite", "oracle-sweep", "paths", "sandwich"
        ]

    def test_registered_suite_and_summary(self):
        manager = SuiteManager(suites={})

        def failing(options, analytics):
            report = VerificationReport("failing")
            report.check(False, {"expected": 1, "got": 0})
            return report.finish()

        manager.register("failing", failing)
        report = manager.run("failing")
        assert report.status is SuiteStatus.FAILED
        assert manager.get_summary()["by_status"] == {"passed": 0, "failed": 1}

    def test_small_oracle_sweep(self):
        manager = SuiteManager()
        options = SuiteOptions(s_max=2, t_values=(2,), max_pebbles=6, fallback="brute-force")
        report = manager.run("oracle-sweep", options)
        assert report.passed
        assert report.cases == len(manager.analytics.rows)
        assert sum(v["cases"] for v in report.details["rules"].values()) == report.cases

    def test_small_gin_g(self):
        report = SuiteManager().run("gin-g", SuiteOptions(s_max=1, t_values=(2, 3)))
        assert report.passed
        assert report.details["jobs"] == 2

    @pytest.mark.slow
    def test_gin_g_acceptance(self):
        report = SuiteManager().run("gin-g", SuiteOptions(s_max=3, t_values=(2, 3)))
        assert report.passed

    @pytest.mark.slow
    def test_paths_suite(self):
        report = SuiteManager().run("paths", SuiteOptions())
        assert report.passed
        assert report.details["P_4"]["pi"] == 8

    @pytest.mark.slow
    def test_multipartite_suite(self):
        report = SuiteManager().run("multipartite", SuiteOptions(s_max=3))
        assert report.passed

    def test_analytics_hold_one_run(self):
        manager = SuiteManager()
        options = SuiteOptions(s_max=1, t_values=(2,), max_pebbles=6, fallback="brute-force")
        manager.run("oracle-sweep", options)
        report = manager.run("oracle-sweep", options)
        assert len(manager.analytics.rows) == report.cases
        assert sum(v["cases"] for v in report.details["rules"].values()) == report.cases

    def test_small_esg_equivalence(self):
        options = SuiteOptions(s_max=2, t_values=(2,), max_pebbles=10)
        report = SuiteManager().run("esg-equivalence", options)
        assert report.passed
        assert report.details["boundary_configurations"] > 0
        assert report.details["selected_j_rule"] == "capped_by_x"
        assert "paper_k" not in report.details["consistent_rules"]


class TestMonotonicityFindings:

    def test_violations_become_a_finding(self):
        report = VerificationReport("demo")
        result = EtaResult(EtaKind.FINITE, budget=12, root=0, value=9, witness=(0, 8, 0, 0), violations=[7])
        record_violations(report, path(4, root=0), result, name="demo", removed_edge=[0, 1])
        assert report.passed
        [finding] = report.findings
        assert finding["kind"] == "monotonicity-violation"
        assert finding["sizes"] == [7]
        assert finding["witness"] == [0, 8, 0, 0]
        assert finding["removed_edge"] == [0, 1]
        assert finding["root"] == 0

    def test_no_violations_no_finding(self):
        report = VerificationReport("demo")
        record_violations(report, path(3), EtaResult(EtaKind.FINITE, budget=6, root=0, value=4))
        assert report.findings == []

    def test_root_edge_removal_on_k4_minus_e(self):
        report = VerificationReport("demo")
        root_edge_monotonicity(report, "K_4-e", path_power(4, 2, root=0), budget=12)
        removed = [f for f in report.findings if f["kind"] == "monotonicity-violation" and "removed_edge" in f]
        assert [f["removed_edge"] for f in removed] == [[0, 1], [0, 2]]
        assert all(f["sizes"] == [7] and f["eta"] == {"kind": "finite", "value": 9} for f in removed)


class TestAcceptanceSuites:

    @pytest.mark.slow
    def test_esg_equivalence_acceptance(self):
        report = SuiteManager().run("esg-equivalence", SuiteOptions())
        assert report.passed
        assert report.details["selected_j_rule"] == "capped_by_x"

    @pytest.mark.slow
    def test_infinity(self):
        report = SuiteManager().run("infinity", SuiteOptions(samples=6))
        assert report.passed
        [uncertified] = [f for f in report.findings if f["kind"] == "no-certificate-non-corner-roots"]
        assert uncertified["roots"] == [r for r in range(16) if r not in (0, 3, 12, 15)]
        assert "out of scope" in report.details["grid(4,4) scope"]

    @pytest.mark.slow
    def test_sandwich(self):
        report = SuiteManager().run("sandwich", SuiteOptions())
        assert report.passed
        assert report.details["K_3,3"]["eta"] == 11
        violations = [f for f in report.findings if f["kind"] == "monotonicity-violation"]
        assert {tuple(f["removed_edge"]) for f in violations if f.get("name") == "K_4-e" and "removed_edge" in f} == {
            (0, 1), (0, 2)
        }
