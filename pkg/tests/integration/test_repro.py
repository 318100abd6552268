"""
Integration tests for the reproduction suite.

These run every check end to end over the catalog, the corpus proofs and
sampled instances, the same way the ``repro`` subcommand does.
"""

from pathlib import Path

import pytest

from src.catalog import get_matrix
from src.catalog.repro import (
    CHECKS,
    PLONKA_MATRICES,
    ReproCheck,
    ReproReport,
    ReproSettings,
    check_plonka_equivalence,
    run_repro,
)
from src.companions.instances import enumerate_instances
from src.utils.config import WorkbenchConfig

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


class TestReproSuite:
    """End-to-end runs of run_repro."""

    def test_quick_run_passes(self):
        report = run_repro(ReproSettings.from_config(WorkbenchConfig(corpus_path=CORPUS), quick=True))
        assert [c.describe() for c in report.failures()] == []
        assert len(report.checks) == len(CHECKS)
        assert report.summary() == f"{len(CHECKS)}/{len(CHECKS)} check(s) passed"

    @pytest.mark.slow
    def test_full_run_passes(self):
        report = run_repro(ReproSettings.from_config(WorkbenchConfig(corpus_path=CORPUS)))
        assert report.passed, report.summary()

    def test_missing_corpus_fails_cleanly(self, tmp_path):
        settings = ReproSettings.from_config(WorkbenchConfig(corpus_path=tmp_path), quick=True)
        report = run_repro(settings)
        assert not report.passed
        assert all(isinstance(c, ReproCheck) for c in report.checks)
        assert len(report.checks) == len(CHECKS)


class TestReproReport:
    """Report bookkeeping."""

    def test_summary_counts_failures(self):
        report = ReproReport([ReproCheck("a", True, "ok"), ReproCheck("b", False, "1 failure(s): x")])
        assert not report.passed
        assert report.summary() == "1/2 check(s) passed"
        assert report.failures()[0].describe() == "FAIL b: 1 failure(s): x"

    def test_quick_settings(self):
        settings = ReproSettings.from_config(WorkbenchConfig(random_seed=7), quick=True)
        assert settings.seed == 7
        assert settings.dt_premises == 0
        assert settings.plonka_instances == 50


class TestCompanionEquivalence:
    """check_plonka_equivalence over the enumerated two-variable slice."""

    @staticmethod
    def _slice_size(depth):
        return sum(
            len(list(enumerate_instances(get_matrix(m).language, ("p", "q"), depth, max_premises=1)))
            for m in PLONKA_MATRICES
        )

    def test_atomic_slice_only(self):
        check = check_plonka_equivalence(ReproSettings(plonka_instances=0, plonka_depth=0))
        assert check.passed, check.detail
        assert check.detail == f"{self._slice_size(0)} instance(s) agree"

    @pytest.mark.slow
    def test_depth_one_slice_and_sample(self):
        check = check_plonka_equivalence(ReproSettings(plonka_instances=100, plonka_depth=1))
        assert check.passed, check.detail
        expected = self._slice_size(1) + 100 * len(PLONKA_MATRICES)
        assert check.detail == f"{expected} instance(s) agree"
