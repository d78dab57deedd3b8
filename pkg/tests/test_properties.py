"""Seeded property suites over small random corpora."""

import pytest

from src.core.bases import has_sep, is_polymatroidal
from src.experiments.corpus import (
    SUITES,
    CorpusSummary,
    InstanceResult,
    SuiteConfig,
    nontrivial_floor,
    run_corpus,
    run_instance,
)
from src.experiments.generator import (
    presentation_size,
    random_instances,
    random_profile,
    random_sep_product,
    random_subset,
    random_veronese,
)
from src.utils.rng import SplitMix64

SMALL = SuiteConfig(seed=2024, n_max=3, d_max_factor=2, s_max=2, fiber_d_max=3, max_variables=12)
MEDIUM = SuiteConfig(seed=11, n_max=4, d_max_factor=2, s_max=2, fiber_d_max=3, max_variables=16)
MEDIUM_COUNT = 10


class TestGenerator:
    def test_profile_is_feasible(self):
        rng = SplitMix64(3)
        for _ in range(50):
            lower, upper = random_profile(rng, 4, 3)
            assert sum(lower) <= 3 <= sum(upper)
            assert all(lo <= hi for lo, hi in zip(lower, upper))

    def test_random_veronese_has_sep(self):
        rng = SplitMix64(9)
        for _ in range(20):
            assert has_sep(random_veronese(rng, 3, 3))[0]

    @pytest.mark.parametrize("n,d", [(2, 1), (3, 1), (2, 3), (5, 2)])
    def test_random_veronese_has_two_elements(self, n, d):
        rng = SplitMix64(n * 10 + d)
        for _ in range(100):
            assert len(random_veronese(rng, n, d)) >= 2

    def test_single_variable_veronese_is_a_point(self):
        assert len(random_veronese(SplitMix64(1), 1, 3)) == 1

    def test_random_subset_keeps_two(self):
        rng = SplitMix64(5)
        basis = random_veronese(rng, 3, 2)
        for _ in range(50):
            subset = random_subset(rng, basis)
            assert len(subset) >= 2
            assert all(m in basis for m in subset)

    def test_size_bound(self):
        rng = SplitMix64(1)
        structure = random_sep_product(rng, 4, 3, 3, max_variables=20)
        assert presentation_size(structure) <= 20

    def test_minimum_factor_count(self):
        rng = SplitMix64(8)
        for _ in range(10):
            assert random_sep_product(rng, 3, 2, 3, max_variables=40, s_min=2).s >= 2

    def test_instances_depend_only_on_seed_and_index(self):
        first = random_instances(42, 3, 2, 2, 4)
        second = random_instances(42, 3, 2, 2, 2)
        assert first[:2] == second
        assert random_instances(43, 3, 2, 2, 4) != first


class TestSuites:
    @pytest.mark.parametrize("suite", sorted(SUITES))
    def test_suite_passes_on_small_instances(self, suite):
        summary = run_corpus([suite], 3, SMALL)
        failure = summary.first_failure()
        assert failure is None, f"{failure.suite}[{failure.index}]: {failure.error or failure.detail}"
        counts = summary.counts()[suite]
        assert (counts["instances"], counts["passed"], counts["failed"], counts["errors"]) == (3, 3, 0, 0)
        assert summary.verdicts() == {suite: True}

    def test_instance_is_reproducible(self):
        assert run_instance(("white", 1, SMALL)) == run_instance(("white", 1, SMALL))

    def test_parallel_matches_serial(self):
        suites = ["sep-veronese", "power-sep"]
        serial = run_corpus(suites, 4, SMALL, jobs=1)
        parallel = run_corpus(suites, 4, SMALL, jobs=2)
        assert serial.results == parallel.results

    def test_products_of_random_sep_bases_are_polymatroidal(self):
        rng = SplitMix64(77)
        for _ in range(5):
            structure = random_sep_product(rng, 3, 2, 3, max_variables=30)
            assert is_polymatroidal(structure.flattened)[0]


# -----------------------------------------------------------------------
# Nontrivial coverage
# -----------------------------------------------------------------------


class TestNontrivialCoverage:
    @pytest.mark.parametrize("suite", sorted(SUITES))
    def test_suite_meets_floor(self, suite):
        summary = run_corpus([suite], MEDIUM_COUNT, MEDIUM)
        counts = summary.counts()[suite]
        assert counts["failed"] == 0, summary.first_failure()
        assert counts["nontrivial"] >= nontrivial_floor(MEDIUM_COUNT)
        assert summary.verdicts()[suite]

    @pytest.mark.parametrize("suite", ["white", "generalized-moves", "groebner-oracle"])
    def test_products_always_have_nontrivial_fibers(self, suite):
        summary = run_corpus([suite], MEDIUM_COUNT, MEDIUM)
        assert summary.counts()[suite]["nontrivial"] == MEDIUM_COUNT

    def test_white_reports_fiber_counts(self):
        for index in range(MEDIUM_COUNT):
            result = run_instance(("white", index, MEDIUM))
            assert result.detail["nontrivial_fibers"] > 0
            assert result.detail["variables"] >= 4

    def test_groebner_oracle_counts_certified(self):
        summary = run_corpus(["groebner-oracle"], MEDIUM_COUNT, MEDIUM)
        assert summary.counts()["groebner-oracle"]["certified"] == MEDIUM_COUNT

    def test_column_permutation_moves_the_monomial(self):
        for index in range(MEDIUM_COUNT):
            result = run_instance(("column-permutation", index, MEDIUM))
            if result.nontrivial:
                assert result.detail["monomial"] != result.detail["permuted"]

    def test_trivial_corpus_fails_the_floor(self):
        results = [InstanceResult("white", k, True) for k in range(4)]
        assert CorpusSummary(results).verdicts() == {"white": False}

    def test_uncertified_oracle_fails_the_floor(self):
        results = [InstanceResult("groebner-oracle", k, True, detail={"certified": False}) for k in range(3)]
        summary = CorpusSummary(results)
        assert summary.counts()["groebner-oracle"]["certified"] == 0
        assert summary.verdicts() == {"groebner-oracle": False}

    def test_floor(self):
        assert nontrivial_floor(0) == 0
        assert nontrivial_floor(3) == 2
        assert nontrivial_floor(100) == 50
