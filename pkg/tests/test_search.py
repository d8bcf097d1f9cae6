import json

import numpy as np
import pytest

from rm2cover import (
    SearchConfig,
    TruthTable,
    catalog_function,
    concatenate,
    exact_nl2_7,
    witness_search,
)
from rm2cover.quadratic import QuadraticForm, form_count
from rm2cover.search import DEFAULT_THRESHOLD


class TestExactKernel:
    def test_low_degree_is_zero(self):
        q = QuadraticForm(7, 12345).truth_table()
        assert exact_nl2_7(q) == (0, True)

    def test_regression_constant(self):
        # frozen from the first full run: a 7-variable function that ignores
        # its top variable doubles the 6-variable distance (2 * 18)
        f1 = catalog_function("fun_1")
        assert exact_nl2_7(concatenate(f1, f1)) == (36, True)

    def test_threshold_semantics(self):
        f = concatenate(catalog_function("fun_1"), catalog_function("fun_1"))
        bounded = exact_nl2_7(f, threshold=37)
        assert not bounded.exact and bounded.value < 37
        at_minimum = exact_nl2_7(f, threshold=36)
        assert at_minimum == (36, True)  # nothing drops below the true minimum

    def test_upper_bound_44_on_random_functions(self, rng):
        for _ in range(3):
            f = TruthTable(7, rng.integers(0, 2, size=128, dtype=np.uint8))
            result = exact_nl2_7(f, threshold=45)
            assert result.value <= 44

    def test_rejects_other_sizes(self):
        with pytest.raises(ValueError):
            exact_nl2_7(TruthTable.zeros(6))


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(i1=5, i2=4)
        with pytest.raises(ValueError):
            SearchConfig(budget=0)
        with pytest.raises(ValueError):
            SearchConfig(threads=0)

    def test_defaults(self):
        cfg = SearchConfig()
        assert cfg.threshold == DEFAULT_THRESHOLD


class TestWitnessSearch:
    def test_deterministic_record_stream(self):
        def run():
            records = []
            summary = witness_search(
                SearchConfig(i1=4, i2=6, seed=99, budget=5, fail_check_rate=2),
                on_record=lambda r: records.append(json.dumps(r.as_json_dict())),
            )
            return records, summary.as_json_dict()

        first, summary1 = run()
        second, summary2 = run()
        assert first == second
        assert summary1 == summary2
        assert summary1["candidates"] == 5

    def test_threads_do_not_change_results(self):
        def run(threads):
            records = []
            witness_search(
                SearchConfig(i1=6, i2=6, seed=3, budget=4, fail_check_rate=2, threads=threads),
                on_record=lambda r: records.append(json.dumps(r.as_json_dict())),
            )
            return records

        assert run(1) == run(2)

    def test_filter_consistency_on_all_candidates(self):
        # exact-check every candidate: pass => 42 and fail => <= 40 must hold
        # (the run raises on any violation)
        summary = witness_search(SearchConfig(i1=4, i2=4, seed=17, budget=8, fail_check_rate=1))
        assert summary.exact_checked == 8
        assert summary.candidates == 8
        assert (summary.max_nl2_exact or 0) <= 42

    def test_records_carry_full_candidate(self):
        records = []
        witness_search(
            SearchConfig(i1=6, i2=4, seed=1, budget=2, fail_check_rate=1),
            on_record=records.append,
        )
        for record in records:
            payload = record.as_json_dict()
            assert len(payload["A"]) == 6
            assert 0 <= payload["g_quad_index"] < form_count(6)
            assert payload["cond2_pass"] == (not payload["failed_relations"])
