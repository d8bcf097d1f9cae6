"""Exact 7-variable second-order nonlinearity and the budgeted witness
search over the characterised family for value 42.

The candidate family is ``fun_i1 || (fun_i2(Ax+b) + g)`` with
``i1, i2 in {4, 6}``, A invertible, b arbitrary and g a homogeneous
quadratic plus a linear part.  For each sampled candidate the six
level-set inclusions (condition 2) act as a fast filter; a passing
candidate is confirmed by the exact 128-point scan.  Per the
characterisation, a pass must yield exactly 42 and a failure at most 40
— any counterexample is refutation-grade and aborts the run with a full
candidate dump.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

import numpy as np

from . import quadratic
from .affine import AffineMap, sample_affine_map, apply_affine
from .catalog import catalog_function
from .claims import condition2_relations
from .core import TruthTable, concatenate

DEFAULT_THRESHOLD = 41


class Nl2Result(NamedTuple):
    """value is exact when ``exact``; otherwise an upper bound proving
    the minimum lies below the requested threshold."""

    value: int
    exact: bool


def exact_nl2_7(f: TruthTable, threshold: int | None = None) -> Nl2Result:
    """Exact second-order nonlinearity of a 7-variable function.

    Scans all 2**21 homogeneous quadratics; with ``threshold`` the scan
    stops early once any coset value below it is seen (the result then
    proves nl2 < threshold without being exact).
    """
    if f.n != 7:
        raise ValueError(f"the exact kernel is for n=7, got n={f.n}")
    value, exact = quadratic.min_coset_nonlinearity(f, threshold=threshold)
    return Nl2Result(value, exact)


@dataclass(frozen=True)
class SearchConfig:
    i1: int = 4
    i2: int = 4
    seed: int = 0
    budget: int = 50  # number of (A, b, g) candidates to sample
    threshold: int = DEFAULT_THRESHOLD  # early-exit bound for exact checks
    fail_check_rate: int = 100  # exact-check every k-th condition-2 failure
    threads: int = 1

    def __post_init__(self) -> None:
        if self.i1 not in (4, 6) or self.i2 not in (4, 6):
            raise ValueError("i1 and i2 must be 4 or 6")
        if self.budget < 1:
            raise ValueError("budget must be positive")
        if self.fail_check_rate < 1 or self.threads < 1:
            raise ValueError("fail_check_rate and threads must be >= 1")


@dataclass
class SearchRecord:
    candidate: int
    map: AffineMap
    quad_index: int
    linear_mask: int
    cond2_pass: bool
    failed_relations: list[dict] = field(default_factory=list)
    nl2_value: int | None = None
    nl2_exact: bool | None = None

    @property
    def is_witness(self) -> bool:
        return bool(self.nl2_exact) and self.nl2_value == 42

    def as_json_dict(self) -> dict:
        d = self.map.as_json_dict()
        return {
            "candidate": self.candidate,
            "A": d["A"],
            "b": d["b"],
            "g_quad_index": self.quad_index,
            "g_linear_mask": self.linear_mask,
            "cond2_pass": self.cond2_pass,
            "failed_relations": self.failed_relations,
            "nl2_value": self.nl2_value,
            "nl2_exact": self.nl2_exact,
            "is_witness": self.is_witness,
        }


@dataclass
class SearchSummary:
    i1: int
    i2: int
    seed: int
    candidates: int
    cond2_passes: int
    exact_checked: int
    max_nl2_exact: int | None
    witnesses: int

    def as_json_dict(self) -> dict:
        return dict(self.__dict__)


class FilterContradiction(RuntimeError):
    """A candidate violated the pass=>42 / fail=><=40 characterisation."""

    def __init__(self, message: str, record: SearchRecord):
        super().__init__(f"{message}; candidate dump: {record.as_json_dict()}")
        self.record = record


def _candidate_half(i2: int, m: AffineMap, quad_index: int, linear_mask: int) -> TruthTable:
    g = quadratic.QuadraticForm(6, quad_index).truth_table().bits.copy()
    idx = np.arange(64, dtype=np.uint32)
    for v in range(6):
        if (linear_mask >> v) & 1:
            g ^= ((idx >> v) & 1).astype(np.uint8)
    return apply_affine(catalog_function(f"fun_{i2}"), m) ^ TruthTable(6, g)


def witness_search(cfg: SearchConfig, on_record: Callable[[SearchRecord], None] | None = None) -> SearchSummary:
    """Sample candidates, filter by condition 2, exact-check as configured.

    Deterministic for a fixed (seed, budget); thread count affects
    neither the candidate stream nor the records.  Condition-2 passes
    are always exact-checked; failures are cross-checked at the
    configured 1-in-k rate.  Returns the run summary; records stream
    through ``on_record`` in candidate order.
    """
    rng = np.random.default_rng(cfg.seed)
    params = []
    for k in range(cfg.budget):
        m = sample_affine_map(6, rng)
        params.append((k, m, int(rng.integers(0, quadratic.form_count(6))), int(rng.integers(0, 64))))

    f1 = catalog_function(f"fun_{cfg.i1}")
    vals1 = quadratic.coset_nonlinearities(f1)

    def evaluate(param) -> SearchRecord:
        k, m, quad_index, linear_mask = param
        half = _candidate_half(cfg.i2, m, quad_index, linear_mask)
        relations = condition2_relations(f1, half, vals1=vals1)
        failed = [r for r in relations if not r["holds"]]
        return SearchRecord(k, m, quad_index, linear_mask, cond2_pass=not failed, failed_relations=failed)

    if cfg.threads == 1:
        records = [evaluate(p) for p in params]
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            records = list(pool.map(evaluate, params))

    # a pass must be confirmable as exactly 42, so never early-exit above 41
    threshold = min(cfg.threshold, DEFAULT_THRESHOLD)
    fails_seen = 0
    exact_checked = 0
    max_exact: int | None = None
    witnesses = 0
    for record in records:
        check = record.cond2_pass
        if not record.cond2_pass:
            if fails_seen % cfg.fail_check_rate == 0:
                check = True
            fails_seen += 1
        if check:
            f = concatenate(f1, _candidate_half(cfg.i2, record.map, record.quad_index, record.linear_mask))
            result = exact_nl2_7(f, threshold=threshold)
            record.nl2_value, record.nl2_exact = result.value, result.exact
            exact_checked += 1
            if result.exact:
                max_exact = result.value if max_exact is None else max(max_exact, result.value)
                if result.value > 42:
                    raise FilterContradiction("exact nl2 above the stated global bound 42", record)
            if record.cond2_pass:
                if not (result.exact and result.value == 42):
                    raise FilterContradiction("condition-2 pass without exact nl2 = 42", record)
                witnesses += 1
            elif result.exact and result.value > 40:
                # a non-exact result already proves nl2 < 41
                raise FilterContradiction("condition-2 failure with nl2 above 40", record)
        if on_record is not None:
            on_record(record)

    return SearchSummary(
        i1=cfg.i1,
        i2=cfg.i2,
        seed=cfg.seed,
        candidates=len(records),
        cond2_passes=sum(1 for r in records if r.cond2_pass),
        exact_checked=exact_checked,
        max_nl2_exact=max_exact,
        witnesses=witnesses,
    )
