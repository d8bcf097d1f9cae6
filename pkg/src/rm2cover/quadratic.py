"""Homogeneous quadratic forms and exact coset-nonlinearity scans.

The central object is the map ``index -> nl(f + q_index)`` where
``q_index`` ranges over all ``2**(n*(n-1)/2)`` homogeneous quadratic
forms.  Indexing is canonical: bit ``p`` of the index is the coefficient
of the p-th variable pair in lexicographic order
``(1,2),(1,3),...,(1,n),(2,3),...,(n-1,n)``.

From one scan everything else follows: the second-order nonlinearity is
the minimum, the per-value histogram is the coset-nonlinearity profile,
and the index sets at a fixed value are the level sets used in the
concatenation-bound checks.

The scan is vectorised: signs of ``f + q`` for a whole block of indices
are built from two cached sign tables (low / high index bits), and a
batched in-place Walsh transform processes the block at once.  Blocks
merge by addition, so sharded runs give bit-identical results regardless
of shard count or worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .core import MAX_VARS, AnfPolynomial, TruthTable, fwht_rows, truth_table_from_anf

# Block size: 2**LOW_BITS cosets per batched transform.
_LOW_BITS = 11


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def variable_pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Variable pairs (i, j), i < j, in index-bit order."""
    return tuple(itertools.combinations(range(1, n + 1), 2))


def form_count(n: int) -> int:
    return 1 << pair_count(n)


@dataclass(frozen=True)
class QuadraticForm:
    """One homogeneous quadratic form, identified by its canonical index."""

    n: int
    index: int

    def __post_init__(self) -> None:
        if not 0 <= self.index < form_count(self.n):
            raise ValueError(f"index {self.index} out of range for n={self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "QuadraticForm":
        pos = {pq: p for p, pq in enumerate(variable_pairs(n))}
        index = 0
        for i, j in pairs:
            index ^= 1 << pos[(min(i, j), max(i, j))]
        return cls(n, index)

    def coefficient_pairs(self) -> tuple[tuple[int, int], ...]:
        pairs = variable_pairs(self.n)
        return tuple(pairs[p] for p in range(len(pairs)) if (self.index >> p) & 1)

    def anf(self) -> AnfPolynomial:
        return AnfPolynomial(self.n, frozenset(frozenset(pq) for pq in self.coefficient_pairs()))

    def truth_table(self) -> TruthTable:
        return truth_table_from_anf(self.anf())


def enumerate_quadratics(n: int, start: int = 0, stop: int | None = None) -> Iterator[QuadraticForm]:
    """Yield quadratic forms in index order; a sub-range supports sharding."""
    if not 2 <= n <= MAX_VARS:
        raise ValueError(f"quadratic enumeration needs 2 <= n <= {MAX_VARS}, got {n}")
    total = form_count(n)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad index range [{start}, {stop}) for n={n}")
    for index in range(start, stop):
        yield QuadraticForm(n, index)


@dataclass(frozen=True)
class NlProfile:
    """Histogram r -> number of quadratic forms q with nl(f + q) = r."""

    n: int
    counts: dict[int, int]

    def __post_init__(self) -> None:
        counts = {int(r): int(c) for r, c in self.counts.items() if c}
        total = sum(counts.values())
        if total != form_count(self.n):
            raise ValueError(f"profile sums to {total}, expected {form_count(self.n)}")
        if self.n >= 3 and len({r & 1 for r in counts}) > 1:
            raise ValueError("profile mixes parities, which cannot happen for n >= 3")
        object.__setattr__(self, "counts", counts)

    def count(self, r: int) -> int:
        return self.counts.get(r, 0)

    @property
    def min_r(self) -> int:
        return min(self.counts)

    @property
    def max_r(self) -> int:
        return max(self.counts)

    def as_json_dict(self) -> dict:
        ordered = {str(r): self.counts[r] for r in sorted(self.counts)}
        return {"n": self.n, "counts": ordered, "sum": sum(self.counts.values())}

    def csv_rows(self) -> list[tuple[int, int]]:
        return [(r, self.counts[r]) for r in sorted(self.counts)]


@dataclass(frozen=True)
class FhSet:
    """Level set of quadratic-form indices q with nl(f + q) = r, as a bitset."""

    n: int
    r: int
    mask: np.ndarray

    def __post_init__(self) -> None:
        m = np.ascontiguousarray(self.mask, dtype=bool)
        if m.shape != (form_count(self.n),):
            raise ValueError("bitset length must be 2**(n*(n-1)/2)")
        m.setflags(write=False)
        object.__setattr__(self, "mask", m)

    @property
    def count(self) -> int:
        return int(np.count_nonzero(self.mask))

    def members(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __contains__(self, index: int) -> bool:
        return bool(self.mask[index])

    def to_hex(self) -> str:
        """Bitset packed as an integer with bit k = membership of index k."""
        packed = np.packbits(self.mask, bitorder="little").tobytes()
        return format(int.from_bytes(packed, "little"), f"0{form_count(self.n) // 4}x")


# --------------------------------------------------------------------------
# vectorised scan machinery


@lru_cache(maxsize=None)
def _sign_tables(n: int):
    """Cached (chi_low, chi_high, low_bits) sign tables for n.

    chi_low[k] is the +-1 table of the quadratic whose index is k over the
    low index bits; chi_high likewise for the remaining bits.
    """
    m = pair_count(n)
    idx = np.arange(1 << n, dtype=np.uint32)
    mono_chi = np.empty((m, 1 << n), dtype=np.int8)
    for p, (i, j) in enumerate(variable_pairs(n)):
        xi = (idx >> (i - 1)) & 1
        xj = (idx >> (j - 1)) & 1
        mono_chi[p] = 1 - 2 * (xi & xj).astype(np.int8)
    low_bits = min(m, _LOW_BITS)

    def span(rows: np.ndarray) -> np.ndarray:
        out = np.ones((1 << len(rows), 1 << n), dtype=np.int8)
        for p in range(len(rows)):
            half = 1 << p
            out[half : 2 * half] = out[:half] * rows[p]
        return out

    return span(mono_chi[:low_bits]), span(mono_chi[low_bits:]), low_bits


def _require_table(f: TruthTable) -> None:
    if f.n < 2:
        raise ValueError("coset scans need n >= 2")


def _block_nl(chi_f: np.ndarray, chi_high_row: np.ndarray, chi_low: np.ndarray, half: int) -> np.ndarray:
    w = ((chi_f * chi_high_row)[None, :] * chi_low).astype(np.int16)
    fwht_rows(w)
    np.abs(w, out=w)
    return (half - (w.max(axis=1) >> 1)).astype(np.uint8)


def coset_nonlinearities(f: TruthTable, start: int = 0, stop: int | None = None) -> np.ndarray:
    """nl(f + q) for every quadratic index in [start, stop), as uint8."""
    _require_table(f)
    total = form_count(f.n)
    if stop is None:
        stop = total
    if not 0 <= start <= stop <= total:
        raise ValueError(f"bad index range [{start}, {stop}) for n={f.n}")
    chi_low, chi_high, low_bits = _sign_tables(f.n)
    chi_f = 1 - 2 * f.bits.astype(np.int8)
    half = 1 << (f.n - 1)
    block = 1 << low_bits
    out = np.empty(stop - start, dtype=np.uint8)
    for hi in range(start >> low_bits, ((stop - 1) >> low_bits) + 1 if stop > start else 0):
        vals = _block_nl(chi_f, chi_high[hi], chi_low, half)
        lo0 = hi << low_bits
        a = max(start, lo0)
        b = min(stop, lo0 + block)
        out[a - start : b - start] = vals[a - lo0 : b - lo0]
    return out


def min_coset_nonlinearity(f: TruthTable, threshold: int | None = None) -> tuple[int, bool]:
    """Minimum of nl(f + q) over all quadratics q, block by block.

    Without a threshold the scan is exhaustive and the result exact.
    With ``threshold`` the scan stops at the end of the first block whose
    running minimum is below it; the returned value is then an upper
    bound proving the minimum is below the threshold (second element
    False).  A returned True always means the exact minimum.
    """
    _require_table(f)
    chi_low, chi_high, _ = _sign_tables(f.n)
    chi_f = 1 - 2 * f.bits.astype(np.int8)
    half = 1 << (f.n - 1)
    best = 1 << f.n
    for hi in range(chi_high.shape[0]):
        vals = _block_nl(chi_f, chi_high[hi], chi_low, half)
        m = int(vals.min())
        if m < best:
            best = m
        if threshold is not None and best < threshold:
            return best, False
    return best, True


def second_order_nonlinearity(f: TruthTable) -> int:
    """Exact distance to the set of all functions of degree at most 2.

    Minimising nl(f + q) over homogeneous quadratics q suffices: nl
    already minimises over the affine part of the degree-2 coset.
    """
    return min_coset_nonlinearity(f)[0]


def max_nl_over_quadratics(f: TruthTable) -> int:
    """Largest r with a nonempty level set (affine parts cannot raise it)."""
    _require_table(f)
    chi_low, chi_high, _ = _sign_tables(f.n)
    chi_f = 1 - 2 * f.bits.astype(np.int8)
    half = 1 << (f.n - 1)
    best = 0
    for hi in range(chi_high.shape[0]):
        m = int(_block_nl(chi_f, chi_high[hi], chi_low, half).max())
        if m > best:
            best = m
    return best


def nfh_profile(f: TruthTable, shards: int = 1, workers: int = 1) -> NlProfile:
    """Full coset-nonlinearity histogram of f.

    ``shards`` splits the index space into contiguous ranges whose
    partial histograms merge by addition; ``workers`` threads may
    process shards concurrently.  Results are identical for any split.
    """
    _require_table(f)
    if shards < 1 or workers < 1:
        raise ValueError("shards and workers must be >= 1")
    total = form_count(f.n)
    shards = min(shards, total)
    bounds = [(total * k // shards, total * (k + 1) // shards) for k in range(shards)]
    size = (1 << (f.n - 1)) + 1

    def partial(rng: tuple[int, int]) -> np.ndarray:
        return np.bincount(coset_nonlinearities(f, rng[0], rng[1]), minlength=size)

    if workers == 1:
        partials = [partial(rng) for rng in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(partial, bounds))
    hist = np.sum(partials, axis=0)
    return NlProfile(f.n, {int(r): int(c) for r, c in enumerate(hist) if c})


def fh_set(f: TruthTable, r: int) -> FhSet:
    """Exact level set {q : nl(f + q) = r}."""
    return FhSet(f.n, r, coset_nonlinearities(f) == r)


def fh_sets(f: TruthTable, rs) -> dict[int, FhSet]:
    """Level sets for several values from a single scan."""
    vals = coset_nonlinearities(f)
    return {int(r): FhSet(f.n, int(r), vals == r) for r in rs}


def fh_subset(f_i: TruthTable, r: int, f_j: TruthTable, rs) -> tuple[bool, int | None]:
    """Is the level set of f_i at r contained in the union of f_j's level
    sets over rs?  On failure, also return one counterexample index."""
    if f_i.n != f_j.n:
        raise ValueError(f"variable count mismatch: {f_i.n} vs {f_j.n}")
    vals_i = coset_nonlinearities(f_i)
    vals_j = coset_nonlinearities(f_j)
    union = np.zeros(vals_j.shape, dtype=bool)
    for s in rs:
        union |= vals_j == s
    bad = (vals_i == r) & ~union
    if not bad.any():
        return True, None
    return False, int(np.flatnonzero(bad)[0])
