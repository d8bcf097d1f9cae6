"""Independent brute-force references used as test oracles.

Nothing here goes through the library's transform-based code paths:
functions are evaluated monomial by monomial at explicit points, and
distances come from XOR + popcount against explicitly enumerated
codeword tables.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np


def eval_anf_pointwise(monomials, n: int) -> list[int]:
    """Evaluate a set of monomials (tuples of variable indices) at all
    points, index = sum x_i 2^(i-1)."""
    out = []
    for point in range(1 << n):
        xs = [(point >> i) & 1 for i in range(n)]
        value = 0
        for mono in monomials:
            term = 1
            for v in mono:
                term &= xs[v - 1]
            value ^= term
        out.append(value)
    return out


def affine_tables(n: int) -> np.ndarray:
    """All 2^(n+1) affine truth tables, one per row."""
    rows = []
    for mask in range(1 << n):
        for const in (0, 1):
            row = []
            for point in range(1 << n):
                dot = bin(mask & point).count("1") & 1
                row.append(dot ^ const)
            rows.append(row)
    return np.array(rows, dtype=np.uint8)


def brute_nonlinearity(bits: np.ndarray, n: int) -> int:
    tables = affine_tables(n)
    return int((tables ^ np.asarray(bits, dtype=np.uint8)[None, :]).sum(axis=1).min())


def rm2_basis(n: int) -> np.ndarray:
    """Truth tables of 1, x1..xn and all x_i x_j: a basis of the degree-<=2 code."""
    size = 1 << n
    idx = np.arange(size, dtype=np.uint32)
    rows = [np.ones(size, dtype=np.uint8)]
    for i in range(1, n + 1):
        rows.append(((idx >> (i - 1)) & 1).astype(np.uint8))
    for i, j in combinations(range(1, n + 1), 2):
        xi = (idx >> (i - 1)) & 1
        xj = (idx >> (j - 1)) & 1
        rows.append((xi & xj).astype(np.uint8))
    return np.array(rows, dtype=np.uint8)


def span_tables(basis: np.ndarray) -> np.ndarray:
    """All XOR combinations of the given rows (doubling construction)."""
    out = np.zeros((1 << len(basis), basis.shape[1]), dtype=np.uint8)
    for p in range(len(basis)):
        half = 1 << p
        out[half : 2 * half] = out[:half] ^ basis[p]
    return out


def brute_second_order_nl(bits: np.ndarray, n: int) -> int:
    """Min distance to every degree-<=2 codeword by direct enumeration."""
    basis = rm2_basis(n)
    k = len(basis)
    lowk = min(k, 11)
    low = span_tables(basis[:lowk])
    high = span_tables(basis[lowk:])
    f = np.asarray(bits, dtype=np.uint8)
    best = 1 << n
    for h in range(high.shape[0]):
        d = int(((f ^ high[h])[None, :] ^ low).sum(axis=1).min())
        if d < best:
            best = d
    return best


def brute_second_order_nl_batch(tables: np.ndarray, n: int) -> np.ndarray:
    """Vectorised version for many small-n tables at once (n <= 4)."""
    codewords = span_tables(rm2_basis(n))
    best = np.full(tables.shape[0], 1 << n, dtype=np.int64)
    for c in codewords:
        d = (tables ^ c[None, :]).sum(axis=1, dtype=np.int64)
        np.minimum(best, d, out=best)
    return best


def gl2_order_fraction(n: int) -> float:
    """Probability that a uniform n x n bit matrix is invertible."""
    p = 1.0
    for k in range(1, n + 1):
        p *= 1.0 - 2.0**-k
    return p


def random_tables(rng: np.random.Generator, count: int, n: int) -> np.ndarray:
    return rng.integers(0, 2, size=(count, 1 << n), dtype=np.uint8)


def all_points(n: int):
    return product((0, 1), repeat=n)
