"""Independent test oracles: floating point and brute force, never the library's cyclotomic path."""

from __future__ import annotations

import itertools

import numpy as np


def numeric_gram(matrix, h: int) -> np.ndarray:
    H = np.exp(2j * np.pi * np.asarray(matrix, dtype=float) / h)
    return H @ H.conj().T


def numeric_is_bh(matrix, h: int) -> bool:
    n = len(matrix)
    return bool(np.allclose(numeric_gram(matrix, h), n * np.eye(n), atol=1e-8))


def numeric_value(coeffs, m: int) -> complex:
    return complex(sum(c * np.exp(2j * np.pi * k / m) for k, c in enumerate(coeffs)))


def circulant(row):
    v = len(row)
    return [[row[(x - y) % v] for x in range(v)] for y in range(v)]


def brute_force_circulant(v: int, h: int):
    """Lexicographically first normalised circulant BH(Z_v, h) row, no pruning."""
    for tail in itertools.product(range(h), repeat=v - 1):
        row = (0,) + tail
        if numeric_is_bh(circulant(row), h):
            return row
    return None
