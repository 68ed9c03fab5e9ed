"""Stable special-function and small-matrix kernels.

Log-domain magnitudes are plain floats holding natural logarithms, with
``-inf`` encoding an exact zero (``math.exp(-inf) == 0.0``).  Factorial-type
quantities never leave log space until they are combined into a final
amplitude or moment, so photon cutoffs of several hundred stay finite.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import OrderCapError

__all__ = [
    "ORDER_CAP",
    "log_binomial",
    "log_falling_factorial",
    "stirling2",
    "determinant",
]

# Shared cap on creation/annihilation powers and Stirling indices.  S2(20, 10)
# is about 5.9e12, so everything below the cap is exact in 64-bit arithmetic.
ORDER_CAP = 20

# Pivots below this magnitude are treated as structural zeros; moment matrices
# of e.g. the vacuum state are exactly singular.
_PIVOT_FLOOR = 1e-300


def log_binomial(n: int, k: int) -> float:
    """Return ln C(n, k), or ``-inf`` when k lies outside 0..n.

    Out-of-range k encodes a vanishing coefficient rather than raising, so
    sums over filtered states may index freely.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if k < 0 or k > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(k + 1) - math.lgamma(n - k + 1)


def log_falling_factorial(n: int, r: int) -> float:
    """Return ln(n! / (n - r)!), or ``-inf`` when r > n.

    The ``-inf`` branch is the log-domain image of annihilating below the
    vacuum: applying r lowering operators to |n> with r > n gives zero.
    """
    if n < 0 or r < 0:
        raise ValueError(f"arguments must be non-negative, got ({n}, {r})")
    if r > n:
        return -math.inf
    return math.lgamma(n + 1) - math.lgamma(n - r + 1)


def _stirling2_table(cap: int) -> tuple[tuple[int, ...], ...]:
    # S2(e, f) = f * S2(e-1, f) + S2(e-1, f-1), S2(0, 0) = 1.
    table = [[0] * (cap + 1) for _ in range(cap + 1)]
    table[0][0] = 1
    for e in range(1, cap + 1):
        for f in range(1, e + 1):
            table[e][f] = f * table[e - 1][f] + table[e - 1][f - 1]
    return tuple(tuple(row) for row in table)


_STIRLING2 = _stirling2_table(ORDER_CAP)


def stirling2(e: int, f: int) -> int:
    """Exact Stirling number of the second kind S2(e, f).

    Counts partitions of an e-element set into f non-empty blocks.  Values
    are taken from an immutable table built once at import; e is capped at
    ``ORDER_CAP`` and f > e returns 0.
    """
    if e < 0 or f < 0:
        raise ValueError(f"indices must be non-negative, got ({e}, {f})")
    if e > ORDER_CAP:
        raise OrderCapError(f"Stirling index {e} exceeds cap {ORDER_CAP}")
    if f > e:
        return 0
    return _STIRLING2[e][f]


def determinant(matrix) -> float:
    """Determinant of a square real matrix.

    Uses in-place LU factorization with partial pivoting, tracking the sign
    through row exchanges.  A pivot below 1e-300 in magnitude short-circuits
    to 0.0, which handles structurally singular moment matrices gracefully.

    Raises
    ------
    ValueError
        If the input is not square or contains non-finite entries.
    """
    lu = np.array(matrix, dtype=float)
    if lu.ndim != 2 or lu.shape[0] != lu.shape[1]:
        raise ValueError(f"matrix must be square, got shape {lu.shape}")
    if lu.size and not np.isfinite(lu).all():
        raise ValueError("matrix entries must be finite")

    size = lu.shape[0]
    sign = 1.0
    for col in range(size):
        pivot = col + int(np.argmax(np.abs(lu[col:, col])))
        if abs(lu[pivot, col]) < _PIVOT_FLOOR:
            return 0.0
        if pivot != col:
            lu[[col, pivot]] = lu[[pivot, col]]
            sign = -sign
        lu[col + 1:, col] /= lu[col, col]
        lu[col + 1:, col + 1:] -= np.outer(lu[col + 1:, col], lu[col, col + 1:])
    return sign * float(np.prod(np.diag(lu)))
