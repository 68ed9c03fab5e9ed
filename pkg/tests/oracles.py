"""Independent brute-force oracles used across the test suite.

Everything here deliberately avoids the library's own code paths: cofactor
expansion instead of LU, dense operator algebra instead of falling-factorial
sums, and the inclusion-exclusion formula instead of the Stirling recurrence.
"""

import math

import numpy as np

from holeburn import (
    BinomialParams,
    FockSuperposition,
    binomial_state,
    fock_state,
    hole_burn,
    vacuum_filtered_binomial,
)


def cofactor_det(matrix) -> float:
    """Determinant by recursive cofactor expansion along the first row."""
    m = [list(map(float, row)) for row in matrix]
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0.0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * cofactor_det(minor)
    return total


def matrix_moment(state: FockSuperposition, t: int, r: int) -> complex:
    """<adag^t a^r> via dense ladder-operator matrices and matrix powers."""
    dim = state.dim + t + r
    lower = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        lower[n - 1, n] = math.sqrt(n)
    op = np.linalg.matrix_power(lower.conj().T, t) @ np.linalg.matrix_power(lower, r)
    psi = np.zeros(dim, dtype=complex)
    psi[: state.dim] = state.amplitudes
    return complex(psi.conj() @ (op @ psi))


def stirling2_explicit(e: int, f: int) -> int:
    """S2(e, f) by inclusion-exclusion: (1/f!) sum_j (-1)^j C(f, j) (f-j)^e."""
    total = sum((-1) ** j * math.comb(f, j) * (f - j) ** e for j in range(f + 1))
    return total // math.factorial(f)


def random_state(rng: np.random.Generator, dim: int) -> FockSuperposition:
    """Haar-ish random complex state of the given dimension."""
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    amps = amps / math.sqrt(np.sum(np.abs(amps) ** 2))
    return FockSuperposition(amps)


def assorted_states() -> list[FockSuperposition]:
    """A spread of real-amplitude states exercising all constructors."""
    states = [
        fock_state(0, 1),
        fock_state(1),
        fock_state(3, 6),
        binomial_state(BinomialParams(0.3, 5)),
        binomial_state(BinomialParams(0.8, 7)),
        binomial_state(BinomialParams(0.5, 1)),
        vacuum_filtered_binomial(BinomialParams(0.2, 6)),
        vacuum_filtered_binomial(BinomialParams(0.7, 3)),
        vacuum_filtered_binomial(BinomialParams(0.5, 10)),
        hole_burn(binomial_state(BinomialParams(0.5, 6)), 2),
        hole_burn(binomial_state(BinomialParams(0.4, 4)), 4),
    ]
    return states
