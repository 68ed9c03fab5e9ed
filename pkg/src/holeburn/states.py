"""Binomial states and hole-burned (number-state-filtered) variants.

Every state is a normalized superposition over the number states |0>..|M>,
carried as an immutable complex amplitude vector.  The constructors here
always emit real non-negative amplitudes; complex storage keeps the moment
and witness machinery general.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateStateError
from .numerics import log_binomial

__all__ = [
    "DEGENERACY_THRESHOLD",
    "FockSuperposition",
    "BinomialParams",
    "fock_state",
    "binomial_state",
    "hole_burn",
    "vacuum_filtered_binomial",
    "photon_distribution",
]

# Residual weight below which renormalizing a filtered state would only
# amplify floating noise past any witness tolerance.
DEGENERACY_THRESHOLD = 1e-14

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class FockSuperposition:
    """Normalized pure state sum_n c_n |n> on the photon-number basis.

    Parameters
    ----------
    amplitudes : array_like of complex
        Coefficients c_0 .. c_M, index n = photon number.  Must carry unit
        norm within 1e-12; the stored array is a read-only copy.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex)
        if amps.ndim != 1 or amps.size == 0:
            raise ValueError("amplitudes must be a non-empty 1-D sequence")
        if not np.isfinite(amps).all():
            raise ValueError("amplitudes must be finite")
        norm_sq = math.fsum((amps.real ** 2 + amps.imag ** 2).tolist())
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise ValueError(f"amplitudes are not normalized: |c|^2 sums to {norm_sq!r}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def dim(self) -> int:
        """Dimension M + 1 of the truncated Fock space."""
        return self.amplitudes.size

    @property
    def max_photon(self) -> int:
        """Largest photon number M in the expansion."""
        return self.amplitudes.size - 1


@dataclass(frozen=True)
class BinomialParams:
    """Parameters (p, M) of a binomial state.

    p is the probability-like weight in [0, 1]; M is the maximum photon
    number.
    """

    p: float
    M: int

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if self.M < 0:
            raise ValueError(f"M must be non-negative, got {self.M}")


def fock_state(n: int, dim: int | None = None) -> FockSuperposition:
    """Number state |n> embedded in a space of the given dimension.

    ``dim`` defaults to n + 1, the smallest space containing |n>.
    """
    if n < 0:
        raise ValueError(f"photon number must be non-negative, got {n}")
    if dim is None:
        dim = n + 1
    if dim <= n:
        raise ValueError(f"dim {dim} too small for photon number {n}")
    amps = np.zeros(dim, dtype=complex)
    amps[n] = 1.0
    return FockSuperposition(amps)


def binomial_state(params: BinomialParams) -> FockSuperposition:
    """Binomial state with photon-number distribution Bin(M, p).

    Amplitudes are c_n = [C(M, n) p^n (1-p)^(M-n)]^(1/2), assembled in log
    space so that large M stays finite.  The endpoints p = 0 and p = 1
    collapse to the number states |0> and |M>.

    Parameters
    ----------
    params : BinomialParams
        Weight p and cutoff M.

    Returns
    -------
    FockSuperposition
        The normalized state; all amplitudes real non-negative.
    """
    p, M = params.p, params.M
    if p == 0.0:
        return fock_state(0, M + 1)
    if p == 1.0:
        return fock_state(M, M + 1)
    log_p = math.log(p)
    log_q = math.log1p(-p)
    amps = np.zeros(M + 1, dtype=complex)
    for n in range(M + 1):
        amps[n] = math.exp(0.5 * (log_binomial(M, n) + n * log_p + (M - n) * log_q))
    # Analytically unit norm (binomial theorem); rescale to absorb lgamma
    # rounding, which grows past 1e-13 near M ~ 100.
    norm_sq = math.fsum((amps.real ** 2).tolist())
    return FockSuperposition(amps / math.sqrt(norm_sq))


def hole_burn(state: FockSuperposition, k: int) -> FockSuperposition:
    """Remove the |k> component of a state and renormalize.

    Returns a new state with c_k = 0 and the remaining amplitudes divided by
    the square root of the residual weight; the input is left untouched.

    Raises
    ------
    DegenerateStateError
        If the residual weight sum_{n != k} |c_n|^2 is at or below the
        degeneracy threshold (burning the only occupied level).
    """
    if not 0 <= k <= state.max_photon:
        raise ValueError(f"hole index {k} outside 0..{state.max_photon}")
    amps = np.array(state.amplitudes)
    amps[k] = 0.0
    residual = math.fsum((amps.real ** 2 + amps.imag ** 2).tolist())
    if residual <= DEGENERACY_THRESHOLD:
        raise DegenerateStateError(
            f"residual weight {residual!r} after burning |{k}> is below threshold"
        )
    return FockSuperposition(amps / math.sqrt(residual))


def vacuum_filtered_binomial(params: BinomialParams) -> FockSuperposition:
    """Binomial state with the vacuum component removed.

    Evaluates the closed form directly: c_n for n >= 1 is the raw binomial
    amplitude scaled by [1 - (1-p)^M]^(-1/2).  This is a second, independent
    route to ``hole_burn(binomial_state(params), 0)``; the constructor's norm
    check attests the analytic normalization on every call.

    Raises
    ------
    DegenerateStateError
        If p = 0 or 1 - (1-p)^M is numerically zero (the vacuum exhausts the
        state; also covers M = 0).
    """
    p, M = params.p, params.M
    if p == 0.0:
        raise DegenerateStateError("p = 0 leaves only the vacuum; nothing survives the filter")
    if p == 1.0:
        surviving = 1.0
    else:
        # 1 - (1-p)^M, evaluated without cancellation for small M*p.
        surviving = -math.expm1(M * math.log1p(-p))
    if surviving <= DEGENERACY_THRESHOLD:
        raise DegenerateStateError(
            f"vacuum weight 1 - |c_0|^2 = {surviving!r} is below threshold for (p={p}, M={M})"
        )
    if p == 1.0:
        return fock_state(M, M + 1)
    scale = 1.0 / math.sqrt(surviving)
    log_p = math.log(p)
    log_q = math.log1p(-p)
    amps = np.zeros(M + 1, dtype=complex)
    for n in range(1, M + 1):
        amps[n] = scale * math.exp(
            0.5 * (log_binomial(M, n) + n * log_p + (M - n) * log_q)
        )
    return FockSuperposition(amps)


def photon_distribution(state: FockSuperposition) -> np.ndarray:
    """Photon-number probabilities (|c_0|^2, ..., |c_M|^2)."""
    amps = state.amplitudes
    return amps.real ** 2 + amps.imag ** 2
