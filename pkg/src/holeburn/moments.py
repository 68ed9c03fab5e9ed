"""Normally-ordered moments <adag^t a^r> of finite Fock superpositions.

Two routes are provided: a direct Fock-space sum valid for any state, and a
closed form specialized to the vacuum-filtered binomial state.  The two must
agree to 1e-10 relative; the reconciliation test in the suite is the
correctness criterion for the closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateStateError, OrderCapError
from .numerics import ORDER_CAP, log_binomial, log_falling_factorial
from .states import BinomialParams, DEGENERACY_THRESHOLD, FockSuperposition

__all__ = [
    "MomentOrder",
    "moment",
    "moment_closed_form_vfb",
    "mean_photon_number",
]

_IMAG_TOL = 1e-12


@dataclass(frozen=True)
class MomentOrder:
    """Pair (t, r) selecting the normally-ordered moment <adag^t a^r>."""

    t: int
    r: int

    def __post_init__(self):
        if self.t < 0 or self.r < 0:
            raise ValueError(f"powers must be non-negative, got ({self.t}, {self.r})")
        if self.t > ORDER_CAP or self.r > ORDER_CAP:
            raise OrderCapError(
                f"moment order ({self.t}, {self.r}) exceeds cap {ORDER_CAP}"
            )


def _as_order(order) -> MomentOrder:
    if isinstance(order, MomentOrder):
        return order
    t, r = order
    return MomentOrder(int(t), int(r))


def moment(state: FockSuperposition, order) -> complex:
    """Normally-ordered moment of any state, by direct Fock-space summation.

    Evaluates sum_n conj(c_{n-r+t}) c_n [n!/(n-r)!]^(1/2) [(n-r+t)!/(n-r)!]^(1/2)
    over n = r..M, dropping terms whose raised index n-r+t exceeds M.  The
    factorial ratios are assembled in log space; real and imaginary parts are
    each accumulated with exact (fsum) summation in ascending n.

    Parameters
    ----------
    state : FockSuperposition
    order : MomentOrder or (t, r) pair

    Returns
    -------
    complex
    """
    o = _as_order(order)
    t, r = o.t, o.r
    c = state.amplitudes
    top = state.max_photon
    re_terms = []
    im_terms = []
    for n in range(r, top + 1):
        m = n - r + t
        if m > top:
            continue
        weight = math.exp(
            0.5 * (log_falling_factorial(n, r) + log_falling_factorial(m, t))
        )
        term = c[m].conjugate() * c[n] * weight
        re_terms.append(term.real)
        im_terms.append(term.imag)
    return complex(math.fsum(re_terms), math.fsum(im_terms))


def _weighted_log(coeff: int, x: float) -> float:
    # coeff * ln(x) with the 0 * ln(0) = 0 convention.
    if coeff == 0:
        return 0.0
    return coeff * math.log(x) if x > 0.0 else -math.inf


def moment_closed_form_vfb(params: BinomialParams, order) -> float:
    """Closed-form <adag^t a^r> for the vacuum-filtered binomial state.

    Specializes the direct sum to the filtered-state amplitudes: each term is
    exp(0.5 * [ln C(M,n) + ln C(M,n-r+t) + (2n+t-r) ln p + (2M-2n-t+r) ln(1-p)
    + ln n!/(n-r)! + ln (n-r+t)!/(n-r)!]), summed over the n for which both
    Fock indices survive the filter, then scaled by 1/(1 - (1-p)^M).

    Must agree with ``moment(vacuum_filtered_binomial(params), order)`` to
    1e-10 relative.
    """
    o = _as_order(order)
    t, r = o.t, o.r
    p, M = params.p, params.M
    if p == 0.0:
        raise DegenerateStateError("p = 0 leaves only the vacuum; nothing survives the filter")
    surviving = 1.0 if p == 1.0 else -math.expm1(M * math.log1p(-p))
    if surviving <= DEGENERACY_THRESHOLD:
        raise DegenerateStateError(
            f"vacuum weight 1 - |c_0|^2 = {surviving!r} is below threshold for (p={p}, M={M})"
        )
    lo = max(r, 1, 1 + r - t)
    hi = min(M, M + r - t)
    terms = []
    for n in range(lo, hi + 1):
        m = n - r + t
        log_term = 0.5 * (
            log_binomial(M, n)
            + log_binomial(M, m)
            + _weighted_log(2 * n + t - r, p)
            + _weighted_log(2 * (M - n) - t + r, 1.0 - p)
            + log_falling_factorial(n, r)
            + log_falling_factorial(m, t)
        )
        terms.append(math.exp(log_term))
    return math.fsum(terms) / surviving


def mean_photon_number(state: FockSuperposition) -> float:
    """Expectation of the number operator, <adag a>.

    The diagonal moment is real term by term; a residual imaginary part above
    1e-12 indicates a corrupted state and raises.
    """
    value = moment(state, (1, 1))
    if abs(value.imag) > _IMAG_TOL:
        raise ValueError(f"mean photon number has imaginary part {value.imag!r}")
    return value.real
