"""Nonclassicality witnesses built from normally-ordered moments.

Three criteria are implemented: antibunching of order l-1, higher-order
sub-Poissonian photon statistics (HOSPS), and the moment-matrix determinant
criterion of Shchukin and Vogel.  Each flags nonclassicality by a strictly
negative value; zero sits on the classical boundary and is not flagged.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import OrderCapError
from .numerics import ORDER_CAP, determinant, stirling2
from .moments import mean_photon_number, moment
from .states import FockSuperposition

__all__ = [
    "WitnessKind",
    "WitnessRecord",
    "MonomialBasis",
    "DEFAULT_BASIS",
    "NUMBER_BASIS",
    "BUILTIN_BASES",
    "antibunching",
    "hosps",
    "vogel_matrix",
    "vogel_det",
]

_IMAG_TOL = 1e-12

# Operator monomials adag^q a^r as (q, r) pairs; ordered, identity first.
MonomialBasis = tuple[tuple[int, int], ...]

#: Basis {1, a, adag}; its 3x3 moment matrix starts [1, <a>, <adag>].
DEFAULT_BASIS: MonomialBasis = ((0, 0), (0, 1), (1, 0))

#: Basis {1, adag a}; the 2x2 determinant equals the antibunching value at
#: l = 2, giving a cross-witness consistency check.
NUMBER_BASIS: MonomialBasis = ((0, 0), (1, 1))

BUILTIN_BASES: dict[str, MonomialBasis] = {
    "default": DEFAULT_BASIS,
    "number": NUMBER_BASIS,
}


class WitnessKind(str, enum.Enum):
    ANTIBUNCHING = "antibunching"
    HOSPS = "hosps"
    VOGEL = "vogel"

    def __str__(self) -> str:  # plain value in CSV rows and messages
        return self.value


@dataclass(frozen=True)
class WitnessRecord:
    """One witness evaluation: kind, order, raw value, negativity flag.

    ``order`` is l for antibunching/HOSPS and the matrix dimension for the
    Vogel criterion.  ``nonclassical`` is exactly ``value < 0``.
    """

    kind: WitnessKind
    order: int
    value: float
    nonclassical: bool


def _record(kind: WitnessKind, order: int, value: float) -> WitnessRecord:
    return WitnessRecord(kind=kind, order=order, value=value, nonclassical=value < 0.0)


def _check_order(l: int) -> None:
    if l < 2:
        raise ValueError(f"witness order l must be at least 2, got {l}")
    if l > ORDER_CAP:
        raise OrderCapError(f"witness order {l} exceeds cap {ORDER_CAP}")


def antibunching(state: FockSuperposition, l: int) -> WitnessRecord:
    """Antibunching criterion of order l - 1: <adag^l a^l> - <adag a>^l.

    A negative value signals (l-1)-th order antibunching; l = 2 is the
    standard lower-order case.
    """
    _check_order(l)
    value = moment(state, (l, l)).real - mean_photon_number(state) ** l
    return _record(WitnessKind.ANTIBUNCHING, l, value)


def hosps(state: FockSuperposition, l: int) -> WitnessRecord:
    """Higher-order sub-Poissonian criterion of order l - 1.

    Evaluates the double sum
        sum_{e=0..l} sum_{f=1..e} S2(e, f) C(l, e) (-1)^e d(f-1) <N>^(l-e)
    where d(f-1) is the antibunching value at order f (d(0) vanishes
    identically).  Stirling and binomial coefficients are exact; at l = 2 the
    sum reduces algebraically to the antibunching value.
    """
    _check_order(l)
    nbar = mean_photon_number(state)
    diagonal = {f: moment(state, (f, f)).real for f in range(1, l + 1)}
    terms = []
    for e in range(l + 1):
        for f in range(1, e + 1):
            d = diagonal[f] - nbar ** f
            terms.append(
                stirling2(e, f) * math.comb(l, e) * (-1) ** e * d * nbar ** (l - e)
            )
    return _record(WitnessKind.HOSPS, l, math.fsum(terms))


def _validate_basis(basis: MonomialBasis) -> None:
    if len(basis) == 0:
        raise ValueError("monomial basis must not be empty")
    if tuple(basis[0]) != (0, 0):
        raise ValueError(f"basis must start with the identity monomial, got {basis[0]}")
    for q, r in basis:
        if q < 0 or r < 0:
            raise ValueError(f"monomial powers must be non-negative, got ({q}, {r})")


def vogel_matrix(state: FockSuperposition, basis: MonomialBasis = DEFAULT_BASIS) -> np.ndarray:
    """Matrix of normally-ordered moments over an operator-monomial basis.

    Entry (k, j) is <adag^(r_k + q_j) a^(q_k + r_j)>, the normally-ordered
    moment of (monomial_k)-dagger times monomial_j.  For the default basis
    {1, a, adag} the rows are [1, <a>, <adag>], [<adag>, <adag a>, <adag^2>],
    [<a>, <a^2>, <adag a>].

    The states built here have real moments; imaginary parts are checked
    against 1e-12 and dropped.  Implied orders beyond the cap raise
    OrderCapError.
    """
    _validate_basis(basis)
    size = len(basis)
    out = np.empty((size, size), dtype=float)
    for k, (qk, rk) in enumerate(basis):
        for j, (qj, rj) in enumerate(basis):
            value = moment(state, (rk + qj, qk + rj))
            if abs(value.imag) > _IMAG_TOL:
                raise ValueError(
                    f"moment matrix entry ({k}, {j}) has imaginary part {value.imag!r}"
                )
            out[k, j] = value.real
    return out


def vogel_det(state: FockSuperposition, basis: MonomialBasis = DEFAULT_BASIS) -> WitnessRecord:
    """Moment-matrix determinant criterion; negative means nonclassical.

    The recorded order is the basis length (matrix dimension).
    """
    value = determinant(vogel_matrix(state, basis))
    return _record(WitnessKind.VOGEL, len(basis), value)
