"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Figure-style claims are property checks against analytic and brute-force
oracles; no criterion relies on values the suite has not computed itself.
"""

import math

import numpy as np
import pytest

from holeburn import (
    BinomialParams,
    DegenerateStateError,
    PRESETS,
    SweepConfig,
    WitnessKind,
    WitnessSpec,
    antibunching,
    binomial_state,
    emit,
    fock_state,
    hole_burn,
    hosps,
    mean_photon_number,
    moment,
    moment_closed_form_vfb,
    run_sweep,
    vacuum_filtered_binomial,
    vogel_det,
)

P_GRID = [round(0.01 * i, 12) for i in range(1, 100)]


def report(number, text):
    print(f"ACCEPTANCE {number:>2} PASS: {text}")


def test_c01_normalization_suite():
    worst = 0.0
    for M in range(1, 101):
        for p in P_GRID:
            for state in (
                binomial_state(BinomialParams(p, M)),
                vacuum_filtered_binomial(BinomialParams(p, M)),
                hole_burn(binomial_state(BinomialParams(p, M)), min(1, M)),
            ):
                norm = math.fsum((np.abs(state.amplitudes) ** 2).tolist())
                worst = max(worst, abs(norm - 1.0))
    assert worst <= 1e-12
    report(1, f"all constructor outputs normalized over 99 x 100 grid (worst {worst:.2e})")


def test_c02_closed_form_reconciliation():
    worst = 0.0
    for ip in range(1, 20):
        p = round(0.05 * ip, 12)
        for M in range(1, 11):
            params = BinomialParams(p, M)
            state = vacuum_filtered_binomial(params)
            for t in range(5):
                for r in range(5):
                    direct = moment(state, (t, r)).real
                    closed = moment_closed_form_vfb(params, (t, r))
                    err = abs(closed - direct) / (1.0 + abs(direct))
                    worst = max(worst, err)
    assert worst <= 1e-10
    report(2, f"closed form matches direct Fock sum on 19x10x25 grid (worst rel {worst:.2e})")


def test_c03_binomial_moment_identities():
    for ip in range(1, 10):
        p = round(0.1 * ip, 12)
        for M in range(1, 11):
            state = binomial_state(BinomialParams(p, M))
            assert mean_photon_number(state) == pytest.approx(M * p, rel=1e-10)
            for l in range(1, min(M, 4) + 1):
                expected = math.perm(M, l) * p ** l
                assert moment(state, (l, l)).real == pytest.approx(expected, rel=1e-10)
    report(3, "<N> = Mp and <adag^l a^l> = M!/(M-l)! p^l for binomial states")


def test_c04_antibunching_closed_forms():
    for ip in range(1, 10):
        p = round(0.1 * ip, 12)
        for M in range(1, 11):
            value = antibunching(binomial_state(BinomialParams(p, M)), 2).value
            assert value == pytest.approx(-M * p * p, rel=1e-11)
    for p in (0.1, 0.37, 0.5, 0.73, 0.9, 1.0):
        value = antibunching(vacuum_filtered_binomial(BinomialParams(p, 1)), 2).value
        assert value == pytest.approx(-1.0, abs=1e-12)
    report(4, "antibunching equals -Mp^2 for binomial and -1 for filtered M=1 states")


def _grid_states():
    states = [fock_state(0, 1), fock_state(1), fock_state(4)]
    for ip in range(1, 10, 2):
        p = round(0.1 * ip, 12)
        for M in range(1, 11, 3):
            states.append(binomial_state(BinomialParams(p, M)))
            states.append(vacuum_filtered_binomial(BinomialParams(p, M)))
            if M >= 1:
                states.append(hole_burn(binomial_state(BinomialParams(p, M)), min(1, M)))
    return states


def test_c05_hosps_reduction_at_order_two():
    for state in _grid_states():
        assert hosps(state, 2).value == pytest.approx(
            antibunching(state, 2).value, abs=1e-12
        )
    report(5, "sub-Poissonian double sum reduces to antibunching at l = 2")


def test_c06_vogel_factorization():
    for state in _grid_states():
        nbar = mean_photon_number(state)
        alpha = moment(state, (0, 1)).real
        msq = moment(state, (0, 2)).real
        expected = (nbar - msq) * (nbar + msq - 2.0 * alpha * alpha)
        assert vogel_det(state).value == pytest.approx(expected, abs=1e-11)
    worked = vogel_det(vacuum_filtered_binomial(BinomialParams(0.5, 2))).value
    assert worked == pytest.approx(16.0 / 27.0, abs=1e-12)
    report(6, "default-basis determinant factorizes as (n-m)(n+m-2a^2); worked 16/27")


def test_c07_monotonicity_and_negativity():
    def min_over_grid(M, l):
        return min(
            antibunching(vacuum_filtered_binomial(BinomialParams(p, M)), l).value
            for p in P_GRID
        )

    by_order = [min_over_grid(10, l) for l in (2, 3, 4)]
    assert by_order[0] > by_order[1] > by_order[2]
    by_cutoff = [min_over_grid(M, 2) for M in (5, 10, 15)]
    assert by_cutoff[0] > by_cutoff[1] > by_cutoff[2]
    for M, l in ((5, 2), (10, 2), (15, 2), (10, 3), (10, 4)):
        for p in P_GRID:
            assert antibunching(vacuum_filtered_binomial(BinomialParams(p, M)), l).value < 0
    report(
        7,
        "antibunching deepens with order and cutoff and stays negative over interior p "
        f"(min per order at M=10: {[f'{v:.4g}' for v in by_order]})",
    )


def test_c08_hole_burning_enhancement():
    total = 0
    enhanced = 0
    violations = []
    for ip in range(1, 10):
        p = round(0.1 * ip, 12)
        for M in range(2, 11):
            filtered = antibunching(vacuum_filtered_binomial(BinomialParams(p, M)), 2).value
            plain = antibunching(binomial_state(BinomialParams(p, M)), 2).value
            total += 1
            if filtered <= plain:
                enhanced += 1
            else:
                violations.append((p, M, filtered, plain))
    for p, M, filtered, plain in violations:
        print(f"ACCEPTANCE  8 NOTE: enhancement violated at p={p} M={M}: {filtered} > {plain}")
    assert enhanced / total >= 0.95
    report(8, f"vacuum filtering deepens antibunching on {enhanced}/{total} grid points")


def test_c09_vogel_negativity_exists():
    witnesses = (WitnessSpec(WitnessKind.VOGEL, basis="default"),)
    hits = []
    for family in ("binomial", "vacuum_filtered"):
        cfg = SweepConfig(
            family=family,
            M_values=tuple(range(1, 11)),
            p_grid=(0.01, 0.99, 0.01),
            witnesses=witnesses,
        )
        for row in run_sweep(cfg, workers=4).rows:
            if row.status == "ok" and row.value < 0:
                hits.append((family, row.M, row.p, row.value))
    if not hits:
        # Open-question outcome: the printed matrix fragment is truncated, so
        # absence under the default basis is reported, not failed.
        print("ACCEPTANCE  9 OPEN QUESTION: no negative determinant under the default basis")
        return
    family, M, p, value = hits[0]
    report(9, f"negative determinant found ({len(hits)} points; first {family} M={M} p={p}: {value:.4g})")


def test_c10_sweep_determinism():
    cfg = PRESETS["fig1c"].config
    serial = emit(run_sweep(cfg, workers=1))
    threaded = emit(run_sweep(cfg, workers=8))
    assert serial.encode() == threaded.encode()
    report(10, "sweep output byte-identical for 1 and 8 worker threads")


def test_observed_hosps_sign_pattern():
    # Recorded, not asserted: which orders of the double-sum criterion go
    # negative for the filtered state at M = 10.
    pattern = {}
    for l in (2, 3, 4, 5):
        values = [
            hosps(vacuum_filtered_binomial(BinomialParams(p, 10)), l).value
            for p in P_GRID
        ]
        pattern[l] = (min(values), any(v < 0 for v in values))
    summary = ", ".join(
        f"l={l}: min {lo:.4g} ({'negative' if neg else 'never negative'})"
        for l, (lo, neg) in pattern.items()
    )
    print(f"ACCEPTANCE  - NOTE: observed sub-Poissonian sign pattern at M=10: {summary}")
