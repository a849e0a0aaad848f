"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
Criterion 5 is known infeasible as stated (see the assertion message); it is
asserted faithfully and left red rather than loosened.
"""

import math

import numpy as np
import pytest

from xxring.entanglement import c13_low_t_approx, concurrence_pair
from xxring.linalg import hermitian_eigen, max_abs
from xxring.model import ModelParams, closed_form_eigensystem, closed_form_spectrum, model_hamiltonian
from xxring.oracle import cross_check, numeric_concurrence, threshold_scan
from xxring.sweeps import figure_rows, rows_to_csv
from xxring.thermal import ThermalParams

B_GRID = (0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
TAU_GRID = (0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0)


def _line(criterion, ok, detail):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'} - {detail}")
    return ok


def _c(j, b, tau, pair):
    return concurrence_pair(ModelParams(j=float(j), b=b), ThermalParams(tau=tau, j_sign=j), pair)


def test_criterion_1_spectrum_equivalence():
    worst_energy, worst_residual = 0.0, 0.0
    for j in (1, -1):
        for b in B_GRID:
            params = ModelParams(j=float(j), b=b)
            eig = hermitian_eigen(model_hamiltonian(params))
            worst_energy = max(worst_energy,
                               float(np.max(np.abs(np.sort(closed_form_spectrum(params)) - eig.values))))
            sys = closed_form_eigensystem(params)
            h = model_hamiltonian(params)
            worst_residual = max(worst_residual,
                                 max_abs(h @ sys.vectors - sys.vectors * sys.energies))
    ok = worst_energy < 1e-10 and worst_residual < 1e-10
    assert _line(1, ok, f"energy dev {worst_energy:.2e}, eigenvector residual {worst_residual:.2e}")


def test_criterion_2_pipeline_equivalence():
    report = cross_check(tau_values=TAU_GRID, b_values=B_GRID)
    worst = report.worst("concurrence").concurrence_dev
    ok = report.passed and len(report.points) == 196 and worst < 1e-9
    assert _line(2, ok, f"196-point grid, worst concurrence dev {worst:.2e}")


def test_criterion_3_c12_maximal_limit():
    c = _c(1, 10.0, 0.01, 12)
    assert _line(3, c >= 0.999, f"C12(J>0, B=10, tau=0.01) = {c:.6f} >= 0.999")


def test_criterion_4_ferromagnetic_limit_formula():
    a4 = -0.5 + math.sqrt(17.0) / 2.0 - 1.0
    target = 2.0 / (2.0 + a4 * a4)
    c = _c(-1, 1.0, 0.005, 12)
    dev = abs(c - target)
    assert _line(4, dev < 1e-3, f"C12 = {c:.8f} vs 2/(2+a4^2) = {target:.8f}, dev {dev:.2e}")


def test_criterion_5_b_to_zero_limit():
    c = _c(-1, 0.05, 0.0005, 12)
    dev = abs(c - 2.0 / 3.0)
    ok = _line(5, dev < 0.01, f"C12(J<0, B=0.05, tau=5e-4) = {c:.6f}, |dev from 2/3| = {dev:.4f}")
    assert ok, (
        "criterion as stated is infeasible: the exact tau->0 value at B=0.05 is "
        "2/(2+a4^2) = 0.68123 (finite-B correction ~0.29*B = 0.0146 > 0.01); "
        "both closed form and brute-force oracle agree; see /root/notes/decisions.md"
    )


def test_criterion_6_degenerate_zero_field():
    c_by_sign = {j: _c(j, 0.0, 0.01, 12) for j in (1, -1)}
    entangled = max(c_by_sign, key=c_by_sign.get)
    dev = abs(c_by_sign[entangled] - 1.0 / 3.0)
    opposite_zero = all(_c(-entangled, 0.0, tau, 12) == 0.0
                        for tau in np.linspace(0.05, 3.0, 25))
    ok = dev < 1e-3 and opposite_zero and entangled == -1
    assert _line(
        6, ok,
        f"entangled sign of J at B=0 is {entangled:+d} under the Hamiltonian sign convention "
        f"(ferromagnetic label): C12 = {c_by_sign[entangled]:.6f} -> 1/3 (dev {dev:.1e}); "
        f"opposite sign identically 0 over tau in [0.05, 3]",
    )


def test_criterion_7_threshold():
    # analytic target: tau* = 1/ln(x*), x*^3 - 3x* - 4 = 0 (bisected here, not via the scan)
    lo, hi = 2.0, 3.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid**3 - 3.0 * mid - 4.0 > 0.0:
            hi = mid
        else:
            lo = mid
    tau_analytic = 1.0 / math.log(0.5 * (lo + hi))
    tau_star = threshold_scan(ModelParams(j=-1.0, b=0.0), 12)
    ok = abs(tau_star - 1.2707) <= 0.002 and abs(tau_star - tau_analytic) < 5e-6
    assert _line(7, ok, f"tau* = {tau_star:.6f}, analytic {tau_analytic:.6f}, band 1.2707 +/- 0.002")


def test_criterion_8_c13_maximum_and_approximation():
    c_max = max(_c(-1, float(b), 0.002, 13) for b in np.linspace(0.01, 0.2, 200))
    dev_max = abs(c_max - 2.0 / 3.0)
    approx_devs = {
        b: abs(c13_low_t_approx(b, 0.002) - _c(-1, b, 0.002, 13))
        for b in (0.02, 0.05, 0.1)
    }
    ok = dev_max < 0.01 and all(d < 0.05 for d in approx_devs.values())
    assert _line(
        8, ok,
        f"max C13 = {c_max:.6f} (dev from 2/3: {dev_max:.4f}); "
        f"approximation devs {[f'{b}:{d:.4f}' for b, d in approx_devs.items()]}",
    )


def test_criterion_9_symmetries():
    worst_field = 0.0
    for pair in (12, 13):
        for j in (1, -1):
            for b in B_GRID:
                for tau in TAU_GRID:
                    worst_field = max(worst_field,
                                      abs(_c(j, b, tau, pair) - _c(j, -b, tau, pair)))
    worst_pair = 0.0
    for j in (1, -1):
        for b in B_GRID:
            params = ModelParams(j=float(j), b=b)
            for tau in TAU_GRID:
                tp = ThermalParams(tau=tau, j_sign=j)
                worst_pair = max(worst_pair,
                                 abs(numeric_concurrence(params, tp, 13)
                                     - numeric_concurrence(params, tp, 23)))
    ok = worst_field < 1e-12 and worst_pair < 1e-10
    assert _line(9, ok, f"field negation dev {worst_field:.2e}, C13 vs C23 dev {worst_pair:.2e}")


def test_criterion_10_figure_data():
    csvs = {fid: rows_to_csv(figure_rows(fid)) for fid in (1, 2, 3, 4)}
    deterministic = all(rows_to_csv(figure_rows(fid)) == csvs[fid] for fid in (1, 2, 3, 4))

    def series(fid, j_sign, fixed):
        rows = figure_rows(fid)
        axis_is_tau = fid in (1, 3)
        return [r for r in rows
                if r.j_sign == j_sign and (r.b == fixed if axis_is_tau else r.tau == fixed)]

    checks = []
    for fid in (1, 3):
        # B=0: ferromagnetic sign tends to 1/3 at the cold end, antiferromagnetic stays 0
        ferro = series(fid, -1, 0.0)
        checks.append(abs(ferro[0].concurrence - 1.0 / 3.0) < 1e-3)
        checks.append(all(r.concurrence == 0.0 for r in series(fid, 1, 0.0)))
    # criterion 3 boundary: C12 near 1 at the cold end for B=10, J>0
    checks.append(series(1, 1, 10.0)[0].concurrence >= 0.999)
    # criterion 4 boundary: cold end of the B=1 ferromagnetic curve approaches
    # 2/(2+a4^2); the sqrt(u v) term decays only like e^{-gap/(2 tau)}, which
    # still leaves ~2e-3 at the tau=0.05 sample
    a4 = -0.5 + math.sqrt(17.0) / 2.0 - 1.0
    checks.append(abs(series(1, -1, 1.0)[0].concurrence - 2.0 / (2.0 + a4 * a4)) < 5e-3)
    # fig 3 caption: antiferromagnetic B=10 entanglement occurs but stays weak
    af_weak = [r.concurrence for r in series(3, 1, 10.0)]
    checks.append(0.0 < max(af_weak) < 0.05)
    # every emitted value is a valid concurrence
    checks.append(all(0.0 <= r.concurrence <= 1.0
                      for fid in (1, 2, 3, 4) for r in figure_rows(fid)))

    ok = deterministic and all(checks)
    assert _line(10, ok, f"deterministic CSVs, boundary checks {checks}")
