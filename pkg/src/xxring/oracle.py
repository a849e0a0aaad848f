"""Brute-force cross-validation of every closed-form result.

The oracle pipeline shares nothing with the closed-form route except the
numeric kernel: it builds the Hamiltonian matrix, diagonalizes it with the
Jacobi solver, forms the Gibbs state from the numeric eigenpairs, partial
traces by index summation and evaluates the general Wootters concurrence.
cross_check runs both routes over a parameter grid and reports per-point
deviations for the spectrum, the partition function, the five reduced matrix
elements and the concurrence.

The partition-function comparison is the one place where double precision
itself becomes the limit: a ground-energy error d from the numeric
diagonalization enters Z as exp(d/tau), so the effective tolerance gets a
floor of 16 eps (E_max - E_min)/tau. On the default grid that floor sits at
the nominal 1e-12; it only lifts on extreme user grids (tau ~ 0.005, B ~ 50)
where a fixed 1e-12 would flag pure rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .entanglement import (
    concurrence_general,
    concurrence_pair,
    normalize_pair,
    pair_sites,
    partial_trace,
    reduced_elements,
)
from .errors import NoThresholdFound, ToleranceExceeded
from .linalg import EigenDecomposition, hermitian_eigen
from .model import ModelParams, closed_form_eigensystem, model_hamiltonian
from .thermal import ThermalParams, shifted_partition_function_closed

DEFAULT_TAU_GRID = (0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 3.0)
DEFAULT_B_GRID = (0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0)
DEFAULT_J_SIGNS = (1, -1)
DEFAULT_PAIRS = (12, 13)

SPECTRUM_TOL = 1e-10
Z_REL_TOL = 1e-12
ELEMENTS_TOL = 1e-10
CONCURRENCE_TOL = 1e-9

_EPS = float(np.finfo(float).eps)


@lru_cache(maxsize=256)
def _cached_eigensystem(j_sign: int, b: float, n_sites: int) -> EigenDecomposition:
    return hermitian_eigen(model_hamiltonian(ModelParams(j=float(j_sign), b=b, n_sites=n_sites)))


def numeric_eigensystem(params: ModelParams) -> EigenDecomposition:
    """Jacobi eigendecomposition of the numerically built Hamiltonian
    (energies in units of |J|)."""
    return _cached_eigensystem(params.j_sign, params.b, params.n_sites)


def numeric_gibbs(params: ModelParams, tp: ThermalParams) -> np.ndarray:
    """Thermal state assembled from the numeric eigenpairs."""
    if tp.j_sign != params.j_sign:
        raise ValueError("thermal j_sign disagrees with model params")
    eig = numeric_eigensystem(params)
    w = np.exp(-(eig.values - eig.values[0]) / tp.tau)
    w /= w.sum()
    rho = (eig.vectors * w) @ eig.vectors.conj().T
    return 0.5 * (rho + rho.conj().T)


def numeric_partition_shifted(params: ModelParams, tp: ThermalParams) -> float:
    """Shifted partition function from the numeric spectrum."""
    eig = numeric_eigensystem(params)
    return float(np.exp(-(eig.values - eig.values[0]) / tp.tau).sum())


def numeric_reduced(params: ModelParams, tp: ThermalParams, pair: int) -> np.ndarray:
    """4x4 reduction of the numeric Gibbs state for a pair selector; 23 is
    traced literally (keep sites 2 and 3), exercising the exchange symmetry."""
    return partial_trace(numeric_gibbs(params, tp), params.n_sites, pair_sites(pair))


def numeric_concurrence(params: ModelParams, tp: ThermalParams, pair: int) -> float:
    """End-to-end brute-force concurrence."""
    return concurrence_general(numeric_reduced(params, tp, pair))


@dataclass(frozen=True)
class CrossCheckPoint:
    """Deviations between the closed-form and numeric routes at one point."""

    pair: int
    j_sign: int
    b: float
    tau: float
    spectrum_dev: float
    z_rel_dev: float
    z_tol: float
    elements_dev: float
    concurrence_dev: float


@dataclass(frozen=True)
class CrossCheckReport:
    tau_values: tuple[float, ...]
    b_values: tuple[float, ...]
    j_signs: tuple[int, ...]
    pairs: tuple[int, ...]
    points: tuple[CrossCheckPoint, ...]
    passed: bool

    def worst(self, quantity: str) -> CrossCheckPoint:
        """Point with the largest deviation for one of 'spectrum', 'z',
        'elements', 'concurrence' (z measured relative to its tolerance)."""
        key = {
            "spectrum": lambda p: p.spectrum_dev,
            "z": lambda p: p.z_rel_dev / p.z_tol,
            "elements": lambda p: p.elements_dev,
            "concurrence": lambda p: p.concurrence_dev,
        }[quantity]
        return max(self.points, key=key)

    def summary(self) -> str:
        lines = [
            f"cross-check over {len(self.points)} grid points "
            f"(tau x B x sign x pair = {len(self.tau_values)} x {len(self.b_values)} "
            f"x {len(self.j_signs)} x {len(self.pairs)}): "
            + ("PASS" if self.passed else "FAIL")
        ]
        for quantity, tol in (
            ("spectrum", SPECTRUM_TOL),
            ("z", Z_REL_TOL),
            ("elements", ELEMENTS_TOL),
            ("concurrence", CONCURRENCE_TOL),
        ):
            p = self.worst(quantity)
            dev = {
                "spectrum": p.spectrum_dev,
                "z": p.z_rel_dev,
                "elements": p.elements_dev,
                "concurrence": p.concurrence_dev,
            }[quantity]
            shown_tol = p.z_tol if quantity == "z" else tol
            lines.append(
                f"  {quantity:11s} worst {dev:.3e} (tol {shown_tol:.1e}) at "
                f"pair={p.pair} J{'>' if p.j_sign > 0 else '<'}0 B={p.b:g} tau={p.tau:g}"
            )
        return "\n".join(lines)


def _point_deviations(params: ModelParams, tp: ThermalParams, pair: int,
                      eigensystem_fn) -> CrossCheckPoint:
    sys = eigensystem_fn(params)
    eig = numeric_eigensystem(params)

    spectrum_dev = float(np.max(np.abs(np.sort(np.asarray(sys.energies)) - eig.values)))

    z_closed, _ = shifted_partition_function_closed(params, tp)
    z_numeric = numeric_partition_shifted(params, tp)
    z_rel_dev = abs(z_closed - z_numeric) / z_numeric
    span = float(eig.values[-1] - eig.values[0])
    z_tol = max(Z_REL_TOL, 16.0 * _EPS * span / tp.tau)

    elems = reduced_elements(sys, tp, pair)
    rho_red = numeric_reduced(params, tp, pair)
    closed_entries = np.array([elems.u, elems.w1, elems.w2, elems.v, elems.y]) / elems.z
    numeric_entries = np.array(
        [rho_red[0, 0], rho_red[1, 1], rho_red[2, 2], rho_red[3, 3], rho_red[1, 2]]
    )
    elements_dev = float(np.max(np.abs(closed_entries - numeric_entries)))

    concurrence_dev = abs(concurrence_pair(params, tp, pair) - numeric_concurrence(params, tp, pair))

    return CrossCheckPoint(
        pair=pair,
        j_sign=params.j_sign,
        b=params.b,
        tau=tp.tau,
        spectrum_dev=spectrum_dev,
        z_rel_dev=z_rel_dev,
        z_tol=z_tol,
        elements_dev=elements_dev,
        concurrence_dev=concurrence_dev,
    )


def cross_check(
    tau_values=DEFAULT_TAU_GRID,
    b_values=DEFAULT_B_GRID,
    j_signs=DEFAULT_J_SIGNS,
    pairs=DEFAULT_PAIRS,
    *,
    eigensystem_fn=closed_form_eigensystem,
) -> CrossCheckReport:
    """Compare closed-form and numeric routes at every grid point.

    Raises ToleranceExceeded (with the report attached) if any deviation is
    above tolerance. eigensystem_fn exists for fault-injection tests.
    """
    points = []
    for pair in pairs:
        for j_sign in j_signs:
            for b in b_values:
                params = ModelParams(j=float(j_sign), b=float(b))
                for tau in tau_values:
                    tp = ThermalParams(tau=float(tau), j_sign=j_sign)
                    points.append(_point_deviations(params, tp, pair, eigensystem_fn))

    passed = all(
        p.spectrum_dev <= SPECTRUM_TOL
        and p.z_rel_dev <= p.z_tol
        and p.elements_dev <= ELEMENTS_TOL
        and p.concurrence_dev <= CONCURRENCE_TOL
        for p in points
    )
    report = CrossCheckReport(
        tau_values=tuple(float(t) for t in tau_values),
        b_values=tuple(float(b) for b in b_values),
        j_signs=tuple(int(j) for j in j_signs),
        pairs=tuple(int(p) for p in pairs),
        points=tuple(points),
        passed=passed,
    )
    if not passed:
        raise ToleranceExceeded(report.summary(), report=report)
    return report


def _concurrence_margin(params: ModelParams, pair: int, tau: float) -> float:
    """(|y| - sqrt(u v))/z: positive iff the pair is entangled; the root
    function for the threshold bisection."""
    sys = closed_form_eigensystem(params)
    tp = ThermalParams(tau=tau, j_sign=params.j_sign)
    e = reduced_elements(sys, tp, pair)
    return (abs(e.y) - math.sqrt(e.u * e.v)) / e.z


def threshold_scan(
    params: ModelParams,
    pair: int,
    tau_range: tuple[float, float] = (0.02, 5.0),
    *,
    samples: int = 256,
    tol: float = 1e-6,
    noise_floor: float = 1e-14,
) -> float:
    """Largest temperature in tau_range at which the concurrence vanishes,
    located by bisection on the sign of |y| - sqrt(u v) to within tol.

    Margins below noise_floor count as zero: where the state is exactly
    separable the computed margin is rounding noise of either sign at the
    1e-17 level, which must not fake a bracket.

    Raises NoThresholdFound when the concurrence is nonpositive on the whole
    range or still positive at its upper end.
    """
    pair = normalize_pair(pair)
    lo, hi = tau_range
    if not (0.0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi, got {tau_range}")
    taus = np.linspace(lo, hi, samples)
    margins = [_concurrence_margin(params, pair, float(t)) for t in taus]

    positive = [i for i, m in enumerate(margins) if m > noise_floor]
    if not positive:
        raise NoThresholdFound(f"concurrence nonpositive on tau in [{lo}, {hi}]")
    last = positive[-1]
    if last == samples - 1:
        raise NoThresholdFound(f"concurrence still positive at tau = {hi}")

    t_lo, t_hi = float(taus[last]), float(taus[last + 1])
    while t_hi - t_lo > tol:
        mid = 0.5 * (t_lo + t_hi)
        if _concurrence_margin(params, pair, mid) > noise_floor:
            t_lo = mid
        else:
            t_hi = mid
    return 0.5 * (t_lo + t_hi)
