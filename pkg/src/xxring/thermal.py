"""Gibbs states and partition functions at scaled temperature tau = kT/|J|.

All Boltzmann factors are evaluated after subtracting the ground energy, so
nothing overflows: the raw exp(-E/kT) form breaks down in double precision
below tau ~ 0.002 at B = 10, while the shifted weights are exact up to the
overall factor exp(-E_min/kT) that cancels from every density matrix and
every ratio. Energies are in units of |J| throughout, so beta*E = E/tau.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveTau
from .model import EigenSystem, ModelParams, b_plus_minus, closed_form_spectrum

_LN2 = math.log(2.0)


@dataclass(frozen=True)
class ThermalParams:
    """Scaled temperature tau = kT/|J| > 0 and the sign label of J
    (+1 antiferromagnetic, -1 ferromagnetic)."""

    tau: float
    j_sign: int

    def __post_init__(self):
        if not (math.isfinite(self.tau) and self.tau > 0.0):
            raise NonPositiveTau(f"tau must be finite and > 0, got {self.tau}")
        if self.j_sign not in (1, -1):
            raise ValueError(f"j_sign must be +1 or -1, got {self.j_sign}")


@dataclass(frozen=True)
class GibbsState:
    """Thermal (or zero-temperature limit) density matrix with the shifted
    partition function and the ground energy used as shift."""

    rho: np.ndarray
    z_shifted: float
    e_min: float


def _require_matching_sign(j_sign: int, tp: ThermalParams) -> None:
    if tp.j_sign != j_sign:
        raise ValueError(f"thermal j_sign {tp.j_sign} disagrees with model sign {j_sign}")


def shifted_weights(energies, tau: float) -> tuple[np.ndarray, float, float]:
    """Unnormalized Boltzmann weights exp(-(E_i - E_min)/tau), their sum, and E_min."""
    e = np.asarray(energies, dtype=float)
    e_min = float(e.min())
    w = np.exp(-(e - e_min) / tau)
    return w, float(w.sum()), e_min


def gibbs_state(sys: EigenSystem, tp: ThermalParams) -> GibbsState:
    """Thermal state sum_i w_i |phi_i><phi_i| over the closed-form eigensystem."""
    _require_matching_sign(sys.params.j_sign, tp)
    w, z, e_min = shifted_weights(sys.energies, tp.tau)
    rho = (sys.vectors * (w / z)) @ sys.vectors.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    rho.setflags(write=False)
    return GibbsState(rho=rho, z_shifted=z, e_min=e_min)


def ground_state_mixture(sys: EigenSystem, degeneracy_tol: float = 1e-9) -> GibbsState:
    """Equal-weight mixture over the ground manifold: the tau -> 0 limit of
    gibbs_state. States within degeneracy_tol (units of |J|) of the minimum
    energy count as ground."""
    if degeneracy_tol <= 0.0:
        raise ValueError("degeneracy_tol must be > 0")
    e = np.asarray(sys.energies, dtype=float)
    e_min = float(e.min())
    mask = e - e_min <= degeneracy_tol
    k = int(mask.sum())
    ground = sys.vectors[:, mask]
    rho = (ground @ ground.conj().T) / k
    rho = 0.5 * (rho + rho.conj().T)
    rho.setflags(write=False)
    return GibbsState(rho=rho, z_shifted=float(k), e_min=e_min)


def _log_cosh(y: float) -> float:
    return abs(y) - _LN2 + math.log1p(math.exp(-2.0 * abs(y)))


def _log1p_exp(y: float) -> float:
    return max(y, 0.0) + math.log1p(math.exp(-abs(y)))


def log_partition_function_closed(params: ModelParams, tp: ThermalParams) -> float:
    """log Z from the closed form

        Z = 2 (1 + e^{J beta}) cosh(J beta B)
            + 2 e^{-J beta / 2} [cosh(J beta B_+ / 2) + cosh(J beta B_- / 2)]

    evaluated in log space so it is finite for any tau > 0.
    """
    _require_matching_sign(params.j_sign, tp)
    x = params.j_sign / tp.tau
    bp, bm = b_plus_minus(params.b)
    ring = _LN2 + _log1p_exp(x) + _log_cosh(x * params.b)
    pair = _LN2 - 0.5 * x + float(np.logaddexp(_log_cosh(0.5 * x * bp), _log_cosh(0.5 * x * bm)))
    return float(np.logaddexp(ring, pair))


def partition_function_closed(params: ModelParams, tp: ThermalParams) -> float:
    """The unshifted partition function of the closed form. Overflows to inf
    where e^{-E_min/kT} is not representable; use the shifted variant there."""
    log_z = log_partition_function_closed(params, tp)
    try:
        return math.exp(log_z)
    except OverflowError:
        return math.inf


def shifted_partition_function_closed(params: ModelParams, tp: ThermalParams) -> tuple[float, float]:
    """(Z * exp(E_min/kT), E_min): the closed form reduced by the ground-state
    weight, representable at any tau > 0. Matches sum_i of shifted_weights."""
    log_z = log_partition_function_closed(params, tp)
    e_min = float(closed_form_spectrum(params).min())
    return math.exp(log_z + e_min / tp.tau), e_min
