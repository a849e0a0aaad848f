import dataclasses
import math

import numpy as np
import pytest

from xxring.errors import NonPositiveTau
from xxring.linalg import hermitian_eigen, max_abs
from xxring.model import ModelParams, closed_form_eigensystem, closed_form_spectrum, model_hamiltonian
from xxring.thermal import (
    GibbsState,
    ThermalParams,
    gibbs_state,
    ground_state_mixture,
    log_partition_function_closed,
    partition_function_closed,
    shifted_partition_function_closed,
    shifted_weights,
)

from conftest import BP_GRID


def test_thermal_params_validation():
    for tau in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(NonPositiveTau):
            ThermalParams(tau=tau, j_sign=1)
    with pytest.raises(ValueError):
        ThermalParams(tau=1.0, j_sign=2)


def test_gibbs_infinite_temperature_is_maximally_mixed():
    sys = closed_form_eigensystem(ModelParams(j=1.0, b=1.0))
    state = gibbs_state(sys, ThermalParams(tau=1e6, j_sign=1))
    assert max_abs(state.rho - np.eye(8) / 8.0) < 1e-5


def test_gibbs_cold_antiferromagnet_projects_on_singlet_state():
    sys = closed_form_eigensystem(ModelParams(j=1.0, b=1.0))
    state = gibbs_state(sys, ThermalParams(tau=0.001, j_sign=1))
    phi2 = sys.vectors[:, 2]
    assert max_abs(state.rho - np.outer(phi2, phi2.conj())) < 1e-6


def test_gibbs_state_invariants():
    for b in (0.0, 1.0, 10.0):
        for j in (1, -1):
            params = ModelParams(j=float(j), b=b)
            sys = closed_form_eigensystem(params)
            state = gibbs_state(sys, ThermalParams(tau=0.25, j_sign=j))
            assert abs(np.trace(state.rho).real - 1.0) < 1e-12
            assert hermitian_eigen(state.rho).values[0] >= -1e-12
            h = model_hamiltonian(params)
            assert max_abs(h @ state.rho - state.rho @ h) < 1e-10


def test_gibbs_rejects_sign_mismatch():
    sys = closed_form_eigensystem(ModelParams(j=1.0, b=1.0))
    with pytest.raises(ValueError):
        gibbs_state(sys, ThermalParams(tau=1.0, j_sign=-1))


def test_gibbs_weights_shift_invariant():
    sys = closed_form_eigensystem(ModelParams(j=-1.0, b=0.5))
    shifted = dataclasses.replace(sys, energies=np.asarray(sys.energies) + 7.5)
    tp = ThermalParams(tau=0.3, j_sign=-1)
    rho_a = gibbs_state(sys, tp).rho
    rho_b = gibbs_state(shifted, tp).rho
    assert max_abs(rho_a - rho_b) < 1e-12


def test_partition_infinite_temperature_counts_states():
    tp = ThermalParams(tau=1e9, j_sign=1)
    assert partition_function_closed(ModelParams(j=1.0, b=3.0), tp) == pytest.approx(8.0, abs=1e-6)


def test_partition_closed_value_at_unit_beta():
    # B=0, J beta = 1: levels {0 x2, -J x4, 2J x2} give 2 + 4e + 2/e^2
    z = partition_function_closed(ModelParams(j=1.0, b=0.0), ThermalParams(tau=1.0, j_sign=1))
    assert z == pytest.approx(2.0 + 4.0 * math.e + 2.0 * math.exp(-2.0), rel=1e-14)


def test_partition_even_in_field():
    for b in (0.1, 1.0, 10.0):
        for j in (1, -1):
            tp = ThermalParams(tau=0.7, j_sign=j)
            assert log_partition_function_closed(ModelParams(j=float(j), b=b), tp) == \
                log_partition_function_closed(ModelParams(j=float(j), b=-b), tp)


def test_partition_matches_spectral_sum():
    taus = (0.05, 0.1, 0.5, 1.0, 2.0, 10.0)
    worst = 0.0
    for j in (1, -1):
        for b in BP_GRID:
            params = ModelParams(j=float(j), b=b)
            energies = closed_form_spectrum(params)
            for tau in taus:
                tp = ThermalParams(tau=tau, j_sign=j)
                z_closed, e_min = shifted_partition_function_closed(params, tp)
                _, z_spectral, e_min_spectral = shifted_weights(energies, tau)
                assert e_min == e_min_spectral
                worst = max(worst, abs(z_closed - z_spectral) / z_spectral)
    assert worst < 1e-12


def test_partition_overflow_policy():
    params = ModelParams(j=1.0, b=10.0)
    tp = ThermalParams(tau=0.002, j_sign=1)
    assert partition_function_closed(params, tp) == math.inf
    z_shifted, e_min = shifted_partition_function_closed(params, tp)
    assert e_min == -11.0
    assert z_shifted == pytest.approx(1.0, abs=1e-12)  # lone ground level
    assert math.isfinite(log_partition_function_closed(params, tp))


def test_partition_rejects_sign_mismatch():
    with pytest.raises(ValueError):
        partition_function_closed(ModelParams(j=1.0, b=0.0), ThermalParams(tau=1.0, j_sign=-1))


def _trace_distance(a, b):
    return 0.5 * float(np.abs(np.linalg.eigvalsh(a - b)).sum())


def test_ground_state_mixture_pure_cases():
    sys = closed_form_eigensystem(ModelParams(j=1.0, b=1.0))
    state = ground_state_mixture(sys)
    phi2 = sys.vectors[:, 2]
    assert state.z_shifted == 1.0
    assert max_abs(state.rho - np.outer(phi2, phi2.conj())) < 1e-14

    sys = closed_form_eigensystem(ModelParams(j=-1.0, b=1.0))
    state = ground_state_mixture(sys)
    phi4 = sys.vectors[:, 4]
    assert max_abs(state.rho - np.outer(phi4, phi4.conj())) < 1e-14


def test_ground_state_mixture_degenerate_pair():
    sys = closed_form_eigensystem(ModelParams(j=-1.0, b=0.0))
    state = ground_state_mixture(sys)
    assert state.z_shifted == 2.0
    phi1 = sys.vectors[:, 1]
    phi4 = sys.vectors[:, 4]
    expected = 0.5 * (np.outer(phi1, phi1.conj()) + np.outer(phi4, phi4.conj()))
    assert max_abs(state.rho - expected) < 1e-14


def test_ground_state_mixture_is_cold_limit():
    for j, b in ((1, 1.0), (-1, 1.0), (1, 0.0), (-1, 0.0), (1, 10.0)):
        params = ModelParams(j=float(j), b=b)
        sys = closed_form_eigensystem(params)
        energies = np.sort(np.asarray(sys.energies))
        gaps = np.diff(energies)
        gap = gaps[gaps > 1e-9][0]
        if gap <= 0.1:
            continue
        cold = gibbs_state(sys, ThermalParams(tau=1e-3, j_sign=j))
        assert _trace_distance(cold.rho, ground_state_mixture(sys).rho) < 1e-6


def test_ground_state_mixture_tolerance_validation():
    sys = closed_form_eigensystem(ModelParams(j=1.0, b=1.0))
    with pytest.raises(ValueError):
        ground_state_mixture(sys, degeneracy_tol=0.0)


def test_gibbs_state_type_is_frozen():
    sys = closed_form_eigensystem(ModelParams(j=1.0, b=1.0))
    state = gibbs_state(sys, ThermalParams(tau=1.0, j_sign=1))
    assert isinstance(state, GibbsState)
    with pytest.raises(ValueError):
        state.rho[0, 0] = 5.0
