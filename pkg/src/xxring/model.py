"""XX Heisenberg ring with a single-site z impurity: Hamiltonian and exact solution.

The model is a 3-qubit cyclic XX chain with exchange J and a magnetic field
of strength B*J applied to site 3 only,

    H = (J/2) sum_i (sx_i sx_{i+1} + sy_i sy_{i+1}) + B*J * sz_3 ,

with site 4 identified with site 1. Working in units of |J|, the spectrum is

    E0 = -jB            E1 = (j/2)(1 + Bm)     E2 = -j(1 + B)   E3 = -j(1 - B)
    E4 = (j/2)(1 + Bp)  E5 = (j/2)(1 - Bm)     E6 = (j/2)(1 - Bp)  E7 = jB

with j = sign(J) and Bpm = sqrt(4B^2 +- 4B + 9). The eight eigenvectors are
combinations of computational-basis kets with real amplitudes

    a1 = -1/2 + Bm/2 + B     a5 = -1/2 - Bm/2 + B
    a4 = -1/2 + Bp/2 - B     a6 = -1/2 - Bp/2 - B

normalized by N_i = (2 + a_i^2)^{-1/2}.

Basis convention: site 1 is the most significant bit, |abc> <-> index 4a+2b+c,
and the Pauli matrices are the standard ones (sz|0> = +|0>). Under that
convention the impurity enters the generic builder as a per-site field
(0, 0, -B*j): the eigenvector table above uses the opposite sz sign for the
basis labels, and flipping the field sign (rather than relabeling every ket)
keeps kets, spectrum and reduced-matrix elements all literally consistent.
Observables are unaffected either way (global spin flip is a local unitary).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BadFieldLength, MappingViolation, UnsupportedSize
from .linalg import kron

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128)
IDENTITY_2 = np.eye(2, dtype=np.complex128)

MIN_SITES = 2
MAX_SITES = 10


@dataclass(frozen=True)
class ModelParams:
    """Coupling and impurity strength. Only sign(j) matters once the scaled
    temperature tau = kT/|J| is used; b is the dimensionless field (the
    physical field is b*J). n_sites must be 3 for every closed-form path."""

    j: float
    b: float
    n_sites: int = 3

    def __post_init__(self):
        if self.j == 0.0:
            raise ValueError("j must be nonzero (tau = kT/|J| undefined at j = 0)")
        if not MIN_SITES <= self.n_sites <= MAX_SITES:
            raise UnsupportedSize(f"n_sites = {self.n_sites} outside [{MIN_SITES}, {MAX_SITES}]")

    @property
    def j_sign(self) -> int:
        return 1 if self.j > 0 else -1


@dataclass(frozen=True)
class EigenSystem:
    """Closed-form solution at fixed (sign j, B).

    energies are in units of |J| with the sign of J applied, indexed 0..7 as
    in the module docstring; vectors[:, i] is the i-th eigenstate.
    """

    params: ModelParams
    energies: np.ndarray
    b_plus: float
    b_minus: float
    a1: float
    a4: float
    a5: float
    a6: float
    n1: float
    n4: float
    n5: float
    n6: float
    vectors: np.ndarray


def site_operator(op: np.ndarray, site: int, n_sites: int) -> np.ndarray:
    """Embed a single-qubit operator at 1-based `site` of an n-qubit register."""
    out = np.eye(1, dtype=np.complex128)
    for k in range(1, n_sites + 1):
        out = kron(out, op if k == site else IDENTITY_2)
    return out


def build_hamiltonian(params: ModelParams, fields) -> np.ndarray:
    """Generic numeric Hamiltonian: cyclic XX exchange plus per-site z fields.

    H = (j/2) sum_{i=1..n} (sx_i sx_{i+1} + sy_i sy_{i+1}) + sum_i fields[i] sz_i
    with site n+1 = site 1, so <00..0|H|00..0> = sum(fields). Fields are in
    the same (|J|) units as the exchange term.
    """
    n = params.n_sites
    fields = [float(f) for f in fields]
    if len(fields) != n:
        raise BadFieldLength(f"got {len(fields)} fields for {n} sites")
    dim = 2**n
    h = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(1, n + 1):
        nxt = 1 + (i % n)
        h += (params.j / 2.0) * (
            site_operator(PAULI_X, i, n) @ site_operator(PAULI_X, nxt, n)
            + site_operator(PAULI_Y, i, n) @ site_operator(PAULI_Y, nxt, n)
        )
    for i, f in enumerate(fields, start=1):
        if f != 0.0:
            h += f * site_operator(PAULI_Z, i, n)
    return h


def impurity_field_profile(params: ModelParams) -> tuple[float, float, float]:
    """Per-site fields realizing the impurity model in the builder's convention.

    The paper-basis field B*J on site 3 maps to -b*sign(j) here (standard
    sz sign; see the module docstring), in units of |J|.
    """
    return (0.0, 0.0, -params.b * params.j_sign)


def model_hamiltonian(params: ModelParams) -> np.ndarray:
    """The impurity-ring Hamiltonian in units of |J| (numeric route)."""
    unit = ModelParams(j=float(params.j_sign), b=params.b, n_sites=params.n_sites)
    return build_hamiltonian(unit, impurity_field_profile(params))


def b_plus_minus(b: float) -> tuple[float, float]:
    """(B_+, B_-) = sqrt(4b^2 +- 4b + 9); always real since 4b^2 +- 4b + 9 >= 8."""
    return math.sqrt(4.0 * b * b + 4.0 * b + 9.0), math.sqrt(4.0 * b * b - 4.0 * b + 9.0)


def _energy_coefficients(b: float) -> np.ndarray:
    bp, bm = b_plus_minus(b)
    return np.array([
        -b,
        0.5 * (1.0 + bm),
        -(1.0 + b),
        -(1.0 - b),
        0.5 * (1.0 + bp),
        0.5 * (1.0 - bm),
        0.5 * (1.0 - bp),
        b,
    ])


def closed_form_spectrum(params: ModelParams) -> np.ndarray:
    """The eight closed-form energies (units of |J|, sign of J applied),
    indexed 0..7. Valid at B = 0 too, where levels merge but the formulas
    stay finite."""
    if params.n_sites != 3:
        raise UnsupportedSize("closed-form spectrum requires n_sites = 3")
    return params.j_sign * _energy_coefficients(params.b)


def _ket(index: int) -> np.ndarray:
    v = np.zeros(8, dtype=np.complex128)
    v[index] = 1.0
    return v


# computational-basis indices for |s1 s2 s3>, site 1 = MSB
_K100, _K010, _K001 = 4, 2, 1
_K110, _K101, _K011 = 6, 5, 3
_SQRT_HALF = 1.0 / math.sqrt(2.0)


def closed_form_eigensystem(params: ModelParams) -> EigenSystem:
    """Full closed-form eigensystem: energies, amplitudes, norms and the
    eight eigenvectors assembled in the stated basis convention."""
    if params.n_sites != 3:
        raise UnsupportedSize("closed-form eigensystem requires n_sites = 3")
    b = params.b
    bp, bm = b_plus_minus(b)
    a1 = -0.5 + 0.5 * bm + b
    a5 = -0.5 - 0.5 * bm + b
    a4 = -0.5 + 0.5 * bp - b
    a6 = -0.5 - 0.5 * bp - b
    n1 = 1.0 / math.sqrt(2.0 + a1 * a1)
    n4 = 1.0 / math.sqrt(2.0 + a4 * a4)
    n5 = 1.0 / math.sqrt(2.0 + a5 * a5)
    n6 = 1.0 / math.sqrt(2.0 + a6 * a6)

    vectors = np.zeros((8, 8), dtype=np.complex128)
    vectors[:, 0] = _ket(0)
    vectors[:, 1] = n1 * (_ket(_K100) + _ket(_K010) + a1 * _ket(_K001))
    vectors[:, 2] = _SQRT_HALF * (_ket(_K010) - _ket(_K100))
    vectors[:, 3] = _SQRT_HALF * (_ket(_K101) - _ket(_K011))
    vectors[:, 4] = n4 * (a4 * _ket(_K110) + _ket(_K101) + _ket(_K011))
    vectors[:, 5] = n5 * (_ket(_K100) + _ket(_K010) + a5 * _ket(_K001))
    vectors[:, 6] = n6 * (a6 * _ket(_K110) + _ket(_K101) + _ket(_K011))
    vectors[:, 7] = _ket(7)
    vectors.setflags(write=False)
    energies = closed_form_spectrum(params)
    energies.setflags(write=False)

    return EigenSystem(
        params=params,
        energies=energies,
        b_plus=bp,
        b_minus=bm,
        a1=a1,
        a4=a4,
        a5=a5,
        a6=a6,
        n1=n1,
        n4=n4,
        n5=n5,
        n6=n6,
        vectors=vectors,
    )


# field negation swaps levels 0<->7, 1<->4, 2<->3, 5<->6 (and a1<->a4, a5<->a6)
B_NEGATION_PERMUTATION = (7, 4, 3, 2, 1, 6, 5, 0)


def spectrum_b_negation_map(sys_plus: EigenSystem, sys_minus: EigenSystem,
                            tol: float = 1e-12) -> tuple[int, ...]:
    """Verify the level and amplitude swaps between systems built at +B and -B.

    Returns the index permutation on success; raises MappingViolation naming
    the worst-deviating pair otherwise.
    """
    if sys_plus.params.j_sign != sys_minus.params.j_sign:
        raise ValueError("systems must share the sign of J")
    if sys_minus.params.b != -sys_plus.params.b:
        raise ValueError("second system must be built at the negated field")

    worst_label, worst_dev = "", 0.0
    for i, k in enumerate(B_NEGATION_PERMUTATION):
        dev = abs(float(sys_plus.energies[i]) - float(sys_minus.energies[k]))
        if dev > worst_dev:
            worst_label, worst_dev = f"E{i}(+B) vs E{k}(-B)", dev
    for name_p, name_m in (("a1", "a4"), ("a4", "a1"), ("a5", "a6"), ("a6", "a5")):
        dev = abs(getattr(sys_plus, name_p) - getattr(sys_minus, name_m))
        if dev > worst_dev:
            worst_label, worst_dev = f"{name_p}(+B) vs {name_m}(-B)", dev
    if worst_dev > tol:
        raise MappingViolation(f"{worst_label} deviates by {worst_dev:.3e} (tol {tol:.1e})")
    return B_NEGATION_PERMUTATION
