"""Pairwise thermal concurrence: reduced density matrices and Wootters' measure.

Tracing one site out of the 3-qubit thermal state leaves a two-qubit X state

    rho_pair = (1/Z) [[u, 0,  0, 0],
                      [0, w1, y, 0],
                      [0, y, w2, 0],
                      [0, 0,  0, v]]

in the |s_a s_b> basis (a < b, s_a the more significant bit), whose
concurrence reduces to C = (2/Z) max{|y| - sqrt(u v), 0}. The closed-form
element expressions here are weighted sums of the eigensystem amplitudes; the
weights are the shifted Boltzmann factors, which leaves every ratio identical
to the textbook unshifted form.

Two independent routes to the same number live side by side: the X-form
shortcut (concurrence_x) and the general Wootters evaluation on an explicit
4x4 matrix (concurrence_general), the latter via the Hermitian similarity
sqrt(rho) rho~ sqrt(rho) so only the Hermitian eigensolver is ever needed.

Element sums are grouped so that negating B permutes the addends within
commuting pairs: C(tau, B) == C(tau, -B) then holds bit-for-bit, not merely
to rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import (
    BadSiteIndex,
    DegenerateLimit,
    InvalidXState,
    NonPositiveTau,
    NotDensityMatrix,
    OutOfRange,
)
from .linalg import hermitian_eigen, kron, max_abs, psd_sqrt
from .model import PAULI_Y, EigenSystem, ModelParams, b_plus_minus, closed_form_eigensystem
from .thermal import ThermalParams, shifted_weights

PairSelector = Literal[12, 13, 23]
VALID_PAIRS = (12, 13, 23)

_SIGMA_YY = np.real(kron(PAULI_Y, PAULI_Y)).astype(np.float64)  # spin-flip conjugator


@dataclass(frozen=True)
class XElements:
    """Unnormalized X-state entries plus the partition function z that
    normalizes them. For the pair (1,2) w1 == w2 holds exactly."""

    u: float
    v: float
    w1: float
    w2: float
    y: float
    z: float


def normalize_pair(pair: int) -> int:
    """Map a pair selector to the computed pair: 23 is 13 by site exchange."""
    if pair not in VALID_PAIRS:
        raise ValueError(f"pair must be one of {VALID_PAIRS}, got {pair}")
    return 13 if pair == 23 else pair


def pair_sites(pair: int) -> tuple[int, int]:
    """Kept sites for a pair selector (23 kept literally; used by the
    numeric route to exercise the site-exchange symmetry)."""
    if pair not in VALID_PAIRS:
        raise ValueError(f"pair must be one of {VALID_PAIRS}, got {pair}")
    return {12: (1, 2), 13: (1, 3), 23: (2, 3)}[pair]


def partial_trace(rho, n_sites: int, keep: tuple[int, int]) -> np.ndarray:
    """Reduced 4x4 density matrix of two kept sites (1-based), by index
    summation over all traced sites. Basis |s_a s_b| with a < b and s_a the
    more significant bit; the input trace is preserved."""
    rho = np.asarray(rho, dtype=np.complex128)
    dim = 2**n_sites
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix for {n_sites} sites, got {rho.shape}")
    a, b = keep
    if a == b or not (1 <= a <= n_sites and 1 <= b <= n_sites):
        raise BadSiteIndex(f"keep sites must be two distinct sites in [1, {n_sites}], got {keep}")
    a, b = min(a, b), max(a, b)

    tensor = rho.reshape((2,) * (2 * n_sites))
    letters = "abcdefghijklmnopqrst"
    bra = list(letters[:n_sites])
    ket = list(letters[n_sites:2 * n_sites])
    for site in range(1, n_sites + 1):
        if site not in (a, b):
            ket[site - 1] = bra[site - 1]
    spec = "".join(bra) + "".join(ket) + "->" + bra[a - 1] + bra[b - 1] + ket[a - 1] + ket[b - 1]
    return np.einsum(spec, tensor).reshape(4, 4)


def reduced_elements_12(sys: EigenSystem, tp: ThermalParams) -> XElements:
    """X-state elements of the (1,2) reduction from the closed-form weights."""
    if tp.j_sign != sys.params.j_sign:
        raise ValueError("thermal j_sign disagrees with the eigensystem")
    w, _, _ = shifted_weights(sys.energies, tp.tau)
    w0, w1, w2, w3, w4, w5, w6, w7 = (float(x) for x in w)
    z = ((w0 + w7) + (w1 + w4)) + ((w2 + w3) + (w5 + w6))
    n1s, n4s, n5s, n6s = sys.n1**2, sys.n4**2, sys.n5**2, sys.n6**2

    common = (n1s * w1 + n4s * w4) + (n5s * w5 + n6s * w6)
    y = common - 0.5 * (w2 + w3)
    ww = common + 0.5 * (w2 + w3)
    u = w0 + (sys.a1**2 * n1s * w1 + sys.a5**2 * n5s * w5)
    v = w7 + (sys.a4**2 * n4s * w4 + sys.a6**2 * n6s * w6)
    return XElements(u=u, v=v, w1=ww, w2=ww, y=y, z=z)


def reduced_elements_13(sys: EigenSystem, tp: ThermalParams) -> XElements:
    """X-state elements of the (1,3) reduction; w1 != w2 in general."""
    if tp.j_sign != sys.params.j_sign:
        raise ValueError("thermal j_sign disagrees with the eigensystem")
    w, _, _ = shifted_weights(sys.energies, tp.tau)
    w0, w1, w2, w3, w4, w5, w6, w7 = (float(x) for x in w)
    z = ((w0 + w7) + (w1 + w4)) + ((w2 + w3) + (w5 + w6))
    n1s, n4s, n5s, n6s = sys.n1**2, sys.n4**2, sys.n5**2, sys.n6**2

    y = (sys.a1 * n1s * w1 + sys.a4 * n4s * w4) + (sys.a5 * n5s * w5 + sys.a6 * n6s * w6)
    u = (w0 + 0.5 * w2) + (n1s * w1 + n5s * w5)
    v = (w7 + 0.5 * w3) + (n4s * w4 + n6s * w6)
    ww1 = (0.5 * w3 + (sys.a1**2 * n1s * w1 + sys.a5**2 * n5s * w5)) + (n4s * w4 + n6s * w6)
    ww2 = (0.5 * w2 + (sys.a4**2 * n4s * w4 + sys.a6**2 * n6s * w6)) + (n1s * w1 + n5s * w5)
    return XElements(u=u, v=v, w1=ww1, w2=ww2, y=y, z=z)


def reduced_elements(sys: EigenSystem, tp: ThermalParams, pair: int) -> XElements:
    return reduced_elements_12(sys, tp) if normalize_pair(pair) == 12 else reduced_elements_13(sys, tp)


def assemble_x_state(e: XElements) -> np.ndarray:
    """The normalized 4x4 density matrix carrying the given X elements."""
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[0, 0] = e.u
    rho[1, 1] = e.w1
    rho[2, 2] = e.w2
    rho[3, 3] = e.v
    rho[1, 2] = rho[2, 1] = e.y
    return rho / e.z


def _validate_x_elements(e: XElements, tol: float = 1e-12) -> None:
    if not e.z > 0.0:
        raise InvalidXState(f"z must be positive, got {e.z}")
    if min(e.u, e.v, e.w1, e.w2) < -tol * e.z:
        raise InvalidXState("negative population in X-state elements")
    if abs((e.u + e.v + e.w1 + e.w2) - e.z) > tol * e.z:
        raise InvalidXState("populations do not sum to z")
    if abs(e.y) > math.sqrt(max(e.w1, 0.0) * max(e.w2, 0.0)) + tol * max(1.0, e.z):
        raise InvalidXState(f"|y| = {abs(e.y)} exceeds sqrt(w1 w2), state not PSD")


def concurrence_x(e: XElements) -> float:
    """Concurrence of an X state: (2/z) max{|y| - sqrt(u v), 0}. Valid when
    |y| <= sqrt(w1 w2), which every thermal reduction satisfies; this equals
    the general Wootters formula on the assembled matrix."""
    _validate_x_elements(e)
    return max(2.0 * (abs(e.y) - math.sqrt(e.u * e.v)) / e.z, 0.0)


def _require_density_matrix(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise NotDensityMatrix(f"expected a 4x4 matrix, got {rho.shape}")
    if max_abs(rho - rho.conj().T) > 1e-12:
        raise NotDensityMatrix("matrix is not Hermitian within 1e-12")
    tr = float(np.real(np.trace(rho)))
    if abs(tr - 1.0) > 1e-9:
        raise NotDensityMatrix(f"trace {tr} is not 1 within 1e-9")
    lo = float(hermitian_eigen(rho).values[0])
    if lo < -1e-9:
        raise NotDensityMatrix(f"minimum eigenvalue {lo:.3e} below -1e-9")
    return 0.5 * (rho + rho.conj().T)


def wootters_lambdas(rho) -> np.ndarray:
    """Descending square roots of the eigenvalues of rho rho~, where
    rho~ = (sy x sy) rho* (sy x sy).

    With S = sqrt(rho), the Hermitian similarity S rho~ S factorizes as
    A A^dag for A = S (sy x sy) S*, so the sought roots are the singular
    values of A. They are read off the Hermitian embedding [[0, A], [A^dag, 0]]
    (eigenvalues +-sigma_i), which resolves the near-zero roots to machine
    precision where an eigendecomposition of S rho~ S itself loses half the
    digits to the square root."""
    rho = _require_density_matrix(rho)
    s = psd_sqrt(rho)
    a = s @ _SIGMA_YY @ s.conj()
    emb = np.zeros((8, 8), dtype=np.complex128)
    emb[:4, 4:] = a
    emb[4:, :4] = a.conj().T
    vals = hermitian_eigen(emb).values
    return np.clip(vals[::-1][:4], 0.0, None)


def concurrence_general(rho) -> float:
    """Wootters concurrence of an arbitrary two-qubit density matrix."""
    lam = wootters_lambdas(rho)
    return max(float(lam[0] - lam[1] - lam[2] - lam[3]), 0.0)


def concurrence_pair(params: ModelParams, tp: ThermalParams, pair: int) -> float:
    """Closed-form thermal concurrence of a site pair; pair 23 equals 13."""
    sys = closed_form_eigensystem(params)
    return concurrence_x(reduced_elements(sys, tp, pair))


def c12_zero_t_limit(params: ModelParams) -> float:
    """tau -> 0 limit of the (1,2) concurrence at B != 0: 1 for J > 0, and
    2/(2 + a4^2) for J < 0. At B = 0 the ground manifold is degenerate and
    the limit comes from ground_state_mixture instead."""
    if params.b == 0.0:
        raise DegenerateLimit("B = 0 limit is degenerate; use ground_state_mixture")
    if params.j_sign > 0:
        return 1.0
    bp, _ = b_plus_minus(params.b)
    a4 = -0.5 + 0.5 * bp - params.b
    return 2.0 / (2.0 + a4 * a4)


def c13_low_t_approx(b: float, tau: float) -> float:
    """Low-temperature small-field approximation of the (1,3) concurrence,

        C ~ (2/3) [1 - e^{B/(3 tau)} / (1 + e^{2B/(3 tau)})],

    rewritten as 1/(2 cosh) for overflow-free evaluation. Quantitative only
    in the regime tau << B << 1 with J < 0; see c13_approx_in_regime."""
    if not tau > 0.0:
        raise NonPositiveTau(f"tau must be > 0, got {tau}")
    arg = abs(b) / (3.0 * tau)
    half_sech = math.exp(-arg) / (1.0 + math.exp(-2.0 * arg))
    return (2.0 / 3.0) * (1.0 - half_sech)


def c13_approx_in_regime(b: float, tau: float) -> bool:
    """Loose bounds on tau << B << 1 where the approximation is meaningful."""
    return tau > 0.0 and 10.0 * tau <= abs(b) <= 0.2


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation from concurrence for two qubits:
    E = h((1 + sqrt(1 - C^2))/2) with h the binary entropy (bits)."""
    if not 0.0 <= c <= 1.0:
        raise OutOfRange(f"concurrence must lie in [0, 1], got {c}")
    p = 0.5 * (1.0 + math.sqrt(max(1.0 - c * c, 0.0)))
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)
