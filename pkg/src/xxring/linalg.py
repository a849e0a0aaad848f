"""Dense complex linear algebra for small Hermitian problems.

Everything here is self-contained: the eigensolver is a cyclic Jacobi
iteration on the Hermitian matrix (deterministic, no LAPACK), sized for
2^n x 2^n problems with n <= 10. numpy is used as the array container only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, NonHermitianInput, NotPositiveSemidefinite, UnsupportedSize

HERMITICITY_TOL = 1e-12
MAX_DIM = 1024


@dataclass(frozen=True)
class EigenDecomposition:
    """Full spectral decomposition: ascending eigenvalues, orthonormal columns.

    Ties keep the order the solver produced them in (stable sort on the
    original column index), so repeated runs are bit-identical.
    """

    values: np.ndarray
    vectors: np.ndarray


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a 2-D complex128 array without copying when possible."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={a.ndim}")
    return a


def max_abs(m) -> float:
    """Largest entry magnitude; the max-norm used by all tolerance checks."""
    a = np.asarray(m)
    return 0.0 if a.size == 0 else float(np.max(np.abs(a)))


def is_hermitian(m, tol: float = HERMITICITY_TOL) -> bool:
    a = as_complex_matrix(m)
    return a.shape[0] == a.shape[1] and max_abs(a - a.conj().T) <= tol


def require_hermitian(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate Hermiticity within `tol` and return the symmetrized matrix."""
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NonHermitianInput(f"matrix is not square: {a.shape}")
    dev = max_abs(a - a.conj().T)
    if dev > tol:
        raise NonHermitianInput(f"|M - M^dag|_max = {dev:.3e} exceeds {tol:.1e}")
    return 0.5 * (a + a.conj().T)


def kron(a, b) -> np.ndarray:
    """Kronecker product in row-major convention: (A (x) B)[iI, jJ] = A[i,j] B[I,J]."""
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    out = a[:, None, :, None] * b[None, :, None, :]
    return out.reshape(a.shape[0] * b.shape[0], a.shape[1] * b.shape[1])


def hermitian_eigen(m, *, max_sweeps: int = 60) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Each rotation zeroes one off-diagonal pair through the unitary
    G = diag(1, e^{-i arg(a_pq)}) . R(theta), with R the classic real Jacobi
    rotation for the phase-stripped 2x2 block. Convergence is quadratic;
    the sweep budget guards pathological inputs.

    Raises NonHermitianInput on asymmetric input, UnsupportedSize beyond
    1024, NoConvergence if the budget is exhausted.
    """
    a = require_hermitian(m)
    n = a.shape[0]
    if n > MAX_DIM:
        raise UnsupportedSize(f"dimension {n} exceeds the supported {MAX_DIM}")

    values = np.real(np.diag(a)).copy()
    vectors = np.eye(n, dtype=np.complex128)
    if n == 1:
        return EigenDecomposition(values=values, vectors=vectors)

    a = a.copy()
    scale = max_abs(a)
    if scale == 0.0:
        return EigenDecomposition(values=np.zeros(n), vectors=vectors)
    tol = 1e-14 * scale
    skip = 0.1 * tol / n

    off = np.abs(a - np.diag(np.diag(a)))
    for _ in range(max_sweeps):
        if float(off.max()) <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= skip:
                    continue
                phase = apq / mag
                app = a[p, p].real
                aqq = a[q, q].real
                # smaller-angle root of tan(2theta) = 2|apq| / (app - aqq)
                tau = (aqq - app) / (2.0 * mag)
                t = 1.0 / (tau + np.sqrt(1.0 + tau * tau)) if tau >= 0 else \
                    -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                gq = s * np.conj(phase)   # G[q,p] = -gq ; G[q,q] = c * conj(phase)

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - gq * col_q
                a[:, q] = s * col_p + c * np.conj(phase) * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - np.conj(gq) * row_q
                a[q, :] = s * row_p + c * phase * row_q

                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0

                vcol_p = vectors[:, p].copy()
                vcol_q = vectors[:, q].copy()
                vectors[:, p] = c * vcol_p - gq * vcol_q
                vectors[:, q] = s * vcol_p + c * np.conj(phase) * vcol_q
        off = np.abs(a - np.diag(np.diag(a)))
    else:
        raise NoConvergence(
            f"off-diagonal max {float(off.max()):.3e} after {max_sweeps} sweeps (target {tol:.3e})"
        )

    values = np.real(np.diag(a))
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = np.ascontiguousarray(vectors[:, order])
    values.setflags(write=False)
    vectors.setflags(write=False)
    return EigenDecomposition(values=values, vectors=vectors)


def psd_sqrt(m) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in [-1e-9, 0) are treated as rounding noise and clamped to
    zero; anything below -1e-9 raises NotPositiveSemidefinite.
    """
    eig = hermitian_eigen(m)
    lo = float(eig.values[0])
    if lo < -1e-9:
        raise NotPositiveSemidefinite(f"minimum eigenvalue {lo:.3e} below -1e-9")
    roots = np.sqrt(np.clip(eig.values, 0.0, None))
    s = (eig.vectors * roots) @ eig.vectors.conj().T
    return 0.5 * (s + s.conj().T)
