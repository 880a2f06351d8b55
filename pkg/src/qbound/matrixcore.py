"""Dense complex linear algebra primitives.

Everything here operates on square ``numpy`` arrays of ``complex128``.
Tolerances are relative to the Frobenius norm of the input with a floor
of 1, so density-matrix-scale operands are effectively checked against
absolute thresholds.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

HERMITIAN_TOL = 1e-8
PSD_TOL = 1e-8
SUPPORT_TOL = 1e-8


class NotHermitianError(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class NotPSDError(ValueError):
    """Input matrix has an eigenvalue below the negativity tolerance."""


class ZeroOperatorError(ValueError):
    """Operation is undefined for the zero operator."""


class HermitianEigensystem(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # unitary, columns are eigenvectors


def as_square_complex(a) -> np.ndarray:
    """Coerce to a square complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(np.float64))):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def frobenius_scale(m: np.ndarray) -> float:
    """Frobenius norm floored at 1, the reference scale for tolerances."""
    return max(1.0, float(np.linalg.norm(m)))


def hermitize(m: np.ndarray) -> np.ndarray:
    """Return the Hermitian part (M + M†)/2."""
    return (m + m.conj().T) / 2


def eig_hermitian(m, tol: float = HERMITIAN_TOL) -> HermitianEigensystem:
    """Eigendecompose a Hermitian matrix.

    Returns ascending real eigenvalues and a unitary matrix of column
    eigenvectors. Raises :class:`NotHermitianError` if the input deviates
    from Hermiticity by more than ``tol`` relative to its Frobenius scale.
    """
    m = as_square_complex(m)
    if np.linalg.norm(m - m.conj().T) > tol * frobenius_scale(m):
        raise NotHermitianError("matrix is not Hermitian within tolerance")
    w, v = np.linalg.eigh(m)
    return HermitianEigensystem(w, v)


def sqrt_psd(m, tol: float = PSD_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` (relative to Frobenius scale) are treated
    as roundoff noise and clipped to zero; anything more negative raises
    :class:`NotPSDError`.
    """
    w, v = eig_hermitian(m, tol=tol)
    floor = -tol * frobenius_scale(np.asarray(m))
    if w[0] < floor:
        raise NotPSDError(f"eigenvalue {w[0]:.3e} below PSD tolerance")
    w = np.where(w < 0.0, 0.0, w)
    return hermitize((v * np.sqrt(w)) @ v.conj().T)


def _orthonormal_completion(cols: np.ndarray, dim: int, count: int) -> np.ndarray:
    """Extend orthonormal columns by Gram-Schmidt over e_1, e_2, ... in order."""
    basis = [cols[:, k] for k in range(cols.shape[1])]
    added = []
    for idx in range(dim):
        if len(added) == count:
            break
        r = np.zeros(dim, dtype=np.complex128)
        r[idx] = 1.0
        for _ in range(2):  # two MGS passes for orthogonality at machine precision
            for b in basis:
                r = r - b * (b.conj() @ r)
        nrm = np.linalg.norm(r)
        if nrm > 1e-6:
            r = r / nrm
            basis.append(r)
            added.append(r)
    if len(added) != count:
        raise RuntimeError("orthonormal completion failed")  # unreachable for unitary input
    return np.column_stack(added)


def polar_decompose(a, tol: float = SUPPORT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Polar decomposition A = U P with U unitary and P = sqrt(A†A) PSD.

    For rank-deficient A the unitary factor is completed on the kernel of P
    deterministically: candidate directions are taken from the standard
    basis in index order and orthonormalized against the range columns.
    """
    a = as_square_complex(a)
    dim = a.shape[0]
    wl, s, vh = np.linalg.svd(a)
    p = hermitize((vh.conj().T * s) @ vh)
    smax = s[0] if s.size else 0.0
    if smax == 0.0:
        return np.eye(dim, dtype=np.complex128), p
    keep = s > tol * smax
    if np.all(keep):
        return wl @ vh, p
    # Deterministic kernel completion: both the input directions (kernel of
    # P) and the output directions (orthogonal complement of the range) are
    # built by Gram-Schmidt over the standard basis, which depends only on
    # the retained singular subspaces, not on SVD phase conventions.
    n_fill = int(np.sum(~keep))
    w_kept = wl[:, keep]
    v_kept = vh.conj().T[:, keep]
    fill_out = _orthonormal_completion(w_kept, dim, n_fill)
    fill_in = _orthonormal_completion(v_kept, dim, n_fill)
    u = w_kept @ v_kept.conj().T + fill_out @ fill_in.conj().T
    return u, p


def support_projector(a, tol: float = SUPPORT_TOL) -> np.ndarray:
    """Projector onto the support of A (the span of its right-singular
    vectors with singular value above ``tol`` times the largest one)."""
    a = as_square_complex(a)
    _, s, vh = np.linalg.svd(a)
    smax = s[0] if s.size else 0.0
    if smax == 0.0:
        raise ZeroOperatorError("support projector of the zero operator is undefined")
    v = vh[s > tol * smax].conj().T
    return hermitize(v @ v.conj().T)


def operator_rank(a, tol: float = SUPPORT_TOL) -> int:
    """Number of singular values above ``tol`` times the largest one."""
    s = np.linalg.svd(as_square_complex(a), compute_uv=False)
    smax = s[0] if s.size else 0.0
    if smax == 0.0:
        return 0
    return int(np.sum(s > tol * smax))


def commutes(a, b, tol: float = HERMITIAN_TOL) -> bool:
    """True iff ||AB - BA||_F <= tol * max(1, ||A||_F ||B||_F)."""
    a = as_square_complex(a)
    b = as_square_complex(b)
    if a.shape != b.shape:
        raise ValueError("commutes requires matrices of equal dimension")
    scale = max(1.0, float(np.linalg.norm(a)) * float(np.linalg.norm(b)))
    return float(np.linalg.norm(a @ b - b @ a)) <= tol * scale
