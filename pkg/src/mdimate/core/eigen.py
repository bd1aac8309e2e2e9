"""Cyclic Jacobi eigenvalue solver for small dense Hermitian matrices."""

import math

import numpy as np
import numpy.typing as npt

from mdimate.exceptions import EigenConvergenceError


def off_diagonal_norm(a: npt.NDArray[np.complex128]) -> float:
    """Frobenius norm of the strictly off-diagonal part."""
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: npt.NDArray[np.complex128], p: int, q: int) -> None:
    """Zero a[p, q] in place with a phase-corrected Givens rotation."""
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return

    # diag(1, conj(phase)) turns the (p, q) entry into the real number r,
    # then the real symmetric 2x2 rotation annihilates it.
    phase = apq / r
    diff = (a[q, q] - a[p, p]).real
    phi = diff / (2.0 * r)
    t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
    if phi < 0.0:
        t = -t
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    u = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]], dtype=np.complex128)
    idx = [p, q]
    a[:, idx] = a[:, idx] @ u
    a[idx, :] = u.conj().T @ a[idx, :]
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real


def jacobi_eigenvalues(
    m: npt.ArrayLike, *, tolerance: float = 1e-12, max_sweeps: int = 100
) -> npt.NDArray[np.float64]:
    """Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps.

    Args:
        m: Hermitian matrix (not re-checked here)
        tolerance: Stop once the off-diagonal Frobenius norm drops below this
        max_sweeps: Sweep cap

    Returns:
        Eigenvalues sorted ascending

    Raises:
        EigenConvergenceError: If the cap is reached before convergence
    """
    a = np.array(m, dtype=np.complex128, copy=True)
    n = a.shape[0]

    for _ in range(max_sweeps):
        if off_diagonal_norm(a) < tolerance:
            return np.sort(np.diag(a).real)
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, p, q)

    residual = off_diagonal_norm(a)
    if residual < tolerance:
        return np.sort(np.diag(a).real)
    raise EigenConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {residual:.3e})")
