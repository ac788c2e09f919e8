"""Dense linear-algebra kernels with explicit failure modes.

All solvers are LAPACK-backed; the value added here is the singularity /
convergence error surface and the real embedding used for Hermitian pencils,
so callers never have to interpret LinAlgError or complex round-off.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from . import tolerances
from .errors import NoConvergence, NotHermitian, SingularLyapunov, SingularMatrix


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.kron(a, b)


def solve_linear(m: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve m @ x = b by partially pivoted LU.

    Raises SingularMatrix when the smallest pivot falls below
    PIVOT_RELATIVE * ||m||_F instead of returning garbage.
    """
    m = np.asarray(m, dtype=float)
    scale = np.linalg.norm(m)
    try:
        # the pivot check below is the error surface; silence scipy's
        # advisory warning about exactly-zero pivots
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            lu, piv = scipy.linalg.lu_factor(m, check_finite=True)
    except (scipy.linalg.LinAlgError, ValueError) as exc:
        raise SingularMatrix(f"LU factorization failed: {exc}") from exc
    pivots = np.abs(np.diag(lu))
    if scale == 0.0 or pivots.min() <= tolerances.PIVOT_RELATIVE * scale:
        raise SingularMatrix(
            f"matrix numerically singular (min pivot {pivots.min():.3e}, "
            f"norm {scale:.3e})"
        )
    return scipy.linalg.lu_solve((lu, piv), b)


def lyapunov_residual(a: np.ndarray, v: np.ndarray, d: np.ndarray) -> float:
    return float(np.linalg.norm(a @ v + v @ a.T + d))


def solve_lyapunov(a: np.ndarray, d: np.ndarray) -> np.ndarray:
    """Solve A V + V A^T = -D for symmetric V.

    Vectorized dense solve: (kron(A, I) + kron(I, A)) vec(V) = -vec(D),
    followed by one iterative-refinement pass so the residual stays below
    LYAPUNOV_RESIDUAL_RELATIVE * ||D||_F even for very weakly damped modes.
    The problem sizes here (<= 144 unknowns squared) make the dense route
    both exact enough and trivially cheap.
    """
    a = np.asarray(a, dtype=float)
    d = np.asarray(d, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or d.shape != (n, n):
        raise ValueError("A and D must be square and same shape")
    eye = np.eye(n)
    op = kron(a, eye) + kron(eye, a)

    def _solve(rhs):
        try:
            return solve_linear(op, -rhs.reshape(-1)).reshape(n, n)
        except SingularMatrix as exc:
            raise SingularLyapunov(
                "Lyapunov operator singular; the drift matrix has an "
                "eigenvalue pair summing to zero"
            ) from exc

    v = _solve(d)
    v = 0.5 * (v + v.T)
    # one refinement pass: solve for the correction against the residual
    res = a @ v + v @ a.T + d
    dn = np.linalg.norm(d)
    if np.linalg.norm(res) > 0.1 * tolerances.LYAPUNOV_RESIDUAL_RELATIVE * max(dn, 1e-300):
        dv = _solve(res)
        v = v + 0.5 * (dv + dv.T)
    return 0.5 * (v + v.T)


def eigenvalues(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a general real matrix, sorted by real part."""
    try:
        vals = np.linalg.eigvals(np.asarray(m, dtype=float))
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(f"eigenvalue iteration failed: {exc}") from exc
    return vals[np.argsort(vals.real)]


@dataclass(frozen=True)
class HermitianPair:
    """Real representation S + iK of a Hermitian matrix
    (S symmetric, K antisymmetric, both real)."""

    sym: np.ndarray
    antisym: np.ndarray


def eigenvalues_hermitian(pair: HermitianPair) -> np.ndarray:
    """Real spectrum of H = S + iK without complex arithmetic.

    Embeds H in the real symmetric matrix [[S, -K], [K, S]], whose spectrum
    is that of H with every eigenvalue doubled; sorted dedup keeps one copy.
    """
    s = np.asarray(pair.sym, dtype=float)
    k = np.asarray(pair.antisym, dtype=float)
    n = s.shape[0]
    if s.shape != (n, n) or k.shape != (n, n):
        raise NotHermitian("S and K must be square and same shape")
    scale = max(np.linalg.norm(s), np.linalg.norm(k), 1e-300)
    if np.linalg.norm(s - s.T) > tolerances.HERMITIAN_INPUT * scale:
        raise NotHermitian("symmetric part is not symmetric")
    if np.linalg.norm(k + k.T) > tolerances.HERMITIAN_INPUT * scale:
        raise NotHermitian("antisymmetric part is not antisymmetric")
    embed = np.block([[s, -k], [k, s]])
    embed = 0.5 * (embed + embed.T)
    vals = np.linalg.eigvalsh(embed)
    # doubled spectrum: adjacent sorted entries pair up exactly
    return vals[::2]
