"""Stationary covariance matrix and derived quantities.

The steady state of the linearized dynamics is a zero-mean Gaussian fully
described by V_ij = <u_i u_j + u_j u_i>/2, obtained from the Lyapunov
equation A V + V A^T = -D.  An independent frequency-integral route is kept
alongside as a cross-check oracle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.constants import hbar, k as k_B
from scipy.integrate import quad_vec

from . import tolerances
from .errors import DomainError, QuadratureNotConverged, Unstable
from .model import (
    LinearizedModel,
    build_diffusion,
    build_drift,
    stability_eta,
    stability_spectral,
)
from .numerics import HermitianPair, eigenvalues_hermitian, solve_lyapunov


def symplectic_form(n_subsystems: int) -> np.ndarray:
    """Block-diagonal J = diag([[0,1],[-1,0]], ...) over n subsystems."""
    j = np.zeros((2 * n_subsystems, 2 * n_subsystems))
    for i in range(n_subsystems):
        j[2 * i, 2 * i + 1] = 1.0
        j[2 * i + 1, 2 * i] = -1.0
    return j


def steady_covariance(model: LinearizedModel) -> np.ndarray:
    """Solve the steady-state Lyapunov equation for the covariance matrix.

    Raises Unstable (rather than returning a meaningless matrix) when the
    drift spectrum is not strictly in the left half plane.
    """
    report = stability_spectral(model)
    if not report.stable:
        raise Unstable(
            f"drift matrix not stable (max Re eigenvalue {report.max_real_part:.3e})")
    a = build_drift(model)
    d = build_diffusion(model)
    return solve_lyapunov(a, d)


def mode_occupancy(v: np.ndarray, j: int) -> float:
    """Effective phonon number of mode j from the variance sum:
    (<dq_j^2> + <dp_j^2>)/2 - 1/2, zero-based row pairs."""
    return 0.5 * (v[2 * j, 2 * j] + v[2 * j + 1, 2 * j + 1] - 1.0)


def effective_temperature(n_eff: float, omega: float) -> float:
    """Temperature whose Bose occupation at `omega` equals n_eff; 0 for 0."""
    if omega <= 0:
        raise DomainError("effective_temperature needs omega > 0")
    if n_eff < 0:
        # tolerate the physicality slack around zero
        if n_eff > -tolerances.EIGENVALUE_SIGN_MARGIN:
            return 0.0
        raise DomainError(f"negative occupancy {n_eff}")
    if n_eff == 0.0:
        return 0.0
    return hbar * omega / (k_B * math.log1p(1.0 / n_eff))


@dataclass(frozen=True)
class PhysicalityReport:
    min_eig: float
    physical: bool


def physicality_check(v: np.ndarray) -> PhysicalityReport:
    """Uncertainty-principle check: min eigenvalue of V + iJ/2 must be
    >= -EIGENVALUE_SIGN_MARGIN (absolute; quadrature units)."""
    n_sub = v.shape[0] // 2
    pair = HermitianPair(sym=np.asarray(v, dtype=float),
                         antisym=0.5 * symplectic_form(n_sub))
    min_eig = float(eigenvalues_hermitian(pair)[0])
    return PhysicalityReport(
        min_eig=min_eig,
        physical=min_eig >= -tolerances.EIGENVALUE_SIGN_MARGIN)


@dataclass(frozen=True)
class SteadyStateReport:
    covariance: np.ndarray
    occupancy: tuple[float, ...]
    effective_temperature: tuple[float, ...]   # K
    eta: float | None                          # None when detuning <= 0
    stable: bool
    warnings: tuple[str, ...]


def steady_report(model: LinearizedModel) -> SteadyStateReport:
    """Covariance plus per-mode occupancies/temperatures in one shot."""
    v = steady_covariance(model)
    occ = tuple(mode_occupancy(v, j) for j in range(model.n_modes))
    temps = tuple(effective_temperature(n, w) for n, w in zip(occ, model.omega))
    eta = stability_eta(model) if model.detuning > 0 else None
    return SteadyStateReport(
        covariance=v,
        occupancy=occ,
        effective_temperature=temps,
        eta=eta,
        stable=True,
        warnings=model.warnings,
    )


def oracle_covariance(model: LinearizedModel,
                      omega_max_factor: float = 50.0) -> np.ndarray:
    """Independent covariance route via the spectral integral

        V = (1/2pi) \\int dw (A - iwI)^{-1} D (A^T + iwI)^{-1}.

    Adaptive quadrature over [0, Omega] of the symmetrized integrand
    f(w) + f(-w), with breakpoints at the known resonances (0, omega_j,
    |Delta|, each +/- 5 kappa) and the analytic 1/w^2 tail beyond Omega
    added as D/(pi Omega).  Deliberately shares no code with the Lyapunov
    path.
    """
    report = stability_spectral(model)
    if not report.stable:
        raise Unstable("oracle integral diverges for an unstable drift")
    a = build_drift(model)
    d = build_diffusion(model)
    n = a.shape[0]
    eye = np.eye(n)
    scale = max(max(model.omega), model.kappa, abs(model.detuning))
    omega_max = omega_max_factor * scale

    def one_side(w):
        left = np.linalg.solve(a - 1j * w * eye, d)
        # right-multiply by (A^T + iwI)^{-1} via a transposed solve
        return np.linalg.solve(a + 1j * w * eye, left.T).T

    def integrand(w):
        return (one_side(w) + one_side(-w)).real

    points = set()
    for center in (0.0, abs(model.detuning), *model.omega):
        for p in (center - 5.0 * model.kappa, center, center + 5.0 * model.kappa):
            if 0.0 < p < omega_max:
                points.add(p)
    # tolerance scaled to the expected covariance magnitude (~ n_thermal + 1/2)
    v_scale = 1.0 + max(model.n_thermal)
    epsabs = 1e-8 * v_scale
    result, err = quad_vec(integrand, 0.0, omega_max,
                           epsabs=epsabs, epsrel=1e-8,
                           norm="max", points=sorted(points))
    if err > max(epsabs, 1e-7 * float(np.abs(result).max())):
        raise QuadratureNotConverged(
            f"spectral integral error estimate {err:.3e} too large")
    # the symmetrized integrand is real up to rounding; spot-check the residue
    for w in (min(model.omega), model.kappa):
        full = one_side(w) + one_side(-w)
        if float(np.abs(full.imag).max()) > 1e-8 * max(1.0, float(np.abs(full).max())):
            raise QuadratureNotConverged("imaginary residue above 1e-8")
    v = result / (2.0 * math.pi) + d / (math.pi * omega_max)
    return 0.5 * (v + v.T)
