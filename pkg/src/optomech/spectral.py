"""Frequency-domain response of the coupled system.

All chi_* functions return the susceptibility itself (not its inverse) and
accept a scalar frequency or an ndarray grid; shapes pass through.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadIndex, DomainError
from .model import LinearizedModel


def _check_mode(model: LinearizedModel, i: int):
    if not 0 <= i < model.n_modes:
        raise BadIndex(f"mode index {i} out of range for {model.n_modes} modes")


def z_response(model: LinearizedModel, omega):
    """Cavity-mediated response kernel z(w) = Delta / ((kappa - iw)^2 + Delta^2)."""
    w = np.asarray(omega, dtype=float)
    return model.detuning / ((model.kappa - 1j * w) ** 2 + model.detuning ** 2)


def chi_bare(model: LinearizedModel, i: int, omega):
    """Bare mechanical susceptibility; inverse is
    (1/w_i) [(w_i^2 - w^2) - i w gamma_i]."""
    _check_mode(model, i)
    w = np.asarray(omega, dtype=float)
    w_i, g_i = model.omega[i], model.gamma[i]
    return w_i / ((w_i ** 2 - w ** 2) - 1j * w * g_i)


def chi_modified_inv(model: LinearizedModel, i: int, omega):
    _check_mode(model, i)
    w = np.asarray(omega, dtype=float)
    w_i, g_i = model.omega[i], model.gamma[i]
    bare_inv = ((w_i ** 2 - w ** 2) - 1j * w * g_i) / w_i
    return bare_inv - z_response(model, omega) * model.coupling[i] ** 2


def chi_modified(model: LinearizedModel, i: int, omega):
    """Susceptibility of mode i dressed by radiation pressure alone:
    [chi_i]^{-1} = [chi0_i]^{-1} - z(w) G_i^2."""
    return 1.0 / chi_modified_inv(model, i, omega)


def chi_two_mode_inv(model: LinearizedModel, omega):
    if model.n_modes != 2:
        raise DomainError("chi_two_mode needs exactly two mechanical modes")
    g1, g2 = model.coupling
    z = z_response(model, omega)
    return (chi_modified_inv(model, 0, omega)
            - chi_modified(model, 1, omega) * z ** 2 * g1 ** 2 * g2 ** 2)


def chi_two_mode(model: LinearizedModel, omega):
    """Main-mode susceptibility including the cavity-mediated second mode:
    [chi_1^tm]^{-1} = [chi_1]^{-1} - chi_2 z^2 G_1^2 G_2^2."""
    return 1.0 / chi_two_mode_inv(model, omega)


@dataclass(frozen=True)
class ComplexResponse:
    """A complex-valued response sampled on a strictly increasing grid."""

    frequency_grid: np.ndarray        # rad/s
    values: np.ndarray                # complex

    def __post_init__(self):
        grid = np.asarray(self.frequency_grid, dtype=float)
        if grid.ndim != 1 or np.any(np.diff(grid) <= 0):
            raise DomainError("frequency grid must be strictly increasing")
        if not np.all(np.isfinite(self.values)):
            raise DomainError("response values must be finite")


@dataclass(frozen=True)
class EffectiveOscillator:
    """Frequency-dependent oscillator parameters extracted from a
    susceptibility: the squared frequency is kept signed so radiation-
    pressure softening below zero stays visible."""

    frequency_grid: np.ndarray
    omega_eff_sq: np.ndarray          # signed, rad^2/s^2
    gamma_eff: np.ndarray             # rad/s

    @property
    def omega_eff(self) -> np.ndarray:
        return np.sign(self.omega_eff_sq) * np.sqrt(np.abs(self.omega_eff_sq))


def effective_oscillator(chi: ComplexResponse, model: LinearizedModel,
                         i: int) -> EffectiveOscillator:
    """Rewrite chi as a harmonic oscillator with frequency-dependent
    parameters: from [chi]^{-1} = (1/w_i)[(w_eff^2 - w^2) - i w gamma_eff]:

        w_eff^2(w) = w^2 + w_i Re [chi]^{-1}
        gamma_eff(w) = -w_i Im [chi]^{-1} / w       (w != 0)
    """
    _check_mode(model, i)
    w = np.asarray(chi.frequency_grid, dtype=float)
    if np.any(w == 0.0):
        raise DomainError("gamma_eff extraction divides by omega; drop w = 0")
    inv = 1.0 / np.asarray(chi.values)
    w_i = model.omega[i]
    return EffectiveOscillator(
        frequency_grid=w,
        omega_eff_sq=w ** 2 + w_i * inv.real,
        gamma_eff=-w_i * inv.imag / w,
    )


def net_cooling_rate(model: LinearizedModel, j: int) -> float:
    """Net laser cooling rate of mode j:

        Gamma_j = 2 G_j^2 Delta w_j kappa /
                  ([kappa^2 + (w_j - Delta)^2][kappa^2 + (w_j + Delta)^2])
    """
    _check_mode(model, j)
    g, w = model.coupling[j], model.omega[j]
    k, d = model.kappa, model.detuning
    return (2.0 * g ** 2 * d * w * k
            / ((k ** 2 + (w - d) ** 2) * (k ** 2 + (w + d) ** 2)))


def gamma_eff_interference(model: LinearizedModel, omega, form: str = "subtracted"):
    """Closed-form approximation to the main mode's effective damping when a
    second mode interferes, valid when each dressed mode looks like a plain
    resonator with linewidth Gamma_i:

        subtracted: (gamma1 + Gamma1) - Gamma1 w^2 Gamma2^2 / ((w2^2-w^2)^2 + w^2 Gamma2^2)
        full:       gamma1 + Gamma1 ((w2^2-w^2)^2 + w^2 gamma2 Gamma2) / (same denominator)

    The two differ at order gamma2/Gamma2; both drop to ~gamma1 at w = w2.
    """
    if model.n_modes != 2:
        raise DomainError("interference formula needs exactly two modes")
    if form not in ("subtracted", "full"):
        raise DomainError(f"unknown form {form!r}")
    w = np.asarray(omega, dtype=float)
    g1_rate = net_cooling_rate(model, 0)
    g2_rate = net_cooling_rate(model, 1)
    gamma1, gamma2 = model.gamma
    w2 = model.omega[1]
    denom = (w2 ** 2 - w ** 2) ** 2 + w ** 2 * g2_rate ** 2
    if form == "subtracted":
        return (gamma1 + g1_rate) - g1_rate * w ** 2 * g2_rate ** 2 / denom
    return gamma1 + g1_rate * ((w2 ** 2 - w ** 2) ** 2
                               + w ** 2 * gamma2 * g2_rate) / denom
