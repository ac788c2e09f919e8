"""Physical parameters and the linearized dynamical model.

A single driven cavity mode couples to N mechanical modes via radiation
pressure.  After linearizing around the semiclassical steady state the
fluctuation dynamics is du/dt = A u + noise, with quadrature ordering

    u = (dq_1, dp_1, ..., dq_N, dp_N, dX, dY)

and vacuum variance 1/2.  Everything internal is rad/s and SI.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.constants import hbar, k as k_B, c as c_light

from . import tolerances
from .errors import (
    BadIndex,
    DegenerateCoupling,
    DomainError,
    NoPhysicalRoot,
    ValidationError,
)

TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# parameter containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MechMode:
    """One mechanical mode: frequency, damping (rate or Q), mass, and the
    dimensionless overlap of the driven cavity field with its displacement
    profile (1 for a perfectly matched end-mirror mode)."""

    omega: float                      # rad/s
    mass: float                       # kg
    gamma: float | None = None        # rad/s
    quality_factor: float | None = None
    overlap: float = 1.0

    def __post_init__(self):
        if (self.gamma is None) == (self.quality_factor is None):
            raise ValidationError(
                "mode needs exactly one of gamma / quality_factor")
        if self.omega <= 0 or self.mass <= 0:
            raise ValidationError("mode omega and mass must be positive")
        # gamma = 0 is allowed (marginally damped; the spectral check governs)
        if self.damping_rate < 0:
            raise ValidationError("mode damping must be >= 0")
        if not 0.0 <= self.overlap <= 1.0:
            raise ValidationError("overlap must lie in [0, 1]")

    @property
    def damping_rate(self) -> float:
        if self.gamma is not None:
            return self.gamma
        return self.omega / self.quality_factor


@dataclass(frozen=True)
class PhysicalParams:
    """Full experiment description.

    Exactly one of (finesse, kappa) and exactly one of
    (input_power, coupling_g1) must be given.  `detuning` is interpreted per
    `detuning_kind`: "effective" means the already-shifted cavity detuning
    seen by the fluctuations; "bare" means the laser-cavity detuning before
    the static radiation-pressure shift, which triggers a semiclassical
    solve.  `coupling_g1` pins the effective coupling of mode 1 at
    `reference_detuning` (defaults to `detuning`); the other modes follow
    with the mass/frequency/overlap scaling of the radiation-pressure
    coupling.
    """

    modes: tuple[MechMode, ...]
    cavity_length: float              # m
    wavelength: float                 # m
    bath_temperature: float           # K
    detuning: float                   # rad/s
    detuning_kind: str = "effective"
    finesse: float | None = None
    kappa: float | None = None        # rad/s (amplitude decay rate)
    input_power: float | None = None  # W
    coupling_g1: float | None = None  # rad/s
    reference_detuning: float | None = None

    def __post_init__(self):
        problems = []
        if len(self.modes) < 1:
            problems.append("at least one mechanical mode required")
        if (self.finesse is None) == (self.kappa is None):
            problems.append("exactly one of finesse / kappa required")
        if (self.input_power is None) == (self.coupling_g1 is None):
            problems.append("exactly one of input_power / coupling_g1 required")
        if self.detuning_kind not in ("effective", "bare"):
            problems.append(f"unknown detuning_kind {self.detuning_kind!r}")
        if self.detuning_kind == "bare" and self.input_power is None:
            problems.append("bare detuning needs the input_power entry path")
        if self.cavity_length <= 0 or self.wavelength <= 0:
            problems.append("cavity_length and wavelength must be positive")
        if self.bath_temperature < 0:
            problems.append("bath_temperature must be >= 0")
        if problems:
            raise ValidationError(problems)

    @property
    def n_modes(self) -> int:
        return len(self.modes)


@dataclass(frozen=True)
class LinearizedModel:
    """Inputs to the linearized fluctuation dynamics, all rad/s."""

    omega: tuple[float, ...]
    gamma: tuple[float, ...]
    coupling: tuple[float, ...]       # effective couplings G_j
    n_thermal: tuple[float, ...]
    kappa: float
    detuning: float
    warnings: tuple[str, ...] = field(default=())

    @property
    def n_modes(self) -> int:
        return len(self.omega)

    @property
    def dim(self) -> int:
        return 2 * self.n_modes + 2


@dataclass(frozen=True)
class SemiclassicalState:
    """One steady-state branch of the classical cavity + mirror equations."""

    alpha_s: float                    # intracavity amplitude (photons^(1/2))
    q_s: tuple[float, ...]            # static displacements, quadrature units
    effective_detuning: float         # rad/s, after radiation-pressure shift
    branch_count: int


# ---------------------------------------------------------------------------
# elementary relations
# ---------------------------------------------------------------------------

def thermal_occupancy(omega: float, temperature: float) -> float:
    """Bose occupation 1/(exp(hbar w / kB T) - 1); 0 at T = 0."""
    if omega <= 0:
        raise DomainError("thermal_occupancy needs omega > 0")
    if temperature < 0:
        raise DomainError("negative temperature")
    if temperature == 0.0:
        return 0.0
    x = hbar * omega / (k_B * temperature)
    if x > 700.0:
        return math.exp(-x)
    return 1.0 / math.expm1(x)


def kappa_from_finesse(length: float, finesse: float) -> float:
    """Cavity amplitude decay rate pi c / (2 L F)."""
    if length <= 0 or finesse <= 0:
        raise DomainError("length and finesse must be positive")
    return math.pi * c_light / (2.0 * length * finesse)


def cavity_frequency(wavelength: float) -> float:
    return TWO_PI * c_light / wavelength


def resolve_kappa(params: PhysicalParams) -> float:
    if params.kappa is not None:
        return params.kappa
    return kappa_from_finesse(params.cavity_length, params.finesse)


def zero_point_width(mode: MechMode) -> float:
    """sqrt(hbar / (m omega)), the width entering the quadrature scaling."""
    return math.sqrt(hbar / (mode.mass * mode.omega))


def bare_coupling(params: PhysicalParams, j: int) -> float:
    """Single-photon radiation-pressure coupling of mode j:
    G0_j = (omega_cav c_j / L) sqrt(hbar / (m_j omega_j))."""
    mode = _mode(params, j)
    omega_cav = cavity_frequency(params.wavelength)
    return omega_cav * mode.overlap / params.cavity_length * zero_point_width(mode)


def effective_coupling(params: PhysicalParams, detuning: float, j: int) -> float:
    """Field-enhanced coupling of mode j at the given effective detuning:

        G_j = (2 omega_cav c_j / L) sqrt(P kappa / (m_j omega_j omega_cav
                                                    (kappa^2 + detuning^2)))

    i.e. G0_j * sqrt(2) * |alpha_s| with the intracavity amplitude taken at
    fixed input power P.
    """
    if params.input_power is None:
        raise DomainError("effective_coupling needs the input_power entry path")
    mode = _mode(params, j)
    kappa = resolve_kappa(params)
    omega_cav = cavity_frequency(params.wavelength)
    return (2.0 * omega_cav * mode.overlap / params.cavity_length) * math.sqrt(
        params.input_power * kappa
        / (mode.mass * mode.omega * omega_cav * (kappa ** 2 + detuning ** 2))
    )


def _mode(params: PhysicalParams, j: int) -> MechMode:
    if not 0 <= j < params.n_modes:
        raise BadIndex(f"mode index {j} out of range for {params.n_modes} modes")
    return params.modes[j]


# ---------------------------------------------------------------------------
# semiclassical steady state (bare-detuning entry path)
# ---------------------------------------------------------------------------

def semiclassical_solve(params: PhysicalParams) -> list[SemiclassicalState]:
    """All physical steady-state branches for a bare-detuned drive.

    With x = |alpha_s|^2 and s = sum_j G0_j^2 / omega_j the cavity equation
    closes into the cubic

        s^2 x^3 - 2 Delta0 s x^2 + (kappa^2 + Delta0^2) x - E^2 = 0,

    E = sqrt(2 P kappa / (hbar omega_cav)).  Every real root with x >= 0 is
    returned (1 or 3 of them, sorted by x); each carries its own shifted
    detuning Delta = Delta0 - s x.
    """
    if params.detuning_kind != "bare":
        raise DomainError("semiclassical_solve expects a bare detuning")
    kappa = resolve_kappa(params)
    delta0 = params.detuning
    omega_cav = cavity_frequency(params.wavelength)
    e_drive_sq = 2.0 * params.input_power * kappa / (hbar * omega_cav)
    g0 = [bare_coupling(params, j) for j in range(params.n_modes)]
    s = sum(g ** 2 / m.omega for g, m in zip(g0, params.modes))

    def residual(x):
        return x * (kappa ** 2 + (delta0 - s * x) ** 2) - e_drive_sq

    if s == 0.0:
        roots = [e_drive_sq / (kappa ** 2 + delta0 ** 2)]
    else:
        coeffs = [s ** 2, -2.0 * delta0 * s, kappa ** 2 + delta0 ** 2, -e_drive_sq]
        raw = np.roots(coeffs)
        scale = max(abs(r) for r in raw) or 1.0
        roots = []
        for r in raw:
            if abs(r.imag) > 1e-8 * scale:
                continue
            x = float(r.real)
            # one Newton polish against the scalar residual
            for _ in range(3):
                fp = (kappa ** 2 + (delta0 - s * x) ** 2) - 2.0 * s * x * (delta0 - s * x)
                if fp != 0.0:
                    x -= residual(x) / fp
            if x < -1e-12 * scale:
                continue
            roots.append(max(x, 0.0))
        roots = sorted(set(round(x, 15) for x in roots))
        # collapse near-duplicates left by root polishing
        dedup = []
        for x in roots:
            if not dedup or abs(x - dedup[-1]) > 1e-9 * max(scale, 1.0):
                dedup.append(x)
        roots = dedup
    if not roots:
        raise NoPhysicalRoot("no nonnegative intracavity intensity solves the cubic")
    states = []
    for x in roots:
        alpha = math.sqrt(x)
        q_s = tuple(g * x / m.omega for g, m in zip(g0, params.modes))
        states.append(SemiclassicalState(
            alpha_s=alpha,
            q_s=q_s,
            effective_detuning=delta0 - s * x,
            branch_count=len(roots),
        ))
    return states


# ---------------------------------------------------------------------------
# linearized model construction
# ---------------------------------------------------------------------------

def _coupling_scale(params: PhysicalParams, j: int) -> float:
    """Ratio G_j / G_1 at equal drive: overlap and 1/sqrt(m omega) scaling."""
    m0, mj = params.modes[0], params.modes[j]
    return (mj.overlap / m0.overlap) * math.sqrt(
        (m0.mass * m0.omega) / (mj.mass * mj.omega))


def build_linearized(params: PhysicalParams,
                     coupling_mode: str = "fixed-power",
                     branch: int = 0) -> LinearizedModel:
    """Resolve a PhysicalParams into the linearized fluctuation model.

    coupling_mode only matters for effective-detuning inputs: "fixed-power"
    rescales the couplings with detuning as a constant-input-power drive
    would, "fixed-G" freezes them at reference_detuning.  For bare-detuning
    inputs the couplings come from the selected semiclassical branch and the
    switch is ignored.
    """
    if coupling_mode not in ("fixed-power", "fixed-G"):
        raise ValidationError(f"unknown coupling_mode {coupling_mode!r}")
    kappa = resolve_kappa(params)

    if params.detuning_kind == "bare":
        states = semiclassical_solve(params)
        if not 0 <= branch < len(states):
            raise BadIndex(
                f"branch {branch} out of range, {len(states)} branch(es)")
        state = states[branch]
        detuning = state.effective_detuning
        coupling = tuple(
            bare_coupling(params, j) * state.alpha_s * math.sqrt(2.0)
            for j in range(params.n_modes))
    else:
        detuning = params.detuning
        ref = params.reference_detuning
        if ref is None:
            ref = params.detuning
        if params.input_power is not None:
            d_for_g = detuning if coupling_mode == "fixed-power" else ref
            coupling = tuple(
                effective_coupling(params, d_for_g, j)
                for j in range(params.n_modes))
        else:
            g1 = params.coupling_g1
            if coupling_mode == "fixed-power":
                g1 = g1 * math.sqrt(
                    (kappa ** 2 + ref ** 2) / (kappa ** 2 + detuning ** 2))
            coupling = tuple(
                g1 * _coupling_scale(params, j) for j in range(params.n_modes))

    warnings = []
    for j, mode in enumerate(params.modes):
        t = params.bath_temperature
        ratio = math.inf if t == 0.0 else hbar * mode.omega / (2.0 * k_B * t)
        if ratio > tolerances.MARKOV_RATIO:
            warnings.append(
                f"mode {j + 1}: hbar*omega/(2*kB*T) = {ratio:.3g} exceeds "
                f"{tolerances.MARKOV_RATIO:g}; bath correlations are not "
                "short compared to the mode period")

    return LinearizedModel(
        omega=tuple(m.omega for m in params.modes),
        gamma=tuple(m.damping_rate for m in params.modes),
        coupling=coupling,
        n_thermal=tuple(
            thermal_occupancy(m.omega, params.bath_temperature)
            for m in params.modes),
        kappa=kappa,
        detuning=detuning,
        warnings=tuple(warnings),
    )


def build_drift(model: LinearizedModel) -> np.ndarray:
    """Drift matrix A of du/dt = A u + n(t).

    Mechanical 2x2 blocks [[0, w], [-w, -gamma]] on the diagonal, cavity
    block [[-kappa, Delta], [-Delta, -kappa]], radiation pressure tying
    dY to each dq_j and dp_j to dX with strength G_j.
    """
    n = model.n_modes
    d = model.dim
    a = np.zeros((d, d))
    for j in range(n):
        a[2 * j, 2 * j + 1] = model.omega[j]
        a[2 * j + 1, 2 * j] = -model.omega[j]
        a[2 * j + 1, 2 * j + 1] = -model.gamma[j]
        a[2 * j + 1, d - 2] = model.coupling[j]
        a[d - 1, 2 * j] = model.coupling[j]
    a[d - 2, d - 2] = -model.kappa
    a[d - 2, d - 1] = model.detuning
    a[d - 1, d - 2] = -model.detuning
    a[d - 1, d - 1] = -model.kappa
    return a


def build_diffusion(model: LinearizedModel) -> np.ndarray:
    """Diffusion matrix of the Markovian noises:
    diag(0, gamma_j (2 n_j + 1), ..., kappa, kappa)."""
    d = np.zeros((model.dim, model.dim))
    for j in range(model.n_modes):
        d[2 * j + 1, 2 * j + 1] = model.gamma[j] * (2.0 * model.n_thermal[j] + 1.0)
    d[-2, -2] = model.kappa
    d[-1, -1] = model.kappa
    return d


# ---------------------------------------------------------------------------
# stability
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    max_real_part: float              # rad/s


def stability_eta(model: LinearizedModel) -> float:
    """Routh-Hurwitz margin for positive detuning:

        eta = 1 - Delta / (kappa^2 + Delta^2) * sum_j G_j^2 / omega_j

    positive iff the steady state exists.  Only valid for Delta > 0."""
    if model.detuning <= 0:
        raise DomainError("eta is only defined for positive detuning")
    s = sum(g ** 2 / w for g, w in zip(model.coupling, model.omega))
    return 1.0 - model.detuning / (model.kappa ** 2 + model.detuning ** 2) * s


def stability_spectral(model: LinearizedModel) -> StabilityReport:
    """Spectral stability of the drift matrix: stable means every eigenvalue
    sits left of -EIGENVALUE_SIGN_MARGIN * ||A||_F."""
    from .numerics import eigenvalues
    drift = build_drift(model)
    vals = eigenvalues(drift)
    max_real = float(vals.real.max())
    margin = tolerances.EIGENVALUE_SIGN_MARGIN * np.linalg.norm(drift)
    return StabilityReport(stable=bool(max_real < -margin), max_real_part=max_real)


# ---------------------------------------------------------------------------
# center-of-mass / relative picture (two modes)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CmRelativeTransform:
    omega_cm: float
    omega_r: float
    cross_coupling: float
    coupling_cm: float                # cavity couples only to the CM combination
    basis: np.ndarray                 # symplectic 4x4 on (q1, p1, q2, p2)


def cm_relative(model: LinearizedModel) -> CmRelativeTransform:
    """Rotate two mechanical modes into the combinations
    q_cm = (G1 q1 + G2 q2)/g, q_r = (-G2 q1 + G1 q2)/g, g = sqrt(G1^2+G2^2).

    Only the CM combination couples to the cavity (strength g); the two
    combinations stay coupled to each other through the frequency mismatch
    with strength (omega2 - omega1) G1 G2 / g^2.  The orthonormal weights
    make the basis a proper symplectic rotation.
    """
    if model.n_modes != 2:
        raise DomainError("cm_relative needs exactly two mechanical modes")
    g1, g2 = model.coupling
    g = math.hypot(g1, g2)
    if g == 0.0:
        raise DegenerateCoupling("both couplings vanish")
    c, s = g1 / g, g2 / g
    w1, w2 = model.omega
    basis = np.array([
        [c, 0.0, s, 0.0],
        [0.0, c, 0.0, s],
        [-s, 0.0, c, 0.0],
        [0.0, -s, 0.0, c],
    ])
    return CmRelativeTransform(
        omega_cm=(g1 ** 2 * w1 + g2 ** 2 * w2) / g ** 2,
        omega_r=(g1 ** 2 * w2 + g2 ** 2 * w1) / g ** 2,
        cross_coupling=(w2 - w1) * g1 * g2 / g ** 2,
        coupling_cm=g,
        basis=basis,
    )
