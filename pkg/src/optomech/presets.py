"""Canned parameter sets reproducing the four figure families.

All presets share the workhorse mechanical mode (10 MHz, gamma/2pi = 100 Hz,
250 ng, unit overlap) and enter kappa and G1 normalized to omega1 exactly as
quoted, sidestepping the ambiguous finesse conversion.  Detuning sweeps whose
source quotes an input power at a reference detuning default to fixed-power;
sweeps whose source quotes G directly default to fixed-G.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .model import MechMode, PhysicalParams, TWO_PI
from .sweep import SweepSpec

OMEGA1 = TWO_PI * 1.0e7        # rad/s reference mode
_GAMMA = TWO_PI * 100.0
_MASS = 250e-12                # kg


@dataclass(frozen=True)
class Preset:
    name: str
    description: str
    params: PhysicalParams
    sweep: SweepSpec


def _mode(omega_ratio: float) -> MechMode:
    return MechMode(omega=omega_ratio * OMEGA1, mass=_MASS, gamma=_GAMMA)


def _params(*, omega2_ratio, kappa_ratio, g1_ratio, temperature_k,
            detuning_ratio, length_m=1e-3) -> PhysicalParams:
    return PhysicalParams(
        modes=(_mode(1.0), _mode(omega2_ratio)),
        cavity_length=length_m,
        wavelength=1064e-9,
        bath_temperature=temperature_k,
        detuning=detuning_ratio * OMEGA1,
        kappa=kappa_ratio * OMEGA1,
        coupling_g1=g1_ratio * OMEGA1,
        reference_detuning=detuning_ratio * OMEGA1,
    )


_COOLING_OUT = ("occupancy", "single_mode", "stability")
_NEG_OUT = ("negativity", "single_mode", "stability")


def _build() -> dict[str, Preset]:
    presets = [
        Preset(
            "fig1a",
            "two-mode cooling vs detuning, well separated modes (omega2 = 1.7 omega1)",
            _params(omega2_ratio=1.7, kappa_ratio=0.2, g1_ratio=0.2,
                    temperature_k=0.6, detuning_ratio=1.0),
            SweepSpec("detuning", 0.5, 2.5, 201, "fixed-power", _COOLING_OUT),
        ),
        Preset(
            "fig1b",
            "two-mode cooling vs detuning, lower finesse (kappa = omega1, omega2 = 2 omega1)",
            _params(omega2_ratio=2.0, kappa_ratio=1.0, g1_ratio=0.6,
                    temperature_k=0.6, detuning_ratio=1.0),
            SweepSpec("detuning", 0.5, 3.0, 201, "fixed-power", _COOLING_OUT),
        ),
        Preset(
            "fig1c",
            "two-mode cooling vs detuning, closely spaced modes (omega2 = 0.95 omega1)",
            _params(omega2_ratio=0.95, kappa_ratio=0.5, g1_ratio=0.3,
                    temperature_k=0.6, detuning_ratio=1.0),
            SweepSpec("detuning", 0.5, 2.0, 201, "fixed-power", _COOLING_OUT),
        ),
        Preset(
            "fig1d",
            "occupancies vs omega2/omega1 at Delta = omega1: cooling suppression near resonance",
            _params(omega2_ratio=1.7, kappa_ratio=0.5, g1_ratio=0.3,
                    temperature_k=0.6, detuning_ratio=1.0),
            SweepSpec("omega2_ratio", 0.5, 2.0, 301, "fixed-G", _COOLING_OUT),
        ),
        Preset(
            "fig2",
            "effective damping and frequency of the main mode vs probe frequency (omega2 = omega1)",
            _params(omega2_ratio=1.0, kappa_ratio=0.3, g1_ratio=0.2,
                    temperature_k=0.6, detuning_ratio=1.0, length_m=0.5e-3),
            SweepSpec("frequency", 0.5, 1.5, 2001, "fixed-G",
                      ("susceptibility", "stability")),
        ),
        Preset(
            "fig3a",
            "optomechanical entanglement vs detuning, well separated modes (omega2 = 1.5 omega1)",
            _params(omega2_ratio=1.5, kappa_ratio=0.9, g1_ratio=1.0,
                    temperature_k=0.4, detuning_ratio=1.0),
            SweepSpec("detuning", 0.5, 2.0, 151, "fixed-G", _NEG_OUT),
        ),
        Preset(
            "fig3b",
            "entanglement vs omega2/omega1 at T = 0: resonant enhancement",
            _params(omega2_ratio=1.5, kappa_ratio=0.9, g1_ratio=0.6,
                    temperature_k=0.0, detuning_ratio=1.0),
            SweepSpec("omega2_ratio", 0.5, 1.5, 201, "fixed-G", _NEG_OUT),
        ),
        Preset(
            "fig3c",
            "entanglement vs omega2/omega1 at T = 0.4 K: enhancement lost",
            _params(omega2_ratio=1.5, kappa_ratio=0.9, g1_ratio=0.6,
                    temperature_k=0.4, detuning_ratio=1.0),
            SweepSpec("omega2_ratio", 0.5, 3.0, 251, "fixed-G", _NEG_OUT),
        ),
        Preset(
            "fig3d",
            "entanglement vs bath temperature at Delta = omega2 = 1.5 omega1",
            _params(omega2_ratio=1.5, kappa_ratio=0.9, g1_ratio=1.0,
                    temperature_k=0.4, detuning_ratio=1.5),
            SweepSpec("temperature", 0.0, 5.0, 101, "fixed-G", _NEG_OUT),
        ),
        Preset(
            "fig4a",
            "tripartite NPT eigenvalues vs detuning, well separated modes (omega2 = 1.5 omega1)",
            _params(omega2_ratio=1.5, kappa_ratio=0.5, g1_ratio=0.7,
                    temperature_k=0.4, detuning_ratio=1.0, length_m=0.5e-3),
            SweepSpec("detuning", 0.6, 1.6, 201, "fixed-G",
                      ("tripartite", "stability")),
        ),
        Preset(
            "fig4b",
            "tripartite NPT eigenvalues vs detuning, close modes (omega2 = 1.01 omega1)",
            _params(omega2_ratio=1.01, kappa_ratio=0.5, g1_ratio=0.7,
                    temperature_k=0.4, detuning_ratio=1.0, length_m=0.5e-3),
            SweepSpec("detuning", 0.6, 1.6, 201, "fixed-G",
                      ("tripartite", "stability")),
        ),
    ]
    return {p.name: p for p in presets}


PRESETS = _build()


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(sorted(PRESETS))
        raise ValidationError([f"unknown preset {name!r}; known: {known}"]) from None
