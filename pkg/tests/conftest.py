import numpy as np
import pytest

from optomech.model import MechMode, PhysicalParams, TWO_PI, build_linearized

OMEGA1 = TWO_PI * 1.0e7          # rad/s, 10 MHz fundamental used throughout
GAMMA = TWO_PI * 100.0           # rad/s -> gamma/omega1 = 1e-5
MASS = 250e-12                   # kg


def normalized_params(*, omega2_ratio=1.7, kappa=0.2, g1=0.2, detuning=1.0,
                      temperature=0.6, n_modes=2, reference_detuning=None,
                      gamma=GAMMA, overlap2=1.0):
    """Two-mode params in the normalized entry path (kappa, G1 in units of
    omega1); geometry fields are carried along but unused on this path."""
    modes = [MechMode(omega=OMEGA1, mass=MASS, gamma=gamma)]
    if n_modes == 2:
        modes.append(MechMode(omega=omega2_ratio * OMEGA1, mass=MASS,
                              gamma=gamma, overlap=overlap2))
    ref = detuning if reference_detuning is None else reference_detuning
    return PhysicalParams(
        modes=tuple(modes),
        cavity_length=1e-3,
        wavelength=810e-9,
        bath_temperature=temperature,
        detuning=detuning * OMEGA1,
        kappa=kappa * OMEGA1,
        coupling_g1=g1 * OMEGA1,
        reference_detuning=ref * OMEGA1,
    )


@pytest.fixture
def fig1a_model():
    # omega2 = 1.7 omega1, kappa = G1 = 0.2 omega1, T = 0.6 K, Delta = omega1
    return build_linearized(normalized_params(), "fixed-power")


@pytest.fixture
def single_mode_model():
    return build_linearized(normalized_params(n_modes=1), "fixed-power")


def random_stable_model(rng, n_modes=2):
    """Draw a red-detuned model; caller filters on stability if needed."""
    kappa = rng.uniform(0.05, 1.0)
    g1 = rng.uniform(0.02, 0.6)
    detuning = rng.uniform(0.2, 2.5)
    ratio = rng.uniform(0.5, 2.5)
    p = normalized_params(omega2_ratio=ratio, kappa=kappa, g1=g1,
                          detuning=detuning, n_modes=n_modes,
                          temperature=rng.uniform(0.0, 2.0))
    return build_linearized(p, "fixed-G")


def assert_close(got, want, rtol, label=""):
    got, want = float(got), float(want)
    err = abs(got - want) / max(abs(want), 1e-300)
    assert err <= rtol, f"{label}: got {got:.6g}, want {want:.6g} (rel err {err:.2e})"
