"""Steady-state simulator for one driven cavity mode coupled to N mechanical
modes: covariance matrices, cooling, susceptibilities, and Gaussian
entanglement, plus a sweep CLI that reproduces the reference figure families.
"""
from ._version import __version__
from .model import (
    CmRelativeTransform,
    LinearizedModel,
    MechMode,
    PhysicalParams,
    SemiclassicalState,
    StabilityReport,
    build_diffusion,
    build_drift,
    build_linearized,
    cavity_frequency,
    cm_relative,
    effective_coupling,
    kappa_from_finesse,
    semiclassical_solve,
    stability_eta,
    stability_spectral,
    thermal_occupancy,
)
from .steadystate import (
    PhysicalityReport,
    SteadyStateReport,
    effective_temperature,
    mode_occupancy,
    oracle_covariance,
    physicality_check,
    steady_covariance,
    steady_report,
    symplectic_form,
)
from .spectral import (
    ComplexResponse,
    EffectiveOscillator,
    chi_bare,
    chi_modified,
    chi_two_mode,
    effective_oscillator,
    gamma_eff_interference,
    net_cooling_rate,
    z_response,
)
from .entanglement import (
    BipartiteCM,
    TripartiteClassReport,
    classify_tripartite,
    log_negativity,
    npt_test,
    reduce,
)
from .sweep import (
    ResultRow,
    SweepSpec,
    columns_for,
    evaluate_point,
    run_sweep,
    write_csv,
)
from .config import build_config, load_config, parse_config
from .presets import PRESETS, Preset, get_preset

__all__ = [name for name in dir() if not name.startswith("_")]
