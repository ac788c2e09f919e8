"""Parameter sweeps: point evaluation, worker-pool execution, CSV output.

Each sweep point is evaluated independently from the immutable
(PhysicalParams, SweepSpec) pair, so serial and parallel execution produce
identical rows; output order is always ascending sweep order.
"""
from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import tolerances
from ._version import __version__
from .errors import OptomechError, ValidationError
from .model import (
    PhysicalParams,
    build_linearized,
    stability_eta,
    stability_spectral,
)
from .entanglement import classify_tripartite, log_negativity, reduce
from .spectral import chi_modified_inv, chi_two_mode_inv
from .steadystate import (
    effective_temperature,
    mode_occupancy,
    steady_covariance,
)

VARIABLES = ("detuning", "omega2_ratio", "temperature", "frequency")
COUPLING_MODES = ("fixed-power", "fixed-G")
OUTPUT_KINDS = ("occupancy", "single_mode", "negativity", "tripartite",
                "susceptibility", "stability")


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    points: int
    coupling_mode: str = "fixed-power"
    outputs: tuple[str, ...] = ("occupancy", "stability")

    def __post_init__(self):
        problems = []
        if self.variable not in VARIABLES:
            problems.append(f"unknown sweep variable {self.variable!r}")
        if self.coupling_mode not in COUPLING_MODES:
            problems.append(f"unknown coupling_mode {self.coupling_mode!r}")
        if self.points < 1:
            problems.append("points must be >= 1")
        if self.points > 1 and not self.start < self.stop:
            problems.append("start must be < stop")
        unknown = [o for o in self.outputs if o not in OUTPUT_KINDS]
        if unknown:
            problems.append(f"unknown outputs {unknown}")
        if not self.outputs:
            problems.append("outputs must be nonempty")
        if problems:
            raise ValidationError(problems)


def validate_outputs(spec: SweepSpec, params: PhysicalParams) -> list[str]:
    """Cross-checks between the sweep request and the model size."""
    problems = []
    n = params.n_modes
    out = set(spec.outputs)
    if spec.variable == "omega2_ratio" and n < 2:
        problems.append("omega2_ratio sweep needs at least two modes")
    if spec.variable == "frequency":
        extra = out - {"susceptibility", "stability"}
        if extra:
            problems.append(
                f"frequency sweeps support only susceptibility/stability, got {sorted(extra)}")
    if "susceptibility" in out:
        if spec.variable != "frequency":
            problems.append("susceptibility output needs variable=frequency")
        if n != 2:
            problems.append("susceptibility output needs exactly two modes")
    if "tripartite" in out and n != 2:
        problems.append("tripartite output needs exactly two modes")
    if "negativity" in out and n > 2:
        problems.append("negativity outputs are defined for at most two modes")
    if "single_mode" in out and not out & {"occupancy", "negativity"}:
        problems.append("single_mode reference needs occupancy or negativity")
    return problems


def columns_for(spec: SweepSpec, n_modes: int) -> list[str]:
    """Deterministic CSV column order for a declared output set."""
    out = set(spec.outputs)
    cols = []
    if "occupancy" in out:
        cols += [f"n_eff_{j + 1}" for j in range(n_modes)]
        cols += [f"T_eff_{j + 1}_K" for j in range(n_modes)]
        if "single_mode" in out:
            cols += ["n_eff_single", "T_eff_single_K"]
    if "negativity" in out:
        cols += ["E_N_m1_cav"]
        if n_modes == 2:
            cols += ["E_N_m2_cav", "E_N_m1_m2"]
        if "single_mode" in out:
            cols += ["E_N_single"]
    if "tripartite" in out:
        cols += ["npt_min_m1", "npt_min_m2", "npt_min_cav",
                 "tripartite_class", "tripartite_ambiguous"]
    if "susceptibility" in out:
        cols += ["gamma_eff_1_over_omega1", "omega_eff_sq_1_over_omega1_sq",
                 "gamma_eff_single_over_omega1",
                 "omega_eff_sq_single_over_omega1_sq"]
    # eta and stable close every header regardless of the requested outputs
    cols += ["eta", "stable"]
    return cols


@dataclass(frozen=True)
class ResultRow:
    sweep_value: float
    values: dict
    warnings: tuple[str, ...] = field(default=())

    def get(self, column: str):
        if column == "sweep_value":
            return self.sweep_value
        return self.values.get(column)


def apply_sweep_value(params: PhysicalParams, spec: SweepSpec,
                      value: float) -> PhysicalParams:
    omega1 = params.modes[0].omega
    if spec.variable == "detuning":
        return dataclasses.replace(params, detuning=value * omega1)
    if spec.variable == "omega2_ratio":
        mode2 = dataclasses.replace(params.modes[1], omega=value * omega1)
        modes = (params.modes[0], mode2) + params.modes[2:]
        return dataclasses.replace(params, modes=modes)
    if spec.variable == "temperature":
        return dataclasses.replace(params, bath_temperature=value)
    return params            # frequency: model unchanged, value is the probe


def _single_mode_params(params: PhysicalParams) -> PhysicalParams:
    return dataclasses.replace(params, modes=(params.modes[0],))


def evaluate_point(params: PhysicalParams, spec: SweepSpec,
                   value: float) -> ResultRow:
    out = set(spec.outputs)
    columns = columns_for(spec, params.n_modes)
    values = {c: None for c in columns}
    warnings: list[str] = []
    try:
        row_stable = _fill_point(params, spec, value, out, values, warnings)
    except OptomechError as exc:
        warnings.append(f"point failed: {exc}")
        row_stable = False
    # a row is only claimed stable if every number on it is finite
    for key, val in values.items():
        if isinstance(val, float) and not math.isfinite(val):
            warnings.append(f"non-finite {key}")
            values[key] = None
            row_stable = False
    values["stable"] = row_stable
    return ResultRow(sweep_value=value, values=values,
                     warnings=tuple(sorted(set(warnings))))


def _fill_point(params, spec, value, out, values, warnings) -> bool:
    p = apply_sweep_value(params, spec, value)
    model = build_linearized(p, spec.coupling_mode)
    warnings.extend(model.warnings)
    stable = stability_spectral(model).stable
    if model.detuning > 0:
        values["eta"] = stability_eta(model)

    need_cov = bool(out & {"occupancy", "negativity", "tripartite"})
    cov = steady_covariance(model) if (need_cov and stable) else None
    n = model.n_modes
    if "occupancy" in out and cov is not None:
        for j in range(n):
            n_eff = mode_occupancy(cov, j)
            values[f"n_eff_{j + 1}"] = n_eff
            values[f"T_eff_{j + 1}_K"] = effective_temperature(n_eff, model.omega[j])
    if "negativity" in out and cov is not None:
        values["E_N_m1_cav"] = log_negativity(reduce(cov, (0, n)))
        if n == 2:
            values["E_N_m2_cav"] = log_negativity(reduce(cov, (1, n)))
            values["E_N_m1_m2"] = log_negativity(reduce(cov, (0, 1)))
    if "tripartite" in out and cov is not None:
        rep = classify_tripartite(cov)
        values["npt_min_m1"], values["npt_min_m2"], values["npt_min_cav"] = rep.min_eigs
        values["tripartite_class"] = rep.class_label
        values["tripartite_ambiguous"] = rep.ambiguous

    if "single_mode" in out:
        p1 = _single_mode_params(p)
        model1 = build_linearized(p1, spec.coupling_mode)
        if stability_spectral(model1).stable:
            cov1 = steady_covariance(model1)
            if "occupancy" in out:
                n_eff = mode_occupancy(cov1, 0)
                values["n_eff_single"] = n_eff
                values["T_eff_single_K"] = effective_temperature(n_eff, model1.omega[0])
            if "negativity" in out:
                values["E_N_single"] = log_negativity(cov1)
        else:
            warnings.append("single-mode reference unstable")

    if "susceptibility" in out:
        omega1 = model.omega[0]
        w = value * omega1
        # gamma_eff = -omega1 Im[chi^-1]/w, omega_eff^2 = w^2 + omega1 Re[chi^-1],
        # both emitted in units of omega1
        inv = complex(chi_two_mode_inv(model, w))
        values["gamma_eff_1_over_omega1"] = -inv.imag / w
        values["omega_eff_sq_1_over_omega1_sq"] = (w ** 2 + omega1 * inv.real) / omega1 ** 2
        model1 = build_linearized(_single_mode_params(p), spec.coupling_mode)
        inv1 = complex(chi_modified_inv(model1, 0, w))
        values["gamma_eff_single_over_omega1"] = -inv1.imag / w
        values["omega_eff_sq_single_over_omega1_sq"] = (w ** 2 + omega1 * inv1.real) / omega1 ** 2
    return stable


def sweep_values(spec: SweepSpec) -> list[float]:
    if spec.points == 1:
        return [spec.start]
    return [float(v) for v in np.linspace(spec.start, spec.stop, spec.points)]


def _point_worker(payload):
    params, spec, value = payload
    return evaluate_point(params, spec, value)


def run_sweep(params: PhysicalParams, spec: SweepSpec,
              workers: int = 1) -> list[ResultRow]:
    """Evaluate every sweep point; rows come back in ascending sweep order
    whether run serially or on a process pool."""
    problems = validate_outputs(spec, params)
    if problems:
        raise ValidationError(problems)
    payloads = [(params, spec, v) for v in sweep_values(spec)]
    if workers <= 1:
        return [_point_worker(p) for p in payloads]
    chunk = max(1, len(payloads) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_point_worker, payloads, chunksize=chunk))


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return value
    return "%.12g" % value


def write_csv(rows, fh, *, spec: SweepSpec, n_modes: int,
              preset: str | None = None) -> None:
    """Emit rows as CSV with a '#' metadata block.

    No timestamps or environment-dependent content: two runs of the same
    inputs must agree byte for byte.
    """
    if not rows:
        raise ValidationError("no rows to write")
    fh.write(f"# optomech {__version__}\n")
    if preset:
        fh.write(f"# preset: {preset}\n")
    fh.write(f"# variable: {spec.variable}\n")
    fh.write(f"# coupling_mode: {spec.coupling_mode}\n")
    fh.write(f"# range: [{_format_cell(spec.start)}, {_format_cell(spec.stop)}] "
             f"points: {spec.points}\n")
    fh.write(f"# outputs: {','.join(spec.outputs)}\n")
    fh.write("# tolerances: pivot=%g lyapunov=%g eig_margin=%g oracle=%g symplectic=%g\n"
             % (tolerances.PIVOT_RELATIVE, tolerances.LYAPUNOV_RESIDUAL_RELATIVE,
                tolerances.EIGENVALUE_SIGN_MARGIN, tolerances.ORACLE_AGREEMENT,
                tolerances.SYMPLECTIC))
    for warning in sorted({w for row in rows for w in row.warnings}):
        fh.write(f"# warning: {warning}\n")
    columns = ["sweep_value"] + columns_for(spec, n_modes)
    fh.write(",".join(columns) + "\n")
    for row in rows:
        fh.write(",".join(_format_cell(row.get(c)) for c in columns) + "\n")
