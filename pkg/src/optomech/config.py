"""YAML experiment configs -> (PhysicalParams, SweepSpec).

Schema (units in key suffixes; frequencies in Hz are multiplied by 2 pi):

    modes:                       # first entry is the reference mode
      - frequency_hz: 1.0e7      # later modes may use frequency_over_omega1
        damping_hz: 100.0        # or quality_factor (exactly one)
        mass_ng: 250.0
        overlap: 1.0             # optional, default 1
    cavity:
      length_mm: 1.0
      kappa_over_omega1: 0.2     # or kappa_hz, or finesse (exactly one)
    laser:
      wavelength_nm: 1064.0
      g1_over_omega1: 0.2        # or power_mw (exactly one)
    detuning:
      kind: effective            # or bare (bare needs the power_mw path)
      value_over_omega1: 1.0     # or value_hz (exactly one)
      reference_over_omega1: 1.0 # optional; coupling reference for sweeps
    bath:
      temperature_k: 0.6
    sweep:
      variable: detuning         # detuning | omega2_ratio | temperature | frequency
      start: 0.5
      stop: 2.5
      points: 201
      coupling_mode: fixed-power # optional
      outputs: [occupancy, single_mode, stability]   # optional

Validation collects every problem before raising.
"""
from __future__ import annotations

import math

import yaml

from .errors import ParseError, ValidationError
from .model import MechMode, PhysicalParams, TWO_PI
from .sweep import (
    COUPLING_MODES,
    OUTPUT_KINDS,
    VARIABLES,
    SweepSpec,
    validate_outputs,
)

_SECTIONS = ("modes", "cavity", "laser", "detuning", "bath", "sweep")


def parse_config(text: str):
    try:
        doc = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark
        line = mark.line + 1 if mark else None
        column = mark.column + 1 if mark else None
        raise ParseError(f"not valid YAML: {exc.problem}", line, column) from exc
    except yaml.YAMLError as exc:
        raise ParseError(f"not valid YAML: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top level must be a mapping")
    return doc


def load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return build_config(parse_config(fh.read()))


class _Reader:
    """Pulls typed values out of a mapping, recording problems instead of
    raising, so one pass reports everything wrong with a config."""

    def __init__(self, problems):
        self.problems = problems

    def number(self, mapping, ctx, key, *, required=False, default=None,
               minimum=None, strict_min=None):
        if key not in mapping:
            if required:
                self.problems.append(f"{ctx}.{key}: missing")
            return default
        val = mapping[key]
        if isinstance(val, str):
            # YAML 1.1 reads 1.0e7 (no exponent sign) as a string; accept it
            try:
                val = float(val)
            except ValueError:
                pass
        if isinstance(val, bool) or not isinstance(val, (int, float)):
            self.problems.append(f"{ctx}.{key}: expected a number, got {val!r}")
            return default
        val = float(val)
        if not math.isfinite(val):
            self.problems.append(f"{ctx}.{key}: must be finite")
            return default
        if minimum is not None and val < minimum:
            self.problems.append(f"{ctx}.{key}: must be >= {minimum}")
            return default
        if strict_min is not None and val <= strict_min:
            self.problems.append(f"{ctx}.{key}: must be > {strict_min}")
            return default
        return val

    def integer(self, mapping, ctx, key, *, required=False, default=None,
                minimum=None):
        if key not in mapping:
            if required:
                self.problems.append(f"{ctx}.{key}: missing")
            return default
        val = mapping[key]
        if isinstance(val, bool) or not isinstance(val, int):
            self.problems.append(f"{ctx}.{key}: expected an integer, got {val!r}")
            return default
        if minimum is not None and val < minimum:
            self.problems.append(f"{ctx}.{key}: must be >= {minimum}")
            return default
        return val

    def exactly_one(self, mapping, ctx, keys):
        present = [k for k in keys if k in mapping]
        if len(present) != 1:
            self.problems.append(
                f"{ctx}: exactly one of {'/'.join(keys)} required, "
                f"got {present or 'none'}")
            return None
        return present[0]

    def section(self, doc, name, required=True):
        sec = doc.get(name)
        if sec is None:
            if required:
                self.problems.append(f"{name}: section missing")
            return {}
        if not isinstance(sec, dict):
            self.problems.append(f"{name}: must be a mapping")
            return {}
        return sec

    def no_unknown(self, mapping, ctx, known):
        for key in mapping:
            if key not in known:
                self.problems.append(f"{ctx}.{key}: unknown key")


def build_config(doc: dict) -> tuple[PhysicalParams, SweepSpec]:
    problems: list[str] = []
    r = _Reader(problems)
    for key in doc:
        if key not in _SECTIONS:
            problems.append(f"{key}: unknown section")

    # --- modes ------------------------------------------------------------
    raw_modes = doc.get("modes")
    modes = []
    omega1 = None
    if not isinstance(raw_modes, list) or not raw_modes:
        problems.append("modes: need a nonempty list of mode mappings")
        raw_modes = []
    for i, raw in enumerate(raw_modes):
        ctx = f"modes[{i}]"
        if not isinstance(raw, dict):
            problems.append(f"{ctx}: must be a mapping")
            continue
        r.no_unknown(raw, ctx, ("frequency_hz", "frequency_over_omega1",
                                "damping_hz", "quality_factor", "mass_ng",
                                "overlap"))
        if i == 0:
            freq_key = "frequency_hz"
            if "frequency_hz" not in raw:
                problems.append(f"{ctx}.frequency_hz: missing "
                                "(first mode sets the reference frequency)")
        else:
            freq_key = r.exactly_one(raw, ctx,
                                     ("frequency_hz", "frequency_over_omega1"))
        omega = None
        if freq_key == "frequency_hz":
            f = r.number(raw, ctx, "frequency_hz", required=True, strict_min=0.0)
            omega = TWO_PI * f if f is not None else None
        elif freq_key == "frequency_over_omega1":
            ratio = r.number(raw, ctx, "frequency_over_omega1", required=True,
                             strict_min=0.0)
            if ratio is not None and omega1 is not None:
                omega = ratio * omega1
        if i == 0 and omega is not None:
            omega1 = omega

        damp_key = r.exactly_one(raw, ctx, ("damping_hz", "quality_factor"))
        gamma = quality = None
        if damp_key == "damping_hz":
            d = r.number(raw, ctx, "damping_hz", required=True, minimum=0.0)
            gamma = TWO_PI * d if d is not None else None
        elif damp_key == "quality_factor":
            quality = r.number(raw, ctx, "quality_factor", required=True,
                               strict_min=0.0)
        mass = r.number(raw, ctx, "mass_ng", required=True, strict_min=0.0)
        overlap = r.number(raw, ctx, "overlap", default=1.0, minimum=0.0)
        if overlap is not None and overlap > 1.0:
            problems.append(f"{ctx}.overlap: must be <= 1")
            overlap = None
        if None in (omega, mass, overlap) or (gamma is None and quality is None):
            continue
        modes.append(MechMode(omega=omega, mass=mass * 1e-12, gamma=gamma,
                              quality_factor=quality, overlap=overlap))

    # --- cavity -----------------------------------------------------------
    cavity = r.section(doc, "cavity")
    r.no_unknown(cavity, "cavity", ("length_mm", "finesse", "kappa_over_omega1",
                                    "kappa_hz"))
    length = r.number(cavity, "cavity", "length_mm", required=True, strict_min=0.0)
    kappa = finesse = None
    kappa_key = r.exactly_one(cavity, "cavity",
                              ("finesse", "kappa_over_omega1", "kappa_hz"))
    if kappa_key == "finesse":
        finesse = r.number(cavity, "cavity", "finesse", strict_min=1.0)
    elif kappa_key == "kappa_over_omega1":
        ratio = r.number(cavity, "cavity", "kappa_over_omega1", strict_min=0.0)
        if ratio is not None and omega1 is not None:
            kappa = ratio * omega1
    elif kappa_key == "kappa_hz":
        f = r.number(cavity, "cavity", "kappa_hz", strict_min=0.0)
        kappa = TWO_PI * f if f is not None else None

    # --- laser ------------------------------------------------------------
    laser = r.section(doc, "laser")
    r.no_unknown(laser, "laser", ("wavelength_nm", "power_mw", "g1_over_omega1"))
    wavelength = r.number(laser, "laser", "wavelength_nm", required=True,
                          strict_min=0.0)
    power = g1 = None
    drive_key = r.exactly_one(laser, "laser", ("power_mw", "g1_over_omega1"))
    if drive_key == "power_mw":
        p = r.number(laser, "laser", "power_mw", strict_min=0.0)
        power = p * 1e-3 if p is not None else None
    elif drive_key == "g1_over_omega1":
        ratio = r.number(laser, "laser", "g1_over_omega1", strict_min=0.0)
        if ratio is not None and omega1 is not None:
            g1 = ratio * omega1

    # --- detuning ---------------------------------------------------------
    det = r.section(doc, "detuning")
    r.no_unknown(det, "detuning", ("kind", "value_over_omega1", "value_hz",
                                   "reference_over_omega1", "reference_hz"))
    kind = det.get("kind", "effective")
    if kind not in ("effective", "bare"):
        problems.append(f"detuning.kind: must be effective or bare, got {kind!r}")
        kind = "effective"
    detuning = None
    val_key = r.exactly_one(det, "detuning", ("value_over_omega1", "value_hz"))
    if val_key == "value_over_omega1":
        ratio = r.number(det, "detuning", "value_over_omega1")
        if ratio is not None and omega1 is not None:
            detuning = ratio * omega1
    elif val_key == "value_hz":
        f = r.number(det, "detuning", "value_hz")
        detuning = TWO_PI * f if f is not None else None
    reference = None
    if "reference_over_omega1" in det and "reference_hz" in det:
        problems.append("detuning: at most one of reference_over_omega1/reference_hz")
    elif "reference_over_omega1" in det:
        ratio = r.number(det, "detuning", "reference_over_omega1")
        if ratio is not None and omega1 is not None:
            reference = ratio * omega1
    elif "reference_hz" in det:
        f = r.number(det, "detuning", "reference_hz")
        reference = TWO_PI * f if f is not None else None
    if kind == "bare" and drive_key == "g1_over_omega1":
        problems.append("detuning.kind=bare requires the laser power_mw entry path")

    # --- bath -------------------------------------------------------------
    bath = r.section(doc, "bath")
    r.no_unknown(bath, "bath", ("temperature_k",))
    temperature = r.number(bath, "bath", "temperature_k", required=True,
                           minimum=0.0)

    # --- sweep ------------------------------------------------------------
    sweep_sec = r.section(doc, "sweep")
    r.no_unknown(sweep_sec, "sweep", ("variable", "start", "stop", "points",
                                      "coupling_mode", "outputs"))
    variable = sweep_sec.get("variable")
    if variable not in VARIABLES:
        problems.append(f"sweep.variable: one of {VARIABLES} required, "
                        f"got {variable!r}")
    start = r.number(sweep_sec, "sweep", "start", required=True)
    stop = r.number(sweep_sec, "sweep", "stop", required=True)
    points = r.integer(sweep_sec, "sweep", "points", required=True, minimum=2)
    coupling_mode = sweep_sec.get("coupling_mode", "fixed-power")
    if coupling_mode not in COUPLING_MODES:
        problems.append(f"sweep.coupling_mode: one of {COUPLING_MODES}, "
                        f"got {coupling_mode!r}")
    outputs = sweep_sec.get("outputs")
    if outputs is None:
        outputs = (("susceptibility", "stability") if variable == "frequency"
                   else ("occupancy", "stability"))
    elif (not isinstance(outputs, list) or not outputs
          or any(o not in OUTPUT_KINDS for o in outputs)):
        problems.append(f"sweep.outputs: list drawn from {OUTPUT_KINDS}")
        outputs = ("stability",)
    if start is not None and stop is not None and not start < stop:
        problems.append("sweep: start must be < stop")
    if variable == "temperature" and start is not None and start < 0:
        problems.append("sweep: temperature sweeps need start >= 0")

    if problems:
        raise ValidationError(problems)

    try:
        params = PhysicalParams(
            modes=tuple(modes),
            cavity_length=length * 1e-3,
            wavelength=wavelength * 1e-9,
            bath_temperature=temperature,
            detuning=detuning,
            detuning_kind=kind,
            finesse=finesse,
            kappa=kappa,
            input_power=power,
            coupling_g1=g1,
            reference_detuning=reference,
        )
        spec = SweepSpec(
            variable=variable,
            start=start,
            stop=stop,
            points=points,
            coupling_mode=coupling_mode,
            outputs=tuple(outputs),
        )
    except ValidationError:
        raise
    cross = validate_outputs(spec, params)
    if cross:
        raise ValidationError(cross)
    return params, spec
