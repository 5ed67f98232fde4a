"""Accuracy-versus-cost sweeps over the benchmark problems, and their CSV/JSON output."""

import csv
import io
import math
import os
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from . import __version__
from .coefficients import DEFAULT_SERIES_SWITCH, MethodFamily, MethodKind
from .errors import ConfigInvalid, InsufficientData, IoFailure, PhaseFitError
from .problems import (NONLINEAR_REFERENCE, make_nonlinear_problem, make_resonance_problem,
                       run_nonlinear)

METHODS = tuple(kind.value for kind in MethodKind)
PROBLEMS = ("resonance", "nonlinear")
FORMATS = ("csv", "json")
CSV_FIELDS = ("method", "problem", "energy", "n_steps", "h", "function_evals", "error",
              "neg_log10_error")

# function evaluations 6 n span roughly 10^3.5 .. 10^5
DEFAULT_RESONANCE_STEPS = (750, 1000, 1500, 2000, 3000, 4000, 6000, 8000, 12000, 16000)
DEFAULT_NONLINEAR_STEPS = (1000, 1500, 2000, 3000, 4000, 6000, 8000, 12000, 16000)


@dataclass(frozen=True)
class SweepConfig:
    problem: str
    methods: tuple = METHODS
    step_counts: tuple = ()
    energy: Optional[float] = None
    series_switch_v: float = DEFAULT_SERIES_SWITCH
    fmt: str = "csv"
    output: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "methods", tuple(self.methods))
        steps = tuple(self.step_counts) or (
            DEFAULT_RESONANCE_STEPS if self.problem == "resonance" else DEFAULT_NONLINEAR_STEPS)
        object.__setattr__(self, "step_counts", steps)

    @classmethod
    def from_mapping(cls, data) -> "SweepConfig":
        known = {"problem", "methods", "step_counts", "energy", "series_switch_v", "fmt", "output"}
        unknown = set(data) - known
        if unknown:
            raise ConfigInvalid(f"unknown config keys: {sorted(unknown)}")
        if "problem" not in data:
            raise ConfigInvalid("config needs a 'problem' entry")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    def validate(self):
        if self.problem not in PROBLEMS:
            raise ConfigInvalid(f"problem must be one of {PROBLEMS}, got {self.problem!r}")
        if not self.methods:
            raise ConfigInvalid("empty method list")
        bad = [m for m in self.methods if m not in METHODS]
        if bad:
            raise ConfigInvalid(f"unknown methods {bad}; choose from {METHODS}")
        if len(set(self.methods)) != len(self.methods):
            raise ConfigInvalid("duplicate methods")
        steps = self.step_counts
        if len(steps) < 2:
            raise ConfigInvalid("need at least 2 step counts")
        if any(not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 1 for n in steps):
            raise ConfigInvalid(f"step counts must be positive integers, got {steps}")
        if any(b <= a for a, b in zip(steps, steps[1:])):
            raise ConfigInvalid(f"step counts must be strictly increasing, got {steps}")
        if self.fmt not in FORMATS:
            raise ConfigInvalid(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if not 0.0 < self.series_switch_v <= 0.2:
            raise ConfigInvalid(f"series switch must lie in (0, 0.2], got {self.series_switch_v}")
        if self.problem == "resonance":
            if self.energy is None or not self.energy > 50:
                raise ConfigInvalid(f"resonance needs an energy E > 50, got {self.energy!r}")
            problem = make_resonance_problem(self.energy)
            try:
                for n in steps:
                    problem.sample_index(n)
            except ConfigInvalid as err:
                raise ConfigInvalid(f"step count too small: {err}") from err
        elif self.energy is not None:
            raise ConfigInvalid("the nonlinear problem takes no energy")


@dataclass
class CurvePoint:
    n_steps: int
    h: float
    function_evals: int
    error: float
    note: str = ""

    @property
    def neg_log10_error(self) -> float:
        if math.isnan(self.error):
            return math.nan
        if self.error == 0.0:
            return math.inf
        return -math.log10(self.error)


@dataclass
class EfficiencyCurve:
    method: str
    problem: str
    energy: Optional[float]
    points: List[CurvePoint] = field(default_factory=list)

    def records(self):
        return [{
            "method": self.method,
            "problem": self.problem,
            "energy": self.energy,
            "n_steps": p.n_steps,
            "h": p.h,
            "function_evals": p.function_evals,
            "error": p.error,
            "neg_log10_error": p.neg_log10_error,
        } for p in self.points]

    @property
    def gaps(self):
        return [p for p in self.points if p.note]


def run_point(cfg: SweepConfig, method: str, n_steps: int) -> CurvePoint:
    """One run; solver failures become a gap point with ``error = nan``."""
    family = MethodFamily(method, cfg.series_switch_v)
    if cfg.problem == "resonance":
        problem = make_resonance_problem(cfg.energy)
        h = problem.x_end / n_steps
    else:
        problem = make_nonlinear_problem()
        h = (problem.x_end - problem.x0) / n_steps
    stages = family.tableau(0.0).s
    problem_dimension = 2  # both benchmarks are scalar second-order equations
    try:
        if cfg.problem == "resonance":
            run, shift = problem.solve(family, n_steps)
            error = shift.error_vs_reference
        else:
            run, error = run_nonlinear(family, n_steps)
    except (PhaseFitError, FloatingPointError, OverflowError) as err:
        return CurvePoint(n_steps, h, stages * problem_dimension * n_steps, math.nan,
                          f"{type(err).__name__}: {err}")
    return CurvePoint(n_steps, run.h, run.function_evaluations, error)


def run_sweep(cfg: SweepConfig) -> List[EfficiencyCurve]:
    cfg.validate()
    energy = cfg.energy if cfg.problem == "resonance" else None
    curves = []
    for method in cfg.methods:
        curve = EfficiencyCurve(method, cfg.problem, energy)
        curve.points = [run_point(cfg, method, n) for n in cfg.step_counts]
        curves.append(curve)
    return curves


def estimate_order(curve: EfficiencyCurve) -> float:
    """Least-squares slope of log(error) against log(h)."""
    pts = [p for p in curve.points if math.isfinite(p.error) and p.error > 0.0]
    if len(pts) < 2 or len({p.h for p in pts}) < 2:
        raise InsufficientData(f"{curve.method}: need >= 2 points with finite nonzero error")
    log_h = np.log([p.h for p in pts])
    log_e = np.log([p.error for p in pts])
    slope, _ = np.polyfit(log_h, log_e, 1)
    return float(slope)


def sweep_metadata(cfg: SweepConfig) -> dict:
    meta = {
        "phasefit_rk_version": __version__,
        "problem": cfg.problem,
        "series_switch_v": cfg.series_switch_v,
        "step_counts": " ".join(str(n) for n in cfg.step_counts),
        "step_grid_note": "library defaults or user supplied",
        "function_evals": "stages(3) x dimension(2) x n_steps",
    }
    if cfg.problem == "resonance":
        problem = make_resonance_problem(cfg.energy)
        meta.update({
            "energy": repr(cfg.energy),
            "omega_schedule": problem.schedule.describe(),
            "y_prime_0": repr(problem.slope),
            "samples": f"x_i = last grid point <= {problem.sample_upper} (>= {problem.sample_lower}); "
                       f"x_i+1 = {problem.x_end}",
            "error": "|delta - pi/2|, delta reduced to [0, pi)",
        })
    else:
        meta.update({
            "omega_schedule": make_nonlinear_problem().frequency_schedule.describe(),
            "error": f"|y(20 pi) - {NONLINEAR_REFERENCE!r}|",
        })
    return meta


def format_number(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.17g}"


def to_csv(curves, metadata=None) -> str:
    out = io.StringIO()
    for key, value in (metadata or {}).items():
        out.write(f"# {key}: {value}\n")
    for curve in curves:
        for p in curve.gaps:
            out.write(f"# gap: method={curve.method} n_steps={p.n_steps} reason={p.note}\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for curve in curves:
        for rec in curve.records():
            writer.writerow([rec["method"], rec["problem"]]
                            + [format_number(rec[k]) for k in CSV_FIELDS[2:]])
    return out.getvalue()


def _json_value(value):
    if isinstance(value, str):
        return '"' + value.replace("\\", "\\\\").replace('"', '\\"') + '"'
    text = format_number(value)
    return "null" if text in ("", "nan", "inf", "-inf") else text


def to_json(curves) -> str:
    rows = []
    for curve in curves:
        for rec in curve.records():
            body = ", ".join(f'"{k}": {_json_value(rec[k])}' for k in CSV_FIELDS)
            rows.append("  {" + body + "}")
    return "[\n" + ",\n".join(rows) + "\n]\n"


def emit(curves, fmt="csv", path=None, metadata=None) -> str:
    """Render curves and write them to ``path`` (or just return the text when path is None)."""
    if fmt == "csv":
        text = to_csv(curves, metadata)
    elif fmt == "json":
        text = to_json(curves)
    else:
        raise ConfigInvalid(f"format must be one of {FORMATS}, got {fmt!r}")
    if path is not None:
        try:
            with open(os.fspath(path), "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as err:
            raise IoFailure(f"cannot write {path}: {err}") from err
    return text


def _parse_number(text, integer=False):
    if text == "":
        return None
    return int(text) if integer else float(text)


def read_csv(source):
    """Parse CSV written by :func:`emit` back into records (metadata lines skipped)."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(os.fspath(source), encoding="utf-8") as fh:
            text = fh.read()
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.DictReader(lines)
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected columns {reader.fieldnames}")
    records = []
    for row in reader:
        records.append({
            "method": row["method"],
            "problem": row["problem"],
            "energy": _parse_number(row["energy"]),
            "n_steps": _parse_number(row["n_steps"], integer=True),
            "h": _parse_number(row["h"]),
            "function_evals": _parse_number(row["function_evals"], integer=True),
            "error": _parse_number(row["error"]),
            "neg_log10_error": _parse_number(row["neg_log10_error"]),
        })
    return records
