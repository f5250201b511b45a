"""Parameter sweeps over one axis, with CSV and SVG emission.

A sweep evaluates one target (analytic noninteracting channel QFI,
interacting channel QFI, or the ground-state protocol QFI) on a uniform
grid of a single axis while every other parameter stays fixed. Points are
independent, so they may be evaluated by a thread pool; results are
gathered in grid order and identical specs produce byte-identical CSVs
regardless of worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np

from .analytic import cqfi_noninteracting
from .dynamics import cqfi_upper_bound, dynamical_generator
from .errors import NumericsError
from .modes import SystemParams, with_axis_value
from .plotting import render_svg
from .protocols import ProtocolSpec, run_protocol
from .spin_core import build_spin_operators

__all__ = [
    "SweepSpec",
    "SweepResult",
    "SweepPointError",
    "run_sweep",
    "emit_csv",
    "emit_plot",
    "load_csv",
]

TARGETS = ("cqfi_noninteracting", "cqfi_interacting", "protocol_qfi")
AXES = ("g", "delta_eps", "t", "lambda", "delta_a")


class SweepPointError(Exception):
    """One grid point failed; carries the offending parameter tuple."""


@dataclass(frozen=True)
class SweepSpec:
    target: Literal["cqfi_noninteracting", "cqfi_interacting", "protocol_qfi"]
    axis: Literal["g", "delta_eps", "t", "lambda", "delta_a"]
    axis_min: float
    axis_max: float
    steps: int
    params: SystemParams
    theta: float = 0.5
    state_kind: str = "fragmented"
    workers: int = 1
    log_scale: bool = False
    csv_path: str | None = None
    svg_path: str | None = None

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; expected one of {TARGETS}")
        if self.axis not in AXES:
            raise ValueError(f"unknown axis {self.axis!r}; expected one of {AXES}")
        if self.steps < 2:
            raise ValueError(f"a sweep needs at least 2 steps, got {self.steps}")
        if not self.axis_min < self.axis_max:
            raise ValueError(
                f"axis range must be increasing, got [{self.axis_min!r}, {self.axis_max!r}]"
            )
        if self.workers < 1:
            raise ValueError("workers must be at least 1")

    def grid(self) -> np.ndarray:
        return np.linspace(self.axis_min, self.axis_max, self.steps)


@dataclass(frozen=True)
class SweepResult:
    """Grid values, computed target values, per-row Heisenberg bound and,
    for protocol sweeps, the pure phase-shift baseline; metadata echoes
    the fixed parameters."""

    axis: str
    target: str
    axis_values: np.ndarray
    values: np.ndarray
    bounds: np.ndarray
    ideal: np.ndarray | None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        cols = [self.axis_values, self.values, self.bounds]
        if self.ideal is not None:
            cols.append(self.ideal)
        for col in cols:
            if not np.all(np.isfinite(col)):
                raise NumericsError("sweep produced non-finite values")
            if col.shape != self.axis_values.shape:
                raise ValueError("sweep columns must share one length")


def _evaluate_point(spec: SweepSpec, ops, value: float) -> tuple[float, float, float | None]:
    p = with_axis_value(spec.params, spec.axis, value)
    bound = cqfi_upper_bound(p.n_particles, p.t)
    if spec.target == "cqfi_noninteracting":
        return cqfi_noninteracting(p.n_particles, p.lambda_acc, p.delta_eps, p.t), bound, None
    if spec.target == "cqfi_interacting":
        return dynamical_generator(p, ops).cqfi, bound, None
    res = run_protocol(ProtocolSpec(params=p, theta=spec.theta, state_kind=spec.state_kind), ops)
    return res.qfi, bound, res.ideal_qfi_baseline


def run_sweep(spec: SweepSpec) -> SweepResult:
    """Evaluate the target over the grid; any point failure aborts the sweep."""
    ops = build_spin_operators(spec.params.n_particles)
    grid = spec.grid()

    def point(value) -> tuple[float, float, float | None]:
        value = float(value)
        try:
            return _evaluate_point(spec, ops, value)
        except Exception as exc:
            raise SweepPointError(
                f"sweep point failed at {spec.axis} = {value!r} "
                f"(target = {spec.target}, fixed = {spec.params})"
            ) from exc

    if spec.workers == 1:
        rows = [point(v) for v in grid]
    else:
        with ThreadPoolExecutor(max_workers=spec.workers) as pool:
            rows = list(pool.map(point, grid))

    values = np.array([r[0] for r in rows])
    bounds = np.array([r[1] for r in rows])
    ideal = None
    if spec.target == "protocol_qfi":
        ideal = np.array([r[2] for r in rows])

    p = spec.params
    metadata = {
        "target": spec.target,
        "axis": spec.axis,
        "steps": spec.steps,
        "n_particles": p.n_particles,
        "g": p.g,
        "delta_eps": p.delta_eps,
        "delta_a": p.delta_a,
        "eta": p.eta,
        "xi": p.xi,
        "lambda": p.lambda_acc,
        "t": p.t,
        "log_scale": spec.log_scale,
    }
    # The swept axis is not a fixed parameter; keep it out of the echo.
    metadata.pop(spec.axis, None)
    if spec.target == "protocol_qfi":
        metadata["theta"] = spec.theta
        metadata["state_kind"] = spec.state_kind
    return SweepResult(
        axis=spec.axis,
        target=spec.target,
        axis_values=grid,
        values=values,
        bounds=bounds,
        ideal=ideal,
        metadata=metadata,
    )


def _fmt_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def emit_csv(result: SweepResult, path: str) -> None:
    """Write the sweep as UTF-8 CSV: '#' metadata lines, header, 12-digit rows."""
    if not path:
        raise ValueError("CSV path must be a non-empty string")
    lines = [f"# {key} = {_fmt_value(val)}" for key, val in result.metadata.items()]
    header = [result.axis, "value", "bound"]
    columns = [result.axis_values, result.values, result.bounds]
    if result.ideal is not None:
        header.append("ideal")
        columns.append(result.ideal)
    lines.append(",".join(header))
    for row in zip(*columns):
        lines.append(",".join(f"{v:.12g}" for v in row))
    text = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def load_csv(path: str) -> SweepResult:
    """Read back a sweep CSV produced by emit_csv."""
    metadata: dict = {}
    header: list[str] | None = None
    rows: list[list[float]] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, val = line[1:].partition("=")
                metadata[key.strip()] = _parse_meta(val.strip())
            elif header is None:
                header = [c.strip() for c in line.split(",")]
            else:
                rows.append([float(c) for c in line.split(",")])
    if header is None or not rows:
        raise ValueError(f"no sweep data found in {path!r}")
    data = np.array(rows)
    ideal = data[:, 3] if "ideal" in header else None
    return SweepResult(
        axis=header[0],
        target=str(metadata.get("target", "value")),
        axis_values=data[:, 0],
        values=data[:, 1],
        bounds=data[:, 2],
        ideal=ideal,
        metadata=metadata,
    )


def _parse_meta(raw: str):
    if raw in ("true", "false"):
        return raw == "true"
    for cast in (int, float):
        try:
            return cast(raw)
        except ValueError:
            continue
    return raw


def emit_plot(result: SweepResult, path: str, log_scale: bool | None = None) -> None:
    """Write the sweep as a static SVG with the Heisenberg bound as reference."""
    if not path:
        raise ValueError("SVG path must be a non-empty string")
    if log_scale is None:
        log_scale = bool(result.metadata.get("log_scale", False))
    series = {"value": list(result.values), "bound": list(result.bounds)}
    if result.ideal is not None:
        series["ideal"] = list(result.ideal)
    svg = render_svg(
        list(result.axis_values),
        series,
        x_label=result.axis,
        y_label=result.target,
        log_scale=log_scale,
        title=_title(result.metadata),
    )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(svg)


def _title(metadata: dict) -> str:
    keys = ("n_particles", "delta_eps", "lambda", "t")
    bits = [f"{k}={_fmt_value(metadata[k])}" for k in keys if k in metadata]
    if "state_kind" in metadata:
        bits.append(str(metadata["state_kind"]))
    return ", ".join(bits)
