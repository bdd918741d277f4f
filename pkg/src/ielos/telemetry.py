"""Telemetry CSV and key-value metrics files."""
from __future__ import annotations

import csv
import io
import math
from pathlib import Path
from typing import Dict, Union

import numpy as np

from .sim import COLUMN_NAMES, COLUMNS, RunLog, RunMetrics

HEADER = tuple(f"{name}_{unit}" for name, unit in COLUMNS)


class TelemetryError(ValueError):
    """Malformed telemetry file."""


def emit_csv(log: RunLog) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(HEADER)
    data = np.column_stack([log[name] for name in COLUMN_NAMES]) if len(log) else np.empty((0, len(HEADER)))
    for row in data:
        # repr round-trips a float exactly
        writer.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def parse_csv(text: str) -> Dict[str, np.ndarray]:
    """Parse telemetry text into columns keyed by plain names (no unit suffix)."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise TelemetryError("telemetry file is empty") from None
    if tuple(header) != HEADER:
        raise TelemetryError(f"unexpected telemetry header: {header}")
    rows = []
    for lineno, row in enumerate(reader, start=2):
        if len(row) != len(HEADER):
            raise TelemetryError(f"line {lineno}: expected {len(HEADER)} fields, got {len(row)}")
        try:
            rows.append([float(v) for v in row])
        except ValueError as exc:
            raise TelemetryError(f"line {lineno}: {exc}") from None
    data = np.array(rows, dtype=float).reshape(len(rows), len(HEADER))
    return {name: data[:, i] for i, name in enumerate(COLUMN_NAMES)}


def write_csv(log: RunLog, path: Union[str, Path]) -> None:
    Path(path).write_text(emit_csv(log))


def read_csv(path: Union[str, Path]) -> Dict[str, np.ndarray]:
    return parse_csv(Path(path).read_text())


def emit_metrics(m: RunMetrics, log: RunLog) -> str:
    lines = [f"{key}={_fmt(value)}" for key, value in m.as_dict().items()]
    t_div = "none" if log.divergence_time is None else repr(log.divergence_time)
    lines.append(f"divergence_time_s={t_div}")
    lines.append(f"rows={len(log)}")
    return "\n".join(lines) + "\n"


def parse_metrics(text: str) -> Dict[str, str]:
    out = {}
    for line in text.splitlines():
        if line.strip():
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value) if math.isfinite(value) else str(value)
    return str(value)
