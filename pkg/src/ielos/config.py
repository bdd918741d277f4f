"""YAML scenario files.

A file holds a ``scenarios`` mapping from names to scenario blocks. A block
may start from a built-in preset (``preset: case6``) and override any field.
Units are part of every physical key name.

    scenarios:
      slow_ielos:
        preset: case6
        desired_speed_m_per_s: 0.3
        current_m_per_s: {north: 0.0, east: 0.2}
"""
from __future__ import annotations

import math
from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

import yaml

from .guidance import GuidanceParams, Law
from .path import ParametricPath
from .presets import builtin_presets
from .sim import InitialCondition, Scenario
from .vehicle import AutopilotGains, Environment


class ConfigError(ValueError):
    """Invalid scenario file contents."""


class UnknownScenarioError(KeyError):
    pass


_TOP_KEYS = {
    "preset", "law", "path", "guidance", "current_m_per_s", "autopilot", "initial",
    "desired_speed_m_per_s", "duration_s", "dt_s", "perfect_heading",
}
_GUIDANCE_KEYS = {
    "lookahead_m": "delta",
    "kappa_per_s": "kappa",
    "k_per_s": "k",
    "l_per_m_s": "l",
    "td_r_rad_per_s2": "td_r",
    "td_h_s": "td_h",
    "beta_m_rad": "beta_m",
    "eps_den_m_per_s": "eps_den",
}
_AUTOPILOT_KEYS = {"k_psi_per_s": "k_psi", "T_r_s": "T_r", "k_t_Nms_per_rad": "k_t"}
_INITIAL_KEYS = {"x_m": "x", "y_m": "y", "psi_rad": "psi", "w": "w0"}


def _check_keys(block: Mapping, allowed, where: str) -> None:
    if not isinstance(block, Mapping):
        raise ConfigError(f"{where}: expected a mapping, got {type(block).__name__}")
    unknown = set(block) - set(allowed)
    if unknown:
        raise ConfigError(f"{where}: unknown keys {sorted(unknown)}")


def _num(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where}: expected a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise ConfigError(f"{where}: value must be finite")
    return value


def _mapped(block: Mapping, keymap: Mapping[str, str], where: str) -> Dict[str, float]:
    _check_keys(block, keymap, where)
    return {keymap[k]: _num(v, f"{where}.{k}") for k, v in block.items()}


def _path(block: Mapping, where: str) -> ParametricPath:
    kind = block.get("kind") if isinstance(block, Mapping) else None
    if kind == "circle":
        _check_keys(block, {"kind", "radius_m", "center_m"}, where)
        center = block.get("center_m", [0.0, 0.0])
        if not isinstance(center, (list, tuple)) or len(center) != 2:
            raise ConfigError(f"{where}.center_m: expected [x, y]")
        return ParametricPath.circle(_num(block.get("radius_m"), f"{where}.radius_m"),
                                     tuple(_num(c, f"{where}.center_m") for c in center))
    if kind == "line":
        _check_keys(block, {"kind", "origin_m", "heading_rad"}, where)
        origin = block.get("origin_m", [0.0, 0.0])
        if not isinstance(origin, (list, tuple)) or len(origin) != 2:
            raise ConfigError(f"{where}.origin_m: expected [x, y]")
        return ParametricPath.line(tuple(_num(c, f"{where}.origin_m") for c in origin),
                                   _num(block.get("heading_rad", 0.0), f"{where}.heading_rad"))
    raise ConfigError(f"{where}.kind: expected 'circle' or 'line', got {kind!r}")


def scenario_from_block(name: str, block: Mapping, presets: Mapping[str, Scenario]) -> Scenario:
    where = f"scenarios.{name}"
    _check_keys(block, _TOP_KEYS, where)
    if "preset" in block:
        base_name = block["preset"]
        if base_name not in presets:
            raise ConfigError(f"{where}.preset: unknown preset {base_name!r}")
        base = presets[base_name]
    elif "law" not in block:
        raise ConfigError(f"{where}: needs either 'preset' or 'law'")
    else:
        base = None

    fields: Dict[str, Any] = {}
    if "law" in block:
        try:
            fields["law"] = Law(str(block["law"]).upper())
        except ValueError:
            raise ConfigError(f"{where}.law: unknown law {block['law']!r}") from None
    if "path" in block:
        fields["path"] = _path(block["path"], f"{where}.path")
    params = base.params if base else GuidanceParams()
    if "guidance" in block:
        params = replace(params, **_mapped(block["guidance"], _GUIDANCE_KEYS, f"{where}.guidance"))
    fields["params"] = params
    if "current_m_per_s" in block:
        cur = _mapped(block["current_m_per_s"], {"north": "V_N", "east": "V_E"}, f"{where}.current_m_per_s")
        fields["env"] = Environment(**cur)
    if "autopilot" in block:
        gains = base.gains if base else AutopilotGains()
        fields["gains"] = replace(gains, **_mapped(block["autopilot"], _AUTOPILOT_KEYS, f"{where}.autopilot"))
    if "initial" in block:
        ic = base.initial if base else InitialCondition()
        fields["initial"] = replace(ic, **_mapped(block["initial"], _INITIAL_KEYS, f"{where}.initial"))
    for key, attr in (("desired_speed_m_per_s", "desired_speed"), ("duration_s", "duration"), ("dt_s", "dt")):
        if key in block:
            fields[attr] = _num(block[key], f"{where}.{key}")
    if "perfect_heading" in block:
        if not isinstance(block["perfect_heading"], bool):
            raise ConfigError(f"{where}.perfect_heading: expected true/false")
        fields["perfect_heading"] = block["perfect_heading"]

    try:
        if base is not None:
            return replace(base, name=name, **fields)
        return Scenario(name=name, **fields)
    except ValueError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def load_scenarios(path: Optional[Union[str, Path]] = None) -> Dict[str, Scenario]:
    """Built-in presets, extended (or shadowed) by the scenarios in ``path``.

    Raises FileNotFoundError for a missing file and ConfigError for bad contents.
    """
    scenarios = builtin_presets()
    if path is None:
        return scenarios
    text = Path(path).read_text()
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from None
    if doc is None:
        return scenarios
    _check_keys(doc, {"scenarios"}, "top level")
    blocks = doc.get("scenarios") or {}
    _check_keys(blocks, blocks.keys(), "scenarios")
    presets = dict(scenarios)
    for name, block in blocks.items():
        scenarios[str(name)] = scenario_from_block(str(name), block, presets)
    return scenarios


def lookup(scenarios: Mapping[str, Scenario], name: str) -> Scenario:
    try:
        return scenarios[name]
    except KeyError:
        raise UnknownScenarioError(name) from None
