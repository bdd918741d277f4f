"""Static figures rendered from telemetry CSV files only."""
from __future__ import annotations

from pathlib import Path
from typing import Dict, Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

PLOT_KINDS = ("trajectory", "cross_track", "sideslip", "torque")


def render(columns: Dict[str, np.ndarray], kind: str, out_path: Union[str, Path], title: str = "") -> None:
    if kind not in PLOT_KINDS:
        raise ValueError(f"unknown plot kind {kind!r}; choose from {PLOT_KINDS}")
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    t = columns["t"]
    if kind == "trajectory":
        # North up, East to the right
        ax.plot(columns["y"], columns["x"], label="vehicle")
        ax.set_xlabel("East y [m]")
        ax.set_ylabel("North x [m]")
        ax.set_aspect("equal", adjustable="datalim")
    elif kind == "cross_track":
        ax.plot(t, columns["y_e"], label="y_e")
        ax.axhline(0.0, color="k", lw=0.5)
        ax.set_xlabel("t [s]")
        ax.set_ylabel("cross-track error [m]")
    elif kind == "sideslip":
        for name, style in (("beta", "-"), ("beta_hat", ":"), ("beta_star", "--"), ("beta_sat", "-.")):
            ax.plot(t, columns[name], style, label=name)
        ax.set_xlabel("t [s]")
        ax.set_ylabel("sideslip [rad]")
    else:
        ax.plot(t, columns["u_psi"], label="u_psi")
        ax.set_xlabel("t [s]")
        ax.set_ylabel("autopilot torque [N m]")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="best")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(out_path)
    plt.close(fig)
