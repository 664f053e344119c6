"""Figure rendering.

Each report command can render its tables as PNG files next to the
delimited output. Recession ranges are drawn as gray bands; slack and
tight stretches are shaded on the rate charts. Uses the Agg backend so
rendering works headless.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .beveridge import BeveridgeFit
from .efficiency import EfficiencyPoint, MarketState
from .ingest import RecessionCalendar
from .series import PairedSeries

SLACK_COLOR = "#ccb3e6"
TIGHT_COLOR = "#f5c684"
RECESSION_COLOR = "0.85"


def _time_axis(points: list[EfficiencyPoint]) -> np.ndarray:
    return np.array([pt.period.year_fraction() for pt in points])


def _shade_recessions(ax, recessions: RecessionCalendar, lo: float, hi: float) -> None:
    for r in recessions.ranges:
        left = r.start.year_fraction()
        right = r.end.year_fraction()
        if right < lo or left > hi:
            continue
        ax.axvspan(max(left, lo), min(right, hi), color=RECESSION_COLOR, zorder=0)


def _shade_states(ax, t: np.ndarray, points: list[EfficiencyPoint]) -> None:
    u = np.array([pt.u for pt in points])
    v = np.array([pt.v for pt in points])
    ax.fill_between(t, u, v, where=u >= v, color=SLACK_COLOR, alpha=0.6, zorder=1)
    ax.fill_between(t, u, v, where=v >= u, color=TIGHT_COLOR, alpha=0.8, zorder=1)


def _finish(fig, ax, title: str, ylabel: str, path: Path) -> None:
    ax.set_title(title)
    ax.set_ylabel(ylabel)
    ax.margins(x=0)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_analysis(
    points: list[EfficiencyPoint],
    recessions: RecessionCalendar,
    out_dir: Path,
    era: str,
) -> list[Path]:
    """Rates, tightness, efficient rate, and gap charts for one era."""
    t = _time_axis(points)
    lo, hi = float(t[0]), float(t[-1])
    paths = []

    fig, ax = plt.subplots(figsize=(9, 4))
    _shade_recessions(ax, recessions, lo, hi)
    _shade_states(ax, t, points)
    ax.plot(t, [100 * pt.u for pt in points], color="#6a1fb0", lw=1.4, label="unemployment")
    ax.plot(t, [100 * pt.v for pt in points], color="#d17800", lw=1.4, label="vacancies")
    ax.legend(loc="upper left", frameon=False)
    path = out_dir / f"fig_{era}_rates.png"
    _finish(fig, ax, f"Unemployment and vacancy rates ({era})", "percent of labor force", path)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(9, 4))
    _shade_recessions(ax, recessions, lo, hi)
    ax.plot(t, [pt.theta for pt in points], color="#00589c", lw=1.4)
    ax.axhline(1.0, color="k", lw=0.8, ls="--")
    path = out_dir / f"fig_{era}_tightness.png"
    _finish(fig, ax, f"Labor-market tightness ({era})", "vacancies per jobseeker", path)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(9, 4))
    _shade_recessions(ax, recessions, lo, hi)
    ax.plot(t, [100 * pt.u for pt in points], color="0.6", lw=1.0, label="actual")
    ax.plot(t, [100 * pt.u_star for pt in points], color="#b0003c", lw=1.6, label="efficient")
    ax.legend(loc="upper left", frameon=False)
    path = out_dir / f"fig_{era}_efficient.png"
    _finish(fig, ax, f"Efficient unemployment rate ({era})", "percent of labor force", path)
    paths.append(path)

    fig, ax = plt.subplots(figsize=(9, 4))
    _shade_recessions(ax, recessions, lo, hi)
    gaps = np.array([100 * pt.gap for pt in points])
    ax.plot(t, gaps, color="#1b7837", lw=1.4)
    ax.axhline(0.0, color="k", lw=0.8, ls="--")
    path = out_dir / f"fig_{era}_gap.png"
    _finish(fig, ax, f"Unemployment gap ({era})", "percentage points", path)
    paths.append(path)
    return paths


def render_breaks(fit: BeveridgeFit, pairs: PairedSeries, out_dir: Path, era: str) -> list[Path]:
    """Log-log scatter per regime with the fitted line."""
    n = len(fit.segments)
    ncols = min(3, n)
    nrows = (n + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(3.6 * ncols, 3.2 * nrows), squeeze=False)
    for k, seg in enumerate(fit.segments):
        ax = axes[k // ncols][k % ncols]
        piece = pairs.restrict(seg.range)
        lu = np.log(np.asarray(piece.u))
        lv = np.log(np.asarray(piece.v))
        ax.scatter(lu, lv, s=8, color="#00589c", alpha=0.7)
        grid = np.linspace(lu.min(), lu.max(), 50)
        ax.plot(grid, seg.intercept + seg.elasticity * grid, color="#b0003c", lw=1.4)
        ax.set_title(f"{seg.range}\nelasticity {seg.elasticity:.2f}", fontsize=9)
        ax.set_xlabel("log u")
        ax.set_ylabel("log v")
    for k in range(n, nrows * ncols):
        axes[k // ncols][k % ncols].axis("off")
    fig.tight_layout()
    path = out_dir / f"fig_{era}_beveridge.png"
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return [path]


def render_comparison(
    points: list[EfficiencyPoint],
    general: list[float],
    recessions: RecessionCalendar,
    out_dir: Path,
    era: str,
) -> list[Path]:
    t = _time_axis(points)
    fig, ax = plt.subplots(figsize=(9, 4))
    _shade_recessions(ax, recessions, float(t[0]), float(t[-1]))
    ax.plot(t, [100 * pt.u_star for pt in points], color="#b0003c", lw=1.5, label="sqrt(uv)")
    ax.plot(t, [100 * g for g in general], color="#00589c", lw=1.2, ls="--", label="sufficient statistics")
    ax.legend(loc="upper left", frameon=False)
    path = out_dir / f"fig_{era}_comparison.png"
    _finish(fig, ax, f"Efficient unemployment, two formulas ({era})", "percent of labor force", path)
    return [path]


def render_simulation(
    analytic: list[tuple[float, float]],
    numeric: list[tuple[float, float]],
    out_dir: Path,
) -> list[Path]:
    fig, ax = plt.subplots(figsize=(7, 4))
    ta = [t for t, _ in analytic]
    ax.plot(ta, [100 * u for _, u in analytic], color="#b0003c", lw=1.6, label="analytic")
    ax.plot(
        [t for t, _ in numeric],
        [100 * u for _, u in numeric],
        color="#00589c",
        lw=1.0,
        ls=":",
        label="RK4",
    )
    ax.set_xlabel("months")
    ax.legend(frameon=False)
    path = out_dir / "fig_simulate.png"
    _finish(fig, ax, "Unemployment-rate convergence", "percent of labor force", path)
    return [path]
