"""Report tables and human-readable summaries.

Formatting conventions: rates are four-decimal fractions in CSV tables
and one-decimal percentages in the text summary; gaps are quoted in
percentage points; tightness is a plain two-decimal ratio. All writers
produce byte-identical output for identical inputs.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

from .beveridge import BeveridgeFit
from .efficiency import Episode, EfficiencyPoint, MarketState
from .periods import DateRange
from .series import PairedSeries


def pct(x: float, decimals: int = 1) -> str:
    return f"{100 * x:.{decimals}f}%"


def pp(x: float, decimals: int = 1) -> str:
    """Signed percentage points."""
    return f"{100 * x:+.{decimals}f}pp"


@dataclass(frozen=True)
class SeriesBlock:
    name: str
    mean: float
    min_val: float
    min_at: str
    max_val: float
    max_at: str


def _block(name: str, values: list[float], periods: list) -> SeriesBlock:
    i_min = min(range(len(values)), key=lambda i: values[i])
    i_max = max(range(len(values)), key=lambda i: values[i])
    return SeriesBlock(
        name=name,
        mean=sum(values) / len(values),
        min_val=values[i_min],
        min_at=str(periods[i_min]),
        max_val=values[i_max],
        max_at=str(periods[i_max]),
    )


def analysis_blocks(points: list[EfficiencyPoint]) -> dict[str, SeriesBlock]:
    periods = [pt.period for pt in points]
    return {
        "u": _block("u", [pt.u for pt in points], periods),
        "v": _block("v", [pt.v for pt in points], periods),
        "u_star": _block("u_star", [pt.u_star for pt in points], periods),
        "theta": _block("theta", [pt.theta for pt in points], periods),
        "gap": _block("gap", [pt.gap for pt in points], periods),
    }


def write_analysis_csv(points: list[EfficiencyPoint], path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["period", "u", "v", "u_star", "theta", "gap", "state"])
        for pt in points:
            writer.writerow(
                [
                    str(pt.period),
                    f"{pt.u:.4f}",
                    f"{pt.v:.4f}",
                    f"{pt.u_star:.4f}",
                    f"{pt.theta:.4f}",
                    f"{pt.gap:.4f}",
                    pt.state.value,
                ]
            )


def write_episodes_csv(episodes: list[Episode], path: Path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["state", "start", "end", "extremum_period", "extremum_theta"])
        for ep in episodes:
            writer.writerow(
                [
                    ep.state.value,
                    str(ep.range.start),
                    str(ep.range.end),
                    str(ep.extremum_period),
                    f"{ep.extremum_theta:.4f}",
                ]
            )


def summary_text(
    era: str,
    sample: DateRange,
    points: list[EfficiencyPoint],
    episodes: list[Episode],
) -> str:
    blocks = analysis_blocks(points)
    counts = {state: 0 for state in MarketState}
    for pt in points:
        counts[pt.state] += 1
    unit = "quarter" if sample.frequency.value == "quarterly" else "month"

    lines = [
        f"era: {era}",
        f"sample: {sample} ({len(points)} {unit}s)",
        "",
        f"unemployment rate u : mean {pct(blocks['u'].mean)}  "
        f"min {pct(blocks['u'].min_val)} at {blocks['u'].min_at}  "
        f"max {pct(blocks['u'].max_val)} at {blocks['u'].max_at}",
        f"vacancy rate v      : mean {pct(blocks['v'].mean)}  "
        f"min {pct(blocks['v'].min_val)} at {blocks['v'].min_at}  "
        f"max {pct(blocks['v'].max_val)} at {blocks['v'].max_at}",
        f"efficient rate u*   : mean {pct(blocks['u_star'].mean)}  "
        f"min {pct(blocks['u_star'].min_val)} at {blocks['u_star'].min_at}  "
        f"max {pct(blocks['u_star'].max_val)} at {blocks['u_star'].max_at}",
        f"tightness v/u       : mean {blocks['theta'].mean:.2f}  "
        f"min {blocks['theta'].min_val:.2f} at {blocks['theta'].min_at}  "
        f"max {blocks['theta'].max_val:.2f} at {blocks['theta'].max_at}",
        f"unemployment gap    : mean {pp(blocks['gap'].mean)}  "
        f"min {pp(blocks['gap'].min_val)} at {blocks['gap'].min_at}  "
        f"max {pp(blocks['gap'].max_val)} at {blocks['gap'].max_at}",
        "",
        f"state counts: slack {counts[MarketState.SLACK]}, "
        f"tight {counts[MarketState.TIGHT]}, "
        f"efficient {counts[MarketState.EFFICIENT]}",
        "episodes:",
    ]
    for ep in episodes:
        lines.append(
            f"  {ep.state.value:9s} {ep.range}  "
            f"(extreme tightness {ep.extremum_theta:.2f} at {ep.extremum_period})"
        )
    return "\n".join(lines) + "\n"


def fit_to_dict(fit: BeveridgeFit) -> dict:
    return {
        "num_breaks": fit.num_breaks,
        "break_dates": [str(p) for p in fit.break_dates],
        "selection_score": round(fit.selection_score, 4),
        "bic_path": [round(b, 4) for b in fit.bic_path],
        "ssr_path": [round(s, 6) for s in fit.ssr_path],
        "segments": [
            {
                "range": str(seg.range),
                "elasticity": round(seg.elasticity, 4),
                "intercept": round(seg.intercept, 4),
                "ssr": round(seg.ssr, 6),
                "n": seg.n,
            }
            for seg in fit.segments
        ],
    }


def write_fit_json(fit: BeveridgeFit, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(fit_to_dict(fit), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_segment_scatter_csv(fit: BeveridgeFit, pairs: PairedSeries, path: Path) -> None:
    """Long-format per-segment scatter with the fitted line, for plotting."""
    import math

    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["segment", "period", "log_u", "log_v", "fitted_log_v"])
        for k, seg in enumerate(fit.segments):
            piece = pairs.restrict(seg.range)
            for p, u, v in zip(piece.periods, piece.u, piece.v):
                lu = math.log(u)
                writer.writerow(
                    [
                        k,
                        str(p),
                        f"{lu:.6f}",
                        f"{math.log(v):.6f}",
                        f"{seg.intercept + seg.elasticity * lu:.6f}",
                    ]
                )


def write_comparison_csv(rows: list[tuple], path: Path) -> None:
    """Per-period (sqrt-uv rate, generalized rate, difference) table."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["period", "u_star_sqrt", "u_star_general", "difference"])
        for period, simple, general in rows:
            writer.writerow(
                [str(period), f"{simple:.4f}", f"{general:.4f}", f"{general - simple:+.4f}"]
            )


def write_simulation_csv(
    analytic: list[tuple[float, float]], numeric: list[tuple[float, float]], path: Path
) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t_months", "u_analytic", "u_numeric"])
        for (t, ua), (_, un) in zip(analytic, numeric):
            writer.writerow([f"{t:.4f}", f"{ua:.8f}", f"{un:.8f}"])


def write_json(payload: dict, path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
