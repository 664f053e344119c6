"""Efficient unemployment rate, tightness, gap, and market-state episodes.

The efficient rate is the geometric average of the unemployment and
vacancy rates: with a hyperbolic Beveridge curve (uv constant) the sum
u + v is minimized where u = v, so the efficient level of both rates is
sqrt(uv). Tightness theta = v/u summarizes the same comparison: the
market is tight when theta > 1 and slack when theta < 1.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError, EmptySeries
from .periods import DateRange, Period
from .series import PairedSeries


class MarketState(enum.Enum):
    SLACK = "slack"
    TIGHT = "tight"
    EFFICIENT = "efficient"


@dataclass(frozen=True)
class EfficiencyPoint:
    """Per-period efficiency diagnostics."""

    period: Period
    u: float
    v: float
    u_star: float
    theta: float
    gap: float
    state: MarketState


@dataclass(frozen=True)
class Episode:
    """Maximal run of consecutive periods sharing one market state.

    ``extremum`` is the most extreme tightness in the run: the maximum
    theta for tight episodes, the minimum for slack ones, and the theta
    farthest from 1 for efficient ones.
    """

    state: MarketState
    range: DateRange
    extremum_period: Period
    extremum_theta: float


def _require_positive(u: float, v: float) -> None:
    if u <= 0 or v <= 0:
        raise DomainError(f"rates must be positive, got u={u}, v={v}")


def efficient_rate(u: float, v: float) -> float:
    """Geometric mean sqrt(u*v); the efficient vacancy rate is the same."""
    _require_positive(u, v)
    return math.sqrt(u * v)


def tightness(u: float, v: float) -> float:
    """Vacancies per jobseeker, v/u."""
    if u <= 0:
        raise DomainError(f"unemployment rate must be positive, got {u}")
    if v <= 0:
        raise DomainError(f"vacancy rate must be positive, got {v}")
    return v / u


def gap(u: float, v: float) -> float:
    """Unemployment gap u - sqrt(uv); positive when the market is slack."""
    return u - efficient_rate(u, v)


def classify(u: float, v: float, tol: float = 0.0) -> MarketState:
    """Market state from the sign of v - u, with an efficiency band.

    ``tol`` widens the efficient band to |v - u| <= tol for noisy data;
    the strict reading (tol = 0) treats any imbalance as inefficiency.
    """
    _require_positive(u, v)
    if tol < 0:
        raise DomainError(f"tolerance must be non-negative, got {tol}")
    if abs(v - u) <= tol:
        return MarketState.EFFICIENT
    return MarketState.TIGHT if v > u else MarketState.SLACK


def analyze(series: PairedSeries, tol: float = 0.0) -> list[EfficiencyPoint]:
    """Efficiency diagnostics for every observation, order preserved."""
    if not series.periods:
        raise EmptySeries("cannot analyze an empty paired series")
    points = []
    for p, u, v in zip(series.periods, series.u, series.v):
        points.append(
            EfficiencyPoint(
                period=p,
                u=u,
                v=v,
                u_star=efficient_rate(u, v),
                theta=tightness(u, v),
                gap=gap(u, v),
                state=classify(u, v, tol),
            )
        )
    return points


def episodes(points: list[EfficiencyPoint]) -> list[Episode]:
    """Maximal same-state runs, in order.

    Consecutive here means consecutive in the input sequence; a gap in
    the underlying calendar does not split an episode by itself.
    """
    if not points:
        raise EmptySeries("cannot segment an empty point sequence")
    runs: list[Episode] = []
    start = 0
    for i in range(1, len(points) + 1):
        if i < len(points) and points[i].state is points[start].state:
            continue
        run = points[start:i]
        if run[0].state is MarketState.TIGHT:
            extreme = max(run, key=lambda pt: pt.theta)
        elif run[0].state is MarketState.SLACK:
            extreme = min(run, key=lambda pt: pt.theta)
        else:
            extreme = max(run, key=lambda pt: abs(pt.theta - 1.0))
        runs.append(
            Episode(
                state=run[0].state,
                range=DateRange(run[0].period, run[-1].period),
                extremum_period=extreme.period,
                extremum_theta=extreme.theta,
            )
        )
        start = i
    return runs
