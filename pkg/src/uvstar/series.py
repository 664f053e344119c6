"""Frequency-aware time-series containers and basic operations.

``TimeSeries`` holds a dated sequence of values (rates or counts);
``PairedSeries`` holds aligned unemployment/vacancy observations. All
containers are immutable after construction and safe to share.
Aggregation never interpolates: gaps in the input propagate to the
output.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import EmptySeries, EmptyWindow, FrequencyMismatch, NoOverlap, SpliceOverlap
from .periods import DateRange, Frequency, Period

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimeSeries:
    """Ordered observations of one quantity at a single frequency.

    ``partial_periods`` flags aggregated periods that were built from an
    incomplete set of sub-periods (edge quarters of a monthly sample).
    """

    label: str
    frequency: Frequency
    periods: tuple[Period, ...]
    values: tuple[float, ...]
    partial_periods: tuple[Period, ...] = ()

    def __post_init__(self) -> None:
        if len(self.periods) != len(self.values):
            raise ValueError("periods and values have different lengths")
        for p in self.periods:
            if p.frequency is not self.frequency:
                raise FrequencyMismatch(f"{p} is not a {self.frequency.value} period")
        ordinals = [p.ordinal for p in self.periods]
        if any(b <= a for a, b in zip(ordinals, ordinals[1:])):
            raise ValueError(f"periods of {self.label!r} not strictly increasing")
        arr = np.asarray(self.values, dtype=float)
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError(f"non-finite value in series {self.label!r}")

    def __len__(self) -> int:
        return len(self.periods)

    def to_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def restrict(self, r: DateRange) -> "TimeSeries":
        """Observations inside ``r`` (inclusive)."""
        if r.frequency is not self.frequency:
            raise FrequencyMismatch("range frequency differs from series frequency")
        keep = [(p, v) for p, v in zip(self.periods, self.values) if p in r]
        return TimeSeries(
            label=self.label,
            frequency=self.frequency,
            periods=tuple(p for p, _ in keep),
            values=tuple(v for _, v in keep),
            partial_periods=tuple(p for p in self.partial_periods if p in r),
        )

    def value_at(self, p: Period) -> float:
        for q, v in zip(self.periods, self.values):
            if q == p:
                return v
        raise KeyError(f"no observation at {p}")


@dataclass(frozen=True)
class PairedSeries:
    """Aligned (u, v) observations; both rates strictly positive."""

    frequency: Frequency
    periods: tuple[Period, ...]
    u: tuple[float, ...]
    v: tuple[float, ...]
    dropped_nonpositive: int = 0

    def __post_init__(self) -> None:
        if not (len(self.periods) == len(self.u) == len(self.v)):
            raise ValueError("periods, u and v have different lengths")
        ordinals = [p.ordinal for p in self.periods]
        if any(b <= a for a, b in zip(ordinals, ordinals[1:])):
            raise ValueError("periods not strictly increasing")
        if any(x <= 0 for x in self.u) or any(x <= 0 for x in self.v):
            raise ValueError("paired series requires u > 0 and v > 0")

    def __len__(self) -> int:
        return len(self.periods)

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.asarray(self.u, dtype=float), np.asarray(self.v, dtype=float)

    def restrict(self, r: DateRange) -> "PairedSeries":
        if r.frequency is not self.frequency:
            raise FrequencyMismatch("range frequency differs from series frequency")
        keep = [i for i, p in enumerate(self.periods) if p in r]
        return PairedSeries(
            frequency=self.frequency,
            periods=tuple(self.periods[i] for i in keep),
            u=tuple(self.u[i] for i in keep),
            v=tuple(self.v[i] for i in keep),
        )

    def range(self) -> DateRange:
        if not self.periods:
            raise EmptySeries("empty paired series has no range")
        return DateRange(self.periods[0], self.periods[-1])


@dataclass(frozen=True)
class SummaryStats:
    """Mean plus dated extrema over a window."""

    mean: float
    min_value: float
    min_period: Period
    max_value: float
    max_period: Period
    count: int


def monthly_to_quarterly(s: TimeSeries) -> TimeSeries:
    """Quarterly arithmetic averages of a monthly series.

    Each quarter's value is the mean of the months present; quarters with
    fewer than three months are kept but flagged as partial. Missing
    months never get filled in.
    """
    if s.frequency is not Frequency.MONTHLY:
        raise FrequencyMismatch("monthly_to_quarterly requires a monthly series")
    if not s.periods:
        raise EmptySeries(f"cannot aggregate empty series {s.label!r}")
    buckets: dict[Period, list[float]] = {}
    for p, v in zip(s.periods, s.values):
        buckets.setdefault(p.quarter_of(), []).append(v)
    quarters = sorted(buckets, key=lambda p: p.ordinal)
    values = tuple(float(np.mean(buckets[q])) for q in quarters)
    partial = tuple(q for q in quarters if len(buckets[q]) < 3)
    return TimeSeries(
        label=s.label,
        frequency=Frequency.QUARTERLY,
        periods=tuple(quarters),
        values=values,
        partial_periods=partial,
    )


def splice(segments: list[tuple[DateRange, TimeSeries]]) -> TimeSeries:
    """Concatenate series restricted to non-overlapping, ordered ranges.

    The output label records which source covered which range.
    """
    if not segments:
        raise EmptySeries("nothing to splice")
    freq = segments[0][0].frequency
    for r, ts in segments:
        if r.frequency is not freq or ts.frequency is not freq:
            raise FrequencyMismatch("all splice segments must share one frequency")
    for (r1, _), (r2, _) in zip(segments, segments[1:]):
        if r1.overlaps(r2):
            raise SpliceOverlap(f"ranges {r1} and {r2} overlap")
        if r2.start < r1.start:
            raise SpliceOverlap(f"ranges {r1} and {r2} out of order")
    periods: list[Period] = []
    values: list[float] = []
    partial: list[Period] = []
    provenance: list[str] = []
    for r, ts in segments:
        piece = ts.restrict(r)
        periods.extend(piece.periods)
        values.extend(piece.values)
        partial.extend(piece.partial_periods)
        provenance.append(f"{r}={ts.label}")
    return TimeSeries(
        label="spliced[" + "; ".join(provenance) + "]",
        frequency=freq,
        periods=tuple(periods),
        values=tuple(values),
        partial_periods=tuple(partial),
    )


def align(u: TimeSeries, v: TimeSeries) -> PairedSeries:
    """Inner join of two rate series on period.

    Observations where either rate is non-positive are dropped (logged,
    and counted on the result) because downstream log and ratio
    operations require positivity.
    """
    if u.frequency is not v.frequency:
        raise FrequencyMismatch(
            f"cannot align {u.frequency.value} with {v.frequency.value}"
        )
    v_by_period = dict(zip(v.periods, v.values))
    periods: list[Period] = []
    uu: list[float] = []
    vv: list[float] = []
    dropped = 0
    for p, x in zip(u.periods, u.values):
        if p not in v_by_period:
            continue
        y = v_by_period[p]
        if x <= 0 or y <= 0:
            dropped += 1
            continue
        periods.append(p)
        uu.append(x)
        vv.append(y)
    if not periods:
        raise NoOverlap(f"series {u.label!r} and {v.label!r} share no usable periods")
    if dropped:
        log.warning("align dropped %d non-positive observation(s)", dropped)
    return PairedSeries(
        frequency=u.frequency,
        periods=tuple(periods),
        u=tuple(uu),
        v=tuple(vv),
        dropped_nonpositive=dropped,
    )


def summary(s: TimeSeries, r: DateRange) -> SummaryStats:
    """Mean/min/max over the observations in ``r``; ties break earliest."""
    piece = s.restrict(r)
    if not piece.periods:
        raise EmptyWindow(f"no observations of {s.label!r} in {r}")
    arr = piece.to_array()
    i_min = int(np.argmin(arr))  # argmin/argmax return first occurrence
    i_max = int(np.argmax(arr))
    return SummaryStats(
        mean=float(arr.mean()),
        min_value=float(arr[i_min]),
        min_period=piece.periods[i_min],
        max_value=float(arr[i_max]),
        max_period=piece.periods[i_max],
        count=len(arr),
    )
