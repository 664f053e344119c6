"""Source-file parsing and dataset assembly.

Reads header-row CSV files (RFC-4180 quoting, UTF-8) into time series,
derives the vacancy rate from job-openings and labor-force counts, and
assembles the four analysis datasets from a manifest:

* postwar    -- quarterly 1951Q1-2019Q4; vacancy source switches from the
                composite help-wanted series to survey job openings at 2001Q1
* pandemic   -- monthly 2020M1-2022M3
* historical -- quarterly 1930Q1-1950Q4
* full       -- quarterly 1930Q1-2022Q1, spliced from the above sources

The manifest is an INI-style key-value file mapping dataset roles to a
file path, column names, and value kind. Rates supplied in percent are
detected per file and divided by 100; the normalization is recorded in
the build report.
"""

from __future__ import annotations

import configparser
import csv
import enum
import logging
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import (
    DivisionByZero,
    NoOverlap,
    ParseError,
    SchemaError,
    UnitAmbiguity,
)
from .periods import DateRange, Frequency, Period
from .series import PairedSeries, TimeSeries, align, monthly_to_quarterly, splice

log = logging.getLogger(__name__)

# vacancy rates outside this band are treated as implausible and logged
PLAUSIBLE_RATE_CEILING = 0.20


class Era(enum.Enum):
    POSTWAR = "postwar"
    PANDEMIC = "pandemic"
    HISTORICAL = "historical"
    FULL = "full"


# era boundaries; the vacancy-source switch inside the postwar sample is fixed
POSTWAR_RANGE = DateRange(Period.quarter(1951, 1), Period.quarter(2019, 4))
PANDEMIC_RANGE = DateRange(Period.month(2020, 1), Period.month(2022, 3))
HISTORICAL_RANGE = DateRange(Period.quarter(1930, 1), Period.quarter(1950, 4))
FULL_RANGE = DateRange(Period.quarter(1930, 1), Period.quarter(2022, 1))
OPENINGS_SWITCH = Period.quarter(2001, 1)

ROLES = (
    "unemployment_rate",
    "job_openings",
    "labor_force",
    "historical_u",
    "historical_v",
    "barnichon_v",
    "recessions",
)

_ERA_ROLES = {
    Era.POSTWAR: ("unemployment_rate", "barnichon_v", "job_openings", "labor_force"),
    Era.PANDEMIC: ("unemployment_rate", "job_openings", "labor_force"),
    Era.HISTORICAL: ("historical_u", "historical_v"),
    Era.FULL: (
        "unemployment_rate",
        "barnichon_v",
        "job_openings",
        "labor_force",
        "historical_u",
        "historical_v",
    ),
}


@dataclass(frozen=True)
class SourceSpec:
    """How to read one source file."""

    path: Path
    series_id: str
    frequency: Frequency
    value_kind: str  # "rate" or "count"
    date_column: str
    value_column: str

    def __post_init__(self) -> None:
        if self.value_kind not in ("rate", "count"):
            raise SchemaError(f"value_kind must be rate or count, got {self.value_kind!r}")
        if not self.date_column or not self.value_column:
            raise SchemaError("date and value column names must be non-empty")


@dataclass(frozen=True)
class DatasetManifest:
    """Role-to-source mapping."""

    sources: dict[str, SourceSpec]

    def require(self, era: Era) -> None:
        missing = [r for r in _ERA_ROLES[era] if r not in self.sources]
        if missing:
            raise SchemaError(f"manifest lacks roles {missing} needed for era {era.value}")

    def __getitem__(self, role: str) -> SourceSpec:
        try:
            return self.sources[role]
        except KeyError:
            raise SchemaError(f"manifest has no source for role {role!r}") from None


@dataclass(frozen=True)
class RecessionCalendar:
    """Peak-to-trough contraction ranges, used only for chart shading."""

    ranges: tuple[DateRange, ...]

    def __post_init__(self) -> None:
        for r1, r2 in zip(self.ranges, self.ranges[1:]):
            if r1.overlaps(r2) or r2.start < r1.start:
                raise SchemaError("recession ranges must be ordered and disjoint")


@dataclass
class SourceReport:
    """Per-file parsing outcome, for the build report."""

    series_id: str
    rows: int = 0
    skipped: int = 0
    unit_scale: float = 1.0  # 0.01 when a percent column was normalized


@dataclass
class BuildReport:
    era: str
    sources: list[SourceReport] = field(default_factory=list)
    splice_boundaries: list[str] = field(default_factory=list)
    dropped_nonpositive: int = 0


def _parse_number(raw: str, row: int, path: Path) -> float | None:
    """None for blank/placeholder cells; ParseError for junk."""
    text = raw.strip().replace(",", "")
    if text in ("", "."):
        return None
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"{path}:{row}: cannot parse value {raw!r}") from None


def parse_source(spec: SourceSpec) -> tuple[TimeSeries, SourceReport]:
    """Parse one CSV into a series plus its parsing report.

    Rate columns are unit-normalized per file: when values only make
    sense as percentages (some exceed 1 but all stay below 100) the
    whole column is divided by 100. A column admitting neither a
    fraction nor a percent reading raises UnitAmbiguity.
    """
    report = SourceReport(series_id=spec.series_id)
    if not spec.path.exists():
        raise SchemaError(f"source file not found: {spec.path}")
    periods: list[Period] = []
    values: list[float] = []
    with open(spec.path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        for col in (spec.date_column, spec.value_column):
            if col not in header:
                raise SchemaError(f"{spec.path}: missing column {col!r} (have {header})")
        for lineno, row in enumerate(reader, start=2):
            value = _parse_number(row[spec.value_column], lineno, spec.path)
            if value is None:
                report.skipped += 1
                continue
            try:
                period = Period.parse(row[spec.date_column], spec.frequency)
            except ValueError as exc:
                raise ParseError(f"{spec.path}:{lineno}: {exc}") from None
            periods.append(period)
            values.append(value)
    report.rows = len(values)

    if spec.value_kind == "rate" and values:
        as_fraction_ok = all(0 <= v < 1 for v in values)
        as_percent_ok = all(0 <= v < 100 for v in values)
        if as_fraction_ok:
            pass
        elif as_percent_ok:
            values = [v / 100.0 for v in values]
            report.unit_scale = 0.01
        else:
            raise UnitAmbiguity(
                f"{spec.path}: rate column {spec.value_column!r} mixes magnitudes; "
                "neither fraction nor percent units fit all values"
            )
    series = TimeSeries(
        label=spec.series_id,
        frequency=spec.frequency,
        periods=tuple(periods),
        values=tuple(values),
    )
    if report.skipped:
        log.info("%s: skipped %d placeholder row(s)", spec.path, report.skipped)
    return series, report


def parse_csv(spec: SourceSpec) -> TimeSeries:
    """Parse one CSV into a series (report discarded)."""
    return parse_source(spec)[0]


def vacancy_rate_from_openings(openings: TimeSeries, labor_force: TimeSeries) -> TimeSeries:
    """Per-period ratio of job openings to the civilian labor force."""
    if openings.frequency is not labor_force.frequency:
        from .errors import FrequencyMismatch

        raise FrequencyMismatch("openings and labor force have different frequencies")
    lf = dict(zip(labor_force.periods, labor_force.values))
    periods: list[Period] = []
    values: list[float] = []
    implausible = 0
    for p, n_open in zip(openings.periods, openings.values):
        if p not in lf:
            continue
        denom = lf[p]
        if denom == 0:
            raise DivisionByZero(f"labor force is zero at {p}")
        rate = n_open / denom
        if not 0 < rate < PLAUSIBLE_RATE_CEILING:
            implausible += 1
        periods.append(p)
        values.append(rate)
    if not periods:
        raise NoOverlap("openings and labor force share no periods")
    if implausible:
        log.warning(
            "vacancy_rate_from_openings: %d implausible rate(s) outside (0, %.2f)",
            implausible,
            PLAUSIBLE_RATE_CEILING,
        )
    return TimeSeries(
        label=f"{openings.label}/{labor_force.label}",
        frequency=openings.frequency,
        periods=tuple(periods),
        values=tuple(values),
    )


def load_manifest(path: Path) -> DatasetManifest:
    """Read an INI-style manifest; relative paths resolve against it."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise SchemaError(f"cannot read manifest {path}")
    base = Path(path).parent
    sources: dict[str, SourceSpec] = {}
    for role in parser.sections():
        if role not in ROLES:
            raise SchemaError(f"unknown dataset role {role!r} in {path}")
        section = parser[role]
        try:
            file_path = Path(section["path"])
            if not file_path.is_absolute():
                file_path = base / file_path
            sources[role] = SourceSpec(
                path=file_path,
                series_id=section.get("series_id", role),
                frequency=Frequency(section.get("frequency", "monthly")),
                value_kind=section.get("value_kind", "rate"),
                date_column=section["date_column"],
                value_column=section["value_column"],
            )
        except KeyError as exc:
            raise SchemaError(f"manifest role {role!r} lacks key {exc}") from None
    return DatasetManifest(sources=sources)


def bundled_manifest_path() -> Path:
    """Manifest of the data snapshot shipped with the package."""
    return Path(str(resources.files("uvstar") / "data" / "manifest.cfg"))


def load_recessions(manifest: DatasetManifest) -> RecessionCalendar:
    """Load the contraction calendar if the manifest provides one."""
    if "recessions" not in manifest.sources:
        return RecessionCalendar(ranges=())
    spec = manifest["recessions"]
    ranges: list[DateRange] = []
    with open(spec.path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        for row in reader:
            ranges.append(
                DateRange(
                    Period.parse(row["peak"], Frequency.MONTHLY),
                    Period.parse(row["trough"], Frequency.MONTHLY),
                )
            )
    return RecessionCalendar(ranges=tuple(ranges))


def _quarterly(series: TimeSeries) -> TimeSeries:
    return monthly_to_quarterly(series)


def build_dataset(
    manifest: DatasetManifest, era: Era
) -> tuple[PairedSeries, BuildReport]:
    """Assemble the (u, v) panel for one era.

    Quarterly eras aggregate monthly sources first and then splice;
    the pandemic era stays monthly.
    """
    manifest.require(era)
    report = BuildReport(era=era.value)

    def parsed(role: str) -> TimeSeries:
        series, src_report = parse_source(manifest[role])
        report.sources.append(src_report)
        return series

    if era is Era.PANDEMIC:
        u = parsed("unemployment_rate")
        v = vacancy_rate_from_openings(parsed("job_openings"), parsed("labor_force"))
        u = u.restrict(PANDEMIC_RANGE)
        v = v.restrict(PANDEMIC_RANGE)
        pairs = align(u, v)
        report.dropped_nonpositive = pairs.dropped_nonpositive
        return pairs, report

    if era is Era.HISTORICAL:
        u_q = _quarterly(parsed("historical_u")).restrict(HISTORICAL_RANGE)
        v_q = _quarterly(parsed("historical_v")).restrict(HISTORICAL_RANGE)
        pairs = align(u_q, v_q)
        report.dropped_nonpositive = pairs.dropped_nonpositive
        return pairs, report

    # postwar and full both need the two-source postwar vacancy series
    unrate_q = _quarterly(parsed("unemployment_rate"))
    barnichon_q = _quarterly(parsed("barnichon_v"))
    jolts_q = _quarterly(
        vacancy_rate_from_openings(parsed("job_openings"), parsed("labor_force"))
    )

    if era is Era.POSTWAR:
        v_q = splice(
            [
                (DateRange(POSTWAR_RANGE.start, OPENINGS_SWITCH.shift(-1)), barnichon_q),
                (DateRange(OPENINGS_SWITCH, POSTWAR_RANGE.end), jolts_q),
            ]
        )
        report.splice_boundaries.append(str(OPENINGS_SWITCH))
        pairs = align(unrate_q.restrict(POSTWAR_RANGE), v_q)
        report.dropped_nonpositive = pairs.dropped_nonpositive
        return pairs, report

    # full sample 1930Q1-2022Q1
    hist_u_q = _quarterly(parsed("historical_u"))
    hist_v_q = _quarterly(parsed("historical_v"))
    postwar_to_end = DateRange(POSTWAR_RANGE.start, FULL_RANGE.end)
    u_q = splice(
        [
            (HISTORICAL_RANGE, hist_u_q),
            (postwar_to_end, unrate_q),
        ]
    )
    v_q = splice(
        [
            (HISTORICAL_RANGE, hist_v_q),
            (DateRange(POSTWAR_RANGE.start, OPENINGS_SWITCH.shift(-1)), barnichon_q),
            (DateRange(OPENINGS_SWITCH, FULL_RANGE.end), jolts_q),
        ]
    )
    report.splice_boundaries.extend([str(POSTWAR_RANGE.start), str(OPENINGS_SWITCH)])
    pairs = align(u_q.restrict(FULL_RANGE), v_q.restrict(FULL_RANGE))
    report.dropped_nonpositive = pairs.dropped_nonpositive
    return pairs, report


def write_dataset_csv(pairs: PairedSeries, path: Path) -> None:
    """Canonical period,u,v dataset file (fractions, six decimals)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["period", "u", "v"])
        for p, u, v in zip(pairs.periods, pairs.u, pairs.v):
            writer.writerow([str(p), f"{u:.6f}", f"{v:.6f}"])


def read_dataset_csv(path: Path, frequency: Frequency) -> PairedSeries:
    """Read a canonical dataset file back into a paired series."""
    u_spec = SourceSpec(
        path=Path(path),
        series_id="u",
        frequency=frequency,
        value_kind="rate",
        date_column="period",
        value_column="u",
    )
    v_spec = SourceSpec(
        path=Path(path),
        series_id="v",
        frequency=frequency,
        value_kind="rate",
        date_column="period",
        value_column="v",
    )
    return align(parse_csv(u_spec), parse_csv(v_spec))
