"""Beveridge-curve analysis toolkit.

Computes the efficient unemployment rate sqrt(uv), labor-market
tightness, and the unemployment gap from unemployment/vacancy panels;
estimates the curve's elasticity and structural breaks; and evaluates
flow dynamics and the sufficient-statistic interest-rate rule. A data
snapshot covering the United States from 1930 to early 2022 ships with
the package.
"""

from .beveridge import (
    BeveridgeFit,
    HyperbolaConstant,
    Segment,
    detect_breaks,
    fit_breaks,
    hyperbola_constant,
    log_ols,
    matching_elasticity,
    select_num_breaks,
)
from .efficiency import (
    EfficiencyPoint,
    Episode,
    MarketState,
    analyze,
    classify,
    efficient_rate,
    episodes,
    gap,
    tightness,
)
from .ingest import (
    DatasetManifest,
    Era,
    RecessionCalendar,
    SourceSpec,
    build_dataset,
    bundled_manifest_path,
    load_manifest,
    parse_csv,
    vacancy_rate_from_openings,
)
from .models import (
    FlowParams,
    Ms16Params,
    PolicyAdvice,
    PolicyInput,
    beveridge_from_matching,
    compare_formulas,
    half_life,
    ms16_efficient_rate,
    policy_rate_change,
    simulate_ode,
    steady_state_u,
    unemployment_path,
)
from .periods import DateRange, Frequency, Period
from .series import (
    PairedSeries,
    SummaryStats,
    TimeSeries,
    align,
    monthly_to_quarterly,
    splice,
    summary,
)

__version__ = "0.1.0"

__all__ = [
    "BeveridgeFit",
    "DateRange",
    "DatasetManifest",
    "EfficiencyPoint",
    "Episode",
    "Era",
    "FlowParams",
    "Frequency",
    "HyperbolaConstant",
    "MarketState",
    "Ms16Params",
    "PairedSeries",
    "Period",
    "PolicyAdvice",
    "PolicyInput",
    "RecessionCalendar",
    "Segment",
    "SourceSpec",
    "SummaryStats",
    "TimeSeries",
    "align",
    "analyze",
    "beveridge_from_matching",
    "build_dataset",
    "bundled_manifest_path",
    "classify",
    "compare_formulas",
    "detect_breaks",
    "efficient_rate",
    "episodes",
    "fit_breaks",
    "gap",
    "half_life",
    "hyperbola_constant",
    "load_manifest",
    "log_ols",
    "matching_elasticity",
    "monthly_to_quarterly",
    "ms16_efficient_rate",
    "parse_csv",
    "policy_rate_change",
    "select_num_breaks",
    "simulate_ode",
    "splice",
    "steady_state_u",
    "summary",
    "tightness",
    "unemployment_path",
    "vacancy_rate_from_openings",
]
