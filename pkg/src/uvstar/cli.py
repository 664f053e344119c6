"""Command-line interface.

Subcommands:

* build     -- assemble era datasets from the manifest, write canonical CSVs
* analyze   -- per-period efficiency table, episode list, summary, charts
* breaks    -- structural-break fit of the Beveridge curve
* compare   -- geometric-mean vs sufficient-statistic efficient rates
* policy    -- interest-rate recommendation from current u, v, i
* simulate  -- analytic vs Runge-Kutta unemployment convergence paths

Rates on the command line are given in percent (as published); files
store fractions. Exit codes: 0 success, 1 usage error, 2 data error,
3 infeasible computation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .beveridge import fit_breaks
from .config import RunConfig, apply_overrides, load_config
from .efficiency import analyze, classify, efficient_rate, episodes, gap, tightness
from .errors import (
    DomainError,
    FitError,
    IngestError,
    IntegrationError,
    SeriesError,
    UvstarError,
)
from .ingest import (
    Era,
    build_dataset,
    load_manifest,
    load_recessions,
    read_dataset_csv,
    write_dataset_csv,
)
from .models import (
    FlowParams,
    Ms16Params,
    PolicyInput,
    half_life,
    ms16_efficient_rate,
    policy_rate_change,
    simulate_ode,
    unemployment_path,
)
from .periods import Frequency
from .reports import (
    pp,
    pct,
    summary_text,
    write_analysis_csv,
    write_comparison_csv,
    write_episodes_csv,
    write_fit_json,
    write_json,
    write_segment_scatter_csv,
    write_simulation_csv,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INFEASIBLE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dataset_path(config: RunConfig, era: Era) -> Path:
    return config.out_dir / f"dataset_{era.value}.csv"


def _era_frequency(era: Era) -> Frequency:
    return Frequency.MONTHLY if era is Era.PANDEMIC else Frequency.QUARTERLY


def _load_pairs(config: RunConfig, era: Era):
    path = _dataset_path(config, era)
    if not path.exists():
        raise IngestError(
            f"dataset {path} not found; run `uvstar build --era {era.value}` first"
        )
    return read_dataset_csv(path, _era_frequency(era))


def cmd_build(config: RunConfig) -> int:
    manifest = load_manifest(config.manifest_path)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    pairs, report = build_dataset(manifest, config.era)
    out = _dataset_path(config, config.era)
    write_dataset_csv(pairs, out)
    payload = {
        "era": report.era,
        "observations": len(pairs),
        "sample": str(pairs.range()),
        "splice_boundaries": report.splice_boundaries,
        "dropped_nonpositive": report.dropped_nonpositive,
        "sources": [
            {
                "series_id": s.series_id,
                "rows": s.rows,
                "skipped": s.skipped,
                "unit_scale": s.unit_scale,
            }
            for s in report.sources
        ],
    }
    write_json(payload, config.out_dir / f"build_report_{config.era.value}.json")
    print(f"wrote {out} ({len(pairs)} observations, {pairs.range()})")
    return EXIT_OK


def cmd_analyze(config: RunConfig) -> int:
    pairs = _load_pairs(config, config.era)
    points = analyze(pairs, tol=config.classification_tol)
    runs = episodes(points)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    era = config.era.value

    write_analysis_csv(points, config.out_dir / f"analysis_{era}.csv")
    write_episodes_csv(runs, config.out_dir / f"episodes_{era}.csv")
    text = summary_text(era, pairs.range(), points, runs)
    (config.out_dir / f"summary_{era}.txt").write_text(text, encoding="utf-8")
    print(text, end="")

    figure_paths = []
    if config.render_figures:
        from .figures import render_analysis

        recessions = load_recessions(load_manifest(config.manifest_path))
        figure_paths = render_analysis(points, recessions, config.out_dir, era)
    write_json(
        {
            "tables": [f"analysis_{era}.csv", f"episodes_{era}.csv", f"summary_{era}.txt"],
            "figures": [p.name for p in figure_paths],
        },
        config.out_dir / f"manifest_{era}.json",
    )
    return EXIT_OK


def cmd_breaks(config: RunConfig) -> int:
    pairs = _load_pairs(config, config.era)
    fit = fit_breaks(pairs, max_breaks=config.max_breaks, min_seg_frac=config.min_seg_frac)
    config.out_dir.mkdir(parents=True, exist_ok=True)
    era = config.era.value
    write_fit_json(fit, config.out_dir / f"breaks_{era}.json")
    write_segment_scatter_csv(fit, pairs, config.out_dir / f"breaks_segments_{era}.csv")
    if config.render_figures:
        from .figures import render_breaks

        render_breaks(fit, pairs, config.out_dir, era)
    print(f"{fit.num_breaks} break(s): " + ", ".join(str(p) for p in fit.break_dates))
    for seg in fit.segments:
        print(f"  {seg.range}: elasticity {seg.elasticity:.4f} (n={seg.n})")
    return EXIT_OK


def cmd_compare(config: RunConfig) -> int:
    pairs = _load_pairs(config, config.era)
    params = Ms16Params(eps=config.ms16_eps, zeta=config.ms16_zeta, kappa=config.ms16_kappa)
    points = analyze(pairs)
    general = [ms16_efficient_rate(pt.u, pt.v, params) for pt in points]
    diffs = [abs(g - pt.u_star) for g, pt in zip(general, points)]
    mean_abs, max_abs = sum(diffs) / len(diffs), max(diffs)

    config.out_dir.mkdir(parents=True, exist_ok=True)
    era = config.era.value
    rows = [(pt.period, pt.u_star, g) for pt, g in zip(points, general)]
    write_comparison_csv(rows, config.out_dir / f"compare_{era}.csv")
    write_json(
        {
            "era": era,
            "calibration": {"eps": params.eps, "zeta": params.zeta, "kappa": params.kappa},
            "mean_abs_difference": round(mean_abs, 6),
            "max_abs_difference": round(max_abs, 6),
        },
        config.out_dir / f"compare_summary_{era}.json",
    )
    if config.render_figures:
        from .figures import render_comparison

        recessions = load_recessions(load_manifest(config.manifest_path))
        render_comparison(points, general, recessions, config.out_dir, era)
    print(
        f"mean |difference| {100 * mean_abs:.2f}pp, "
        f"max |difference| {100 * max_abs:.2f}pp over {len(points)} observations"
    )
    return EXIT_OK


def cmd_policy(config: RunConfig, u_pct: float, v_pct: float, i_pct: float) -> int:
    u, v, i = u_pct / 100.0, v_pct / 100.0, i_pct / 100.0
    u_star = efficient_rate(u, v)
    advice = policy_rate_change(
        PolicyInput(i=i, u=u, u_star=u_star, multiplier=config.policy_multiplier)
    )
    state = classify(u, v, config.classification_tol)
    payload = {
        "u": round(u, 6),
        "v": round(v, 6),
        "u_star": round(u_star, 6),
        "tightness": round(tightness(u, v), 4),
        "gap": round(gap(u, v), 6),
        "state": state.value,
        "multiplier": config.policy_multiplier,
        "rate_change": round(advice.delta_i, 6),
        "implied_target": round(advice.implied_target, 6),
        "zlb_binding": advice.zlb_binding,
    }
    if config.output_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        direction = "raise" if advice.delta_i > 0 else ("cut" if advice.delta_i < 0 else "hold")
        print(f"unemployment {pct(u)}, vacancies {pct(v)}, efficient rate {pct(u_star)}")
        print(f"tightness {tightness(u, v):.2f} ({state.value}), gap {pp(gap(u, v))}")
        print(f"recommendation: {direction} by {abs(100 * advice.delta_i):.1f}pp "
              f"to {pct(advice.implied_target)}")
        if advice.zlb_binding:
            print("zero lower bound binds: conventional policy cannot close the gap")
    return EXIT_OK


def cmd_simulate(
    config: RunConfig, u0_pct: float, lam_pct: float, f_pct: float, horizon: float, dt: float
) -> int:
    fp = FlowParams(lam=lam_pct / 100.0, f=f_pct / 100.0)
    u0 = u0_pct / 100.0
    numeric = simulate_ode(u0, fp, dt=dt, horizon=horizon)
    analytic = [(t, unemployment_path(u0, fp, t)) for t, _ in numeric]
    config.out_dir.mkdir(parents=True, exist_ok=True)
    write_simulation_csv(analytic, numeric, config.out_dir / "simulate.csv")
    if config.render_figures:
        from .figures import render_simulation

        render_simulation(analytic, numeric, config.out_dir)
    print(
        f"steady state {pct(fp.lam / (fp.lam + fp.f))}, "
        f"half-life {half_life(fp):.2f} months, "
        f"endpoint {pct(numeric[-1][1], 2)} after {horizon:g} months"
    )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="uvstar", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"uvstar {__version__}")
    parser.add_argument("--config", type=Path, default=None, help="run configuration file")
    parser.add_argument("--era", choices=[e.value for e in Era], default=None)
    parser.add_argument("--format", choices=["csv", "json"], default=None, dest="output_format")
    parser.add_argument("--out", type=Path, default=None, help="output directory")
    parser.add_argument("--manifest", type=Path, default=None, help="dataset manifest file")
    parser.add_argument("--max-breaks", type=int, default=None)
    parser.add_argument("--min-seg", type=float, default=None,
                        help="minimum segment length as a fraction of the sample")
    parser.add_argument("--eps", type=float, default=None, help="Beveridge elasticity magnitude")
    parser.add_argument("--zeta", type=float, default=None, help="social value of nonwork")
    parser.add_argument("--kappa", type=float, default=None, help="recruiting cost")
    parser.add_argument("--multiplier", type=float, default=None, help="du/di monetary multiplier")
    parser.add_argument("--tol", type=float, default=None, help="efficiency classification band")
    parser.add_argument("--no-figures", action="store_true", help="skip chart rendering")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("build", help="assemble era dataset from the manifest")
    sub.add_parser("analyze", help="efficiency table, episodes, and summary")
    sub.add_parser("breaks", help="structural-break fit of the Beveridge curve")
    sub.add_parser("compare", help="compare the two efficient-rate formulas")

    pol = sub.add_parser("policy", help="interest-rate recommendation")
    pol.add_argument("--u", type=float, required=True, help="unemployment rate, percent")
    pol.add_argument("--v", type=float, required=True, help="vacancy rate, percent")
    pol.add_argument("--i", type=float, required=True, help="nominal interest rate, percent")

    sim = sub.add_parser("simulate", help="unemployment convergence paths")
    sim.add_argument("--u0", type=float, required=True, help="initial unemployment rate, percent")
    sim.add_argument("--lam", type=float, required=True, help="separation rate, percent per month")
    sim.add_argument("--f", type=float, required=True, help="finding rate, percent per month")
    sim.add_argument("--horizon", type=float, default=12.0, help="months to simulate")
    sim.add_argument("--dt", type=float, default=0.01, help="integration step, months")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = load_config(args.config)
        config = apply_overrides(
            config,
            era=args.era,
            output_format=args.output_format,
            out_dir=args.out,
            manifest_path=args.manifest,
            max_breaks=args.max_breaks,
            min_seg_frac=args.min_seg,
            ms16_eps=args.eps,
            ms16_zeta=args.zeta,
            ms16_kappa=args.kappa,
            policy_multiplier=args.multiplier,
            classification_tol=args.tol,
            render_figures=False if args.no_figures else None,
        )
        if args.command == "build":
            return cmd_build(config)
        if args.command == "analyze":
            return cmd_analyze(config)
        if args.command == "breaks":
            return cmd_breaks(config)
        if args.command == "compare":
            return cmd_compare(config)
        if args.command == "policy":
            return cmd_policy(config, args.u, args.v, args.i)
        if args.command == "simulate":
            return cmd_simulate(config, args.u0, args.lam, args.f, args.horizon, args.dt)
        parser.error(f"unknown command {args.command!r}")
    except (FitError, IntegrationError, DomainError) as exc:
        print(f"uvstar: infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (IngestError, SeriesError, UvstarError, OSError) as exc:
        print(f"uvstar: {exc}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
