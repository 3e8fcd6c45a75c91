"""Command-line front end: single runs, paired mode comparisons, multi-seed
sweeps, and the disease-model curve tables, all emitted as CSV.

Exit codes: 0 ok (completed or extinct), 1 usage, 2 config error,
3 runtime abort (cap breach, degenerate economy, unwritable output).
"""

import argparse
import sys
from dataclasses import fields, replace

from .core import ConfigError, Mode, SimConfig, build_config, read_config_file
from .metrics import aggregate_runs
from .runner import run_pair, run_simulation, run_sweep
from .std_model import StdParams, monogamy_ratio_curve, wife_factor_curve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONFIG = 2
EXIT_RUNTIME = 3


def _fmt(value) -> str:
    """Reals at 9 significant digits; integers untouched."""
    if isinstance(value, bool) or not isinstance(value, float):
        return str(value)
    return format(value, ".9g")


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fp:
        fp.write(",".join(header) + "\n")
        for row in rows:
            fp.write(",".join(_fmt(cell) for cell in row) + "\n")


RUN_CSV_HEADER = [
    "generation", "men", "women", "unmarried_women",
    "polygyny_variance", "wealth_gap_ratio",
]


def write_run_csv(path, rows):
    _write_csv(path, RUN_CSV_HEADER, (
        (r.generation, r.men_count, r.women_count, r.unmarried_women,
         r.polygyny_variance, r.wealth_gap_ratio)
        for r in rows
    ))


COMPARE_CSV_HEADER = [
    "seed", "generation", "wealth_gap_monogamy", "wealth_gap_polygyny",
    "gap_difference",
]


def write_compare_csv(path, pairs):
    def rows():
        for pair in pairs:
            for mono, poly in zip(pair.monogamy.rows, pair.polygyny.rows):
                yield (pair.seed, mono.generation, mono.wealth_gap_ratio,
                       poly.wealth_gap_ratio,
                       mono.wealth_gap_ratio - poly.wealth_gap_ratio)
    _write_csv(path, COMPARE_CSV_HEADER, rows())


SWEEP_CSV_HEADER = [
    "generation", "runs", "men_mean", "women_mean", "unmarried_women_mean",
    "polygyny_variance_mean", "polygyny_variance_median",
    "polygyny_variance_q25", "polygyny_variance_q75",
    "wealth_gap_mean", "wealth_gap_median", "wealth_gap_q25", "wealth_gap_q75",
]


def write_sweep_csv(path, summaries):
    _write_csv(path, SWEEP_CSV_HEADER, (
        (s.generation, s.runs, s.men_mean, s.women_mean, s.unmarried_women_mean,
         s.polygyny_variance_mean, s.polygyny_variance_median,
         s.polygyny_variance_q25, s.polygyny_variance_q75,
         s.wealth_gap_mean, s.wealth_gap_median, s.wealth_gap_q25,
         s.wealth_gap_q75)
        for s in summaries
    ))


def _param_label(params: StdParams) -> str:
    return (f"beta{params.wife_infection_prob:g}"
            f"_gamma{params.sterility_prob:g}")


def write_wife_factor_csv(path, params_list, q_max):
    curves = [wife_factor_curve(p, q_max) for p in params_list]
    header = ["wives"] + [f"coefficient_{_param_label(p)}" for p in params_list]
    rows = (
        [curves[0][i][0]] + [curve[i][1] for curve in curves]
        for i in range(q_max)
    )
    _write_csv(path, header, rows)


def write_population_ratio_csv(path, params_list, k_max):
    table = monogamy_ratio_curve(k_max, params_list)
    header = ["generation"] + [f"ratio_{_param_label(p)}" for p in params_list]
    _write_csv(path, header, ([k] + ratios for k, ratios in table))


def _echo_config(config: SimConfig, out=sys.stdout):
    for f in fields(config):
        value = getattr(config, f.name)
        if isinstance(value, Mode):
            value = value.value
        print(f"{f.name} = {value}", file=out)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; the CLI contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_seed_range(text: str):
    """'A..B' (inclusive) or a single 'N'."""
    if ".." in text:
        first, _, last = text.partition("..")
        try:
            lo, hi = int(first), int(last)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad seed range {text!r}") from None
        if lo > hi:
            raise argparse.ArgumentTypeError(f"empty seed range {text!r}")
        return range(lo, hi + 1)
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad seed range {text!r}") from None
    return range(value, value + 1)


def _add_sim_arguments(parser, with_seed=True):
    parser.add_argument("--config", metavar="PATH",
                        help="key = value config file; flags override it")
    if with_seed:
        parser.add_argument("--seed", type=int, metavar="N",
                            help="base random seed (default 0)")
    parser.add_argument("--mode", choices=[m.value for m in Mode],
                        help="marriage system (default polygyny)")
    parser.add_argument("--generations", type=int, metavar="N",
                        help="number of generations to simulate (default 12)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="marriagesim",
                     description="Generational marriage dynamics simulator")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="single simulation run")
    _add_sim_arguments(run)
    run.add_argument("--out", default="run_metrics.csv", metavar="PATH")

    compare = commands.add_parser(
        "compare", help="paired monogamy/polygyny runs with shared initial wealth")
    _add_sim_arguments(compare)
    compare.add_argument("--seed-count", type=int, default=50, metavar="N",
                         help="number of paired seeds, starting at --seed")
    compare.add_argument("--out", default="wealth_gap_compare.csv", metavar="PATH")

    sweep = commands.add_parser("sweep", help="multi-seed aggregated sweep")
    _add_sim_arguments(sweep, with_seed=False)
    sweep.add_argument("--seeds", type=_parse_seed_range, default=range(0, 50),
                       metavar="A..B", help="inclusive seed range (default 0..49)")
    sweep.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="parallel worker processes")
    sweep.add_argument("--out", default="sweep_summary.csv", metavar="PATH")

    std = commands.add_parser(
        "std", help="disease-model curve tables (no simulation)")
    std.add_argument("--birth-rate", type=float, default=3.0, metavar="F")
    std.add_argument("--wife-infection", type=float, default=0.04, metavar="F")
    std.add_argument("--husband-infection", type=float, default=0.04, metavar="F")
    std.add_argument("--sterility", type=float, nargs="+", default=[0.2, 0.4],
                     metavar="F", help="one column per sterility probability")
    std.add_argument("--family-wives", type=float, default=8.0, metavar="F",
                     help="average wives per family for the ratio curve")
    std.add_argument("--max-curve-wives", type=int, default=8, metavar="N")
    std.add_argument("--max-curve-generations", type=int, default=15, metavar="N")
    std.add_argument("--out", default=".", metavar="DIR",
                     help="directory for the two curve CSVs")
    return parser


def _load_sim_config(args) -> SimConfig:
    file_values = read_config_file(args.config) if args.config else {}
    overrides = {
        "mode": getattr(args, "mode", None),
        "total_generations": getattr(args, "generations", None),
        "seed": getattr(args, "seed", None),
    }
    return build_config(file_values, overrides)


def _cmd_run(args) -> int:
    config = _load_sim_config(args)
    report = run_simulation(config)
    write_run_csv(args.out, report.rows)
    _echo_config(config)
    print(f"status: {report.describe()}")
    print(f"wrote: {args.out}")
    return EXIT_OK if report.ok else EXIT_RUNTIME


def _cmd_compare(args) -> int:
    config = _load_sim_config(args)
    if args.seed_count < 1:
        raise ConfigError("--seed-count must be >= 1")
    base = config.seed
    pairs = [run_pair(config, seed) for seed in range(base, base + args.seed_count)]
    write_compare_csv(args.out, pairs)
    _echo_config(config)
    aborted = 0
    for pair in pairs:
        for report in (pair.polygyny, pair.monogamy):
            if not report.ok:
                aborted += 1
                print(f"seed {pair.seed} ({report.config.mode.value}): "
                      f"{report.describe()}", file=sys.stderr)
    print(f"pairs: {len(pairs)}")
    print(f"wrote: {args.out}")
    return EXIT_OK if aborted == 0 else EXIT_RUNTIME


def _cmd_sweep(args) -> int:
    config = _load_sim_config(args)
    if args.jobs < 1:
        raise ConfigError("--jobs must be >= 1")
    seeds = list(args.seeds)
    reports = run_sweep(config, seeds, jobs=args.jobs)
    summaries = aggregate_runs([report.rows for report in reports])
    write_sweep_csv(args.out, summaries)
    _echo_config(config)
    for seed, report in zip(seeds, reports):
        if not report.ok:
            print(f"seed {seed}: {report.describe()}", file=sys.stderr)
    statuses = [report.status for report in reports]
    print(f"seeds: {len(seeds)} "
          f"(completed {statuses.count('completed')}, "
          f"extinct {statuses.count('extinct')}, "
          f"aborted {sum(1 for r in reports if not r.ok)})")
    print(f"wrote: {args.out}")
    return EXIT_OK


def _cmd_std(args) -> int:
    try:
        params_list = [
            StdParams(
                baseline_birth_rate=args.birth_rate,
                wife_infection_prob=args.wife_infection,
                husband_infection_prob=args.husband_infection,
                sterility_prob=gamma,
                wives_per_family=args.family_wives,
            )
            for gamma in args.sterility
        ]
        if args.max_curve_wives < 1 or args.max_curve_generations < 1:
            raise ValueError("curve lengths must be >= 1")
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    import os

    factor_path = os.path.join(args.out, "std_wife_factor.csv")
    ratio_path = os.path.join(args.out, "std_population_ratio.csv")
    write_wife_factor_csv(factor_path, params_list, args.max_curve_wives)
    write_population_ratio_csv(ratio_path, params_list, args.max_curve_generations)
    print(f"wrote: {factor_path}")
    print(f"wrote: {ratio_path}")
    return EXIT_OK


_COMMANDS = {
    "run": _cmd_run,
    "compare": _cmd_compare,
    "sweep": _cmd_sweep,
    "std": _cmd_std,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"marriagesim: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"marriagesim: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
