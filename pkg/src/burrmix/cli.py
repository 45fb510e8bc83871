"""Command-line interface.

Subcommands: simulate, fit, debias, kde, report. Options common to the
estimation commands (seed, sweep counts, grid, time scale, ...) may also
be given in a `key = value` config file; explicit flags win over the
file, which wins over built-in defaults.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .pipeline import (RunConfig, cmd_debias, cmd_fit, cmd_kde, cmd_report,
                       ingest_csv, simulate, write_dataset_csv)


def _add_config_options(parser, *, sweeps=False, grid=False, weight=False,
                        bandwidth=False, chains=False, proposals=False):
    parser.add_argument("--config", metavar="FILE",
                        help="key = value file with defaults for the options "
                             "below")
    parser.add_argument("--seed", type=int, help="random seed (default 0)")
    parser.add_argument("--time-scale", type=float, dest="time_scale",
                        metavar="TAU",
                        help="divide input times by TAU before estimation "
                             "(outputs are mapped back)")
    if sweeps:
        parser.add_argument("--iters", type=int, dest="n_iter",
                            help="total Gibbs sweeps (default 60000)")
        parser.add_argument("--burnin", type=int, dest="burn_in",
                            help="sweeps discarded before retention "
                                 "(default 10000)")
        parser.add_argument("--thin", type=int,
                            help="keep every thin-th sweep (default 10)")
    if grid:
        parser.add_argument("--grid", metavar="LO:HI:N",
                            help="evaluation grid (default 0 to 1.5*max "
                                 "time, 200 points)")
    if weight:
        parser.add_argument("--weight", metavar="SPEC",
                            help="sampling weight: unit, length, or "
                                 "powexp:a,b")
    if bandwidth:
        parser.add_argument("--bandwidth", type=float, metavar="H",
                            help="kernel bandwidth (default: Silverman rule)")
    if chains:
        parser.add_argument("--chains", type=int,
                            help="independent chains to run and pool "
                                 "(default 1)")
    if proposals:
        parser.add_argument("--proposals", type=int, metavar="N",
                            help="proposal count for the acceptance chain")


def _config_from(args):
    config = RunConfig()
    if getattr(args, "config", None):
        config = RunConfig.from_file(args.config)
    overrides = {}
    for key in ("seed", "n_iter", "burn_in", "thin", "chains", "time_scale",
                "weight", "grid", "bandwidth", "proposals", "mode"):
        val = getattr(args, key, None)
        if val is not None:
            overrides[key] = val
    return config.updated(**overrides)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="burrmix",
        description="Density and survival estimation for weighted "
                    "(biased-sampling) duration data, with "
                    "Metropolis-Hastings de-biasing.")
    parser.add_argument("--version", action="version",
                        version=f"burrmix {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="generate a benchmark dataset")
    p.add_argument("--scenario", required=True,
                   help="lognormal-lb, gamma-exp, or burr-censored[:frac]")
    p.add_argument("--n", type=int, required=True, help="sample size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="data.csv", metavar="FILE",
                   help="output CSV (default data.csv)")

    p = sub.add_parser("fit", help="fit the mixture to a dataset")
    p.add_argument("data", help="input CSV (time[,event] per row)")
    _add_config_options(p, sweeps=True, grid=True, chains=True)
    p.add_argument("--a-nu", type=float, dest="a_nu")
    p.add_argument("--b-nu", type=float, dest="b_nu")
    p.add_argument("--b-gamma", type=float, dest="b_gamma",
                   help="k-scale hyperprior scale (default: median time)")
    p.add_argument("--b-phi", type=float, dest="b_phi")
    p.add_argument("--out", default="fit", metavar="DIR",
                   help="output directory (default fit/)")

    p = sub.add_parser("debias",
                       help="turn weighted draws into un-weighted draws")
    p.add_argument("data", nargs="?",
                   help="input CSV (required in empirical mode)")
    _add_config_options(p, sweeps=True, weight=True, proposals=True)
    p.add_argument("--mode", choices=("empirical", "posterior"),
                   help="proposal source (default: posterior when "
                        "--fit-dir is given, else empirical)")
    p.add_argument("--fit-dir", dest="fit_dir", metavar="DIR",
                   help="fit artifacts to draw posterior-predictive "
                        "proposals from")
    p.add_argument("--out", default="debias", metavar="DIR",
                   help="output directory (default debias/)")

    p = sub.add_parser("kde", help="kernel density estimate of a sample")
    p.add_argument("data", help="input CSV")
    _add_config_options(p, grid=True, bandwidth=True)
    p.add_argument("--variant", choices=("classic", "indirect"),
                   default="classic",
                   help="indirect divides kernel mass by its center, "
                        "undoing length bias")
    p.add_argument("--out", default="kde", metavar="DIR",
                   help="output directory (default kde/)")

    p = sub.add_parser("report",
                       help="summarize fit artifacts, with figures")
    p.add_argument("--fit-dir", dest="fit_dir", required=True, metavar="DIR")
    p.add_argument("--data", metavar="FILE", help="dataset CSV to overlay")
    p.add_argument("--debiased", metavar="FILE",
                   help="debiased.csv from the debias command")
    p.add_argument("--kde-classic", dest="kde_classic", metavar="FILE")
    p.add_argument("--kde-indirect", dest="kde_indirect", metavar="FILE")
    p.add_argument("--truth", metavar="SPEC",
                   help="weighted truth g, e.g. lognormal:0.5,0.5")
    p.add_argument("--weight", metavar="SPEC",
                   help="sampling weight, for deriving the un-weighted "
                        "truth f")
    p.add_argument("--out", default="report", metavar="DIR",
                   help="output directory (default report/)")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "simulate":
            dataset = simulate(args.scenario, args.n, args.seed)
            write_dataset_csv(args.out, dataset)
            print(f"wrote {args.out} (n={dataset.n}, "
                  f"events={dataset.n_events})")
        elif args.command == "fit":
            config = _config_from(args)
            for key in ("a_nu", "b_nu", "b_gamma", "b_phi"):
                val = getattr(args, key)
                if val is not None:
                    config = config.updated(**{key: val})
            dataset = ingest_csv(args.data)
            written = cmd_fit(dataset, config, args.out)
            for path in written:
                print(f"wrote {path}")
        elif args.command == "debias":
            config = _config_from(args)
            if config.weight is None:
                raise ValueError("debias requires --weight")
            dataset = ingest_csv(args.data) if args.data else None
            written = cmd_debias(config, args.out, dataset=dataset,
                                 fit_dir=args.fit_dir)
            for path in written:
                print(f"wrote {path}")
        elif args.command == "kde":
            config = _config_from(args)
            dataset = ingest_csv(args.data)
            written = cmd_kde(dataset, config, args.variant, args.out)
            for path in written:
                print(f"wrote {path}")
        elif args.command == "report":
            written = cmd_report(args.fit_dir, args.out,
                                 data_path=args.data,
                                 debiased_path=args.debiased,
                                 kde_classic_path=args.kde_classic,
                                 kde_indirect_path=args.kde_indirect,
                                 truth_spec=args.truth,
                                 weight_spec=args.weight)
            for path in written:
                print(f"wrote {path}")
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
