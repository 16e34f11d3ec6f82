"""Command-line front end.

Subcommands:
    check <scheme>          run the condition checkers, compare to the
                            expected outcomes for builtin schemes
    converge <scheme>       empirical convergence order on the reference system
    longrun <config-file>   long-time energy experiment, CSV output
    resonance               resonance-module scan and non-resonance margin

Exit status 0 means every assertion the subcommand makes passed; divergence
or a truth-table mismatch exits nonzero.
"""

import argparse
import sys as _sys

from .errors import DivergenceError, ErknError
from .harness import (read_config, run_checks, run_convergence, run_longrun,
                      run_resonance)


def _cmd_check(args):
    outcome = run_checks(args.scheme)
    print(f"scheme {args.scheme}")
    for r in outcome.reports:
        verdict = "pass" if r.passed else "fail"
        expected = outcome.expected.get(r.name)
        suffix = ""
        if expected is not None:
            suffix = "  (expected {})".format("pass" if expected else "fail")
            if r.name in outcome.mismatches:
                suffix += "  MISMATCH"
        print(f"  {r.name:<15} {verdict:<5} max_residual={r.max_residual:.3e}{suffix}")
    if outcome.mismatches:
        print(f"mismatch against expected outcomes: {', '.join(outcome.mismatches)}")
        return 1
    return 0


def _cmd_converge(args):
    h_list = [float(v) for v in args.h_list.split(",")]
    report = run_convergence(args.scheme, h_list, t_end=args.t_end,
                             epsilon_inv=args.omega)
    print(f"scheme {args.scheme}, t_end={args.t_end:g}, omega={args.omega:g}")
    for h, e in zip(report.h_list, report.errors):
        print(f"  h={h:<8g} error={e:.6e}")
    if report.exact:
        print("  errors at roundoff level; slope not fitted (exact)")
        return 0
    print(f"  slope = {report.slope:.3f}")
    if not report.passed:
        print("  slope outside [1.8, 2.2]")
        return 1
    return 0


def _cmd_longrun(args):
    cfg = read_config(args.config)
    if args.h is not None:
        cfg.h = args.h
    if args.t_end is not None:
        cfg.t_end = args.t_end
    if args.omega is not None:
        cfg.epsilon_inv = args.omega
    if args.output is not None:
        cfg.output_path = args.output
    if args.sample_every is not None:
        cfg.sample_every = args.sample_every
    if args.full_paper_run:
        cfg.t_end = 10000.0
    try:
        series = run_longrun(cfg)
    except DivergenceError as err:
        print(f"diverged at step {err.step_index}; partial CSV in {cfg.output_path}",
              file=_sys.stderr)
        return 1
    print(f"wrote {len(series.t)} rows to {cfg.output_path}")
    return 0


def _cmd_resonance(args):
    lambdas = [float(v) for v in args.lambdas.split(",")]
    epsilon = 1.0 / args.omega if args.omega is not None else None
    print(run_resonance(lambdas, args.N, args.tol, args.h, epsilon))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="erkn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structure checks against expected outcomes")
    p.add_argument("scheme")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("converge", help="empirical convergence order")
    p.add_argument("scheme")
    p.add_argument("--h-list", default="0.02,0.01,0.005",
                   help="comma-separated stepsizes, descending")
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--omega", type=float, default=10.0,
                   help="inverse of the small parameter epsilon")
    p.set_defaults(func=_cmd_converge)

    p = sub.add_parser("longrun", help="long-time energy experiment -> CSV")
    p.add_argument("config", help="flat key = value config file")
    p.add_argument("--h", type=float)
    p.add_argument("--t-end", type=float)
    p.add_argument("--omega", type=float)
    p.add_argument("--output")
    p.add_argument("--sample-every", type=int)
    p.add_argument("--full-paper-run", action="store_true",
                   help="integrate to t = 10000 regardless of the config")
    p.set_defaults(func=_cmd_longrun)

    p = sub.add_parser("resonance", help="resonance module scan")
    p.add_argument("--lambda", dest="lambdas", default="1,1.4142135623730951,2",
                   help="comma-separated frequency vector")
    p.add_argument("--N", type=int, default=3, help="max |k|_1 to enumerate")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--h", type=float, default=None)
    p.add_argument("--omega", type=float, default=None,
                   help="inverse epsilon; with --h enables the margin report")
    p.set_defaults(func=_cmd_resonance)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ErknError, KeyError) as err:
        print(f"error: {err}", file=_sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
