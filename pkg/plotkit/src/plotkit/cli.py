"""CLI: plot --csv <path>[,<path>...] --cols <list> --out <path> [--ylim a,b] [--log]

Each CSV path may carry an explicit legend label as `path:label`;
otherwise the file stem is used.
"""

import argparse
import sys

from .render import PlotkitError, PlotSpec, render


def _parse_csv_arg(arg):
    pairs = []
    for item in arg.split(","):
        path, sep, label = item.partition(":")
        pairs.append((path.strip(), label.strip() if sep else None))
    return tuple(pairs)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="plot", description=__doc__.splitlines()[0])
    parser.add_argument("--csv", required=True,
                        help="comma-separated CSV paths, optional :label suffixes")
    parser.add_argument("--cols", required=True,
                        help="comma-separated column names to draw")
    parser.add_argument("--out", required=True, help="output image path")
    parser.add_argument("--ylim", default=None,
                        help="y-axis limits as a,b (use --ylim=-a,b for negatives)")
    parser.add_argument("--log", action="store_true", help="log-scale error axis")
    parser.add_argument("--title", default=None)
    args = parser.parse_args(argv)

    ylim = None
    if args.ylim is not None:
        parts = args.ylim.split(",")
        if len(parts) != 2:
            parser.error("--ylim expects two comma-separated numbers")
        ylim = (float(parts[0]), float(parts[1]))

    spec = PlotSpec(
        csv_paths=_parse_csv_arg(args.csv),
        columns=tuple(c.strip() for c in args.cols.split(",") if c.strip()),
        out_path=args.out,
        ylim=ylim,
        log=args.log,
        title=args.title,
    )
    try:
        info = render(spec)
    except (PlotkitError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    print(f"wrote {info.path} ({info.width_px}x{info.height_px}, "
          f"{info.panel_rows} panel(s), {info.curves} curves)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
