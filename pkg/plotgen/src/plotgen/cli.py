"""Script entry point: plotgen <figure-id> <csv-path> <out-path>."""

from __future__ import annotations

import argparse
import sys

from .render import PlotgenError, figure_spec, render_figure


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="plotgen",
        description="Render one concurrence figure from an xxring figure CSV.",
    )
    parser.add_argument("figure_id", type=int, help="figure id, 1..4")
    parser.add_argument("csv_path", help="input CSV from `xxring figure`")
    parser.add_argument("out_path", help="output image path (png, pdf, ...)")
    args = parser.parse_args(argv)

    try:
        series = render_figure(figure_spec(args.figure_id, args.csv_path, args.out_path))
    except (PlotgenError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out_path} ({len(series)} series)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
