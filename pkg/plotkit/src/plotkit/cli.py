"""Command line front end: plotkit render --recipe <file> [--out <path>]."""

from __future__ import annotations

import argparse
import sys

from .errors import PlotkitError, RecipeError
from .recipe import load_recipe
from .render import render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="Render sweep CSVs into figures described by YAML recipes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_render = sub.add_parser("render", help="render one recipe to an image")
    p_render.add_argument("--recipe", required=True, help="recipe YAML file")
    p_render.add_argument(
        "--out", default=None, help="output image path (overrides the recipe)"
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        recipe = load_recipe(args.recipe)
        report = render(recipe, out=args.out)
    except RecipeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PlotkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    n_series = sum(len(p.series) for p in report.panels)
    print(f"wrote {report.output} ({len(report.panels)} panel(s), {n_series} series)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
