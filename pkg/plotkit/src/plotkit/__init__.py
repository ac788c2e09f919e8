"""plotkit: renders sweep CSVs from the optomech CLI into figures.

Talks to the simulator only through its files — generate CSVs with
`python3 -m optomech preset <name> --out <dir>`, then render them with a
recipe. No imports from the simulator package.
"""

from .csvio import Table, read_table
from .errors import EmptyData, MissingColumn, PlotkitError, RecipeError
from .recipe import FigureRecipe, PanelSpec, SeriesSpec, load_recipe, parse_recipe
from .render import PanelReport, RenderReport, SeriesReport, render

__all__ = [
    "EmptyData",
    "FigureRecipe",
    "MissingColumn",
    "PanelReport",
    "PanelSpec",
    "PlotkitError",
    "RecipeError",
    "RenderReport",
    "SeriesReport",
    "SeriesSpec",
    "Table",
    "load_recipe",
    "parse_recipe",
    "read_table",
    "render",
]
