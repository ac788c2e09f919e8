"""Figure recipes: a small YAML schema mapping sweep CSVs onto panels.

A recipe names the CSV files, a panel grid, and for each panel which
column is x, which columns are drawn as series, and the axis dressing.
Everything is validated up front; `load_recipe` either returns a fully
checked FigureRecipe or raises RecipeError listing every problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import yaml

from .errors import RecipeError

STYLES = ("solid", "dashed", "dotted", "dashdot", "points")
SCALES = ("linear", "log")


@dataclass(frozen=True)
class SeriesSpec:
    column: str
    label: str
    style: str = "solid"


@dataclass(frozen=True)
class PanelSpec:
    x: str
    series: tuple[SeriesSpec, ...]
    csv: int = 0
    x_label: str = ""
    y_label: str = ""
    y_scale: str = "linear"
    title: str = ""


@dataclass(frozen=True)
class FigureRecipe:
    output: str
    csv: tuple[str, ...]
    panels: tuple[PanelSpec, ...]
    rows: int = 1
    cols: int = 1
    title: str = ""
    source: str = field(default="", compare=False)


def _require(mapping, key, kind, problems, where, default=None):
    if key not in mapping:
        if default is not None:
            return default
        problems.append(f"{where}: missing required key {key!r}")
        return None
    val = mapping[key]
    if kind is int and isinstance(val, bool):
        problems.append(f"{where}.{key}: expected an integer, got a boolean")
        return None
    if not isinstance(val, kind):
        problems.append(
            f"{where}.{key}: expected {kind.__name__}, got {type(val).__name__}"
        )
        return None
    return val


def _parse_series(raw, problems, where):
    if not isinstance(raw, dict):
        problems.append(f"{where}: expected a mapping")
        return None
    unknown = set(raw) - {"column", "label", "style"}
    for key in sorted(unknown):
        problems.append(f"{where}: unknown key {key!r}")
    column = _require(raw, "column", str, problems, where)
    if column is not None and not column:
        problems.append(f"{where}.column: must not be empty")
        column = None
    label = raw.get("label", column or "")
    style = raw.get("style", "solid")
    if style not in STYLES:
        problems.append(
            f"{where}.style: {style!r} is not one of {', '.join(STYLES)}"
        )
    if column is None or not isinstance(label, str):
        if not isinstance(label, str):
            problems.append(f"{where}.label: expected str")
        return None
    return SeriesSpec(column=column, label=label, style=style)


def _parse_panel(raw, n_csv, problems, where):
    if not isinstance(raw, dict):
        problems.append(f"{where}: expected a mapping")
        return None
    known = {"csv", "x", "x_label", "y_label", "y_scale", "title", "series"}
    for key in sorted(set(raw) - known):
        problems.append(f"{where}: unknown key {key!r}")
    x = _require(raw, "x", str, problems, where)
    csv_index = raw.get("csv", 0)
    if not isinstance(csv_index, int) or isinstance(csv_index, bool):
        problems.append(f"{where}.csv: expected an integer index")
        csv_index = 0
    elif not 0 <= csv_index < n_csv:
        problems.append(
            f"{where}.csv: index {csv_index} out of range (have {n_csv} files)"
        )
        csv_index = 0
    y_scale = raw.get("y_scale", "linear")
    if y_scale not in SCALES:
        problems.append(f"{where}.y_scale: {y_scale!r} is not linear or log")
        y_scale = "linear"
    raw_series = raw.get("series")
    series = []
    if not isinstance(raw_series, list) or not raw_series:
        problems.append(f"{where}.series: expected a non-empty list")
    else:
        for i, entry in enumerate(raw_series):
            spec = _parse_series(entry, problems, f"{where}.series[{i}]")
            if spec is not None:
                series.append(spec)
    for key in ("x_label", "y_label", "title"):
        if key in raw and not isinstance(raw[key], str):
            problems.append(f"{where}.{key}: expected str")
    if x is None or not series:
        return None
    return PanelSpec(
        x=x,
        series=tuple(series),
        csv=csv_index,
        x_label=str(raw.get("x_label", "")),
        y_label=str(raw.get("y_label", "")),
        y_scale=y_scale,
        title=str(raw.get("title", "")),
    )


def parse_recipe(raw, source="<memory>") -> FigureRecipe:
    problems: list[str] = []
    if not isinstance(raw, dict):
        raise RecipeError(source, ["top level: expected a mapping"])
    known = {"title", "output", "layout", "csv", "panels"}
    for key in sorted(set(raw) - known):
        problems.append(f"top level: unknown key {key!r}")

    output = _require(raw, "output", str, problems, "top level")
    if output is not None and not output:
        problems.append("top level.output: must not be empty")

    csv_paths: tuple[str, ...] = ()
    raw_csv = raw.get("csv")
    if not isinstance(raw_csv, list) or not raw_csv:
        problems.append("csv: expected a non-empty list of paths")
    elif not all(isinstance(p, str) and p for p in raw_csv):
        problems.append("csv: every entry must be a non-empty string")
    else:
        csv_paths = tuple(raw_csv)

    rows = cols = 1
    layout = raw.get("layout", {"rows": 1, "cols": 1})
    if not isinstance(layout, dict):
        problems.append("layout: expected a mapping with rows and cols")
    else:
        rows = _require(layout, "rows", int, problems, "layout", default=1)
        cols = _require(layout, "cols", int, problems, "layout", default=1)
        rows = 1 if rows is None else rows
        cols = 1 if cols is None else cols
        if rows < 1 or cols < 1:
            problems.append("layout: rows and cols must be at least 1")
            rows, cols = max(rows, 1), max(cols, 1)

    panels: list[PanelSpec] = []
    raw_panels = raw.get("panels")
    if not isinstance(raw_panels, list) or not raw_panels:
        problems.append("panels: expected a non-empty list")
    else:
        for i, entry in enumerate(raw_panels):
            spec = _parse_panel(
                entry, max(len(csv_paths), 1), problems, f"panels[{i}]"
            )
            if spec is not None:
                panels.append(spec)
        if len(raw_panels) > rows * cols:
            problems.append(
                f"layout: {rows}x{cols} grid cannot hold {len(raw_panels)} panels"
            )

    title = raw.get("title", "")
    if not isinstance(title, str):
        problems.append("title: expected str")
        title = ""

    if problems:
        raise RecipeError(source, problems)
    return FigureRecipe(
        output=output,
        csv=csv_paths,
        panels=tuple(panels),
        rows=rows,
        cols=cols,
        title=title,
        source=str(source),
    )


def load_recipe(path) -> FigureRecipe:
    try:
        with open(path) as fh:
            raw = yaml.safe_load(fh)
    except yaml.YAMLError as exc:
        raise RecipeError(path, [f"not valid YAML: {exc}"]) from exc
    return parse_recipe(raw, source=path)
