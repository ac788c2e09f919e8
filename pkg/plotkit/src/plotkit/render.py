"""Turn a FigureRecipe plus its CSVs into a PNG and a structural report.

The report mirrors what ended up on the canvas (panel grid, series
labels, point counts, axis ranges) so tests can check figure structure
without comparing pixels.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .csvio import Table, read_table
from .errors import EmptyData
from .recipe import FigureRecipe, PanelSpec

_LINESTYLE = {
    "solid": "-",
    "dashed": "--",
    "dotted": ":",
    "dashdot": "-.",
}


@dataclass(frozen=True)
class SeriesReport:
    column: str
    label: str
    n_points: int
    n_gaps: int


@dataclass(frozen=True)
class PanelReport:
    x_label: str
    y_label: str
    y_scale: str
    title: str
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    series: tuple[SeriesReport, ...]


@dataclass(frozen=True)
class RenderReport:
    output: str
    title: str
    rows: int
    cols: int
    panels: tuple[PanelReport, ...]


def _numeric(values, column, path):
    out = []
    for v in values:
        if v is None or isinstance(v, bool) or not isinstance(v, float):
            out.append(math.nan)
        else:
            out.append(v)
    if all(math.isnan(v) for v in out):
        raise EmptyData(f"{path}: column {column!r} has no numeric values")
    return out


def _draw_panel(ax, spec: PanelSpec, table: Table) -> PanelReport:
    x = _numeric(table.column(spec.x), spec.x, table.path)
    reports = []
    for series in spec.series:
        raw = table.column(series.column)
        y = [
            v if isinstance(v, float) and not isinstance(v, bool) else math.nan
            for v in raw
        ]
        kwargs = {"label": series.label}
        if series.style == "points":
            kwargs.update(linestyle="none", marker=".")
        else:
            kwargs["linestyle"] = _LINESTYLE[series.style]
        ax.plot(x, y, **kwargs)
        finite = sum(1 for v in y if not math.isnan(v))
        reports.append(
            SeriesReport(
                column=series.column,
                label=series.label,
                n_points=finite,
                n_gaps=len(y) - finite,
            )
        )
    if spec.y_scale == "log":
        ax.set_yscale("log")
    if spec.x_label:
        ax.set_xlabel(spec.x_label)
    if spec.y_label:
        ax.set_ylabel(spec.y_label)
    if spec.title:
        ax.set_title(spec.title)
    if any(s.label for s in spec.series):
        ax.legend(fontsize="small")
    return PanelReport(
        x_label=spec.x_label,
        y_label=spec.y_label,
        y_scale=spec.y_scale,
        title=spec.title,
        x_range=tuple(ax.get_xlim()),
        y_range=tuple(ax.get_ylim()),
        series=tuple(reports),
    )


def render(recipe: FigureRecipe, out: str | None = None) -> RenderReport:
    """Render the recipe; CSV and output paths resolve against the CWD."""
    tables: dict[int, Table] = {}
    for panel in recipe.panels:
        if panel.csv not in tables:
            tables[panel.csv] = read_table(recipe.csv[panel.csv])

    fig, axes = plt.subplots(
        recipe.rows,
        recipe.cols,
        figsize=(4.8 * recipe.cols, 3.4 * recipe.rows),
        squeeze=False,
    )
    flat = axes.ravel()
    try:
        panel_reports = []
        for ax, spec in zip(flat, recipe.panels):
            panel_reports.append(_draw_panel(ax, spec, tables[spec.csv]))
        for ax in flat[len(recipe.panels):]:
            ax.set_axis_off()
        if recipe.title:
            fig.suptitle(recipe.title)
        fig.tight_layout()
        out_path = Path(out if out is not None else recipe.output)
        if out_path.parent != Path("."):
            out_path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(out_path, dpi=120)
    finally:
        plt.close(fig)
    return RenderReport(
        output=str(out_path),
        title=recipe.title,
        rows=recipe.rows,
        cols=recipe.cols,
        panels=tuple(panel_reports),
    )
