"""End-to-end: render every shipped recipe from freshly generated preset CSVs.

Structure is checked (panels, labels, ranges, point counts), not pixels.
"""

import subprocess
import sys

import pytest

from plotkit import load_recipe, render

from conftest import RECIPES

# name -> (x range the panel must cover, rows in each backing CSV)
EXPECT = {
    "fig1a": ((0.5, 2.5), 201),
    "fig1b": ((0.5, 3.0), 201),
    "fig1c": ((0.5, 2.0), 201),
    "fig1d": ((0.5, 2.0), 301),
    "fig2": ((0.5, 1.5), 2001),
    "fig3a": ((0.5, 2.0), 151),
    "fig3b": ((0.5, 1.5), 201),
    "fig3c": ((0.5, 3.0), 251),
    "fig3d": ((0.0, 5.0), 101),
    "fig4": ((0.6, 1.6), 201),
}


@pytest.mark.parametrize("name", sorted(EXPECT))
def test_recipe_renders_preset_csv(name, csv_workdir, monkeypatch):
    monkeypatch.chdir(csv_workdir)
    (lo, hi), n_rows = EXPECT[name]
    recipe = load_recipe(RECIPES / f"{name}.yaml")
    report = render(recipe)
    assert (csv_workdir / "out" / f"{name}.png").stat().st_size > 0
    for panel in report.panels:
        assert panel.x_range[0] <= lo and panel.x_range[1] >= hi
        for series in panel.series:
            assert series.n_points > 0, series.column
            assert series.n_points + series.n_gaps == n_rows


def test_fig1a_series_labels_and_scale(csv_workdir, monkeypatch):
    monkeypatch.chdir(csv_workdir)
    report = render(load_recipe(RECIPES / "fig1a.yaml"))
    (panel,) = report.panels
    assert [s.label for s in panel.series] == ["mode 1", "mode 2", "mode 1 alone"]
    assert panel.y_scale == "log"
    assert panel.y_range[0] > 0


def test_fig4_combines_both_tripartite_sweeps(csv_workdir, monkeypatch):
    monkeypatch.chdir(csv_workdir)
    report = render(load_recipe(RECIPES / "fig4.yaml"))
    assert (report.rows, report.cols) == (1, 2)
    titles = [p.title for p in report.panels]
    assert titles == ["well separated modes", "nearly degenerate modes"]
    for panel in report.panels:
        assert [s.column for s in panel.series] == [
            "npt_min_m1",
            "npt_min_m2",
            "npt_min_cav",
        ]


def _cli(args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "plotkit", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def test_cli_renders_and_reports(csv_workdir):
    proc = _cli(
        ["render", "--recipe", str(RECIPES / "fig1a.yaml"), "--out", "cli.png"],
        csv_workdir,
    )
    assert proc.returncode == 0, proc.stderr
    assert "wrote cli.png" in proc.stdout
    assert (csv_workdir / "cli.png").stat().st_size > 0


def test_cli_invalid_recipe_exits_2(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("output: ''\ncsv: []\npanels: []\n")
    proc = _cli(["render", "--recipe", str(bad)], tmp_path)
    assert proc.returncode == 2
    assert "error:" in proc.stderr


def test_cli_missing_column_exits_3(tmp_path):
    (tmp_path / "d.csv").write_text("x,y\n1.0,2.0\n")
    recipe = tmp_path / "r.yaml"
    recipe.write_text(
        "output: o.png\ncsv: [d.csv]\n"
        "panels:\n  - x: x\n    series:\n      - column: nope\n"
    )
    proc = _cli(["render", "--recipe", str(recipe)], tmp_path)
    assert proc.returncode == 3
    assert "nope" in proc.stderr


def test_cli_missing_recipe_file_exits_1(tmp_path):
    proc = _cli(["render", "--recipe", "ghost.yaml"], tmp_path)
    assert proc.returncode == 1


def test_cli_missing_csv_exits_1(tmp_path):
    recipe = tmp_path / "r.yaml"
    recipe.write_text(
        "output: o.png\ncsv: [ghost.csv]\n"
        "panels:\n  - x: x\n    series:\n      - column: y\n"
    )
    proc = _cli(["render", "--recipe", str(recipe)], tmp_path)
    assert proc.returncode == 1
