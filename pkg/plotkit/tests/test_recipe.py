import pytest
import yaml

from plotkit import RecipeError, load_recipe, parse_recipe

from conftest import RECIPES

# name -> (rows, cols, panels, series per panel)
SHIPPED = {
    "fig1a": (1, 1, 1, [3]),
    "fig1b": (1, 1, 1, [3]),
    "fig1c": (1, 1, 1, [3]),
    "fig1d": (1, 1, 1, [3]),
    "fig2": (1, 2, 2, [2, 2]),
    "fig3a": (1, 1, 1, [4]),
    "fig3b": (1, 1, 1, [2]),
    "fig3c": (1, 1, 1, [3]),
    "fig3d": (1, 1, 1, [2]),
    "fig4": (1, 2, 2, [3, 3]),
}

MINIMAL = {
    "output": "o.png",
    "csv": ["d.csv"],
    "panels": [{"x": "x", "series": [{"column": "y"}]}],
}


def _minimal(**edits):
    raw = yaml.safe_load(yaml.safe_dump(MINIMAL))
    raw.update(edits)
    return raw


def test_all_shipped_recipes_load_with_frozen_structure():
    found = sorted(p.stem for p in RECIPES.glob("*.yaml"))
    assert found == sorted(SHIPPED)
    for name, (rows, cols, n_panels, counts) in SHIPPED.items():
        recipe = load_recipe(RECIPES / f"{name}.yaml")
        assert (recipe.rows, recipe.cols) == (rows, cols), name
        assert len(recipe.panels) == n_panels, name
        assert [len(p.series) for p in recipe.panels] == counts, name
        assert recipe.output.endswith(".png")
        for panel in recipe.panels:
            assert panel.x == "sweep_value"


def test_shipped_recipes_cover_all_eleven_preset_csvs():
    csvs = set()
    for name in SHIPPED:
        csvs.update(load_recipe(RECIPES / f"{name}.yaml").csv)
    assert len(csvs) == 11


def test_minimal_recipe_parses_and_label_defaults_to_column():
    recipe = parse_recipe(_minimal())
    assert recipe.panels[0].series[0].label == "y"
    assert recipe.panels[0].series[0].style == "solid"
    assert recipe.panels[0].y_scale == "linear"
    assert recipe.panels[0].csv == 0


@pytest.mark.parametrize(
    "edits,needle",
    [
        ({"output": None}, "output"),
        ({"csv": []}, "csv"),
        ({"panels": []}, "panels"),
        ({"colour": "red"}, "unknown key 'colour'"),
        ({"layout": {"rows": 0, "cols": 1}}, "at least 1"),
    ],
)
def test_top_level_problems(edits, needle):
    raw = _minimal(**edits)
    if edits.get("output", "") is None:
        del raw["output"]
    with pytest.raises(RecipeError) as exc:
        parse_recipe(raw)
    assert needle in str(exc.value)


def test_panel_problems_are_collected_together():
    raw = _minimal(
        layout={"rows": 1, "cols": 2},
        panels=[
            {
                "x": "x",
                "y_scale": "cubic",
                "series": [{"column": "y", "style": "wavy"}],
            },
            {"series": [{"column": "y"}], "x": "x", "csv": 4},
        ],
    )
    with pytest.raises(RecipeError) as exc:
        parse_recipe(raw)
    msg = str(exc.value)
    assert "'cubic' is not linear or log" in msg
    assert "'wavy' is not one of" in msg
    assert "index 4 out of range" in msg
    assert len(exc.value.problems) == 3


def test_layout_too_small_for_panels():
    panel = {"x": "x", "series": [{"column": "y"}]}
    raw = _minimal(panels=[panel, panel, panel])
    with pytest.raises(RecipeError) as exc:
        parse_recipe(raw)
    assert "cannot hold 3 panels" in str(exc.value)


def test_series_without_column_is_rejected():
    raw = _minimal(panels=[{"x": "x", "series": [{"label": "huh"}]}])
    with pytest.raises(RecipeError) as exc:
        parse_recipe(raw)
    assert "missing required key 'column'" in str(exc.value)


def test_invalid_yaml_file_is_a_recipe_error(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("output: [unclosed\n")
    with pytest.raises(RecipeError) as exc:
        load_recipe(bad)
    assert "not valid YAML" in str(exc.value)


def test_non_mapping_top_level(tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("- just\n- a\n- list\n")
    with pytest.raises(RecipeError) as exc:
        load_recipe(bad)
    assert "expected a mapping" in str(exc.value)
