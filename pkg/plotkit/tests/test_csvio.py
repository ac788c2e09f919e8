import pytest

from plotkit import EmptyData, MissingColumn, read_table

from conftest import write_csv


def test_reads_metadata_header_and_typed_cells(tmp_path):
    path = write_csv(
        tmp_path / "t.csv",
        ["x", "y", "flag"],
        [["0.5", "1.25", "true"], ["1.0", "", "false"]],
        metadata=("generator: sweep", "points: 2"),
    )
    table = read_table(path)
    assert table.header == ("x", "y", "flag")
    assert table.metadata == ("generator: sweep", "points: 2")
    assert len(table) == 2
    assert table.column("x") == [0.5, 1.0]
    assert table.column("y") == [1.25, None]
    assert table.column("flag") == [True, False]


def test_non_numeric_cells_stay_strings(tmp_path):
    path = write_csv(
        tmp_path / "t.csv",
        ["x", "kind"],
        [["1.0", "fully-inseparable"]],
    )
    assert read_table(path).column("kind") == ["fully-inseparable"]


def test_missing_column_names_the_file_and_choices(tmp_path):
    path = write_csv(tmp_path / "t.csv", ["x", "y"], [["1", "2"]])
    table = read_table(path)
    with pytest.raises(MissingColumn) as exc:
        table.column("z")
    assert "z" in str(exc.value)
    assert "t.csv" in str(exc.value)
    assert "x, y" in str(exc.value)


def test_header_only_file_is_empty_data(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("# meta\nx,y\n")
    with pytest.raises(EmptyData):
        read_table(path)


def test_blank_file_is_empty_data(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("")
    with pytest.raises(EmptyData):
        read_table(path)
