import subprocess
import sys
from pathlib import Path

import pytest

RECIPES = Path(__file__).resolve().parents[1] / "recipes"

PRESET_NAMES = (
    "fig1a", "fig1b", "fig1c", "fig1d",
    "fig2",
    "fig3a", "fig3b", "fig3c", "fig3d",
    "fig4a", "fig4b",
)


@pytest.fixture(scope="session")
def csv_workdir(tmp_path_factory):
    """A directory whose out/ holds every preset CSV.

    The CSVs come from the simulator's CLI in a subprocess; plotkit never
    imports the simulator.
    """
    root = tmp_path_factory.mktemp("csvs")
    out = root / "out"
    out.mkdir()
    for name in PRESET_NAMES:
        proc = subprocess.run(
            [sys.executable, "-m", "optomech", "preset", name, "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0, f"{name}: {proc.stderr}"
        assert (out / f"{name}.csv").is_file()
    return root


def write_csv(path, header, rows, metadata=("tool: test",)):
    lines = [f"# {m}" for m in metadata]
    lines.append(",".join(header))
    lines.extend(",".join(str(c) for c in row) for row in rows)
    path.write_text("\n".join(lines) + "\n")
    return path
