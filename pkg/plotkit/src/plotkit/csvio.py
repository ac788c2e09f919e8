"""Reader for the simulator's sweep CSVs.

The files start with a '#' metadata block, then a header row, then data.
Empty cells mark points the simulator could not evaluate (unstable
operating points); they come back as None so the renderer can break the
line there instead of drawing through the hole.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .errors import EmptyData, MissingColumn

_BOOLS = {"true": True, "false": False}


def _cell(text: str):
    if text == "":
        return None
    if text in _BOOLS:
        return _BOOLS[text]
    try:
        return float(text)
    except ValueError:
        return text


@dataclass(frozen=True)
class Table:
    path: str
    header: tuple[str, ...]
    metadata: tuple[str, ...]
    rows: tuple[tuple, ...]

    def __len__(self):
        return len(self.rows)

    def column(self, name: str) -> list:
        """One column as a list; None where the cell was empty."""
        try:
            i = self.header.index(name)
        except ValueError:
            raise MissingColumn(name, self.path, self.header) from None
        return [row[i] for row in self.rows]


def read_table(path) -> Table:
    metadata = []
    header = None
    rows = []
    with open(path, newline="") as fh:
        for record in csv.reader(fh):
            if not record:
                continue
            if record[0].startswith("#"):
                metadata.append(",".join(record).lstrip("# "))
                continue
            if header is None:
                header = tuple(record)
                continue
            rows.append(tuple(_cell(c) for c in record))
    if header is None or not rows:
        raise EmptyData(f"{path}: no data rows")
    return Table(
        path=str(path),
        header=header,
        metadata=tuple(metadata),
        rows=tuple(rows),
    )
