"""Typed failure modes for recipe loading and rendering."""


class PlotkitError(Exception):
    """Base class for everything plotkit raises deliberately."""


class RecipeError(PlotkitError):
    """The recipe file is malformed or internally inconsistent.

    Collects every problem found so a broken recipe can be fixed in one
    edit instead of a retry loop.
    """

    def __init__(self, path, problems):
        self.path = str(path)
        self.problems = list(problems)
        lines = "\n".join(f"  - {p}" for p in self.problems)
        super().__init__(f"{self.path}: {len(self.problems)} problem(s)\n{lines}")


class EmptyData(PlotkitError):
    """A CSV had a header but no data rows, or no usable points for a panel."""


class MissingColumn(PlotkitError):
    """A recipe asked for a column the CSV does not carry."""

    def __init__(self, column, path, available):
        self.column = column
        self.path = str(path)
        super().__init__(
            f"column {column!r} not in {self.path} "
            f"(has: {', '.join(available)})"
        )
