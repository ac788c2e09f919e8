"""Exception types.

ConfigError subclasses signal bad user input (CLI exit code 2); everything
deriving from OptomechError is a runtime numerical/physical failure (exit 3).
"""


class OptomechError(Exception):
    """Base for runtime physics / numerics failures."""


class SingularMatrix(OptomechError):
    pass


class SingularLyapunov(OptomechError):
    """The Lyapunov operator kron(A,I)+kron(I,A) is numerically singular
    (some eigenvalue pair of A sums to ~0, e.g. an undamped mode)."""


class NoConvergence(OptomechError):
    pass


class NotHermitian(OptomechError):
    pass


class QuadratureNotConverged(OptomechError):
    pass


class Unstable(OptomechError):
    """Requested quantity only exists for a stable drift matrix."""


class NoPhysicalRoot(OptomechError):
    pass


class DomainError(OptomechError):
    """Input outside the validity domain of a formula (e.g. eta at Delta <= 0)."""


class DegenerateCoupling(OptomechError):
    pass


class NonPhysicalInput(OptomechError):
    """Matrix handed in is not a physical covariance matrix."""


class BadIndex(OptomechError):
    pass


class ConfigError(Exception):
    """Base for user-input problems."""


class ParseError(ConfigError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ValidationError(ConfigError):
    def __init__(self, problems):
        if isinstance(problems, str):
            problems = [problems]
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))
