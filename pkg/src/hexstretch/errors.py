"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: :class:`DomainError` and
:class:`ConvergenceError` (and their subclasses) exit with status 2.
"""


class HexError(Exception):
    """Base class for all library errors."""


class DomainError(HexError, ValueError):
    """Input outside the domain where a formula or construction is defined."""


class DegenerateError(DomainError):
    """Input sits exactly on a degenerate configuration (coincident points, alpha = pi/2, ...)."""


class IdealLimit(DomainError):
    """Construction hits the ideal limit: an edge of length zero, an infinite strip width."""


class ConvergenceError(HexError, RuntimeError):
    """A numerical solver failed to bracket or converge."""

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics


class OutOfChart(DomainError):
    """Foliation coordinate names no point of the hexagon."""


class OutsideHexagon(DomainError):
    """Point lies outside the hexagon it is being charted against."""


class TraceError(HexError):
    """Boundary tracing reached an unglued long edge."""
