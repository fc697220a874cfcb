"""Exception taxonomy shared across the package.

Input validation raises plain ValueError. NumericalError marks failures of
the numerical machinery itself (divergent iterations, degenerate systems,
unsimulatable models) so callers can tell the two apart.
"""

__all__ = ["NumericalError"]


class NumericalError(RuntimeError):
    """A numerical procedure failed on otherwise valid inputs."""
