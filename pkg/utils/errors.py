"""Exception hierarchy. ``exit_code`` is what the CLI returns for each class."""


class NormDiskError(Exception):
    exit_code = 1


class EmptyInput(NormDiskError, ValueError):
    """No points left after deduplication."""
    exit_code = 2


class PointParseError(NormDiskError, ValueError):
    exit_code = 3

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class NotStrictlyConvex(NormDiskError, ValueError):
    """The norm's unit circle contains a segment (e.g. l1, l-infinity)."""
    exit_code = 4


class SizeLimit(NormDiskError, ValueError):
    exit_code = 5


class InternalInconsistency(NormDiskError, RuntimeError):
    exit_code = 6


class StrictConvexityViolation(InternalInconsistency):
    """A triangle classified right (or obtuse) at two vertices."""


class ConvergenceFailure(InternalInconsistency):
    """A root finder ran out of iterations or could not bracket."""


class NoIntersection(NormDiskError, ValueError):
    """Requested bisector radius is below half the distance of the pair."""


class DegenerateTriangle(NormDiskError, ValueError):
    pass


class DegenerateLine(NormDiskError, ValueError):
    pass
