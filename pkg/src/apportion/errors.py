"""Exception hierarchy shared by the solvers, parsers and front ends."""

from __future__ import annotations


class ApportionmentError(Exception):
    """Base class for engine errors."""


class InfeasibleError(ApportionmentError):
    """The requested house size cannot be realized by any divisor.

    Carries the feasible house range (when known) so callers can explain
    what totals would have been achievable.
    """

    def __init__(self, message, feasible_range=None):
        super().__init__(message)
        self.feasible_range = feasible_range


class TieError(ApportionmentError):
    """No divisor realizes the target house size exactly.

    The attached :class:`~apportion.core.TieReport` names the states whose
    rounding boundaries coincide. Resolution requires an explicit tie
    policy; the engine never breaks ties silently.
    """

    def __init__(self, report):
        super().__init__(
            "tie between %s at divisor %s"
            % (", ".join(sorted(report.tied_states)), report.boundary_divisor)
        )
        self.report = report


class DatasetParseError(ApportionmentError):
    """A population file could not be parsed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
        self.line = line
