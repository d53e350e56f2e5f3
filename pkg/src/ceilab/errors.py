"""Exception hierarchy shared by all ceilab modules."""


class CeilabError(Exception):
    """Base class for every error raised by ceilab."""


class GraphError(CeilabError, ValueError):
    """Malformed graph input or a violated graph precondition."""


class IdealError(CeilabError, ValueError):
    """Invalid monomial-ideal input (zero ideal, bad ring size, ...)."""


class ResourceError(CeilabError):
    """A configured computation budget (generator cap, pair budget, time) was exceeded."""


class InconsistencyError(CeilabError):
    """A computed result contradicts a proven statement. Should never be raised."""


class HypothesisViolation(CeilabError, ValueError):
    """Input matrices do not satisfy the hypotheses of the rank lemma."""
