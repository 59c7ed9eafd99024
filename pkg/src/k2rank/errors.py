"""Exception hierarchy shared by the library and the command line front end."""


class K2RankError(Exception):
    pass


class DomainError(K2RankError, ValueError):
    """Input outside the regime the computation is defined for."""


class NotFoundError(K2RankError, LookupError):
    """A bounded search finished without a solution."""


class InvariantViolation(K2RankError, RuntimeError):
    """A mathematical invariant failed; always indicates a bug, never bad input."""


class FastPathMismatch(InvariantViolation):
    pass


class ConsistencyError(InvariantViolation):
    pass
