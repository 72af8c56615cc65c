"""Exception hierarchy shared by every engine module."""


class G3EnumError(Exception):
    pass


class DomainError(G3EnumError, ValueError):
    """An argument lies outside the domain of the requested quantity."""


class QueryError(G3EnumError, ValueError):
    """A class polynomial or RT query is malformed."""


class ConsistencyError(G3EnumError, AssertionError):
    """Two routes disagree, or a count that must be integral is not."""


class MemoConflictError(ConsistencyError):
    """A memo key was rebound to a different value."""
