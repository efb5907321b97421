"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for all errors raised by metricdim."""


class ParseError(GraphError, ValueError):
    """Malformed edge-list text, family spec or set literal."""


class VertexIndexError(GraphError, IndexError):
    """A vertex index is outside ``range(n_vertices)``."""


class DuplicateEdge(GraphError, ValueError):
    pass


class SelfLoop(GraphError, ValueError):
    pass


class DuplicateLabel(GraphError, ValueError):
    pass


class DisconnectedGraph(GraphError, ValueError):
    pass


class BadParameter(GraphError, ValueError):
    """A constructor was called outside its supported parameter range."""


class BadParams(BadParameter):
    """A named vertex set was requested outside its documented range."""


class NotABijection(GraphError, ValueError):
    pass


class DifferentCopies(GraphError, ValueError):
    pass


class BadCliqueIndex(GraphError, ValueError):
    pass


class EmptySet(GraphError, ValueError):
    pass


class SetTooSmall(GraphError, ValueError):
    pass


class BudgetExceeded(GraphError):
    """The exact search hit its candidate-evaluation budget.

    ``best`` carries the best known (not certified optimal) result, if any.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best
