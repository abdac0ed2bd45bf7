"""Exception hierarchy shared by the whole package."""


class HyperdeltaError(Exception):
    """Base class for every error raised by hyperdelta."""


class GraphError(HyperdeltaError, ValueError):
    """The input does not describe a valid simple connected graph."""


class EmptyGraphError(GraphError):
    pass


class LoopEdgeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DisconnectedError(GraphError):
    pass


class InvalidVertexError(GraphError):
    pass


class LimitExceeded(HyperdeltaError):
    """An exact search would exceed its configured cap; no approximation is returned."""


class BudgetExceeded(LimitExceeded):
    pass


class CapExceeded(LimitExceeded):
    pass


class ConstructionError(HyperdeltaError, ValueError):
    """Parameters do not define a member of the requested graph family."""


class SizeTooSmallError(ConstructionError):
    pass


class MultiEdgeError(ConstructionError):
    pass


class OrderViolationError(ConstructionError):
    pass


class ConstraintViolationError(ConstructionError):
    pass


class OddSizeError(ConstructionError):
    pass


class InvalidSizeError(ConstructionError):
    pass


class NotAdmissibleError(HyperdeltaError, ValueError):
    """The (g, c, count) triplet describes an empty graph class."""
