"""
Graph errors
"""


class GraphValidationError(ValueError):
    """Raised when a multigraph violates its structural invariants"""


class NoSuchEdgeError(ValueError):
    """Raised when an edge is not present in the graph"""

    def __init__(self, edge):
        self.edge = tuple(edge)
        super().__init__(f"Edge {self.edge} is not in the graph")


class LoopContractionError(ValueError):
    """Raised when contraction of a loop is requested"""


class InvalidPartitionError(ValueError):
    """Raised when a partition is not over the graph's terminals"""


class SharedNonTerminalError(ValueError):
    """Raised when the two parts of a gluing share a non-terminal vertex"""


class TerminalMismatchError(ValueError):
    """Raised when terminal lists of the two parts differ from the gluing set"""


class TerminalMissingError(ValueError):
    """Raised when a terminal label is not a vertex of the graph"""


class GraphFormatError(ValueError):
    """Raised when a graph or split file does not match its schema"""
