"""
Tutte engine errors
"""


class TooLargeError(ValueError):
    """Raised when subset enumeration is requested on too many edges"""

    def __init__(self, edges: int, cap: int):
        self.edges = edges
        self.cap = cap
        super().__init__(f"Graph has {edges} edges; subset enumeration is capped at {cap}")


class DisconnectedGraphError(ValueError):
    """Raised when an operation requires a connected graph"""
