"""Exception types shared across the package."""


class HalinError(Exception):
    """Base class for all package-specific errors."""


class NotAHalinTree(HalinError):
    """The input tree cannot be the characteristic tree of a Halin graph."""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class NotInternalVertex(HalinError):
    """An operation that needs an internal tree vertex was given a leaf."""


class ColorOutOfRange(HalinError):
    """An assigned color index falls outside the declared palette."""


class GraphFormatError(HalinError):
    """Malformed graph file."""


class ColoringFormatError(HalinError):
    """Malformed coloring file."""


class NotCubic(HalinError):
    """The cubic coloring routine was given a non-cubic graph."""


class WrongBaseShape(HalinError):
    """Base-case coloring requested for a graph that is not a base shape."""


class RoleExtractionFailed(HalinError):
    """The longest-path reduction could not identify its vertex roles."""


class EmptyChoiceSet(HalinError):
    """A constrained color choice set came up empty; counting says it cannot."""


class StarViolationProduced(HalinError):
    """A construction step yielded an invalid coloring even after re-choice."""


class InternalInvariantBroken(HalinError):
    """A structural bound that must hold on every valid instance failed."""


class NoColorAvailable(HalinError):
    """Greedy and backtracking both ran out of admissible colors."""


class CycleTooShortForPattern(HalinError):
    """The cycle is shorter than the required pre-coloring prefix."""


class InvalidSpec(HalinError):
    """Generator parameters outside the supported family ranges."""


class NodeLimitReached(HalinError):
    """Search aborted at the node budget; the answer is inconclusive."""

    def __init__(self, message: str, nodes: int):
        super().__init__(message)
        self.nodes = nodes
