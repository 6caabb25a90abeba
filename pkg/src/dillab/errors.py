"""Exception hierarchy for dillab.

Every error raised on a violated precondition or failed certificate derives
from DillabError so callers (and the CLI) can separate contract violations
from programming bugs.
"""


class DillabError(Exception):
    pass


class NotIrreducible(DillabError):
    """Matrix/graph is not irreducible (digraph not strongly connected)."""


class NoDiagonalEntry(DillabError):
    """Matrix has no nonzero diagonal entry."""


class VertexOutOfRange(DillabError):
    """Vertex label outside 1..vertex_count."""


class DegreePreconditionViolated(DillabError):
    """Subdivision requires in-multiplicity 1 and out-multiplicity 1."""


class NoSignChange(DillabError):
    """No sign change found; caller must enlarge the search interval."""


class DomainError(DillabError):
    """Parameter outside the domain where the result is defined."""


class AlphaOutOfRange(DillabError):
    """alpha must be an integer in [1, theta(g)]."""


class RangeError(DillabError):
    """Requested range outside the validity window."""


class ValidationFailed(DillabError):
    """A validation contract or certified assertion failed."""


class GenusMismatch(DillabError):
    """Vectors or classes of different genus were combined."""


class NotPairwiseOrthogonal(DillabError):
    """Twist classes are not pairwise orthogonal under the symplectic form."""


class FixedPointOnCircle(DillabError):
    """The map has a fixed point on the sampling circle."""


class IncrementTooLarge(DillabError):
    """Angle increments stayed >= pi/2 even at the maximum sampling depth."""
