"""Exception hierarchy shared by all queenfn modules."""


class QueenError(Exception):
    """Base class for every error raised by queenfn."""


class InvalidInput(QueenError, ValueError):
    """Malformed arguments: wrong length, out-of-range entries, bad text."""


class ValueOutOfRange(QueenError):
    """A Queen function evaluated to 0 somewhere on [1, n]."""


class NotAPermutation(QueenError):
    """A Queen function hit the same column twice."""


class NoSolutionExists(QueenError):
    """The board size admits no solution (n = 2 or n = 3)."""


class SizeMismatch(InvalidInput):
    """Generalized composition received inconsistent sizes."""


class NoWitness(QueenError):
    """No permutation with complete difference/sum residues exists for n."""


class LimitExceeded(QueenError):
    """The request is beyond the documented desk-scale ceiling."""


class AttackingPrefix(InvalidInput):
    """A partial placement given as a prefix contains attacking queens."""
