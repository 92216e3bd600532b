"""Exception hierarchy shared by every module"""


class SemigroupError(ValueError):
    """Base class for all errors raised by the library"""


class DimensionMismatchError(SemigroupError):
    """Vector or matrix sizes do not agree"""


class ZeroGeneratorError(SemigroupError):
    """A generator list contains the zero element"""


class NotReducedError(SemigroupError):
    """The semigroup contains a nonzero element together with its inverse"""


class NotMinimalError(SemigroupError):
    """Some generator is a combination of the others"""

    def __init__(self, message: str, redundant=()):
        super().__init__(message)
        self.redundant = tuple(redundant)


class NotAffineError(SemigroupError):
    """The ambient group of a semigroup has torsion"""


class TooManyGeneratorsError(SemigroupError):
    """Split enumeration refused because 2^(l-1) is too large"""


class SplitError(SemigroupError):
    """A split of the generator indices is malformed"""


class SemigroupFileError(SemigroupError):
    """A semigroup text file could not be parsed"""


class GlueInvariantError(SemigroupError):
    """A construction produced a result that breaks a proven identity"""


class GlueInputError(SemigroupError):
    """A gluing recipe is malformed (wrong lengths, negative or zero gamma)"""
