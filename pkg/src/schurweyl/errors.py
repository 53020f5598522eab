"""Exception types raised by the library.

Every domain failure has its own class so that callers (and the CLI) can tell
the cases apart by type name alone.
"""


class SchurWeylError(ValueError):
    """Base class for all domain errors."""


class NotWeaklyDecreasing(SchurWeylError):
    pass


class NonPositiveRow(SchurWeylError):
    pass


class InvalidPermutation(SchurWeylError):
    pass


class DegreeMismatch(SchurWeylError):
    pass


class DegreeTooLarge(SchurWeylError):
    pass


class InvalidTableau(SchurWeylError):
    pass


class TooManyBoxes(SchurWeylError):
    pass


class NotQuasiIdempotent(SchurWeylError):
    pass


class ZeroElement(SchurWeylError):
    pass


class SizeTooLarge(SchurWeylError):
    pass


class BasisSolveFailure(SchurWeylError):
    """The image of a projector was not preserved by a tensor power.

    This signals a broken internal invariant, never bad user input.
    """


class TooManyRows(SchurWeylError):
    pass


class InvalidLabel(SchurWeylError):
    pass


class MissingTwistRange(SchurWeylError):
    pass
