"""Exception hierarchy shared by every module of the package."""


class StrongPartError(Exception):
    """Base class for all errors raised by strongpart."""


class ValidationError(StrongPartError, ValueError):
    """Input does not describe a valid object."""


class MissingOrientation(ValidationError):
    pass


class DoubleOrientation(ValidationError):
    pass


class IntraPartArc(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class TooFewParts(ValidationError):
    pass


class UnsupportedPartSize(ValidationError):
    pass


class EmptySet(ValidationError):
    pass


class MalformedInput(ValidationError):
    pass


class LengthMismatch(MalformedInput):
    pass


class PreconditionViolated(ValidationError):
    pass


class NotATournament(ValidationError):
    pass


class SamePart(ValidationError):
    pass


class NotMutuallyC1(ValidationError):
    pass


class BadSpec(ValidationError):
    pass


class NoExtensionExists(StrongPartError):
    pass


class UnsupportedConfig(ValidationError):
    pass


class ScopeUnknown(ValidationError):
    pass


class ResourceBudgetExceeded(StrongPartError):
    """The search ran out of its node budget.

    ``checkpoint`` names the file that lets a later run resume.
    """

    def __init__(self, message, checkpoint=None):
        super().__init__(message)
        self.checkpoint = checkpoint
