"""Exception hierarchy shared by every module."""


class HookdecError(ValueError):
    """Base class for precondition violations."""


class SizeMismatch(HookdecError):
    pass


class NonDistinctParts(HookdecError):
    pass


class IndexOutOfRange(HookdecError):
    pass


class OddSize(HookdecError):
    pass


class InvalidPartition(HookdecError):
    """Raised for malformed part vectors or unparsable partition text."""


class ResourceLimit(RuntimeError):
    """A request exceeds the configured computation cap."""
