"""Exception types raised across the package."""


class GroupError(Exception):
    """Base class for every error raised by groupcond."""


class DefinitionError(GroupError, ValueError):
    """A group definition (cycle string, matrix, JSON document) is malformed."""


class IncompatibleElementsError(GroupError, ValueError):
    pass


class OrderCapExceededError(GroupError):
    def __init__(self, cap):
        super().__init__(f"group closure exceeded the order cap of {cap} elements")
        self.cap = cap


class NotInGroupError(GroupError, ValueError):
    pass


class PrimeNotDividingError(GroupError, ValueError):
    pass


class NotPElementError(GroupError, ValueError):
    pass


class IncompatibleSubgroupsError(GroupError, ValueError):
    pass


class InvalidWitnessError(GroupError, ValueError):
    pass


class TableInvalidError(GroupError, ValueError):
    """A character table failed to parse or failed one of its load-time checks.

    ``reason`` is a short tag: ``parse``, ``shape``, ``unsupported``,
    ``degree-sum``, ``class-sizes``, ``orthogonality``, ``inverse-map`` or
    ``power-map``.
    """

    def __init__(self, reason, message):
        super().__init__(f"{reason}: {message}")
        self.reason = reason


class TableInconsistentError(GroupError, ValueError):
    pass


class WrongTableError(GroupError, ValueError):
    pass
