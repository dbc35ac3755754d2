"""Exception types shared across the package."""


class FarefabricError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInput(FarefabricError):
    """An argument violates an operation's precondition."""


class InsufficientData(FarefabricError):
    """Not enough observations to fit or forecast."""


class NoData(FarefabricError):
    """A query that needs at least one record found none."""


class UndefinedMetric(FarefabricError):
    """The requested metric has no defined value for this input."""


class AlreadyRegistered(FarefabricError):
    """A service instance id was registered twice under one service name."""


class NotFound(FarefabricError):
    """Referenced instance or entry does not exist."""


class NoInstanceAvailable(FarefabricError):
    """The load balancer was handed an empty instance list."""


class ConfigValidationError(FarefabricError):
    """A scenario config document failed validation. Message names the key."""
