"""Exception hierarchy."""


class CartanFreeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGenerator(CartanFreeError, ValueError):
    """A generator is not part of the algebra (or module family) it was used with."""


class InvalidParam(CartanFreeError, ValueError):
    """A numeric parameter violates an operation's precondition (e.g. ``m = 0``)."""


class PreconditionViolated(CartanFreeError, ValueError):
    """An operation was called outside the hypotheses it is stated under."""


class BudgetExceeded(CartanFreeError):
    """A bounded search ran out of steps before reaching a conclusion."""

    def __init__(self, message: str, steps: int = 0):
        super().__init__(message)
        self.steps = steps


class NotInFamily(CartanFreeError, ValueError):
    """A coefficient family cannot be written in the ``h_{n,k;alpha}`` basis."""


class ConfigError(CartanFreeError, ValueError):
    """Malformed run configuration."""
