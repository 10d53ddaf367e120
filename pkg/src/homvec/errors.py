"""Exception types shared across the package."""


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


class GuardError(RuntimeError):
    """Raised when a computation would exceed a desk-scale resource guard."""

    def __init__(self, guard: str, message: str):
        super().__init__(f"guard '{guard}' exceeded: {message}")
        self.guard = guard


class FormatError(ValueError):
    """Raised on malformed serialized input; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
