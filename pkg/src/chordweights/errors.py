"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Operands live on different strand counts or permutation degrees."""


class ShapeError(ValueError):
    """A matrix does not have the required shape or symmetry."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured size guard."""


class ZeroModuleError(ValueError):
    """A label names a zero-dimensional representation (Ext(k) with k > n)."""


class ConsistencyError(RuntimeError):
    """An algebraic identity that must hold did not; indicates a bug."""


class ParseError(ValueError):
    """Malformed text input. ``position`` is a 0-based column in ``text``."""

    def __init__(self, message, text="", position=None, line=1):
        self.text = text
        self.position = position
        self.line = line
        if position is not None:
            message = f"{message} (line {line}, column {position + 1})"
            if text:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)
