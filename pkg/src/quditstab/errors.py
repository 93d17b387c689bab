"""Exception types shared across the package."""

from __future__ import annotations


class QuditStabError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(QuditStabError):
    """Two operands live on different (D, n)."""

    def __init__(self, left: tuple[int, int], right: tuple[int, int]):
        self.left = left
        self.right = right
        super().__init__(
            f"operands disagree: (D={left[0]}, n={left[1]}) vs (D={right[0]}, n={right[1]})"
        )


class NotAUnit(QuditStabError):
    """A scalar that must be invertible mod D is not."""

    def __init__(self, q: int, D: int):
        self.q = q
        self.D = D
        super().__init__(f"{q} is not a unit mod {D}")


class IndexOutOfRange(QuditStabError):
    """A qudit or row index falls outside the valid range."""


class PauliSyntaxError(QuditStabError):
    """Malformed Pauli product text; carries the offending position."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class TooManyGenerators(QuditStabError):
    """A presentation was given more than 2n generator rows."""


class InvalidStabilizer(QuditStabError):
    """Operation requires a valid stabilizer presentation and got an invalid one."""


class UnrealizableOp(QuditStabError):
    """A column operation with no counterpart in the gate catalog."""


class OracleTooLarge(QuditStabError):
    """Dense computation would exceed the configured dimension bound."""


class GroupTooLarge(QuditStabError):
    """Group closure exceeded the enumeration cap."""


class InternalError(QuditStabError):
    """An invariant the algorithms guarantee was found violated; indicates a bug."""
