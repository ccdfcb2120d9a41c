"""Exception types shared across the package."""


class PennyflipError(Exception):
    """Base class for all domain errors."""


class ExactArithmeticOverflow(PennyflipError):
    """A rational angle exceeded the configured integer width."""


class MismatchedGroup(PennyflipError):
    """Binary operation on elements of different dihedral groups."""


class FNotInGroup(PennyflipError):
    """The coin flip reflection is not an element of the requested D_n."""


class LengthMismatch(PennyflipError):
    """Strategy length does not match the player's turn count."""


class SearchBudgetExceeded(PennyflipError):
    """Brute-force game search asked for more rounds than the bound allows."""


class EmptyFixedSet(PennyflipError):
    """No intermediate state survives the opponent's moves; synthesis impossible."""


class NotUnitary(PennyflipError):
    """A complex 2x2 matrix failed the unitarity check."""
