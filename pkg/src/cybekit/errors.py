class CybeError(Exception):
    """Base class for all errors raised by cybekit."""


class ShapeMismatch(CybeError, ValueError):
    pass


class SingularMatrix(CybeError, ValueError):
    pass


class NotALieAlgebra(CybeError, ValueError):
    pass


class NotARepresentation(CybeError, ValueError):
    pass


class NotPreLie(CybeError, ValueError):
    pass


class InvalidForm(CybeError, ValueError):
    pass


class NotBijective(CybeError, ValueError):
    pass


class NotACocycle(CybeError, ValueError):
    pass


class NotSkew(CybeError, ValueError):
    pass


class Degenerate(CybeError, ValueError):
    pass


class BudgetExceeded(CybeError, RuntimeError):
    pass
