"""Exception types raised by the library."""


class NotHermitian(ValueError):
    """Operand is not Hermitian within tolerance."""


class NotPsd(ValueError):
    """Operand has an eigenvalue below the PSD tolerance."""


class NoConvergence(RuntimeError):
    """The eigensolver failed to converge."""


class DimMismatch(ValueError):
    """Operands act on incompatible spaces."""


class BadTable(ValueError):
    """Classical probability table is malformed."""


class SingularFisher(ArithmeticError):
    """An outcome has vanishing probability but non-vanishing derivative,
    so the Fisher information diverges."""


class IncompletePolicy(ValueError):
    """An adaptive policy lacks an entry for a reachable outcome history."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of a closed form."""
