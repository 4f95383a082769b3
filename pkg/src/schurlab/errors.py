"""Exception types shared across schurlab.

Everything raised on bad mathematical input derives from SchurlabError so
callers (in particular the CLI) can distinguish "your algebra is wrong"
from genuine bugs.  Index data carried by these exceptions uses the
presentation convention x1..xn, i.e. generator numbers are 1-based, even
though the library indexes coordinates from 0.
"""


class SchurlabError(Exception):
    """Base class for all schurlab domain errors."""


class SingularMatrix(SchurlabError):
    """A matrix that had to be invertible is not."""


class JacobiViolation(SchurlabError):
    """Structure constants fail the Jacobi identity.

    Attributes:
        triple:   (i, j, k) with 1 <= i < j < k, the offending generators
        residual: coordinates of [[xi,xj],xk] + [[xj,xk],xi] + [[xk,xi],xj]
    """

    def __init__(self, triple, residual):
        self.triple = triple
        self.residual = tuple(residual)
        i, j, k = triple
        terms = ", ".join(
            f"{c}*x{t + 1}" for t, c in enumerate(self.residual) if c
        )
        super().__init__(
            f"Jacobi identity fails on (x{i}, x{j}, x{k}); residual {terms}"
        )


class NotNilpotent(SchurlabError):
    """The lower central series stabilises at a nonzero subalgebra."""


class NotAnIdeal(SchurlabError):
    """A subspace passed as an ideal is not bracket-closed under L."""


class NotCentral(SchurlabError):
    """A subspace required to be central has nonzero bracket with L."""


class NotOneDimensional(SchurlabError):
    """A subspace required to be a line has dimension != 1."""


class ResourceCapExceeded(SchurlabError):
    """A free nilpotent construction would exceed the basis-size cap."""


class InvariantMismatch(SchurlabError):
    """A catalog entry failed its recorded (n, m, c) or multiplier check."""


class UnknownName(SchurlabError):
    """No catalog entry with the requested name."""


class MissingParameter(SchurlabError):
    """A parameterized catalog entry was requested without its parameter."""


class DslError(SchurlabError):
    """Base class for presentation-text errors; carries a line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DslSyntaxError(DslError):
    """Presentation text does not match the grammar."""


class UnknownGenerator(DslError):
    """A generator token x<i> is outside 1..dim."""


class DuplicateInconsistentBracket(DslError):
    """The same bracket is defined twice with conflicting values."""
