"""Exception hierarchy for the whole package.

Every failure mode that callers are expected to handle gets its own class,
so tests and the command line layer can distinguish "the input was bad"
(usage errors, exit code 3) from "the mathematical claim is false"
(refutations, exit code 1), which are returned as values, not raised.
"""

from __future__ import annotations


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class ZeroInversion(AlgebraError):
    """Attempted to invert zero in a field."""


class ContextMismatch(AlgebraError):
    """Operands live in different variable contexts or fields."""


class ZeroPolynomial(AlgebraError):
    """Leading-term data requested for the zero polynomial."""


class VariableEscape(AlgebraError):
    """A polynomial mentions a variable missing from the target context."""


class ZeroDivisorArg(AlgebraError):
    """A colon or saturation was requested with respect to zero."""


class NotMonomial(AlgebraError):
    """An operation that needs a monomial ideal got a non-monomial one."""


class NotSquarefree(AlgebraError):
    """A squarefree monomial ideal was required."""


class UnknownVertex(AlgebraError):
    """A vertex outside the complex's vertex set was referenced."""


class VoidComplex(AlgebraError):
    """The complex with no faces at all was passed where it is not defined."""


class NotHomogeneous(AlgebraError):
    """A graded construction was requested for a non-homogeneous ideal."""


class ScalarSearchExhausted(AlgebraError):
    """No scalar vector produced a witness within the attempt budget."""


class NoGVDCertificate(AlgebraError):
    """A chain construction was requested for an ideal with no
    decomposability certificate."""


class HypothesisFailed(AlgebraError):
    """A certified-conclusion routine found one of its hypotheses false.

    The failing hypothesis is identified by a stable string tag so callers
    (and tests) can assert exactly which check failed.
    """

    def __init__(self, tag: str, detail: str = ""):
        self.tag = tag
        self.detail = detail
        super().__init__(f"hypothesis failed: {tag}" + (f" ({detail})" if detail else ""))


class StrategyDisagreement(AlgebraError):
    """Two supposedly equivalent decision strategies returned different answers."""


class BadParameter(AlgebraError):
    """A command or constructor parameter is outside its documented range."""


class ParseError(AlgebraError):
    """Input text failed to parse; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class ReplayMismatch(AlgebraError):
    """A recorded certificate failed re-verification."""
