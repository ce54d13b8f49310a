"""Exception hierarchy.

Every error raised by the library derives from QRulesError.  Most also
derive from the closest builtin (ValueError, ZeroDivisionError, ...) so
generic exception handling keeps working.
"""


class QRulesError(Exception):
    """Base class for all library errors."""


class MixedContexts(QRulesError, ValueError):
    """Operands belong to different coefficient rings."""


class NonPrimeModulus(QRulesError, ValueError):
    """Requested prime-field modulus is not prime."""


class UnsupportedNesting(QRulesError, ValueError):
    """Polynomial-extension rings may be nested at most twice."""


class NotInvertible(QRulesError, ArithmeticError):
    """Element has no multiplicative inverse in its ring."""


class RequiresField(QRulesError, TypeError):
    """Operation is only defined over a field."""


class InvalidIndex(QRulesError, ValueError):
    """Index argument must be a positive integer."""


class DivisionByZero(QRulesError, ZeroDivisionError):
    """Division by the zero polynomial or zero element."""


class InexactDivision(QRulesError, ArithmeticError):
    """Polynomial division left a nonzero remainder.

    The offending remainder is kept on the exception so callers can
    inspect or report it.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class BothZero(QRulesError, ValueError):
    """gcd(0, 0) is undefined."""


class IndexOutOfBound(QRulesError, IndexError):
    """Requested index exceeds the stored bound of a tabulated object."""


class InconsistentRule(QRulesError, ValueError):
    """No linear quantum addition rule has the given first coefficients."""


class AffineSumNotOne(QRulesError, ValueError):
    """Affine-combination weights must sum to one."""


class RangeTooSmall(QRulesError, ValueError):
    """The bounded prover needs at least two values of each index."""


class MissingPrimeValue(QRulesError, ValueError):
    """A multiplicative family has no value assigned at a needed prime."""


class DimensionMismatch(QRulesError, ValueError):
    """Matrix/vector dimensions do not agree."""


class ParseError(QRulesError, ValueError):
    """Input text does not match the polynomial grammar.

    ``offset`` is the byte offset of the first offending character.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class NegativeExponent(ParseError):
    """Exponents must be nonnegative integer literals."""


class RationalOverNonField(ParseError):
    """Rational literals are only allowed over field coefficients."""


class SpecFormatError(QRulesError, ValueError):
    """A rule-spec or family-spec document is malformed."""
