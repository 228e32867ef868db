"""Exception types shared across the library.

Every error carries an optional ``witness`` (an element, pair or index that
demonstrates the failure) so callers and the CLI can report it.
"""


class AlgebraError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str = "", witness=None):
        super().__init__(message)
        self.witness = witness


# -- field construction / arithmetic ----------------------------------------

class NotPrime(AlgebraError):
    """Characteristic is not a prime number."""


class NotIrreducible(AlgebraError):
    """Supplied modulus is not irreducible (or not monic of the right degree)."""


class Overflow(AlgebraError):
    """Field cardinality exceeds the configured integer width."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Inverse or negative power of the zero element."""


class NotADivisor(AlgebraError):
    """Requested subgroup order or exponent step does not divide q - 1."""


class FieldTooLarge(AlgebraError):
    """Operation requires a full-field sweep beyond the configured cap."""


# -- polynomials -------------------------------------------------------------

class HasConstantTerm(AlgebraError):
    """Decomposition requires a polynomial without constant term."""


class ZeroPolynomial(AlgebraError):
    """Decomposition of the zero polynomial is undefined."""


# -- oracle ------------------------------------------------------------------

class NotAPermutation(AlgebraError):
    """Compositional inverse requested for a non-bijective mapping."""


# -- criterion ---------------------------------------------------------------

class NotInSubgroup(AlgebraError):
    """Argument expected to lie in mu_d does not."""


class RSquareCondition(AlgebraError):
    """The exponent condition r^2 = 1 (mod s) does not hold."""


class NotInvolutionOnSubgroup(AlgebraError):
    """The induced subgroup map is not an involution of mu_d."""


# -- constructions / families ------------------------------------------------

class PreconditionViolated(AlgebraError):
    """A stated parameter condition fails; the message lists which."""


class EvenCharacteristic(AlgebraError):
    """Construction requires odd field cardinality."""


class CharacteristicDividesD(AlgebraError):
    """Closed-form coefficients divide by an integer the characteristic kills."""


class WrongFieldShape(AlgebraError):
    """Field does not have the cardinality shape the construction needs."""


class HValueZero(AlgebraError):
    """h vanishes on the relevant subgroup; witness holds the root."""


class UnknownFamily(AlgebraError):
    """Family identifier is not recognised."""


class HypothesisViolated(AlgebraError):
    """A required hypothesis fails; the message names it, witness shows where."""


class EvenQNoSolution(AlgebraError):
    """No parameter over an even-cardinality field satisfies the condition."""


class BaseNotInvolution(AlgebraError):
    """The base-field map that should be lifted is not an involution."""


# -- cross-checks / CLI ------------------------------------------------------

class InternalMismatch(AlgebraError):
    """Fast criterion and brute-force oracle disagree: an implementation bug."""


class ParseError(AlgebraError):
    """Malformed textual input; the message includes the offending fragment."""
