"""Exception and error classes raised by the ``maxarc`` package.

Every error subclasses :class:`MaxArcError`, so callers can ``try``-``except`` on the root class
or on the specific error documented by each public function.

Verification outcomes are never raised: a failed theorem or golden check is recorded in the
returned report instead.
"""


class MaxArcError(Exception):
    """Root parent error subclassed by all other ``maxarc`` errors.

    Attributes:
        parameters (dict): The offending inputs, if the raiser passed them. Empty dict otherwise.

    Keyword Args:
        parameters (dict): The offending inputs. (Optional)
    """

    def __init__(self, *args, **kwargs):
        self.parameters = kwargs.pop("parameters", None) or {}
        super(MaxArcError, self).__init__(*args, **kwargs)


class InvalidParametersError(MaxArcError):
    """Raised when an input violates an operation's preconditions.

    This error is also subclassed by other more specific parameter errors.
    """

    pass


class FieldDegreeError(InvalidParametersError):
    """Raised when the extension degree m is outside the supported range."""

    pass


class InvalidModulusError(InvalidParametersError):
    """Raised when a modulus has the wrong degree or is reducible over GF(2)."""

    pass


class FieldMismatchError(InvalidParametersError):
    """Raised when elements of two different field contexts are combined."""

    pass


class SubfieldError(InvalidParametersError):
    """Raised when a relative trace targets a degree that does not divide m."""

    pass


class DependentBasisError(InvalidParametersError):
    """Raised when elements meant as a GF(2) basis are linearly dependent."""

    pass


class DimensionMismatchError(InvalidParametersError):
    """Raised when matrices or words of incompatible shapes are combined."""

    pass


class InadmissibleBetaError(InvalidParametersError):
    """Raised when x^2 + beta*x + 1 is reducible, so beta cannot define a standard pencil."""

    pass


class InvalidArcParametersError(InvalidParametersError):
    """Raised for arc parameters outside the construction's range (Denniston s, PG(3) gcd)."""

    pass


class InvalidCharSumParametersError(InvalidParametersError):
    """Raised for character-sum arguments that the closed forms exclude."""

    pass


class UnsupportedSearchWeightError(InvalidParametersError):
    """Raised when a low-weight search bound lies outside 1..6."""

    pass


class ZeroInversionError(MaxArcError, ZeroDivisionError):
    """Raised when inverting the zero element of a field."""

    pass


class BudgetExceededError(MaxArcError):
    """Raised when an exhaustive computation would exceed its enumeration budget.

    Attributes:
        required (int): The number of enumeration steps the computation needs.
        budget (int): The budget in effect.
    """

    def __init__(self, message="", required=None, budget=None, **kwargs):
        super(BudgetExceededError, self).__init__(message, **kwargs)
        self.required = required
        self.budget = budget


class InvalidDistributionError(MaxArcError):
    """Raised when a weight distribution is inconsistent with the code it claims to describe."""

    pass


class CliUsageError(MaxArcError):
    """Raised by the command-line parser instead of exiting, so usage errors map to exit code 1."""

    def __init__(self, message="", usage=""):
        super(CliUsageError, self).__init__(message)
        self.message = message
        self.usage = usage

    def __repr__(self):
        return "%s(%r)" % (self.__class__.__name__, self.message)
