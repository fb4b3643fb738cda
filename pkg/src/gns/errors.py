"""Exception hierarchy shared across the package."""


class GnsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(GnsError):
    """Operands live in ambient spaces of different dimensions."""


class InvalidPermutation(GnsError):
    """The given index sequence is not a bijection on coordinate positions."""


class InvalidGap(GnsError):
    """A candidate gap is malformed (zero vector, negative coordinate, wrong length)."""


class NotAMonoid(GnsError):
    """A candidate gap set is not the complement of an additively closed set."""


class NotGns(GnsError):
    """The generated submonoid provably has infinite complement."""


class Undetermined(GnsError):
    """Finiteness of the complement could not be certified within the given box.

    ``bound`` is the per-axis box that failed certification; ``failures`` holds
    a few non-member points found in the certification shell (diagnostics for
    a retry with a larger bound).
    """

    def __init__(self, message, bound=None, failures=()):
        super().__init__(message)
        self.bound = bound
        self.failures = tuple(failures)


class TrivialSemigroup(GnsError):
    """The operation is undefined for the full monoid N^d (empty gap set)."""


class NotNumericalSemigroup(GnsError):
    """Positive integers whose gcd is not 1 generate no numerical semigroup."""


class NotMinimalTriple(GnsError):
    """The three integers do not minimally generate a numerical semigroup."""


class InvalidFamilyParams(GnsError):
    """Family parameters violate the constructor's invariants."""


class FamilyDegenerate(GnsError):
    """The assembled generator set was not minimal: the built semigroup does
    not have the embedding dimension its family asserts."""


class WrongCase(GnsError):
    """A prediction was requested for parameters outside its branch."""


class LemmaViolation(GnsError):
    """A mathematically guaranteed fact failed to verify.

    These checks hold for every admissible input, so a violation indicates an
    implementation bug, never a legitimate outcome.
    """


class NotInScope(GnsError):
    """The semigroup does not satisfy the operation's preconditions."""


class BudgetExceeded(GnsError):
    """An enumeration hit its node or wall-clock cap.

    ``partial`` carries whatever results were collected before the cap hit,
    ``nodes`` the number of tree nodes visited.
    """

    def __init__(self, message, partial=None, nodes=0):
        super().__init__(message)
        self.partial = partial
        self.nodes = nodes


class UsageError(GnsError):
    """Malformed request (bad flag value, unknown format, inconsistent query)."""
