"""Exception types shared across the package."""


class PrivwordError(Exception):
    """Base class for all errors raised by this package."""


class MorphismSpecError(PrivwordError, ValueError):
    """A morphism could not be built from the given rules or spec string."""


class EmptyImageError(PrivwordError):
    """A morphism with an empty letter image was used where a fixed point is needed."""


class UnknownLetterError(PrivwordError):
    """A word contains a letter outside the declared alphabet."""


class NotProlongableError(PrivwordError):
    """The morphism is not prolongable on the requested seed letter."""


class UnknownConstructionError(PrivwordError):
    """No recursive construction is registered under the given name."""


class BudgetExceededError(PrivwordError):
    """Materializing a prefix would exceed the configured symbol cap."""


class OutOfRangeError(PrivwordError, ValueError):
    """An index or cut size lies outside the word."""


class EmptyPatternError(PrivwordError, ValueError):
    """Occurrence queries require a non-empty pattern."""


class EmptyWordError(PrivwordError, ValueError):
    """The operation is undefined for the empty word."""


class NonBinaryError(PrivwordError, ValueError):
    """The operation is defined for binary words only."""


class NotAFactorError(PrivwordError):
    """The queried word is not a factor of the indexed prefix."""


class CertificationTooShortError(PrivwordError):
    """The index is not certified far enough to answer the query."""


class NotPrivilegedError(PrivwordError):
    """The word is not privileged."""


class DomainViolationError(PrivwordError, ValueError):
    """The word is not in the domain of the chosen reduction map."""


class RangeViolationError(PrivwordError, ValueError):
    """The word is not in the range of the chosen reduction map."""


class IndexTooSmallError(PrivwordError, ValueError):
    """The closed form applies only from a minimum index upward."""
