"""Exception hierarchy shared by all modules."""


class SmoothabilityError(Exception):
    """Base class for all errors raised by this package."""


class SemigroupError(SmoothabilityError, ValueError):
    pass


class EmptyInput(SemigroupError):
    pass


class GcdNotOne(SemigroupError):
    pass


class NotMember(SemigroupError):
    pass


class MultiplicityTooSmall(SemigroupError):
    pass


class GenusTooSmall(SemigroupError):
    pass


class BelowConductor(SemigroupError):
    pass


class BadParameters(SmoothabilityError, ValueError):
    pass


class ConfigurationError(SmoothabilityError, ValueError):
    """Invalid or degenerate point configuration."""


class DuplicatePoint(ConfigurationError):
    pass


class RankDeficient(ConfigurationError):
    pass


class ZeroGaleColumn(ConfigurationError):
    pass


class DegenerateConfig(ConfigurationError):
    pass


class BadShape(ConfigurationError):
    pass


class TooLargeForExhaustive(ConfigurationError):
    pass


class HypothesisViolated(ConfigurationError):
    pass


class RetryExhausted(SmoothabilityError, RuntimeError):
    pass


class BadRange(SmoothabilityError, ValueError):
    pass


class BadDegree(SmoothabilityError, ValueError):
    pass
