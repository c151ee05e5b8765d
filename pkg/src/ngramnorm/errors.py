"""Exception hierarchy shared by all ngramnorm modules."""


class NormalizerError(Exception):
    """Base class for every error raised by this package."""


class EmptyTokenError(NormalizerError, ValueError):
    """A token was empty after preprocessing."""


class ConfigurationError(NormalizerError, ValueError):
    """Invalid parameters or inputs (empty corpus, bad k, bad cutoff...)."""


class RuleValidationError(NormalizerError, ValueError):
    """A rule violates the dictionary's constraints."""


class UnknownKeyError(NormalizerError, KeyError):
    """A wrong-side substring is not a key of the rule dictionary."""


class IncompatibleDictionariesError(NormalizerError, ValueError):
    """Dictionaries with different ``k_max`` or recording mode were combined."""


class StaleTraceError(NormalizerError, LookupError):
    """A candidate trace references a rule the dictionary no longer holds."""


class ModelFormatError(NormalizerError, ValueError):
    """A model file is truncated, malformed, or has an unsupported version."""
