"""Exception hierarchy shared by every module in the package."""


class StanleyError(Exception):
    """Base class for all errors raised by stanleyverify."""


class ParameterError(StanleyError, ValueError):
    """A parameter lies outside the range an operation is defined on."""


class DomainError(StanleyError, ValueError):
    """A tiling does not belong to the domain of the requested map."""


class CountRangeError(StanleyError, IndexError):
    """A count table was asked for an index beyond the range it was built for."""


class TableLimitError(StanleyError, MemoryError):
    """Refusal to build a count table larger than the configured cap."""
