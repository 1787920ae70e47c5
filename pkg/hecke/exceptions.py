"""
Exceptions raised by the hecke app.
Management commands turn any HeckeError into a CommandError.
"""


class HeckeError(Exception):
    """Base class for every domain error in this app."""


class AmbientMismatch(HeckeError, ValueError):
    """Vectors or operators from different (n, d, scalars) were combined."""


class IndexOutOfRange(HeckeError, IndexError):
    """A letter, row or generator index outside its allowed range."""


class SpanError(HeckeError):
    """An operator image left the span of the listed words."""


class PoleError(HeckeError, ZeroDivisionError):
    """Specialization at a point where a denominator vanishes."""


class PartitionError(HeckeError, ValueError):
    """A malformed partition, tableau or generating sequence."""


class DegreeMismatch(HeckeError, ValueError):
    """Permutations or algebra elements of different degrees were combined."""


class SingularSystemError(HeckeError):
    """The joint representation did not give an invertible system."""


class PrecisionExhausted(HeckeError):
    """A t-adic series stayed zero up to the largest allowed precision."""
