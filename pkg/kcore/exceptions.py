from typing import Optional, Tuple


class KcoreException(Exception):
    """Base kcore exception.
    Other kcore exceptions should inherit from this.

    """


class KcoreValueError(KcoreException):
    """Malformed input: partition strings, words, JSON documents, arguments."""


class PartitionError(KcoreException):
    """Raised for invalid partitions, compositions and cells."""


class CoreError(KcoreException):
    """Base core related exception.

    Carries the offending cell (if any) in `cell` attribute.

    """
    def __init__(self, message: str, cell: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.cell = cell


class BoundError(CoreError):
    """Partition is not k-bounded."""


class LatticeError(KcoreException):
    """Invalid chains and lattice queries."""


class TableauError(KcoreException):
    """Invalid k-tableaux and words.

    Carries the offending cell (if any) in `cell` attribute.

    """
    def __init__(self, message: str, cell: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.cell = cell


class AffineError(KcoreException):
    """Affine permutation related exception."""


class EnumerationLimitExceeded(KcoreException):
    """Enumeration produced more items than allowed by `max_enum` setting."""
