"""Exact multiplicities of irreducibles in hook components of matrix tensor powers."""

from .errors import (
    HookdecError,
    IndexOutOfRange,
    InvalidPartition,
    NonDistinctParts,
    OddSize,
    ResourceLimit,
    SizeMismatch,
)
from .partitions import Bipartition, FrobeniusCoordinates, Partition, SkewShape

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "FrobeniusCoordinates",
    "HookdecError",
    "IndexOutOfRange",
    "InvalidPartition",
    "NonDistinctParts",
    "OddSize",
    "Partition",
    "ResourceLimit",
    "SizeMismatch",
    "SkewShape",
]
