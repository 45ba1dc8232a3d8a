"""Immutable sets of 1-based record ids with sorted-array set algebra."""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from ._kernels import difference, intersect, union

_EMPTY = np.empty(0, dtype=np.uint32)


class TidSet:
    """Strictly increasing sequence of record ids supporting &, |, -.

    Ids are 1-based everywhere, matching how records are numbered in
    reports and rule files.
    """

    __slots__ = ("_arr",)

    def __init__(self, ids: Iterable[int] = ()):
        arr = np.fromiter((int(i) for i in ids), dtype=np.int64)
        if arr.size and arr.min() < 1:
            raise ValueError("record ids must be >= 1")
        arr = np.unique(arr)  # sorts and deduplicates
        self._arr = arr.astype(np.uint32)

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "TidSet":
        # trusted constructor: arr already sorted unique uint32
        ts = object.__new__(cls)
        ts._arr = arr
        return ts

    @classmethod
    def empty(cls) -> "TidSet":
        return cls._wrap(_EMPTY)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(int(i) for i in self._arr)

    def __len__(self) -> int:
        return int(self._arr.size)

    def __bool__(self) -> bool:
        return self._arr.size > 0

    def __iter__(self) -> Iterator[int]:
        return (int(i) for i in self._arr)

    def __contains__(self, rid: object) -> bool:
        if not isinstance(rid, int):
            return False
        pos = int(np.searchsorted(self._arr, rid))
        return pos < self._arr.size and int(self._arr[pos]) == rid

    def __and__(self, other: "TidSet") -> "TidSet":
        return TidSet._wrap(intersect(self._arr, other._arr))

    def __or__(self, other: "TidSet") -> "TidSet":
        return TidSet._wrap(union(self._arr, other._arr))

    def __sub__(self, other: "TidSet") -> "TidSet":
        return TidSet._wrap(difference(self._arr, other._arr))

    def issubset(self, other: "TidSet") -> bool:
        return len(self & other) == len(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TidSet):
            return NotImplemented
        return bool(np.array_equal(self._arr, other._arr))

    def __hash__(self) -> int:
        return hash(self._arr.tobytes())

    def __repr__(self) -> str:
        inner = ",".join(str(int(i)) for i in self._arr[:20])
        if self._arr.size > 20:
            inner += f",... ({self._arr.size} ids)"
        return f"TidSet({{{inner}}})"
