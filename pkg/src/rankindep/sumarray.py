"""Fixed-size array with logarithmic point assignment and range sums.

This is the sum-array used by the fast statistics: a binary indexed
(Fenwick) tree over 1-based cells.  Assignment overwrites a cell, which
is emulated by adding the difference to the stored value.

The compiled statistic kernels in :mod:`rankindep._kernels` inline the
same tree walk for speed; this class is the reference-sized, checked
version of the data structure.
"""

from __future__ import annotations

import numpy as np

from .errors import ZeroSizeError

__all__ = ["SumArray"]


class SumArray:
    """Integer array of fixed size ``n`` with O(log n) updates and sums.

    Examples
    --------
    >>> s = SumArray(4)
    >>> s.assign(1, 2)
    >>> s.assign(3, 5)
    >>> s.suffix_sum(2)
    5
    """

    __slots__ = ("_n", "_tree", "_cells", "_total")

    def __init__(self, n: int):
        n = int(n)
        if n < 1:
            raise ZeroSizeError(f"SumArray size must be positive, got {n}")
        self._n = n
        self._tree = np.zeros(n + 1, dtype=np.int64)
        self._cells = np.zeros(n + 1, dtype=np.int64)
        self._total = 0

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, index: int) -> int:
        self._check(index)
        return int(self._cells[index])

    def __repr__(self) -> str:
        return f"SumArray({self._cells[1:].tolist()})"

    @property
    def total(self) -> int:
        return self._total

    def _check(self, index: int) -> None:
        if not 1 <= index <= self._n:
            raise IndexError(f"index {index} outside 1..{self._n}")

    def assign(self, index: int, value: int) -> None:
        """Set cell `index` to `value`."""
        self._check(index)
        value = int(value)
        delta = value - int(self._cells[index])
        if delta == 0:
            return
        self._cells[index] = value
        self._total += delta
        tree = self._tree
        n = self._n
        j = index
        while j <= n:
            tree[j] += delta
            j += j & -j

    def prefix_sum(self, y: int) -> int:
        """Sum of cells ``1..y``."""
        self._check(y)
        tree = self._tree
        s = 0
        j = y
        while j > 0:
            s += int(tree[j])
            j -= j & -j
        return s

    def suffix_sum(self, y: int) -> int:
        """Sum of cells ``y..n``."""
        self._check(y)
        if y == 1:
            return self._total
        return self._total - self.prefix_sum(y - 1)
