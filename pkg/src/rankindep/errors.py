"""Exception types raised by rankindep."""

from __future__ import annotations


class RankIndepError(Exception):
    """Base class for all errors raised by this package."""


class LengthMismatchError(RankIndepError, ValueError):
    def __init__(self, len_x: int, len_y: int):
        super().__init__(f"x and y differ in length ({len_x} != {len_y})")
        self.len_x = len_x
        self.len_y = len_y


class NonFiniteValueError(RankIndepError, ValueError):
    """A NaN or infinite value was found; ``index`` is its position."""

    def __init__(self, index: int, which: str = "x"):
        super().__init__(f"non-finite value in {which} at index {index}")
        self.index = index
        self.which = which


class TiesPresentError(RankIndepError, ValueError):
    """Duplicate values under the 'error' tie policy.

    ``pair`` holds the indices of the first tied pair found (in sort order).
    """

    def __init__(self, pair: tuple[int, int], which: str = "x"):
        super().__init__(
            f"tied values in {which} at indices {pair[0]} and {pair[1]}; "
            "use the 'random' tie policy to break them"
        )
        self.pair = pair
        self.which = which


class InvalidPermutationError(RankIndepError, ValueError):
    pass


class SampleTooSmallError(RankIndepError, ValueError):
    def __init__(self, n: int, minimum: int, what: str = "statistic"):
        super().__init__(f"{what} needs n >= {minimum}, got n = {n}")
        self.n = n
        self.minimum = minimum


class TooLargeForOracleError(RankIndepError, ValueError):
    def __init__(self, n: int, maximum: int):
        super().__init__(f"brute-force oracle limited to n <= {maximum}, got {n}")
        self.n = n
        self.maximum = maximum


class ZeroSizeError(RankIndepError, ValueError):
    pass


class NonFiniteStatError(RankIndepError, ValueError):
    pass
