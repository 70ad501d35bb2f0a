"""Flat indexing of the variables x_{ijk} of the sums-of-squares ring."""
from dataclasses import dataclass
from typing import Iterator, Tuple


@dataclass(frozen=True)
class VarIndexer:
    """Maps (i, j, k), with i in 1..n, j in 1..r, k in 1..s, to 0..rsn-1.

    Lower flat index means larger variable in degrevlex.
    """

    r: int
    s: int
    n: int

    def __post_init__(self) -> None:
        if min(self.r, self.s, self.n) < 1:
            raise ValueError(f"r, s, n must be positive, got [{self.r},{self.s},{self.n}]")

    @property
    def size(self) -> int:
        return self.r * self.s * self.n

    def flat(self, i: int, j: int, k: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.r and 1 <= k <= self.s):
            raise IndexError(f"({i},{j},{k}) out of range for [{self.r},{self.s},{self.n}]")
        return ((i - 1) * self.r + (j - 1)) * self.s + (k - 1)

    def unflat(self, index: int) -> Tuple[int, int, int]:
        if not 0 <= index < self.size:
            raise IndexError(f"flat index {index} out of range")
        rest, k = divmod(index, self.s)
        i, j = divmod(rest, self.r)
        return i + 1, j + 1, k + 1

    def triples(self) -> Iterator[Tuple[int, int, int]]:
        """All (i, j, k) in flat order."""
        for index in range(self.size):
            yield self.unflat(index)

    def names(self) -> Tuple[str, ...]:
        return tuple(f"x{i}{j}{k}" if max(self.r, self.s, self.n) < 10 else f"x_{i}_{j}_{k}"
                     for i, j, k in self.triples())
