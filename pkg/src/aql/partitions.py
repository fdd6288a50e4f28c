"""Young diagram calculus inside an a x b frame.

Partitions classify the modules attached to standard theta-stable
parabolic subalgebras of u(a,b): a nested pair alpha <= beta inside the
a x b rectangle.  The operations here are the conjugate (column-count)
diagram, the rotated complement inside a frame, skew cells, and the
compatibility predicate deciding which nested pairs arise from a block
decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Set, Tuple


class FrameError(ValueError):
    """A diagram does not fit in the requested frame."""


class IncompatiblePairError(ValueError):
    """A nested pair admits no block decomposition."""


@dataclass(frozen=True, init=False)
class Partition:
    """A weakly decreasing tuple of non-negative parts, trailing zeros stripped."""

    rows: tuple

    def __init__(self, rows: Iterable[int] = ()):
        parts = list(rows)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise ValueError(f"parts must be non-negative integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        while parts and parts[-1] == 0:
            parts.pop()
        object.__setattr__(self, "rows", tuple(parts))

    def size(self) -> int:
        return sum(self.rows)

    def length(self) -> int:
        return len(self.rows)

    def part(self, i: int) -> int:
        """Row length at 1-based index i, 0 beyond the last row."""
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, other.length() + 1))

    def fits(self, a: int, b: int) -> bool:
        return self.length() <= a and (not self.rows or self.rows[0] <= b)

    def to_json(self) -> list:
        return list(self.rows)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.rows) + ")"


EMPTY = Partition()


def conjugate(p: Partition) -> Partition:
    """Transpose the diagram: row j of the result counts parts >= j+1."""
    if not p.rows:
        return EMPTY
    return Partition(sum(1 for r in p.rows if r >= j) for j in range(1, p.rows[0] + 1))


def complement(p: Partition, a: int, b: int) -> Partition:
    """Complement of p inside a x b, read rotated by half a turn."""
    if not p.fits(a, b):
        raise FrameError(f"{p} not contained in frame {a}x{b}")
    return Partition(b - p.part(a - i) for i in range(a))


@dataclass(frozen=True)
class FramedPair:
    """A nested pair alpha <= beta of diagrams inside the a x b frame."""

    a: int
    b: int
    alpha: Partition
    beta: Partition

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise FrameError("frame sides must be non-negative")
        if not self.beta.fits(self.a, self.b):
            raise FrameError(f"beta {self.beta} not contained in frame {self.a}x{self.b}")
        if not self.beta.contains(self.alpha):
            raise FrameError(f"alpha {self.alpha} not contained in beta {self.beta}")

    def row_pairs(self) -> List[Tuple[int, int]]:
        """(alpha_i, beta_i) for every row of the frame, zero-padded."""
        return [(self.alpha.part(i), self.beta.part(i)) for i in range(1, self.a + 1)]

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "FramedPair":
        return cls(doc["a"], doc["b"], Partition(doc["alpha"]), Partition(doc["beta"]))


def skew_cells(pair: FramedPair) -> Set[Tuple[int, int]]:
    """Cells of beta outside alpha, as 1-based (row, col) pairs."""
    return {
        (i, j)
        for i in range(1, pair.beta.length() + 1)
        for j in range(pair.alpha.part(i) + 1, pair.beta.part(i) + 1)
    }


def is_compatible(pair: FramedPair) -> bool:
    """Whether the pair arises from a block decomposition.

    Decided by round-tripping through the block reconstruction: the pair is
    compatible exactly when a canonical block list reproduces it.
    """
    from .parabolic import algebra_from_pair, partitions_from_blocks

    try:
        q = algebra_from_pair(pair)
    except IncompatiblePairError:
        return False
    return partitions_from_blocks(q) == pair


def partitions_in_frame(a: int, b: int) -> Iterator[Partition]:
    """All partitions with at most a rows and parts at most b."""

    def rec(prefix: List[int], rows_left: int, cap: int):
        yield Partition(prefix)
        if rows_left == 0:
            return
        for p in range(cap, 0, -1):
            prefix.append(p)
            yield from rec(prefix, rows_left - 1, p)
            prefix.pop()

    yield from rec([], a, b)


def enumerate_compatible(a: int, b: int) -> List[FramedPair]:
    """All compatible pairs in the a x b frame, ordered by (beta, alpha)."""
    if a < 0 or b < 0:
        raise FrameError("frame sides must be non-negative")
    pairs = []
    for beta in partitions_in_frame(a, b):
        for alpha in partitions_in_frame(a, b):
            if not beta.contains(alpha):
                continue
            candidate = FramedPair(a, b, alpha, beta)
            if is_compatible(candidate):
                pairs.append(candidate)
    pairs.sort(key=lambda p: (p.beta.rows, p.alpha.rows))
    return pairs
