"""Partition and diagram arithmetic.

Diagrams follow the French convention: row 1 is the longest (bottom) row,
cells are 1-based `(row, col)` pairs.

"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from sympy.utilities.iterables import multiset_permutations, partitions as sympy_partitions

from .exceptions import PartitionError

__log__ = logging.getLogger(__name__)


class Cell(NamedTuple):
    """Diagram cell, 1-based."""

    row: int
    col: int

    @property
    def diagonal(self) -> int:
        """Content of the cell: col - row."""
        return self.col - self.row

    def to_list(self) -> List[int]:
        return [self.row, self.col]


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing sequence of positive integers.

    Empty `parts` stands for the empty partition.

    """
    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = self.parts

        if not isinstance(parts, tuple):
            parts = tuple(parts)
            object.__setattr__(self, 'parts', parts)

        previous = None

        for part in parts:

            if not isinstance(part, int) or part < 1:
                raise PartitionError(f'Partition parts must be positive integers, got {parts}')

            if previous is not None and part > previous:
                raise PartitionError(f'Partition parts must weakly decrease, got {parts}')

            previous = part

    def __str__(self) -> str:
        if not self.parts:
            return '∅'
        return f"({','.join(map(str, self.parts))})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __contains__(self, cell: Tuple[int, int]) -> bool:
        row, col = cell
        return row >= 1 and col >= 1 and self.row(row) >= col

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> 'Partition':
        """Builds a partition dropping trailing zero parts.

        :param parts:

        """
        parts = list(parts)

        while parts and parts[-1] == 0:
            parts.pop()

        return cls(tuple(parts))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def row(self, i: int) -> int:
        """Length of row i (1-based), zero beyond the last row.

        :param i:

        """
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        return 0

    def column(self, j: int) -> int:
        """Length of column j (1-based).

        :param j:

        """
        return sum(1 for part in self.parts if part >= j)

    def cells(self) -> List[Cell]:
        """Cells ordered bottom-up, left to right."""
        return [Cell(i, j) for i, part in enumerate(self.parts, 1) for j in range(1, part + 1)]

    def add_cell(self, row: int) -> 'Partition':
        """Returns partition with a cell added at the end of the given row.

        :param row:

        """
        parts = list(self.parts)

        if row == len(parts) + 1:
            parts.append(1)

        elif 1 <= row <= len(parts):
            parts[row - 1] += 1

        else:
            raise PartitionError(f'Unable to add a cell to row {row} of {self}')

        try:
            return Partition(tuple(parts))

        except PartitionError:
            raise PartitionError(f'Row {row} of {self} has no addable corner')

    def remove_cell(self, row: int) -> 'Partition':
        """Returns partition with the last cell of the given row removed.

        :param row:

        """
        if not 1 <= row <= len(self.parts):
            raise PartitionError(f'Unable to remove a cell from row {row} of {self}')

        parts = list(self.parts)
        parts[row - 1] -= 1

        try:
            return Partition.from_parts(parts)

        except PartitionError:
            raise PartitionError(f'Row {row} of {self} has no removable corner')

    def to_list(self) -> List[int]:
        return list(self.parts)


EMPTY = Partition(())


@dataclass(frozen=True)
class Composition:
    """Sequence of positive integers, order significant."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = self.parts

        if not isinstance(parts, tuple):
            parts = tuple(parts)
            object.__setattr__(self, 'parts', parts)

        if any(not isinstance(part, int) or part < 1 for part in parts):
            raise PartitionError(f'Composition parts must be positive integers, got {parts}')

    def __str__(self) -> str:
        return f"({','.join(map(str, self.parts))})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @classmethod
    def ones(cls, n: int) -> 'Composition':
        """Composition (1, ..., 1) of n."""
        return cls((1,) * n)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def is_partition(self) -> bool:
        return all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    def sorted(self) -> Partition:
        """Parts sorted in decreasing order."""
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def to_list(self) -> List[int]:
        return list(self.parts)


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner."""

    outer: Partition
    inner: Partition = EMPTY

    def __post_init__(self):
        if not contains(self.inner, self.outer):
            raise PartitionError(f'Inner partition {self.inner} is not contained in {self.outer}')

    def __str__(self) -> str:
        return f'{self.outer}/{self.inner}'

    def __contains__(self, cell: Tuple[int, int]) -> bool:
        row, col = cell
        return self.inner.row(row) < col <= self.outer.row(row) and row >= 1

    @property
    def size(self) -> int:
        return self.outer.degree - self.inner.degree

    def cells(self) -> List[Cell]:
        """Skew cells ordered bottom-up, left to right."""
        outer, inner = self.outer, self.inner
        return [
            Cell(i, j)
            for i in range(1, outer.length + 1)
            for j in range(inner.row(i) + 1, outer.row(i) + 1)
        ]

    def row_lengths(self) -> List[int]:
        return [self.outer.row(i) - self.inner.row(i) for i in range(1, self.outer.length + 1)]

    def column_lengths(self) -> List[int]:
        outer_columns = self.outer.row(1)
        return [self.outer.column(j) - self.inner.column(j) for j in range(1, outer_columns + 1)]


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    """Reflects the diagram along the main diagonal.

    :param lam:

    """
    if not lam.parts:
        return EMPTY

    return Partition(tuple(lam.column(j) for j in range(1, lam.parts[0] + 1)))


def hook_length(shape: SkewShape, s: Cell) -> int:
    """Counts cells of the skew shape in the hook with corner `s`.

    Arm cells of the skew to the right, leg cells of the skew above,
    plus `s` itself when it is a skew cell. `s` may lie in the inner partition.

    :param shape:
    :param s:

    """
    row, col = s
    outer, inner = shape.outer, shape.inner

    if s not in outer:
        raise PartitionError(f'Cell {tuple(s)} lies outside {outer}')

    arm = max(0, outer.row(row) - max(inner.row(row), col))
    leg = sum(
        1 for r in range(row + 1, outer.length + 1)
        if inner.row(r) < col <= outer.row(r)
    )

    return arm + leg + (1 if s in shape else 0)


@lru_cache(maxsize=None)
def hook_lengths(lam: Partition) -> Dict[Cell, int]:
    """Classical hook lengths of every cell.

    :param lam:

    """
    lam_conj = conjugate(lam)
    return {
        Cell(i, j): lam.row(i) - j + lam_conj.row(j) - i + 1
        for i, j in lam.cells()
    }


def residue(s: Cell, k: int) -> int:
    """(k+1)-residue of a cell.

    :param s:
    :param k:

    """
    if k < 1:
        raise PartitionError(f'k must be positive, got {k}')
    return (s[1] - s[0]) % (k + 1)


def contains(lam: Partition, mu: Partition) -> bool:
    """Returns True when `lam` is contained in `mu` (lam_i <= mu_i for all i).

    :param lam:
    :param mu:

    """
    if lam.length > mu.length:
        return False

    return all(a <= b for a, b in zip(lam.parts, mu.parts))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: all prefix sums of `lam` are at least those of `mu`.

    :param lam:
    :param mu:

    """
    if lam.degree != mu.degree:
        raise PartitionError(f'Dominance is defined for partitions of equal degree, got {lam} and {mu}')

    sum_lam = sum_mu = 0

    for i in range(max(lam.length, mu.length)):
        sum_lam += lam.row(i + 1)
        sum_mu += mu.row(i + 1)

        if sum_lam < sum_mu:
            return False

    return True


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """At most one cell per column in outer/inner.

    :param outer:
    :param inner:

    """
    if not contains(inner, outer):
        return False

    return all(inner.row(r) >= outer.row(r + 1) for r in range(1, outer.length + 1))


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    """At most one cell per row in outer/inner.

    :param outer:
    :param inner:

    """
    if not contains(inner, outer):
        return False

    return all(outer.row(r) - inner.row(r) in (0, 1) for r in range(1, outer.length + 1))


def addable_corners(lam: Partition) -> List[Cell]:
    """Squares that can be added keeping a partition. Bottom row upward.

    :param lam:

    """
    corners = []

    for i in range(1, lam.length + 2):
        part = lam.row(i)

        if i == 1 or lam.row(i - 1) > part:
            corners.append(Cell(i, part + 1))

    return corners


def removable_corners(lam: Partition) -> List[Cell]:
    """Squares that can be removed keeping a partition. Bottom row upward.

    :param lam:

    """
    return [
        Cell(i, part)
        for i, part in enumerate(lam.parts, 1)
        if part > lam.row(i + 1)
    ]


def is_k_bounded(lam: Partition, k: int) -> bool:
    return lam.row(1) <= k


@lru_cache(maxsize=None)
def partitions(n: int, max_part: Optional[int] = None) -> Tuple[Partition, ...]:
    """All partitions of n (optionally with parts not exceeding max_part),
    in decreasing lexicographic order.

    :param n:
    :param max_part:

    """
    if n < 0:
        raise PartitionError(f'Unable to partition a negative number {n}')

    if n == 0:
        return (EMPTY,)

    if max_part is not None and max_part < 1:
        return ()

    result = []

    for multiplicities in sympy_partitions(n, k=max_part):
        parts = []

        for part, count in sorted(multiplicities.items(), reverse=True):
            parts.extend([part] * count)

        result.append(Partition(tuple(parts)))

    return tuple(sorted(result, reverse=True))


def rearrangements(lam: Partition) -> List[Composition]:
    """Distinct compositions made of the parts of `lam`, in lexicographic order.

    :param lam:

    """
    if not lam.parts:
        return [Composition(())]

    return [Composition(tuple(parts)) for parts in multiset_permutations(list(lam.parts))]


def compositions(n: int) -> List[Composition]:
    """All compositions of n, in lexicographic order.

    :param n:

    """
    result = []

    for lam in partitions(n):
        result.extend(rearrangements(lam))

    return sorted(result, key=lambda alpha: alpha.parts)


def standard_tableaux_count(lam: Partition) -> int:
    """Number of standard Young tableaux by the hook-length formula.

    :param lam:

    """
    product = 1

    for hook in hook_lengths(lam).values():
        product *= hook

    return factorial(lam.degree) // product


def horizontal_strips_below(lam: Partition, r: int) -> Iterator[Partition]:
    """Partitions nu such that lam/nu is a horizontal strip of r cells.

    :param lam:
    :param r:

    """
    parts = lam.parts

    def walk(idx: int, left: int, chosen: List[int]) -> Iterator[Partition]:
        if idx == len(parts):
            if left == 0:
                yield Partition.from_parts(chosen)
            return

        lowest = parts[idx + 1] if idx + 1 < len(parts) else 0

        for removed in range(min(left, parts[idx] - lowest), -1, -1):
            yield from walk(idx + 1, left - removed, chosen + [parts[idx] - removed])

    yield from walk(0, r, [])
