"""(k+1)-cores, their bijection with k-bounded partitions and the s_i operators."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Set

from .exceptions import BoundError, CoreError
from .partition import (
    Cell, Partition, SkewShape, EMPTY, addable_corners, removable_corners, conjugate,
    hook_lengths, residue, partitions,
)

__log__ = logging.getLogger(__name__)


@dataclass(frozen=True)
class Core:
    """A partition with no hook of length k+1, paired with its k."""

    shape: Partition
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise CoreError(f'k must be positive, got {self.k}')

        for cell, hook in hook_lengths(self.shape).items():
            if hook == self.k + 1:
                raise CoreError(
                    f'{self.shape} is not a {self.k + 1}-core: cell ({cell.row},{cell.col}) has hook length {hook}',
                    cell=cell)

    def __str__(self) -> str:
        return f'{self.shape}@k={self.k}'

    @property
    def residues(self) -> int:
        """Number of residue classes, k+1."""
        return self.k + 1

    def to_dict(self) -> dict:
        return {'k': self.k, 'shape': self.shape.to_list()}

    @classmethod
    def from_dict(cls, data: dict) -> 'Core':
        return cls(Partition(tuple(data['shape'])), int(data['k']))


@dataclass(frozen=True)
class KSkew:
    """k-skew diagram of a k-bounded partition: outer is the core, inner its rho."""

    skew: SkewShape
    k: int

    def to_dict(self) -> dict:
        return {'k': self.k, 'outer': self.skew.outer.to_list(), 'inner': self.skew.inner.to_list()}


def check_bounded(lam: Partition, k: int):
    """Raises BoundError unless lam is k-bounded.

    :param lam:
    :param k:

    """
    if k < 1:
        raise CoreError(f'k must be positive, got {k}')

    if lam.row(1) > k:
        raise BoundError(f'{lam} is not {k}-bounded: first part {lam.row(1)} exceeds {k}')


def check_residue(i: int, k: int):
    if not 0 <= i <= k:
        raise CoreError(f'Residue {i} is out of range [0,{k}]')


def is_core(p: Partition, k: int) -> bool:
    """Whether `p` has no hook of length k+1.

    :param p:
    :param k:

    """
    return all(hook != k + 1 for hook in hook_lengths(p).values())


def validate_core(p: Partition, k: int) -> Core:
    """Returns validated core, raising CoreError naming the first offending cell
    (bottom-up, left to right).

    :param p:
    :param k:

    """
    return Core(p, k)


def _bounded_row_counts(gamma: Core) -> List[int]:
    hooks = hook_lengths(gamma.shape)
    counts = [0] * gamma.shape.length

    for cell, hook in hooks.items():
        if hook <= gamma.k:
            counts[cell.row - 1] += 1

    return counts


def rho(gamma: Core) -> Partition:
    """Cells of the core whose hooks exceed k.

    :param gamma:

    """
    counts = _bounded_row_counts(gamma)
    return Partition.from_parts([part - count for part, count in zip(gamma.shape.parts, counts)])


@lru_cache(maxsize=None)
def p_map(gamma: Core) -> Partition:
    """Row-wise counts of k-bounded hooks: the k-bounded partition of a core.

    :param gamma:

    """
    return Partition(tuple(_bounded_row_counts(gamma)))


def k_bounded_hook_count(gamma: Core) -> int:
    """Total number of cells with k-bounded hooks.

    :param gamma:

    """
    return p_map(gamma).degree


@lru_cache(maxsize=None)
def _skew_rows(lam: Partition, k: int) -> tuple:
    # Rows are attached from the top one down, each at the leftmost
    # offset creating no hook above k.
    inner_rows: List[int] = []
    outer_rows: List[int] = []

    for part in reversed(lam.parts):
        offset = inner_rows[-1] if inner_rows else 0

        while True:
            column = offset + 1
            column_length = sum(
                1 for inner, outer in zip(inner_rows, outer_rows)
                if inner < column <= outer
            )

            if column_length + part <= k:
                break

            offset += 1

        inner_rows.append(offset)
        outer_rows.append(offset + part)

    return tuple(reversed(outer_rows)), tuple(reversed(inner_rows))


@lru_cache(maxsize=None)
def c_map(lam: Partition, k: int) -> Core:
    """The (k+1)-core whose k-bounded hooks are counted by `lam`.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    __log__.debug(f'Building core of {lam} for k={k} ...')

    outer, _ = _skew_rows(lam, k)

    return Core(Partition(outer), k)


def k_skew(lam: Partition, k: int) -> KSkew:
    """The k-skew diagram of `lam`.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    outer, inner = _skew_rows(lam, k)

    return KSkew(SkewShape(Partition(outer), Partition.from_parts(inner)), k)


@lru_cache(maxsize=None)
def k_conjugate(lam: Partition, k: int) -> Partition:
    """Column lengths of the k-skew diagram: p_map of the conjugate core.

    :param lam: k-bounded partition
    :param k:

    """
    gamma = c_map(lam, k)
    return p_map(Core(conjugate(gamma.shape), k))


def _by_residue(corners: Sequence[Cell], i: int, k: int) -> List[Cell]:
    # Top-left to bottom-right.
    return sorted((cell for cell in corners if residue(cell, k) == i), key=lambda cell: -cell.row)


def addable_corners_of_residue(gamma: Core, i: int) -> List[Cell]:
    """Addable corners with residue i, ordered top-left to bottom-right.

    :param gamma:
    :param i:

    """
    check_residue(i, gamma.k)
    return _by_residue(addable_corners(gamma.shape), i, gamma.k)


def removable_corners_of_residue(gamma: Core, i: int) -> List[Cell]:
    """Removable corners with residue i, ordered top-left to bottom-right.

    :param gamma:
    :param i:

    """
    check_residue(i, gamma.k)
    return _by_residue(removable_corners(gamma.shape), i, gamma.k)


def highest_corner_row(gamma: Core, i: int) -> Optional[int]:
    """Row of the highest corner (addable or removable) with residue i, if any.

    :param gamma:
    :param i:

    """
    corners = addable_corners_of_residue(gamma, i) or removable_corners_of_residue(gamma, i)

    if not corners:
        return None

    return corners[0].row


@lru_cache(maxsize=None)
def apply_si(gamma: Core, i: int) -> Core:
    """Toggles all corners of residue i.

    Adds all addable residue-i corners, or removes all removable ones.
    A core with no such corner is returned as is.

    :param gamma:
    :param i:

    """
    added = addable_corners_of_residue(gamma, i)
    removed = removable_corners_of_residue(gamma, i)

    if added and removed:  # pragma: nocover
        raise CoreError(f'{gamma} has both addable and removable corners of residue {i}')

    parts = list(gamma.shape.parts)

    for cell in added:
        if cell.row > len(parts):
            parts.append(0)
        parts[cell.row - 1] += 1

    for cell in removed:
        parts[cell.row - 1] -= 1

    return Core(Partition.from_parts(parts), gamma.k)


def core_from_word(w: Sequence[int], k: int) -> Core:
    """Acts with s_{w_1}...s_{w_l} on the empty core; the last letter acts first.

    :param w: residues word
    :param k:

    """
    gamma = Core(EMPTY, k)

    for letter in reversed(list(w)):
        check_residue(letter, k)
        gamma = apply_si(gamma, letter)

    return gamma


def same_k(*cores: Core) -> int:
    """Returns common k of the given cores, raising CoreError on a mix.

    :param cores:

    """
    ks = {gamma.k for gamma in cores}

    if len(ks) != 1:
        raise CoreError(f'Cores of different k are mixed: {", ".join(map(str, cores))}')

    return ks.pop()


def is_k_string(cells: Sequence[Cell], k: int) -> bool:
    """Whether cells lie on diagonals successively differing by exactly k+1.

    :param cells:
    :param k:

    """
    diagonals = sorted(cell.diagonal for cell in cells)
    return all(b - a == k + 1 for a, b in zip(diagonals, diagonals[1:]))


def wedge(a: Cell, b: Cell) -> Cell:
    """Cell directly south of `a` and directly west of `b` (`b` south-east of `a`).

    :param a:
    :param b:

    """
    return Cell(b.row, a.col)


def flip_cells(gamma: Core, i: int) -> Set[Cell]:
    """Cells of both gamma and s_i(gamma) whose hooks are k-bounded in exactly one of them.

    :param gamma:
    :param i:

    """
    other = apply_si(gamma, i)
    k = gamma.k

    hooks_before = hook_lengths(gamma.shape)
    hooks_after = hook_lengths(other.shape)

    return {
        cell for cell in set(hooks_before) & set(hooks_after)
        if (hooks_before[cell] <= k) != (hooks_after[cell] <= k)
    }


def cores_of_degree(n: int, k: int) -> List[Core]:
    """All (k+1)-cores with n cells.

    :param n:
    :param k:

    """
    return [Core(p, k) for p in partitions(n) if is_core(p, k)]


def cores_with_hook_count(m: int, k: int) -> List[Core]:
    """All (k+1)-cores with exactly m k-bounded hooks.

    :param m:
    :param k:

    """
    return [c_map(lam, k) for lam in partitions(m, k)]
