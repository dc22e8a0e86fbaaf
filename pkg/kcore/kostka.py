"""k-Kostka matrices, their unitriangular inversion and the classical oracle."""
import csv
import logging
from dataclasses import dataclass
from functools import lru_cache
from io import StringIO
from typing import Dict, List, NamedTuple, Sequence, Tuple

from .core import check_bounded
from .exceptions import KcoreValueError
from .lattice import count_admissible_chains, count_saturated_chains
from .partition import (
    Composition, Partition, EMPTY, partitions, rearrangements, horizontal_strips_below,
)
from .utils import format_partition

__log__ = logging.getLogger(__name__)

Entries = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class KostkaMatrix:
    """Integer matrix indexed by partitions of n, largest (in reverse lexicographic order) first.

    Row is the shape, column is the evaluation.

    """
    n: int
    k: int
    index: Tuple[Partition, ...]
    entries: Entries

    def position(self, lam: Partition) -> int:
        try:
            return self.index.index(lam)

        except ValueError:
            raise KcoreValueError(f'{lam} is not indexed by the matrix')

    def entry(self, lam: Partition, mu: Partition) -> int:
        return self.entries[self.position(lam)][self.position(mu)]

    def is_unitriangular(self) -> bool:
        """Ones on the diagonal and zeros below it."""
        for row, values in enumerate(self.entries):

            if values[row] != 1 or any(values[col] for col in range(row)):
                return False

        return True

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'index': [lam.to_list() for lam in self.index],
            'entries': [list(values) for values in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'KostkaMatrix':
        return cls(
            n=int(data['n']),
            k=int(data['k']),
            index=tuple(Partition(tuple(parts)) for parts in data['index']),
            entries=tuple(tuple(values) for values in data['entries']),
        )

    def to_csv(self) -> str:
        labels = [format_partition(lam) for lam in self.index]

        out = StringIO()
        writer = csv.writer(out, lineterminator='\n')
        writer.writerow([''] + labels)

        for label, values in zip(labels, self.entries):
            writer.writerow([label] + list(values))

        return out.getvalue()

    def to_text(self) -> str:
        labels = [format_partition(lam) for lam in self.index]
        cells = [[''] + labels] + [[label] + list(map(str, values)) for label, values in zip(labels, self.entries)]
        width = max(len(cell) for row in cells for cell in row)

        return '\n'.join(' '.join(cell.rjust(width) for cell in row) for row in cells)


class KSchurExpansion(KostkaMatrix):
    """Row lam lists the coefficients of the k-Schur function s_lam (at t=1)
    in the basis of complete homogeneous functions h_mu.

    """
    def coefficients(self, lam: Partition) -> Dict[Partition, int]:
        values = self.entries[self.position(lam)]
        return {mu: value for mu, value in zip(self.index, values) if value}


def kostka_matrix(n: int, k: int) -> KostkaMatrix:
    """Counts of k-tableaux of shape c(lam) and evaluation mu over k-bounded partitions of n.

    Counting goes through admissible chains, which are in bijection with the tableaux.

    :param n:
    :param k:

    """
    __log__.debug(f'Computing k-Kostka matrix for n={n}, k={k} ...')

    index = partitions(n, k)

    entries = tuple(
        tuple(count_admissible_chains(lam, Composition(mu.parts), k) for mu in index)
        for lam in index
    )

    return KostkaMatrix(n, k, index, entries)


@lru_cache(maxsize=None)
def _classical_count(lam: Partition, content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if lam == EMPTY else 0

    return sum(
        _classical_count(nu, content[:-1])
        for nu in horizontal_strips_below(lam, content[-1])
    )


def classical_kostka(n: int) -> KostkaMatrix:
    """Classical Kostka numbers: semistandard tableaux of shape lam and content mu,
    counted by peeling horizontal strips of the largest letter.

    :param n:

    """
    index = partitions(n)

    entries = tuple(
        tuple(_classical_count(lam, mu.parts) for mu in index)
        for lam in index
    )

    return KostkaMatrix(n, max(n, 1), index, entries)


def invert_unitriangular(entries: Sequence[Sequence[int]]) -> Entries:
    """Exact inverse of an upper unitriangular integer matrix by back substitution.

    :param entries:

    """
    size = len(entries)

    for row in range(size):
        if entries[row][row] != 1 or any(entries[row][col] for col in range(row)):
            raise KcoreValueError(f'Matrix is not upper unitriangular at row {row + 1}')

    inverse = [[1 if row == col else 0 for col in range(size)] for row in range(size)]

    for row in range(size):
        for col in range(row + 1, size):
            inverse[row][col] = -sum(inverse[row][idx] * entries[idx][col] for idx in range(row, col))

    return tuple(tuple(values) for values in inverse)


def _transpose(entries: Sequence[Sequence[int]]) -> Entries:
    return tuple(zip(*entries)) if entries else ()


def h_expansion(matrix: KostkaMatrix) -> KSchurExpansion:
    """Inverts a Kostka matrix into expansions of Schur-like functions in h_mu.

    Since h_mu = sum_lam K[lam][mu] s_lam, the coefficients of s_lam are the
    column lam of the inverse.

    :param matrix:

    """
    inverse = invert_unitriangular(matrix.entries)
    return KSchurExpansion(matrix.n, matrix.k, matrix.index, _transpose(inverse))


def k_schur_in_h(n: int, k: int) -> KSchurExpansion:
    """k-Schur functions at t=1 in the homogeneous basis.

    The result is the transpose of the inverse k-Kostka matrix: entry
    [lam][mu] is the coefficient of h_mu in s_lam, so the inverse itself
    is read column by column.

    :param n:
    :param k:

    """
    return h_expansion(kostka_matrix(n, k))


def standard_count(lam: Partition, k: int) -> int:
    """Number of standard k-tableaux of shape c(lam).

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)
    return count_saturated_chains(lam, k)


class RearrangementRow(NamedTuple):

    partition: Partition
    composition: Composition
    shape: Partition
    expected: int
    found: int

    @property
    def passed(self) -> bool:
        return self.expected == self.found


@dataclass(frozen=True)
class RearrangementReport:
    """Tableaux counts for every rearrangement of every evaluation."""

    n: int
    k: int
    rows: Tuple[RearrangementRow, ...]

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> List[RearrangementRow]:
        return [row for row in self.rows if not row.passed]

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'k': self.k,
            'passed': self.passed,
            'checked': len(self.rows),
            'failures': [
                {
                    'partition': row.partition.to_list(),
                    'composition': row.composition.to_list(),
                    'shape': row.shape.to_list(),
                    'expected': row.expected,
                    'found': row.found,
                }
                for row in self.failures
            ],
        }


def rearrangement_check(n: int, k: int) -> RearrangementReport:
    """Compares tableaux counts of evaluation lam against every rearrangement of lam.

    :param n:
    :param k:

    """
    rows = []

    for lam in partitions(n):
        for mu in partitions(n, k):
            expected = count_admissible_chains(mu, Composition(lam.parts), k)

            for alpha in rearrangements(lam):
                found = count_admissible_chains(mu, alpha, k)
                row = RearrangementRow(lam, alpha, mu, expected, found)

                if not row.passed:
                    __log__.warning(
                        f'Rearrangement mismatch for shape {mu}, k={k}: '
                        f'{expected} tableaux of evaluation {lam}, {found} of {alpha}')

                rows.append(row)

    return RearrangementReport(n, k, tuple(rows))
