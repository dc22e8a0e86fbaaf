from itertools import combinations_with_replacement
from typing import Iterator, Optional, Tuple

import networkx as nx

from ..base_check import BaseCheck, Case
from ..core import Core, c_map
from ..kostka import KostkaMatrix, kostka_matrix, classical_kostka, k_schur_in_h, rearrangement_check
from ..ktableau import KTableau, validate
from ..lattice import young_lattice_graph
from ..partition import Composition, Partition, EMPTY, dominates

Rows = Tuple[Tuple[int, ...], ...]


def _fillings(shape: Partition, letters: int) -> Iterator[Rows]:
    # Weakly increasing rows, strictly increasing columns.

    def walk(idx: int, below: Optional[Tuple[int, ...]]) -> Iterator[Rows]:
        if idx == shape.length:
            yield ()
            return

        for row in combinations_with_replacement(range(1, letters + 1), shape.parts[idx]):
            if below is None or all(upper > lower for upper, lower in zip(row, below)):
                for rest in walk(idx + 1, row):
                    yield (row,) + rest

    return walk(0, None)


def count_fillings(core: Core, evaluation: Composition) -> int:
    """Counts k-tableaux of a core shape by checking every filling."""
    return sum(
        1 for rows in _fillings(core.shape, len(evaluation))
        if validate(KTableau(core, rows, evaluation)))


class KostkaCheck(BaseCheck):
    """k-Kostka matrices: triangularity, tableaux counts, classical limit and inversion."""

    alias: str = 'kostka'

    description: str = 'k-Kostka matrices unitriangularity, classical limit and inverse'

    def __init__(self, max_n: int = None, brute_force_cells: int = 5):
        self.brute_force_cells = brute_force_cells
        super().__init__(max_n=max_n)

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            for m in range(1, n + 1):
                matrix = kostka_matrix(m, k_)
                label = f'n={m}, k={k_}'

                yield f'k-Kostka matrix for {label} is unitriangular', matrix.is_unitriangular()

                yield f'k-Kostka matrix for {label} vanishes off dominance', all(
                    dominates(lam, mu)
                    for lam in matrix.index for mu in matrix.index
                    if matrix.entry(lam, mu))

                yield from self._verify_counts(matrix, m, k_)

                if k_ >= m:
                    yield f'k-Kostka matrix for {label} is classical', matrix.entries == classical_kostka(m).entries

                expansion = k_schur_in_h(m, k_)
                size = len(matrix.index)
                product = [
                    [sum(expansion.entries[row][idx] * matrix.entries[col][idx] for idx in range(size))
                     for col in range(size)]
                    for row in range(size)
                ]
                yield f'k-Schur expansion for {label} inverts the k-Kostka matrix', all(
                    product[row][col] == (row == col) for row in range(size) for col in range(size))

    def _verify_counts(self, matrix: KostkaMatrix, m: int, k: int) -> Iterator[Case]:
        graph = young_lattice_graph(m, k)
        ones = Partition((1,) * m)

        for lam in matrix.index:
            paths = sum(1 for _ in nx.all_simple_paths(graph, EMPTY, lam))
            yield f'standard {k}-tableaux of {lam} count lattice paths', matrix.entry(lam, ones) == paths

            core = c_map(lam, k)

            if core.shape.degree > self.brute_force_cells:
                continue

            for mu in matrix.index:
                yield (
                    f'{k}-tableaux of shape {lam} and evaluation {mu} count fillings',
                    matrix.entry(lam, mu) == count_fillings(core, Composition(mu.parts)))


class RearrangementCheck(BaseCheck):
    """Tableaux counts do not depend on the order of the evaluation parts."""

    alias: str = 'rearrangement'

    description: str = 'k-tableaux counts are invariant under evaluation rearrangement'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            for m in range(1, n + 1):
                report = rearrangement_check(m, k_)
                yield f'rearranged evaluations for n={m}, k={k_}', report.passed
