from itertools import product
from typing import Iterator

from ..base_check import BaseCheck, Case
from ..core import c_map, apply_si, k_conjugate
from ..lattice import (
    up_covers, down_covers, covers_by_definition, k_addable_corners, leq, r_admissible, peel_admissible,
)
from ..partition import Partition, contains, is_horizontal_strip, partitions


class CoversCheck(BaseCheck):
    """Covers of the k-Young lattice agree whichever way they are computed."""

    alias: str = 'covers'

    description: str = 'covers by containment, by residue rule and by s_i on cores'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            for m in range(n):
                for lam in partitions(m, k_):
                    yield from self._verify_partition(lam, k_)

    def _verify_partition(self, lam: Partition, k: int) -> Iterator[Case]:
        by_operators = up_covers(lam, k)
        by_residues = sorted(lam.add_cell(cell.row) for cell, _ in k_addable_corners(lam, k))

        yield f'covers of {lam} for k={k} by residues', by_residues == by_operators
        yield f'covers of {lam} for k={k} by definition', covers_by_definition(lam, k) == by_operators

        for mu in by_operators:
            yield f'{lam} is covered by {mu} from below', lam in down_covers(mu, k)
            yield f'cores of {lam} and {mu} for k={k} are nested', contains(c_map(lam, k).shape, c_map(mu, k).shape)


class AdmissibleCheck(BaseCheck):
    """Admissible pairs: strips of cores, peeled residues and the converse criterion."""

    alias: str = 'admissible'

    description: str = 'admissible pairs against core strips and residue peeling'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            bounded = [lam for m in range(n + 1) for lam in partitions(m, k_)]

            for larger, smaller in product(bounded, repeat=2):
                r = larger.degree - smaller.degree

                if r > 0:
                    yield from self._verify_pair(larger, smaller, r, k_)

    def _verify_pair(self, larger: Partition, smaller: Partition, r: int, k: int) -> Iterator[Case]:
        outer = c_map(larger, k)
        inner = c_map(smaller, k)
        pair = f'{larger},{smaller} for k={k}'

        strip = is_horizontal_strip(outer.shape, inner.shape)

        if not r_admissible(larger, smaller, r, k):
            nested = contains(smaller, larger) and contains(k_conjugate(smaller, k), k_conjugate(larger, k))
            yield f'nested pair {pair} with a horizontal core strip is admissible', not (nested and strip)
            return

        yield f'cores of the admissible pair {pair} differ by a horizontal strip', strip
        yield f'admissible pair {pair} is ordered in the lattice', leq(smaller, larger, k)

        residues = peel_admissible(larger, smaller, k)
        yield f'{r} distinct residues peeled from {pair}', len(residues) == r == len(set(residues))

        gamma = outer

        for i in reversed(residues):
            gamma = apply_si(gamma, i)

        yield f'peeled residues of {pair} lead to the smaller core', gamma == inner
