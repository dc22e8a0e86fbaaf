from typing import Iterator

from ..base_check import BaseCheck, Case
from ..core import c_map, p_map, rho, k_skew, k_conjugate, cores_of_degree, is_core
from ..partition import Partition, conjugate, hook_length, partitions


class MapsCheck(BaseCheck):
    """Bijection between cores and bounded partitions, k-skew diagrams and k-conjugation."""

    alias: str = 'maps'

    description: str = 'core <-> k-bounded partition maps, k-skew diagrams, k-conjugation'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            for m in range(n + 1):

                for lam in partitions(m, k_):
                    yield from self._verify_partition(lam, k_)

                for gamma in cores_of_degree(m, k_):
                    yield f'c(p({gamma})) is the core itself', c_map(p_map(gamma), k_) == gamma

    def _verify_partition(self, lam: Partition, k: int) -> Iterator[Case]:
        gamma = c_map(lam, k)
        skew = k_skew(lam, k).skew
        conj = k_conjugate(lam, k)

        yield f'p(c({lam})) for k={k}', p_map(gamma) == lam
        yield f'k-conjugation of {lam} for k={k} is an involution', k_conjugate(conj, k) == lam
        yield f'k-conjugate of {lam} for k={k} is k-bounded', conj.row(1) <= k

        yield f'k-skew of {lam} for k={k} sits on the core', skew.outer == gamma.shape
        yield f'k-skew of {lam} for k={k} removes rho', skew.inner == rho(gamma)
        yield f'k-skew rows of {lam} for k={k}', skew.row_lengths() == lam.to_list()

        columns = skew.column_lengths()
        yield f'k-skew columns of {lam} for k={k} decrease', columns == sorted(columns, reverse=True)
        yield f'k-skew columns of {lam} for k={k} give its k-conjugate', columns == conj.to_list()

        yield (
            f'k-skew hooks of {lam} for k={k} are bounded',
            all(hook_length(skew, cell) <= k for cell in skew.cells()))

        yield f'conjugate of the core of {lam} for k={k} is a core', is_core(conjugate(gamma.shape), k)
