from itertools import combinations
from typing import Iterator

from ..base_check import BaseCheck, Case
from ..core import (
    Core, apply_si, addable_corners_of_residue, removable_corners_of_residue, cores_of_degree,
    flip_cells, is_k_string, k_bounded_hook_count, wedge,
)
from ..partition import contains


def _cores_up_to(n: int, k: int):
    return [gamma for m in range(n + 1) for gamma in cores_of_degree(m, k)]


class CoxeterCheck(BaseCheck):
    """s_i operators on cores satisfy the affine Coxeter relations."""

    alias: str = 'coxeter'

    description: str = 'involution, commutation and braid relations of s_i on cores'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            size = k_ + 1

            for gamma in _cores_up_to(n, k_):
                for i in range(size):
                    yield f's_{i}^2 on {gamma}', apply_si(apply_si(gamma, i), i) == gamma

                    for j in range(i + 1, size):
                        ij = apply_si(apply_si(gamma, j), i)
                        ji = apply_si(apply_si(gamma, i), j)

                        if (j - i) % size not in (1, size - 1):
                            yield f's_{i} s_{j} = s_{j} s_{i} on {gamma}', ij == ji

                        elif size > 2:
                            # Braid relation. Affine A_1 has none.
                            yield (
                                f's_{i} s_{j} s_{i} = s_{j} s_{i} s_{j} on {gamma}',
                                apply_si(ji, i) == apply_si(ij, j))


class CornersCheck(BaseCheck):
    """Residue corners, flipped hooks and k-bounded hook counts of cores."""

    alias: str = 'corners'

    description: str = 'residue corners strings, flip sets, hook count monotonicity'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            cores = _cores_up_to(n, k_)

            for gamma in cores:
                for i in range(k_ + 1):
                    yield from self._verify_residue(gamma, i)

            for gamma, delta in combinations(cores, 2):
                if gamma.shape.degree < delta.shape.degree and contains(gamma.shape, delta.shape):
                    yield (
                        f'{gamma} inside {delta} has fewer k-bounded hooks',
                        k_bounded_hook_count(gamma) < k_bounded_hook_count(delta))

    def _verify_residue(self, gamma: Core, i: int) -> Iterator[Case]:
        added = addable_corners_of_residue(gamma, i)
        removed = removable_corners_of_residue(gamma, i)
        corners = added or removed

        yield f'corners of residue {i} of {gamma} are all addable or all removable', not (added and removed)
        yield f'corners of residue {i} of {gamma} form a string', is_k_string(corners, gamma.k)

        expected = {wedge(a, b) for a, b in zip(corners, corners[1:])}
        yield f'hooks flipped by s_{i} on {gamma}', flip_cells(gamma, i) == expected
