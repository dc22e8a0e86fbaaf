from itertools import product
from typing import Iterator

from ..affine import (
    grassmannian_elements, weak_order_graph, bruhat_leq, bruhat_leq_by_subwords, length, phi,
    reduced_words, s_map,
)
from ..base_check import BaseCheck, Case
from ..core import p_map
from ..lattice import young_lattice_graph, count_saturated_chains


class WeakOrderCheck(BaseCheck):
    """Weak order on the affine Grassmannian quotient against the k-Young lattice."""

    alias: str = 'weak-order'

    description: str = 'weak order on the quotient is isomorphic to the k-Young lattice'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            weak = weak_order_graph(k_, n)
            lattice = young_lattice_graph(n, k_)

            to_partition = weak.nodes(data='partition')
            mapped_nodes = {lam for _, lam in to_partition}
            mapped_edges = {(to_partition[sigma], to_partition[tau]) for sigma, tau in weak.edges}

            yield f'quotient elements of length <= {n} for k={k_} map onto the lattice', (
                len(mapped_nodes) == weak.number_of_nodes() and mapped_nodes == set(lattice.nodes))

            yield f'weak order covers for k={k_} map onto lattice covers', mapped_edges == set(lattice.edges)

            for sigma, lam in to_partition:
                yield f'{sigma} has the length of {lam}', length(sigma) == lam.degree
                yield f'{lam} goes back to {sigma}', phi(lam, k_) == sigma


class BruhatCheck(BaseCheck):
    """Bruhat order on the quotient through cores against the subword property."""

    alias: str = 'bruhat'

    description: str = 'Bruhat order by core containment and by subwords'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            elements = grassmannian_elements(k_, n)

            for sigma, tau in product(elements, repeat=2):
                yield f'Bruhat {sigma} <= {tau}', bruhat_leq(sigma, tau) == bruhat_leq_by_subwords(sigma, tau)

            for sigma in elements:
                lam = p_map(s_map(sigma))
                yield f'reduced words of {sigma} count its standard tableaux', (
                    len(reduced_words(sigma)) == count_saturated_chains(lam, k_))
