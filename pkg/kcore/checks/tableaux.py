from typing import Iterator

from ..affine import from_word, s_map
from ..base_check import BaseCheck, Case
from ..core import c_map
from ..ktableau import (
    KTableau, gamma, gamma_inv, validate, standardize, delete_max_letter, unique_tableau,
    to_reduced_word, from_reduced_word,
)
from ..lattice import Chain, saturated_chains, admissible_chains
from ..partition import Composition, Partition, dominates, partitions


class StandardTableauxCheck(BaseCheck):
    """Standard k-tableaux against saturated chains and reduced words."""

    alias: str = 'standard'

    description: str = 'standard k-tableaux <-> saturated chains <-> reduced words'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            for m in range(n + 1):
                for lam in partitions(m, k_):
                    core = c_map(lam, k_)

                    for chain in saturated_chains(lam, k_):
                        t = gamma(chain)
                        word = to_reduced_word(t)
                        label = f'{chain.steps} for k={k_}'

                        yield f'tableau of {label} is standard', validate(t).standard
                        yield f'tableau of {label} reads the chain back', gamma_inv(t) == chain
                        yield f'reduced word of {label} rebuilds the tableau', from_reduced_word(word, k_) == t
                        yield f'reduced word of {label} acts to the core', s_map(from_word(word, k_)) == core


class SemistandardTableauxCheck(BaseCheck):
    """Semi-standard k-tableaux against admissible chains, triangularity and standardization."""

    alias: str = 'semistandard'

    description: str = 'semi-standard k-tableaux <-> admissible chains, vanishing, standardization'

    def verify(self, n: int, k: int) -> Iterator[Case]:

        for k_ in range(1, k + 1):
            for m in range(1, n + 1):
                for lam in partitions(m, k_):
                    for mu in partitions(m):
                        yield from self._verify_pair(lam, mu, k_)

    def _verify_pair(self, lam: Partition, mu: Partition, k: int) -> Iterator[Case]:
        chains = admissible_chains(lam, Composition(mu.parts), k)
        label = f'shape {lam} evaluation {mu} for k={k}'

        if not dominates(lam, mu):
            yield f'no tableaux of {label}', not chains
            return

        if lam == mu:
            yield f'single tableau of {label}', [gamma(chain) for chain in chains] == [unique_tableau(lam, k)]

        for chain in chains:
            yield from self._verify_tableau(gamma(chain), chain, label)

    def _verify_tableau(self, t: KTableau, chain: Chain, label: str) -> Iterator[Case]:
        yield f'tableau {t.reading_word()} of {label} is valid', bool(validate(t))
        yield f'tableau {t.reading_word()} of {label} reads the chain back', gamma_inv(t) == chain

        standard = standardize(t)
        yield f'standardized {t.reading_word()} of {label} is standard', validate(standard).standard

        smaller = delete_max_letter(t)
        yield f'{t.reading_word()} of {label} without its largest letter is valid', bool(validate(smaller))
