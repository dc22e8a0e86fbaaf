"""Affine symmetric group in window notation.

Arithmetic here never touches cores, so it serves as an independent
check of the core side: s_map() is the only bridge.

"""
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import List, Sequence, Tuple

import networkx as nx

from .core import Core, core_from_word, p_map, check_bounded, check_residue
from .exceptions import AffineError
from .partition import Cell, Partition, contains, residue
from .utils import config

__log__ = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'


@dataclass(frozen=True, order=True)
class AffinePermutation:
    """Element of the affine symmetric group given by its window [s(1),...,s(k+1)].

    s(i + k + 1) = s(i) + k + 1 extends it to all integers.

    """
    k: int
    window: Tuple[int, ...]

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, 'window', window)

        n = self.k + 1

        if self.k < 1 or len(window) != n:
            raise AffineError(f'Window of {n} integers expected for k={self.k}, got {list(window)}')

        if len({value % n for value in window}) != n:
            raise AffineError(f'Window {list(window)} values are not distinct modulo {n}')

        if sum(window) != n * (n + 1) // 2:
            raise AffineError(f'Window {list(window)} must sum to {n * (n + 1) // 2}')

    def __str__(self) -> str:
        return f"[{','.join(map(str, self.window))}]"

    def __call__(self, i: int) -> int:
        n = self.k + 1
        shift, idx = divmod(i - 1, n)
        return self.window[idx] + shift * n

    def to_dict(self) -> dict:
        return {'k': self.k, 'window': list(self.window)}

    @classmethod
    def from_dict(cls, data: dict) -> 'AffinePermutation':
        return cls(int(data['k']), tuple(data['window']))


def identity(k: int) -> AffinePermutation:
    return AffinePermutation(k, tuple(range(1, k + 2)))


def apply_generator(sigma: AffinePermutation, i: int, side: str = RIGHT) -> AffinePermutation:
    """Multiplies by the generator s_i.

    Right multiplication swaps positions i and i+1,
    left multiplication swaps values congruent to i and i+1.

    :param sigma:
    :param i: residue
    :param side: `left` or `right`

    """
    k = sigma.k
    n = k + 1
    check_residue(i, k)

    window = list(sigma.window)

    if side == RIGHT:

        if i:
            window[i - 1], window[i] = window[i], window[i - 1]

        else:
            window[0], window[-1] = window[-1] - n, window[0] + n

    elif side == LEFT:
        lower = i % n
        upper = (i + 1) % n

        for idx, value in enumerate(window):
            if value % n == lower:
                window[idx] = value + 1

            elif value % n == upper:
                window[idx] = value - 1

    else:
        raise AffineError(f'Unknown side `{side}`')

    return AffinePermutation(k, tuple(window))


def from_word(word: Sequence[int], k: int) -> AffinePermutation:
    """Evaluates s_{w_1} s_{w_2} ... s_{w_m}.

    :param word:
    :param k:

    """
    sigma = identity(k)

    for letter in word:
        sigma = apply_generator(sigma, letter, RIGHT)

    return sigma


@lru_cache(maxsize=None)
def length(sigma: AffinePermutation) -> int:
    """Number of affine inversions.

    :param sigma:

    """
    n = sigma.k + 1
    window = sigma.window

    return sum(
        abs((window[j] - window[i]) // n)
        for i in range(n)
        for j in range(i + 1, n)
    )


def left_descents(sigma: AffinePermutation) -> List[int]:
    current = length(sigma)
    return [i for i in range(sigma.k + 1) if length(apply_generator(sigma, i, LEFT)) < current]


def right_descents(sigma: AffinePermutation) -> List[int]:
    current = length(sigma)
    return [i for i in range(sigma.k + 1) if length(apply_generator(sigma, i, RIGHT)) < current]


def is_min_coset_rep(sigma: AffinePermutation) -> bool:
    """No right descent among s_1..s_k: the window increases.

    :param sigma:

    """
    window = sigma.window
    return all(a < b for a, b in zip(window, window[1:]))


@dataclass(frozen=True)
class ReducedWord:
    """Word in the generators. Words flagged `reduced` are checked on construction."""

    letters: Tuple[int, ...]
    k: int
    reduced: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'letters', tuple(self.letters))

        for letter in self.letters:
            check_residue(letter, self.k)

        if self.reduced and length(self.evaluate()) != len(self.letters):
            raise AffineError(f'Word {self} is not reduced')

    def __str__(self) -> str:
        return ' '.join(map(str, self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def evaluate(self) -> AffinePermutation:
        return from_word(self.letters, self.k)

    def to_list(self) -> List[int]:
        return list(self.letters)


def _greedy_word(sigma: AffinePermutation) -> Tuple[int, ...]:
    word = []

    while length(sigma):
        i = left_descents(sigma)[0]
        word.append(i)
        sigma = apply_generator(sigma, i, LEFT)

    return tuple(word)


@lru_cache(maxsize=None)
def _reduced_words(sigma: AffinePermutation) -> Tuple[Tuple[int, ...], ...]:
    if not length(sigma):
        return ((),)

    return tuple(
        (i,) + tail
        for i in left_descents(sigma)
        for tail in _reduced_words(apply_generator(sigma, i, LEFT))
    )


def reduced_words(sigma: AffinePermutation) -> List[ReducedWord]:
    """All reduced words, in lexicographic order.

    :param sigma:

    """
    bound = config.get('reduced_word_bound')
    sigma_length = length(sigma)

    if sigma_length > bound:
        raise AffineError(
            f'Length {sigma_length} of {sigma} exceeds reduced words bound {bound}; '
            'raise KCORE_REDUCED_WORD_BOUND to proceed')

    return [ReducedWord(word, sigma.k) for word in sorted(_reduced_words(sigma))]


def s_map(sigma: AffinePermutation) -> Core:
    """Core obtained by acting with a reduced word of sigma on the empty core.

    :param sigma: minimal coset representative

    """
    if not is_min_coset_rep(sigma):
        raise AffineError(f'{sigma} is not a minimal coset representative')

    return core_from_word(_greedy_word(sigma), sigma.k)


def w_lambda(lam: Partition, k: int) -> ReducedWord:
    """Residues of each row read right to left, top row first.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    letters = tuple(
        residue(Cell(row, col), k)
        for row in range(lam.length, 0, -1)
        for col in range(lam.row(row), 0, -1)
    )

    return ReducedWord(letters, k, reduced=True)


def phi(lam: Partition, k: int) -> AffinePermutation:
    """Affine Grassmannian permutation of a k-bounded partition.

    :param lam:
    :param k:

    """
    return w_lambda(lam, k).evaluate()


def weak_covers(sigma: AffinePermutation, quotient: bool = True) -> List[AffinePermutation]:
    """Left multiplications raising the length, optionally kept within the quotient.

    :param sigma:
    :param quotient: Keep minimal coset representatives only.

    """
    current = length(sigma)
    result = []

    for i in range(sigma.k + 1):
        tau = apply_generator(sigma, i, LEFT)

        if length(tau) > current and (not quotient or is_min_coset_rep(tau)):
            result.append(tau)

    return sorted(result)


def bruhat_leq(sigma: AffinePermutation, tau: AffinePermutation) -> bool:
    """Bruhat order on the quotient through core containment.

    :param sigma:
    :param tau:

    """
    if sigma.k != tau.k:
        raise AffineError(f'Permutations of different k: {sigma.k} and {tau.k}')

    return contains(s_map(sigma).shape, s_map(tau).shape)


def bruhat_leq_by_subwords(sigma: AffinePermutation, tau: AffinePermutation) -> bool:
    """Bruhat order by the subword property of a reduced word of tau.

    :param sigma:
    :param tau:

    """
    word = _greedy_word(tau)
    target = length(sigma)

    return any(
        from_word([word[idx] for idx in positions], tau.k) == sigma
        for positions in combinations(range(len(word)), target)
    )


def grassmannian_elements(k: int, max_length: int) -> List[AffinePermutation]:
    """Minimal coset representatives of length up to max_length.

    :param k:
    :param max_length:

    """
    start = identity(k)
    seen = {start}
    queue = deque([start])

    while queue:
        sigma = queue.popleft()

        if length(sigma) >= max_length:
            continue

        for tau in weak_covers(sigma):
            if tau not in seen:
                seen.add(tau)
                queue.append(tau)

    return sorted(seen, key=lambda sigma: (length(sigma), sigma.window))


def weak_order_graph(k: int, max_length: int) -> nx.DiGraph:
    """Weak order covers on the quotient; nodes carry `partition` attribute,
    p_map of their core.

    :param k:
    :param max_length:

    """
    graph = nx.DiGraph()

    for sigma in grassmannian_elements(k, max_length):
        graph.add_node(sigma, partition=p_map(s_map(sigma)))

    for sigma in list(graph.nodes):
        for tau in weak_covers(sigma):
            if tau in graph:
                graph.add_edge(sigma, tau)

    return graph
