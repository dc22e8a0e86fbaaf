"""The k-Young lattice: covers, order, saturated and admissible chains."""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Tuple

import networkx as nx
from graphviz import Digraph

from .core import (
    Core, c_map, p_map, k_conjugate, apply_si, check_bounded, addable_corners_of_residue,
    removable_corners_of_residue, same_k,
)
from .exceptions import LatticeError
from .partition import (
    Cell, Composition, Partition, EMPTY, contains, is_horizontal_strip, is_vertical_strip,
    addable_corners, residue, partitions, horizontal_strips_below,
)

__log__ = logging.getLogger(__name__)

Steps = Tuple[Partition, ...]


@dataclass(frozen=True)
class Chain:
    """Sequence of k-bounded partitions starting from the empty one."""

    steps: Steps
    k: int

    def __post_init__(self):
        steps = self.steps

        if not isinstance(steps, tuple):
            steps = tuple(steps)
            object.__setattr__(self, 'steps', steps)

        if not steps or steps[0] != EMPTY:
            raise LatticeError('Chain must start from the empty partition')

        for lower, upper in zip(steps, steps[1:]):
            if upper.degree <= lower.degree:
                raise LatticeError(f'Chain degrees must strictly increase: {lower} is followed by {upper}')

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def top(self) -> Partition:
        return self.steps[-1]

    @property
    def increments(self) -> Composition:
        """Degree differences of consecutive steps."""
        return Composition(tuple(b.degree - a.degree for a, b in zip(self.steps, self.steps[1:])))

    def to_dict(self) -> dict:
        return {'k': self.k, 'steps': [step.to_list() for step in self.steps]}

    @classmethod
    def from_dict(cls, data: dict) -> 'Chain':
        return cls(tuple(Partition(tuple(step)) for step in data['steps']), int(data['k']))


def k_addable_corners(lam: Partition, k: int) -> List[Tuple[Cell, int]]:
    """Addable corners of `lam` whose row holds the highest addable corner
    of its residue in the core of `lam`. Bottom row upward.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    gamma = c_map(lam, k)
    result = []

    for i in range(k + 1):
        corners = addable_corners_of_residue(gamma, i)

        if corners:
            row = corners[0].row
            result.append((Cell(row, lam.row(row) + 1), i))

    return sorted(result)


def up_covers(lam: Partition, k: int) -> List[Partition]:
    """Partitions covering `lam`: p_map of s_i applied to its core, for residues
    with addable corners. Sorted.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    gamma = c_map(lam, k)

    return sorted(
        p_map(apply_si(gamma, i))
        for i in range(k + 1)
        if addable_corners_of_residue(gamma, i)
    )


def down_covers(lam: Partition, k: int) -> List[Partition]:
    """Partitions covered by `lam`. Sorted.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    gamma = c_map(lam, k)

    return sorted(
        p_map(apply_si(gamma, i))
        for i in range(k + 1)
        if removable_corners_of_residue(gamma, i)
    )


def is_cover(lam: Partition, mu: Partition, k: int) -> bool:
    """Direct cover test: a single cell added and k-conjugates contained.

    :param lam:
    :param mu:
    :param k:

    """
    check_bounded(lam, k)
    check_bounded(mu, k)

    return (
        mu.degree == lam.degree + 1
        and contains(lam, mu)
        and contains(k_conjugate(lam, k), k_conjugate(mu, k))
    )


def covers_by_definition(lam: Partition, k: int) -> List[Partition]:
    """Covers of `lam` tried cell by cell against the containment definition.

    :param lam:
    :param k:

    """
    check_bounded(lam, k)

    candidates = [lam.add_cell(cell.row) for cell in addable_corners(lam)]

    return sorted(mu for mu in candidates if mu.row(1) <= k and is_cover(lam, mu, k))


def _within(nu: Partition, mu: Partition, mu_conj: Partition, k: int) -> bool:
    return contains(nu, mu) and contains(k_conjugate(nu, k), mu_conj)


def leq(lam: Partition, mu: Partition, k: int) -> bool:
    """Order of the k-Young lattice: a saturated chain leads from `lam` to `mu`.

    :param lam:
    :param mu:
    :param k:

    """
    check_bounded(lam, k)
    check_bounded(mu, k)

    if lam == mu:
        return True

    mu_conj = k_conjugate(mu, k)

    if not _within(lam, mu, mu_conj, k):
        return False

    seen = {lam}
    queue = deque([lam])

    while queue:
        nu = queue.popleft()

        for upper in up_covers(nu, k):

            if upper == mu:
                return True

            if upper in seen or upper.degree >= mu.degree or not _within(upper, mu, mu_conj, k):
                continue

            seen.add(upper)
            queue.append(upper)

    return False


@lru_cache(maxsize=None)
def _saturated(lam: Partition, k: int) -> Tuple[Steps, ...]:
    if lam == EMPTY:
        return ((EMPTY,),)

    result = [
        steps + (lam,)
        for nu in down_covers(lam, k)
        for steps in _saturated(nu, k)
    ]

    return tuple(sorted(result))


def saturated_chains(lam: Partition, k: int) -> List[Chain]:
    """All unit-step chains from the empty partition to `lam`, in lexicographic order.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)
    return [Chain(steps, k) for steps in _saturated(lam, k)]


@lru_cache(maxsize=None)
def count_saturated_chains(lam: Partition, k: int) -> int:
    """Number of saturated chains to `lam`.

    :param lam: k-bounded partition
    :param k:

    """
    if lam == EMPTY:
        return 1

    return sum(count_saturated_chains(nu, k) for nu in down_covers(lam, k))


def canonical_chain(lam: Partition, k: int) -> Chain:
    """Saturated chain removing the highest removable residue string at each step.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    steps = [lam]
    gamma = c_map(lam, k)

    while gamma.shape != EMPTY:
        candidates = []

        for i in range(k + 1):
            corners = removable_corners_of_residue(gamma, i)

            if corners:
                candidates.append((corners[0].row, i))

        _, i = max(candidates)
        gamma = apply_si(gamma, i)
        steps.append(p_map(gamma))

    return Chain(tuple(reversed(steps)), k)


def r_admissible(larger: Partition, smaller: Partition, r: int, k: int) -> bool:
    """Whether larger/smaller is a horizontal r-strip while the k-conjugates
    differ by a vertical r-strip.

    :param larger:
    :param smaller:
    :param r:
    :param k:

    """
    check_bounded(larger, k)
    check_bounded(smaller, k)

    if larger.degree - smaller.degree != r:
        return False

    return (
        is_horizontal_strip(larger, smaller)
        and is_vertical_strip(k_conjugate(larger, k), k_conjugate(smaller, k))
    )


@lru_cache(maxsize=None)
def _admissible(lam: Partition, parts: Tuple[int, ...], k: int) -> Tuple[Steps, ...]:
    if not parts:
        return ((EMPTY,),) if lam == EMPTY else ()

    r = parts[-1]
    result = []

    for nu in horizontal_strips_below(lam, r):

        if not r_admissible(lam, nu, r, k):
            continue

        for steps in _admissible(nu, parts[:-1], k):
            result.append(steps + (lam,))

    return tuple(sorted(result))


@lru_cache(maxsize=None)
def _admissible_count(lam: Partition, parts: Tuple[int, ...], k: int) -> int:
    if not parts:
        return 1 if lam == EMPTY else 0

    r = parts[-1]

    return sum(
        _admissible_count(nu, parts[:-1], k)
        for nu in horizontal_strips_below(lam, r)
        if r_admissible(lam, nu, r, k)
    )


def _check_admissible_args(lam: Partition, alpha: Composition, k: int):
    check_bounded(lam, k)

    if alpha.degree != lam.degree:
        raise LatticeError(f'Composition {alpha} and partition {lam} have different degrees')


def admissible_chains(lam: Partition, alpha: Composition, k: int) -> List[Chain]:
    """All chains to `lam` whose j-th step is alpha_j-admissible.

    :param lam: k-bounded partition
    :param alpha: composition of |lam|
    :param k:

    """
    _check_admissible_args(lam, alpha, k)
    return [Chain(steps, k) for steps in _admissible(lam, alpha.parts, k)]


def iter_admissible_chains(lam: Partition, alpha: Composition, k: int) -> Iterator[Chain]:
    """Lazily yields alpha-admissible chains to `lam`, in no particular order.

    :param lam: k-bounded partition
    :param alpha: composition of |lam|
    :param k:

    """
    _check_admissible_args(lam, alpha, k)

    for steps in _walk_admissible(lam, alpha.parts, k):
        yield Chain(steps, k)


def _walk_admissible(lam: Partition, parts: Tuple[int, ...], k: int) -> Iterator[Steps]:
    if not parts:
        if lam == EMPTY:
            yield (EMPTY,)
        return

    r = parts[-1]

    for nu in horizontal_strips_below(lam, r):
        # Dead branches are pruned by the memoized count.
        if r_admissible(lam, nu, r, k) and _admissible_count(nu, parts[:-1], k):
            for steps in _walk_admissible(nu, parts[:-1], k):
                yield steps + (lam,)


def count_admissible_chains(lam: Partition, alpha: Composition, k: int) -> int:
    """Number of alpha-admissible chains to `lam`.

    :param lam: k-bounded partition
    :param alpha: composition of |lam|
    :param k:

    """
    _check_admissible_args(lam, alpha, k)
    return _admissible_count(lam, alpha.parts, k)


def rowadders(gamma: Core, delta: Core) -> List[Cell]:
    """Cells of delta/gamma with no (k+1)-predecessor inside delta/gamma.

    :param gamma:
    :param delta: core containing gamma

    """
    k = same_k(gamma, delta)

    if not contains(gamma.shape, delta.shape):
        raise LatticeError(f'{gamma.shape} is not contained in {delta.shape}')

    cells = [cell for cell in delta.shape.cells() if cell not in gamma.shape]
    diagonals = {cell.diagonal for cell in cells}

    return [cell for cell in cells if cell.diagonal - (k + 1) not in diagonals]


def peel_admissible(larger: Partition, smaller: Partition, k: int) -> List[int]:
    """Distinct residues i_1..i_n with c(smaller) = s_{i_1}...s_{i_n} c(larger),
    found by repeatedly removing the residue of the rightmost cell.

    :param larger:
    :param smaller:
    :param k:

    """
    r = larger.degree - smaller.degree

    if not r_admissible(larger, smaller, r, k):
        raise LatticeError(f'{larger},{smaller} is not an admissible pair for k={k}')

    delta = c_map(larger, k)
    gamma = c_map(smaller, k)
    peeled = []

    while delta != gamma:
        rightmost = max(
            (cell for cell in delta.shape.cells() if cell not in gamma.shape),
            key=lambda cell: cell.col)
        i = residue(rightmost, k)
        delta = apply_si(delta, i)
        peeled.append(i)

    return list(reversed(peeled))


def young_lattice_graph(n_max: int, k: int) -> nx.DiGraph:
    """Cover graph on k-bounded partitions of degree up to n_max.

    :param n_max:
    :param k:

    """
    graph = nx.DiGraph()

    for n in range(n_max + 1):
        for lam in partitions(n, k):
            graph.add_node(lam)

            if n < n_max:
                for mu in up_covers(lam, k):
                    graph.add_edge(lam, mu)

    return graph


def _node_id(lam: Partition) -> str:
    return 'p' + '_'.join(map(str, lam.parts))


def _node_label(lam: Partition) -> str:
    return ','.join(map(str, lam.parts)) or '∅'


def _node_key(lam: Partition) -> tuple:
    return lam.degree, tuple(-part for part in lam.parts)


def hasse_dot(n_max: int, k: int) -> str:
    """DOT source of the k-Young lattice Hasse diagram up to degree n_max.

    Node labels list parts bottom row first.

    :param n_max:
    :param k:

    """
    graph = young_lattice_graph(n_max, k)

    dot = Digraph(name=f'k{k}_young_lattice', graph_attr={'rankdir': 'BT'}, strict=True)

    for lam in sorted(graph.nodes, key=_node_key):
        dot.node(_node_id(lam), _node_label(lam))

    for lower, upper in sorted(graph.edges, key=lambda edge: (_node_key(edge[0]), _node_key(edge[1]))):
        dot.edge(_node_id(lower), _node_id(upper))

    return dot.source

