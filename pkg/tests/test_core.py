from itertools import product

import pytest
from hypothesis import given, strategies as st

from kcore.core import (
    Core, c_map, p_map, k_skew, k_conjugate, rho, validate_core, is_core, apply_si, core_from_word,
    addable_corners_of_residue, removable_corners_of_residue, highest_corner_row, flip_cells, wedge,
    is_k_string, cores_of_degree, cores_with_hook_count, k_bounded_hook_count, same_k,
)
from kcore.exceptions import BoundError, CoreError
from kcore.partition import Cell, Partition, EMPTY, conjugate, contains, hook_lengths, partitions, residue


def P(*parts):
    return Partition(parts)


@st.composite
def bounded_strategy(draw, max_n=9, max_k=4):
    k = draw(st.integers(min_value=1, max_value=max_k))
    n = draw(st.integers(min_value=0, max_value=max_n))
    index = partitions(n, k)

    return draw(st.sampled_from(index)), k


@pytest.mark.parametrize('given,expected', [
    ((P(4, 3, 2, 2, 1, 1), 4), P(9, 5, 3, 2, 1, 1)),
    ((P(4, 2, 1, 1), 4), P(6, 2, 1, 1)),
    ((P(3, 2, 1, 1), 3), P(6, 3, 1, 1)),
    ((P(3, 3, 2, 1), 3), P(8, 5, 2, 1)),
    ((P(3, 2, 2, 1), 3), P(6, 3, 2, 1)),
    ((EMPTY, 2), EMPTY),
    ((P(1, 1, 1, 1), 1), P(4, 3, 2, 1)),
])
def test_c_map(given, expected):
    assert c_map(*given).shape == expected


def test_c_map_unbounded():

    with pytest.raises(BoundError):
        c_map(P(5, 1), 4)

    with pytest.raises(CoreError):
        c_map(P(1), 0)


def test_k_skew():
    skew = k_skew(P(4, 3, 2, 2, 1, 1), 4)

    assert skew.skew.outer == P(9, 5, 3, 2, 1, 1)
    assert skew.skew.inner == P(5, 2, 1)
    assert skew.skew.row_lengths() == [4, 3, 2, 2, 1, 1]
    assert rho(c_map(P(4, 3, 2, 2, 1, 1), 4)) == P(5, 2, 1)
    assert skew.to_dict() == {'k': 4, 'outer': [9, 5, 3, 2, 1, 1], 'inner': [5, 2, 1]}


@pytest.mark.parametrize('given,expected', [
    ((P(4, 3, 2, 2, 1, 1), 4), P(3, 2, 2, 1, 1, 1, 1, 1, 1)),
    ((P(2, 1), 2), P(1, 1, 1)),
    ((EMPTY, 3), EMPTY),
])
def test_k_conjugate(given, expected):
    assert k_conjugate(*given) == expected


def test_k_conjugate_large_k():
    # Every hook is bounded once k is at least the hook of the corner cell.
    lam = P(3, 2, 1)

    assert c_map(lam, 5).shape == lam
    assert k_conjugate(lam, 5) == conjugate(lam)


@given(bounded_strategy())
def test_bijection(data):
    lam, k = data
    gamma = c_map(lam, k)

    assert is_core(gamma.shape, k)
    assert p_map(gamma) == lam
    assert k_bounded_hook_count(gamma) == lam.degree
    assert k_conjugate(k_conjugate(lam, k), k) == lam
    assert k_skew(lam, k).skew.column_lengths() == list(k_conjugate(lam, k).parts)
    assert all(hook <= k for cell, hook in hook_lengths(gamma.shape).items() if cell in k_skew(lam, k).skew)


@pytest.mark.parametrize('k', [1, 2, 3])
def test_c_map_brute_force(k):
    # Every core with few bounded hooks has at most 10 cells.
    cores = [gamma for d in range(11) for gamma in cores_of_degree(d, k)]

    for m in range(5):
        for lam in partitions(m, k):
            matches = [gamma for gamma in cores if p_map(gamma) == lam]
            assert matches == [c_map(lam, k)]


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_c_map_keeps_containment(k):
    bounded = [lam for n in range(9) for lam in partitions(n, k)]

    for lam, mu in product(bounded, repeat=2):
        if contains(lam, mu):
            assert contains(c_map(lam, k).shape, c_map(mu, k).shape), (lam, mu)


def test_validate_core():
    assert validate_core(P(6, 2, 1, 1), 4).shape == P(6, 2, 1, 1)

    with pytest.raises(CoreError) as e:
        validate_core(P(2, 1), 2)

    assert e.value.cell == Cell(1, 1)
    assert 'hook length 3' in f'{e.value}'

    with pytest.raises(CoreError):
        Core(EMPTY, 0)


def test_core_dict():
    gamma = Core(P(6, 2, 1, 1), 4)

    assert gamma.to_dict() == {'k': 4, 'shape': [6, 2, 1, 1]}
    assert Core.from_dict(gamma.to_dict()) == gamma
    assert gamma.residues == 5
    assert str(gamma) == '(6,2,1,1)@k=4'


def test_corners_of_residue():
    gamma = Core(P(6, 2, 1, 1), 4)

    assert addable_corners_of_residue(gamma, 1) == [Cell(5, 1), Cell(2, 3), Cell(1, 7)]
    assert removable_corners_of_residue(gamma, 2) == [Cell(4, 1)]
    assert removable_corners_of_residue(gamma, 1) == []
    assert highest_corner_row(gamma, 1) == 5
    assert highest_corner_row(gamma, 4) == 3

    with pytest.raises(CoreError):
        addable_corners_of_residue(gamma, 5)


def test_apply_si():
    gamma = Core(P(6, 2, 1, 1), 4)

    added = apply_si(gamma, 1)
    assert added.shape == P(7, 3, 1, 1, 1)
    assert p_map(added) == P(4, 2, 1, 1, 1)

    assert apply_si(added, 1) == gamma
    assert apply_si(gamma, 2).shape == P(6, 2, 1)
    assert apply_si(Core(EMPTY, 3), 0).shape == P(1)
    assert apply_si(Core(EMPTY, 3), 1) == Core(EMPTY, 3)


@pytest.mark.parametrize('given,expected', [
    (([3, 1, 0, 3, 2, 1, 3, 0], 3), P(6, 3, 2, 1)),
    (([0], 2), P(1)),
    (([], 2), EMPTY),
    (([1, 0], 2), P(2)),
    (([2, 0], 2), P(1, 1)),
])
def test_core_from_word(given, expected):
    assert core_from_word(*given).shape == expected


def test_core_from_word_bad_letter():

    with pytest.raises(CoreError):
        core_from_word([0, 3], 2)


@given(bounded_strategy(max_n=7, max_k=3))
def test_si_toggles_residue(data):
    lam, k = data
    gamma = c_map(lam, k)

    for i in range(k + 1):
        other = apply_si(gamma, i)
        changed = set(gamma.shape.cells()) ^ set(other.shape.cells())

        assert all(residue(cell, k) == i for cell in changed)
        assert apply_si(other, i) == gamma


@pytest.mark.parametrize('given,expected', [
    ((Core(P(2), 2), 2), {Cell(1, 1)}),
    ((Core(P(3, 1), 2), 0), {Cell(1, 2)}),
    ((Core(EMPTY, 2), 0), set()),
])
def test_flip_cells(given, expected):
    assert flip_cells(*given) == expected


def test_wedge():
    assert wedge(Cell(2, 1), Cell(1, 3)) == Cell(1, 1)


def test_is_k_string():
    assert is_k_string([Cell(5, 1), Cell(2, 3), Cell(1, 7)], 4)
    assert is_k_string([Cell(1, 1)], 2)
    assert not is_k_string([Cell(1, 1), Cell(1, 2)], 2)


@pytest.mark.parametrize('given,expected', [
    ((0, 2), [EMPTY]),
    ((3, 1), [P(2, 1)]),
    ((4, 2), [P(3, 1), P(2, 1, 1)]),
    ((2, 3), [P(2), P(1, 1)]),
])
def test_cores_of_degree(given, expected):
    assert [gamma.shape for gamma in cores_of_degree(*given)] == expected


@pytest.mark.parametrize('given', [(3, 2), (4, 3), (5, 1)])
def test_cores_with_hook_count(given):
    m, k = given
    cores = cores_with_hook_count(m, k)

    assert len(cores) == len(partitions(m, k))
    assert all(k_bounded_hook_count(gamma) == m for gamma in cores)
    assert len(set(cores)) == len(cores)


def test_same_k():
    assert same_k(Core(EMPTY, 2), Core(P(1), 2)) == 2

    with pytest.raises(CoreError):
        same_k(Core(EMPTY, 2), Core(EMPTY, 3))

