from itertools import combinations_with_replacement, product

import pytest

from kcore.affine import phi, reduced_words
from kcore.core import Core, c_map
from kcore.exceptions import CoreError, EnumerationLimitExceeded, LatticeError, TableauError
from kcore.ktableau import (
    KTableau, validate, ensure_valid, gamma, gamma_inv, delete_max_letter, enumerate_semistandard,
    enumerate_standard, unique_tableau, standardization_steps, standardize, min_fill_count,
    to_reduced_word, from_reduced_word,
)
from kcore.lattice import Chain, admissible_chains, saturated_chains
from kcore.partition import Cell, Composition, Partition, EMPTY, compositions, dominates, partitions, residue


def P(*parts):
    return Partition(parts)


def standard(*rows):
    return KTableau.from_rows(rows, 3)


STANDARD_A = standard((1, 2, 3, 4, 6, 7), (4, 6, 7), (5,), (7,))
STANDARD_B = standard((1, 2, 3, 4, 5, 7), (4, 5, 7), (6,), (7,))
STANDARD_C = standard((1, 2, 4, 5, 6, 7), (3, 6, 7), (4,), (7,))
STANDARD_D = standard((1, 3, 4, 5, 6, 7), (2, 6, 7), (4,), (7,))

EVALUATION = Composition((1, 3, 1, 2, 1, 1))


def semistandard(*rows):
    return KTableau.from_rows(rows, 3, EVALUATION)


SEMISTANDARD_1 = semistandard((1, 2, 2, 2, 3, 4, 4, 6), (2, 3, 4, 4, 6), (4, 6), (5,))
SEMISTANDARD_2 = semistandard((1, 2, 2, 2, 3, 4, 4, 5), (2, 3, 4, 4, 5), (4, 5), (6,))
SEMISTANDARD_3 = semistandard((1, 2, 2, 2, 4, 4, 5, 6), (2, 4, 4, 5, 6), (3, 6), (4,))


def test_enumerate_standard():
    tableaux = enumerate_standard(P(3, 2, 1, 1), 3)

    assert tableaux == [STANDARD_B, STANDARD_A, STANDARD_C, STANDARD_D]
    assert all(t.shape.shape == P(6, 3, 1, 1) for t in tableaux)
    assert all(validate(t).standard for t in tableaux)


def test_enumerate_semistandard():
    tableaux = enumerate_semistandard(P(3, 3, 2, 1), EVALUATION, 3)

    assert tableaux == [SEMISTANDARD_2, SEMISTANDARD_1, SEMISTANDARD_3]
    assert all(t.shape.shape == P(8, 5, 2, 1) for t in tableaux)


def test_enumerate_capped(mock_config):
    mock_config['max_enum'] = 2

    with pytest.raises(EnumerationLimitExceeded):
        enumerate_standard(P(3, 2, 1, 1), 3)


def test_from_rows():
    assert STANDARD_B.evaluation == Composition.ones(7)
    assert SEMISTANDARD_1.size == 9
    assert SEMISTANDARD_1.max_letter == 6
    assert KTableau.from_rows([(1, 2, 2, 2, 3, 4, 4, 6), (2, 3, 4, 4, 6), (4, 6), (5,)], 3) == SEMISTANDARD_1

    with pytest.raises(TableauError):
        KTableau.from_rows([(1,), (2, 3)], 3)

    with pytest.raises(TableauError):
        KTableau.from_rows([(1, 3)], 3)

    with pytest.raises(CoreError):
        KTableau.from_rows([(1, 2), (3,)], 2)

    with pytest.raises(TableauError):
        KTableau(Core(P(2), 3), ((1,),), Composition((1,)))


def test_text_and_dict():
    assert STANDARD_B.to_text() == '7\n6\n4 5 7\n1 2 3 4 5 7'
    assert str(KTableau(Core(EMPTY, 2), (), Composition(()))) == '∅'
    assert KTableau.from_dict(SEMISTANDARD_3.to_dict()) == SEMISTANDARD_3
    assert STANDARD_B.to_dict() == {
        'k': 3,
        'shape': [6, 3, 1, 1],
        'rows': [[1, 2, 3, 4, 5, 7], [4, 5, 7], [6], [7]],
        'evaluation': [1, 1, 1, 1, 1, 1, 1],
    }


@pytest.mark.parametrize('given,expected', [
    (KTableau.from_rows([(2, 1)], 3), ('decreases', Cell(1, 2))),
    (KTableau.from_rows([(1, 2), (1,)], 3), ('does not strictly increase', Cell(2, 1))),
    (KTableau(Core(P(2), 3), ((1, 1),), Composition((1,))), ('occupies 2 distinct residues', Cell(1, 1))),
    (KTableau(Core(P(2, 1), 1), ((1, 1), (2,)), Composition((2, 1))), ('k-bounded hooks', None)),
    (KTableau(Core(P(2), 3), ((1, 2),), Composition((2,))), ('exactly 1..1', None)),
])
def test_validate_failures(given, expected):
    message, cell = expected
    report = validate(given)

    assert not report
    assert message in report.message
    assert report.cell == cell

    with pytest.raises(TableauError) as e:
        ensure_valid(given)

    assert e.value.cell == cell


def test_validate():
    assert validate(SEMISTANDARD_1)
    assert not validate(SEMISTANDARD_1).standard
    assert validate(STANDARD_A).standard
    assert ensure_valid(STANDARD_A) is STANDARD_A


def test_gamma_roundtrip():
    for chain in admissible_chains(P(3, 3, 2, 1), EVALUATION, 3):
        t = gamma(chain)

        assert validate(t)
        assert gamma_inv(t) == chain


def test_gamma_not_admissible():

    with pytest.raises(LatticeError):
        gamma(Chain((EMPTY, P(1, 1)), 2))


def test_gamma_inv():
    assert gamma_inv(STANDARD_B).steps[-1] == P(3, 2, 1, 1)
    assert len(gamma_inv(STANDARD_B)) == 8
    assert gamma_inv(STANDARD_B) in saturated_chains(P(3, 2, 1, 1), 3)


def test_delete_max_letter():
    smaller = delete_max_letter(STANDARD_B)

    assert smaller.rows == ((1, 2, 3, 4, 5), (4, 5), (6,))
    assert smaller.evaluation == Composition.ones(6)
    assert validate(smaller)

    assert delete_max_letter(SEMISTANDARD_2).rows == ((1, 2, 2, 2, 3, 4, 4, 5), (2, 3, 4, 4, 5), (4, 5))

    with pytest.raises(TableauError):
        delete_max_letter(KTableau(Core(EMPTY, 3), (), Composition(())))


@pytest.mark.parametrize('k', [2, 3])
def test_unique_tableau(k):
    for n in range(1, 6):
        for lam in partitions(n, k):
            assert enumerate_semistandard(lam, Composition(lam.parts), k) == [unique_tableau(lam, k)]


def test_unique_tableau_small():
    t = unique_tableau(P(2, 1), 2)

    assert t.rows == ((1, 1, 2), (2,))
    assert t.shape == c_map(P(2, 1), 2)


def test_no_tableaux_below_dominance():
    for lam in partitions(5, 3):
        for mu in partitions(5):
            if not dominates(lam, mu):
                assert enumerate_semistandard(lam, Composition(mu.parts), 3) == []


def test_standardization_steps():
    steps = standardization_steps(SEMISTANDARD_1)

    assert [tuple(step) for step in steps] == [
        (6, 3, 9), (5, 1, 8), (4, 2, 7), (4, 1, 6), (3, 0, 5), (2, 3, 4), (2, 2, 3), (2, 1, 2), (1, 0, 1),
    ]


def test_standardize():
    t = standardize(SEMISTANDARD_1)

    assert t.rows == ((1, 2, 3, 4, 5, 6, 7, 9), (4, 5, 6, 7, 9), (7, 9), (8,))
    assert validate(t).standard
    assert standardize(STANDARD_A) == STANDARD_A


def test_standardize_all():
    for t in enumerate_semistandard(P(3, 3, 2, 1), EVALUATION, 3):
        assert standardize(t) in enumerate_standard(P(3, 3, 2, 1), 3)


@pytest.mark.parametrize('given,expected', [
    ((P(2, 1), 2), 3),
    ((P(2, 1), 3), 3),
    ((P(3), 2), 3),
    ((EMPTY, 2), 0),
    ((P(1), 4), 1),
])
def test_min_fill_count(given, expected):
    assert min_fill_count(*given) == expected


def test_reduced_word():
    assert to_reduced_word(STANDARD_B) == (1, 2, 0, 3, 2, 1, 0)
    assert from_reduced_word((1, 2, 0, 3, 2, 1, 0), 3) == STANDARD_B
    assert from_reduced_word((), 3) == KTableau(Core(EMPTY, 3), (), Composition(()))

    with pytest.raises(TableauError):
        to_reduced_word(SEMISTANDARD_1)

    with pytest.raises(TableauError):
        from_reduced_word((0, 0), 2)

    with pytest.raises(CoreError):
        from_reduced_word((4,), 3)


def test_reduced_word_roundtrip():
    for t in enumerate_standard(P(3, 3, 2, 1), 3):
        assert from_reduced_word(to_reduced_word(t), 3) == t


def _brute_force_rows(lam, alpha, k):
    # Every filling with weakly increasing rows, kept when valid.
    shape = c_map(lam, k)
    letters = range(1, len(alpha) + 1)
    found = set()

    for rows in product(*[combinations_with_replacement(letters, part) for part in shape.shape.parts]):
        if validate(KTableau(shape, rows, alpha)):
            found.add(rows)

    return found


@pytest.mark.parametrize('k', [2, 3])
def test_enumerate_semistandard_brute_force(k):
    for lam in partitions(4, k):
        for alpha in compositions(4):
            expected = _brute_force_rows(lam, alpha, k)

            assert {t.rows for t in enumerate_semistandard(lam, alpha, k)} == expected


def _properly_fillable(nu, k, letters):
    # Strictly increasing rows and columns, repeated letters share a residue.
    cells = nu.cells()
    filling, residues = {}, {}

    def walk(idx):
        if idx == len(cells):
            return True

        cell = cells[idx]
        low = max(filling.get(Cell(cell.row, cell.col - 1), 0), filling.get(Cell(cell.row - 1, cell.col), 0))
        i = residue(cell, k)

        for letter in range(low + 1, letters + 1):
            if residues.get(letter, i) != i:
                continue

            fresh = letter not in residues
            residues[letter] = i
            filling[cell] = letter

            if walk(idx + 1):
                return True

            del filling[cell]

            if fresh:
                del residues[letter]

        return False

    return walk(0)


def _min_proper_letters(nu, k):
    return next(n for n in range(nu.degree + 1) if _properly_fillable(nu, k, n))


def test_min_fill_count_two_by_two():
    assert _min_proper_letters(P(2, 2), 1) == 3
    assert min_fill_count(P(2, 2), 1) == 3


@pytest.mark.parametrize('k', [1, 2, 3])
def test_min_fill_count_brute_force(k):
    for n in range(7):
        for nu in partitions(n):
            assert min_fill_count(nu, k) == _min_proper_letters(nu, k), nu


def test_standard_tableaux_are_reduced_words():
    tableaux = enumerate_standard(P(3, 2, 1, 1), 3)
    words = reduced_words(phi(P(3, 2, 1, 1), 3))

    assert len(tableaux) == len(words) == 4
    assert {to_reduced_word(t) for t in tableaux} == {word.letters for word in words}


def test_enumerate_capped_lazily(mock_config, monkeypatch):
    import kcore.ktableau

    built = []
    real_gamma = kcore.ktableau.gamma

    def counting_gamma(chain):
        built.append(chain)
        return real_gamma(chain)

    monkeypatch.setattr('kcore.ktableau.gamma', counting_gamma)
    mock_config['max_enum'] = 2

    with pytest.raises(EnumerationLimitExceeded):
        enumerate_standard(P(3, 2, 1, 1), 3)

    assert len(built) == 2
