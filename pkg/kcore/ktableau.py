"""Standard and semi-standard k-tableaux."""
import logging
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .core import (
    Core, c_map, p_map, apply_si, validate_core, check_bounded, check_residue,
    addable_corners_of_residue, k_bounded_hook_count,
)
from .exceptions import KcoreException, LatticeError, PartitionError, TableauError
from .lattice import Chain, iter_admissible_chains, r_admissible
from .partition import Cell, Composition, Partition, EMPTY, contains, partitions, residue
from .utils import capped

__log__ = logging.getLogger(__name__)

Rows = Tuple[Tuple[int, ...], ...]
Filling = Dict[Cell, int]


@dataclass(frozen=True)
class KTableau:
    """Filling of a core. Rows are listed bottom-up."""

    shape: Core
    rows: Rows
    evaluation: Composition

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.rows)
        object.__setattr__(self, 'rows', rows)

        if tuple(len(row) for row in rows) != self.shape.shape.parts:
            raise TableauError(f'Rows lengths {[len(row) for row in rows]} do not match shape {self.shape.shape}')

    def __str__(self) -> str:
        return self.to_text()

    @property
    def k(self) -> int:
        return self.shape.k

    @property
    def size(self) -> int:
        """Number of letters (evaluation degree)."""
        return self.evaluation.degree

    @property
    def max_letter(self) -> int:
        return len(self.evaluation)

    def filling(self) -> Filling:
        return {
            Cell(i, j): letter
            for i, row in enumerate(self.rows, 1)
            for j, letter in enumerate(row, 1)
        }

    def reading_word(self) -> Tuple[int, ...]:
        """Letters read along rows, bottom row first."""
        return tuple(letter for row in self.rows for letter in row)

    @classmethod
    def from_filling(cls, filling: Filling, shape: Core, evaluation: Composition) -> 'KTableau':
        rows = tuple(
            tuple(filling[Cell(i, j)] for j in range(1, part + 1))
            for i, part in enumerate(shape.shape.parts, 1)
        )
        return cls(shape, rows, evaluation)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], k: int, evaluation: Composition = None) -> 'KTableau':
        """Builds a tableau from bottom-up rows deriving evaluation
        from residues when not given.

        :param rows:
        :param k:
        :param evaluation:

        """
        try:
            shape = validate_core(Partition(tuple(len(row) for row in rows)), k)

        except PartitionError as e:
            raise TableauError(f'Rows do not form a partition shape: {e}')

        if evaluation is None:
            evaluation = _residue_counts(rows, k)

        return cls(shape, tuple(tuple(row) for row in rows), evaluation)

    def to_dict(self) -> dict:
        return {
            'k': self.k,
            'shape': self.shape.shape.to_list(),
            'rows': [list(row) for row in self.rows],
            'evaluation': self.evaluation.to_list(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'KTableau':
        k = int(data['k'])
        shape = validate_core(Partition(tuple(data['shape'])), k)
        return cls(shape, tuple(tuple(row) for row in data['rows']), Composition(tuple(data['evaluation'])))

    def to_text(self) -> str:
        """Rows printed top row first, the way tableaux are drawn."""

        if not self.rows:
            return '∅'

        width = max(len(str(letter)) for row in self.rows for letter in row)

        return '\n'.join(
            ' '.join(str(letter).rjust(width) for letter in row)
            for row in reversed(self.rows)
        )


def _residue_counts(rows: Sequence[Sequence[int]], k: int) -> Composition:
    residues: Dict[int, set] = {}

    for i, row in enumerate(rows, 1):
        for j, letter in enumerate(row, 1):
            residues.setdefault(letter, set()).add(residue(Cell(i, j), k))

    top = max(residues, default=0)
    missing = [letter for letter in range(1, top + 1) if letter not in residues]

    if missing or any(letter < 1 for letter in residues):
        raise TableauError(f'Letters must be exactly 1..{top}, missing {missing}')

    return Composition(tuple(len(residues[letter]) for letter in range(1, top + 1)))


class ValidationReport(NamedTuple):
    """Outcome of tableau validation."""

    valid: bool
    standard: bool = False
    message: str = ''
    cell: Optional[Cell] = None

    def __bool__(self) -> bool:
        return self.valid


def _fail(message: str, cell: Cell = None) -> ValidationReport:
    return ValidationReport(valid=False, message=message, cell=cell)


def validate(t: KTableau) -> ValidationReport:
    """Checks tableau conditions, reporting the first violation found.

    :param t:

    """
    k = t.k
    filling = t.filling()

    for cell, letter in filling.items():

        if not isinstance(letter, int) or letter < 1:
            return _fail(f'Letter {letter!r} at ({cell.row},{cell.col}) is not a positive integer', cell)

    for cell, letter in filling.items():
        left = filling.get(Cell(cell.row, cell.col - 1))

        if left is not None and left > letter:
            return _fail(f'Row {cell.row} decreases at ({cell.row},{cell.col})', cell)

        below = filling.get(Cell(cell.row - 1, cell.col))

        if below is not None and below >= letter:
            return _fail(f'Column {cell.col} does not strictly increase at ({cell.row},{cell.col})', cell)

    evaluation = t.evaluation.parts
    letters = set(filling.values())

    if letters != set(range(1, len(evaluation) + 1)):
        return _fail(f'Letters must be exactly 1..{len(evaluation)}, got {sorted(letters)}')

    residues: Dict[int, set] = {}
    first_cell: Dict[int, Cell] = {}

    for cell, letter in filling.items():
        residues.setdefault(letter, set()).add(residue(cell, k))
        first_cell.setdefault(letter, cell)

    for letter, expected in enumerate(evaluation, 1):
        found = len(residues[letter])

        if found != expected:
            return _fail(
                f'Letter {letter} occupies {found} distinct residues, expected {expected}', first_cell[letter])

    hooks = k_bounded_hook_count(t.shape)

    if t.evaluation.degree != hooks:
        return _fail(f'Evaluation {t.evaluation} has degree {t.evaluation.degree}, shape has {hooks} k-bounded hooks')

    return ValidationReport(valid=True, standard=all(part == 1 for part in evaluation))


def ensure_valid(t: KTableau) -> KTableau:
    """Raises TableauError unless the tableau is valid.

    :param t:

    """
    report = validate(t)

    if not report:
        raise TableauError(report.message, cell=report.cell)

    return t


def gamma(chain: Chain) -> KTableau:
    """Fills c(step_j)/c(step_{j-1}) with letter j.

    :param chain: admissible chain

    """
    k = chain.k
    steps = chain.steps
    filling: Filling = {}

    previous = c_map(steps[0], k)

    for letter, (lower, upper) in enumerate(zip(steps, steps[1:]), 1):
        r = upper.degree - lower.degree

        if not r_admissible(upper, lower, r, k):
            raise LatticeError(f'Chain step {lower} -> {upper} is not {r}-admissible for k={k}')

        current = c_map(upper, k)

        for cell in current.shape.cells():
            if cell not in previous.shape:
                filling[cell] = letter

        previous = current

    return KTableau.from_filling(filling, previous, chain.increments)


def _letters_at_most(t: KTableau, letter: int) -> Partition:
    return Partition.from_parts([sum(1 for value in row if value <= letter) for row in t.rows])


def gamma_inv(t: KTableau) -> Chain:
    """Reads the chain of shapes obtained by keeping letters up to j.

    :param t:

    """
    ensure_valid(t)

    steps = [
        p_map(validate_core(_letters_at_most(t, letter), t.k))
        for letter in range(0, t.max_letter + 1)
    ]

    return Chain(tuple(steps), t.k)


def delete_max_letter(t: KTableau) -> KTableau:
    """Removes all cells holding the largest letter.

    :param t:

    """
    ensure_valid(t)

    if not t.rows:
        raise TableauError('Unable to delete a letter from an empty tableau')

    top = t.max_letter
    rows = [tuple(letter for letter in row if letter != top) for row in t.rows]
    rows = tuple(row for row in rows if row)

    shape = validate_core(Partition(tuple(len(row) for row in rows)), t.k)

    return KTableau(shape, rows, Composition(t.evaluation.parts[:-1]))


def enumerate_semistandard(lam: Partition, alpha: Composition, k: int) -> List[KTableau]:
    """All k-tableaux of shape c(lam) and evaluation alpha, ordered by reading word.

    :param lam: k-bounded partition
    :param alpha: composition of |lam|
    :param k:

    """
    __log__.debug(f'Enumerating {k}-tableaux of shape {lam} and evaluation {alpha} ...')

    chains = capped(iter_admissible_chains(lam, alpha, k), 'tableaux')
    tableaux = [gamma(chain) for chain in chains]

    return sorted(tableaux, key=lambda t: t.reading_word())


def enumerate_standard(lam: Partition, k: int) -> List[KTableau]:
    """All standard k-tableaux of shape c(lam), ordered by reading word.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)
    return enumerate_semistandard(lam, Composition.ones(lam.degree), k)


def unique_tableau(lam: Partition, k: int) -> KTableau:
    """The only k-tableau of shape c(lam) and evaluation lam.

    Letter j fills the cells added by the residue string read along row j.

    :param lam: k-bounded partition
    :param k:

    """
    check_bounded(lam, k)

    current = Core(EMPTY, k)
    filling: Filling = {}

    for row, part in enumerate(lam.parts, 1):
        grown = current

        for col in range(1, part + 1):
            grown = apply_si(grown, residue(Cell(row, col), k))

        for cell in grown.shape.cells():
            if cell not in current.shape:
                filling[cell] = row

        current = grown

    return KTableau.from_filling(filling, current, Composition(lam.parts))


class StandardizationStep(NamedTuple):

    letter: int
    residue: int
    relabel: int


def standardization_steps(t: KTableau) -> List[StandardizationStep]:
    """Relabeling steps turning a semi-standard tableau into a standard one.

    Each step takes the largest letter not relabeled yet, reads the residue
    of its rightmost cell and relabels all its cells of that residue.

    :param t:

    """
    ensure_valid(t)

    k = t.k
    filling = t.filling()
    pending = set(filling)
    relabel = t.size
    steps = []

    while pending:
        letter = max(filling[cell] for cell in pending)
        rightmost = max((cell for cell in pending if filling[cell] == letter), key=lambda cell: cell.col)
        i = residue(rightmost, k)

        pending -= {
            cell for cell in pending
            if filling[cell] == letter and residue(cell, k) == i
        }

        steps.append(StandardizationStep(letter, i, relabel))
        relabel -= 1

    return steps


def standardize(t: KTableau) -> KTableau:
    """Standard k-tableau of the same shape, see standardization_steps().

    :param t:

    """
    k = t.k
    filling = t.filling()
    relabeled: Filling = {}

    for step in standardization_steps(t):
        for cell, letter in filling.items():
            if cell not in relabeled and letter == step.letter and residue(cell, k) == step.residue:
                relabeled[cell] = step.relabel

    return KTableau.from_filling(relabeled, t.shape, Composition.ones(t.size))


def min_fill_count(nu: Partition, k: int) -> int:
    """Smallest number of k-bounded hooks of a (k+1)-core containing `nu`.

    :param nu:
    :param k:

    """
    for m in range(nu.degree + 1):
        for lam in partitions(m, k):
            if contains(nu, c_map(lam, k).shape):
                return m

    raise KcoreException(f'No core found for {nu} within {nu.degree} letters')  # pragma: nocover


def to_reduced_word(t: KTableau) -> Tuple[int, ...]:
    """Residues of letters m, m-1, ..., 1 of a standard tableau.

    :param t:

    """
    report = validate(t)

    if not report.standard:
        raise TableauError(f'Standard k-tableau expected: {report.message or "evaluation is not (1,...,1)"}')

    residues = {letter: residue(cell, t.k) for cell, letter in t.filling().items()}

    return tuple(residues[letter] for letter in range(t.max_letter, 0, -1))


def from_reduced_word(w: Sequence[int], k: int) -> KTableau:
    """Standard tableau whose letter l fills the cells added by the l-th operator
    (the word is applied from its last letter).

    :param w:
    :param k:

    """
    current = Core(EMPTY, k)
    filling: Filling = {}

    for letter, i in enumerate(reversed(list(w)), 1):
        check_residue(i, k)

        if not addable_corners_of_residue(current, i):
            raise TableauError(f'Operator s_{i} at step {letter} does not grow the core {current.shape}')

        grown = apply_si(current, i)

        for cell in grown.shape.cells():
            if cell not in current.shape:
                filling[cell] = letter

        current = grown

    return KTableau.from_filling(filling, current, Composition.ones(len(w)))
