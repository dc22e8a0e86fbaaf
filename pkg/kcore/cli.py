"""Command line front end.

Every subcommand is a `Command` subclass registered by its alias.
Enumerating subcommands print one item per line and report
the number of items on the error stream.

"""
import logging
import sys
from argparse import ArgumentParser, Namespace
from typing import Callable, Iterable, List, Optional, TextIO, Tuple, TypeVar

from . import VERSION_STR
from .affine import w_lambda
from .core import Core, c_map, p_map, k_skew, k_conjugate, validate_core
from .exceptions import KcoreException, KcoreValueError
from .kostka import KostkaMatrix, kostka_matrix, k_schur_in_h
from .ktableau import (
    KTableau, enumerate_semistandard, enumerate_standard, ensure_valid, standardize,
    standardization_steps, to_reduced_word, from_reduced_word,
)
from .lattice import (
    Chain, up_covers, covers_by_definition, k_addable_corners, leq, saturated_chains,
    admissible_chains, rowadders, peel_admissible, young_lattice_graph, hasse_dot,
)
from .partition import Partition, removable_corners
from .toolbox import bootstrap, run_checks
from .utils import (
    CommandClassesRegistry, configure_logging, parse_partition, format_partition, parse_composition,
    parse_word, format_word, parse_json_object, dump_json,
)

__log__ = logging.getLogger(__name__)

T = TypeVar('T')

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_UNKNOWN_COMMAND = 64

TEXT = 'text'
JSON = 'json'
CSV = 'csv'
DOT = 'dot'

ROWS_SEPARATOR = '/'
"""Separates tableau rows (bottom row first) on the command line."""


def parse_core(text: str, k: int) -> Core:
    """Reads a core either as a partition or as a JSON object from `partition-to-core`.

    :param text:
    :param k:

    """
    if text.strip().startswith('{'):
        gamma = Core.from_dict(parse_json_object(text, ['k', 'shape']))

        if gamma.k != k:
            raise KcoreValueError(f'Core is given for k={gamma.k}, -k is {k}')

        return gamma

    return validate_core(parse_partition(text), k)


def parse_tableau(text: str, k: int) -> KTableau:
    """Reads a tableau either as rows `1,2,4/3/5` (bottom row first)
    or as a JSON object from `tableaux`.

    :param text:
    :param k:

    """
    if text.strip().startswith('{'):
        t = KTableau.from_dict(parse_json_object(text, ['k', 'shape', 'rows', 'evaluation']))

        if t.k != k:
            raise KcoreValueError(f'Tableau is given for k={t.k}, -k is {k}')

        return ensure_valid(t)

    rows = [parse_word(row) for row in text.split(ROWS_SEPARATOR) if row.strip()]

    return ensure_valid(KTableau.from_rows(rows, k))


def format_chain(chain: Chain) -> str:
    return ' < '.join(format_partition(step) for step in chain.steps)


class Command:
    """Base subcommand. Subclasses with an alias are registered automatically."""

    alias: str = None
    """Subcommand name."""

    help: str = ''

    formats: Tuple[str, ...] = (TEXT, JSON)
    """Output formats supported."""

    def __init__(self, args: Namespace, out: TextIO, err: TextIO):
        self.args = args
        self.out = out
        self.err = err

    def __init_subclass__(cls, **kwargs):
        if cls.alias:
            CommandClassesRegistry.add(cls)

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        parser.add_argument('-k', type=int, required=True, help='Hook lengths bound, cores are (k+1)-cores')

    @property
    def k(self) -> int:
        k = self.args.k

        if k < 1:
            raise KcoreValueError(f'k must be positive, got {k}')

        return k

    @property
    def format(self) -> str:
        return self.args.format

    def emit(self, line: str):
        self.out.write(f'{line}\n')

    def emit_as(self, data, text: str):
        """Writes either JSON encoding of data or its text form.

        :param data: JSON serializable
        :param text:

        """
        self.emit(dump_json(data) if self.format == JSON else text)

    def stream(self, items: Iterable[T], render: Callable[[T], str], encode: Callable[[T], object], noun: str):
        """Writes items one per line, then their number to the error stream.

        :param items:
        :param render: Text form of an item.
        :param encode: JSON form of an item.
        :param noun: What items are, for the count line.

        """
        count = 0

        for count, item in enumerate(items, 1):
            self.emit_as(encode(item), render(item))

        self.err.write(f'{count} {noun}\n')

    def execute(self) -> int:
        if self.format not in self.formats:
            raise KcoreValueError(
                f'`{self.alias}` does not support `{self.format}` format, use one of: {", ".join(self.formats)}')

        return self.run() or EXIT_OK

    def run(self) -> Optional[int]:  # pragma: nocover
        raise NotImplementedError


class PartitionCommand(Command):
    """Base for subcommands taking a single k-bounded partition."""

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('partition', help='Partition like `4,2,1`, `-` for the empty one')

    @property
    def partition(self) -> Partition:
        return parse_partition(self.args.partition)


class CoreToPartition(Command):

    alias = 'core-to-partition'
    help = 'Counts k-bounded hooks row by row'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('core', help='(k+1)-core as a partition or JSON')

    def run(self):
        lam = p_map(parse_core(self.args.core, self.k))
        self.emit_as(lam.to_list(), format_partition(lam))


class PartitionToCore(PartitionCommand):

    alias = 'partition-to-core'
    help = 'Builds the (k+1)-core of a k-bounded partition'

    def run(self):
        gamma = c_map(self.partition, self.k)
        self.emit_as(gamma.to_dict(), format_partition(gamma.shape))


class KSkewCommand(PartitionCommand):

    alias = 'kskew'
    help = 'Shows the k-skew diagram as outer/inner'

    def run(self):
        skew = k_skew(self.partition, self.k)
        self.emit_as(skew.to_dict(), f'{format_partition(skew.skew.outer)}/{format_partition(skew.skew.inner)}')


class KConjugateCommand(PartitionCommand):

    alias = 'kconjugate'
    help = 'Computes the k-conjugate'

    def run(self):
        conj = k_conjugate(self.partition, self.k)
        self.emit_as(conj.to_list(), format_partition(conj))


class CoversCommand(PartitionCommand):

    alias = 'covers'
    help = 'Lists covers in the k-Young lattice'

    methods = {
        'operator': up_covers,
        'definition': covers_by_definition,
        'residue': lambda lam, k: sorted(lam.add_cell(cell.row) for cell, _ in k_addable_corners(lam, k)),
    }

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('--direction', choices=['up', 'down'], default='up')
        parser.add_argument('--method', choices=sorted(cls.methods), default='operator')

    def run(self):
        lam, k = self.partition, self.k
        up = self.methods[self.args.method]

        if self.args.direction == 'up':
            covers = up(lam, k)

        else:
            candidates = [lam.remove_cell(cell.row) for cell in removable_corners(lam)]
            covers = sorted(nu for nu in candidates if lam in up(nu, k))

        self.stream(covers, format_partition, Partition.to_list, 'covers')


class LeqCommand(Command):

    alias = 'leq'
    help = 'Tests the order of the k-Young lattice'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('lower')
        parser.add_argument('upper')

    def run(self):
        result = leq(parse_partition(self.args.lower), parse_partition(self.args.upper), self.k)
        self.emit_as(result, 'true' if result else 'false')


class ChainsCommand(PartitionCommand):

    alias = 'chains'
    help = 'Lists saturated chains, or admissible ones for an evaluation'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('--evaluation', help='Composition like `1,3,1`')

    def run(self):
        lam, k = self.partition, self.k
        evaluation = self.args.evaluation

        if evaluation is None:
            chains = saturated_chains(lam, k)

        else:
            chains = admissible_chains(lam, parse_composition(evaluation), k)

        self.stream(chains, format_chain, Chain.to_dict, 'chains')


class TableauxCommand(PartitionCommand):

    alias = 'tableaux'
    help = 'Lists standard or semi-standard k-tableaux'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument('--standard', action='store_true')
        group.add_argument('--evaluation', help='Composition like `1,3,1`')

    def run(self):
        lam, k = self.partition, self.k

        if self.args.standard:
            tableaux = enumerate_standard(lam, k)

        else:
            tableaux = enumerate_semistandard(lam, parse_composition(self.args.evaluation), k)

        # Blank line between tableaux.
        self.stream(tableaux, lambda t: f'{t.to_text()}\n', KTableau.to_dict, 'tableaux')


class TableauCommand(Command):
    """Base for subcommands taking a tableau."""

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('tableau', help=f'Rows like `1,2,4{ROWS_SEPARATOR}3`, bottom row first, or JSON')

    @property
    def tableau(self) -> KTableau:
        return parse_tableau(self.args.tableau, self.k)

    def emit_tableau(self, t: KTableau):
        self.emit_as(t.to_dict(), t.to_text())


class StandardizeCommand(TableauCommand):

    alias = 'standardize'
    help = 'Standardizes a semi-standard k-tableau'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('--steps', action='store_true', help='Show relabeling steps instead')

    def run(self):
        t = self.tableau

        if self.args.steps:
            self.stream(
                standardization_steps(t),
                lambda step: f'{step.letter} {step.residue} {step.relabel}',
                lambda step: step._asdict(),
                'steps')
            return

        self.emit_tableau(standardize(t))


class WordCommand(TableauCommand):

    alias = 'word'
    help = 'Reads the reduced word of a standard k-tableau'

    def run(self):
        word = to_reduced_word(self.tableau)
        self.emit_as(list(word), format_word(word))


class TableauFromWordCommand(Command):

    alias = 'tableau'
    help = 'Builds the standard k-tableau of a reduced word'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('word', help='Residues like `1,2,0` or `"1 2 0"`')

    def run(self):
        t = from_reduced_word(parse_word(self.args.word), self.k)
        self.emit_as(t.to_dict(), t.to_text())


class PhiCommand(PartitionCommand):

    alias = 'phi'
    help = 'Affine Grassmannian permutation of a k-bounded partition'

    def run(self):
        word = w_lambda(self.partition, self.k)
        sigma = word.evaluate()
        self.emit_as({'k': self.k, 'word': word.to_list(), 'window': list(sigma.window)}, str(word))


class MatrixCommand(Command):
    """Base for subcommands printing a matrix over partitions of n."""

    formats = (TEXT, JSON, CSV)

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('n', type=int)

    def build(self, n: int, k: int) -> KostkaMatrix:  # pragma: nocover
        raise NotImplementedError

    def run(self):
        n = self.args.n

        if n < 0:
            raise KcoreValueError(f'n must not be negative, got {n}')

        matrix = self.build(n, self.k)

        if self.format == CSV:
            self.out.write(matrix.to_csv())
            return

        self.emit_as(matrix.to_dict(), matrix.to_text())


class KostkaCommand(MatrixCommand):

    alias = 'kostka'
    help = 'k-Kostka matrix, rows are shapes and columns evaluations'

    def build(self, n: int, k: int) -> KostkaMatrix:
        return kostka_matrix(n, k)


class KSchurCommand(MatrixCommand):

    alias = 'kschur-h'
    help = 'k-Schur functions at t=1 in the complete homogeneous basis'

    def build(self, n: int, k: int) -> KostkaMatrix:
        return k_schur_in_h(n, k)


class HasseCommand(Command):

    alias = 'hasse'
    help = 'Hasse diagram of the k-Young lattice up to degree n'

    formats = (TEXT, JSON, DOT)

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('n', type=int)

    def run(self):
        n, k = self.args.n, self.k

        if n < 0:
            raise KcoreValueError(f'n must not be negative, got {n}')

        if self.format == DOT:
            self.out.write(hasse_dot(n, k))
            return

        graph = young_lattice_graph(n, k)
        edges = sorted(graph.edges, key=lambda edge: (edge[0].degree, edge[0], edge[1]))

        if self.format == JSON:
            nodes = sorted(graph.nodes, key=lambda lam: (lam.degree, lam))
            self.emit(dump_json({
                'k': k,
                'nodes': [lam.to_list() for lam in nodes],
                'edges': [[lower.to_list(), upper.to_list()] for lower, upper in edges],
            }))
            return

        for lower, upper in edges:
            self.emit(f'{format_partition(lower)} -> {format_partition(upper)}')


class RowaddersCommand(Command):

    alias = 'rowadders'
    help = 'Cells of delta/gamma with no (k+1)-predecessor in it'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('gamma', help='Inner (k+1)-core')
        parser.add_argument('delta', help='Outer (k+1)-core')

    def run(self):
        k = self.k
        cells = rowadders(parse_core(self.args.gamma, k), parse_core(self.args.delta, k))
        self.stream(cells, lambda cell: f'{cell.row},{cell.col}', lambda cell: cell.to_list(), 'cells')


class PeelCommand(Command):

    alias = 'peel'
    help = 'Distinct residues leading from the larger core of an admissible pair to the smaller'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        super().add_arguments(parser)
        parser.add_argument('larger')
        parser.add_argument('smaller')

    def run(self):
        word = peel_admissible(parse_partition(self.args.larger), parse_partition(self.args.smaller), self.k)
        self.emit_as(word, format_word(word))


class CheckCommand(Command):

    alias = 'check'
    help = 'Runs invariant suites'

    @classmethod
    def add_arguments(cls, parser: ArgumentParser):
        parser.add_argument('--n', type=int, default=6, help='Size bound')
        parser.add_argument('--k', dest='k', type=int, default=3, help='Largest k')
        parser.add_argument('--only', action='append', metavar='ALIAS', help='Run only this suite')

    def run(self):
        bootstrap()

        results = run_checks(self.args.n, self.k, self.args.only)

        passed = sum(result.passed for result in results)
        total = sum(result.total for result in results)
        ok = all(result.ok for result in results)

        if self.format == JSON:
            self.emit(dump_json({'passed': passed, 'total': total, 'suites': [r.to_dict() for r in results]}))

        else:
            for result in results:
                self.emit(str(result))

                for failure in result.failures:
                    self.emit(f'  FAILED {failure}')

            self.emit(f'{passed}/{total} passed')

        return EXIT_OK if ok else EXIT_FAILED


def get_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='kcore', description='k-cores, k-tableaux and k-Schur functions at t=1')
    parser.add_argument('--version', action='version', version=VERSION_STR)

    commands = parser.add_subparsers(title='Supported commands', dest='command', metavar='COMMAND')
    commands.required = True

    for alias, command_cls in CommandClassesRegistry.get().items():
        subparser = commands.add_parser(alias, help=command_cls.help)
        subparser.add_argument(
            '--format', choices=[TEXT, JSON, CSV, DOT], default=TEXT, help='Output format')
        subparser.add_argument(
            '-v', '--verbose', action='count', default=0, help='Log more, repeat for debug output')
        command_cls.add_arguments(subparser)
        subparser.set_defaults(command_cls=command_cls)

    return parser


def run(argv: List[str] = None, out: TextIO = None, err: TextIO = None) -> int:
    """Runs a command returning its exit code.

    :param argv: Arguments without the program name.
    :param out: Output stream, stdout by default.
    :param err: Error stream, stderr by default.

    """
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)

    command = next((arg for arg in argv if not arg.startswith('-')), None)

    if command is not None and CommandClassesRegistry.get(command) is None:
        err.write(f'error: unknown command `{command}`\n')
        return EXIT_UNKNOWN_COMMAND

    try:
        args = get_parser().parse_args(argv)

    except SystemExit as e:
        return e.code

    configure_logging(args.verbose)

    try:
        return args.command_cls(args, out, err).execute()

    except KcoreException as e:
        __log__.debug(f'`{args.command}` failed', exc_info=True)
        err.write(f'error: {e}\n')
        return EXIT_INVALID


def main():
    sys.exit(run())
