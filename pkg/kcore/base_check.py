import logging
from typing import Iterator, List, Optional, Tuple

from .exceptions import KcoreException
from .utils import WithSettings, CheckClassesRegistry, CheckObjectsRegistry

__log__ = logging.getLogger(__name__)

Case = Tuple[str, bool]
"""Case description and its outcome."""


class CheckResult:
    """Outcome of a single check suite run."""

    def __init__(self, alias: str):
        self.alias = alias
        self.passed: int = 0
        self.failures: List[str] = []

    def __str__(self) -> str:
        return f'{self.alias}: {self.passed}/{self.total} passed'

    @property
    def total(self) -> int:
        return self.passed + len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            'alias': self.alias,
            'passed': self.passed,
            'total': self.total,
            'failures': list(self.failures),
        }


class BaseCheck(WithSettings):
    """Base invariant suite class. Suites with an alias are registered automatically."""

    config_entry_name: str = 'checks'

    alias: str = None
    """Suite alias, used by `check --only`."""

    description: str = ''
    """One line suite description."""

    default_max_n: Optional[int] = None
    """Size bound applied when none is configured."""

    def __init__(self, max_n: int = None):
        self.max_n = max_n if max_n is not None else self.default_max_n
        super().__init__()

    def __init_subclass__(cls, **kwargs):
        if cls.alias:
            CheckClassesRegistry.add(cls)

    def register(self):
        """Adds this object into CheckObjectsRegistry."""

        CheckObjectsRegistry.add(self)

    def verify(self, n: int, k: int) -> Iterator[Case]:  # pragma: nocover
        """Yields checked cases for sizes up to n and every k' in 1..k.

        :param n:
        :param k:

        """
        raise NotImplementedError

    def run(self, n: int, k: int) -> CheckResult:
        """Runs the suite collecting outcomes.

        :param n: Size bound.
        :param k: Largest k to check.

        """
        if self.max_n is not None and n > self.max_n:
            __log__.warning(f'Suite `{self.alias}` is bounded to n={self.max_n}, requested n={n}')
            n = self.max_n

        __log__.info(f'Running `{self.alias}` suite for n<={n}, k<={k} ...')

        result = CheckResult(self.alias)

        try:
            for description, outcome in self.verify(n, k):

                if outcome:
                    result.passed += 1

                else:
                    __log__.error(f'`{self.alias}` failed: {description}')
                    result.failures.append(description)

        except KcoreException as e:
            __log__.error(f'`{self.alias}` crashed: {e}')
            result.failures.append(f'crashed: {e}')

        return result
