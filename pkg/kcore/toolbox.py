import logging
from typing import List, Sequence

from .base_check import CheckResult
from .exceptions import KcoreValueError
from .utils import CheckClassesRegistry, CheckObjectsRegistry, config, import_classes

if False:  # pragma: nocover
    from .base_check import BaseCheck  # noqa

__log__ = logging.getLogger(__name__)


def init_object_registries():
    """Initializes check suites registry with settings from configuration file."""

    __log__.debug('Initializing objects registries from configuration file ...')

    cfg = config.load()

    for alias, check_cls in CheckClassesRegistry.get().items():
        settings = cfg['checks'].get(alias) or {}
        check_cls.spawn_with_settings(settings).register()


def bootstrap():
    """Bootstraps kcore environment,
    Populates check suites registry with objects instantiated with settings from config.

    """
    __log__.debug('Bootstrapping kcore environment ...')

    import_classes()
    init_object_registries()


def get_checks(only: Sequence[str] = None) -> List['BaseCheck']:
    """Returns registered suites, optionally only those with the given aliases.

    :param only: Suites aliases.

    """
    registered = CheckObjectsRegistry.get()

    if not only:
        return [registered[alias] for alias in sorted(registered)]

    unknown = [alias for alias in only if alias not in registered]

    if unknown:
        raise KcoreValueError(
            f'Unknown check suite: {", ".join(unknown)}. Available: {", ".join(sorted(registered))}')

    return [registered[alias] for alias in only]


def run_checks(n: int, k: int, only: Sequence[str] = None) -> List[CheckResult]:
    """Runs invariant suites for sizes up to n and every k' up to k.

    :param n:
    :param k:
    :param only: Suites aliases to run, all by default.

    """
    if n < 0 or k < 1:
        raise KcoreValueError(f'Check bounds must be n >= 0 and k >= 1, got n={n}, k={k}')

    results = []

    for check in get_checks(only):
        result = check.run(n, k)
        __log__.info(str(result))
        results.append(result)

    return results
