import json
import logging
import os
from collections.abc import Mapping
from inspect import getfullargspec
from pathlib import Path
from pkgutil import iter_modules
from typing import Any, Iterable, Iterator, List, Sequence, Tuple, TypeVar, Union

from .exceptions import KcoreValueError, EnumerationLimitExceeded
from .partition import Partition, Composition

__log__ = logging.getLogger(__name__)

T = TypeVar('T')

EMPTY_PARTITION_TOKEN = '-'
"""Command line token for the empty partition."""


def configure_logging(verbosity: int = 0):
    """Configures root logger for console usage.

    :param verbosity: 0 - warnings, 1 - info, 2 and more - debug.

    """
    level = logging.WARNING

    if verbosity == 1:
        level = logging.INFO

    elif verbosity > 1:
        level = logging.DEBUG

    logging.basicConfig(level=level, format='%(levelname)s: %(message)s')


def update_dict(old_dict: dict, new_dict: dict) -> dict:
    """Updates [inplace] old dictionary with data from a new one with respect to existing values.

    :param old_dict:
    :param new_dict:

    """
    for key, val in new_dict.items():

        if isinstance(val, Mapping):
            old_dict[key] = update_dict(old_dict.get(key, {}), val)

        else:
            old_dict[key] = new_dict[key]

    return old_dict


def import_classes():
    """Dynamically imports check suites from their directory."""

    for package_name in ['checks']:
        __log__.debug(f'Importing {package_name} ...')
        import_from_path(package_name)


def import_from_path(path: str):
    """Dynamically imports modules from package.
    It is an .egg-friendly alternative to os.listdir() walking.

    :param path: path under kcore

    """
    for _, pname, ispkg in iter_modules([str(Path(__file__).parent / path)]):
        __import__(f'kcore.{path}.{pname}')


class KcoreConfig:
    """Gives methods to read kcore settings.

    Settings come from defaults, then from an optional JSON file,
    then from environment variables.

    """
    USER_SETTINGS_FILE = Path(os.environ.get('KCORE_CONFIG', Path.cwd() / 'kcore.json'))

    ENV_OVERRIDES = {
        'max_enum': 'KCORE_MAX_ENUM',
        'reduced_word_bound': 'KCORE_REDUCED_WORD_BOUND',
    }

    _basic_settings = {
        'max_enum': 10 ** 6,
        'reduced_word_bound': 12,
        'checks': {},
    }

    @classmethod
    def load(cls) -> dict:
        """Returns current settings dictionary."""

        settings = json.loads(json.dumps(cls._basic_settings))

        settings_file = cls.USER_SETTINGS_FILE

        if settings_file.exists():
            __log__.debug(f'Loading configuration file {settings_file} ...')

            try:
                with open(str(settings_file)) as f:
                    update_dict(settings, json.load(f))

            except ValueError as e:
                raise KcoreValueError(f'Malformed configuration file {settings_file}: {e}')

        for key, env_name in cls.ENV_OVERRIDES.items():
            value = os.environ.get(env_name)

            if value is None:
                continue

            try:
                settings[key] = int(value)

            except ValueError:
                raise KcoreValueError(f'{env_name} must be an integer, got `{value}`')

        return settings

    @classmethod
    def get(cls, name: str) -> Any:
        """Returns a single setting value.

        :param name:

        """
        return cls.load()[name]


config = KcoreConfig


def capped(items: Iterable[T], what: str = 'items') -> Iterator[T]:
    """Passes items through, raising once more than `max_enum` of them are produced.

    :param items: Lazy iterable, consumed one item at a time.
    :param what: Items description for the error message.

    """
    limit = config.get('max_enum')

    for idx, item in enumerate(items, 1):

        if idx > limit:
            __log__.warning(f'Enumeration of {what} stopped at {limit}')
            raise EnumerationLimitExceeded(f'More than {limit} {what}; raise KCORE_MAX_ENUM to proceed')

        yield item


class WithSettings:
    """Introduces settings support for class objects.

    NB: * Settings names are taken from inheriting classes __init__() methods.
        * __init__() method MUST use keyword arguments only.
        * Inheriting classes MUST save settings under object properties with the same name as in __init__().

    """
    alias: str = None

    config_entry_name: str = None

    def __init__(self, **kwargs):
        pass

    def __str__(self) -> str:
        return self.alias

    @classmethod
    def spawn_with_settings(cls, settings: dict) -> 'WithSettings':
        """Spawns and returns object initialized with given settings.

        :param settings:

        """
        __log__.debug(f'Spawning `{cls.__name__}` object with the given settings ...')

        return cls(**settings)

    def get_settings(self) -> dict:
        """Returns object settings as found in its __init__() signature."""

        settings = {}

        try:
            settings_names = getfullargspec(self.__init__)[0]

            del settings_names[0]  # do not need `self`

            for name in settings_names:
                settings[name] = getattr(self, name)

        except TypeError:
            pass  # Probably __init__ method is not user-defined.

        return settings


class ObjectsRegistry:

    __slots__ = ['_items']

    def __init__(self):
        self._items = {}

    def add(self, obj: Any):
        """Add an object to registry.

        NB: object MUST have `alias` attribute.

        :param obj:

        """
        name = getattr(obj, 'alias')

        __log__.debug(f'Registering `{name}` from {obj} ...')

        self._items[name] = obj

    def get(self, obj_alias: str = None) -> Union[dict, Any]:
        """Returns registered objects or a definite object by its alias,
        or registry items if no alias provided.

        :param obj_alias:

        """
        if obj_alias is None:
            return self._items

        return self._items.get(obj_alias)


CheckClassesRegistry = ObjectsRegistry()
CheckObjectsRegistry = ObjectsRegistry()
CommandClassesRegistry = ObjectsRegistry()


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)

    except ValueError as e:
        raise KcoreValueError(f'Malformed JSON `{text}`: {e}')


def _int_list(text: str, what: str) -> List[int]:
    text = text.strip()

    if text.startswith('['):
        values = _load_json(text)

        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise KcoreValueError(f'Malformed {what} `{text}`: expected an array of integers')

        return values

    chunks = [chunk for chunk in text.replace(',', ' ').split() if chunk]

    try:
        return [int(chunk) for chunk in chunks]

    except ValueError:
        raise KcoreValueError(f'Malformed {what} `{text}`')


def parse_partition(text: str) -> Partition:
    """Parses partition from `4,2,1`, `-` (empty partition) or JSON `[4,2,1]`.

    :param text:

    """
    if text.strip() in (EMPTY_PARTITION_TOKEN, '', '∅'):
        return Partition(())

    parts = _int_list(text, 'partition')

    if any(part < 1 for part in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise KcoreValueError(f'Malformed partition `{text}`: parts must be positive and weakly decreasing')

    return Partition(tuple(parts))


def format_partition(partition: Partition) -> str:
    """Formats partition the way parse_partition() reads it back.

    :param partition:

    """
    if not partition.parts:
        return EMPTY_PARTITION_TOKEN

    return ','.join(map(str, partition.parts))


def parse_composition(text: str) -> Composition:
    """Parses composition from `1,3,1` or JSON `[1,3,1]`.

    :param text:

    """
    if text.strip() == EMPTY_PARTITION_TOKEN:
        return Composition(())

    parts = _int_list(text, 'composition')

    if any(part < 1 for part in parts):
        raise KcoreValueError(f'Malformed composition `{text}`: parts must be positive')

    return Composition(tuple(parts))


def parse_word(text: str) -> Tuple[int, ...]:
    """Parses residues word from `1 2 0`, `1,2,0` or JSON `[1,2,0]`.

    :param text:

    """
    if text.strip() == EMPTY_PARTITION_TOKEN:
        return ()

    return tuple(_int_list(text, 'word'))


def format_word(word: Sequence[int]) -> str:
    """Formats residues word as space separated letters.

    :param word:

    """
    return ' '.join(map(str, word))


def parse_json_object(text: str, required: Sequence[str]) -> dict:
    """Parses a JSON object making sure required keys are present.

    :param text:
    :param required: Keys names.

    """
    data = _load_json(text)

    if not isinstance(data, dict):
        raise KcoreValueError(f'Expected a JSON object, got `{text}`')

    missing = [key for key in required if key not in data]

    if missing:
        raise KcoreValueError(f'JSON object misses keys: {", ".join(missing)}')

    return data


def dump_json(data: Any) -> str:
    """Dumps data into a compact deterministic JSON string.

    :param data:

    """
    return json.dumps(data, separators=(',', ':'), ensure_ascii=False)

