from pathlib import Path
import enum
import sys
import typing

if sys.version_info[:2] >= (3, 11):
    import tomllib as toml
else:
    import tomli as toml


class OutputMode(enum.Enum):
    TEXT = 'text'
    JSON = 'json'


class ParseError(ValueError):
    """Malformed expression, graph6 or polynomial text"""

    def __init__(self, message: str, position: int):
        super().__init__(f'{message} at position {position}')
        self.message = message
        self.position = position


class CapacityError(ValueError):
    pass


class ConfError(ValueError):
    pass


default_conf: dict[str, typing.Any] = {
    'seed': 0,
    'census': {'max_n': 7,
               'large_max_n': 8,
               'batch_size': 16384},
    'realize': {'n_max': 12},
    'verify': {'random': 100,
               'max_vertices': 7,
               'exhaustive_vertices': 4}}


def get_conf(path: Path | None = None) -> dict[str, typing.Any]:
    """Read TOML configuration and fill in defaults

    Missing keys take their value from `default_conf`, unknown keys are
    ignored. Optional ``log`` table is passed through unchanged (it is a
    `logging.config.dictConfig` document).

    """
    conf = {k: (dict(v) if isinstance(v, dict) else v)
            for k, v in default_conf.items()}
    if path is None:
        return conf

    conf_str = path.read_text()
    try:
        data = toml.loads(conf_str)

    except toml.TOMLDecodeError as e:
        raise ConfError(f'invalid configuration {path}: {e}') from e

    for key, default in default_conf.items():
        if key not in data:
            continue

        if isinstance(default, dict):
            section = data[key]
            if not isinstance(section, dict):
                raise ConfError(f'{key}: expecting table')

            for subkey, subdefault in default.items():
                if subkey in section:
                    conf[key][subkey] = _check_int(f'{key}.{subkey}',
                                                   section[subkey])

        else:
            conf[key] = _check_int(key, data[key])

    if conf['census']['batch_size'] < 1:
        raise ConfError('census.batch_size: expecting positive integer')

    if 'log' in data:
        if not isinstance(data['log'], dict):
            raise ConfError('log: expecting table')
        conf['log'] = data['log']

    return conf


def _check_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfError(f'{name}: expecting integer')

    if value < 0:
        raise ConfError(f'{name}: expecting non-negative integer')

    return value
