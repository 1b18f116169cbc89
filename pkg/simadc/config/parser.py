'''Line oriented parser of key = value config files.

Values are numeric expressions evaluated with simpleeval; physical constants
and the keys defined on earlier lines can be used by name. Keys spelled like
a unit are not: after "ms = 600 kA/m", "10*ms" still means 10 milliseconds.
A value that carries units ("20 nm", "600.3 kA/m") is read with Pint and
converted to the SI unit of its key. A bare number is taken as SI.
'''

import math
from threading import RLock
from typing import Dict, List, Mapping, NamedTuple, Optional, Union
from simpleeval import SimpleEval
from simadc import logging
from simadc.config.schema import CONFIG_KEYS, ConfigKey, Value
from simadc.constants import (
    ELEMENTARY_CHARGE,
    KB,
    MU0,
    PLANCK,
    SPEED_OF_LIGHT,
)
from simadc.exceptions import ConfigParseException, UnitException
from simadc.units import UnitsService
from simadc.utils import Singleton


__all__ = ['ConfigParser', 'ParsedValue']


logger = logging.getLogger(__name__)

CONSTANT_NAMES = {
    'c': SPEED_OF_LIGHT,
    'mu0': MU0,
    'kB': KB,
    'pi': math.pi,
    'e': ELEMENTARY_CHARGE,
    'h': PLANCK,
    'q': ELEMENTARY_CHARGE,
}

_eval_lock = RLock()


@Singleton.function
def get_simple_eval() -> SimpleEval:
    functions = {
        name: getattr(math, name)
        for name in dir(math)
        if not name.startswith('_') and callable(getattr(math, name))
    }
    functions.update({'abs': abs, 'min': min, 'max': max})
    return SimpleEval(functions=functions)


class ParsedValue(NamedTuple):
    value: Value
    line: Optional[int]


def _split_list(text: str) -> List[str]:
    '''Splits on commas that are not inside parentheses.'''
    items, depth, current = [], 0, ''
    for char in text:
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        if char == ',' and depth == 0:
            items.append(current)
            current = ''
        else:
            current += char
    items.append(current)
    return [item.strip() for item in items]


class ConfigParser:
    def __init__(self, keys: Mapping[str, ConfigKey] = CONFIG_KEYS) -> None:
        self._keys = keys

    @property
    def keys(self) -> Mapping[str, ConfigKey]:
        return self._keys

    def _error(
        self, message: str, key: Optional[str], line: Optional[int], source: str
    ) -> ConfigParseException:
        where = source if line is None else '{}:{}'.format(source, line)
        if key:
            message = '{}: {}: {}'.format(where, key, message)
        else:
            message = '{}: {}'.format(where, message)
        return ConfigParseException(
            message, extra={'key': key, 'line': line, 'source': source}
        )

    def _evaluate(
        self, key: ConfigKey, text: str, names: Mapping[str, float]
    ) -> float:
        evaluator = get_simple_eval()
        with _eval_lock:
            evaluator.names = {**names, **CONSTANT_NAMES}
            try:
                value = evaluator.eval(text)
            except Exception as e:
                logger.debug(
                    'Not a plain expression "{}" ({}), trying units'.format(
                        text, e
                    )
                )
                value = None
        if value is None:
            return UnitsService().to_si(text, key.unit)
        if isinstance(value, complex) or not isinstance(value, (int, float)):
            raise UnitException(
                '"{}" does not evaluate to a real number'.format(text)
            )
        return value

    def _scalar(
        self,
        key: ConfigKey,
        text: str,
        names: Mapping[str, float],
    ) -> Union[int, float]:
        value = self._evaluate(key, text, names)
        if key.kind == 'int':
            if isinstance(value, float) and not value.is_integer():
                raise UnitException(
                    'expected an integer, got {}'.format(value)
                )
            return int(value)
        value = float(value)
        if not math.isfinite(value):
            raise UnitException('value is not finite: {}'.format(value))
        return value

    def parse_value(
        self,
        name: str,
        text: str,
        line: Optional[int] = None,
        names: Optional[Mapping[str, float]] = None,
        source: str = '<string>',
    ) -> Value:
        '''Parses the text of one value for key name.

        Raises:
            ConfigParseException: Unknown key or unreadable value, the
                message names the key and the line.
        '''
        key = self._keys.get(name)
        if key is None:
            raise self._error('unknown key', name, line, source)
        names = names or {}
        try:
            if key.kind == 'list':
                items = [item for item in _split_list(text) if item]
                if not items:
                    raise UnitException('empty list')
                return tuple(self._scalar(key, item, names) for item in items)
            return self._scalar(key, text, names)
        except UnitException as e:
            raise self._error(
                'cannot read "{}": {}'.format(text, e), name, line, source
            ) from e

    def parse(
        self, text: str, source: str = '<string>'
    ) -> Dict[str, ParsedValue]:
        '''Parses a whole file. Blank lines and everything after # are
        ignored.

        Raises:
            ConfigParseException: On a malformed line, an unknown or repeated
                key or an unreadable value.
        '''
        values: Dict[str, ParsedValue] = {}
        names: Dict[str, float] = {}
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split('#', 1)[0].strip()
            if not line:
                continue
            if '=' not in line:
                raise self._error(
                    'expected "key = value", got "{}"'.format(line),
                    None,
                    lineno,
                    source,
                )
            name, _, value_text = line.partition('=')
            name, value_text = name.strip(), value_text.strip()
            if name in values:
                raise self._error(
                    'duplicate key, first set on line {}'.format(
                        values[name].line
                    ),
                    name,
                    lineno,
                    source,
                )
            if not value_text:
                raise self._error('missing value', name, lineno, source)
            value = self.parse_value(name, value_text, lineno, names, source)
            values[name] = ParsedValue(value, lineno)
            if not isinstance(value, tuple) and not UnitsService().is_unit(
                name
            ):
                names[name] = value
        logger.debug('Parsed {} keys from {}'.format(len(values), source))
        return values
