from threading import RLock
from typing import Dict, Union

try:
    import pint
except ImportError:  # pragma: no cover
    pint = None
from simadc import logging
from simadc.exceptions import UnitException
from simadc.utils import Singleton, with_lock


__all__ = ['UnitsService']


logger = logging.getLogger(__name__)


class UnitsService(metaclass=Singleton):
    '''Owns the Pint registry used to read unit-bearing config values and to
    check the dimensions of derived quantities.'''

    def __init__(self):
        self._lock = RLock()
        self._unit_registry = None
        self._unit_names: Dict[str, bool] = {}
        self._running = False

    @property
    def lock(self) -> RLock:
        return self._lock

    @property
    @with_lock
    def unit_registry(self) -> 'pint.UnitRegistry':
        if not self._running:
            self.start()
        return self._unit_registry

    @property
    def running(self) -> bool:
        return self._running

    @with_lock
    def start(self, force: bool = False) -> 'UnitsService':
        if pint is None:
            raise UnitException('Pint is required to parse units')
        if self._running and not force:
            return self
        self._unit_registry = pint.UnitRegistry(
            autoconvert_offset_to_baseunit=True
        )
        self._running = True
        logger.debug('Started unit registry')
        return self

    def stop(self) -> 'UnitsService':
        self._unit_registry = None
        self._unit_names = {}
        self._running = False
        return self

    def quantity(
        self, value: Union[float, str], unit: str = ''
    ) -> 'pint.Quantity':
        '''Returns a Pint quantity from a number (with unit) or from text
        such as "600.3 kA/m".'''
        ureg = self.unit_registry
        if isinstance(value, str):
            try:
                return ureg.Quantity(value)
            except Exception as e:
                raise UnitException(
                    'Cannot parse quantity "{}": {}'.format(value, e),
                    extra={'value': value},
                ) from e
        return ureg.Quantity(value, unit or 'dimensionless')

    def to_si(self, text: str, unit: str) -> float:
        '''Parses text as a quantity and returns its magnitude in unit.
        A dimensionless result is taken as already expressed in unit.

        Raises:
            UnitException: If the text cannot be parsed or has a
                dimensionality incompatible with unit.
        '''
        quantity = self.quantity(text)
        if quantity.dimensionless and not quantity.unitless:
            return float(quantity.to('dimensionless').magnitude)
        if quantity.unitless:
            return float(quantity.magnitude)
        if not unit:
            raise UnitException(
                '"{}" has units but a plain number is expected'.format(text),
                extra={'value': text},
            )
        try:
            return float(quantity.to(unit).magnitude)
        except pint.errors.DimensionalityError as e:
            raise UnitException(
                '"{}" cannot be expressed in {}'.format(text, unit),
                extra={'value': text, 'unit': unit},
            ) from e

    @with_lock
    def is_unit(self, name: str) -> bool:
        '''Whether Pint reads name as a unit, e.g. ms (millisecond) or T.'''
        if name not in self._unit_names:
            try:
                self.unit_registry.parse_units(name)
                self._unit_names[name] = True
            except Exception:
                self._unit_names[name] = False
        return self._unit_names[name]

    def check(self, quantity: 'pint.Quantity', unit: str) -> 'pint.Quantity':
        '''Converts quantity to unit, raising UnitException on a
        dimensionality mismatch.'''
        try:
            return quantity.to(unit)
        except pint.errors.DimensionalityError as e:
            raise UnitException(
                'Quantity {} is not compatible with {}'.format(quantity, unit),
                extra={'unit': unit},
            ) from e
