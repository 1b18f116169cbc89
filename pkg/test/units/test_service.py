import pytest
from simadc.exceptions import UnitException
from simadc.units import UnitsService
from test.tutils import reset_instance


@pytest.mark.parametrize(
    'text,unit,expected',
    [
        ('20 nm', 'm', 20e-9),
        ('600.3 kA/m', 'A/m', 600.3e3),
        ('15.3 kJ/m^3', 'J/m**3', 15.3e3),
        ('0.01 mJ/m^2', 'J/m**2', 1e-5),
        ('0.5 ps', 's', 0.5e-12),
        ('10 us', 's', 10e-6),
        ('1 GHz', 'Hz', 1e9),
        ('300 K', 'K', 300.0),
        ('3 Mohm', 'ohm', 3e6),
        ('170 mV', 'V', 0.17),
        # A bare number is already SI
        ('42', 'm', 42.0),
    ],
)
def test_to_si(units_service, text, unit, expected):
    assert units_service.to_si(text, unit) == pytest.approx(expected)


@pytest.mark.parametrize(
    'text,unit',
    [
        ('3 kg', 'm'),
        ('20 nm', 'A/m'),
        ('5 nm', ''),
        ('12 blargs', 'm'),
    ],
)
def test_to_si_errors(units_service, text, unit):
    with pytest.raises(UnitException):
        units_service.to_si(text, unit)


def test_quantity_and_check(units_service):
    q = units_service.quantity(2.5, 'kA/m')
    assert units_service.check(q, 'A/m').magnitude == pytest.approx(2500)
    with pytest.raises(UnitException):
        units_service.check(q, 's')

    dimensionless = units_service.quantity(0.5)
    assert dimensionless.dimensionless


def test_start_stop():
    with reset_instance(UnitsService) as (service,):
        assert not service.running
        # The registry starts lazily
        assert service.unit_registry is not None
        assert service.running

        registry = service.unit_registry
        assert service.start() is service
        assert service.unit_registry is registry
        service.start(force=True)
        assert service.unit_registry is not registry

        service.stop()
        assert not service.running


@pytest.mark.parametrize(
    'name,expected',
    [
        ('ms', True),
        ('T', True),
        ('nm', True),
        ('length_x', False),
        ('r_ref', False),
        ('energy_barrier_kt', False),
    ],
)
def test_is_unit(units_service, name, expected):
    assert units_service.is_unit(name) is expected
    # Cached answers agree
    assert units_service.is_unit(name) is expected
