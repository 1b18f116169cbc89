import math
import pytest
from simadc.config import ConfigParser
from simadc.exceptions import ConfigException, ConfigParseException


@pytest.fixture(scope='module')
def parser():
    return ConfigParser()


@pytest.mark.parametrize(
    'name,text,expected',
    [
        ('length_x', '20 nm', 20e-9),
        ('length_x', '20e-9', 20e-9),
        ('ms', '600.3 kA/m', 600.3e3),
        ('ku2', '15.3 kJ/m^3', 15.3e3),
        ('ki', '0.01 mJ/m^2', 1e-5),
        ('alpha_me', '0.05 / c', 0.05 / 299792458.0),
        ('temperature', '300 K', 300.0),
        ('t_s', '10 us', 10e-6),
        ('f_clk', '1 GHz', 1e9),
        ('r_ref', 'sqrt(1e6 * 3e6)', math.sqrt(3e12)),
        ('gamma', '2.21e5', 2.21e5),
    ],
)
def test_parse_value(parser, name, text, expected):
    assert parser.parse_value(name, text) == pytest.approx(expected)


def test_parse_value_int(parser):
    value = parser.parse_value('bits', '4')
    assert value == 4
    assert isinstance(value, int)
    assert parser.parse_value('n_trials', '1e3') == 1000

    with pytest.raises(ConfigParseException) as info:
        parser.parse_value('bits', '4.5', line=7)
    assert info.value.key == 'bits'
    assert info.value.line == 7


def test_parse_value_list(parser):
    assert parser.parse_value('voltages', '-0.8, 0, 0.8') == pytest.approx(
        (-0.8, 0.0, 0.8)
    )
    # Commas inside a call do not split the list
    assert parser.parse_value(
        'psw_voltages', 'max(0.5, 1), 2 V'
    ) == pytest.approx((1.0, 2.0))
    with pytest.raises(ConfigParseException):
        parser.parse_value('voltages', ' , ')


@pytest.mark.parametrize(
    'name,text',
    [
        ('length_x', '20 kg'),
        ('length_x', '20 blargs'),
        ('alpha', '1 nm'),
        ('length_x', '1 / 0'),
        ('unknown_key', '1'),
    ],
)
def test_parse_value_errors(parser, name, text):
    with pytest.raises(ConfigParseException) as info:
        parser.parse_value(name, text, line=3, source='device.conf')
    assert info.value.key == name
    assert info.value.line == 3
    assert 'device.conf:3' in str(info.value)
    assert isinstance(info.value, ConfigException)
    assert info.value.exit_code == 1


def test_parse(parser):
    text = '''
    # geometry
    length_x = 20 nm   # trailing comment
    length_y = 10 nm

    r_p = 1e6
    r_ap = 3e6
    r_ref = sqrt(r_p * r_ap)
    voltages = -0.8, 0, 0.8
    '''
    values = parser.parse(text, 'low.conf')
    assert set(values) == {
        'length_x',
        'length_y',
        'r_p',
        'r_ap',
        'r_ref',
        'voltages',
    }
    assert values['length_x'].value == pytest.approx(20e-9)
    assert values['length_x'].line == 3
    assert values['r_ref'].value == pytest.approx(math.sqrt(3e12))
    assert values['r_ref'].line == 8
    assert values['voltages'].value == pytest.approx((-0.8, 0.0, 0.8))


@pytest.mark.parametrize(
    'text,key,line,message',
    [
        ('length_x = 20 nm\nfoo = 1\n', 'foo', 2, 'unknown key'),
        ('seed = 1\n\nseed = 2\n', 'seed', 3, 'first set on line 1'),
        ('length_x 20 nm\n', None, 1, 'expected "key = value"'),
        ('# header\nseed =\n', 'seed', 2, 'missing value'),
        ('alpha = 0.01\nms = twelve kA/m\n', 'ms', 2, 'cannot read'),
    ],
)
def test_parse_errors(parser, text, key, line, message):
    with pytest.raises(ConfigParseException) as info:
        parser.parse(text, 'bad.conf')
    assert info.value.key == key
    assert info.value.line == line
    assert message in str(info.value)


def test_parse_unit_named_keys(parser):
    values = parser.parse(
        'ms = 600 kA/m\nr_p = 1e6\nt_pulse = 10*ms\nr_ap = 3*r_p\n'
    )
    assert values['ms'].value == pytest.approx(600e3)
    # ms is a millisecond here, not the saturation magnetization
    assert values['t_pulse'].value == pytest.approx(0.01)
    assert values['r_ap'].value == pytest.approx(3e6)
