import pytest
import simadc
from simadc.cli import build_parser, main, parse_overrides
from simadc.exceptions import ConfigException


def overrides_for(*argv):
    return parse_overrides(build_parser().parse_args(list(argv)))


def test_parse_overrides():
    assert overrides_for('report') == {}
    assert overrides_for(
        'adc', '--bits', '6', '--ts', '1 us', '--seed', '7'
    ) == {'bits': '6', 't_s': '1 us', 'seed': '7'}
    assert overrides_for(
        'trace', '--voltages=-0.8,0.8', '--duration', '5ns'
    ) == {'voltages': '-0.8,0.8', 'duration': '5ns'}
    assert overrides_for('psw', '--voltages', '0,1', '--trials', '10') == {
        'psw_voltages': '0,1',
        'n_trials': '10',
    }


def test_set_overrides():
    assert overrides_for(
        'report', '--set', 'length_x = 30 nm', '--set', 'alpha=0.02'
    ) == {'length_x': '30 nm', 'alpha': '0.02'}
    # Dedicated flags win over --set
    assert overrides_for('adc', '--set', 'bits=3', '--bits', '5') == {
        'bits': '5'
    }
    with pytest.raises(ConfigException):
        overrides_for('report', '--set', 'length_x')


def test_parser_rejects_unknown_kind(capsys):
    with pytest.raises(SystemExit) as info:
        build_parser().parse_args(['nothing'])
    assert info.value.code == 2
    assert 'invalid choice' in capsys.readouterr().err


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(['--version'])
    assert info.value.code == 0
    assert capsys.readouterr().out.strip() == simadc.__version__


def test_main_report(tmp_path, capsys):
    assert main(['report', '--out', str(tmp_path)]) == 0
    out = capsys.readouterr().out.split()
    assert out == ['derived.csv', 'device_report.csv']
    assert (tmp_path / 'manifest.json').exists()


@pytest.mark.parametrize(
    'argv',
    [
        ['report', '--set', 'nonsense'],
        ['report', '--set', 'no_such_key=1'],
        ['report', '--workers', '0'],
        ['report', '--seed', '-1'],
        ['adc', '--ts', '10.5 ns'],
        ['report', '--config', '/no/such/file.conf'],
    ],
)
def test_main_config_errors(tmp_path, argv):
    output_dir = tmp_path / 'out'
    assert main(argv + ['--out', str(output_dir)]) == 1
    assert not output_dir.exists()


def test_main_plots_without_artifacts(tmp_path):
    assert main(['plots', '--out', str(tmp_path)]) == 3
