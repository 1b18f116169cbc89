import os
import pytest
from simadc.exceptions import ArtifactException
from simadc.experiments import emit_plot_scripts
from simadc.experiments.plots import PLOT_SCRIPTS


def touch(directory, *names):
    for name in names:
        (directory / name).write_text('x\n')


def test_scripts_for_present_csvs(tmp_path):
    touch(tmp_path, 'trace_v+0.800.csv', 'trace_v-0.800.csv', 'dwells.csv')
    paths = emit_plot_scripts(str(tmp_path))
    names = [os.path.basename(path) for path in paths]
    assert names == ['plot_traces.py', 'plot_dwells.py']

    with open(paths[0], 'r', encoding='utf-8') as f:
        source = f.read()
    assert "names = ['trace_v+0.800.csv', 'trace_v-0.800.csv']" in source
    assert "'plot_traces.png'" in source
    assert '$' not in source
    compile(source, paths[0], 'exec')


def test_every_script_compiles(tmp_path):
    touch(
        tmp_path,
        'transfer_curve.csv',
        'switching_curve.csv',
        'sweep.csv',
        'trace_v+0.000.csv',
        'state_v+0.000.csv',
        'dwells.csv',
        'arrhenius.csv',
    )
    paths = emit_plot_scripts(str(tmp_path))
    assert len(paths) == len(PLOT_SCRIPTS)
    for path in paths:
        with open(path, 'r', encoding='utf-8') as f:
            compile(f.read(), path, 'exec')


def test_nothing_to_plot(tmp_path):
    touch(tmp_path, 'derived.csv')
    with pytest.raises(ArtifactException) as info:
        emit_plot_scripts(str(tmp_path))
    assert info.value.exit_code == 3
    assert 'transfer_curve.csv' in info.value.extra['expected']
    assert 'trace_v*.csv' in str(info.value)
