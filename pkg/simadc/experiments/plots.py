'''Plot scripts for the CSV artifacts of a run.

Each script is standalone, reads its CSVs relative to its own location and
needs numpy and matplotlib only when it is executed; simadc itself never
imports a plotting backend.
'''

import glob
import os
from string import Template
from typing import List, NamedTuple, Tuple
from simadc import logging
from simadc.exceptions import ArtifactException


__all__ = ['PlotScript', 'PLOT_SCRIPTS', 'emit_plot_scripts']


logger = logging.getLogger(__name__)


HEADER = '''#!/usr/bin/env python3
"""$title, generated by simadc from $inputs."""

import os

import matplotlib.pyplot as plt
import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))


def load(name):
    return np.genfromtxt(
        os.path.join(HERE, name),
        delimiter=',',
        names=True,
        dtype=None,
        encoding='utf-8',
    )


'''

FOOTER = '''
fig.tight_layout()
fig.savefig(os.path.join(HERE, '$output'), dpi=150)
'''

TRANSFER_BODY = '''curve = load('transfer_curve.csv')
fig, ax = plt.subplots(figsize=(5, 4))
ax.plot(curve['v_in'], curve['c_out'], 'o', label='C_out')
if os.path.exists(os.path.join(HERE, 'adc_metrics.csv')):
    metrics = load('adc_metrics.csv')
    fit = float(metrics['slope']) * curve['v_in'] + float(metrics['intercept'])
    ax.plot(
        curve['v_in'],
        fit,
        '-',
        label='fit, NRMSD {:.2f}%'.format(float(metrics['nrmsd_percent'])),
    )
ax.set_xlabel('Input voltage (V)')
ax.set_ylabel('Counter output')
ax.legend()
'''

SWITCHING_BODY = '''curve = load('switching_curve.csv')
fig, ax = plt.subplots(figsize=(5, 4))
p = curve['p_switch']
ax.errorbar(
    curve['v_pulse'],
    p,
    yerr=[p - curve['ci_lo'], curve['ci_hi'] - p],
    fmt='o-',
    capsize=3,
)
ax.set_xlabel('Pulse voltage (V)')
ax.set_ylabel('Switching probability')
ax.set_ylim(-0.05, 1.05)
'''

SWEEP_BODY = '''sweep = load('sweep.csv')
fig, ax = plt.subplots(figsize=(5, 4))
ax.errorbar(
    sweep['v_in'], sweep['mean_mx'], yerr=sweep['std_mx'], fmt='o', capsize=3,
    label='simulated',
)
ax.plot(sweep['v_in'], sweep['boltzmann_mx'], '-', label='Boltzmann')
ax.set_xlabel('Input voltage (V)')
ax.set_ylabel('<m_x>')
ax.legend()
'''

TRACES_BODY = '''names = $names
fig, axes = plt.subplots(
    len(names), 1, figsize=(7, 2 * len(names)), sharex=True
)
axes = np.atleast_1d(axes)
for ax, name in zip(axes, names):
    trace = load(name)
    ax.plot(trace['t_s'] * 1e9, trace['m_x'], lw=0.6)
    ax.set_ylim(-1.1, 1.1)
    ax.set_ylabel('m_x')
    ax.set_title(name, fontsize=8)
axes[-1].set_xlabel('Time (ns)')
'''

STATES_BODY = '''names = $names
fig, axes = plt.subplots(
    len(names), 1, figsize=(7, 2 * len(names)), sharex=True
)
axes = np.atleast_1d(axes)
for ax, name in zip(axes, names):
    state = load(name)
    ax.plot(state['t_s'] * 1e9, state['v_sense'], lw=0.6, label='V_sense')
    ax.step(state['t_s'] * 1e9, state['state'], where='post', lw=0.6,
            label='STATE')
    ax.set_title(name, fontsize=8)
    ax.legend(loc='upper right', fontsize=7)
axes[-1].set_xlabel('Time (ns)')
'''

DWELLS_BODY = '''dwells = load('dwells.csv')
fig, ax = plt.subplots(figsize=(5, 4))
for state in ('up', 'down'):
    values = np.atleast_1d(dwells['dwell_s'][dwells['state'] == state])
    if len(values):
        ax.hist(values * 1e9, bins=30, alpha=0.6, label=state)
ax.set_xlabel('Dwell time (ns)')
ax.set_ylabel('Count')
ax.legend()
'''

ARRHENIUS_BODY = '''points = load('arrhenius.csv')
fig, ax = plt.subplots(figsize=(5, 4))
x_kt = points['e_b_over_kt']
ax.semilogy(x_kt, points['mean_dwell_s'], 'o', label='mean dwell')
if os.path.exists(os.path.join(HERE, 'arrhenius_fit.csv')):
    fit = load('arrhenius_fit.csv')
    x = np.linspace(x_kt.min(), x_kt.max(), 50)
    ax.semilogy(
        x,
        float(fit['t_l0_fit_s']) * np.exp(float(fit['slope_fit']) * x),
        '-',
        label='fit',
    )
ax.set_xlabel('E_B / kT')
ax.set_ylabel('Mean dwell (s)')
ax.legend()
'''


class PlotScript(NamedTuple):
    name: str
    title: str
    pattern: str
    body: str


PLOT_SCRIPTS: Tuple[PlotScript, ...] = (
    PlotScript(
        'plot_transfer_curve.py',
        'ADC transfer curve',
        'transfer_curve.csv',
        TRANSFER_BODY,
    ),
    PlotScript(
        'plot_switching_curve.py',
        'Switching probability',
        'switching_curve.csv',
        SWITCHING_BODY,
    ),
    PlotScript('plot_sweep.py', 'Mean m_x sweep', 'sweep.csv', SWEEP_BODY),
    PlotScript(
        'plot_traces.py', 'Magnetization traces', 'trace_v*.csv', TRACES_BODY
    ),
    PlotScript(
        'plot_states.py', 'Sense node and STATE', 'state_v*.csv', STATES_BODY
    ),
    PlotScript(
        'plot_dwells.py', 'Dwell time histogram', 'dwells.csv', DWELLS_BODY
    ),
    PlotScript(
        'plot_arrhenius.py', 'Arrhenius plot', 'arrhenius.csv', ARRHENIUS_BODY
    ),
)


def _render(script: PlotScript, inputs: List[str]) -> str:
    output = os.path.splitext(script.name)[0] + '.png'
    header = Template(HEADER).substitute(
        title=script.title, inputs=', '.join(inputs)
    )
    body = Template(script.body).safe_substitute(names=repr(inputs))
    return header + body + Template(FOOTER).substitute(output=output)


def emit_plot_scripts(output_dir: str) -> List[str]:
    '''Writes one plot script per figure whose CSVs are present in
    output_dir and returns their paths.

    Raises:
        ArtifactException: If none of the expected CSVs is there, listing
            what was looked for.
    '''
    written: List[str] = []
    for script in PLOT_SCRIPTS:
        inputs = sorted(
            os.path.basename(path)
            for path in glob.glob(os.path.join(output_dir, script.pattern))
        )
        if not inputs:
            continue
        path = os.path.join(output_dir, script.name)
        try:
            with open(path, 'w', encoding='utf-8') as f:
                f.write(_render(script, inputs))
        except OSError as e:
            raise ArtifactException(
                'Cannot write {}: {}'.format(path, e), extra={'path': path}
            ) from e
        logger.info('Wrote plot script {}'.format(path))
        written.append(path)

    if not written:
        expected = [script.pattern for script in PLOT_SCRIPTS]
        raise ArtifactException(
            'No artifacts to plot in {}, expected any of: {}'.format(
                output_dir, ', '.join(expected)
            ),
            extra={'path': output_dir, 'expected': expected},
        )
    return written
