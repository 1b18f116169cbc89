'''Command line of simadc.

Precedence of settings: command line flags, then the config file, then the
built-in defaults. Exit codes: 0 success, 1 config error, 2 simulation
error, 3 I/O error.
'''

import argparse
import sys
from typing import Dict, Optional, Sequence
import simadc
from simadc import logging
from simadc.constants import EXIT_CONFIG_ERROR
from simadc.exceptions import ConfigException
from simadc.experiments import KINDS, ExperimentSpec, run_experiment


__all__ = ['build_parser', 'parse_overrides', 'main']


logger = logging.getLogger(__name__)


EPILOG = '''\
Flags override keys of the config file, which override the defaults.
Values may carry units, e.g. --ts "1 us" or --set "length_x=20 nm".
--config also accepts the name of a bundled config (low_barrier,
high_barrier).
'''


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='simadc',
        description='Stochastic LLG simulator of a low barrier ME-MTJ and '
        'its counter based ADC.',
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('kind', choices=KINDS, help='experiment to run')
    parser.add_argument('--config', help='config file or bundled config name')
    parser.add_argument('--seed', type=int, help='master seed (default 42)')
    parser.add_argument(
        '--workers', type=int, default=1, help='worker processes (default 1)'
    )
    parser.add_argument(
        '--out', default='simadc_output', help='output directory'
    )
    parser.add_argument('--bits', help='ADC resolution in bits')
    parser.add_argument('--ts', help='sampling window')
    parser.add_argument('--duration', help='trace duration')
    parser.add_argument(
        '--voltages',
        help='comma separated input voltages (pulse voltages for psw)',
    )
    parser.add_argument('--trials', help='trials per pulse voltage (psw)')
    parser.add_argument(
        '--set',
        action='append',
        default=[],
        metavar='KEY=VALUE',
        help='override any config key, may be repeated',
    )
    parser.add_argument(
        '-v', '--verbose', action='store_true', help='debug logging'
    )
    parser.add_argument(
        '--version', action='version', version=simadc.__version__
    )
    return parser


def parse_overrides(args: argparse.Namespace) -> Dict[str, str]:
    '''Config overrides from the parsed flags, as unparsed strings.

    Raises:
        ConfigException: On a --set without '='.
    '''
    overrides: Dict[str, str] = {}
    for item in args.set:
        key, sep, value = item.partition('=')
        if not sep:
            raise ConfigException(
                '--set expects KEY=VALUE, got "{}"'.format(item),
                extra={'key': item},
            )
        overrides[key.strip()] = value.strip()

    voltages_key = 'psw_voltages' if args.kind == 'psw' else 'voltages'
    flags = (
        ('bits', args.bits),
        ('t_s', args.ts),
        ('duration', args.duration),
        (voltages_key, args.voltages),
        ('n_trials', args.trials),
    )
    for key, value in flags:
        if value is not None:
            overrides[key] = value
    if args.seed is not None:
        overrides['seed'] = str(args.seed)
    return overrides


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.setLevel(logging.DEBUG)

    try:
        spec = ExperimentSpec(
            kind=args.kind,
            config_path=args.config,
            output_dir=args.out,
            master_seed=args.seed,
            workers=args.workers,
            overrides=parse_overrides(args),
        )
    except ConfigException as e:
        logger.error(str(e))
        return EXIT_CONFIG_ERROR

    result = run_experiment(spec)
    if result.ok:
        for name in result.files:
            print(name)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
