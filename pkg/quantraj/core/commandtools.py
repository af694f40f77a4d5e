# -*- coding: utf-8 -*-
"""This module implements the command line interface of QuanTraj.

Function :func:`run` parses the given arguments, executes the selected
subcommand and returns the exit code.  Reports are written to standard
output as JSON objects (or as CSV tables, see option `--format`), while
progress information goes to standard error.  Every report embeds the
complete configuration of its command, including the seed:

>>> from quantraj.core.commandtools import run
>>> run(['--quiet', 'gap-density', 'projection',
...      '--state', '1,0'])   # doctest: +ELLIPSIS
{"command": "gap-density", "config": {"density": "projection", \
"state": "1,0"}, "density": 2.666666666666..., "dim": 2, "rank": 2}
0

Failures are reported as machine-readable JSON objects as well.  Usage
errors (here a missing seed) result in exit code 2, all other errors in
exit code 1:

>>> run(['--quiet', 'simulate', 'swap', '--x0', '1,0', '-n', '10'])
{"error": "UsageError", "message": "the following arguments are required: \
--seed", "command": "simulate"}
2
>>> run(['--quiet', 'analyze', 'bell.json'])   # doctest: +ELLIPSIS
{"error": "FileNotFoundError", "message": "While trying to read the JSON \
file `bell.json`, the following error occured: ...", "command": "analyze"}
1
"""
# import...
# ...from standard library
from __future__ import division, print_function
import argparse
import json
import sys
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj import pub
from quantraj.core import autodoctools
from quantraj.core import filetools
from quantraj.core import linalgtools
from quantraj.core import magictools
from quantraj.core import objecttools
from quantraj.core import trajectorytools
from quantraj.core import experimenttools
from quantraj.auxs import analysistools
from quantraj.auxs import densitytools
from quantraj.auxs import exacttools
from quantraj.auxs import gaptools
from quantraj.auxs import measuretools
from quantraj.auxs import statstools


COMMANDS = ('analyze', 'certify-mprim', 'simulate', 'estimate-invariant',
            'gap-sample', 'gap-density', 'compare', 'solve-density',
            'examples')
"""Names of all subcommands."""


class UsageError(Exception):
    """Invalid command line arguments."""


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising :class:`UsageError` instead of printing the
    usage message and exiting."""

    def error(self, message):
        raise UsageError(message)


def _randomization(source, text=None):
    if text is not None:
        return linalgtools.randomization_from_dict(json.loads(text))
    if source.randomization is not None:
        return source.randomization
    return linalgtools.Haar()


def _state_dict(rep):
    return linalgtools.matrix_to_pairs(numpy.asarray(rep))


def _analyze(args):
    source = filetools.load_channel(args.channel)
    randomization = None
    if (args.randomization is not None) or \
            (source.randomization is not None):
        randomization = _randomization(source, args.randomization)
    report = analysistools.analyze(source.channel, randomization,
                                   restarts=args.restarts)
    result = {'input': source.config, 'report': report.to_dict()}
    if randomization is not None:
        result['randomization'] = randomization.to_dict()
    return result, None


def _certify(args):
    source = filetools.load_channel(args.channel)
    if not source.exact:
        raise ValueError(
            'Channel `%s` provides no exact Kraus operators (key '
            '`kraus_exact`).' % source.channel.name)
    rng = numpy.random.default_rng(args.seed)
    kraus = source.kraus_exact
    point = None if args.point is None else filetools.parse_point(args.point)
    if args.state is not None:
        state = filetools.parse_exact_state(args.state)
        if point is None:
            point = exacttools.random_point(
                len(kraus)*args.p, rng)
        result = exacttools.certify_for_state(
            kraus, args.p, state, point, args.minor_start).to_dict()
    elif args.sweep is not None:
        states = [exacttools.random_exact_state(len(kraus[0]), rng)
                  for dummy in range(args.sweep)]
        result = exacttools.sweep_states(kraus, args.p, states,
                                         trials=args.trials,
                                         rng=rng).to_dict()
    else:
        result = exacttools.certify_full_space(
            kraus, args.p, points=None if point is None else [point],
            trials=args.trials, rng=rng).to_dict()
    return {'input': source.config, 'certificate': result}, None


def _simulate(args):
    source = filetools.load_channel(args.channel)
    randomization = _randomization(source, args.randomization)
    chain = trajectorytools.run_chain(
        source.channel, randomization, filetools.parse_state(args.x0),
        args.n, seed=args.seed, burn_in=args.burn_in, thinning=args.thin,
        record_unitaries=False)
    counts = numpy.bincount(chain.outcomes, minlength=source.channel.rank+1)
    result = {'input': source.config,
              'randomization': randomization.to_dict(),
              'steps': chain.nmb_steps,
              'retained': len(chain.retained_steps),
              'outcome_frequencies': list(counts[1:]/chain.nmb_steps),
              'final_state': _state_dict(chain.path[-1])}
    if len(chain.retained_steps):
        result['mean_density_matrix'] = linalgtools.matrix_to_pairs(
            chain.measure().mean_density_matrix())
    return result, filetools.run_table(chain)


def _estimate(args):
    source = filetools.load_channel(args.channel)
    channel = source.channel
    randomization = _randomization(source, args.randomization)
    period = args.period
    if period is None:
        period = measuretools.default_period(channel)
    runs = trajectorytools.run_chains(
        channel, randomization, filetools.parse_state(args.x0), args.n,
        seed=args.seed, burn_in=args.burn_in, thinning=args.thin,
        nchains=args.chains)
    estimate = trajectorytools.cesaro_subsample(runs, period)
    average = estimate.average
    result = {'input': source.config,
              'randomization': randomization.to_dict(),
              'period': period,
              'class_sizes': [0 if measure is None else measure.size
                              for measure in estimate.classes],
              'size': average.size,
              'mean_density_matrix': linalgtools.matrix_to_pairs(
                  average.mean_density_matrix())}
    populations = [average.expectation(numpy.diag(row))
                   for row in numpy.eye(channel.dim)]
    result['populations'] = [{'mean': mean, 'sd': sd}
                             for (mean, sd) in populations]
    lengths = set(len(run.retained_steps) for run in runs)
    if (len(runs) > 1) and (len(lengths) == 1) and (min(lengths) >= 4):
        result['split_rhat'] = [
            statstools.split_rhat(numpy.array(
                [numpy.abs(run.retained[:, idx])**2 for run in runs]))
            for idx in range(channel.dim)]
    return result, filetools.measure_table(average)


def _gap_sample(args):
    density = filetools.load_density(args.density)
    sampler = gaptools.GapSampler(density)
    samples = gaptools.gap_sample(sampler, args.n,
                                  numpy.random.default_rng(args.seed))
    result = {'input': linalgtools.matrix_to_pairs(density.mat),
              'size': samples.size,
              'mean_density_matrix': linalgtools.matrix_to_pairs(
                  samples.mean_density_matrix())}
    return result, filetools.measure_table(samples)


def _gap_density(args):
    density = filetools.load_density(args.density)
    sampler = gaptools.GapSampler(density)
    state = linalgtools.ProjectiveState(filetools.parse_state(args.state))
    return {'density': gaptools.gap_density(sampler, state),
            'dim': sampler.dim, 'rank': sampler.rank}, None


def _compare(args):
    first = filetools.load_measure(args.measure_a)
    second = filetools.load_measure(args.measure_b)
    rng = numpy.random.default_rng(args.seed)
    distance = measuretools.wasserstein1(first, second,
                                         max_points=args.max_points, rng=rng)
    total = first.size+second.size
    pooled = measuretools.EmpiricalMeasure.mixture(
        [first, second], [first.size/total, second.size/total])
    band = measuretools.split_null_band(pooled, rng, replicas=args.replicas,
                                        max_points=args.max_points)
    return {'sizes': [first.size, second.size], 'distance': distance,
            'band': band.to_dict(), 'within_band': band.contains(distance),
            'below_band': band.below(distance)}, None


def _solve_density(args):
    source = filetools.load_channel(args.channel)
    density = densitytools.solve_density_fixed_point(
        source.channel, n_theta=args.n_theta, n_phi=args.n_phi,
        iters=args.iters, tol=args.tol)
    return {'input': source.config,
            'residual': density.residual,
            'sweeps': len(density.history),
            'minimum': float(numpy.min(density.values)),
            'maximum': float(numpy.max(density.values))}, \
        filetools.density_table(density)


def _examples(args):
    verdict = experimenttools.run(args.name, seed=args.seed,
                                  quick=args.quick)
    if args.out is not None:
        filetools.write_json(verdict, args.out)
    return verdict, None


def _add_channel(parser):
    parser.add_argument('channel',
                        help='channel file or name of a bundled channel')
    parser.add_argument('--randomization', default=None,
                        help='randomization block (JSON) overriding the '
                             'one of the channel file')


def _add_chain(parser):
    parser.add_argument('--x0', required=True,
                        help='initial state as comma separated re:im values')
    parser.add_argument('-n', type=int, required=True,
                        help='number of steps per chain')
    parser.add_argument('--burn-in', type=int, default=1000)
    parser.add_argument('--thin', type=int, default=1)
    parser.add_argument('--seed', type=int, required=True)
    parser.add_argument('--out', default=None, help='CSV output file')


def make_parser():
    """Return the :class:`ArgumentParser` of all subcommands."""
    parser = ArgumentParser(
        prog='quantraj',
        description='Randomized quantum trajectories, their invariant '
                    'measures and ergodicity certificates.')
    parser.add_argument('--format', choices=('json', 'csv'), default='json')
    parser.add_argument('--quiet', action='store_true',
                        help='suppress progress information')
    subparsers = parser.add_subparsers(dest='command',
                                       parser_class=ArgumentParser)
    subparsers.required = True

    sub = subparsers.add_parser('analyze', help='ergodicity report')
    _add_channel(sub)
    sub.add_argument('--restarts', type=int, default=200)
    sub.set_defaults(function=_analyze)

    sub = subparsers.add_parser('certify-mprim',
                                help='exact multiplicative primitivity '
                                     'certificates')
    sub.add_argument('channel')
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--point', default=None,
                     help='comma separated exact coordinates')
    sub.add_argument('--state', default=None,
                     help='comma separated exact re:im values')
    sub.add_argument('--minor-start', type=int, default=0)
    sub.add_argument('--sweep', type=int, default=None,
                     help='number of random exact states to certify')
    sub.add_argument('--trials', type=int, default=20)
    sub.add_argument('--seed', type=int, default=0)
    sub.set_defaults(function=_certify)

    sub = subparsers.add_parser('simulate', help='single trajectory')
    _add_channel(sub)
    _add_chain(sub)
    sub.set_defaults(function=_simulate)

    sub = subparsers.add_parser('estimate-invariant',
                                help='Cesàro estimate of the invariant '
                                     'measure')
    _add_channel(sub)
    _add_chain(sub)
    sub.add_argument('--chains', type=int, default=1)
    sub.add_argument('--period', type=int, default=None)
    sub.set_defaults(function=_estimate)

    sub = subparsers.add_parser('gap-sample', help='GAP measure samples')
    sub.add_argument('density')
    sub.add_argument('-n', type=int, required=True)
    sub.add_argument('--seed', type=int, required=True)
    sub.add_argument('--out', default=None)
    sub.set_defaults(function=_gap_sample)

    sub = subparsers.add_parser('gap-density', help='GAP density value')
    sub.add_argument('density')
    sub.add_argument('--state', required=True)
    sub.set_defaults(function=_gap_density)

    sub = subparsers.add_parser('compare',
                                help='Wasserstein distance of two measures')
    sub.add_argument('measure_a')
    sub.add_argument('measure_b')
    sub.add_argument('--max-points', type=int, default=2000)
    sub.add_argument('--replicas', type=int, default=20)
    sub.add_argument('--seed', type=int, required=True)
    sub.set_defaults(function=_compare)

    sub = subparsers.add_parser('solve-density',
                                help='invariant density of a qubit channel')
    sub.add_argument('channel')
    sub.add_argument('--n-theta', type=int, default=100)
    sub.add_argument('--n-phi', type=int, default=200)
    sub.add_argument('--iters', type=int, default=500)
    sub.add_argument('--tol', type=float, default=1e-8)
    sub.add_argument('--out', default=None)
    sub.set_defaults(function=_solve_density)

    sub = subparsers.add_parser('examples', help='named experiments')
    sub.add_argument('name', choices=sorted(experimenttools.EXPERIMENTS))
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--out', default=None, help='JSON verdict file')
    sub.add_argument('--quick', action='store_true')
    sub.set_defaults(function=_examples)
    return parser


def _flatten(value, prefix=''):
    if isinstance(value, dict):
        rows = []
        for (key, item) in value.items():
            rows.extend(_flatten(item, '%s%s.' % (prefix, key)))
        return rows
    if isinstance(value, (list, tuple)):
        return [(prefix[:-1], filetools.dumps(value))]
    return [(prefix[:-1], value)]


def _emit(args, result, table):
    if (table is not None) and (getattr(args, 'out', None) is not None) and \
            (args.command != 'examples'):
        filetools.write_csv(table[0], table[1], args.out)
        result['output'] = args.out
    if args.format == 'json':
        filetools.write_json(result)
    elif (table is not None) and (result.get('output') is None):
        filetools.write_csv(table[0], table[1])
    else:
        filetools.write_csv(['key', 'value'], _flatten(result))


def _command(argv):
    for arg in argv:
        if arg in COMMANDS:
            return arg
    return None


def _message(exc):
    if isinstance(exc, KeyError) and exc.args:
        return str(exc.args[0])
    return str(exc)


def run(argv=None):
    """Execute the command defined by the given arguments (default:
    `sys.argv[1:]`) and return the exit code."""
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = make_parser().parse_args(argv)
    except UsageError as exc:
        filetools.write_json({'error': 'UsageError', 'message': str(exc),
                              'command': _command(argv)})
        return 2
    except SystemExit as exc:
        return exc.code or 0
    printprogress = pub.options.printprogress
    stream = magictools.progressstream(sys.stderr)
    if args.quiet:
        pub.options.printprogress = False
    try:
        result, table = args.function(args)
        config = {key: value for (key, value) in vars(args).items()
                  if key not in ('function', 'command', 'format', 'quiet')}
        report = {'command': args.command, 'config': config}
        report.update(result)
        _emit(args, report, table)
        return 0
    except BaseException as exc:
        filetools.write_json({'error': objecttools.classname(exc),
                              'message': _message(exc),
                              'command': args.command})
        return 1
    finally:
        pub.options.printprogress = printprogress
        magictools.progressstream(stream)


def main():
    """Entry point of the `quantraj` console script."""
    sys.exit(run())


autodoctools.autodoc_module()
