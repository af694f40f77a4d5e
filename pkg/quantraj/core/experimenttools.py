# -*- coding: utf-8 -*-
"""This module implements the named experiments of the `examples`
subcommand.  Each experiment reproduces a known property of one of the
bundled channels end-to-end and returns a JSON-ready verdict, which
records the seed, all sizes and every single check:

>>> from quantraj.core import experimenttools
>>> sorted(experimenttools.EXPERIMENTS)   # doctest: +NORMALIZE_WHITESPACE
['classifiers', 'counterexample-6.1', 'depolarizing', 'dim2-density',
 'example1-3d', 'example2-3d', 'gap-sampler', 'kernel-gap',
 'projection-channel', 'reshuffle']
>>> verdict = experimenttools.run('classifiers', seed=0)
>>> verdict['verdict']
'pass'

Each experiment has a full and a quick configuration (option `quick`),
the latter using reduced sample sizes with the same verdict logic.
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import magictools
from quantraj.core import objecttools
from quantraj.core import linalgtools
from quantraj.core import trajectorytools
from quantraj.auxs import analysistools
from quantraj.auxs import densitytools
from quantraj.auxs import exacttools
from quantraj.auxs import gaptools
from quantraj.auxs import measuretools
from quantraj.auxs import statstools
from quantraj import channels

EXPERIMENTS = {}
"""All available experiments, accessible by name."""


class Check(object):
    """Single named check of an experiment with its outcome and the values
    it is based on.

    >>> from quantraj.core.experimenttools import Check
    >>> Check('mass', 0.51 >= 0.49, mass=0.51)
    Check(name='mass', passed=True)
    """

    def __init__(self, name, passed, **values):
        self.name = name
        self.passed = bool(passed)
        self.values = values

    def to_dict(self):
        """Return the JSON-ready version of the check."""
        dict_ = {'name': self.name, 'passed': self.passed}
        dict_.update(self.values)
        return dict_

    def __repr__(self):
        return 'Check(name=%r, passed=%s)' % (self.name, self.passed)


class Experiment(object):
    """Named experiment wrapping a function that takes a dictionary of
    sizes and a :class:`numpy.random.SeedSequence` and returns a list of
    :class:`Check` objects."""

    def __init__(self, name, function, full, quick):
        self.name = name
        self.function = function
        self.full = full
        self.quick = quick

    @property
    def description(self):
        """First paragraph of the docstring of the experiment function."""
        return autodoctools.description(self.function)

    def sizes(self, quick=False):
        """Return the sizes of the full or of the quick configuration."""
        return dict(self.quick if quick else self.full)

    def __call__(self, seed, quick=False):
        sizes = self.sizes(quick)
        checks = self.function(sizes, numpy.random.SeedSequence(seed))
        return {'experiment': self.name,
                'verdict': 'pass' if all(check.passed for check in checks)
                           else 'fail',
                'seed': seed,
                'quick': quick,
                'config': sizes,
                'checks': [check.to_dict() for check in checks]}

    def __repr__(self):
        return 'Experiment(%r)' % self.name


def experiment(name, **full):
    """Register the decorated function as an :class:`Experiment`.

    Keyword arguments define the full configuration; keyword `quick`
    (a dictionary) overrides some of its values for the quick one.
    """
    quick = dict(full)
    quick.update(full.pop('quick', {}))
    quick.pop('quick', None)

    def register(function):
        EXPERIMENTS[name] = Experiment(name, function, full, quick)
        return function
    return register


@magictools.printprogress
def run(name, seed=0, quick=False):
    """Run the experiment of the given name and return its verdict.

    >>> from quantraj.core.experimenttools import run
    >>> run('bell')
    Traceback (most recent call last):
    ...
    KeyError: 'No experiment named `bell` is available.  Available \
experiments are: classifiers, counterexample-6.1, depolarizing, \
dim2-density, example1-3d, example2-3d, gap-sampler, kernel-gap, \
projection-channel, reshuffle.'
    """
    if name not in EXPERIMENTS:
        raise KeyError(
            'No experiment named `%s` is available.  Available experiments '
            'are: %s.' % (name, ', '.join(sorted(EXPERIMENTS))))
    try:
        return EXPERIMENTS[name](seed, quick)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to run experiment `%s`' % name)


def _rngs(seedsequence, nmb):
    return [numpy.random.default_rng(child)
            for child in seedsequence.spawn(nmb)]


def _same_law_band(draw, size, rng, replicas, max_points):
    """Null band of the Wasserstein distance of two independent samples of
    the given size drawn by `draw(size, rng)`."""
    def statistic(idx):
        return measuretools.wasserstein1(
            draw(size, rng), draw(size, rng), max_points=max_points, rng=rng)
    return statstools.null_band(statistic, replicas=replicas)


@experiment('counterexample-6.1', steps=100000, burn_in=1000, radius=1e-6,
            threshold=.49, quick={'steps': 20000})
def _counterexample(sizes, seedsequence):
    """Invariant measure of a primitive channel with atoms at `ê2` and
    `ê+` under half Haar, half trivial randomization."""
    channel = channels.counterexample.channel()
    chain = trajectorytools.run_chain(
        channel, channels.counterexample.randomization(), [1., 0.],
        sizes['steps'], seed=seedsequence, burn_in=sizes['burn_in'],
        record_unitaries=False)
    masses = measuretools.atom_masses(
        chain.measure(), channels.counterexample.atoms(), sizes['radius'])
    return [Check('primitive', analysistools.is_primitive(channel)),
            Check('atom mass', sum(masses) >= sizes['threshold'],
                  masses=masses, total=sum(masses))]


def _uniform_checks(channel, sizes, rngs, seedsequence):
    dim = channel.dim
    seed = int(seedsequence.generate_state(1)[0])
    estimate = measuretools.estimate_invariant(
        channel, linalgtools.Haar(), linalgtools.ProjectiveState.basis(
            dim, 0), sizes['steps']+sizes['burn_in'], seed=seed,
        burn_in=sizes['burn_in'], period=1)
    measure = estimate.average
    distance = measuretools.wasserstein1(
        measure, measuretools.uniform_sample(dim, measure.size, rngs[0]),
        max_points=sizes['max_points'], rng=rngs[0])
    band = _same_law_band(
        lambda size, rng: measuretools.uniform_sample(dim, size, rng),
        measure.size, rngs[1], sizes['replicas'], sizes['max_points'])
    checks = [Check('uniform invariant measure (d=%d)' % dim,
                    band.contains(distance), distance=distance,
                    band=band.to_dict(), below=band.below(distance))]
    symband = measuretools.split_null_band(
        measure, rngs[2], replicas=sizes['replicas'],
        max_points=sizes['max_points'])
    for idx in range(sizes['symmetries']):
        unitary = trajectorytools.sample_haar_unitary(dim, rngs[3])
        residual = measuretools.symmetry_residual(
            measure, unitary, max_points=sizes['max_points'], rng=rngs[3])
        checks.append(Check(
            'symmetry %d (d=%d)' % (idx+1, dim), symband.contains(residual),
            residual=residual, band=symband.to_dict(),
            covariant=analysistools.is_covariant(channel, unitary)))
    return checks


@experiment('depolarizing', steps=5000, burn_in=1000, replicas=20,
            max_points=2000, symmetries=3,
            quick={'steps': 1000, 'burn_in': 200, 'replicas': 10})
def _depolarizing(sizes, seedsequence):
    """The invariant measure of the depolarizing channel under Haar
    randomization is uniform and invariant under all unitaries."""
    checks = []
    for (dim, child) in zip((2, 3), seedsequence.spawn(2)):
        chainseed, rngseed = child.spawn(2)
        checks.extend(_uniform_checks(
            channels.depolarizing.channel(dim, .5), sizes,
            _rngs(rngseed, 4), chainseed))
    return checks


@experiment('projection-channel', samples=10000, replicas=20,
            max_points=2000, frobenius=.02,
            quick={'samples': 2000, 'replicas': 10})
def _projection_channel(sizes, seedsequence):
    """Single kernel steps of the projection channel are distributed
    according to the GAP measure of its reference density matrix, no
    matter where they start."""
    channel = channels.projection.channel()
    rho0 = channels.projection.density()
    sampler = gaptools.GapSampler(rho0)
    rngs = _rngs(seedsequence, 5)
    band = _same_law_band(
        lambda size, rng: gaptools.gap_sample(sampler, size, rng),
        sizes['samples'], rngs[0], sizes['replicas'], sizes['max_points'])
    checks = []
    starts = [[1., 0.], [0., 1.], [1., 1.]]
    for (start, rng) in zip(starts, rngs[1:]):
        samples = trajectorytools.one_step_samples(
            channel, linalgtools.Haar(), start, sizes['samples'], rng)
        reference = gaptools.gap_sample(sampler, sizes['samples'], rng)
        distance = measuretools.wasserstein1(
            samples, reference, max_points=sizes['max_points'], rng=rng)
        deviation = float(numpy.linalg.norm(
            samples.mean_density_matrix()-rho0))
        state = objecttools.repr_values(start)
        checks.append(Check('GAP law from (%s)' % state,
                            band.contains(distance), distance=distance,
                            band=band.to_dict()))
        checks.append(Check('mean density matrix from (%s)' % state,
                            deviation <= sizes['frobenius'],
                            deviation=deviation))
    return checks


@experiment('kernel-gap', channels=5, samples=5000, replicas=20,
            max_points=2000, quick={'channels': 2, 'samples': 1000,
                                    'replicas': 10})
def _kernel_gap(sizes, seedsequence):
    """Single Haar kernel steps from `x̂` are distributed according to
    the GAP measure of `Φ*(|x⟩⟨x|)` for random two-dimensional channels."""
    checks = []
    for (idx, rng) in enumerate(_rngs(seedsequence, sizes['channels'])):
        channel = channels.random_channel(2, 2, rng)
        start = linalgtools.ProjectiveState(
            rng.standard_normal(2)+1j*rng.standard_normal(2))
        image = linalgtools.apply_schrodinger(channel, start.projector)
        sampler = gaptools.GapSampler(linalgtools.DensityMatrix(
            (image+image.conj().T)/2.))
        samples = trajectorytools.one_step_samples(
            channel, linalgtools.Haar(), start, sizes['samples'], rng)
        distance = measuretools.wasserstein1(
            samples, gaptools.gap_sample(sampler, sizes['samples'], rng),
            max_points=sizes['max_points'], rng=rng)
        band = _same_law_band(
            lambda size, rng_: gaptools.gap_sample(sampler, size, rng_),
            sizes['samples'], rng, sizes['replicas'], sizes['max_points'])
        checks.append(Check('random channel %d' % (idx+1),
                            band.contains(distance), distance=distance,
                            band=band.to_dict()))
    return checks


def _gap_checks(name, rho, sizes, rng):
    sampler = gaptools.GapSampler(rho)
    samples = gaptools.gap_sample(sampler, sizes['samples'], rng)
    projectors = numpy.einsum('na,nb->nab', samples.points,
                              samples.points.conj())
    error = statstools.standard_error(projectors)
    deviation = numpy.abs(numpy.mean(projectors, axis=0)-rho)
    inverse = 1./gaptools.gap_density_rows(sampler, samples.points)
    importance = float(numpy.mean(inverse))
    importance_error = float(statstools.standard_error(inverse))
    return [Check('mean density matrix (%s)' % name,
                  numpy.all(deviation <= 3.*error+1e-15),
                  deviation=float(numpy.max(deviation))),
            Check('importance identity (%s)' % name,
                  statstools.within_sigma(importance, 1., importance_error),
                  mean=importance, error=importance_error)]


@experiment('gap-sampler', samples=20000, quick={'samples': 5000})
def _gap_sampler(sizes, seedsequence):
    """The GAP sampler reproduces its density matrix, its density
    integrates to one and it takes the value 8/3 at `ê1` for
    `diag(2/3, 1/3)`."""
    rngs = _rngs(seedsequence, 2)
    rho = numpy.diag([2./3., 1./3.])
    gaussians = (rngs[1].standard_normal((3, 3)) +
                 1j*rngs[1].standard_normal((3, 3)))
    random_rho = numpy.dot(gaussians, gaussians.conj().T)
    random_rho /= numpy.trace(random_rho).real
    value = gaptools.gap_density(gaptools.GapSampler(rho),
                                 linalgtools.ProjectiveState.basis(2, 0))
    return (_gap_checks('diag(2/3, 1/3)', rho, sizes, rngs[0]) +
            _gap_checks('random d=3', random_rho, sizes, rngs[1]) +
            [Check('density at e1', abs(value-8./3.) <= 1e-12, value=value)])


@experiment('dim2-density', n_theta=100, n_phi=200, steps=1000000,
            burn_in=1000, coarse_theta=10, coarse_phi=20,
            quick={'n_theta': 50, 'n_phi': 100, 'steps': 100000})
def _dim2_density(sizes, seedsequence):
    """The quadrature fixed point iteration reproduces the uniform
    density of the depolarizing channel, the GAP density of the projection
    channel and the histogram of a long trajectory of the perturbed
    depolarizing channel."""
    grid = densitytools.BlochGrid(sizes['n_theta'], sizes['n_phi'])
    residual = densitytools.kernel_residual(
        channels.depolarizing.channel(2, .5), grid, numpy.ones(grid.size))
    checks = [Check('uniform fixed point', residual <= 1e-3,
                    residual=residual)]
    density = densitytools.solve_density_fixed_point(
        channels.projection.channel(), sizes['n_theta'], sizes['n_phi'])
    exact = gaptools.gap_density_rows(
        gaptools.GapSampler(channels.projection.density()),
        density.grid.states)
    deviation = float(numpy.max(numpy.abs(density.values-exact)))
    checks.append(Check('GAP density', deviation <= 1e-2,
                        deviation=deviation, residual=density.residual))
    channel = channels.perturbed.channel()
    density = densitytools.solve_density_fixed_point(
        channel, sizes['n_theta'], sizes['n_phi'])
    chain = trajectorytools.run_chain(
        channel, linalgtools.Haar(), [1., 0.], sizes['steps'],
        seed=seedsequence, burn_in=sizes['burn_in'], record_unitaries=False)
    coarse = (sizes['coarse_theta'], sizes['coarse_phi'])
    distance = measuretools.wasserstein1(
        density.coarsen(*coarse).as_measure(),
        densitytools.histogram_measure(chain.measure(), *coarse))
    checks.append(Check('trajectory histogram', distance <= .03,
                        distance=distance, residual=density.residual))
    return checks


@experiment('example1-3d', p=channels.example1.POWER,
            point=list(channels.example1.POINT), restarts=200,
            quick={'restarts': 20})
def _example1(sizes, seedsequence):
    """The first three-dimensional channel is primitive and
    multiplicatively primitive (with an exact Jacobian certificate at a
    fixed point) but not positivity improving."""
    channel = channels.example1.channel()
    kraus_exact = channels.example1.kraus_exact()
    certificate = exacttools.certify_full_space(
        kraus_exact, sizes['p'], points=[sizes['point']])
    pencil = exacttools.pencil_determinant(kraus_exact)
    diagnostic = analysistools.positivity_improving_diagnostic(
        channel, restarts=sizes['restarts'],
        rng=numpy.random.default_rng(seedsequence))
    return [Check('Jacobian rank', certificate.rank == 9,
                  certificate=certificate.to_dict()),
            Check('pencil determinant',
                  str(pencil.as_expr()) == '2*a1**2*a2',
                  determinant=str(pencil.as_expr())),
            Check('primitive', analysistools.is_primitive(channel)),
            Check('not positivity improving',
                  diagnostic.verdict == 'counterexample',
                  diagnostic=diagnostic.to_dict())]


@experiment('example2-3d', p=channels.example2.POWER, states=100,
            trials=20, quick={'states': 10})
def _example2(sizes, seedsequence):
    """The second three-dimensional channel is irreducible and primitive
    and every tested exact state is certified multiplicatively primitive,
    although all linear combinations of its operators are singular."""
    rng = numpy.random.default_rng(seedsequence)
    channel = channels.example2.channel()
    kraus_exact = channels.example2.kraus_exact()
    states = [exacttools.random_exact_state(3, rng)
              for dummy in range(sizes['states'])]
    report = exacttools.sweep_states(kraus_exact, sizes['p'], states,
                                     trials=sizes['trials'], rng=rng)
    algebra_dim = analysistools.generated_algebra_dim(channel)
    return [Check('algebra dimension', algebra_dim == 9,
                  algebra_dim=algebra_dim),
            Check('irreducible', analysistools.is_irreducible(channel)[0]),
            Check('primitive', analysistools.is_primitive(channel)),
            Check('singular pencil',
                  exacttools.pencil_determinant(kraus_exact).is_zero),
            Check('state certificates', report.all_certified,
                  certified=report.nmb_certified, states=len(states))]


@experiment('classifiers')
def _classifiers(sizes, seedsequence):
    """Irreducibility, period and primitivity of the bundled channels."""
    algebra_dim = analysistools.generated_algebra_dim(
        linalgtools.KrausChannel(channels.example2.pre_similarity_kraus()))
    period = analysistools.period_and_decomposition(
        channels.swap.channel())[0]
    checks = [Check('algebra dimension', algebra_dim == 9,
                    algebra_dim=algebra_dim),
              Check('period of swap', period == 2, period=period),
              Check('swap not primitive',
                    not analysistools.is_primitive(channels.swap.channel()))]
    for name in ('counterexample', 'example1', 'example2'):
        checks.append(Check('%s primitive' % name,
                            analysistools.is_primitive(channels.get(name))))
    return checks


@experiment('reshuffle', channels=5, reshuffles=5, samples=100000,
            frobenius=.02, quick={'channels': 2, 'reshuffles': 2,
                                  'samples': 20000})
def _reshuffle(sizes, seedsequence):
    """The mean state after one step equals `Φ*(|x⟩⟨x|)` for every Kraus
    decomposition of a channel."""
    checks = []
    for (idx, rng) in enumerate(_rngs(seedsequence, sizes['channels'])):
        channel = channels.random_channel(2, 2, rng)
        start = linalgtools.ProjectiveState(
            rng.standard_normal(2)+1j*rng.standard_normal(2))
        target = linalgtools.apply_schrodinger(channel, start.projector)
        dims = [analysistools.generated_algebra_dim(channel)]
        deviations = []
        for dummy in range(sizes['reshuffles']):
            shuffled = linalgtools.reshuffle(
                channel, trajectorytools.sample_haar_unitary(2, rng))
            samples = trajectorytools.one_step_samples(
                shuffled, linalgtools.Dirac.identity(2), start,
                sizes['samples'], rng)
            deviations.append(float(numpy.linalg.norm(
                samples.mean_density_matrix()-target)))
            dims.append(analysistools.generated_algebra_dim(shuffled))
        checks.append(Check('random channel %d' % (idx+1),
                            max(deviations) <= sizes['frobenius'] and
                            len(set(dims)) == 1,
                            deviations=deviations, algebra_dims=dims))
    return checks


autodoctools.autodoc_module()
