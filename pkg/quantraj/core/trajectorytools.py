# -*- coding: utf-8 -*-
"""This module implements the randomized quantum trajectory, the Markov
chain on the projective space driven by randomized Kraus decompositions
of a quantum channel.

One step of the chain draws a unitary `u` from the randomization, forms
the Kraus operators `v_j(u) = Σ_l u_jl v_l`, selects the outcome `J` with
probability `‖v_J(u)x‖²` and moves to the state `v_J(u)·x̂`.  For the
channel with the Kraus operators `|e2⟩⟨e1|` and `|e+⟩⟨e2|` and no
randomization at all, the chain moves deterministically from `ê1` to `ê2`
and from `ê2` to `ê+`:

>>> import numpy
>>> from quantraj.channels import counterexample
>>> from quantraj.core.linalgtools import Dirac, ProjectiveState
>>> from quantraj.core.trajectorytools import kernel_step
>>> channel = counterexample.channel()
>>> rng = numpy.random.default_rng(0)
>>> record = kernel_step(channel, Dirac.identity(2),
...                      ProjectiveState.basis(2, 0), rng)
>>> record
StepRecord(outcome=1, weight=1.0, state_after=ProjectiveState(0.0, 1.0))
>>> kernel_step(channel, Dirac.identity(2), record.state_after, rng)
StepRecord(outcome=2, weight=1.0, state_after=ProjectiveState(0.707107, 0.707107))
"""
# import...
# ...from standard library
from __future__ import division, print_function
import warnings
from concurrent import futures
# ...from site-packages
import numpy
from scipy import linalg
# ...from QuanTraj
from quantraj import pub
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.core import magictools
from quantraj.core import linalgtools
from quantraj.auxs import measuretools


def sample_haar_unitary(k, rng):
    """Return a k×k unitary matrix distributed according to the Haar
    measure.

    The unitary is the Q factor of the QR decomposition of a matrix of
    independent standard complex Gaussians, with the phases of the
    diagonal of R absorbed into its columns:

    >>> import numpy
    >>> from quantraj.core.trajectorytools import sample_haar_unitary
    >>> u = sample_haar_unitary(3, numpy.random.default_rng(0))
    >>> numpy.allclose(numpy.dot(u.conj().T, u), numpy.eye(3), atol=1e-12)
    True
    >>> abs(abs(sample_haar_unitary(1, numpy.random.default_rng(1))[0, 0])
    ...     - 1.) < 1e-12
    True
    """
    if k < 1:
        raise ValueError(
            'The size of a unitary matrix must be positive, but %d is '
            'given.' % k)
    gaussians = (rng.standard_normal((k, k)) +
                 1j*rng.standard_normal((k, k)))/numpy.sqrt(2.)
    q, r = linalg.qr(gaussians)
    diagonal = numpy.diagonal(r)
    return q*(diagonal/numpy.abs(diagonal))


class StepRecord(object):
    """Record of a single step of the randomized trajectory: the drawn
    unitary `u`, the 1-based `outcome` `J`, its probability `weight` given
    `u` and the resulting state."""

    def __init__(self, unitary, outcome, weight, state_after):
        self.unitary = unitary
        self.outcome = outcome
        self.weight = weight
        self.state_after = state_after

    def __repr__(self):
        return ('StepRecord(outcome=%d, weight=%s, state_after=%r)'
                % (self.outcome, objecttools.repr_(self.weight),
                   self.state_after))


def step_rep(channel, randomization, rep, rng):
    """Perform one step of the randomized trajectory starting from the
    canonical representative `rep` and return the unitary, the 0-based
    outcome index, its weight and the canonical representative of the new
    state.

    Function :func:`kernel_step` wraps this function for
    :class:`~quantraj.core.linalgtools.ProjectiveState` objects.
    """
    unitary = randomization.draw(channel.rank, rng)
    images = numpy.einsum('jl,lab,b->ja', unitary, channel.kraus, rep)
    weights = numpy.sum(numpy.abs(images)**2, axis=1)
    total = numpy.sum(weights)
    if abs(total-1.) > 1e-12+channel.deviation:
        raise ValueError(
            'The outcome weights of channel `%s` sum up to %s instead of one.'
            % (channel.name, objecttools.repr_(total, 15)))
    cumulated = numpy.cumsum(weights)
    idx = int(numpy.searchsorted(cumulated, rng.random()*total,
                                 side='right'))
    idx = min(idx, channel.rank-1)
    image = images[idx]
    norm = numpy.sqrt(weights[idx])
    if norm < linalgtools.KERNEL_HIT_THRESHOLD:
        raise objecttools.KernelHitError(
            'Outcome %d of channel `%s` was selected although the norm of '
            'the resulting vector is only %s.'
            % (idx+1, channel.name, objecttools.repr_(norm)))
    return (unitary, idx, weights[idx]/total,
            linalgtools.canonicalize_rows(image/norm)[0])


def kernel_step(channel, randomization, state, rng):
    """Perform one step of the randomized trajectory starting from the
    given :class:`~quantraj.core.linalgtools.ProjectiveState` and return
    a :class:`StepRecord`.

    Mismatching dimensions are reported as follows:

    >>> import numpy
    >>> from quantraj.channels import swap
    >>> from quantraj.core.linalgtools import Haar, ProjectiveState
    >>> from quantraj.core.trajectorytools import kernel_step
    >>> kernel_step(swap.channel(), Haar(), ProjectiveState.basis(3, 0),
    ...             numpy.random.default_rng(0))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The state has dimension 3, but channel `swap` acts on dimension 2.
    """
    if state.dim != channel.dim:
        raise objecttools.DimensionMismatchError(
            'The state has dimension %d, but channel `%s` acts on dimension '
            '%d.' % (state.dim, channel.name, channel.dim))
    unitary, idx, weight, rep = step_rep(
        channel, randomization, state.rep, rng)
    return StepRecord(unitary, idx+1, float(weight),
                      linalgtools.ProjectiveState.from_canonical(rep))


class ChainRun(object):
    """Result of :func:`run_chain`.

    The complete path (including the initial state at step 0) is stored as
    an array of canonical representatives together with the 1-based
    outcomes, their weights and (optionally) the drawn unitaries.  The
    retained states are those at the steps `burn_in + j·thinning` for
    `j = 1, ..., ⌊(n − burn_in)/thinning⌋`.
    """

    def __init__(self, channel, randomization, seed, path, outcomes,
                 weights, unitaries, burn_in, thinning):
        self.channel = channel
        self.randomization = randomization
        self.seed = seed
        self.path = path
        self.outcomes = outcomes
        self.weights = weights
        self.unitaries = unitaries
        self.burn_in = burn_in
        self.thinning = thinning

    @property
    def nmb_steps(self):
        """Number of performed steps."""
        return len(self.outcomes)

    @property
    def retained_steps(self):
        """Indices of the retained steps."""
        nmb = max((self.nmb_steps-self.burn_in)//self.thinning, 0)
        return self.burn_in+self.thinning*numpy.arange(1, nmb+1)

    @property
    def retained(self):
        """Canonical representatives of the retained states (as rows)."""
        return self.path[self.retained_steps]

    @property
    def states(self):
        """All states of the path as
        :class:`~quantraj.core.linalgtools.ProjectiveState` objects."""
        return [linalgtools.ProjectiveState.from_canonical(rep)
                for rep in self.path]

    @property
    def records(self):
        """All steps as :class:`StepRecord` objects."""
        return [StepRecord(None if self.unitaries is None
                           else self.unitaries[idx],
                           int(self.outcomes[idx]), float(self.weights[idx]),
                           linalgtools.ProjectiveState.from_canonical(
                               self.path[idx+1]))
                for idx in range(self.nmb_steps)]

    def measure(self):
        """Return the retained states as an equally weighted
        :class:`~quantraj.auxs.measuretools.EmpiricalMeasure`."""
        return measuretools.EmpiricalMeasure(self.retained, canonical=True)

    def __repr__(self):
        return ('ChainRun(channel=%r, steps=%d, retained=%d, seed=%r)'
                % (self.channel.name, self.nmb_steps,
                   len(self.retained_steps), self.seed))


def _prepare_x0(channel, x0):
    if not isinstance(x0, linalgtools.ProjectiveState):
        x0 = linalgtools.ProjectiveState(x0)
    if x0.dim != channel.dim:
        raise objecttools.DimensionMismatchError(
            'The initial state has dimension %d, but channel `%s` acts on '
            'dimension %d.' % (x0.dim, channel.name, channel.dim))
    return x0


def _run_chain(channel, randomization, x0, nmb, burn_in, thinning, rng,
               seed, record_unitaries, showprogress):
    if nmb < 1:
        raise ValueError(
            'The number of steps must be positive, but %d is given.' % nmb)
    if thinning < 1:
        raise ValueError(
            'The thinning interval must be positive, but %d is given.'
            % thinning)
    if burn_in < 0:
        raise ValueError(
            'The burn-in period must not be negative, but %d is given.'
            % burn_in)
    x0 = _prepare_x0(channel, x0)
    path = numpy.empty((nmb+1, channel.dim), dtype=complex)
    path[0] = x0.rep
    outcomes = numpy.empty(nmb, dtype=int)
    weights = numpy.empty(nmb, dtype=float)
    unitaries = None
    if record_unitaries:
        unitaries = numpy.empty((nmb, channel.rank, channel.rank),
                                dtype=complex)
    steps = range(nmb)
    if showprogress:
        steps = magictools.progressbar(steps)
    for idx in steps:
        unitary, outcome, weight, path[idx+1] = step_rep(
            channel, randomization, path[idx], rng)
        outcomes[idx] = outcome+1
        weights[idx] = weight
        if record_unitaries:
            unitaries[idx] = unitary
    run = ChainRun(channel, randomization, seed, path, outcomes, weights,
                   unitaries, burn_in, thinning)
    if not len(run.retained_steps):
        warnings.warn(
            'The trajectory of channel `%s` has %d steps and a burn-in '
            'period of %d steps, so that no state is retained.'
            % (channel.name, nmb, burn_in), objecttools.QuanTrajWarning)
    return run


@magictools.printprogress
def run_chain(channel, randomization, x0, nmb, seed, burn_in=1000,
              thinning=1, record_unitaries=True):
    """Run a randomized trajectory of `nmb` steps starting from `x0` and
    return a :class:`ChainRun`.

    The run is fully determined by the given seed.  A unitary channel
    moves deterministically along the orbit of the initial state:

    >>> import numpy
    >>> from quantraj.core.linalgtools import KrausChannel, Dirac
    >>> from quantraj.core.trajectorytools import run_chain
    >>> swap = numpy.array([[0., 1.], [1., 0.]])
    >>> run = run_chain(KrausChannel([swap], name='flip'), Dirac.identity(1),
    ...                 [1., 0.], 5, seed=1, burn_in=1, thinning=2)
    >>> run
    ChainRun(channel='flip', steps=5, retained=2, seed=1)
    >>> run.retained_steps
    array([3, 5])
    >>> run.retained.real
    array([[0., 1.],
           [0., 1.]])
    >>> run.outcomes
    array([1, 1, 1, 1, 1])
    """
    try:
        return _run_chain(channel, randomization, x0, nmb, burn_in,
                          thinning, numpy.random.default_rng(seed), seed,
                          record_unitaries, showprogress=True)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to run a trajectory of channel `%s`'
            % channel.name)


@magictools.printprogress
def run_chains(channel, randomization, x0, nmb, seed, burn_in=1000,
               thinning=1, nchains=1, record_unitaries=False):
    """Run `nchains` independent trajectories and return the list of their
    :class:`ChainRun` objects.

    Chain `i` uses the `i`-th child of `numpy.random.SeedSequence(seed)`,
    so that the results do not depend on the number of worker threads
    defined by option `threads`.
    """
    children = numpy.random.SeedSequence(seed).spawn(nchains)

    def run(idx):
        return _run_chain(channel, randomization, x0, nmb, burn_in,
                          thinning, numpy.random.default_rng(children[idx]),
                          (seed, idx), record_unitaries, showprogress=False)

    try:
        if pub.options.threads == 1:
            return [run(idx) for idx in magictools.progressbar(
                range(nchains))]
        with futures.ThreadPoolExecutor(pub.options.threads) as executor:
            return list(executor.map(run, range(nchains)))
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to run %d trajectories of channel `%s`'
            % (nchains, channel.name))


def one_step_samples(channel, randomization, x0, nmb, rng):
    """Return the :class:`~quantraj.auxs.measuretools.EmpiricalMeasure` of
    `nmb` independent single steps starting from `x0`.

    The mean density matrix of the samples estimates `Φ*(|x⟩⟨x|)`, no
    matter which randomization is used:

    >>> import numpy
    >>> from quantraj.channels import depolarizing
    >>> from quantraj.core.linalgtools import Haar
    >>> from quantraj.core.trajectorytools import one_step_samples
    >>> from quantraj.core.objecttools import round_
    >>> samples = one_step_samples(depolarizing.channel(2, .5), Haar(),
    ...                            [1., 0.], 20000,
    ...                            numpy.random.default_rng(0))
    >>> diff = samples.mean_density_matrix() - numpy.diag([.75, .25])
    >>> float(numpy.linalg.norm(diff)) < 0.02
    True
    """
    x0 = _prepare_x0(channel, x0)
    points = numpy.array(
        [step_rep(channel, randomization, x0.rep, rng)[-1]
         for dummy in range(nmb)])
    return measuretools.EmpiricalMeasure(points, canonical=True)


class CesaroEstimate(object):
    """Empirical measures of the residue classes of the retained steps
    modulo the period `m` together with their average, the Cesàro
    estimate of the invariant measure."""

    def __init__(self, classes, period):
        self.classes = classes
        self.period = period
        self.average = measuretools.EmpiricalMeasure.mixture(
            [measure for measure in classes if measure is not None])

    @property
    def measures(self):
        """The measures of all (nonempty) residue classes followed by
        their average."""
        return [measure for measure in self.classes
                if measure is not None] + [self.average]

    def __repr__(self):
        return ('CesaroEstimate(period=%d, sizes=%s)'
                % (self.period,
                   [0 if measure is None else measure.size
                    for measure in self.classes]))


def cesaro_subsample(runs, period):
    """Partition the retained states of the given run(s) by their step
    index modulo `period` and return the :class:`CesaroEstimate`.

    For the period-2 channel swapping `e1` and `e2`, the two residue
    classes are concentrated on `ê1` and `ê2` and their average puts mass
    one half on each:

    >>> from quantraj.channels import swap
    >>> from quantraj.core.linalgtools import Dirac
    >>> from quantraj.core.trajectorytools import run_chain, cesaro_subsample
    >>> run = run_chain(swap.channel(), Dirac.identity(2), [1., 0.], 10,
    ...                 seed=0, burn_in=0)
    >>> estimate = cesaro_subsample(run, 2)
    >>> estimate
    CesaroEstimate(period=2, sizes=[5, 5])
    >>> estimate.classes[0].points.real
    array([[1., 0.],
           [1., 0.],
           [1., 0.],
           [1., 0.],
           [1., 0.]])
    >>> estimate.average.mean_density_matrix().real
    array([[0.5, 0. ],
           [0. , 0.5]])
    """
    if period < 1:
        raise ValueError(
            'The period must be positive, but %d is given.' % period)
    if isinstance(runs, ChainRun):
        runs = [runs]
    steps = [run.retained_steps for run in runs]
    reps = [run.retained for run in runs]
    classes = []
    for residue in range(period):
        points = [rep[step % period == residue]
                  for (step, rep) in zip(steps, reps)]
        points = numpy.concatenate(points)
        if len(points):
            classes.append(measuretools.EmpiricalMeasure(points,
                                                         canonical=True))
        else:
            classes.append(None)
    if all(measure is None for measure in classes):
        raise ValueError('The given runs do not retain any state.')
    return CesaroEstimate(classes, period)


autodoctools.autodoc_module()
