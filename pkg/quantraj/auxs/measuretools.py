# -*- coding: utf-8 -*-
"""This module implements empirical probability measures on the complex
projective space and the tools for comparing them: the Wasserstein-1
distance with respect to the metric `d(x̂,ŷ) = √(1−|⟨x,y⟩|²)`, the
invariance and symmetry residuals of estimated invariant measures and
the detection of atoms.

Two Dirac measures at orthogonal states have the largest possible
distance:

>>> from quantraj.auxs.measuretools import EmpiricalMeasure, wasserstein1
>>> wasserstein1(EmpiricalMeasure([[1., 0.]]), EmpiricalMeasure([[0., 1.]]))
1.0
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
from scipy import optimize
from scipy import sparse
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.core import linalgtools
from quantraj.core import magictools
from quantraj.auxs import validtools
from quantraj.auxs import statstools
# from quantraj.core import trajectorytools (actual import commands moved
# to different functions below to avoid circular dependencies)


class EmpiricalMeasure(object):
    """Weighted point cloud on the projective space.

    The points are stored as the rows of a complex array of canonical
    representatives, the weights are normalized to sum up to one:

    >>> from quantraj.auxs.measuretools import EmpiricalMeasure
    >>> measure = EmpiricalMeasure([[1j, 0.], [0., 2.]], weights=[1., 3.])
    >>> measure
    EmpiricalMeasure(size=2, dim=2)
    >>> measure.weights
    array([0.25, 0.75])
    >>> measure.mean_density_matrix().real
    array([[0.25, 0.  ],
           [0.  , 0.75]])

    Lists of :class:`~quantraj.core.linalgtools.ProjectiveState` objects are
    accepted as well:

    >>> from quantraj.core.linalgtools import ProjectiveState
    >>> EmpiricalMeasure([ProjectiveState.basis(3, 0)]*4).size
    4
    >>> EmpiricalMeasure([])
    Traceback (most recent call last):
    ...
    ValueError: While trying to define an empirical measure, the following error occured: An empirical measure requires at least one point.
    """

    def __init__(self, points, weights=None, canonical=False):
        try:
            points = list(points) if not isinstance(points, numpy.ndarray) \
                else points
            if not len(points):
                raise ValueError(
                    'An empirical measure requires at least one point.')
            if isinstance(points[0], linalgtools.ProjectiveState):
                points = numpy.array([state.rep for state in points])
                canonical = True
            points = numpy.array(points, dtype=complex, ndmin=2)
            if not canonical:
                points = linalgtools.canonicalize_rows(points)
            if weights is None:
                weights = numpy.full(len(points), 1./len(points))
            else:
                weights = numpy.array(weights, dtype=float)
                validtools.test_equal_shape(
                    weights=weights, points=points[:, 0])
                validtools.test_non_negative(weights=weights)
                total = numpy.sum(weights)
                if not total > 0.:
                    raise ValueError(
                        'The weights of an empirical measure must not all '
                        'be zero.')
                weights = weights/total
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to define an empirical measure')
        points.flags.writeable = False
        weights.flags.writeable = False
        self._points = points
        self._weights = weights

    @classmethod
    def mixture(cls, measures, coefficients=None):
        """Return the convex combination of the given measures (with equal
        coefficients by default).

        >>> from quantraj.auxs.measuretools import EmpiricalMeasure
        >>> mix = EmpiricalMeasure.mixture(
        ...     [EmpiricalMeasure([[1., 0.]]*3),
        ...      EmpiricalMeasure([[0., 1.]])])
        >>> mix.weights
        array([0.16666667, 0.16666667, 0.16666667, 0.5       ])
        """
        measures = list(measures)
        if coefficients is None:
            coefficients = numpy.full(len(measures), 1./len(measures))
        points = numpy.concatenate([measure.points for measure in measures])
        weights = numpy.concatenate(
            [coef*measure.weights
             for (coef, measure) in zip(coefficients, measures)])
        return cls(points, weights, canonical=True)

    @property
    def points(self):
        """Canonical representatives as the rows of a read-only array."""
        return self._points

    @property
    def weights(self):
        """Normalized weights (read-only)."""
        return self._weights

    @property
    def size(self):
        """Number of points."""
        return len(self._weights)

    @property
    def dim(self):
        """Dimension of the underlying Hilbert space."""
        return self._points.shape[1]

    @property
    def equal_weights(self):
        """True, if all points carry the same weight."""
        return bool(numpy.allclose(self._weights, 1./self.size,
                                   rtol=1e-9, atol=0.))

    @property
    def states(self):
        """The points as a list of
        :class:`~quantraj.core.linalgtools.ProjectiveState` objects."""
        return [linalgtools.ProjectiveState.from_canonical(rep)
                for rep in self._points]

    def mean_density_matrix(self):
        """Return `Σ w_i |x_i⟩⟨x_i|`."""
        return numpy.einsum('i,ia,ib->ab', self._weights,
                            self._points, self._points.conj())

    def expectation(self, observable):
        """Return the weighted mean and standard deviation of `⟨x|A|x⟩`
        for the given Hermitian observable `A`.

        >>> from quantraj.auxs.measuretools import EmpiricalMeasure
        >>> measure = EmpiricalMeasure([[1., 0.], [0., 1.]], [3., 1.])
        >>> measure.expectation(numpy.diag([1., 0.]))
        (0.75, 0.4330127018922193)
        >>> measure.expectation(numpy.eye(3))
        Traceback (most recent call last):
        ...
        quantraj.core.objecttools.DimensionMismatchError: While trying to \
evaluate the expectation of an observable, the following error occured: \
The observable has shape (3, 3), but the measure lives on a 2-dimensional \
space.
        """
        try:
            observable = numpy.asarray(observable, dtype=complex)
            if observable.shape != (self.dim, self.dim):
                raise objecttools.DimensionMismatchError(
                    'The observable has shape %s, but the measure lives on '
                    'a %d-dimensional space.' % (observable.shape, self.dim))
            validtools.test_hermitian(observable=observable)
            values = numpy.einsum('ia,ab,ib->i', self._points.conj(),
                                  observable, self._points).real
            mean = statstools.weighted_mean(values, self._weights)
            return mean, statstools.weighted_std(values, self._weights,
                                                 mean=mean)
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to evaluate the expectation of an observable')

    def resample(self, size, rng):
        """Return an equally weighted measure of the given size.

        Equally weighted measures are subsampled without replacement (if
        they are larger than the requested size), all other measures are
        resampled with replacement according to their weights.
        """
        if self.equal_weights:
            if size >= self.size:
                return self
            idxs = rng.choice(self.size, size=size, replace=False)
        else:
            idxs = rng.choice(self.size, size=size, replace=True,
                              p=self._weights)
        return EmpiricalMeasure(self._points[idxs], canonical=True)

    def __len__(self):
        return self.size

    def __repr__(self):
        return 'EmpiricalMeasure(size=%d, dim=%d)' % (self.size, self.dim)


def uniform_sample(dim, nmb, rng):
    """Return `nmb` independent samples of the uniform measure on the
    projective space of C^dim.

    >>> import numpy
    >>> from quantraj.auxs.measuretools import uniform_sample
    >>> uniform_sample(1, 3, numpy.random.default_rng(0)).points
    array([[1.+0.j],
           [1.+0.j],
           [1.+0.j]])
    """
    if nmb < 1:
        raise ValueError(
            'The number of samples must be positive, but %d is given.' % nmb)
    gaussians = (rng.standard_normal((nmb, dim)) +
                 1j*rng.standard_normal((nmb, dim)))
    return EmpiricalMeasure(linalgtools.canonicalize_rows(gaussians),
                            canonical=True)


def _assignment_cost(points_a, points_b):
    costs = linalgtools.fubini_distance_matrix(points_a, points_b)
    rows, cols = optimize.linear_sum_assignment(costs)
    return float(numpy.mean(costs[rows, cols]))


def _transport_cost(first, second):
    costs = linalgtools.fubini_distance_matrix(first.points, second.points)
    nmb_a, nmb_b = costs.shape
    rowsums = sparse.kron(sparse.identity(nmb_a), numpy.ones((1, nmb_b)))
    colsums = sparse.kron(numpy.ones((1, nmb_a)), sparse.identity(nmb_b))
    # one marginal constraint is redundant
    a_eq = sparse.vstack([rowsums, colsums.tocsr()[:-1]]).tocsr()
    b_eq = numpy.concatenate([first.weights, second.weights[:-1]])
    result = optimize.linprog(costs.ravel(), A_eq=a_eq, b_eq=b_eq,
                              bounds=(0., None), method='highs')
    if not result.success:
        raise RuntimeError(
            'The transportation problem could not be solved: %s'
            % result.message)
    return float(result.fun)


def wasserstein1(first, second, max_points=2000, max_variables=40000,
                 rng=None):
    """Return the Wasserstein-1 distance of two empirical measures.

    Equally weighted measures of equal size (at most `max_points`) are
    compared exactly by solving the assignment problem.  Measures with
    general weights are compared exactly by solving the transportation
    linear program as long as it has at most `max_variables` variables.
    Otherwise, both measures are first reduced to equally weighted
    samples of at most `max_points` points (see method
    :meth:`EmpiricalMeasure.resample`), using the given random number
    generator (default: a generator seeded with zero).

    The following example compares three states with a permutation of
    themselves:

    >>> from quantraj.auxs.measuretools import EmpiricalMeasure, wasserstein1
    >>> from quantraj.core.objecttools import round_
    >>> points = [[1., 0.], [0., 1.], [1., 1.]]
    >>> round_(wasserstein1(EmpiricalMeasure(points),
    ...                     EmpiricalMeasure(points[::-1])))
    0.0

    Half of the mass of `δ_ê1` has to be moved to `ê2`:

    >>> round_(wasserstein1(EmpiricalMeasure([[1., 0.]]),
    ...                     EmpiricalMeasure([[1., 0.], [0., 1.]])))
    0.5
    >>> wasserstein1(EmpiricalMeasure([[1., 0.]]),
    ...              EmpiricalMeasure([[1., 0., 0.]]))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The dimensions of the following objects are not equal: first (2), second (3).
    """
    if first.dim != second.dim:
        raise objecttools.DimensionMismatchError(
            'The dimensions of the following objects are not equal: '
            'first (%d), second (%d).' % (first.dim, second.dim))
    if (first.equal_weights and second.equal_weights and
            (first.size == second.size) and (first.size <= max_points)):
        return _assignment_cost(first.points, second.points)
    if first.size*second.size <= max_variables:
        return _transport_cost(first, second)
    rng = numpy.random.default_rng(0) if rng is None else rng
    size = max_points
    if first.equal_weights and second.equal_weights:
        size = min(max_points, first.size, second.size)
    return _assignment_cost(first.resample(size, rng).points,
                            second.resample(size, rng).points)


def split_null_band(measure, rng, replicas=20, max_points=2000):
    """Return the :class:`~quantraj.auxs.statstools.NullBand` of the
    Wasserstein-1 distance between two random halves of the given
    measure."""
    def statistic(idx):
        idxs = rng.permutation(measure.size)
        half = measure.size//2
        first = EmpiricalMeasure(measure.points[idxs[:half]],
                                 measure.weights[idxs[:half]],
                                 canonical=True)
        second = EmpiricalMeasure(measure.points[idxs[half:2*half]],
                                  measure.weights[idxs[half:2*half]],
                                  canonical=True)
        return wasserstein1(first, second, max_points=max_points, rng=rng)
    if measure.size < 4:
        raise ValueError(
            'Splitting a measure into halves requires at least four '
            'points, but %d are given.' % measure.size)
    return statstools.null_band(statistic, replicas=replicas)


def pushforward(measure, unitary):
    """Return the image of the given measure under `x̂ ↦ U·x̂`.

    >>> import numpy
    >>> from quantraj.auxs.measuretools import EmpiricalMeasure, pushforward
    >>> swap = numpy.array([[0., 1.], [1., 0.]])
    >>> pushforward(EmpiricalMeasure([[1., 0.]]), swap).points
    array([[0.+0.j, 1.+0.j]])
    """
    validtools.test_unitary(unitary=unitary)
    points = numpy.dot(measure.points, numpy.asarray(unitary).T)
    return EmpiricalMeasure(points, measure.weights)


def atom_masses(measure, centers, radius):
    """Return the total weight within distance `radius` of each center.

    >>> from quantraj.auxs.measuretools import EmpiricalMeasure, atom_masses
    >>> from quantraj.core.linalgtools import ProjectiveState
    >>> measure = EmpiricalMeasure([[0., 1.]]*3 + [[1., 1.]])
    >>> atom_masses(measure, [ProjectiveState([0., 1.]),
    ...                       ProjectiveState([1., 1.]),
    ...                       ProjectiveState([1., 0.])], radius=1e-6)
    [0.75, 0.25, 0.0]
    """
    if not radius > 0.:
        raise ValueError(
            'The radius must be positive, but %s is given.'
            % objecttools.repr_(radius))
    reps = numpy.array([state.rep for state in centers])
    distances = linalgtools.fubini_distance_matrix(reps, measure.points)
    return [float(numpy.sum(measure.weights[row <= radius]))
            for row in distances]


def kernel_pushforward(channel, randomization, measure, rng):
    """Move each point of the given measure by one independent step of the
    randomized trajectory and return the resulting measure (with the
    original weights)."""
    from quantraj.core import trajectorytools
    points = numpy.array(
        [trajectorytools.step_rep(channel, randomization, rep, rng)[-1]
         for rep in measure.points])
    return EmpiricalMeasure(points, measure.weights, canonical=True)


def invariance_residual(channel, randomization, measure, rng,
                        max_points=2000):
    """Return the Wasserstein-1 distance between the given measure and its
    image under one step of the randomized trajectory.

    Small values indicate approximate invariance; compare them with
    :func:`split_null_band`.  A Dirac measure at `ê1` is moved to `ê2` by
    the channel with the Kraus operators `|e2⟩⟨e1|` and `|e+⟩⟨e2|`:

    >>> import numpy
    >>> from quantraj.channels import counterexample
    >>> from quantraj.core.linalgtools import Dirac
    >>> from quantraj.auxs.measuretools import EmpiricalMeasure
    >>> from quantraj.auxs.measuretools import invariance_residual
    >>> invariance_residual(counterexample.channel(), Dirac.identity(2),
    ...                     EmpiricalMeasure([[1., 0.]]*10),
    ...                     numpy.random.default_rng(0))
    1.0
    """
    try:
        image = kernel_pushforward(channel, randomization, measure, rng)
        return wasserstein1(measure, image, max_points=max_points, rng=rng)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to compute the invariance residual of channel `%s`'
            % channel.name)


def symmetry_residual(measure, unitary, max_points=2000, rng=None):
    """Return the Wasserstein-1 distance between the given measure and its
    image under `x̂ ↦ U·x̂`.

    >>> import numpy
    >>> from quantraj.auxs.measuretools import EmpiricalMeasure
    >>> from quantraj.auxs.measuretools import symmetry_residual
    >>> swap = numpy.array([[0., 1.], [1., 0.]])
    >>> symmetry_residual(EmpiricalMeasure([[1., 0.]]*5), swap)
    1.0
    """
    return wasserstein1(measure, pushforward(measure, unitary),
                        max_points=max_points, rng=rng)


def default_period(channel):
    """Return the period of the given channel if it is irreducible and one
    otherwise.

    >>> from quantraj.auxs.measuretools import default_period
    >>> from quantraj.channels import swap, depolarizing
    >>> default_period(swap.channel()), default_period(depolarizing.channel())
    (2, 1)
    """
    from quantraj.auxs import analysistools
    if analysistools.is_irreducible(channel)[0]:
        return analysistools.period_and_decomposition(channel)[0]
    return 1


@magictools.printprogress
def estimate_invariant(channel, randomization, x0, nmb, seed, burn_in=1000,
                       thinning=1, nchains=1, period=None):
    """Run `nchains` independent trajectories and return the pooled Cesàro
    estimate (:class:`~quantraj.core.trajectorytools.CesaroEstimate`) of
    the invariant measure.

    The period defaults to the one of the channel if it is irreducible and
    to one otherwise.
    """
    from quantraj.core import trajectorytools
    if period is None:
        period = default_period(channel)
    runs = trajectorytools.run_chains(
        channel, randomization, x0, nmb, seed=seed, burn_in=burn_in,
        thinning=thinning, nchains=nchains, record_unitaries=False)
    return trajectorytools.cesaro_subsample(runs, period)


autodoctools.autodoc_module()
