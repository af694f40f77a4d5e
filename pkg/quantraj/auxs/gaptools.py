# -*- coding: utf-8 -*-
"""This module implements sampling and density evaluation for Gaussian
adjusted projected measures `GAP_ρ`.

`GAP_ρ` is the law of the ray of a complex Gaussian vector with
covariance `ρ` after its density has been adjusted by the factor `‖ψ‖²`.
Its mean density matrix is `ρ` and, relative to the uniform measure on the
projective space of the support of `ρ`, it has the density
`(r/det ρ₊)·⟨ψ|ρ₊⁻¹|ψ⟩^(−r−1)`, with `ρ₊` the restriction of `ρ` to its
support and `r` its rank:

>>> from quantraj.auxs.gaptools import GapSampler, gap_density
>>> from quantraj.core.linalgtools import ProjectiveState
>>> from quantraj.core.objecttools import round_
>>> sampler = GapSampler(numpy.diag([2./3., 1./3.]))
>>> round_(gap_density(sampler, ProjectiveState.basis(2, 0)), decimals=12)
2.666666666667
>>> round_(gap_density(sampler, ProjectiveState.basis(2, 1)), decimals=12)
0.333333333333
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.core import linalgtools
from quantraj.auxs import measuretools

SUPPORT_TOLERANCE = 1e-8
"""States with a larger component outside the support of `ρ` are
rejected by :func:`gap_density`."""


class GapSampler(object):
    """Sampler for `GAP_ρ` based on the eigen decomposition of the given
    density matrix.

    >>> from quantraj.auxs.gaptools import GapSampler
    >>> sampler = GapSampler(numpy.diag([0., 1.]))
    >>> sampler
    GapSampler(dim=2, rank=1)
    >>> sampler.values
    array([1.])
    """

    def __init__(self, density):
        try:
            if not isinstance(density, linalgtools.DensityMatrix):
                density = linalgtools.DensityMatrix(density)
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to prepare a GAP sampler')
        self.density = density
        self.values, self.vectors = density.support()
        self.logdet = float(numpy.sum(numpy.log(self.values)))

    @property
    def dim(self):
        """Dimension of the underlying Hilbert space."""
        return self.density.dim

    @property
    def rank(self):
        """Rank `r` of the density matrix."""
        return len(self.values)

    def _gaussian_coefficients(self, nmb, rng):
        scale = numpy.sqrt(self.values/2.)
        return scale*(rng.standard_normal((nmb, self.rank)) +
                      1j*rng.standard_normal((nmb, self.rank)))

    def gaussians(self, nmb, rng):
        """Return `nmb` complex Gaussian vectors with covariance `ρ` (as
        rows)."""
        return numpy.dot(self._gaussian_coefficients(nmb, rng),
                         self.vectors.T)

    def gap_points(self, nmb, rng):
        """Return `nmb` canonical representatives distributed as `GAP_ρ`
        (as rows).

        The adjusted Gaussian measure is a mixture: with probability `λ_i`,
        the squared modulus of the `i`-th eigenbasis coordinate follows a
        Gamma distribution with shape two and scale `λ_i` (and its phase is
        uniform), while all other coordinates keep their Gaussian law.
        """
        coefs = self._gaussian_coefficients(nmb, rng)
        idxs = rng.choice(self.rank, size=nmb, p=self.values/numpy.sum(
            self.values))
        radii = numpy.sqrt(rng.gamma(2., self.values[idxs]))
        phases = numpy.exp(2j*numpy.pi*rng.random(nmb))
        coefs[numpy.arange(nmb), idxs] = radii*phases
        return linalgtools.canonicalize_rows(
            numpy.dot(coefs, self.vectors.T))

    def __repr__(self):
        return 'GapSampler(dim=%d, rank=%d)' % (self.dim, self.rank)


def sample_gaussian(sampler, rng):
    """Return a complex Gaussian vector with zero mean and covariance `ρ`.

    Directions outside the support of `ρ` have zero variance:

    >>> from quantraj.auxs.gaptools import GapSampler, sample_gaussian
    >>> sampler = GapSampler(numpy.diag([1., 0.]))
    >>> float(abs(sample_gaussian(sampler, numpy.random.default_rng(0))[1]))
    0.0
    """
    return sampler.gaussians(1, rng)[0]


def sample_gap(sampler, rng):
    """Return a :class:`~quantraj.core.linalgtools.ProjectiveState`
    distributed according to `GAP_ρ`.

    For pure density matrices, the result is deterministic:

    >>> from quantraj.auxs.gaptools import GapSampler, sample_gap
    >>> sample_gap(GapSampler(numpy.diag([1., 0.])),
    ...            numpy.random.default_rng(0))
    ProjectiveState(1.0, 0.0)
    """
    return linalgtools.ProjectiveState.from_canonical(
        sampler.gap_points(1, rng)[0])


def gap_sample(sampler, nmb, rng):
    """Return `nmb` independent samples of `GAP_ρ` as an equally weighted
    :class:`~quantraj.auxs.measuretools.EmpiricalMeasure`."""
    return measuretools.EmpiricalMeasure(sampler.gap_points(nmb, rng),
                                         canonical=True)


def sample_gap_weighted(sampler, rng, nmb):
    """Return `nmb` Gaussian samples with covariance `ρ`, weighted by
    `‖ψ‖²`, as an :class:`~quantraj.auxs.measuretools.EmpiricalMeasure`.

    This importance sampling scheme is an independent, though less
    efficient, realization of `GAP_ρ`.
    """
    vectors = sampler.gaussians(nmb, rng)
    weights = numpy.sum(numpy.abs(vectors)**2, axis=1)
    return measuretools.EmpiricalMeasure(vectors, weights)


def gap_density_rows(sampler, points):
    """Vectorized version of :func:`gap_density` for the rows of the given
    array of (normalized) representatives."""
    points = numpy.array(points, dtype=complex, ndmin=2)
    coefs = numpy.dot(points, sampler.vectors.conj())
    outside = numpy.sqrt(numpy.clip(
        numpy.sum(numpy.abs(points)**2, axis=1) -
        numpy.sum(numpy.abs(coefs)**2, axis=1), 0., None))
    bad = numpy.where(outside > SUPPORT_TOLERANCE)[0]
    if len(bad):
        raise objecttools.OutsideSupportError(
            'State %d has a component of norm %s outside the support of the '
            'density matrix.' % (bad[0], objecttools.repr_(outside[bad[0]])))
    quadratic = numpy.sum(numpy.abs(coefs)**2/sampler.values, axis=1)
    rank = sampler.rank
    return numpy.exp(numpy.log(rank)-sampler.logdet -
                     (rank+1)*numpy.log(quadratic))


def gap_density(sampler, state):
    """Return the density of `GAP_ρ` at the given state relative to the
    uniform measure on the projective space of the support of `ρ`.

    The density is a function of the ray only, and states outside the
    support are rejected:

    >>> from quantraj.auxs.gaptools import GapSampler, gap_density
    >>> from quantraj.core.linalgtools import ProjectiveState
    >>> sampler = GapSampler(numpy.diag([1., 0.]))
    >>> gap_density(sampler, ProjectiveState([1j, 0.]))
    1.0
    >>> gap_density(sampler, ProjectiveState([1., 1.]))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.OutsideSupportError: While trying to evaluate the GAP density, the following error occured: State 0 has a component of norm 0.707107 outside the support of the density matrix.
    """
    try:
        if state.dim != sampler.dim:
            raise objecttools.DimensionMismatchError(
                'The state has dimension %d, but the density matrix has '
                'dimension %d.' % (state.dim, sampler.dim))
        return float(gap_density_rows(sampler, state.rep)[0])
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to evaluate the GAP density')


def mean_density_matrix(samples):
    """Return the mean density matrix `Σ w_i |ψ_i⟩⟨ψ_i|` of the given
    samples (an :class:`~quantraj.auxs.measuretools.EmpiricalMeasure` or a
    list of :class:`~quantraj.core.linalgtools.ProjectiveState` objects).

    >>> from quantraj.auxs.gaptools import mean_density_matrix
    >>> from quantraj.core.linalgtools import ProjectiveState
    >>> mean_density_matrix([ProjectiveState.basis(2, 0)]*3)
    DensityMatrix(1.0, 0.0; 0.0, 0.0)
    >>> mean_density_matrix([])
    Traceback (most recent call last):
    ...
    ValueError: The mean density matrix of an empty sample is undefined.
    """
    if not isinstance(samples, measuretools.EmpiricalMeasure):
        if not len(samples):
            raise ValueError(
                'The mean density matrix of an empty sample is undefined.')
        samples = measuretools.EmpiricalMeasure(samples)
    return linalgtools.DensityMatrix(samples.mean_density_matrix())


autodoctools.autodoc_module()
