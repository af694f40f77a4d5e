# -*- coding: utf-8 -*-
"""This module implements the statistical functionalities QuanTraj uses to
judge Monte Carlo results: weighted moments, standard errors, split-chain
convergence diagnostics and self-calibrated null bands for two-sample
statistics.
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.auxs import validtools


def weighted_mean(values, weights):
    """Return the weighted mean of the given values.

    With equal weights, the result is simply the arithmetic mean:

    >>> from quantraj.auxs.statstools import weighted_mean
    >>> weighted_mean(values=[3., 7.], weights=[2., 2.])
    5.0

    With different weights, the mean is shifted towards the larger ones:

    >>> weighted_mean(values=[3., 7.], weights=[1., 3.])
    6.0

    Some plausibility checks are performed, e.g.:

    >>> weighted_mean(values=[3., 7.], weights=[-2., 2.])
    Traceback (most recent call last):
    ...
    ValueError: While trying to calculate a weighted mean, the following error occured: For the following objects, at least one value is negative: weights.
    """
    try:
        values = numpy.array(values)
        weights = numpy.array(weights)
        validtools.test_equal_shape(values=values, weights=weights)
        validtools.test_non_negative(weights=weights)
        return float(numpy.dot(values, weights)/numpy.sum(weights))
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to calculate a weighted mean')


def weighted_std(values, weights, mean=None):
    """Return the weighted standard deviation of the given values.

    >>> from quantraj.auxs.statstools import weighted_std
    >>> weighted_std(values=[3., 7.], weights=[2., 2.])
    2.0

    One can pass a precalculated or alternative mean:

    >>> from quantraj.core.objecttools import round_
    >>> round_(weighted_std(values=[3., 7.], weights=[2., 2.], mean=4.))
    2.236068
    """
    try:
        values = numpy.array(values)
        weights = numpy.array(weights)
        validtools.test_equal_shape(values=values, weights=weights)
        validtools.test_non_negative(weights=weights)
        if mean is None:
            mean = weighted_mean(values, weights)
        return float(numpy.sqrt(numpy.dot(weights, (values-mean)**2) /
                                numpy.sum(weights)))
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to calculate a weighted standard deviation')


def standard_error(values, axis=0):
    """Return the standard error of the mean of independent samples.

    >>> from quantraj.auxs.statstools import standard_error
    >>> from quantraj.core.objecttools import round_
    >>> round_(standard_error([1., 3., 1., 3.]))
    0.57735
    """
    values = numpy.asarray(values)
    nmb = values.shape[axis]
    if nmb < 2:
        raise ValueError(
            'At least two samples are required for estimating a standard '
            'error, but %d is given.' % nmb)
    return numpy.std(values, axis=axis, ddof=1)/numpy.sqrt(nmb)


def within_sigma(estimate, reference, error, nsigma=3.):
    """Return True if all estimates deviate from their references by at most
    `nsigma` standard errors.

    >>> from quantraj.auxs.statstools import within_sigma
    >>> within_sigma(0.51, 0.5, 0.005)
    True
    >>> within_sigma([0.51, 0.53], [0.5, 0.5], 0.005)
    False
    """
    deviation = numpy.abs(numpy.asarray(estimate)-numpy.asarray(reference))
    return bool(numpy.all(deviation <= nsigma*numpy.asarray(error)))


def split_rhat(chains):
    """Return the split potential scale reduction factor of the given
    scalar chain outputs (one row per chain).

    Each chain is split in two halves, which makes the diagnostic sensitive
    to drifting chains.  Values close to one indicate that all chains
    sample the same law:

    >>> from quantraj.auxs.statstools import split_rhat
    >>> import numpy
    >>> rng = numpy.random.default_rng(1)
    >>> split_rhat(rng.normal(size=(4, 1000))) < 1.01
    True
    >>> split_rhat(numpy.array([rng.normal(size=1000),
    ...                         rng.normal(size=1000)+5.])) > 2.
    True
    """
    chains = numpy.array(chains, dtype=float, ndmin=2)
    half = chains.shape[1]//2
    if half < 2:
        raise ValueError(
            'Each chain must provide at least four values for computing '
            'the split potential scale reduction factor.')
    splits = numpy.concatenate([chains[:, :half], chains[:, -half:]])
    means = numpy.mean(splits, axis=1)
    within = numpy.mean(numpy.var(splits, axis=1, ddof=1))
    between = half*numpy.var(means, ddof=1)
    if within == 0.:
        return 1. if between == 0. else numpy.inf
    return float(numpy.sqrt(((half-1.)/half*within + between/half)/within))


class NullBand(object):
    """Same-law reference band of a two-sample statistic.

    The band summarizes the values a statistic takes on pairs of independent
    samples of the same law (`replicas` of them).  Its edges are the mean
    plus/minus `nsigma` standard deviations.  A value lies within the band
    if it does not exceed the upper edge; values below the lower edge are
    accepted but flagged by property :attr:`NullBand.below`:

    >>> from quantraj.auxs.statstools import NullBand
    >>> band = NullBand([0.1, 0.2, 0.3])
    >>> band
    NullBand(mean=0.2, sd=0.1, lower=0.0, upper=0.5, replicas=3)
    >>> band.contains(0.45), band.contains(0.55)
    (True, False)
    >>> band.below(-0.01)
    True
    """

    def __init__(self, values, nsigma=3.):
        values = numpy.asarray(values, dtype=float)
        if len(values) < 2:
            raise ValueError(
                'A null band requires at least two replicas, but %d is '
                'given.' % len(values))
        self.values = values
        self.mean = float(numpy.mean(values))
        self.sd = float(numpy.std(values, ddof=1))
        self.lower = max(self.mean-nsigma*self.sd, 0.)
        self.upper = self.mean+nsigma*self.sd

    @property
    def replicas(self):
        """Number of replicas the band is based on."""
        return len(self.values)

    def contains(self, value):
        """True, if the given value does not exceed the upper edge."""
        return value <= self.upper

    def below(self, value):
        """True, if the given value lies below the lower edge."""
        return value < self.lower

    def to_dict(self):
        """Return the JSON-ready summary of the band."""
        return {'mean': self.mean, 'sd': self.sd, 'lower': self.lower,
                'upper': self.upper, 'replicas': self.replicas}

    def __repr__(self):
        return ('NullBand(mean=%s, sd=%s, lower=%s, upper=%s, replicas=%d)'
                % (objecttools.repr_(self.mean), objecttools.repr_(self.sd),
                   objecttools.repr_(self.lower),
                   objecttools.repr_(self.upper), self.replicas))


def null_band(statistic, replicas=20, nsigma=3.):
    """Evaluate the given statistic `replicas` times and return the
    resulting :class:`NullBand`.

    The statistic is called with the index of the replica and has to
    compute the two-sample statistic on two fresh, independent samples of
    the same law:

    >>> import numpy
    >>> from quantraj.auxs.statstools import null_band
    >>> rng = numpy.random.default_rng(0)
    >>> band = null_band(lambda idx: abs(numpy.mean(rng.normal(size=100)) -
    ...                                  numpy.mean(rng.normal(size=100))))
    >>> band.replicas, band.upper < 0.6
    (20, True)
    """
    try:
        return NullBand([statistic(idx) for idx in range(replicas)],
                        nsigma=nsigma)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to calibrate a null band')


autodoctools.autodoc_module()
