# -*- coding: utf-8 -*-
"""Depolarizing channel `Φ(X) = (1−p)X + p·Id·tr(X)/d`, whose symmetry
group is the full unitary group, so that its invariant measure under Haar
randomization is the uniform measure.

>>> from quantraj.channels import depolarizing
>>> from quantraj.core.linalgtools import apply_schrodinger
>>> from quantraj.core.objecttools import round_
>>> round_(apply_schrodinger(depolarizing.channel(2, .5),
...                          numpy.diag([1., 0.])))
0.75, 0.0
0.0, 0.25
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools
from quantraj.channels import projection


def mixed_kraus(rho0, prob):
    """Return the Kraus operators of `(1−p)X + p·Id·tr(ρ₀X)`, i.e.
    `√(1−p)·Id` together with the scaled Kraus operators of the projection
    channel of `ρ₀`.  Vanishing operators are omitted."""
    prob = float(prob)
    if not 0. <= prob <= 1.:
        raise ValueError(
            'The mixing probability must lie in [0, 1], but %s is given.'
            % prob)
    rho0 = numpy.asarray(rho0)
    kraus = []
    if prob < 1.:
        kraus.append(numpy.sqrt(1.-prob)*numpy.eye(len(rho0)))
    if prob > 0.:
        kraus.extend(numpy.sqrt(prob)*projection.kraus(rho0))
    return numpy.array(kraus)


def channel(dim=2, prob=.5):
    """Return the depolarizing channel of the given dimension and
    depolarizing probability."""
    return linalgtools.KrausChannel(
        mixed_kraus(numpy.eye(dim)/dim, prob), name='depolarizing')


def randomization():
    """Return the Haar randomization."""
    return linalgtools.Haar()


autodoctools.autodoc_module()
