# -*- coding: utf-8 -*-
"""This subpackage bundles the quantum channels QuanTraj's experiments are
based on.  Each module provides the function `channel` (returning a
:class:`~quantraj.core.linalgtools.KrausChannel` with default parameters)
and the function `randomization` (returning the randomization the channel
is usually studied with).  Use :func:`get` to select a channel by name:

>>> from quantraj import channels
>>> channels.get('swap')
KrausChannel(name='swap', dim=2, rank=2)
>>> channels.get('bell')
Traceback (most recent call last):
...
KeyError: 'No channel named `bell` is available.  Available channels are: counterexample, depolarizing, example1, example2, perturbed-depolarizing, projection, swap.'
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools
from quantraj.core import objecttools
from quantraj.auxs import validtools
from quantraj.channels import counterexample
from quantraj.channels import depolarizing
from quantraj.channels import example1
from quantraj.channels import example2
from quantraj.channels import perturbed
from quantraj.channels import projection
from quantraj.channels import swap

CATALOGUE = {'counterexample': counterexample,
             'depolarizing': depolarizing,
             'example1': example1,
             'example2': example2,
             'perturbed-depolarizing': perturbed,
             'projection': projection,
             'swap': swap}


def get(name):
    """Return the channel of the given name with default parameters."""
    try:
        return CATALOGUE[name].channel()
    except KeyError:
        raise KeyError(
            'No channel named `%s` is available.  Available channels are: '
            '%s.' % (name, ', '.join(sorted(CATALOGUE))))


def module(name):
    """Return the module of the given channel name, or None."""
    return CATALOGUE.get(name)


def unitary_channel(unitary, name=None):
    """Return the channel `X ↦ U* X U` with the single Kraus operator `U`.

    >>> from quantraj.channels import unitary_channel
    >>> unitary_channel([[0., 1.], [1., 0.]], name='flip')
    KrausChannel(name='flip', dim=2, rank=1)
    >>> unitary_channel(numpy.diag([1., 2.]))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.NotUnitaryError: While trying to define a unitary channel, the following error occured: The following matrices are not unitary: unitary (deviation 3.0).
    """
    try:
        unitary = numpy.array(unitary, dtype=complex, ndmin=2)
        validtools.test_unitary(unitary=unitary)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to define a unitary channel')
    return linalgtools.KrausChannel([unitary],
                                    name='unitary' if name is None else name)


def random_channel(dim, rank, rng, name=None):
    """Return a random channel with `rank` Kraus operators on dimension
    `dim`, obtained by cutting the first `dim` columns of a Haar random
    unitary of size `rank·dim` into blocks.

    >>> from quantraj.channels import random_channel
    >>> from quantraj.core.linalgtools import validate
    >>> channel = random_channel(2, 3, numpy.random.default_rng(0))
    >>> channel
    KrausChannel(name='random', dim=2, rank=3)
    >>> validate(channel).ok
    True
    """
    from quantraj.core import trajectorytools
    isometry = trajectorytools.sample_haar_unitary(dim*rank, rng)[:, :dim]
    return linalgtools.KrausChannel(isometry.reshape(rank, dim, dim),
                                    name='random' if name is None else name)


autodoctools.autodoc_channelcollection()
