# -*- coding: utf-8 -*-
"""Three-dimensional channel derived from the completely positive map
`T(X) = Σ w_i* X w_i` with `w1 = [[1,1,0],[−1,1,0],[0,0,0]]` and
`w2 = [[0,0,1],[0,0,1],[1,0,0]]` by the similarity transform
`v_i = r^(−1/2) C^(1/2) w_i C^(−1/2)`, where `r` is the spectral radius of
`T` and `C` its positive eigenmatrix.

Every linear combination of `w1` and `w2` is singular, so that the
multiplicative primitivity of this channel can only be certified state by
state (for products of four factors).

>>> from quantraj.channels import example2
>>> from quantraj.core.linalgtools import validate
>>> validate(example2.channel()).ok
True
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools
from quantraj.auxs import analysistools

POWER = 4
"""Number of factors of the certified products."""


def kraus_exact():
    """Return the operators `w1` and `w2` as nested lists of integers."""
    return [[[1, 1, 0], [-1, 1, 0], [0, 0, 0]],
            [[0, 0, 1], [0, 0, 1], [1, 0, 0]]]


def pre_similarity_kraus():
    """Return the operators `w1` and `w2` as a float array."""
    return numpy.array(kraus_exact(), dtype=float)


def channel():
    """Return the normalized channel as a
    :class:`~quantraj.core.linalgtools.KrausChannel`."""
    return analysistools.similarity_normalized(pre_similarity_kraus(),
                                               name='example2')


def randomization():
    """Return the Haar randomization."""
    return linalgtools.Haar()


autodoctools.autodoc_module()
