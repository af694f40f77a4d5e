# -*- coding: utf-8 -*-
"""Three-dimensional channel with the Kraus operators
`v1 = (√2/2)·[[0,1,0],[1,0,1],[0,0,0]]` and
`v2 = (√2/2)·[[0,0,0],[0,−1,0],[1,0,−1]]`, which is not positivity
improving but multiplicatively primitive (certified for products of eight
factors).

>>> from quantraj.channels import example1
>>> from quantraj.core.linalgtools import apply_heisenberg, validate
>>> from quantraj.core.objecttools import round_
>>> channel = example1.channel()
>>> validate(channel)
ValidationReport(ok=True, deviation=0.0)
>>> round_(apply_heisenberg(channel, numpy.diag([1., 0., 0.])))
0.0, 0.0, 0.0
0.0, 0.5, 0.0
0.0, 0.0, 0.0
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools

POWER = 8
"""Number of factors of the certified products."""

POINT = (1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3, 1)
"""Evaluation point of the rank-9 Jacobian certificate."""


def kraus_exact():
    """Return the Kraus operators without the common factor `√2/2` as
    nested lists of integers."""
    return [[[0, 1, 0], [1, 0, 1], [0, 0, 0]],
            [[0, 0, 0], [0, -1, 0], [1, 0, -1]]]


def kraus():
    """Return the (normalized) Kraus operators."""
    return numpy.sqrt(2.)/2.*numpy.array(kraus_exact(), dtype=float)


def channel():
    """Return the channel as a
    :class:`~quantraj.core.linalgtools.KrausChannel`."""
    return linalgtools.KrausChannel(kraus(), name='example1')


def randomization():
    """Return the Haar randomization."""
    return linalgtools.Haar()


autodoctools.autodoc_module()
