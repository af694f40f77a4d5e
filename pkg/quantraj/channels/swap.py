# -*- coding: utf-8 -*-
"""Two-dimensional channel with the Kraus operators `v1 = |e2⟩⟨e1|` and
`v2 = |e1⟩⟨e2|`, which is irreducible but has period two.

>>> from quantraj.channels import swap
>>> from quantraj.core.linalgtools import apply_heisenberg
>>> apply_heisenberg(swap.channel(), numpy.diag([1., 0.])).real
array([[0., 0.],
       [0., 1.]])
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools


def kraus_exact():
    """Return the Kraus operators as nested lists of integers."""
    return [[[0, 0], [1, 0]],
            [[0, 1], [0, 0]]]


def kraus():
    """Return the Kraus operators `|e2⟩⟨e1|` and `|e1⟩⟨e2|`."""
    return numpy.array(kraus_exact(), dtype=float)


def channel():
    """Return the channel as a
    :class:`~quantraj.core.linalgtools.KrausChannel`."""
    return linalgtools.KrausChannel(kraus(), name='swap')


def randomization():
    """Return the Haar randomization."""
    return linalgtools.Haar()


autodoctools.autodoc_module()
