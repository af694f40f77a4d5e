# -*- coding: utf-8 -*-
"""Two-dimensional channel with the Kraus operators `v1 = |e2⟩⟨e1|` and
`v2 = |e+⟩⟨e2|` (with `e+ = (e1+e2)/√2`), which is multiplicatively
primitive but whose invariant measure has atoms at `ê2` and `ê+` as soon
as the randomization has a Dirac component.

>>> from quantraj.channels import counterexample
>>> from quantraj.core.linalgtools import validate
>>> validate(counterexample.channel())
ValidationReport(ok=True, deviation=0.0)

The chain started in `ê1` moves to `ê2` and then to `ê+` whenever the
identity is drawn from the randomization, which happens with probability
one half for the default randomization:

>>> counterexample.randomization()
Convex(haar_weight=0.5, atoms=Dirac(k=2))
>>> counterexample.atoms()
[ProjectiveState(0.0, 1.0), ProjectiveState(0.707107, 0.707107)]
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools


def kraus():
    """Return the Kraus operators `|e2⟩⟨e1|` and `|e+⟩⟨e2|`."""
    v1 = numpy.array([[0., 0.],
                      [1., 0.]])
    v2 = numpy.array([[0., 1.],
                      [0., 1.]])/numpy.sqrt(2.)
    return numpy.array([v1, v2])


def channel():
    """Return the channel as a
    :class:`~quantraj.core.linalgtools.KrausChannel`."""
    return linalgtools.KrausChannel(kraus(), name='counterexample')


def randomization():
    """Return the even mixture of the Haar measure and the Dirac measure at
    the identity."""
    return linalgtools.Convex(.5, linalgtools.Dirac.identity(2))


def atoms():
    """Return the states `ê2` and `ê+` carrying the atoms of the invariant
    measure."""
    return [linalgtools.ProjectiveState.basis(2, 1),
            linalgtools.ProjectiveState([1., 1.])]


autodoctools.autodoc_module()
