# -*- coding: utf-8 -*-
"""Projection channel `Φ(X) = Id·tr(ρ₀X)`, which maps every density matrix
to `ρ₀` and whose invariant measure (under Haar randomization) is
`GAP_ρ₀`.

The Kraus operators are `√λ_j |f_j⟩⟨e_i|` for all basis vectors `e_i` and
all eigenpairs `(λ_j, f_j)` of `ρ₀` with `λ_j > 0`:

>>> from quantraj.channels import projection
>>> from quantraj.core.linalgtools import apply_schrodinger
>>> from quantraj.core.objecttools import round_
>>> channel = projection.channel()
>>> channel
KrausChannel(name='projection', dim=2, rank=4)
>>> round_(apply_schrodinger(channel, numpy.array([[.5, .5], [.5, .5]])))
0.666667, 0.0
0.0, 0.333333
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools


def density():
    """Return the default density matrix `ρ₀ = diag(2/3, 1/3)`."""
    return numpy.diag([2./3., 1./3.])


def kraus(rho0=None):
    """Return the Kraus operators of the projection channel of the given
    density matrix (default: :func:`density`)."""
    rho0 = linalgtools.DensityMatrix(density() if rho0 is None else rho0)
    values, vectors = rho0.support()
    eye = numpy.eye(rho0.dim)
    return numpy.array([numpy.sqrt(value)*numpy.outer(vector, eye[idx])
                        for (value, vector) in zip(values, vectors.T)
                        for idx in range(rho0.dim)])


def channel(rho0=None):
    """Return the projection channel of the given density matrix as a
    :class:`~quantraj.core.linalgtools.KrausChannel`."""
    return linalgtools.KrausChannel(kraus(rho0), name='projection')


def randomization():
    """Return the Haar randomization."""
    return linalgtools.Haar()


autodoctools.autodoc_module()
