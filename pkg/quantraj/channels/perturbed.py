# -*- coding: utf-8 -*-
"""Perturbed depolarizing channel `Φ(X) = (1−p)X + p·Id·tr(ρ₀X)`, whose
invariant measure has a density without known closed form.

>>> from quantraj.channels import perturbed
>>> perturbed.channel()
KrausChannel(name='perturbed-depolarizing', dim=2, rank=5)
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import linalgtools
from quantraj.channels import depolarizing
from quantraj.channels import projection


def channel(rho0=None, prob=.5):
    """Return the perturbed depolarizing channel of the given density
    matrix (default: `diag(2/3, 1/3)`) and mixing probability."""
    rho0 = projection.density() if rho0 is None else rho0
    return linalgtools.KrausChannel(
        depolarizing.mixed_kraus(rho0, prob), name='perturbed-depolarizing')


def randomization():
    """Return the Haar randomization."""
    return linalgtools.Haar()


autodoctools.autodoc_module()
