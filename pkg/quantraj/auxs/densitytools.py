# -*- coding: utf-8 -*-
"""This module implements densities on the projective space `P(C²)`
represented on quasi-uniform Bloch grids, and the fixed-point solver for
the density of the invariant measure of two-dimensional channels under
Haar randomization.

For `d = 2`, the invariant measure has a density `f` with respect to the
uniform measure satisfying

    `f(x̂) = ∫ g_{x'}(x̂) f(x̂') dν_unif(x̂')`,

where `g_{x'}` is the density of `GAP_ρ` for `ρ = Φ*(|x'⟩⟨x'|)`, i.e.
`g_{x'}(x̂) = (2/det ρ)·⟨x|ρ⁻¹|x⟩⁻³`.  For the projection channel, the
solution is the GAP density of `ρ₀`:

>>> from quantraj.auxs.densitytools import *
>>> from quantraj.auxs.gaptools import GapSampler, gap_density_rows
>>> from quantraj.channels import projection
>>> density = solve_density_fixed_point(projection.channel(), n_theta=20,
...                                     n_phi=40)
>>> exact = gap_density_rows(GapSampler(projection.density()),
...                          density.grid.states)
>>> float(numpy.max(numpy.abs(density.values-exact))) < 1e-2
True
"""
# import...
# ...from standard library
from __future__ import division, print_function
import warnings
from concurrent import futures
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj import pub
from quantraj.core import autodoctools
from quantraj.core import magictools
from quantraj.core import objecttools
from quantraj.core import linalgtools
from quantraj.auxs import measuretools
# from quantraj.auxs import analysistools (actual import commands moved to
# different functions below to avoid circular dependencies)

DETERMINANT_THRESHOLD = 1e-12
"""Smallest admissible determinant of the pushforward density matrices."""

MAX_KERNEL_ENTRIES = 25000000
"""Larger kernels are recomputed block by block in each sweep instead of
being stored."""

SLOW_GRID_SIZE = 100000
"""Grids with more nodes trigger a warning if option `warnslow` is set."""


def bloch_angles(points):
    """Return the polar and azimuthal Bloch angles of the given
    representatives of rays of `C²` (as rows).

    >>> from quantraj.auxs.densitytools import bloch_angles
    >>> from quantraj.core.objecttools import round_
    >>> theta, phi = bloch_angles([[1., 0.], [0., 1.], [1., 1j]])
    >>> round_(theta)
    0.0, 3.141593, 1.570796
    >>> round_(phi)
    0.0, 0.0, 1.570796
    """
    points = numpy.array(points, dtype=complex, ndmin=2)
    points = points/numpy.linalg.norm(points, axis=1)[:, None]
    theta = 2.*numpy.arccos(numpy.clip(numpy.abs(points[:, 0]), 0., 1.))
    phi = numpy.angle(points[:, 1]*points[:, 0].conj())
    phi = numpy.where(numpy.abs(points[:, 1]) > 0., phi, 0.)
    return theta, numpy.mod(phi, 2.*numpy.pi)


def bloch_states(theta, phi):
    """Return the canonical representatives `(cos(θ/2), e^{iφ}sin(θ/2))`
    (as rows)."""
    theta = numpy.asarray(theta, dtype=float)
    phi = numpy.asarray(phi, dtype=float)
    return numpy.stack([numpy.cos(theta/2.)+0j,
                        numpy.exp(1j*phi)*numpy.sin(theta/2.)], axis=-1)


class BlochGrid(object):
    """Quasi-uniform grid on `P(C²)` made of `n_theta` latitude bands of
    equal area (uniform in `cos θ`) and `n_phi` uniform azimuthal sectors.

    All cells have the same area, so that each node carries the weight
    `1/(n_theta·n_phi)` of the uniform measure:

    >>> from quantraj.auxs.densitytools import BlochGrid
    >>> grid = BlochGrid(4, 8)
    >>> grid
    BlochGrid(n_theta=4, n_phi=8)
    >>> grid.size, grid.integrate(numpy.ones(grid.size))
    (32, 1.0)
    """

    def __init__(self, n_theta=100, n_phi=200):
        if (n_theta < 1) or (n_phi < 1):
            raise ValueError(
                'A Bloch grid requires at least one band and one sector, '
                'but %d bands and %d sectors are given.' % (n_theta, n_phi))
        self.n_theta = int(n_theta)
        self.n_phi = int(n_phi)
        cos_theta = 1.-(2.*numpy.arange(self.n_theta)+1.)/self.n_theta
        thetas = numpy.arccos(cos_theta)
        phis = 2.*numpy.pi*(numpy.arange(self.n_phi)+.5)/self.n_phi
        self.theta = linalgtools._readonly(numpy.repeat(thetas, self.n_phi))
        self.phi = linalgtools._readonly(numpy.tile(phis, self.n_theta))
        self.states = linalgtools._readonly(
            bloch_states(self.theta, self.phi))

    @property
    def size(self):
        """Number of nodes."""
        return self.n_theta*self.n_phi

    @property
    def weights(self):
        """Uniform-measure weights of the nodes."""
        return numpy.full(self.size, 1./self.size)

    def integrate(self, values):
        """Return the quadrature of the given node values with respect to
        the uniform measure."""
        return float(numpy.mean(values))

    def locate(self, points):
        """Return the indices of the cells containing the given states.

        >>> from quantraj.auxs.densitytools import BlochGrid
        >>> BlochGrid(2, 4).locate([[1., 0.], [0., 1.], [2., -1j]])
        array([0, 4, 3])
        """
        theta, phi = bloch_angles(points)
        band = numpy.floor((1.-numpy.cos(theta))*self.n_theta/2.)
        band = numpy.clip(band.astype(int), 0, self.n_theta-1)
        sector = numpy.floor(phi*self.n_phi/(2.*numpy.pi)).astype(int)
        sector = numpy.mod(sector, self.n_phi)
        return band*self.n_phi+sector

    def __repr__(self):
        return 'BlochGrid(n_theta=%d, n_phi=%d)' % (self.n_theta, self.n_phi)


class BlochGridDensity(object):
    """Nonnegative density with respect to the uniform measure, given by
    its values on the nodes of a :class:`BlochGrid` and integrating to
    one within 1e-6.

    >>> from quantraj.auxs.densitytools import BlochGrid, BlochGridDensity
    >>> density = BlochGridDensity(BlochGrid(2, 2), [2., 2., 0., 0.])
    >>> density
    BlochGridDensity(n_theta=2, n_phi=2)
    >>> density.value_at([[1., 0.], [0., 1.]])
    array([2., 0.])
    >>> BlochGridDensity(BlochGrid(2, 2), [1., 1., 1., 2.])
    Traceback (most recent call last):
    ...
    ValueError: The given density values integrate to 1.25 instead of one.
    """

    def __init__(self, grid, values, residual=None, history=None):
        values = numpy.array(values, dtype=float)
        if values.shape != (grid.size,):
            raise objecttools.DimensionMismatchError(
                'The grid has %d nodes, but %d density values are given.'
                % (grid.size, values.size))
        if numpy.any(values < 0.):
            raise ValueError('At least one density value is negative.')
        total = grid.integrate(values)
        if abs(total-1.) > 1e-6:
            raise ValueError(
                'The given density values integrate to %s instead of one.'
                % objecttools.repr_(total))
        self.grid = grid
        self.values = linalgtools._readonly(values)
        self.residual = residual
        self.history = [] if history is None else list(history)

    def value_at(self, points):
        """Return the density values of the cells containing the given
        states."""
        return self.values[self.grid.locate(points)]

    def coarsen(self, n_theta, n_phi):
        """Return the density averaged over the cells of a coarser grid
        (whose numbers of bands and sectors must divide the present
        ones).

        >>> from quantraj.auxs.densitytools import BlochGrid, BlochGridDensity
        >>> density = BlochGridDensity(BlochGrid(2, 2), [2., 2., 0., 0.])
        >>> density.coarsen(1, 1).values
        array([1.])
        """
        if (self.grid.n_theta % n_theta) or (self.grid.n_phi % n_phi):
            raise ValueError(
                'A %d×%d grid cannot be coarsened to a %d×%d grid.'
                % (self.grid.n_theta, self.grid.n_phi, n_theta, n_phi))
        blocks = self.values.reshape(
            n_theta, self.grid.n_theta//n_theta,
            n_phi, self.grid.n_phi//n_phi)
        return BlochGridDensity(BlochGrid(n_theta, n_phi),
                                blocks.mean(axis=(1, 3)).ravel())

    def as_measure(self, drop_empty=True):
        """Return the density as an
        :class:`~quantraj.auxs.measuretools.EmpiricalMeasure` on the grid
        nodes (cells without mass are dropped by default)."""
        weights = self.values*self.grid.weights
        mask = weights > 0. if drop_empty else numpy.ones(len(weights), bool)
        return measuretools.EmpiricalMeasure(
            self.grid.states[mask], weights[mask], canonical=True)

    def to_rows(self):
        """Return the rows `(theta, phi, value)` of all nodes."""
        return [(float(theta), float(phi), float(value)) for
                (theta, phi, value) in zip(self.grid.theta, self.grid.phi,
                                           self.values)]

    def __repr__(self):
        return 'BlochGridDensity(n_theta=%d, n_phi=%d)' % (
            self.grid.n_theta, self.grid.n_phi)


def histogram_density(measure, n_theta, n_phi):
    """Return the histogram of the given two-dimensional measure on the
    cells of a :class:`BlochGrid` as a :class:`BlochGridDensity`.

    >>> from quantraj.auxs.densitytools import histogram_density
    >>> from quantraj.auxs.measuretools import EmpiricalMeasure
    >>> histogram_density(EmpiricalMeasure([[1., 0.]]), 2, 1).values
    array([2., 0.])
    """
    if measure.dim != 2:
        raise objecttools.DimensionMismatchError(
            'Bloch grids are defined for dimension 2 only, but the measure '
            'has dimension %d.' % measure.dim)
    grid = BlochGrid(n_theta, n_phi)
    masses = numpy.bincount(grid.locate(measure.points),
                            weights=measure.weights, minlength=grid.size)
    return BlochGridDensity(grid, masses*grid.size)


def histogram_measure(measure, n_theta, n_phi):
    """Return the given two-dimensional measure binned on the cells of a
    :class:`BlochGrid` (each cell's mass placed on its node)."""
    return histogram_density(measure, n_theta, n_phi).as_measure()


class _Kernel(object):
    """Quadrature version of the GAP kernel of a two-dimensional channel on
    the nodes of a Bloch grid."""

    def __init__(self, channel, grid):
        self.grid = grid
        points = grid.states
        images = numpy.einsum('iab,nb->nia', channel.kraus, points)
        rhos = numpy.einsum('nia,nib->nab', images, images.conj())
        dets = (rhos[:, 0, 0]*rhos[:, 1, 1] -
                numpy.abs(rhos[:, 0, 1])**2).real
        bad = numpy.where(dets < DETERMINANT_THRESHOLD)[0]
        if len(bad):
            idx = bad[0]
            raise objecttools.SingularPushforwardError(
                'The channel maps the node %d (θ=%s, φ=%s) to a density '
                'matrix with determinant %s.'
                % (idx, objecttools.repr_(grid.theta[idx]),
                   objecttools.repr_(grid.phi[idx]),
                   objecttools.repr_(dets[idx])))
        # coefficients of the quadratic forms ⟨x|ρ⁻¹|x⟩
        self.columns = numpy.stack(
            [rhos[:, 1, 1].real, rhos[:, 0, 0].real,
             -2.*rhos[:, 0, 1].real, 2.*rhos[:, 0, 1].imag], axis=1)
        self.columns /= dets[:, None]
        self.factors = 2./dets
        overlap = points[:, 0].conj()*points[:, 1]
        self.rows = numpy.stack(
            [numpy.abs(points[:, 0])**2, numpy.abs(points[:, 1])**2,
             overlap.real, overlap.imag], axis=1)
        self.matrix = None
        if grid.size**2 <= MAX_KERNEL_ENTRIES:
            self.matrix = self._block(slice(None))

    def _block(self, rows):
        quadratic = numpy.dot(self.rows[rows], self.columns.T)
        return self.factors/(quadratic*quadratic*quadratic)

    def apply(self, values):
        """Return `∫ g_{x'}(x̂_i) f(x̂') dν_unif(x̂')` for all nodes."""
        weighted = numpy.asarray(values)/self.grid.size
        if self.matrix is not None:
            return numpy.dot(self.matrix, weighted)
        blocksize = max(MAX_KERNEL_ENTRIES//(4*self.grid.size), 1)
        slices = [slice(idx, idx+blocksize)
                  for idx in range(0, self.grid.size, blocksize)]

        def apply_block(rows):
            return numpy.dot(self._block(rows), weighted)

        if pub.options.threads == 1:
            return numpy.concatenate([apply_block(s) for s in slices])
        with futures.ThreadPoolExecutor(pub.options.threads) as executor:
            return numpy.concatenate(list(executor.map(apply_block, slices)))


def _check_channel(channel):
    from quantraj.auxs import analysistools
    if channel.dim != 2:
        raise objecttools.DimensionMismatchError(
            'The density fixed point equation is implemented for dimension '
            '2 only, but channel `%s` acts on dimension %d.'
            % (channel.name, channel.dim))
    if not analysistools.is_primitive(channel, crosscheck=False):
        raise objecttools.NotPrimitiveError(
            'Channel `%s` is not primitive.' % channel.name)


def kernel_residual(channel, grid, values):
    """Return the sup-norm residual `‖Kf − f‖_∞` of the given node values
    without any renormalization.

    For the depolarizing channel, the uniform density is invariant:

    >>> from quantraj.auxs.densitytools import BlochGrid, kernel_residual
    >>> from quantraj.channels import depolarizing
    >>> grid = BlochGrid(20, 40)
    >>> kernel_residual(depolarizing.channel(2, .5), grid,
    ...                 numpy.ones(grid.size)) < 1e-2
    True
    """
    kernel = _Kernel(channel, grid)
    return float(numpy.max(numpy.abs(kernel.apply(values)-values)))


@magictools.printprogress
def solve_density_fixed_point(channel, n_theta=100, n_phi=200, iters=500,
                              tol=1e-8):
    """Solve the fixed point equation of the invariant density of the
    given primitive two-dimensional channel under Haar randomization.

    Starting from the uniform density, each sweep applies the quadrature
    kernel and renormalizes the result.  If the residual grows in two
    consecutive sweeps after the fifth one, the iteration switches to
    damping with factor one half.  The resulting :class:`BlochGridDensity`
    records the final sup-norm residual and its history:

    >>> from quantraj.auxs.densitytools import solve_density_fixed_point
    >>> from quantraj.channels import depolarizing, swap
    >>> density = solve_density_fixed_point(depolarizing.channel(2, .5),
    ...                                     n_theta=10, n_phi=20)
    >>> density.residual <= 1e-8, float(numpy.min(density.values)) > 0.9
    (True, True)

    Channels that are not primitive are rejected:

    >>> solve_density_fixed_point(swap.channel(), n_theta=10, n_phi=20)
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.NotPrimitiveError: While trying to solve the density fixed point equation of channel `swap`, the following error occured: Channel `swap` is not primitive.
    """
    try:
        _check_channel(channel)
        grid = BlochGrid(n_theta, n_phi)
        if pub.options.warnslow and (grid.size > SLOW_GRID_SIZE):
            warnings.warn(
                'The Bloch grid has %d nodes, each sweep of the fixed point '
                'iteration requires %d kernel evaluations.'
                % (grid.size, grid.size**2), objecttools.QuanTrajWarning)
        kernel = _Kernel(channel, grid)
        values = numpy.ones(grid.size)
        history = []
        damping = False
        for dummy in range(iters):
            image = kernel.apply(values)
            image /= grid.integrate(image)
            residual = float(numpy.max(numpy.abs(image-values)))
            history.append(residual)
            if ((len(history) > 5) and (history[-1] > history[-2]) and
                    (history[-2] > history[-3])):
                damping = True
            values = (values+image)/2. if damping else image
            if residual <= tol:
                break
        else:
            raise objecttools.NoConvergenceError(
                'The residual is still %s after %d sweeps (tolerance %s).'
                % (objecttools.repr_(history[-1]), iters,
                   objecttools.repr_(tol)))
        values = numpy.clip(values, 0., None)
        values /= grid.integrate(values)
        return BlochGridDensity(grid, values, residual, history)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to solve the density fixed point equation of '
            'channel `%s`' % channel.name)


autodoctools.autodoc_module()
