# -*- coding: utf-8 -*-
"""This module implements the ergodicity classification of quantum
channels: irreducibility (via the algebra generated by the Kraus
operators), period and cyclic decomposition, primitivity, a
positivity-improving diagnostic, invariant states, covariance and a
sufficient test for the purification of trajectories.

The swap channel is irreducible, but has period two:

>>> from quantraj.auxs.analysistools import *
>>> from quantraj.channels import swap, counterexample
>>> is_irreducible(swap.channel())
(True, None)
>>> period_and_decomposition(swap.channel())[0]
2
>>> is_primitive(swap.channel()), is_primitive(counterexample.channel())
(False, True)
"""
# import...
# ...from standard library
from __future__ import division, print_function
import warnings
# ...from site-packages
import numpy
from scipy import linalg
from scipy import optimize
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.core import linalgtools
from quantraj.auxs import validtools

SPAN_TOLERANCE = 1e-9
"""Residual norm, relative to the scale of the operators generating a
span, above which a vector extends the span."""

PERIPHERAL_CUTOFF = 1e-7
"""Eigenvalues with modulus above `1 − PERIPHERAL_CUTOFF` are peripheral."""

POSITIVITY_THRESHOLD = 1e-12
"""Smallest eigenvalue a matrix needs to count as positive definite."""


class _SpanBuilder(object):
    """Orthonormal basis of a growing span of (flattened) vectors."""

    def __init__(self, size):
        self.size = size
        self.basis = numpy.zeros((0, size), dtype=complex)

    def add(self, vector, scale=None):
        """Add the given vector and return its normalized residual, or None
        if it lies within the span already.

        The residual is compared with `SPAN_TOLERANCE` times `scale`,
        which defaults to the norm of the vector itself.  Pass the norm
        of the operator that produced the vector, so that products
        vanishing up to rounding do not count as new directions:

        >>> from quantraj.auxs.analysistools import _SpanBuilder
        >>> span = _SpanBuilder(2)
        >>> span.add([1., 0.])
        array([1.+0.j, 0.+0.j])
        >>> span.add([1e-17, 1e-17], scale=1.) is None
        True
        >>> span.add([1e-17, 1e-17]) is None
        False
        """
        vector = numpy.ravel(numpy.asarray(vector, dtype=complex))
        if scale is None:
            scale = numpy.linalg.norm(vector)
        if scale == 0.:
            return None
        residual = vector
        for dummy in range(2):
            residual = residual - numpy.dot(
                self.basis.T, numpy.dot(self.basis.conj(), residual))
        norm = numpy.linalg.norm(residual)
        if norm <= SPAN_TOLERANCE*scale:
            return None
        residual /= norm
        self.basis = numpy.vstack([self.basis, residual])
        return residual

    @property
    def full(self):
        """True, if the span is the complete space."""
        return len(self.basis) == self.size

    def __len__(self):
        return len(self.basis)


def _closure(generators, start, maxlength=None):
    """Return the span of `g_w s` for all words `w` over the generators
    (up to length `maxlength`) and all start vectors `s`."""
    start = [numpy.asarray(s, dtype=complex) for s in start]
    shape = start[0].shape
    span = _SpanBuilder(start[0].size)
    scale = max(numpy.linalg.norm(generator) for generator in generators)
    frontier = [res for res in (span.add(s) for s in start)
                if res is not None]
    length = 0
    while frontier and not span.full:
        if (maxlength is not None) and (length >= maxlength):
            break
        length += 1
        newfrontier = []
        for vector in frontier:
            vector = vector.reshape(shape)
            for generator in generators:
                residual = span.add(numpy.dot(generator, vector), scale)
                if residual is not None:
                    newfrontier.append(residual)
        frontier = newfrontier
    return span


def _kraus(channel):
    if isinstance(channel, linalgtools.KrausChannel):
        return channel.kraus
    return numpy.asarray(channel, dtype=complex)


def generated_algebra_dim(channel):
    """Return the dimension of the unital algebra generated by the Kraus
    operators of the given channel (or the given operators themselves).

    The dimension equals `d²` exactly if the operators have no common
    nontrivial invariant subspace:

    >>> from quantraj.auxs.analysistools import generated_algebra_dim
    >>> from quantraj.channels import example2
    >>> generated_algebra_dim(example2.pre_similarity_kraus())
    9
    >>> generated_algebra_dim([numpy.diag([1., 0.]), numpy.diag([0., 2.])])
    2
    >>> generated_algebra_dim([numpy.eye(2)])
    1
    """
    kraus = _kraus(channel)
    dim = kraus.shape[1]
    return len(_closure(kraus, [numpy.eye(dim)]))


def _invariant_subspace(kraus, rng, trials=5):
    dim = kraus.shape[1]
    algebra = _closure(kraus, [numpy.eye(dim)]).basis
    for dummy in range(trials):
        coefs = (rng.standard_normal(len(algebra)) +
                 1j*rng.standard_normal(len(algebra)))
        element = numpy.dot(coefs, algebra).reshape(dim, dim)
        for vector in numpy.linalg.eig(element)[1].T:
            orbit = _closure(kraus, [vector], maxlength=dim-1)
            if len(orbit) < dim:
                return orbit.basis.T
    return None


def is_irreducible(channel, rng=None):
    """Return whether the given channel is irreducible, together with an
    orthonormal basis (as columns) of a proper invariant subspace if not.

    >>> from quantraj.auxs.analysistools import is_irreducible
    >>> from quantraj.core.linalgtools import KrausChannel, validate
    >>> v1 = numpy.array([[1., 1.], [0., 0.]])/numpy.sqrt(2.)
    >>> v2 = numpy.array([[1., -1.], [0., 0.]])/numpy.sqrt(2.)
    >>> channel = KrausChannel([v1, v2])
    >>> validate(channel).ok
    True
    >>> flag, witness = is_irreducible(channel)
    >>> flag
    False
    >>> numpy.round(numpy.abs(witness), 6)
    array([[1.],
           [0.]])
    """
    kraus = _kraus(channel)
    dim = kraus.shape[1]
    if generated_algebra_dim(kraus) == dim**2:
        return True, None
    rng = numpy.random.default_rng(0) if rng is None else rng
    return False, _invariant_subspace(kraus, rng)


class PeripheralDecomposition(object):
    """Cyclic orthogonal resolution `P_0, ..., P_{m−1}` of the identity
    with `Φ(P_i) = P_{i−1 mod m}`."""

    def __init__(self, projections):
        self.projections = [linalgtools._readonly(numpy.array(p))
                            for p in projections]

    @property
    def period(self):
        """Number `m` of projections."""
        return len(self.projections)

    @property
    def dims(self):
        """Dimensions of the subspaces `E_i` the projections project on."""
        return [int(round(numpy.trace(p).real)) for p in self.projections]

    def to_dict(self):
        """Return the JSON-ready summary of the decomposition."""
        return {'period': self.period, 'dims': self.dims,
                'projections': [linalgtools.matrix_to_pairs(p)
                                for p in self.projections]}

    def __repr__(self):
        return 'PeripheralDecomposition(period=%d, dims=%s)' % (
            self.period, self.dims)


def peripheral_eigenvalues(channel):
    """Return the eigenvalues of the superoperator with modulus of at
    least `1 − 1e-7`, sorted by their argument in `[0, 2π)`.

    >>> from quantraj.auxs.analysistools import peripheral_eigenvalues
    >>> from quantraj.channels import swap
    >>> from quantraj.core.objecttools import round_
    >>> round_(peripheral_eigenvalues(swap.channel()))
    1.0, -1.0
    """
    values = numpy.linalg.eigvals(linalgtools.superoperator_matrix(channel))
    values = values[numpy.abs(values) >= 1.-PERIPHERAL_CUTOFF]
    angles = numpy.mod(numpy.round(numpy.angle(values), 9), 2.*numpy.pi)
    return values[numpy.argsort(angles)]


def _cyclic_projections(channel, period):
    dim = channel.dim
    omega = numpy.exp(2j*numpy.pi/period)
    values, vectors = numpy.linalg.eig(linalgtools.heisenberg_matrix(channel))
    unitary = vectors[:, numpy.argmin(numpy.abs(values-omega))]
    unitary = unitary.reshape(dim, dim)
    unitary /= numpy.sqrt(numpy.trace(numpy.dot(unitary.conj().T,
                                                unitary)).real/dim)
    phase = numpy.linalg.eigvals(unitary)[0]
    unitary /= phase/abs(phase)
    projections = []
    for idx in range(period):
        proj = sum(omega**(-idx*jdx) *
                   numpy.linalg.matrix_power(unitary, jdx)
                   for jdx in range(period))/period
        projections.append((proj+proj.conj().T)/2.)
    return projections


def _check_projections(channel, projections):
    dim = channel.dim
    deviation = numpy.linalg.norm(sum(projections)-numpy.eye(dim))
    if deviation > 1e-8:
        raise objecttools.PeriodicityError(
            'The reconstructed projections sum up to the identity only '
            'within %s.' % objecttools.repr_(deviation))
    for (idx, proj) in enumerate(projections):
        deviation = numpy.linalg.norm(numpy.dot(proj, proj)-proj)
        if deviation > 1e-8:
            raise objecttools.PeriodicityError(
                'The reconstructed matrix P_%d is not a projection '
                '(deviation %s).' % (idx, objecttools.repr_(deviation)))
        deviation = numpy.linalg.norm(
            linalgtools.apply_heisenberg(channel, proj) - projections[idx-1])
        if deviation > PERIPHERAL_CUTOFF:
            raise objecttools.PeriodicityError(
                'The channel maps P_%d to P_%d only within %s.'
                % (idx, (idx-1) % len(projections),
                   objecttools.repr_(deviation)))


def period_and_decomposition(channel):
    """Return the period `m` of the given irreducible channel and its
    :class:`PeripheralDecomposition`.

    For the swap channel, the projections are the ones on the two basis
    vectors:

    >>> from quantraj.auxs.analysistools import period_and_decomposition
    >>> from quantraj.channels import depolarizing, swap
    >>> period, decomposition = period_and_decomposition(swap.channel())
    >>> decomposition
    PeripheralDecomposition(period=2, dims=[1, 1])
    >>> sorted(tuple(int(round(x)) for x in numpy.diag(p).real)
    ...        for p in decomposition.projections)
    [(0, 1), (1, 0)]
    >>> period_and_decomposition(depolarizing.channel(2, .5))[0]
    1

    Reducible channels are rejected:

    >>> from quantraj.core.linalgtools import KrausChannel
    >>> period_and_decomposition(KrausChannel([numpy.eye(2)], name='id'))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.NotIrreducibleError: While trying to determine the period of channel `id`, the following error occured: The channel is not irreducible.
    """
    try:
        if not is_irreducible(channel)[0]:
            raise objecttools.NotIrreducibleError(
                'The channel is not irreducible.')
        period = len(peripheral_eigenvalues(channel))
        if period == 1:
            projections = [numpy.eye(channel.dim, dtype=complex)]
        else:
            projections = _cyclic_projections(channel, period)
            _check_projections(channel, projections)
        return period, PeripheralDecomposition(projections)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to determine the period of channel `%s`'
            % channel.name)


def _positivity_states(dim, nrandom, rng):
    states = [numpy.eye(dim)[idx] for idx in range(dim)]
    vectors = (rng.standard_normal((nrandom, dim)) +
               1j*rng.standard_normal((nrandom, dim)))
    states.extend(vectors/numpy.linalg.norm(vectors, axis=1)[:, None])
    return numpy.array([numpy.outer(s, s.conj()) for s in states])


def positivity_index(channel, max_power=None, nrandom=50, rng=None):
    """Return the smallest power `n` for which `Φ*^n(|x⟩⟨x|)` is positive
    definite for all basis vectors and `nrandom` random states, or None if
    no power up to `max_power` (default `2d²`) qualifies.

    >>> from quantraj.auxs.analysistools import positivity_index
    >>> from quantraj.channels import counterexample, swap
    >>> positivity_index(counterexample.channel())
    3
    >>> positivity_index(swap.channel()) is None
    True
    """
    kraus = channel.kraus
    dim = channel.dim
    max_power = 2*dim**2 if max_power is None else max_power
    rng = numpy.random.default_rng(0) if rng is None else rng
    states = _positivity_states(dim, nrandom, rng)
    for power in range(1, max_power+1):
        states = numpy.einsum('iab,sbc,idc->sad', kraus, states, kraus.conj())
        states /= numpy.trace(states, axis1=1, axis2=2).real[:, None, None]
        if numpy.min(numpy.linalg.eigvalsh(states)) > POSITIVITY_THRESHOLD:
            return power
    return None


def is_primitive(channel, crosscheck=True):
    """Return whether the given channel is primitive, i.e. irreducible
    with period one.

    If `crosscheck` is True, the result is compared with the existence of
    a positivity improving power (see :func:`positivity_index`), which is
    searched for starting from power `(d−1)²+1`; disagreements are
    reported by a :class:`~quantraj.core.objecttools.QuanTrajWarning`.

    >>> from quantraj.auxs.analysistools import is_primitive
    >>> from quantraj.channels import example1, projection
    >>> is_primitive(example1.channel()), is_primitive(projection.channel())
    (True, True)
    """
    primitive = (is_irreducible(channel)[0] and
                 (period_and_decomposition(channel)[0] == 1))
    if crosscheck:
        dim = channel.dim
        power = positivity_index(channel, max_power=max(
            2*dim**2, (dim-1)**2+1))
        if primitive != (power is not None):
            warnings.warn(
                'The spectral primitivity test of channel `%s` returns %s, '
                'but a positivity improving power has %sbeen found.'
                % (channel.name, primitive,
                   '' if power is not None else 'not '),
                objecttools.QuanTrajWarning)
    return primitive


def _word_levels(kraus, vector, length):
    dims = []
    level = numpy.array([vector], dtype=complex)
    for dummy in range(length+1):
        if len(level):
            level = linalg.orth(level.T, rcond=SPAN_TOLERANCE).T
        dims.append(len(level))
        level = numpy.array([numpy.dot(v, x) for x in level for v in kraus])
    return dims


def word_span_dims(channel, vector, length):
    """Return the dimensions of `span{v_w x : |w| = j}` for `j = 0..n`.

    For the counterexample channel, the orbit of `e1` needs two steps to
    fill the whole space after three steps:

    >>> from quantraj.auxs.analysistools import word_span_dims
    >>> from quantraj.channels import counterexample
    >>> word_span_dims(counterexample.channel(), [1., 0.], 3)
    [1, 1, 1, 2]
    """
    return _word_levels(channel.kraus, numpy.asarray(vector), length)


def primitivity_index(channel, max_length=None):
    """Return the smallest `n` with `span{v_w : |w| = n} = M_d(C)`, or
    None if there is no such `n` up to `max_length` (default `d⁴`).

    >>> from quantraj.auxs.analysistools import primitivity_index
    >>> from quantraj.channels import counterexample, swap
    >>> primitivity_index(counterexample.channel())
    3
    >>> primitivity_index(swap.channel()) is None
    True
    """
    kraus = channel.kraus
    dim = channel.dim
    max_length = dim**4 if max_length is None else max_length
    level = numpy.array([v.ravel() for v in kraus])
    for length in range(1, max_length+1):
        level = linalg.orth(level.T, rcond=SPAN_TOLERANCE).T
        if len(level) == dim**2:
            return length
        level = numpy.array([numpy.dot(v, x.reshape(dim, dim)).ravel()
                             for x in level for v in kraus])
    return None


class DiagnosticResult(object):
    """Outcome of :func:`positivity_improving_diagnostic`: the verdict
    (`improving`, `counterexample` or `inconclusive`), the smallest
    eigenvalue found and the state attaining it."""

    def __init__(self, verdict, minimum, state):
        self.verdict = verdict
        self.minimum = minimum
        self.state = state

    def to_dict(self):
        """Return the JSON-ready summary of the result."""
        return {'verdict': self.verdict, 'minimum': self.minimum,
                'state': linalgtools.matrix_to_pairs(self.state.rep)}

    def __repr__(self):
        return 'DiagnosticResult(verdict=%r, minimum=%s, state=%r)' % (
            self.verdict, objecttools.repr_(self.minimum), self.state)


def _smallest_output_eigenvalue(channel, vector):
    projector = numpy.outer(vector, vector.conj())
    return float(numpy.linalg.eigvalsh(
        linalgtools.apply_schrodinger(channel, projector))[0])


def positivity_improving_diagnostic(channel, restarts=200, rng=None):
    """Search for a state `x̂` minimizing the smallest eigenvalue of
    `Φ*(|x⟩⟨x|)` by multi-start Nelder-Mead optimization on the sphere.

    A minimum below 1e-9 gives a counterexample to positivity improvement,
    a minimum above 1e-6 suggests the channel is positivity improving:

    >>> from quantraj.auxs.analysistools import (
    ...     positivity_improving_diagnostic)
    >>> from quantraj.channels import depolarizing, example1
    >>> positivity_improving_diagnostic(depolarizing.channel(2, .5),
    ...                                 restarts=5).verdict
    'improving'

    With less Kraus operators than dimensions, every output has a kernel,
    and `ê1` serves as counterexample:

    >>> positivity_improving_diagnostic(example1.channel())
    DiagnosticResult(verdict='counterexample', minimum=0.0, state=ProjectiveState(1.0, 0.0, 0.0))
    """
    dim = channel.dim
    if channel.rank < dim:
        vector = numpy.eye(dim)[0]
        return DiagnosticResult(
            'counterexample', _smallest_output_eigenvalue(channel, vector),
            linalgtools.ProjectiveState(vector))
    rng = numpy.random.default_rng(0) if rng is None else rng

    def _objective(params):
        vector = params[:dim] + 1j*params[dim:]
        norm = numpy.linalg.norm(vector)
        if norm == 0.:
            return 1.
        return _smallest_output_eigenvalue(channel, vector/norm)

    best_value, best_params = numpy.inf, None
    for dummy in range(restarts):
        result = optimize.minimize(_objective, rng.standard_normal(2*dim),
                                   method='Nelder-Mead',
                                   options={'xatol': 1e-10, 'fatol': 1e-12})
        if result.fun < best_value:
            best_value, best_params = float(result.fun), result.x
        if best_value <= 1e-9:
            break
    state = linalgtools.ProjectiveState(best_params[:dim] +
                                        1j*best_params[dim:])
    if best_value <= 1e-9:
        verdict = 'counterexample'
    elif best_value >= 1e-6:
        verdict = 'improving'
    else:
        verdict = 'inconclusive'
    return DiagnosticResult(verdict, best_value, state)


def is_covariant(channel, unitary, tolerance=1e-9):
    """Return whether `Φ(U*XU) = U*Φ(X)U` holds on all matrix units.

    >>> from quantraj.auxs.analysistools import is_covariant
    >>> from quantraj.channels import depolarizing, example1
    >>> u = numpy.array([[1., 1.], [1j, -1j]])/numpy.sqrt(2.)
    >>> is_covariant(depolarizing.channel(2, .3), u)
    True
    >>> is_covariant(example1.channel(), numpy.diag([1., 1., -1.]))
    False
    >>> is_covariant(example1.channel(), numpy.eye(2))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The unitary has shape (2, 2), but the channel acts on 3×3 matrices.
    """
    unitary = numpy.asarray(unitary, dtype=complex)
    validtools.test_unitary(u=unitary)
    if unitary.shape != (channel.dim, channel.dim):
        raise objecttools.DimensionMismatchError(
            'The unitary has shape %s, but the channel acts on %d×%d '
            'matrices.' % (unitary.shape, channel.dim, channel.dim))
    adjoint = unitary.conj().T
    for idx in range(channel.dim):
        for jdx in range(channel.dim):
            unit = numpy.zeros((channel.dim, channel.dim), dtype=complex)
            unit[idx, jdx] = 1.
            lhs = linalgtools.apply_heisenberg(
                channel, numpy.dot(adjoint, numpy.dot(unit, unitary)))
            rhs = numpy.dot(adjoint, numpy.dot(
                linalgtools.apply_heisenberg(channel, unit), unitary))
            if numpy.linalg.norm(lhs-rhs) > tolerance:
                return False
    return True


class PurificationResult(object):
    """Outcome of :func:`purification_check`: the verdict (`holds`,
    `holds-by-nonsingularity`, `fails` or `unknown`), the dimension of the
    span of the words `v_w*v_w`, the target dimension `Σ (dim E_i)²` and,
    for failures, the dark projector found."""

    def __init__(self, verdict, span_dim=None, target_dim=None,
                 witness=None):
        self.verdict = verdict
        self.span_dim = span_dim
        self.target_dim = target_dim
        self.witness = witness

    def to_dict(self):
        """Return the JSON-ready summary of the result."""
        witness = self.witness
        if witness is not None:
            witness = linalgtools.matrix_to_pairs(witness)
        return {'verdict': self.verdict, 'span_dim': self.span_dim,
                'target_dim': self.target_dim, 'dark_projector': witness}

    def __repr__(self):
        return ('PurificationResult(verdict=%r, span_dim=%s, target_dim=%s)'
                % (self.verdict, self.span_dim, self.target_dim))


def purification_check(channel, randomization, word_length=None):
    """Check whether trajectories of the given channel purify under the
    given randomization.

    Non-singular randomizations guarantee purification:

    >>> from quantraj.auxs.analysistools import purification_check
    >>> from quantraj.core.linalgtools import Dirac, Haar, KrausChannel
    >>> from quantraj.channels import counterexample
    >>> purification_check(counterexample.channel(), Haar())
    PurificationResult(verdict='holds-by-nonsingularity', span_dim=None, target_dim=None)

    Otherwise, the span of the matrices `v_w*v_w` for the words `w` over
    the Kraus operators of all atoms of the randomization decides if it
    fills the block diagonal algebra of the cyclic decomposition:

    >>> purification_check(counterexample.channel(), Dirac.identity(2), 3)
    PurificationResult(verdict='holds', span_dim=2, target_dim=4)

    Multiples of unitaries never purify (the Pauli channel below has period
    two):

    >>> x = numpy.array([[0., 1.], [1., 0.]])
    >>> z = numpy.diag([1., -1.])
    >>> result = purification_check(
    ...     KrausChannel([x/numpy.sqrt(2.), z/numpy.sqrt(2.)]),
    ...     Dirac.identity(2))
    >>> result
    PurificationResult(verdict='fails', span_dim=1, target_dim=2)
    >>> result.witness.real
    array([[1., 0.],
           [0., 1.]])
    """
    try:
        if not is_irreducible(channel)[0]:
            raise objecttools.NotIrreducibleError(
                'The channel is not irreducible.')
        if randomization.is_nonsingular:
            return PurificationResult('holds-by-nonsingularity')
        dim = channel.dim
        word_length = 2*dim**2 if word_length is None else word_length
        weights, unitaries = randomization.atoms()
        kraus = numpy.concatenate(
            [linalgtools.reshuffle(channel, unitary).kraus
             for (weight, unitary) in zip(weights, unitaries) if weight > 0.])
        adjoints = kraus.conj().transpose(0, 2, 1)
        span = _SpanBuilder(dim**2)
        scale = max(numpy.linalg.norm(v)**2 for v in kraus)
        frontier = [span.add(numpy.eye(dim))]
        for dummy in range(word_length):
            newfrontier = []
            for matrix in frontier:
                matrix = matrix.reshape(dim, dim)
                for (v, vt) in zip(kraus, adjoints):
                    residual = span.add(
                        numpy.dot(vt, numpy.dot(matrix, v)), scale)
                    if residual is not None:
                        newfrontier.append(residual)
            frontier = newfrontier
            if not frontier:
                break
        decomposition = period_and_decomposition(channel)[1]
        target = sum(size**2 for size in decomposition.dims)
        if len(span) == target:
            return PurificationResult('holds', len(span), target)
        if len(span) == 1:
            return PurificationResult('fails', 1, target,
                                      numpy.eye(dim, dtype=complex))
        if dim == 2:
            return PurificationResult('holds', len(span), target)
        return PurificationResult('unknown', len(span), target)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to check the purification of channel `%s`'
            % channel.name)


def invariant_state(channel):
    """Return the invariant density matrix of the given channel, i.e. the
    trace normalized eigenvector of the superoperator for eigenvalue one.

    >>> from quantraj.auxs.analysistools import invariant_state
    >>> from quantraj.channels import projection
    >>> invariant_state(projection.channel())
    DensityMatrix(0.666667, 0.0; 0.0, 0.333333)
    """
    dim = channel.dim
    values, vectors = numpy.linalg.eig(
        linalgtools.superoperator_matrix(channel))
    vector = vectors[:, numpy.argmin(numpy.abs(values-1.))]
    matrix = vector.reshape(dim, dim)
    matrix = matrix/numpy.trace(matrix)
    return linalgtools.DensityMatrix((matrix+matrix.conj().T)/2.,
                                     tolerance=1e-8)


def perron_eigenvector(kraus):
    """Return the spectral radius `r` and the positive eigenmatrix `C`
    (with unit trace) of the completely positive map
    `T(X) = Σ w_i* X w_i`.

    >>> from quantraj.auxs.analysistools import perron_eigenvector
    >>> from quantraj.core.objecttools import round_
    >>> radius, matrix = perron_eigenvector([numpy.ones((2, 2))])
    >>> round_(radius)
    4.0
    >>> round_(matrix)
    0.5, 0.5
    0.5, 0.5
    """
    kraus = _kraus(kraus)
    dim = kraus.shape[1]
    operator = sum(numpy.kron(w.conj().T, w.T) for w in kraus)
    values, vectors = numpy.linalg.eig(operator)
    idx = numpy.argmax(values.real)
    matrix = vectors[:, idx].reshape(dim, dim)
    matrix = matrix/numpy.trace(matrix)
    return float(values[idx].real), (matrix+matrix.conj().T)/2.


def similarity_normalized(kraus, name=None):
    """Return the channel with the Kraus operators
    `v_i = r^(−1/2) C^(1/2) w_i C^(−1/2)`, which satisfy `Σ v_i*v_i = Id`
    if `C` is positive definite (see :func:`perron_eigenvector`).

    >>> from quantraj.auxs.analysistools import similarity_normalized
    >>> from quantraj.core.linalgtools import validate
    >>> w1 = numpy.array([[1., 1.], [0., 1.]])
    >>> w2 = numpy.array([[0., 0.], [2., 0.]])
    >>> validate(similarity_normalized([w1, w2])).ok
    True
    """
    radius, matrix = perron_eigenvector(kraus)
    values, vectors = numpy.linalg.eigh(matrix)
    if values[0] <= 0.:
        raise ValueError(
            'The Perron eigenmatrix is not positive definite (smallest '
            'eigenvalue %s).' % objecttools.repr_(values[0]))
    root = numpy.dot(vectors*numpy.sqrt(values), vectors.conj().T)
    return linalgtools.KrausChannel(
        linalgtools.conjugate_channel(_kraus(kraus), root)/numpy.sqrt(radius),
        name=name)


class ErgodicityReport(object):
    """Summary of all ergodicity properties of a channel as determined by
    :func:`analyze`."""

    def __init__(self, **kwargs):
        self.irreducible = kwargs['irreducible']
        self.witness_subspace = kwargs.get('witness_subspace')
        self.period = kwargs.get('period')
        self.decomposition = kwargs.get('decomposition')
        self.primitive = kwargs['primitive']
        self.algebra_dim = kwargs['algebra_dim']
        self.peripheral_eigenvalues = kwargs.get('peripheral_eigenvalues')
        self.invariant_state = kwargs.get('invariant_state')
        self.primitivity_index = kwargs.get('primitivity_index')
        self.positivity = kwargs.get('positivity')
        self.purification = kwargs.get('purification')

    def to_dict(self):
        """Return the JSON-ready version of the report (complex numbers as
        [re, im] pairs, unknown periods as `"unknown"`)."""
        def _optional(value, converter):
            return None if value is None else converter(value)
        return {
            'irreducible': self.irreducible,
            'witness_subspace': _optional(self.witness_subspace,
                                          linalgtools.matrix_to_pairs),
            'period': 'unknown' if self.period is None else self.period,
            'subspace_dims': _optional(self.decomposition,
                                       lambda d: d.dims),
            'primitive': self.primitive,
            'algebra_dim': self.algebra_dim,
            'peripheral_eigenvalues': _optional(
                self.peripheral_eigenvalues,
                lambda v: [[float(x.real), float(x.imag)] for x in v]),
            'invariant_state': _optional(
                self.invariant_state,
                lambda rho: linalgtools.matrix_to_pairs(rho.mat)),
            'primitivity_index': self.primitivity_index,
            'positivity': _optional(self.positivity, lambda p: p.to_dict()),
            'purification': _optional(self.purification,
                                      lambda p: p.to_dict())}

    def __repr__(self):
        period = 'unknown' if self.period is None else self.period
        return ('ErgodicityReport(irreducible=%s, period=%s, primitive=%s, '
                'algebra_dim=%d)' % (self.irreducible, period,
                                     self.primitive, self.algebra_dim))


def analyze(channel, randomization=None, restarts=200):
    """Apply all classifiers of this module to the given channel and
    return an :class:`ErgodicityReport`.

    >>> from quantraj.auxs.analysistools import analyze
    >>> from quantraj.channels import swap
    >>> report = analyze(swap.channel(), restarts=3)
    >>> report
    ErgodicityReport(irreducible=True, period=2, primitive=False, algebra_dim=4)
    >>> report.primitivity_index is None
    True
    """
    try:
        irreducible, witness = is_irreducible(channel)
        period, decomposition = None, None
        if irreducible:
            period, decomposition = period_and_decomposition(channel)
        purification = None
        if (randomization is not None) and irreducible:
            purification = purification_check(channel, randomization)
        return ErgodicityReport(
            irreducible=irreducible,
            witness_subspace=witness,
            period=period,
            decomposition=decomposition,
            primitive=irreducible and (period == 1),
            algebra_dim=generated_algebra_dim(channel),
            peripheral_eigenvalues=peripheral_eigenvalues(channel),
            invariant_state=invariant_state(channel),
            primitivity_index=primitivity_index(channel),
            positivity=positivity_improving_diagnostic(
                channel, restarts=restarts),
            purification=purification)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to analyze channel `%s`' % channel.name)


autodoctools.autodoc_module()
