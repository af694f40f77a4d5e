# -*- coding: utf-8 -*-
"""This module implements the basic objects all other QuanTraj modules
build on: rays of complex projective space (:class:`ProjectiveState`),
density matrices (:class:`DensityMatrix`), quantum channels given by Kraus
operators (:class:`KrausChannel`) and the randomizations of their Kraus
decompositions (:class:`RandomizationSpec` and its subclasses).

A channel acts in the Heisenberg picture as `Φ(X) = Σ v_i* X v_i` and in
the Schrödinger picture as `Φ*(ρ) = Σ v_i ρ v_i*`:

>>> from quantraj.core.linalgtools import *
>>> from quantraj.core.objecttools import round_
>>> v1 = numpy.array([[0., 0.], [1., 0.]])
>>> v2 = numpy.array([[0., 1.], [0., 1.]])/numpy.sqrt(2.)
>>> channel = KrausChannel([v1, v2])
>>> validate(channel)
ValidationReport(ok=True, deviation=0.0)
>>> round_(apply_schrodinger(channel, numpy.diag([0., 1.])), decimals=6)
0.5, 0.5
0.5, 0.5

All objects are immutable after construction; their arrays are flagged
read-only.
"""
# import...
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.auxs import validtools
# from quantraj.core import trajectorytools (actual import commands moved
# to different functions below to avoid circular dependencies)

_PHASE_CUTOFF = 1e-13
"""Coordinates of normalized vectors below this modulus are set to zero
before the canonical phase is determined."""

KERNEL_HIT_THRESHOLD = 1e-14
"""States `w·x̂` are undefined when `‖wx‖` falls below this value."""

RANK_THRESHOLD = 1e-12
"""Eigenvalues below this fraction of the largest one count as zero."""


def _readonly(array):
    array.flags.writeable = False
    return array


def as_matrix(values):
    """Return the given values as a complex two-dimensional numpy array,
    accepting nested lists of numbers or of `[re, im]` pairs.

    >>> from quantraj.core.linalgtools import as_matrix
    >>> as_matrix([[[1., 0.], [0., -1.]], [[0., 1.], [2., 0.]]])
    array([[1.+0.j, 0.-1.j],
           [0.+1.j, 2.+0.j]])
    """
    array = numpy.asarray(values)
    if (array.ndim == 3) and (array.shape[-1] == 2) and \
            not numpy.iscomplexobj(array):
        array = array[..., 0] + 1j*array[..., 1]
    return numpy.array(array, dtype=complex, ndmin=2)


def matrix_to_pairs(matrix):
    """Return a row-major nested list of `[re, im]` pairs, the format of
    complex matrices in QuanTraj's JSON files.

    >>> from quantraj.core.linalgtools import matrix_to_pairs
    >>> matrix_to_pairs(numpy.array([[1., 1j]]))
    [[[1.0, 0.0], [0.0, 1.0]]]

    Vectors become flat lists of pairs:

    >>> matrix_to_pairs(numpy.array([0., 2j]))
    [[0.0, 0.0], [0.0, 2.0]]
    """
    matrix = numpy.asarray(matrix, dtype=complex)
    if matrix.ndim == 1:
        return [[float(value.real), float(value.imag)] for value in matrix]
    return [[[float(value.real), float(value.imag)] for value in row]
            for row in matrix]


def canonicalize_rows(vectors):
    """Return the canonical representatives of the rays spanned by the
    rows of the given array.

    Each row is normalized and multiplied with the phase factor that makes
    its first nonzero coordinate real and positive:

    >>> from quantraj.core.linalgtools import canonicalize_rows
    >>> from quantraj.core.objecttools import round_
    >>> reps = canonicalize_rows([[0., 2j], [1.+1j, 1.+1j]])
    >>> round_(reps, decimals=6)
    0.0, 1.0
    0.707107, 0.707107

    Zero rows cannot be canonicalized:

    >>> canonicalize_rows([[1., 0.], [0., 0.]])
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.ZeroVectorError: Row 1 of the given array is the zero vector, which does not define a ray.
    """
    vectors = numpy.array(vectors, dtype=complex, ndmin=2)
    norms = numpy.linalg.norm(vectors, axis=1)
    zeros = numpy.where(~(norms > 0.))[0]
    if len(zeros):
        raise objecttools.ZeroVectorError(
            'Row %d of the given array is the zero vector, which does not '
            'define a ray.' % zeros[0])
    vectors /= norms[:, numpy.newaxis]
    vectors[numpy.abs(vectors) < _PHASE_CUTOFF] = 0.
    vectors /= numpy.linalg.norm(vectors, axis=1)[:, numpy.newaxis]
    rows = numpy.arange(len(vectors))
    idxs = numpy.argmax(vectors != 0., axis=1)
    leads = vectors[rows, idxs]
    vectors *= (numpy.abs(leads)/leads)[:, numpy.newaxis]
    vectors[rows, idxs] = numpy.abs(vectors[rows, idxs])
    return vectors


class ProjectiveState(object):
    """Canonical representative of a ray `x̂ = {zx: z ∈ C}` of C^d.

    The representative has unit norm and its first nonzero coordinate is
    real and positive, so that two states describe the same ray if and only
    if their representatives agree:

    >>> from quantraj.core.linalgtools import ProjectiveState
    >>> ProjectiveState([1j, 1j]) == ProjectiveState([2., 2.])
    True
    >>> ProjectiveState([0., 2j])
    ProjectiveState(0.0, 1.0)
    """

    def __init__(self, vector):
        try:
            vector = numpy.asarray(vector, dtype=complex)
            if vector.ndim != 1:
                raise objecttools.DimensionMismatchError(
                    'A state vector must be one-dimensional, but the given '
                    'one has shape %s.' % (vector.shape,))
            self._rep = _readonly(canonicalize_rows(vector)[0])
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to canonicalize a state vector')

    @classmethod
    def from_canonical(cls, rep):
        """Wrap a vector already known to be canonical, e.g. a row returned
        by :func:`canonicalize_rows`, without further checks."""
        state = cls.__new__(cls)
        state._rep = _readonly(numpy.array(rep, dtype=complex))
        return state

    @classmethod
    def basis(cls, dim, idx):
        """Return the ray of the `idx`-th (0-based) canonical basis
        vector of C^dim.

        >>> from quantraj.core.linalgtools import ProjectiveState
        >>> ProjectiveState.basis(3, 1)
        ProjectiveState(0.0, 1.0, 0.0)
        """
        vector = numpy.zeros(dim, dtype=complex)
        vector[idx] = 1.
        return cls.from_canonical(vector)

    @property
    def rep(self):
        """The canonical representative (read-only)."""
        return self._rep

    @property
    def dim(self):
        """Dimension of the underlying Hilbert space."""
        return len(self._rep)

    @property
    def projector(self):
        """The rank one projector `|x⟩⟨x|`."""
        return numpy.outer(self._rep, self._rep.conj())

    def act(self, matrix):
        """Return the state `w·x̂`, which is only defined if `wx ≠ 0`.

        >>> from quantraj.core.linalgtools import ProjectiveState
        >>> import numpy
        >>> e1 = ProjectiveState.basis(2, 0)
        >>> e1.act(numpy.array([[0., 0.], [1j, 0.]]))
        ProjectiveState(0.0, 1.0)
        >>> e1.act(numpy.array([[0., 1.], [0., 0.]]))
        Traceback (most recent call last):
        ...
        quantraj.core.objecttools.KernelHitError: The matrix annihilates the state (norm of the image 0.0), so that its action is undefined.
        """
        image = numpy.dot(matrix, self._rep)
        norm = numpy.linalg.norm(image)
        if norm < KERNEL_HIT_THRESHOLD:
            raise objecttools.KernelHitError(
                'The matrix annihilates the state (norm of the image %s), '
                'so that its action is undefined.' % objecttools.repr_(norm))
        return ProjectiveState(image)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveState):
            return NotImplemented
        return ((self.dim == other.dim) and
                numpy.allclose(self._rep, other.rep, rtol=0., atol=1e-12))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'ProjectiveState(%s)' % objecttools.repr_values(self._rep)


def canonicalize(vector):
    """Return the :class:`ProjectiveState` of the given nonzero vector.

    >>> from quantraj.core.linalgtools import canonicalize
    >>> from quantraj.pub import options
    >>> options.reprdigits = 6
    >>> canonicalize([0., 2j])
    ProjectiveState(0.0, 1.0)
    >>> canonicalize(numpy.array([1.+1j, 1.+1j])/2.)
    ProjectiveState(0.707107, 0.707107)
    >>> canonicalize([0., 0.])
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.ZeroVectorError: While trying to canonicalize a state vector, the following error occured: Row 0 of the given array is the zero vector, which does not define a ray.
    """
    return ProjectiveState(vector)


def _check_dims(**kwargs):
    dims = set(kwargs.values())
    if len(dims) > 1:
        raise objecttools.DimensionMismatchError(
            'The dimensions of the following objects are not equal: %s.'
            % ', '.join('%s (%d)' % (name, dim)
                        for (name, dim) in sorted(kwargs.items())))


def fubini_distance(a, b):
    """Return the distance `√(1−|⟨a,b⟩|²)` of two rays.

    >>> from quantraj.core.linalgtools import fubini_distance, ProjectiveState
    >>> from quantraj.core.objecttools import round_
    >>> e1 = ProjectiveState.basis(2, 0)
    >>> round_(fubini_distance(e1, ProjectiveState([1., 1.])), decimals=6)
    0.707107
    >>> fubini_distance(e1, ProjectiveState.basis(3, 0))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The dimensions of the following objects are not equal: a (2), b (3).
    """
    _check_dims(a=a.dim, b=b.dim)
    overlap = abs(numpy.vdot(a.rep, b.rep))**2
    return float(numpy.sqrt(max(0., 1.-overlap)))


def fubini_distance_matrix(reps_a, reps_b):
    """Return the matrix of the pairwise distances between the rows of the
    two given arrays of (normalized) representatives."""
    reps_a = numpy.asarray(reps_a)
    reps_b = numpy.asarray(reps_b)
    _check_dims(a=reps_a.shape[1], b=reps_b.shape[1])
    overlaps = numpy.abs(numpy.dot(reps_a.conj(), reps_b.T))**2
    return numpy.sqrt(numpy.clip(1.-overlaps, 0., 1.))


class DensityMatrix(object):
    """Hermitian, positive semi-definite matrix of unit trace.

    >>> from quantraj.core.linalgtools import DensityMatrix
    >>> rho = DensityMatrix(numpy.diag([2./3., 1./3.]))
    >>> rho.rank
    2
    >>> DensityMatrix(numpy.diag([1., 1.]))
    Traceback (most recent call last):
    ...
    ValueError: While trying to define a density matrix, the following error occured: The trace of the matrix is 2.0 instead of one.
    """

    def __init__(self, matrix, tolerance=None):
        from quantraj.pub import options
        tolerance = options.tolerance if tolerance is None else tolerance
        try:
            matrix = numpy.array(matrix, dtype=complex)
            validtools.test_square(matrix=matrix)
            validtools.test_hermitian(tolerance=tolerance, matrix=matrix)
            matrix = (matrix+matrix.conj().T)/2.
            trace = numpy.trace(matrix).real
            if not abs(trace-1.) <= tolerance:
                raise ValueError(
                    'The trace of the matrix is %s instead of one.'
                    % objecttools.repr_(trace))
            values, vectors = numpy.linalg.eigh(matrix)
            if values[0] < -tolerance:
                raise ValueError(
                    'The matrix has the negative eigenvalue %s.'
                    % objecttools.repr_(values[0]))
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to define a density matrix')
        self._mat = _readonly(matrix)
        self._values = _readonly(numpy.clip(values[::-1], 0., None))
        self._vectors = _readonly(vectors[:, ::-1])

    @classmethod
    def from_state(cls, state):
        """Return the pure density matrix `|x⟩⟨x|` of the given state."""
        return cls(state.projector)

    @property
    def mat(self):
        """The matrix itself (read-only)."""
        return self._mat

    @property
    def dim(self):
        """Dimension of the underlying Hilbert space."""
        return len(self._mat)

    @property
    def eigen(self):
        """Eigenvalues in descending order (clipped at zero) and the
        corresponding orthonormal eigenvectors (as columns)."""
        return self._values, self._vectors

    def support(self, threshold=RANK_THRESHOLD):
        """Return the eigenvalues and eigenvectors spanning the support,
        i.e. those with eigenvalues larger than `threshold` times the
        largest eigenvalue.

        >>> from quantraj.core.linalgtools import DensityMatrix
        >>> values, vectors = DensityMatrix(numpy.diag([0., 1.])).support()
        >>> values
        array([1.])
        >>> numpy.abs(vectors)
        array([[0.],
               [1.]])
        """
        nmb = int(numpy.sum(self._values > threshold*self._values[0]))
        return self._values[:nmb], self._vectors[:, :nmb]

    @property
    def rank(self):
        """Number of eigenvalues above the relative rank threshold."""
        return len(self.support()[0])

    def __repr__(self):
        return 'DensityMatrix(%s)' % '; '.join(
            objecttools.repr_values(row) for row in self._mat)


class ValidationReport(object):
    """Result of :func:`validate`: the flag `ok` and the Frobenius norm of
    `Σ v_i*v_i − Id`."""

    def __init__(self, ok, deviation):
        self.ok = bool(ok)
        self.deviation = deviation

    def __repr__(self):
        return ('ValidationReport(ok=%s, deviation=%s)'
                % (self.ok, objecttools.repr_(self.deviation)))


class KrausChannel(object):
    """Quantum channel defined by its Kraus operators `v_1, ..., v_k`.

    The operators are stored as a read-only array of shape (k, d, d).
    Construction does not enforce `Σ v_i*v_i = Id`, which allows to handle
    general completely positive maps as well; use :func:`validate` or
    method :meth:`check` for that purpose.

    >>> from quantraj.core.linalgtools import KrausChannel
    >>> channel = KrausChannel([numpy.eye(2), numpy.eye(2)], name='twice')
    >>> channel
    KrausChannel(name='twice', dim=2, rank=2)
    >>> channel.check()
    Traceback (most recent call last):
    ...
    ValueError: The Kraus operators of channel `twice` violate Σ v_i*v_i = Id by 1.414214 (Frobenius norm).
    >>> KrausChannel([numpy.eye(2), numpy.eye(3)])
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: While trying to define a channel from Kraus operators, the following error occured: The shapes of the following objects are not equal: v_1 (2, 2), v_2 (3, 3).
    """

    def __init__(self, kraus, name=None):
        try:
            kraus = [numpy.array(v, dtype=complex) for v in kraus]
            if not kraus:
                raise ValueError('At least one Kraus operator is required.')
            names = ['v_%d' % (idx+1) for idx in range(len(kraus))]
            validtools.test_square(**dict(zip(names, kraus)))
            validtools.test_equal_shape(**dict(zip(names, kraus)))
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to define a channel from Kraus operators')
        self._kraus = _readonly(numpy.array(kraus))
        self.name = name
        self._deviation = None

    @property
    def kraus(self):
        """Kraus operators as a read-only array of shape (k, d, d)."""
        return self._kraus

    @property
    def dim(self):
        """Dimension `d` of the underlying Hilbert space."""
        return self._kraus.shape[1]

    @property
    def rank(self):
        """Number `k` of Kraus operators."""
        return self._kraus.shape[0]

    @property
    def deviation(self):
        """Frobenius norm of `Σ v_i*v_i − Id`."""
        if self._deviation is None:
            total = numpy.einsum('iba,ibc->ac', self._kraus.conj(),
                                 self._kraus)
            self._deviation = float(
                numpy.linalg.norm(total-numpy.eye(self.dim)))
        return self._deviation

    def check(self, tolerance=None):
        """Raise a ValueError if the operators do not define a quantum
        channel within the given tolerance (default: option `tolerance`)."""
        from quantraj.pub import options
        tolerance = options.tolerance if tolerance is None else tolerance
        if not self.deviation <= tolerance:
            raise ValueError(
                'The Kraus operators of channel `%s` violate Σ v_i*v_i = Id '
                'by %s (Frobenius norm).'
                % (self.name, objecttools.repr_(self.deviation, 6)))

    def __repr__(self):
        return ('KrausChannel(name=%r, dim=%d, rank=%d)'
                % (self.name, self.dim, self.rank))


def validate(channel, tolerance=None):
    """Return a :class:`ValidationReport` on the normalization
    `Σ v_i*v_i = Id` of the given channel.

    >>> from quantraj.core.linalgtools import KrausChannel, validate
    >>> validate(KrausChannel([numpy.eye(2), numpy.eye(2)]))
    ValidationReport(ok=False, deviation=1.414214)
    """
    from quantraj.pub import options
    tolerance = options.tolerance if tolerance is None else tolerance
    return ValidationReport(channel.deviation <= tolerance,
                            channel.deviation)


def _check_operand(channel, matrix, name):
    matrix = numpy.asarray(matrix, dtype=complex)
    if matrix.shape != (channel.dim, channel.dim):
        raise objecttools.DimensionMismatchError(
            'The %s has shape %s, but the channel acts on %d×%d matrices.'
            % (name, matrix.shape, channel.dim, channel.dim))
    return matrix


def apply_heisenberg(channel, matrix):
    """Return `Φ(X) = Σ v_i* X v_i`.

    >>> from quantraj.core.linalgtools import KrausChannel, apply_heisenberg
    >>> channel = KrausChannel([numpy.array([[0., 1.], [1., 0.]])])
    >>> apply_heisenberg(channel, numpy.diag([1., 0.])).real
    array([[0., 0.],
           [0., 1.]])
    >>> apply_heisenberg(channel, numpy.eye(3))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The observable has shape (3, 3), but the channel acts on 2×2 matrices.
    """
    matrix = _check_operand(channel, matrix, 'observable')
    return numpy.einsum('iba,bc,icd->ad', channel.kraus.conj(),
                        matrix, channel.kraus)


def apply_schrodinger(channel, matrix):
    """Return `Φ*(ρ) = Σ v_i ρ v_i*`."""
    matrix = _check_operand(channel, matrix, 'density matrix')
    return numpy.einsum('iab,bc,idc->ad', channel.kraus,
                        matrix, channel.kraus.conj())


def superoperator_matrix(channel):
    """Return the d²×d² matrix `Σ v_i ⊗ conj(v_i)` of `Φ*` acting on
    row-major vectorized matrices.

    >>> from quantraj.core.linalgtools import KrausChannel
    >>> from quantraj.core.linalgtools import superoperator_matrix
    >>> u = numpy.array([[0., 1j], [1., 0.]])
    >>> numpy.allclose(superoperator_matrix(KrausChannel([u])),
    ...                numpy.kron(u, u.conj()))
    True
    """
    return sum(numpy.kron(v, v.conj()) for v in channel.kraus)


def heisenberg_matrix(channel):
    """Return the d²×d² matrix of `Φ` acting on row-major vectorized
    matrices (the adjoint of :func:`superoperator_matrix`)."""
    return sum(numpy.kron(v.conj().T, v.T) for v in channel.kraus)


def reshuffle(channel, unitary):
    """Return the channel with the Kraus operators `v_j(u) = Σ_l u_jl v_l`,
    which defines the same map for every unitary `u`.

    >>> from quantraj.core.linalgtools import KrausChannel, reshuffle
    >>> from quantraj.core.linalgtools import superoperator_matrix
    >>> channel = KrausChannel([numpy.diag([1., 0.]), numpy.diag([0., 1.])])
    >>> u = numpy.array([[1., 1.], [1., -1.]])/numpy.sqrt(2.)
    >>> numpy.allclose(superoperator_matrix(reshuffle(channel, u)),
    ...                superoperator_matrix(channel))
    True
    """
    validtools.test_unitary(u=unitary)
    if len(unitary) != channel.rank:
        raise objecttools.DimensionMismatchError(
            'The unitary has shape %s, but the channel has %d Kraus '
            'operators.' % (numpy.shape(unitary), channel.rank))
    return KrausChannel(numpy.einsum('jl,lab->jab', unitary, channel.kraus),
                        name=channel.name)


def conjugate_channel(kraus, similarity):
    """Return the Kraus family `S v_i S^{-1}` for the invertible matrix `S`
    (the Kraus operators can be given as an array or a
    :class:`KrausChannel`).

    >>> from quantraj.core.linalgtools import conjugate_channel
    >>> from quantraj.core.objecttools import round_
    >>> kraus = conjugate_channel([[[0., 1.], [1., 0.]]],
    ...                           numpy.diag([2., 1.]))
    >>> round_(kraus[0])
    0.0, 2.0
    0.5, 0.0
    """
    if isinstance(kraus, KrausChannel):
        kraus = kraus.kraus
    kraus = numpy.asarray(kraus, dtype=complex)
    similarity = numpy.asarray(similarity, dtype=complex)
    return numpy.array([numpy.linalg.solve(similarity.T,
                                           numpy.dot(similarity, v).T).T
                        for v in kraus])


class RandomizationSpec(object):
    """Base class of the randomizations λ of the Kraus decomposition, i.e.
    of the probability measures on U(k) the probe bases `u` are drawn from.

    Subclasses implement :meth:`draw` and the weight of their Haar
    component.  Use :func:`randomization_from_dict` to read them from the
    `randomization` block of channel files.
    """

    variant = None
    haar_weight = 0.

    @property
    def is_nonsingular(self):
        """True, if the randomization has a Haar component of positive
        weight."""
        return self.haar_weight > 0.

    def draw(self, k, rng):
        """Draw a k×k unitary from the randomization."""
        raise NotImplementedError

    def atoms(self):
        """Return the weights and unitaries of the discrete part (the
        weights sum up to `1 − haar_weight`)."""
        return [], []

    def to_dict(self):
        """Return the JSON-ready `randomization` block."""
        raise NotImplementedError

    def _check_size(self, unitary, k):
        if len(unitary) != k:
            raise objecttools.DimensionMismatchError(
                'The randomization provides %d×%d unitaries, but the channel '
                'has %d Kraus operators.' % (len(unitary), len(unitary), k))


class Dirac(RandomizationSpec):
    """Randomization concentrated on the single unitary `u0` (the plain
    quantum trajectory of the Kraus decomposition `v(u0)`).

    >>> from quantraj.core.linalgtools import Dirac
    >>> Dirac(2.*numpy.eye(2))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.NotUnitaryError: While trying to define a Dirac randomization, the following error occured: The following matrices are not unitary: u0 (deviation 4.242641).
    """

    variant = 'dirac'

    def __init__(self, unitary):
        try:
            unitary = numpy.array(unitary, dtype=complex, ndmin=2)
            validtools.test_unitary(u0=unitary)
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to define a Dirac randomization')
        self.unitary = _readonly(unitary)

    @classmethod
    def identity(cls, k):
        """Randomization on the identity of U(k), i.e. no randomization
        at all."""
        return cls(numpy.eye(k))

    def draw(self, k, rng):
        self._check_size(self.unitary, k)
        return self.unitary

    def atoms(self):
        return [1.], [self.unitary]

    def to_dict(self):
        return {'type': 'dirac', 'u0': matrix_to_pairs(self.unitary)}

    def __repr__(self):
        return 'Dirac(k=%d)' % len(self.unitary)


class FiniteMixture(RandomizationSpec):
    """Randomization on finitely many unitaries with the given weights."""

    variant = 'mixture'

    def __init__(self, weights, unitaries):
        try:
            weights = numpy.array(weights, dtype=float)
            unitaries = [numpy.array(u, dtype=complex, ndmin=2)
                         for u in unitaries]
            if len(weights) != len(unitaries):
                raise ValueError(
                    'The number of weights (%d) and of unitaries (%d) '
                    'differ.' % (len(weights), len(unitaries)))
            validtools.test_probabilities(weights=weights)
            names = ['u_%d' % (idx+1) for idx in range(len(unitaries))]
            validtools.test_unitary(**dict(zip(names, unitaries)))
            validtools.test_equal_shape(**dict(zip(names, unitaries)))
        except BaseException:
            objecttools.augmentexcmessage(
                'While trying to define a finite mixture randomization')
        self.weights = _readonly(weights/numpy.sum(weights))
        self.unitaries = _readonly(numpy.array(unitaries))

    def draw(self, k, rng):
        self._check_size(self.unitaries[0], k)
        return self.unitaries[rng.choice(len(self.weights), p=self.weights)]

    def atoms(self):
        return list(self.weights), list(self.unitaries)

    def to_dict(self):
        return {'type': 'mixture',
                'weights': [float(weight) for weight in self.weights],
                'unitaries': [matrix_to_pairs(u) for u in self.unitaries]}

    def __repr__(self):
        return 'FiniteMixture(n=%d, k=%d)' % (len(self.weights),
                                              len(self.unitaries[0]))


class Haar(RandomizationSpec):
    """Uniform randomization over U(k), which is non-singular."""

    variant = 'haar'
    haar_weight = 1.

    def draw(self, k, rng):
        from quantraj.core import trajectorytools
        return trajectorytools.sample_haar_unitary(k, rng)

    def to_dict(self):
        return {'type': 'haar'}

    def __repr__(self):
        return 'Haar()'


class Convex(RandomizationSpec):
    """Convex combination `h·Haar + (1−h)·atoms` of the Haar measure and a
    :class:`Dirac` or :class:`FiniteMixture` randomization.

    >>> from quantraj.core.linalgtools import Convex, Dirac
    >>> rand = Convex(.5, Dirac.identity(2))
    >>> rand.is_nonsingular, rand.atoms()[0]
    (True, [0.5])
    >>> Convex(1.5, Dirac.identity(2))
    Traceback (most recent call last):
    ...
    ValueError: The Haar weight of a convex randomization must lie in [0, 1], but 1.5 is given.
    """

    variant = 'convex'

    def __init__(self, haar_weight, atoms):
        haar_weight = float(haar_weight)
        if not 0. <= haar_weight <= 1.:
            raise ValueError(
                'The Haar weight of a convex randomization must lie in '
                '[0, 1], but %s is given.' % objecttools.repr_(haar_weight))
        if not isinstance(atoms, (Dirac, FiniteMixture)):
            raise TypeError(
                'The atoms of a convex randomization must be given as a '
                '`Dirac` or `FiniteMixture` object, not as a `%s` object.'
                % objecttools.classname(atoms))
        self.haar_weight = haar_weight
        self.discrete = atoms

    def draw(self, k, rng):
        if rng.random() < self.haar_weight:
            from quantraj.core import trajectorytools
            return trajectorytools.sample_haar_unitary(k, rng)
        return self.discrete.draw(k, rng)

    def atoms(self):
        weights, unitaries = self.discrete.atoms()
        return [(1.-self.haar_weight)*weight for weight in weights], unitaries

    def to_dict(self):
        return {'type': 'convex', 'haar_weight': self.haar_weight,
                'atoms': self.discrete.to_dict()}

    def __repr__(self):
        return 'Convex(haar_weight=%s, atoms=%r)' % (
            objecttools.repr_(self.haar_weight), self.discrete)


def randomization_from_dict(dict_):
    """Return the :class:`RandomizationSpec` described by the given
    `randomization` block of a channel file.

    >>> from quantraj.core.linalgtools import randomization_from_dict
    >>> randomization_from_dict({'type': 'haar'})
    Haar()
    >>> randomization_from_dict(
    ...     {'type': 'convex', 'haar_weight': .5,
    ...      'atoms': {'type': 'dirac', 'u0': [[[1, 0], [0, 0]],
    ...                                        [[0, 0], [1, 0]]]}})
    Convex(haar_weight=0.5, atoms=Dirac(k=2))
    >>> randomization_from_dict({'type': 'sinkhorn'})
    Traceback (most recent call last):
    ...
    ValueError: While trying to read a randomization block, the following error occured: Unknown randomization type `sinkhorn`, available types are: convex, dirac, haar, mixture.
    """
    try:
        type_ = dict_.get('type')
        if type_ == 'haar':
            return Haar()
        if type_ == 'dirac':
            return Dirac(as_matrix(dict_['u0']))
        if type_ == 'mixture':
            return FiniteMixture(dict_['weights'],
                                 [as_matrix(u) for u in dict_['unitaries']])
        if type_ == 'convex':
            return Convex(dict_['haar_weight'],
                          randomization_from_dict(dict_['atoms']))
        raise ValueError(
            'Unknown randomization type `%s`, available types are: '
            'convex, dirac, haar, mixture.' % type_)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to read a randomization block')


autodoctools.autodoc_module()
