# -*- coding: utf-8 -*-
"""This module implements exact-arithmetic certificates of multiplicative
primitivity.

A channel with Kraus operators `v_1, ..., v_k` is multiplicatively
primitive with power `p` if the products `Π_l (Σ_i z_{kl+i} v_i)` of `p`
elements of `span{v_i}` reach every matrix (or, weaker, if their images of
every nonzero vector `x` reach all of `C^d`).  Both properties follow from
the algebraic independence of the polynomial entries of these products,
which in turn follows from a full-rank Jacobian at a single point.  All
computations are carried out over the field of Gaussian rationals, so that
the resulting ranks and determinants are proofs, not estimates.

Irrational common factors of the Kraus operators (like `√2/2`) do not
affect any rank and can be dropped beforehand:

>>> from quantraj.auxs.exacttools import *
>>> from quantraj.channels import example1
>>> certificate = certify_full_space(example1.kraus_exact(), 1,
...                                  points=[[1, 2]])
>>> certificate
Certificate(kind='full-space', verdict='not-at-these-points', p=1, rank=2)
"""
# import...
# ...from standard library
from __future__ import division, print_function
import fractions
# ...from site-packages
import numpy
import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.matrices import DomainMatrix
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import magictools
from quantraj.core import objecttools


def gaussian_rational(value):
    """Convert the given value to an element of the field of Gaussian
    rationals.

    Integers, fractions, strings (like `'3/4'` or `'1/2 + 3*I'`) and
    `[re, im]` pairs of such values are supported:

    >>> from quantraj.auxs.exacttools import gaussian_rational, to_strings
    >>> to_strings(gaussian_rational('3/4'))
    ['3/4', '0']
    >>> to_strings(gaussian_rational(['1/2', -3]))
    ['1/2', '-3']
    >>> gaussian_rational('x')
    Traceback (most recent call last):
    ...
    ValueError: While trying to convert `x` to a Gaussian rational, the following error occured: The value is not a Gaussian rational number.
    """
    if QQ_I.of_type(value):
        return value
    try:
        if isinstance(value, (list, tuple)):
            real, imag = (_rational(part) for part in value)
            expr = real + sympy.I*imag
        elif isinstance(value, str):
            expr = sympy.sympify(value, rational=True)
        else:
            expr = _rational(value)
        try:
            return QQ_I.from_sympy(sympy.expand(expr))
        except BaseException:
            raise ValueError('The value is not a Gaussian rational number.')
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to convert `%s` to a Gaussian rational' % (value,))


def _rational(value):
    if isinstance(value, fractions.Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return sympy.Rational(value.strip())
    if isinstance(value, (int, numpy.integer)):
        return sympy.Integer(int(value))
    return sympy.Rational(value)


def to_strings(value):
    """Return the real and the imaginary part of the given Gaussian
    rational as exact strings."""
    expr = QQ_I.to_sympy(value)
    return [str(sympy.re(expr)), str(sympy.im(expr))]


def exact_matrix(rows):
    """Convert the given nested lists to a list of rows of Gaussian
    rationals.

    >>> from quantraj.auxs.exacttools import exact_matrix
    >>> exact_matrix([[1, '1/2'], [0, [0, 1]]])[1][1] == gaussian_rational(
    ...     [0, 1])
    True
    >>> exact_matrix([[1, 2], [3]])
    Traceback (most recent call last):
    ...
    ValueError: While trying to convert an exact matrix, the following error occured: Row 1 has 1 entries instead of 2.
    """
    try:
        rows = [list(row) for row in rows]
        for (idx, row) in enumerate(rows):
            if len(row) != len(rows[0]):
                raise ValueError('Row %d has %d entries instead of %d.'
                                 % (idx, len(row), len(rows[0])))
        return [[gaussian_rational(entry) for entry in row] for row in rows]
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to convert an exact matrix')


def exact_vector(values):
    """Convert the given values to a list of Gaussian rationals."""
    return [gaussian_rational(value) for value in values]


class PolyMatrix(object):
    """Matrix of polynomials with Gaussian rational coefficients in the
    common variables `gens`.

    >>> from quantraj.auxs.exacttools import build_bp
    >>> bp = build_bp([[[1, 0], [0, 1]]], 2)
    >>> bp
    PolyMatrix(rows=2, cols=2, nvars=2)
    >>> bp.polys()[0].as_expr()
    z1*z2
    """

    def __init__(self, entries, gens):
        self.entries = [list(row) for row in entries]
        self.gens = tuple(gens)

    @property
    def rows(self):
        """Number of rows."""
        return len(self.entries)

    @property
    def cols(self):
        """Number of columns."""
        return len(self.entries[0])

    def polys(self):
        """Return all entries in row-major order."""
        return [poly for row in self.entries for poly in row]

    def _zero(self):
        return sympy.Poly(0, *self.gens, domain=QQ_I)

    def __mul__(self, other):
        if self.cols != other.rows:
            raise objecttools.DimensionMismatchError(
                'Cannot multiply a %d×%d with a %d×%d polynomial matrix.'
                % (self.rows, self.cols, other.rows, other.cols))
        entries = []
        for row in self.entries:
            entries.append([])
            for jdx in range(other.cols):
                total = self._zero()
                for (idx, poly) in enumerate(row):
                    total += poly*other.entries[idx][jdx]
                entries[-1].append(total)
        return PolyMatrix(entries, self.gens)

    def dot(self, vector):
        """Return the product with the given exact vector as a one-column
        polynomial matrix."""
        vector = exact_vector(vector)
        if len(vector) != self.cols:
            raise objecttools.DimensionMismatchError(
                'The vector has %d entries, but the polynomial matrix has '
                '%d columns.' % (len(vector), self.cols))
        entries = []
        for row in self.entries:
            total = self._zero()
            for (poly, value) in zip(row, vector):
                total += poly*sympy.Poly(QQ_I.to_sympy(value), *self.gens,
                                         domain=QQ_I)
            entries.append([total])
        return PolyMatrix(entries, self.gens)

    def __repr__(self):
        return 'PolyMatrix(rows=%d, cols=%d, nvars=%d)' % (
            self.rows, self.cols, len(self.gens))


def build_bp(kraus_exact, p):
    """Return the polynomial matrix
    `B_p(z) = Π_{l=0}^{p−1} (Σ_{i=1}^k z_{kl+i} v_i)` (variables `z1` to
    `z{kp}`, the factor with the smallest indices leftmost).

    >>> from quantraj.auxs.exacttools import build_bp
    >>> bp = build_bp([[[0, 1], [0, 0]], [[0, 0], [1, 0]]], 1)
    >>> [poly.as_expr() for poly in bp.polys()]
    [0, z1, z2, 0]
    >>> build_bp([[[0, 1], [0, 0]], [[1]]], 1)
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: While trying to build the product polynomial matrix, the following error occured: The Kraus operators must be square matrices of equal size, but their shapes are (2, 2) and (1, 1).
    """
    try:
        matrices = [exact_matrix(matrix) for matrix in kraus_exact]
        shapes = [(len(m), len(m[0])) for m in matrices]
        dim = shapes[0][0]
        for shape in shapes:
            if shape != (dim, dim):
                raise objecttools.DimensionMismatchError(
                    'The Kraus operators must be square matrices of equal '
                    'size, but their shapes are %s.'
                    % ' and '.join(str(s) for s in shapes))
        if p < 1:
            raise ValueError('The power `p` must be positive, but %d is '
                             'given.' % p)
        nkraus = len(matrices)
        gens = sympy.symbols('z1:%d' % (nkraus*p+1))
        factors = []
        for idx in range(p):
            entries = [[sympy.Poly(
                sum(gens[nkraus*idx+jdx]*QQ_I.to_sympy(matrices[jdx][a][b])
                    for jdx in range(nkraus)),
                *gens, domain=QQ_I) for b in range(dim)] for a in range(dim)]
            factors.append(PolyMatrix(entries, gens))
        product = factors[0]
        for factor in factors[1:]:
            product = product*factor
        return product
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to build the product polynomial matrix')


def jacobian_at(polys, gens, point):
    """Return the Jacobian of the given polynomials with respect to the
    given variables, evaluated exactly at the given point, as a
    :class:`~sympy.polys.matrices.DomainMatrix` over the Gaussian
    rationals."""
    point = exact_vector(point)
    if len(point) != len(gens):
        raise objecttools.DimensionMismatchError(
            'The point has %d coordinates, but the polynomials depend on %d '
            'variables.' % (len(point), len(gens)))
    values = tuple(QQ_I.to_sympy(value) for value in point)
    rows = []
    for poly in polys:
        rows.append([])
        for gen in gens:
            derivative = poly.diff(gen)
            if derivative.is_zero:
                rows[-1].append(QQ_I.zero)
            else:
                rows[-1].append(QQ_I.from_sympy(
                    sympy.expand(derivative.eval(values))))
    return DomainMatrix(rows, (len(polys), len(gens)), QQ_I)


def jacobian_rank_at(polys, point, gens=None):
    """Return the exact rank of the Jacobian of the given polynomials at
    the given point.

    >>> from quantraj.auxs.exacttools import build_bp, jacobian_rank_at
    >>> from quantraj.channels import example1
    >>> bp = build_bp(example1.kraus_exact(), 2)
    >>> jacobian_rank_at(bp.polys(), [0, 0, 0, 0])
    0
    """
    if gens is None:
        gens = polys[0].gens
    return jacobian_at(polys, gens, point).rank()


def random_point(nvars, rng):
    """Return `nvars` integers drawn uniformly from `[1, 10]`.

    >>> import numpy
    >>> from quantraj.auxs.exacttools import random_point
    >>> point = random_point(16, numpy.random.default_rng(0))
    >>> len(point), min(point) >= 1, max(point) <= 10
    (16, True, True)
    """
    return [int(value) for value in rng.integers(1, 11, size=nvars)]


def random_exact_state(dim, rng, bound=5):
    """Return a nonzero vector of Gaussian integers with real and imaginary
    parts drawn uniformly from `[−bound, bound]` (as `[re, im]` pairs)."""
    while True:
        parts = rng.integers(-bound, bound+1, size=(dim, 2))
        if numpy.any(parts):
            return [[int(re), int(im)] for (re, im) in parts]


class Certificate(object):
    """Outcome of :func:`certify_full_space` or :func:`certify_for_state`.

    Every number is recorded exactly, so that the certificate can be
    replayed independently (see :meth:`to_dict`).
    """

    def __init__(self, kind, verdict, p, point=None, rank=None, pivots=None,
                 state=None, minor_start=None, determinant=None):
        self.kind = kind
        self.verdict = verdict
        self.p = p
        self.point = point
        self.rank = rank
        self.pivots = pivots
        self.state = state
        self.minor_start = minor_start
        self.determinant = determinant

    @property
    def certified(self):
        """True, if the certificate proves the property."""
        return self.verdict == 'certified'

    def to_dict(self):
        """Return the JSON-ready version of the certificate.

        >>> from quantraj.auxs.exacttools import certify_for_state
        >>> certificate = certify_for_state([[[1, 0], [0, 1]]], 1,
        ...                                 [1, 0], [3])
        >>> certificate.to_dict()['verdict']
        'zero-minor'
        """
        dict_ = {'kind': self.kind, 'verdict': self.verdict, 'p': self.p,
                 'point': None if self.point is None else
                          [str(value) for value in self.point]}
        if self.kind == 'full-space':
            dict_['rank'] = self.rank
            dict_['pivots'] = self.pivots
        else:
            dict_['state'] = [to_strings(value) for value in self.state]
            dict_['minor_start'] = self.minor_start
            dict_['determinant'] = (None if self.determinant is None else
                                    to_strings(self.determinant))
        return dict_

    def __repr__(self):
        if self.kind == 'full-space':
            return ('Certificate(kind=%r, verdict=%r, p=%d, rank=%s)'
                    % (self.kind, self.verdict, self.p, self.rank))
        return ('Certificate(kind=%r, verdict=%r, p=%d, minor_start=%s)'
                % (self.kind, self.verdict, self.p, self.minor_start))


@magictools.printprogress
def certify_full_space(kraus_exact, p, points=None, trials=1, rng=None,
                       bp=None):
    """Try to certify `V_1^p = M_d(C)` through a Jacobian of rank `d²`.

    The Jacobian of the `d²` entries of :func:`build_bp` is evaluated at
    the given points (or at `trials` random integer points).  The first
    point giving rank `d²` yields a `certified` certificate recording the
    point and the pivot columns; otherwise the certificate of the
    best point found is `not-at-these-points`, which does not disprove
    anything:

    >>> from quantraj.auxs.exacttools import certify_full_space
    >>> certify_full_space([[[1]]], 1, points=[[2]])
    Certificate(kind='full-space', verdict='certified', p=1, rank=1)
    """
    rng = numpy.random.default_rng(0) if rng is None else rng
    try:
        bp = build_bp(kraus_exact, p) if bp is None else bp
        polys = bp.polys()
        nvars = len(bp.gens)
        if points is None:
            points = [random_point(nvars, rng) for dummy in range(trials)]
        best = None
        for point in points:
            point = exact_vector(point)
            pivots = list(jacobian_at(polys, bp.gens, point).rref()[1])
            certificate = Certificate(
                'full-space', 'not-at-these-points', p,
                point=[QQ_I.to_sympy(value) for value in point],
                rank=len(pivots), pivots=pivots)
            if len(pivots) == len(polys):
                certificate.verdict = 'certified'
                return certificate
            if (best is None) or (certificate.rank > best.rank):
                best = certificate
        return best
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to certify multiplicative primitivity with p=%d'
            % p)


def _state_jacobian(bp, state):
    polys = bp.dot(state).polys()
    return [[poly.diff(gen) for gen in bp.gens] for poly in polys]


def _minor_determinant(jacobian, values, minor_start):
    dim = len(jacobian)
    rows = []
    for row in jacobian:
        rows.append([])
        for derivative in row[minor_start:minor_start+dim]:
            if derivative.is_zero:
                rows[-1].append(QQ_I.zero)
            else:
                rows[-1].append(QQ_I.from_sympy(
                    sympy.expand(derivative.eval(values))))
    return DomainMatrix(rows, (dim, dim), QQ_I).det()


def certify_for_state(kraus_exact, p, state, point, minor_start=0, bp=None,
                      jacobian=None):
    """Try to certify `V_1^p x = C^d` for the given exact state `x`.

    The `d×d` minor of the Jacobian of `P_x(z) = B_p(z)·x` starting at
    column `minor_start` is evaluated exactly at the given point.  A
    nonzero determinant certifies surjectivity of `P_x`.  For `v_1 = Id`,
    the image of every state is a line:

    >>> from quantraj.auxs.exacttools import certify_for_state
    >>> certify_for_state([[[1, 0], [0, 1]]], 2, [1, 0], [3, 4])
    Certificate(kind='state', verdict='zero-minor', p=2, minor_start=0)
    """
    try:
        state = exact_vector(state)
        if all(value == QQ_I.zero for value in state):
            raise objecttools.ZeroVectorError(
                'The zero vector does not define a state.')
        point = exact_vector(point)
        bp = build_bp(kraus_exact, p) if bp is None else bp
        if len(point) != len(bp.gens):
            raise objecttools.DimensionMismatchError(
                'The point has %d coordinates, but the polynomials depend '
                'on %d variables.' % (len(point), len(bp.gens)))
        certificate = Certificate(
            'state', 'zero-minor', p,
            point=[QQ_I.to_sympy(value) for value in point], state=state,
            minor_start=minor_start)
        dim = bp.rows
        if minor_start+dim > len(bp.gens):
            return certificate
        if jacobian is None:
            jacobian = _state_jacobian(bp, state)
        values = tuple(QQ_I.to_sympy(value) for value in point)
        determinant = _minor_determinant(jacobian, values, minor_start)
        certificate.determinant = determinant
        if determinant != QQ_I.zero:
            certificate.verdict = 'certified'
        return certificate
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to certify multiplicative primitivity for a '
            'single state with p=%d' % p)


class SweepReport(object):
    """Per-state results of :func:`sweep_states`."""

    def __init__(self, p, states, certificates):
        self.p = p
        self.states = states
        self.certificates = certificates

    @property
    def nmb_certified(self):
        """Number of certified states."""
        return sum(cert is not None for cert in self.certificates)

    @property
    def all_certified(self):
        """True, if every state is certified."""
        return self.nmb_certified == len(self.states)

    def to_dict(self):
        """Return the JSON-ready version of the report."""
        return {'p': self.p, 'states': len(self.states),
                'certified': self.nmb_certified,
                'results': [
                    {'state': [to_strings(value) for value in
                               exact_vector(state)],
                     'status': 'uncertified' if cert is None else
                               'certified',
                     'certificate': None if cert is None else cert.to_dict()}
                    for (state, cert) in zip(self.states,
                                             self.certificates)]}

    def __repr__(self):
        return 'SweepReport(p=%d, states=%d, certified=%d)' % (
            self.p, len(self.states), self.nmb_certified)


@magictools.printprogress
def sweep_states(kraus_exact, p, states, trials=20, rng=None):
    """Run :func:`certify_for_state` on every given state, for up to
    `trials` random integer points and all minor offsets, and return a
    :class:`SweepReport`.

    States that could not be certified are reported as uncertified, which
    never claims a failure of multiplicative primitivity:

    >>> import numpy
    >>> from quantraj.auxs.exacttools import sweep_states
    >>> sweep_states([[[1, 0], [0, 1]]], 2, [[1, 0], [1, 1]], trials=2,
    ...              rng=numpy.random.default_rng(0))
    SweepReport(p=2, states=2, certified=0)
    """
    rng = numpy.random.default_rng(0) if rng is None else rng
    try:
        bp = build_bp(kraus_exact, p)
        nvars = len(bp.gens)
        certificates = []
        for state in magictools.progressbar(states):
            jacobian = _state_jacobian(bp, exact_vector(state))
            result = None
            for dummy in range(trials):
                point = random_point(nvars, rng)
                for minor_start in range(max(nvars-bp.rows+1, 1)):
                    certificate = certify_for_state(
                        kraus_exact, p, state, point, minor_start,
                        bp=bp, jacobian=jacobian)
                    if certificate.certified:
                        result = certificate
                        break
                if result is not None:
                    break
            certificates.append(result)
        return SweepReport(p, list(states), certificates)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to sweep states for multiplicative primitivity')


def pencil_determinant(kraus_exact):
    """Return the exact polynomial `det(Σ a_i v_i)` in the variables `a1`
    to `ak`.

    >>> from quantraj.auxs.exacttools import pencil_determinant
    >>> from quantraj.channels import example1, example2
    >>> pencil_determinant(example1.kraus_exact()).as_expr()
    2*a1**2*a2
    >>> pencil_determinant(example2.kraus_exact()).is_zero
    True
    """
    matrices = [exact_matrix(matrix) for matrix in kraus_exact]
    gens = sympy.symbols('a1:%d' % (len(matrices)+1))
    dim = len(matrices[0])
    pencil = sympy.Matrix(dim, dim, lambda a, b: sum(
        gen*QQ_I.to_sympy(matrix[a][b])
        for (gen, matrix) in zip(gens, matrices)))
    return sympy.Poly(pencil.det(method='berkowitz'), *gens, domain=QQ_I)


autodoctools.autodoc_module()
