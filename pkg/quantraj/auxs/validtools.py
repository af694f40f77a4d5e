# import...
"""This module implements features for the validation of (numerical) input
data.
"""
# ...from standard library
from __future__ import division, print_function
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools


def test_equal_shape(**kwargs):
    """Raise a ValueError if the shapes of the objects given as keywords
    are not equal.

    If all shapes are equal, nothing happens:

    >>> from quantraj.auxs.validtools import test_equal_shape
    >>> test_equal_shape(arr1=numpy.array([1., 2.]),
    ...                  arr2=numpy.array([3., 4.]),
    ...                  arr3=numpy.array([5., 6.]))

    If at least one shape differs, the following error is raised:

    >>> test_equal_shape(arr1=numpy.array([1., 2.]),
    ...                  arr2=numpy.array([3.]),
    ...                  arr3=numpy.array([5., 6.]))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The shapes of the following objects are not equal: arr1 (2,), arr2 (1,), arr3 (2,).

    For flexibility in the functions application, it is allowed to pass only
    one array or no arrays at all:

    >>> test_equal_shape(arr1=numpy.array([1., 2.]))
    >>> test_equal_shape()
    """
    names = list(kwargs.keys())
    shapes = [numpy.shape(array) for array in kwargs.values()]
    if any(shape != shapes[0] for shape in shapes[1:]):
        raise objecttools.DimensionMismatchError(
            'The shapes of the following objects are not equal: %s.'
            % ', '.join('%s %s' % (name, tuple(shape)) for (name, shape)
                        in sorted(zip(names, shapes))))


def test_non_negative(**kwargs):
    """Raise a ValueError if at least one value of the objects given as
    keywords is negative.

    If all values are non negative, nothing happens:

    >>> from quantraj.auxs.validtools import test_non_negative
    >>> test_non_negative(arr1=numpy.array([1., 2.]),
    ...                   arr2=numpy.array([3., 4.]))

    If at least one value is negative, the following error is raised:

    >>> test_non_negative(arr1=numpy.array([1., 2.]),
    ...                   arr2=numpy.array([-3., 4.]))
    Traceback (most recent call last):
    ...
    ValueError: For the following objects, at least one value is negative: arr2.
    """
    names = list(kwargs.keys())
    negs = [numpy.nanmin(array) < 0. for array in kwargs.values()]
    if any(negs):
        raise ValueError(
            'For the following objects, at least one value is negative: %s.'
            % ', '.join(name for name, neg in sorted(zip(names, negs)) if neg))


def test_square(**kwargs):
    """Raise a ValueError if at least one of the objects given as keywords
    is not a square matrix.

    >>> from quantraj.auxs.validtools import test_square
    >>> test_square(mat1=numpy.eye(2), mat2=numpy.ones((3, 3)))
    >>> test_square(mat1=numpy.eye(2), mat2=numpy.ones((3, 2)))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: The following objects are not square matrices: mat2 (3, 2).
    """
    bad = []
    for (name, array) in sorted(kwargs.items()):
        shape = numpy.shape(array)
        if (len(shape) != 2) or (shape[0] != shape[1]) or not shape[0]:
            bad.append('%s %s' % (name, tuple(shape)))
    if bad:
        raise objecttools.DimensionMismatchError(
            'The following objects are not square matrices: %s.'
            % ', '.join(bad))


def test_unitary(tolerance=None, **kwargs):
    """Raise a :class:`~quantraj.core.objecttools.NotUnitaryError` if at
    least one of the matrices given as keywords violates `u*u = Id` by more
    than the given tolerance (default: option `tolerance`) in the Frobenius
    norm.

    >>> from quantraj.auxs.validtools import test_unitary
    >>> test_unitary(swap=numpy.array([[0., 1.], [1., 0.]]),
    ...              phase=numpy.array([[1j]]))
    >>> test_unitary(twice=2.*numpy.eye(2))
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.NotUnitaryError: The following matrices are not unitary: twice (deviation 4.242641).
    """
    from quantraj.pub import options
    tolerance = options.tolerance if tolerance is None else tolerance
    test_square(**kwargs)
    bad = []
    for (name, array) in sorted(kwargs.items()):
        array = numpy.asarray(array, dtype=complex)
        deviation = numpy.linalg.norm(
            numpy.dot(array.conj().T, array) - numpy.eye(len(array)))
        if not deviation <= tolerance:
            bad.append('%s (deviation %s)'
                       % (name, objecttools.repr_(deviation, 6)))
    if bad:
        raise objecttools.NotUnitaryError(
            'The following matrices are not unitary: %s.' % ', '.join(bad))


def test_hermitian(tolerance=None, **kwargs):
    """Raise a ValueError if at least one of the matrices given as keywords
    deviates from its adjoint by more than the given tolerance.

    >>> from quantraj.auxs.validtools import test_hermitian
    >>> test_hermitian(mat=numpy.array([[1., 1j], [-1j, 0.]]))
    >>> test_hermitian(mat=numpy.array([[1., 1j], [1j, 0.]]))
    Traceback (most recent call last):
    ...
    ValueError: The following matrices are not Hermitian: mat.
    """
    from quantraj.pub import options
    tolerance = options.tolerance if tolerance is None else tolerance
    test_square(**kwargs)
    bad = [name for (name, array) in sorted(kwargs.items())
           if not numpy.linalg.norm(numpy.asarray(array) -
                                    numpy.asarray(array).conj().T) <= tolerance]
    if bad:
        raise ValueError(
            'The following matrices are not Hermitian: %s.' % ', '.join(bad))


def test_probabilities(tolerance=1e-12, **kwargs):
    """Raise a ValueError if at least one of the objects given as keywords
    is not a probability vector (non negative, summing up to one within
    the given tolerance).

    >>> from quantraj.auxs.validtools import test_probabilities
    >>> test_probabilities(weights=[.25, .75])
    >>> test_probabilities(weights=[.25, .5])
    Traceback (most recent call last):
    ...
    ValueError: The values of the following objects do not sum up to one: weights (0.75).
    """
    test_non_negative(**kwargs)
    bad = []
    for (name, array) in sorted(kwargs.items()):
        total = numpy.sum(array)
        if not abs(total-1.) <= tolerance:
            bad.append('%s (%s)' % (name, objecttools.repr_(total, 12)))
    if bad:
        raise ValueError(
            'The values of the following objects do not sum up to one: %s.'
            % ', '.join(bad))

autodoctools.autodoc_module()
