# -*- coding: utf-8 -*-
"""This module implements tools to help to standardize the functionality
of the different objects defined by QuanTraj: string representations,
the global options, exception augmentation and the exception classes
shared by all modules.
"""
# import...
# ...from standard library
from __future__ import division, print_function
import inspect
import os
import sys
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
# from quantraj.pub import ... (actual import commands moved to
# different functions below to avoid circular dependencies)


class QuanTrajWarning(UserWarning):
    """General warning class of QuanTraj, used for soft problems like
    expensive computations or failed cross-checks."""


class ZeroVectorError(ValueError):
    """A ray representative was requested for the zero vector."""


class DimensionMismatchError(ValueError):
    """Two objects of different (Hilbert space) dimension were combined."""


class NotUnitaryError(ValueError):
    """A matrix expected to be unitary violates `u*u = Id`."""


class KernelHitError(RuntimeError):
    """The trajectory kernel selected an outcome of (numerically) zero
    norm, which is a probability-zero event."""


class NotIrreducibleError(ValueError):
    """An operation requiring an irreducible channel received a reducible
    one."""


class NotPrimitiveError(ValueError):
    """An operation requiring a primitive channel received another one."""


class OutsideSupportError(ValueError):
    """A state does not lie in the support of a density matrix."""


class SingularPushforwardError(RuntimeError):
    """The image of a pure state under the Schrödinger map is singular."""


class NoConvergenceError(RuntimeError):
    """An iterative scheme did not reach its tolerance."""


class PeriodicityError(RuntimeError):
    """The reconstructed cyclic decomposition of an irreducible channel
    failed its consistency check."""


def classname(self):
    """Return the class name of the given instance object or class.

    >>> from quantraj.core.objecttools import classname
    >>> from quantraj.pub import options
    >>> print(classname(float))
    float
    >>> print(classname(options))
    Options
    """
    if not inspect.isclass(self):
        self = type(self)
    return self.__name__


def augmentexcmessage(prefix=None, suffix=None):
    """Augment an exception message with additional information while keeping
    the original traceback.

    You can prefix and/or suffix text.  If you prefix something (which happens
    much more often in QuanTraj), the sub-clause ', the following error
    occured:' is automatically included:

    >>> from quantraj.core import objecttools
    >>> import textwrap
    >>> try:
    ...     1 + '1'
    ... except TypeError:
    ...     try:
    ...         prefix = 'While showing how prefixing works'
    ...         suffix = '(This is a final remark.)'
    ...         objecttools.augmentexcmessage(prefix, suffix)
    ...     except TypeError as exc:
    ...         for line in textwrap.wrap(exc.args[0], width=76):
    ...             print(line)
    While showing how prefixing works, the following error occured: unsupported
    operand type(s) for +: 'int' and 'str' (This is a final remark.)

    The type of the original exception survives, which is what the error
    handling of the command line interface relies on:

    >>> try:
    ...     try:
    ...         raise objecttools.ZeroVectorError('nothing to normalize')
    ...     except BaseException:
    ...         objecttools.augmentexcmessage('While trying to test')
    ... except objecttools.ZeroVectorError as exc:
    ...     print(exc)
    While trying to test, the following error occured: nothing to normalize
    """
    exception, message, traceback_ = sys.exc_info()
    if prefix is not None:
        message = ('%s, the following error occured: %s'
                   % (prefix, message))
    if suffix is not None:
        message = ' '.join((message, suffix))
    try:
        newexc = exception(message)
    except BaseException:
        newexc = RuntimeError(message)
    raise newexc.with_traceback(traceback_)


def repr_(value, decimals=None):
    """Modifies :func:`repr` for strings, floats and complex numbers, mainly
    for supporting clean representations that are compatible with
    :mod:`doctest`.

    When value is a string, it is returned without any modification:

    >>> from quantraj.core.objecttools import repr_
    >>> repr_('test')
    'test'

    When value is a float, the result depends on how the option
    :attr:`~Options.reprdigits` is set. If it is :class:`None`, :func:`repr`
    defines the number of digits in the usual, system dependend manner:

    >>> from quantraj.pub import options
    >>> options.reprdigits = None
    >>> repr(1./3.) == repr_(1./3.)
    True

    Through setting :attr:`~Options.reprdigits` to a positive integer value,
    one defines the maximum number of decimal places:

    >>> options.reprdigits = 6
    >>> repr_(1./3.)
    '0.333333'
    >>> repr_(numpy.float64(1./2.))
    '0.5'

    Negative zeros resulting from rounding are printed without sign:

    >>> repr_(-1e-12)
    '0.0'

    Complex numbers are printed as `re+imj` with both parts rounded, purely
    real numbers of complex type as floats:

    >>> repr_(1./3.+2.j/3.)
    '0.333333+0.666667j'
    >>> repr_(numpy.complex128(0.5-0.25j))
    '0.5-0.25j'
    >>> repr_(complex(0.5, 1e-17))
    '0.5'
    """
    from quantraj.pub import options
    decimals = options.reprdigits if decimals is None else decimals
    if isinstance(value, str):
        return value
    if isinstance(value, (complex, numpy.complexfloating)):
        real = repr_(float(value.real), decimals)
        if (decimals is not None) and (abs(value.imag) < .5*10.**-decimals):
            return real
        imag = repr_(float(abs(value.imag)), decimals)
        sign = '-' if value.imag < 0. else '+'
        return '%s%s%sj' % (real, sign, imag)
    if ((decimals is not None) and
            isinstance(value, (float, numpy.floating))):
        string = '{0:.{1}f}'.format(value, decimals)
        string = string.rstrip('0')
        if string.endswith('.'):
            string += '0'
        if string.startswith('-') and not string.strip('-0.'):
            string = string[1:]
        return string
    if isinstance(value, numpy.floating):
        return repr(float(value))
    return repr(value)


def repr_values(values, decimals=None):
    """Return comma seperated representations of the given values using
    function :func:`repr_`.

    >>> from quantraj.core.objecttools import repr_values
    >>> repr_values([1./1., 1./2., 1./3.], decimals=6)
    '1.0, 0.5, 0.333333'

    Note that the returned string is not wrapped.
    """
    return '%s' % ', '.join(repr_(value, decimals) for value in values)


def round_(values, decimals=None, **kwargs):
    """Prints values with a maximum number of digits in doctests.

    See the documentation on function :func:`repr_` for more details.  And
    note thate the option keyword arguments are passed to the print function.
    Two-dimensional arrays are printed row by row:

    >>> from quantraj.core.objecttools import round_
    >>> round_(1./3., decimals=6)
    0.333333
    >>> round_((1./2., 1./3., 1./4.), decimals=4)
    0.5, 0.3333, 0.25
    >>> round_(numpy.eye(2)/2., decimals=4)
    0.5, 0.0
    0.0, 0.5
    """
    if isinstance(values, numpy.ndarray) and (values.ndim == 2):
        for row in values:
            print(repr_values(row, decimals), **kwargs)
    elif hasattr(values, '__iter__'):
        print(repr_values(values, decimals), **kwargs)
    else:
        print(repr_(values, decimals), **kwargs)


def _threads_from_environment():
    try:
        return max(int(os.environ.get('QUANTRAJ_THREADS', 1)), 1)
    except ValueError:
        return 1


class Options(object):
    """Singleton class for `global` options."""

    def __init__(self):
        self._printprogress = True
        self._printincolor = True
        self._reprdigits = None
        self._tolerance = 1e-10
        self._threads = _threads_from_environment()
        self._warnslow = True

    def _getprintprogress(self):
        """True/False flag indicating whether information about the progress
        of certain processes shall be printed to the standard output or not.
        The default is `True`.
        """
        return self._printprogress

    def _setprintprogress(self, value):
        self._printprogress = bool(value)

    printprogress = property(_getprintprogress, _setprintprogress)

    def _getprintincolor(self):
        """True/False flag indicating whether information shall be printed
        in color eventually or not. The default is `True`.
        """
        return self._printincolor

    def _setprintincolor(self, value):
        self._printincolor = bool(value)

    printincolor = property(_getprintincolor, _setprintincolor)

    def _getreprdigits(self):
        """Required precision of string representations of floating point
        numbers, defined as the minimum number of digits to be reproduced
        by the string representation (see function :func:`repr_`).
        """
        return self._reprdigits

    def _setreprdigits(self, value):
        if value is None:
            self._reprdigits = value
        else:
            self._reprdigits = int(value)

    def _delreprdigits(self):
        self._reprdigits = None

    reprdigits = property(_getreprdigits, _setreprdigits, _delreprdigits)

    def _gettolerance(self):
        """Absolute tolerance for the validity checks of channels, density
        matrices and unitary matrices.  The default is `1e-10`.

        >>> from quantraj.core.objecttools import Options
        >>> options = Options()
        >>> options.tolerance = -1.
        Traceback (most recent call last):
        ...
        ValueError: The tolerance must be a positive number, but -1.0 is given.
        """
        return self._tolerance

    def _settolerance(self, value):
        value = float(value)
        if not value > 0.:
            raise ValueError(
                'The tolerance must be a positive number, but %s is given.'
                % value)
        self._tolerance = value

    tolerance = property(_gettolerance, _settolerance)

    def _getthreads(self):
        """Number of worker threads used for running independent chains
        and certificate sweeps.  The default is taken from the environment
        variable `QUANTRAJ_THREADS` (1, if it is not set).

        >>> from quantraj.core.objecttools import Options
        >>> options = Options()
        >>> options.threads = 0
        Traceback (most recent call last):
        ...
        ValueError: The number of threads must be a positive integer, but 0 is given.
        """
        return self._threads

    def _setthreads(self, value):
        value = int(value)
        if value < 1:
            raise ValueError(
                'The number of threads must be a positive integer, '
                'but %d is given.' % value)
        self._threads = value

    threads = property(_getthreads, _setthreads)

    def _getwarnslow(self):
        """True/False flag indicating whether a warning shall be raised
        before starting computations known to be expensive.  The default
        is `True`.
        """
        return self._warnslow

    def _setwarnslow(self, value):
        self._warnslow = bool(value)

    warnslow = property(_getwarnslow, _setwarnslow)


autodoctools.autodoc_module()
