# -*- coding: utf-8 -*-
"""This module implements the tools which report on the progress of
long-running QuanTraj routines: the decorator :func:`printprogress`, the
generator :func:`progressbar` and the context manager :class:`PrintStyle`.

All output depends on option `printprogress` (and `printincolor`) of
module :mod:`~quantraj.pub` and is written to `sys.stdout`, unless the
command line interface redirects it to `sys.stderr` via
:func:`progressstream`.
"""
# import...
# ...from the Python standard library
from __future__ import division, print_function
import sys
import io
import time
import functools
# ...from QuanTraj
from quantraj import pub
from quantraj.core import objecttools
from quantraj.core import autodoctools

_STREAM = [None]


def progressstream(stream=None):
    """Define the stream progress information is written to and return
    the previous one (`None` stands for the current `sys.stdout`).

    >>> import sys
    >>> from quantraj.core import magictools
    >>> old = magictools.progressstream(sys.stderr)
    >>> magictools.progressstream(old) is sys.stderr
    True
    """
    old = _STREAM[0]
    _STREAM[0] = stream
    return old


def currentstream():
    """Return the stream progress information is currently written to."""
    return sys.stdout if _STREAM[0] is None else _STREAM[0]


class PrintStyle(object):
    """Context manager for printing colored and/or bold text when option
    `printincolor` is set."""

    def __init__(self, color, font, file=None):
        self.color = color
        self.font = font
        self.file = currentstream() if file is None else file

    def __enter__(self):
        if pub.options.printincolor:
            print(end='\x1B[%d;30;%dm' % (self.font, self.color),
                  file=self.file)

    def __exit__(self, exception, message, traceback_):
        if pub.options.printincolor:
            print(end='\x1B[0m', file=self.file)
        if exception:
            objecttools.augmentexcmessage()


def printprogress(wrapped):
    """Decorator for QuanTraj functions and methods to print when they
    start and when they end.

    >>> from quantraj import pub
    >>> from quantraj.core.magictools import printprogress
    >>> @printprogress
    ... def add(a, b=1):
    ...     return a + b
    >>> pub.options.printprogress = False
    >>> add(2)
    3

    With option `printprogress` activated, the start and end messages
    are printed with an indentation reflecting the nesting level of
    decorated calls:

    >>> pub.options.printprogress = True
    >>> pub.options.printincolor = False
    >>> add(2, b=3)   # doctest: +ELLIPSIS
    <BLANKLINE>
    QuanTraj function add...
        ...started at ...
        ...ended at ...
    5
    >>> pub.options.printprogress = False

    The wrapper keeps the name and the documentation of the wrapped
    function:

    >>> add.__name__
    'add'
    """
    @functools.wraps(wrapped)
    def printprogress_wrapper(*args, **kwargs):
        pub._printprogress_indentation += 4
        try:
            indent = ' '*max(pub._printprogress_indentation, 0)
            stream = currentstream()
            if pub.options.printprogress:
                with PrintStyle(color=34, font=1):
                    print('\n%sQuanTraj function %s...'
                          % (indent, wrapped.__name__), file=stream)
                    print('%s    ...started at %s.'
                          % (indent, time.strftime('%X')), file=stream)
            result = wrapped(*args, **kwargs)
            if pub.options.printprogress:
                with PrintStyle(color=34, font=1):
                    print('%s    ...ended at %s.'
                          % (indent, time.strftime('%X')), file=stream)
            return result
        finally:
            pub._printprogress_indentation -= 4
    return printprogress_wrapper


def progressbar(iterable, length=23):
    """Print a simple progress bar while processing the given iterable.

    Function :func:`progressbar` does print the progress bar when option
    `printprogress` is activted:

    >>> from quantraj import pub
    >>> pub.options.printprogress = True
    >>> pub.options.printincolor = False

    Interpose function :func:`progressbar` when looping over a sized
    iterable:

    >>> from quantraj.core.magictools import progressbar
    >>> x_sum = 0
    >>> for x in progressbar(range(1, 101)):
    ...     x_sum += x
        |---------------------|
        ***********************
    >>> x_sum
    5050

    To prevent possible interim print commands from dismembering the status
    bar, they are delayed until the status bar is complete:

    >>> x_sum = 0
    >>> for x in progressbar(range(1, 101)):
    ...     x_sum += x
    ...     if not x % 50:
    ...         print(x, x_sum)
        |---------------------|
        ***********************
    50 1275
    100 5050

    Its maximum number of characters is restricted by the length of the
    given iterable and for iterables of length one or zero, no progress
    bar is printed:

    >>> for i in progressbar(range(10), length=50):
    ...     continue
        |--------|
        **********
    >>> for i in progressbar(range(1)):
    ...     continue

    The same is True when the `printprogress` option is inactivated:

    >>> pub.options.printprogress = False
    >>> for i in progressbar(range(100)):
    ...     continue
    """
    if pub.options.printprogress and (len(iterable) > 1):
        real_stream = currentstream()
        real_stdout = sys.stdout
        buffer_ = io.StringIO()
        try:
            sys.stdout = buffer_
            nmbstars = min(len(iterable), length)
            nmbcounts = len(iterable)/nmbstars
            indentation = ' '*max(pub._printprogress_indentation, 0)
            with PrintStyle(color=36, font=1, file=real_stream):
                print('    %s|%s|\n%s    ' % (indentation,
                                              '-'*(nmbstars-2),
                                              indentation),
                      end='',
                      file=real_stream)
                counts = 1.
                for next_ in iterable:
                    counts += 1.
                    if counts >= nmbcounts:
                        print(end='*', file=real_stream)
                        counts -= nmbcounts
                    yield next_
        finally:
            sys.stdout = real_stdout
            print(file=real_stream)
            sys.stdout.write(buffer_.getvalue())
    else:
        for next_ in iterable:
            yield next_


autodoctools.autodoc_module()
