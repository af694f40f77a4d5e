# -*- coding: utf-8 -*-
"""This module implements the file formats of QuanTraj: channel files,
density files and measure files (for reading) as well as JSON reports and
CSV tables (for writing).

Channel files are JSON objects with the keys `kraus` (a list of matrices,
each one a row-major nested list of `[re, im]` pairs), and optionally
`dim`, `name`, `randomization` (see
:func:`~quantraj.core.linalgtools.randomization_from_dict`), `kraus_exact`
(integers, rational strings or `[re, im]` pairs of them) and `scale`, the
number the exact operators must be multiplied with to become the Kraus
operators:

>>> from quantraj.core.filetools import channelsource_from_dict
>>> source = channelsource_from_dict(
...     {'kraus': [[[[1., 0.], [0., 0.]], [[0., 0.], [1., 0.]]]],
...      'randomization': {'type': 'dirac', 'u0': [[[1., 0.]]]}})
>>> source
ChannelSource(channel=KrausChannel(name='channel', dim=2, rank=1), \
randomization=Dirac(k=1), exact=False)

JSON numbers are written with Python's shortest repr, which reproduces
the binary value exactly:

>>> from quantraj.core.filetools import dumps
>>> print(dumps({'value': 0.1, 'values': numpy.array([1./3., 2.])}))
{"value": 0.1, "values": [0.3333333333333333, 2.0]}
"""
# import...
# ...from standard library
from __future__ import division, print_function
import csv
import io
import json
import os
import sys
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import autodoctools
from quantraj.core import objecttools
from quantraj.core import linalgtools
from quantraj.auxs import measuretools
# from quantraj import channels (actual import commands moved to
# different functions below to avoid circular dependencies)

CSV_FORMAT = '%.17g'
"""Format of all floating point numbers written to CSV files."""


class ChannelSource(object):
    """A channel together with its randomization and (optionally) its
    exact Kraus operators, as read by :func:`load_channel`.

    Attribute `config` keeps the JSON-ready description of the source,
    which QuanTraj embeds into every report.
    """

    def __init__(self, channel, randomization=None, kraus_exact=None,
                 scale=None, config=None):
        self.channel = channel
        self.randomization = randomization
        self.kraus_exact = kraus_exact
        self.scale = scale
        self.config = {} if config is None else config

    @property
    def exact(self):
        """True, if exact Kraus operators are available."""
        return self.kraus_exact is not None

    def __repr__(self):
        return ('ChannelSource(channel=%r, randomization=%r, exact=%s)'
                % (self.channel, self.randomization, self.exact))


def read_json(path):
    """Read and return the JSON object stored in the given file."""
    try:
        with open(path) as file_:
            return json.load(file_)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to read the JSON file `%s`' % path)


def channelsource_from_dict(dict_, name=None):
    """Return the :class:`ChannelSource` described by the given channel
    file content.

    The Kraus operators must match the stated dimension:

    >>> from quantraj.core.filetools import channelsource_from_dict
    >>> channelsource_from_dict({'dim': 3, 'kraus': [[[[1., 0.]]]]})
    Traceback (most recent call last):
    ...
    quantraj.core.objecttools.DimensionMismatchError: While trying to read \
the description of channel `channel`, the following error occured: The \
channel file states dimension 3, but the Kraus operators are 1×1 matrices.
    """
    name = dict_.get('name', name or 'channel')
    try:
        if 'kraus' not in dict_:
            raise KeyError('The channel description lacks the key `kraus`.')
        kraus = [linalgtools.as_matrix(matrix) for matrix in dict_['kraus']]
        if ('dim' in dict_) and (len(kraus[0]) != dict_['dim']):
            raise objecttools.DimensionMismatchError(
                'The channel file states dimension %d, but the Kraus '
                'operators are %d×%d matrices.'
                % (dict_['dim'], len(kraus[0]), len(kraus[0])))
        channel = linalgtools.KrausChannel(kraus, name=name)
        randomization = None
        if dict_.get('randomization') is not None:
            randomization = linalgtools.randomization_from_dict(
                dict_['randomization'])
        return ChannelSource(channel, randomization,
                             kraus_exact=dict_.get('kraus_exact'),
                             scale=dict_.get('scale'), config=dict_)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to read the description of channel `%s`' % name)


def channelsource_from_name(name):
    """Return the :class:`ChannelSource` of the bundled channel of the
    given name.

    >>> from quantraj.core.filetools import channelsource_from_name
    >>> source = channelsource_from_name('example1')
    >>> source.exact, source.randomization
    (True, Haar())
    """
    from quantraj import channels
    module = channels.module(name)
    if module is None:
        channels.get(name)
    kraus_exact = None
    if hasattr(module, 'kraus_exact'):
        kraus_exact = module.kraus_exact()
    return ChannelSource(module.channel(), module.randomization(),
                         kraus_exact=kraus_exact, config={'name': name})


def load_channel(source):
    """Return the :class:`ChannelSource` of the given bundled channel name
    or channel file path."""
    from quantraj import channels
    if (channels.module(source) is not None) and not os.path.exists(source):
        return channelsource_from_name(source)
    name = os.path.splitext(os.path.basename(source))[0]
    return channelsource_from_dict(read_json(source), name=name)


def channel_to_dict(channel, randomization=None, kraus_exact=None):
    """Return the channel file content describing the given channel.

    >>> from quantraj.core.filetools import channel_to_dict
    >>> from quantraj.channels import swap
    >>> dict_ = channel_to_dict(swap.channel(), swap.randomization())
    >>> dict_['dim'], dict_['randomization']
    (2, {'type': 'haar'})
    """
    dict_ = {'name': channel.name, 'dim': channel.dim,
             'kraus': [linalgtools.matrix_to_pairs(v) for v in channel.kraus]}
    if randomization is not None:
        dict_['randomization'] = randomization.to_dict()
    if kraus_exact is not None:
        dict_['kraus_exact'] = kraus_exact
    return dict_


def load_density(source):
    """Return the :class:`~quantraj.core.linalgtools.DensityMatrix` stored
    in the given JSON file.

    The file contains either the matrix itself or an object with the key
    `density`.  The name `projection` selects the reference density
    matrix of the bundled projection channel.
    """
    from quantraj.channels import projection
    if (source == 'projection') and not os.path.exists(source):
        return linalgtools.DensityMatrix(projection.density())
    try:
        content = read_json(source)
        if isinstance(content, dict):
            content = content['density']
        return linalgtools.DensityMatrix(linalgtools.as_matrix(content))
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to load a density matrix from `%s`' % source)


def parse_state(text):
    """Parse a comma separated list of complex coordinates, each one given
    as `re:im` or `re`.

    >>> from quantraj.core.filetools import parse_state
    >>> parse_state('1, 0:-2.5')
    [(1+0j), -2.5j]
    >>> parse_state('1,a')
    Traceback (most recent call last):
    ...
    ValueError: While trying to parse the state `1,a`, the following error \
occured: could not convert string to float: 'a'
    """
    try:
        values = []
        for item in text.split(','):
            parts = item.split(':')
            if len(parts) > 2:
                raise ValueError(
                    'Coordinate `%s` consists of more than two parts.'
                    % item.strip())
            real = float(parts[0])
            imag = float(parts[1]) if len(parts) == 2 else 0.
            values.append(complex(real, imag))
        return values
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to parse the state `%s`' % text)


def parse_exact_state(text):
    """Parse a comma separated list of exact coordinates (`re:im` or `re`,
    integers or fractions) into `[re, im]` string pairs.

    >>> from quantraj.core.filetools import parse_exact_state
    >>> parse_exact_state('1/2:1,-3')
    [['1/2', '1'], ['-3', '0']]
    """
    values = []
    for item in text.split(','):
        parts = [part.strip() for part in item.split(':')]
        values.append([parts[0], parts[1] if len(parts) > 1 else '0'])
    return values


def parse_point(text):
    """Parse a comma separated list of exact point coordinates.

    >>> from quantraj.core.filetools import parse_point
    >>> parse_point('1,2, 3/4')
    ['1', '2', '3/4']
    """
    return [item.strip() for item in text.split(',')]


def _jsonable(value):
    if isinstance(value, dict):
        return {str(key): _jsonable(item) for (key, item) in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    if isinstance(value, numpy.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (bool, numpy.bool_)):
        return bool(value)
    if isinstance(value, (int, numpy.integer)):
        return int(value)
    if isinstance(value, (float, numpy.floating)):
        return float(value)
    if isinstance(value, (complex, numpy.complexfloating)):
        return [float(value.real), float(value.imag)]
    return value


def dumps(value):
    """Return the JSON string of the given (nested) value, converting numpy
    objects and complex numbers (as `[re, im]` pairs)."""
    return json.dumps(_jsonable(value))


def write_json(value, path=None):
    """Write the given value as JSON to the given file or, if no path is
    given, to standard output."""
    text = dumps(value)
    if path is None:
        sys.stdout.write(text+'\n')
    else:
        with open(path, 'w') as file_:
            file_.write(text+'\n')


def _csv_field(value):
    if isinstance(value, (bool, numpy.bool_)):
        return str(int(value))
    if isinstance(value, (int, numpy.integer)):
        return str(int(value))
    if isinstance(value, (float, numpy.floating)):
        return CSV_FORMAT % value
    return str(value)


def csv_text(header, rows):
    """Return the CSV text of the given header and rows.

    >>> from quantraj.core.filetools import csv_text
    >>> print(csv_text(['step', 'value'], [(0, 0.1), (1, 1./3.)]), end='')
    step,value
    0,0.10000000000000001
    1,0.33333333333333331
    """
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_field(value) for value in row])
    return stream.getvalue()


def write_csv(header, rows, path=None):
    """Write the given header and rows as CSV to the given file or, if no
    path is given, to standard output."""
    text = csv_text(header, rows)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, 'w') as file_:
            file_.write(text)


def _coordinate_header(dim):
    header = []
    for idx in range(1, dim+1):
        header.extend(['re_%d' % idx, 'im_%d' % idx])
    return header


def _coordinates(rep):
    values = []
    for value in rep:
        values.extend([float(value.real), float(value.imag)])
    return values


def measure_table(measure):
    """Return the header and the rows of the CSV representation of the
    given :class:`~quantraj.auxs.measuretools.EmpiricalMeasure`.

    >>> from quantraj.core.filetools import measure_table
    >>> from quantraj.auxs.measuretools import EmpiricalMeasure
    >>> header, rows = measure_table(EmpiricalMeasure([[0., 1j]]))
    >>> header
    ['weight', 're_1', 'im_1', 're_2', 'im_2']
    >>> rows
    [[1.0, 0.0, 0.0, 1.0, 0.0]]
    """
    header = ['weight'] + _coordinate_header(measure.dim)
    rows = [[float(weight)] + _coordinates(rep)
            for (weight, rep) in zip(measure.weights, measure.points)]
    return header, rows


def run_table(run):
    """Return the header and the rows of the CSV representation of the
    given :class:`~quantraj.core.trajectorytools.ChainRun`.

    Each row holds the step number, the 1-based outcome and the state after
    the step.  The initial state comes first, with outcome zero.
    """
    header = ['step', 'outcome'] + _coordinate_header(run.channel.dim)
    rows = [[0, 0] + _coordinates(run.path[0])]
    for idx in range(run.nmb_steps):
        rows.append([idx+1, int(run.outcomes[idx])] +
                    _coordinates(run.path[idx+1]))
    return header, rows


def density_table(density):
    """Return the header and the rows of the CSV representation of the
    given :class:`~quantraj.auxs.densitytools.BlochGridDensity`."""
    return ['theta', 'phi', 'density'], density.to_rows()


def load_measure(path):
    """Read an :class:`~quantraj.auxs.measuretools.EmpiricalMeasure` from a
    CSV file as written by :func:`measure_table`.

    A `weight` column is optional, coordinates are given by the columns
    `re_i` and `im_i`.
    """
    try:
        with open(path) as file_:
            rows = list(csv.reader(file_))
        header = [name.strip() for name in rows[0]]
        table = numpy.array(rows[1:], dtype=float, ndmin=2)
        dim = sum(name.startswith('re_') for name in header)
        if not dim:
            raise ValueError('The header contains no coordinate columns.')
        points = numpy.empty((len(table), dim), dtype=complex)
        for idx in range(dim):
            points[:, idx] = (table[:, header.index('re_%d' % (idx+1))] +
                              1j*table[:, header.index('im_%d' % (idx+1))])
        weights = None
        if 'weight' in header:
            weights = table[:, header.index('weight')]
        return measuretools.EmpiricalMeasure(points, weights)
    except BaseException:
        objecttools.augmentexcmessage(
            'While trying to load an empirical measure from `%s`' % path)


autodoctools.autodoc_module()
