# import...
# ...from standard library
from __future__ import division, print_function
import os
import shutil
import tempfile
import unittest
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj import pub
from quantraj.core import filetools
from quantraj.core import linalgtools
from quantraj.core import trajectorytools
from quantraj.auxs import measuretools
from quantraj.channels import counterexample
from quantraj.channels import projection
from quantraj.channels import swap


class Test01ChannelFiles(unittest.TestCase):

    def setUp(self):
        self.dirpath = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dirpath)

    def test_01_round_trip(self):
        path = os.path.join(self.dirpath, 'cx.json')
        filetools.write_json(
            filetools.channel_to_dict(counterexample.channel(),
                                      counterexample.randomization()),
            path)
        source = filetools.load_channel(path)
        self.assertTrue(numpy.allclose(source.channel.kraus,
                                       counterexample.kraus()))
        self.assertEqual(source.randomization.to_dict(),
                         counterexample.randomization().to_dict())
        self.assertFalse(source.exact)
    def test_02_file_name_as_default_name(self):
        path = os.path.join(self.dirpath, 'flip.json')
        dict_ = filetools.channel_to_dict(swap.channel())
        del dict_['name']
        filetools.write_json(dict_, path)
        source = filetools.load_channel(path)
        self.assertEqual(source.channel.name, 'flip')
        self.assertIsNone(source.randomization)
    def test_03_bundled_channel(self):
        source = filetools.load_channel('example2')
        self.assertTrue(source.exact)
        self.assertEqual(source.config, {'name': 'example2'})
    def test_04_missing_kraus(self):
        with self.assertRaises(KeyError):
            filetools.channelsource_from_dict({'dim': 2})
    def test_05_missing_file(self):
        with self.assertRaises(IOError):
            filetools.load_channel(os.path.join(self.dirpath, 'none.json'))


class Test02DensityFiles(unittest.TestCase):

    def setUp(self):
        self.dirpath = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dirpath)

    def test_01_wrapped_matrix(self):
        path = os.path.join(self.dirpath, 'rho.json')
        filetools.write_json(
            {'density': linalgtools.matrix_to_pairs(
                numpy.diag([.75, .25]))}, path)
        density = filetools.load_density(path)
        self.assertTrue(numpy.allclose(density.mat, numpy.diag([.75, .25])))
    def test_02_bundled_density(self):
        self.assertTrue(numpy.allclose(
            filetools.load_density('projection').mat, projection.density()))
    def test_03_not_a_density(self):
        path = os.path.join(self.dirpath, 'rho.json')
        filetools.write_json(
            linalgtools.matrix_to_pairs(numpy.diag([1., -1.])), path)
        with self.assertRaises(ValueError):
            filetools.load_density(path)


class Test03MeasureFiles(unittest.TestCase):

    def setUp(self):
        self.dirpath = tempfile.mkdtemp()
        self.path = os.path.join(self.dirpath, 'measure.csv')

    def tearDown(self):
        shutil.rmtree(self.dirpath)

    def test_01_round_trip(self):
        measure = measuretools.EmpiricalMeasure(
            measuretools.uniform_sample(
                3, 5, numpy.random.default_rng(0)).points,
            weights=[1., 2., 3., 4., 5.])
        header, rows = filetools.measure_table(measure)
        filetools.write_csv(header, rows, self.path)
        loaded = filetools.load_measure(self.path)
        self.assertTrue(numpy.allclose(loaded.points, measure.points))
        self.assertTrue(numpy.allclose(loaded.weights, measure.weights))
    def test_02_without_weights(self):
        filetools.write_csv(['re_1', 'im_1', 're_2', 'im_2'],
                            [(1., 0., 0., 0.), (0., 0., 0., 1.)], self.path)
        loaded = filetools.load_measure(self.path)
        self.assertTrue(loaded.equal_weights)
        self.assertEqual(loaded.dim, 2)
    def test_03_without_coordinates(self):
        filetools.write_csv(['weight'], [(1.,)], self.path)
        with self.assertRaises(ValueError):
            filetools.load_measure(self.path)


class Test04Tables(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        pub.options.printprogress = False

    def tearDown(self):
        pub.options.printprogress = self.printprogress

    def test_01_run_table(self):
        run = trajectorytools.run_chain(
            swap.channel(), linalgtools.Dirac.identity(2), [1., 0.], 3,
            seed=0, burn_in=0)
        header, rows = filetools.run_table(run)
        self.assertEqual(header,
                         ['step', 'outcome', 're_1', 'im_1', 're_2', 'im_2'])
        self.assertEqual([row[:2] for row in rows],
                         [[0, 0], [1, 1], [2, 2], [3, 1]])
    def test_02_csv_exact_floats(self):
        text = filetools.csv_text(['value'], [(.1,)])
        self.assertEqual(float(text.split()[1]), .1)
    def test_03_json_complex(self):
        self.assertEqual(filetools.dumps({'z': 1.-2j, 'flag': numpy.True_}),
                         '{"z": [1.0, -2.0], "flag": true}')


class Test05Parsers(unittest.TestCase):

    def test_01_state(self):
        self.assertEqual(filetools.parse_state('0:1, 2'), [1j, 2.])
    def test_02_too_many_parts(self):
        with self.assertRaises(ValueError):
            filetools.parse_state('1:2:3')
    def test_03_exact_state(self):
        self.assertEqual(filetools.parse_exact_state('2, 1:-1/3'),
                         [['2', '0'], ['1', '-1/3']])
