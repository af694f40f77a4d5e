# import...
# ...from standard library
from __future__ import division, print_function
import unittest
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.auxs import statstools


class Test01WeightedMoments(unittest.TestCase):

    def test_01_mean_shape_mismatch(self):
        with self.assertRaises(ValueError):
            statstools.weighted_mean([1., 2.], [1., 2., 3.])
    def test_02_std_zero_for_constant_values(self):
        self.assertEqual(statstools.weighted_std([4., 4., 4.], [1., 2., 3.]),
                         0.)
    def test_03_standard_error_axis(self):
        values = numpy.array([[1., 5.], [3., 5.]])
        errors = statstools.standard_error(values, axis=0)
        self.assertTrue(numpy.allclose(errors, [1., 0.]))
    def test_04_standard_error_single_value(self):
        with self.assertRaises(ValueError):
            statstools.standard_error([1.])
    def test_05_within_sigma_vectorized(self):
        self.assertTrue(statstools.within_sigma([1., 2.], [1.1, 1.9],
                                                [.05, .05]))
        self.assertFalse(statstools.within_sigma([1., 2.], [1.1, 1.7],
                                                 [.05, .05]))


class Test02SplitRhat(unittest.TestCase):

    def test_01_same_law(self):
        chains = numpy.random.default_rng(0).normal(size=(3, 400))
        self.assertLess(statstools.split_rhat(chains), 1.05)
    def test_02_drifting_chain(self):
        chains = numpy.array([numpy.linspace(0., 10., 400)]*2)
        self.assertGreater(statstools.split_rhat(chains), 1.5)
    def test_03_constant_chains(self):
        self.assertEqual(statstools.split_rhat(numpy.ones((2, 10))), 1.)
    def test_04_too_short(self):
        with self.assertRaises(ValueError):
            statstools.split_rhat(numpy.ones((2, 3)))


class Test03NullBand(unittest.TestCase):

    def test_01_edges(self):
        band = statstools.NullBand([1., 2., 3.], nsigma=1.)
        self.assertEqual((band.lower, band.upper), (1., 3.))
        self.assertTrue(band.contains(3.))
        self.assertFalse(band.contains(3.5))
        self.assertTrue(band.below(.5))
    def test_02_lower_edge_not_negative(self):
        self.assertEqual(statstools.NullBand([0., 1.]).lower, 0.)
    def test_03_too_few_replicas(self):
        with self.assertRaises(ValueError):
            statstools.NullBand([1.])
    def test_04_summary(self):
        dict_ = statstools.NullBand([1., 3.]).to_dict()
        self.assertEqual(sorted(dict_),
                         ['lower', 'mean', 'replicas', 'sd', 'upper'])
        self.assertEqual(dict_['replicas'], 2)
    def test_05_statistic_errors_augmented(self):
        def statistic(idx):
            raise RuntimeError('broken statistic')
        with self.assertRaises(RuntimeError) as context:
            statstools.null_band(statistic, replicas=3)
        self.assertIn('While trying to calibrate a null band',
                      str(context.exception))
