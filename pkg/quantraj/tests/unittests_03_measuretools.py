# import...
# ...from standard library
from __future__ import division, print_function
import unittest
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj import pub
from quantraj.core import linalgtools
from quantraj.core import objecttools
from quantraj.auxs import measuretools
from quantraj.channels import depolarizing
from quantraj.channels import swap


class Test01EmpiricalMeasure(unittest.TestCase):

    def test_01_canonical_points(self):
        measure = measuretools.EmpiricalMeasure([[1j, 1j], [2., 2.]])
        self.assertTrue(numpy.allclose(measure.points[0], measure.points[1]))
    def test_02_normalized_weights(self):
        measure = measuretools.EmpiricalMeasure([[1., 0.], [0., 1.]],
                                                weights=[2., 6.])
        self.assertTrue(numpy.allclose(measure.weights, [.25, .75]))
        self.assertFalse(measure.equal_weights)
    def test_03_negative_weight(self):
        with self.assertRaises(ValueError):
            measuretools.EmpiricalMeasure([[1., 0.], [0., 1.]],
                                          weights=[2., -1.])
    def test_04_zero_weights(self):
        with self.assertRaises(ValueError):
            measuretools.EmpiricalMeasure([[1., 0.]], weights=[0.])
    def test_05_weight_shape(self):
        with self.assertRaises(ValueError):
            measuretools.EmpiricalMeasure([[1., 0.]], weights=[.5, .5])
    def test_06_zero_point(self):
        with self.assertRaises(objecttools.ZeroVectorError):
            measuretools.EmpiricalMeasure([[1., 0.], [0., 0.]])
    def test_07_resample_equal_weights(self):
        measure = measuretools.uniform_sample(2, 50,
                                              numpy.random.default_rng(0))
        subsample = measure.resample(10, numpy.random.default_rng(1))
        self.assertEqual(subsample.size, 10)
        self.assertIs(measure.resample(60, numpy.random.default_rng(1)),
                      measure)
    def test_08_resample_weighted(self):
        measure = measuretools.EmpiricalMeasure([[1., 0.], [0., 1.]],
                                                weights=[1., 0.])
        subsample = measure.resample(20, numpy.random.default_rng(1))
        self.assertTrue(numpy.allclose(subsample.mean_density_matrix(),
                                       numpy.diag([1., 0.])))
    def test_09_expectation(self):
        measure = measuretools.uniform_sample(2, 400,
                                              numpy.random.default_rng(2))
        observable = numpy.array([[.5, 1j], [-1j, -1.]])
        mean, sd = measure.expectation(observable)
        exact = numpy.trace(numpy.dot(observable,
                                      measure.mean_density_matrix())).real
        self.assertAlmostEqual(mean, exact)
        self.assertGreater(sd, 0.)
    def test_10_expectation_of_non_hermitian_observable(self):
        measure = measuretools.EmpiricalMeasure([[1., 0.]])
        with self.assertRaises(ValueError):
            measure.expectation(numpy.array([[0., 1.], [0., 0.]]))


class Test02Wasserstein(unittest.TestCase):

    def setUp(self):
        rng = numpy.random.default_rng(8)
        self.first = measuretools.uniform_sample(3, 40, rng)
        self.second = measuretools.uniform_sample(3, 40, rng)
        self.e1 = measuretools.EmpiricalMeasure([[1., 0.]])
        self.e2 = measuretools.EmpiricalMeasure([[0., 1.]])

    def test_01_symmetric(self):
        self.assertAlmostEqual(
            measuretools.wasserstein1(self.first, self.second),
            measuretools.wasserstein1(self.second, self.first), places=12)
    def test_02_identical(self):
        self.assertAlmostEqual(
            measuretools.wasserstein1(self.first, self.first), 0., places=7)
    def test_03_orthogonal_diracs(self):
        self.assertAlmostEqual(
            measuretools.wasserstein1(self.e1, self.e2), 1., places=12)
    def test_04_transport_program(self):
        mix = measuretools.EmpiricalMeasure([[1., 0.], [1., 1.]],
                                            weights=[.25, .75])
        self.assertAlmostEqual(
            measuretools.wasserstein1(self.e1, mix),
            .75*numpy.sqrt(.5), places=8)
    def test_05_resampled_fallback(self):
        distance = measuretools.wasserstein1(
            self.first, measuretools.EmpiricalMeasure(
                self.first.points, numpy.arange(1., 41.)),
            max_points=40, max_variables=1,
            rng=numpy.random.default_rng(0))
        self.assertGreaterEqual(distance, 0.)
        self.assertLessEqual(distance, 1.)
    def test_06_triangle_inequality(self):
        mix = measuretools.EmpiricalMeasure.mixture([self.first, self.second])
        self.assertLessEqual(
            measuretools.wasserstein1(self.first, self.second),
            measuretools.wasserstein1(self.first, mix) +
            measuretools.wasserstein1(mix, self.second) + 1e-6)


class Test03Bands(unittest.TestCase):

    def test_01_split_band(self):
        measure = measuretools.uniform_sample(2, 200,
                                              numpy.random.default_rng(2))
        band = measuretools.split_null_band(
            measure, numpy.random.default_rng(3), replicas=5)
        self.assertEqual(band.replicas, 5)
        self.assertGreater(band.upper, band.mean)
    def test_02_split_band_too_small(self):
        with self.assertRaises(ValueError):
            measuretools.split_null_band(
                measuretools.EmpiricalMeasure([[1., 0.]]*3),
                numpy.random.default_rng(0))


class Test04Pushforwards(unittest.TestCase):

    def test_01_unitary_pushforward(self):
        hadamard = numpy.array([[1., 1.], [1., -1.]])/numpy.sqrt(2.)
        image = measuretools.pushforward(
            measuretools.EmpiricalMeasure([[1., 0.]]), hadamard)
        self.assertEqual(image.states[0],
                         linalgtools.ProjectiveState([1., 1.]))
    def test_02_not_unitary(self):
        with self.assertRaises(objecttools.NotUnitaryError):
            measuretools.pushforward(
                measuretools.EmpiricalMeasure([[1., 0.]]), 2.*numpy.eye(2))
    def test_03_fixed_point_residual(self):
        channel = linalgtools.KrausChannel([numpy.diag([1., -1.])])
        residual = measuretools.invariance_residual(
            channel, linalgtools.Dirac.identity(1),
            measuretools.EmpiricalMeasure([[1., 0.]]*4),
            numpy.random.default_rng(0))
        self.assertEqual(residual, 0.)
    def test_04_symmetry_residual(self):
        measure = measuretools.EmpiricalMeasure([[1., 0.], [0., 1.]])
        self.assertAlmostEqual(
            measuretools.symmetry_residual(
                measure, numpy.array([[0., 1.], [1., 0.]])), 0., places=7)
    def test_05_atom_masses(self):
        measure = measuretools.EmpiricalMeasure([[1., 0.], [1., 1e-9]],
                                                weights=[1., 3.])
        masses = measuretools.atom_masses(
            measure, [linalgtools.ProjectiveState([1., 0.])], radius=1e-6)
        self.assertAlmostEqual(masses[0], 1.)
    def test_06_invalid_radius(self):
        with self.assertRaises(ValueError):
            measuretools.atom_masses(
                measuretools.EmpiricalMeasure([[1., 0.]]), [], radius=0.)


class Test05EstimateInvariant(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        pub.options.printprogress = False

    def tearDown(self):
        pub.options.printprogress = self.printprogress

    def test_01_periodic_channel(self):
        estimate = measuretools.estimate_invariant(
            swap.channel(), linalgtools.Dirac.identity(2), [1., 0.], 100,
            seed=0, burn_in=10)
        self.assertEqual(estimate.period, 2)
        masses = measuretools.atom_masses(
            estimate.average,
            [linalgtools.ProjectiveState.basis(2, 0),
             linalgtools.ProjectiveState.basis(2, 1)], radius=1e-6)
        self.assertTrue(numpy.allclose(masses, [.5, .5]))
    def test_02_explicit_period(self):
        estimate = measuretools.estimate_invariant(
            depolarizing.channel(2, .5), linalgtools.Haar(), [1., 0.], 60,
            seed=1, burn_in=0, nchains=2, period=3)
        self.assertEqual(len(estimate.classes), 3)
        self.assertEqual(estimate.average.size, 120)
    def test_03_uniform_barycenter(self):
        estimate = measuretools.estimate_invariant(
            depolarizing.channel(2, .5), linalgtools.Haar(), [1., 0.], 5000,
            seed=2, burn_in=100)
        self.assertLess(numpy.linalg.norm(
            estimate.average.mean_density_matrix()-numpy.eye(2)/2.), .05)
