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
from quantraj.auxs import densitytools
from quantraj.auxs import gaptools
from quantraj.auxs import measuretools
from quantraj.channels import depolarizing
from quantraj.channels import projection
from quantraj.channels import swap


class Test01BlochGrid(unittest.TestCase):

    def setUp(self):
        self.grid = densitytools.BlochGrid(6, 10)

    def test_01_invalid_sizes(self):
        with self.assertRaises(ValueError):
            densitytools.BlochGrid(0, 10)
    def test_02_nodes_in_own_cells(self):
        self.assertTrue(numpy.array_equal(self.grid.locate(self.grid.states),
                                          numpy.arange(self.grid.size)))
    def test_03_angles_of_nodes(self):
        theta, phi = densitytools.bloch_angles(self.grid.states)
        self.assertTrue(numpy.allclose(theta, self.grid.theta))
        self.assertTrue(numpy.allclose(phi, self.grid.phi))
    def test_04_phase_invariant_location(self):
        states = self.grid.states*numpy.exp(.7j)
        self.assertTrue(numpy.array_equal(self.grid.locate(states),
                                          numpy.arange(self.grid.size)))
    def test_05_equal_areas(self):
        measure = measuretools.uniform_sample(2, 20000,
                                              numpy.random.default_rng(0))
        density = densitytools.histogram_density(measure, 4, 8)
        self.assertLess(numpy.max(numpy.abs(density.values-1.)), .2)


class Test02BlochGridDensity(unittest.TestCase):

    def setUp(self):
        self.density = densitytools.BlochGridDensity(
            densitytools.BlochGrid(2, 2), [2., 2., 0., 0.])

    def test_01_negative_values(self):
        with self.assertRaises(ValueError):
            densitytools.BlochGridDensity(densitytools.BlochGrid(1, 2),
                                          [3., -1.])
    def test_02_wrong_size(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            densitytools.BlochGridDensity(densitytools.BlochGrid(1, 2), [1.])
    def test_03_coarsen_not_dividing(self):
        with self.assertRaises(ValueError):
            self.density.coarsen(3, 1)
    def test_04_as_measure(self):
        measure = self.density.as_measure()
        self.assertEqual(measure.size, 2)
        self.assertTrue(numpy.allclose(measure.weights, [.5, .5]))
        self.assertEqual(self.density.as_measure(drop_empty=False).size, 4)
    def test_05_rows(self):
        rows = self.density.to_rows()
        self.assertEqual(len(rows), 4)
        self.assertEqual([row[2] for row in rows], [2., 2., 0., 0.])
    def test_06_histogram_of_three_dimensional_measure(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            densitytools.histogram_density(
                measuretools.EmpiricalMeasure([[1., 0., 0.]]), 2, 2)


class Test03FixedPoint(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        pub.options.printprogress = False

    def tearDown(self):
        pub.options.printprogress = self.printprogress

    def test_01_projection_channel(self):
        density = densitytools.solve_density_fixed_point(
            projection.channel(), n_theta=20, n_phi=40)
        exact = gaptools.gap_density_rows(
            gaptools.GapSampler(projection.density()), density.grid.states)
        self.assertLess(numpy.max(numpy.abs(density.values-exact)), 1e-2)
        self.assertLessEqual(density.residual, 1e-8)
        self.assertEqual(density.residual, density.history[-1])
    def test_02_coarsened_solution(self):
        density = densitytools.solve_density_fixed_point(
            depolarizing.channel(2, .5), n_theta=10, n_phi=20)
        coarse = density.coarsen(5, 10)
        self.assertAlmostEqual(coarse.grid.integrate(coarse.values), 1.)
    def test_03_not_primitive(self):
        with self.assertRaises(objecttools.NotPrimitiveError):
            densitytools.solve_density_fixed_point(swap.channel(), 4, 8)
    def test_04_wrong_dimension(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            densitytools.solve_density_fixed_point(
                depolarizing.channel(3, .5), 4, 8)
    def test_05_no_convergence(self):
        with self.assertRaises(objecttools.NoConvergenceError):
            densitytools.solve_density_fixed_point(
                projection.channel(), n_theta=6, n_phi=12, iters=1)
    def test_06_singular_pushforward(self):
        channel = linalgtools.KrausChannel(
            [numpy.array([[1., 0.], [0., 0.]]),
             numpy.array([[0., 1.], [0., 0.]])], name='reset')
        with self.assertRaises(objecttools.SingularPushforwardError):
            densitytools.kernel_residual(channel,
                                         densitytools.BlochGrid(4, 8),
                                         numpy.ones(32))
