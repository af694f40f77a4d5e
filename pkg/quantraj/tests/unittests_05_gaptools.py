# import...
# ...from standard library
from __future__ import division, print_function
import unittest
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import linalgtools
from quantraj.core import objecttools
from quantraj.auxs import densitytools
from quantraj.auxs import gaptools


class Test01GapSampler(unittest.TestCase):

    def setUp(self):
        self.rho = numpy.diag([2./3., 1./3.])
        self.sampler = gaptools.GapSampler(self.rho)
        self.rng = numpy.random.default_rng(0)

    def test_01_support(self):
        self.assertEqual(self.sampler.rank, 2)
        self.assertTrue(numpy.allclose(self.sampler.values, [2./3., 1./3.]))
    def test_02_invalid_density(self):
        with self.assertRaises(ValueError):
            gaptools.GapSampler(numpy.diag([1., 1.]))
    def test_03_gaussian_covariance(self):
        vectors = self.sampler.gaussians(40000, self.rng)
        covariance = numpy.einsum('na,nb->ab', vectors,
                                  vectors.conj())/len(vectors)
        self.assertLess(numpy.linalg.norm(covariance-self.rho), .02)
    def test_04_gap_barycenter(self):
        samples = gaptools.gap_sample(self.sampler, 20000, self.rng)
        self.assertLess(numpy.linalg.norm(
            samples.mean_density_matrix()-self.rho), .02)
    def test_05_importance_barycenter(self):
        samples = gaptools.sample_gap_weighted(self.sampler, self.rng, 40000)
        self.assertLess(numpy.linalg.norm(
            samples.mean_density_matrix()-self.rho), .03)
    def test_06_rotated_density(self):
        unitary = numpy.array([[1., 1j], [1j, 1.]])/numpy.sqrt(2.)
        rho = numpy.dot(unitary, numpy.dot(self.rho, unitary.conj().T))
        samples = gaptools.gap_sample(gaptools.GapSampler(rho), 20000,
                                      self.rng)
        self.assertLess(numpy.linalg.norm(
            samples.mean_density_matrix()-rho), .02)
    def test_07_rank_deficient_support(self):
        rho = numpy.diag([.5, .5, 0.])
        samples = gaptools.gap_sample(gaptools.GapSampler(rho), 100,
                                      self.rng)
        self.assertTrue(numpy.allclose(samples.points[:, 2], 0.))


class Test02GapDensity(unittest.TestCase):

    def setUp(self):
        self.sampler = gaptools.GapSampler(numpy.diag([2./3., 1./3.]))

    def test_01_value_at_basis_state(self):
        self.assertAlmostEqual(
            gaptools.gap_density(self.sampler,
                                 linalgtools.ProjectiveState.basis(2, 0)),
            8./3., places=12)
    def test_02_phase_independent(self):
        self.assertAlmostEqual(
            gaptools.gap_density(self.sampler,
                                 linalgtools.ProjectiveState([1., 1j])),
            gaptools.gap_density(self.sampler,
                                 linalgtools.ProjectiveState([1j, -1.])),
            places=12)
    def test_03_normalized(self):
        grid = densitytools.BlochGrid(50, 100)
        values = gaptools.gap_density_rows(self.sampler, grid.states)
        self.assertAlmostEqual(grid.integrate(values), 1., delta=1e-3)
    def test_04_uniform_for_maximally_mixed(self):
        sampler = gaptools.GapSampler(numpy.eye(3)/3.)
        rng = numpy.random.default_rng(1)
        points = linalgtools.canonicalize_rows(
            rng.standard_normal((5, 3))+1j*rng.standard_normal((5, 3)))
        self.assertTrue(numpy.allclose(
            gaptools.gap_density_rows(sampler, points), 1.))
    def test_05_outside_support(self):
        sampler = gaptools.GapSampler(numpy.diag([1., 0., 0.]))
        with self.assertRaises(objecttools.OutsideSupportError):
            gaptools.gap_density(sampler,
                                 linalgtools.ProjectiveState([1., 0., 1.]))
    def test_06_dimension_mismatch(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            gaptools.gap_density(self.sampler,
                                 linalgtools.ProjectiveState.basis(3, 0))
    def test_07_mean_density_matrix(self):
        rho = gaptools.mean_density_matrix(
            [linalgtools.ProjectiveState.basis(2, 0),
             linalgtools.ProjectiveState.basis(2, 1)])
        self.assertTrue(numpy.allclose(rho.mat, numpy.eye(2)/2.))
