# import...
# ...from standard library
from __future__ import division, print_function
import unittest
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import linalgtools
from quantraj.core import objecttools
from quantraj.core import trajectorytools
from quantraj.channels import counterexample
from quantraj.channels import depolarizing
from quantraj.channels import projection


class Test01ProjectiveState(unittest.TestCase):

    def setUp(self):
        self.state = linalgtools.ProjectiveState([1j, -1j, 0.])

    def test_01_phase_invariance(self):
        for phase in (1., 1j, -1., numpy.exp(.3j)):
            self.assertEqual(
                self.state,
                linalgtools.ProjectiveState(phase*numpy.array([2., -2., 0.])))
    def test_02_canonical_leading_coordinate(self):
        state = linalgtools.ProjectiveState([0., -3j, 1.])
        self.assertEqual(state.rep[0], 0.)
        self.assertEqual(state.rep[1].imag, 0.)
        self.assertGreater(state.rep[1].real, 0.)
        self.assertAlmostEqual(numpy.linalg.norm(state.rep), 1., places=14)
    def test_03_tiny_coordinates_ignored(self):
        state = linalgtools.ProjectiveState([1e-15j, 1.])
        self.assertEqual(state, linalgtools.ProjectiveState.basis(2, 1))
    def test_04_zero_vector(self):
        with self.assertRaises(objecttools.ZeroVectorError):
            linalgtools.ProjectiveState([0., 0.])
    def test_05_matrix_input(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            linalgtools.ProjectiveState(numpy.eye(2))
    def test_06_read_only(self):
        with self.assertRaises(ValueError):
            self.state.rep[0] = 1.
    def test_07_unequal_dimensions(self):
        self.assertNotEqual(linalgtools.ProjectiveState.basis(2, 0),
                            linalgtools.ProjectiveState.basis(3, 0))
    def test_08_act(self):
        state = linalgtools.ProjectiveState.basis(2, 0)
        self.assertEqual(state.act(numpy.array([[1., 0.], [1., 0.]])),
                         linalgtools.ProjectiveState([1., 1.]))
    def test_09_kernel_hit(self):
        state = linalgtools.ProjectiveState.basis(2, 0)
        with self.assertRaises(objecttools.KernelHitError):
            state.act(numpy.array([[0., 1.], [0., 0.]]))


class Test02FubiniDistance(unittest.TestCase):

    def setUp(self):
        rng = numpy.random.default_rng(3)
        self.reps = linalgtools.canonicalize_rows(
            rng.standard_normal((5, 3))+1j*rng.standard_normal((5, 3)))

    def test_01_orthogonal_states(self):
        self.assertEqual(
            linalgtools.fubini_distance(
                linalgtools.ProjectiveState.basis(2, 0),
                linalgtools.ProjectiveState.basis(2, 1)), 1.)
    def test_02_same_ray(self):
        self.assertAlmostEqual(
            linalgtools.fubini_distance(
                linalgtools.ProjectiveState([1., 1j]),
                linalgtools.ProjectiveState([-1j, 1.])), 0., places=7)
    def test_03_matrix_symmetric(self):
        distances = linalgtools.fubini_distance_matrix(self.reps, self.reps)
        self.assertTrue(numpy.allclose(distances, distances.T))
        self.assertTrue(numpy.allclose(numpy.diag(distances), 0.,
                                       atol=1e-7))
    def test_04_matrix_range(self):
        distances = linalgtools.fubini_distance_matrix(self.reps, self.reps)
        self.assertTrue(numpy.all((distances >= 0.) & (distances <= 1.)))
    def test_05_triangle_inequality(self):
        rng = numpy.random.default_rng(11)
        distance = linalgtools.fubini_distance
        reps = rng.standard_normal((1000, 3, 3)) + \
            1j*rng.standard_normal((1000, 3, 3))
        for triple in reps:
            a, b, c = [linalgtools.ProjectiveState(rep) for rep in triple]
            self.assertLessEqual(distance(a, c),
                                 distance(a, b)+distance(b, c)+1e-12)
    def test_06_symmetry_and_phase_invariance(self):
        rng = numpy.random.default_rng(12)
        for dummy in range(100):
            x = rng.standard_normal(3)+1j*rng.standard_normal(3)
            y = rng.standard_normal(3)+1j*rng.standard_normal(3)
            a = linalgtools.ProjectiveState(x)
            b = linalgtools.ProjectiveState(y)
            rotated = linalgtools.ProjectiveState(
                numpy.exp(1j*rng.uniform(0., 2.*numpy.pi))*x)
            self.assertAlmostEqual(linalgtools.fubini_distance(a, b),
                                   linalgtools.fubini_distance(b, a),
                                   places=12)
            self.assertAlmostEqual(linalgtools.fubini_distance(a, b),
                                   linalgtools.fubini_distance(rotated, b),
                                   places=12)


class Test03DensityMatrix(unittest.TestCase):

    def test_01_eigen_descending(self):
        rho = linalgtools.DensityMatrix(numpy.diag([.2, .8]))
        self.assertTrue(numpy.allclose(rho.eigen[0], [.8, .2]))
    def test_02_not_hermitian(self):
        with self.assertRaises(ValueError):
            linalgtools.DensityMatrix([[.5, .5], [0., .5]])
    def test_03_negative_eigenvalue(self):
        with self.assertRaises(ValueError):
            linalgtools.DensityMatrix(numpy.diag([1.5, -.5]))
    def test_04_not_square(self):
        with self.assertRaises(ValueError):
            linalgtools.DensityMatrix(numpy.ones((2, 3))/2.)
    def test_05_pure_rank(self):
        rho = linalgtools.DensityMatrix.from_state(
            linalgtools.ProjectiveState([1., 1j]))
        self.assertEqual(rho.rank, 1)


class Test04KrausChannel(unittest.TestCase):

    def setUp(self):
        self.channel = depolarizing.channel(3, .4)
        rng = numpy.random.default_rng(5)
        rho = rng.standard_normal((3, 3))+1j*rng.standard_normal((3, 3))
        rho = numpy.dot(rho, rho.conj().T)
        self.rho = rho/numpy.trace(rho)

    def test_01_validate(self):
        for channel in (self.channel, counterexample.channel(),
                        projection.channel()):
            self.assertTrue(linalgtools.validate(channel).ok)
    def test_02_unital_heisenberg(self):
        self.assertTrue(numpy.allclose(
            linalgtools.apply_heisenberg(self.channel, numpy.eye(3)),
            numpy.eye(3)))
    def test_03_trace_preserving_schrodinger(self):
        image = linalgtools.apply_schrodinger(self.channel, self.rho)
        self.assertAlmostEqual(numpy.trace(image).real, 1., places=12)
    def test_04_duality(self):
        observable = numpy.diag([1., 2., 3.])
        left = numpy.trace(numpy.dot(
            observable, linalgtools.apply_schrodinger(self.channel,
                                                      self.rho)))
        right = numpy.trace(numpy.dot(
            linalgtools.apply_heisenberg(self.channel, observable),
            self.rho))
        self.assertAlmostEqual(left, right, places=12)
    def test_05_superoperator(self):
        image = numpy.dot(linalgtools.superoperator_matrix(self.channel),
                          self.rho.ravel()).reshape(3, 3)
        self.assertTrue(numpy.allclose(
            image, linalgtools.apply_schrodinger(self.channel, self.rho)))
    def test_06_heisenberg_matrix(self):
        observable = numpy.diag([1., 2., 3.])
        image = numpy.dot(linalgtools.heisenberg_matrix(self.channel),
                          observable.ravel()).reshape(3, 3)
        self.assertTrue(numpy.allclose(
            image, linalgtools.apply_heisenberg(self.channel, observable)))
    def test_07_reshuffle_same_map(self):
        unitary = trajectorytools.sample_haar_unitary(
            self.channel.rank, numpy.random.default_rng(0))
        self.assertTrue(numpy.allclose(
            linalgtools.superoperator_matrix(
                linalgtools.reshuffle(self.channel, unitary)),
            linalgtools.superoperator_matrix(self.channel)))
    def test_08_reshuffle_wrong_size(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            linalgtools.reshuffle(self.channel, numpy.eye(2))
    def test_09_conjugate_channel(self):
        similarity = numpy.array([[2., 1.], [0., 1.]])
        kraus = linalgtools.conjugate_channel(counterexample.channel(),
                                              similarity)
        for (v, w) in zip(counterexample.kraus(), kraus):
            self.assertTrue(numpy.allclose(
                numpy.dot(w, similarity), numpy.dot(similarity, v)))
    def test_10_operand_shape(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            linalgtools.apply_schrodinger(self.channel, numpy.eye(2))


class Test05Randomizations(unittest.TestCase):

    def setUp(self):
        self.rng = numpy.random.default_rng(11)

    def test_01_dirac_draw(self):
        unitary = numpy.array([[0., 1.], [1j, 0.]])
        self.assertTrue(numpy.array_equal(
            linalgtools.Dirac(unitary).draw(2, self.rng), unitary))
    def test_02_dirac_wrong_size(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            linalgtools.Dirac.identity(2).draw(3, self.rng)
    def test_03_mixture_frequencies(self):
        mixture = linalgtools.FiniteMixture(
            [.25, .75], [numpy.eye(2), numpy.array([[0., 1.], [1., 0.]])])
        draws = [mixture.draw(2, self.rng)[0, 0] for dummy in range(4000)]
        self.assertAlmostEqual(numpy.mean(numpy.real(draws)), .25,
                               delta=.03)
    def test_04_mixture_wrong_weights(self):
        with self.assertRaises(ValueError):
            linalgtools.FiniteMixture([.5], [numpy.eye(2), numpy.eye(2)])
    def test_05_mixture_not_unitary(self):
        with self.assertRaises(objecttools.NotUnitaryError):
            linalgtools.FiniteMixture([1.], [2.*numpy.eye(2)])
    def test_06_haar_unitary(self):
        unitary = linalgtools.Haar().draw(4, self.rng)
        self.assertTrue(numpy.allclose(numpy.dot(unitary.conj().T, unitary),
                                       numpy.eye(4)))
    def test_07_convex_haar_share(self):
        convex = linalgtools.Convex(.3, linalgtools.Dirac.identity(2))
        draws = [numpy.array_equal(convex.draw(2, self.rng), numpy.eye(2))
                 for dummy in range(4000)]
        self.assertAlmostEqual(numpy.mean(draws), .7, delta=.03)
    def test_08_convex_atoms(self):
        convex = linalgtools.Convex(.3, linalgtools.Dirac.identity(2))
        weights, unitaries = convex.atoms()
        self.assertAlmostEqual(weights[0], .7)
        self.assertTrue(convex.is_nonsingular)
        self.assertFalse(linalgtools.Dirac.identity(2).is_nonsingular)
    def test_09_convex_wrong_atoms(self):
        with self.assertRaises(TypeError):
            linalgtools.Convex(.5, linalgtools.Haar())
    def test_10_block_of_mixture(self):
        mixture = linalgtools.FiniteMixture(
            [1., 3.], [numpy.eye(2), numpy.array([[0., 1j], [1j, 0.]])])
        restored = linalgtools.randomization_from_dict(mixture.to_dict())
        self.assertTrue(numpy.allclose(restored.weights, [.25, .75]))
        self.assertTrue(numpy.allclose(restored.unitaries,
                                       mixture.unitaries))
