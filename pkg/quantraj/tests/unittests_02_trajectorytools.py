# import...
# ...from standard library
from __future__ import division, print_function
import unittest
import warnings
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj import pub
from quantraj.core import linalgtools
from quantraj.core import objecttools
from quantraj.core import trajectorytools
from quantraj.channels import counterexample
from quantraj.channels import depolarizing
from quantraj.channels import swap


class Test01HaarUnitary(unittest.TestCase):

    def setUp(self):
        self.rng = numpy.random.default_rng(0)

    def test_01_unitary(self):
        for k in (1, 2, 5):
            u = trajectorytools.sample_haar_unitary(k, self.rng)
            self.assertTrue(numpy.allclose(numpy.dot(u.conj().T, u),
                                           numpy.eye(k), atol=1e-12))
    def test_02_entry_moments(self):
        values = [abs(trajectorytools.sample_haar_unitary(2, self.rng)[0, 0])
                  for dummy in range(4000)]
        values = numpy.square(values)
        self.assertAlmostEqual(numpy.mean(values), .5, delta=.02)
    def test_03_phase_not_biased(self):
        values = [trajectorytools.sample_haar_unitary(3, self.rng)[1, 1]
                  for dummy in range(4000)]
        self.assertLess(abs(numpy.mean(values)), .03)
    def test_04_invalid_size(self):
        with self.assertRaises(ValueError):
            trajectorytools.sample_haar_unitary(0, self.rng)


class Test02KernelStep(unittest.TestCase):

    def setUp(self):
        self.channel = counterexample.channel()
        self.rng = numpy.random.default_rng(2)

    def test_01_deterministic_without_randomization(self):
        state = linalgtools.ProjectiveState.basis(2, 0)
        for dummy in range(10):
            record = trajectorytools.kernel_step(
                self.channel, linalgtools.Dirac.identity(2), state, self.rng)
            self.assertEqual(record.outcome, 1)
            self.assertEqual(record.state_after,
                             linalgtools.ProjectiveState.basis(2, 1))
    def test_02_outcomes_one_based(self):
        state = linalgtools.ProjectiveState([1., 2j])
        outcomes = set(
            trajectorytools.kernel_step(self.channel, linalgtools.Haar(),
                                        state, self.rng).outcome
            for dummy in range(200))
        self.assertEqual(outcomes, {1, 2})
    def test_03_weight_of_outcome(self):
        state = linalgtools.ProjectiveState([1., 1.])
        record = trajectorytools.kernel_step(
            self.channel, linalgtools.Dirac.identity(2), state, self.rng)
        expected = numpy.linalg.norm(numpy.dot(
            counterexample.kraus()[record.outcome-1], state.rep))**2
        self.assertAlmostEqual(record.weight, expected, places=12)
    def test_04_state_after_is_image(self):
        state = linalgtools.ProjectiveState([1., 3j])
        record = trajectorytools.kernel_step(
            self.channel, linalgtools.Haar(), state, self.rng)
        kraus = numpy.einsum('jl,lab->jab', record.unitary,
                             counterexample.kraus())
        self.assertEqual(record.state_after,
                         state.act(kraus[record.outcome-1]))
    def test_05_dimension_mismatch(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            trajectorytools.kernel_step(
                self.channel, linalgtools.Haar(),
                linalgtools.ProjectiveState.basis(3, 0), self.rng)


class Test03RunChain(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        pub.options.printprogress = False
        self.channel = depolarizing.channel(2, .5)

    def tearDown(self):
        pub.options.printprogress = self.printprogress

    def run_chain(self, seed, **kwargs):
        return trajectorytools.run_chain(
            self.channel, linalgtools.Haar(), [1., 0.], 50, seed=seed,
            **kwargs)

    def test_01_same_seed_same_path(self):
        first = self.run_chain(7, burn_in=0)
        second = self.run_chain(7, burn_in=0)
        self.assertTrue(numpy.array_equal(first.path, second.path))
        self.assertTrue(numpy.array_equal(first.outcomes, second.outcomes))
        self.assertTrue(numpy.array_equal(first.unitaries,
                                          second.unitaries))
    def test_02_different_seed_different_path(self):
        self.assertFalse(numpy.array_equal(
            self.run_chain(7, burn_in=0).path,
            self.run_chain(8, burn_in=0).path))
    def test_03_retained_steps(self):
        run = trajectorytools.run_chain(
            self.channel, linalgtools.Haar(), [1., 0.], 10, seed=0,
            burn_in=4, thinning=3)
        self.assertEqual(list(run.retained_steps), [7, 10])
        self.assertTrue(numpy.array_equal(run.retained, run.path[[7, 10]]))
    def test_04_path_starts_with_x0(self):
        run = self.run_chain(1, burn_in=0)
        self.assertEqual(run.states[0], linalgtools.ProjectiveState([1., 0.]))
        self.assertEqual(len(run.path), 51)
        self.assertEqual(len(run.records), 50)
    def test_05_no_retained_state(self):
        with warnings.catch_warnings(record=True) as record:
            warnings.simplefilter('always')
            run = self.run_chain(0, burn_in=50)
        self.assertEqual(len(run.retained_steps), 0)
        self.assertTrue(any(issubclass(warning.category,
                                       objecttools.QuanTrajWarning)
                            for warning in record))
    def test_06_invalid_arguments(self):
        with self.assertRaises(ValueError):
            self.run_chain(0, thinning=0)
        with self.assertRaises(ValueError):
            self.run_chain(0, burn_in=-1)
    def test_07_wrong_initial_dimension(self):
        with self.assertRaises(objecttools.DimensionMismatchError):
            trajectorytools.run_chain(
                self.channel, linalgtools.Haar(), [1., 0., 0.], 5, seed=0)
    def test_08_kernel_hit_reported(self):
        kill = linalgtools.KrausChannel(
            [numpy.array([[0., 1.], [0., 0.]]),
             numpy.array([[0., 0.], [0., 1.]])], name='kill')
        with self.assertRaises(objecttools.KernelHitError):
            trajectorytools.run_chain(kill, linalgtools.Dirac.identity(2),
                                      [1., 0.], 5, seed=0, burn_in=0)


class Test04RunChains(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        self.threads = pub.options.threads
        pub.options.printprogress = False

    def tearDown(self):
        pub.options.printprogress = self.printprogress
        pub.options.threads = self.threads

    def run_chains(self):
        return trajectorytools.run_chains(
            depolarizing.channel(2, .5), linalgtools.Haar(), [1., 0.], 30,
            seed=3, burn_in=0, nchains=4)

    def test_01_independent_of_threads(self):
        pub.options.threads = 1
        sequential = self.run_chains()
        pub.options.threads = 3
        parallel = self.run_chains()
        for (first, second) in zip(sequential, parallel):
            self.assertTrue(numpy.array_equal(first.path, second.path))
    def test_02_chains_differ(self):
        runs = self.run_chains()
        self.assertEqual(len(runs), 4)
        self.assertFalse(numpy.array_equal(runs[0].path, runs[1].path))
        self.assertEqual(runs[2].seed, (3, 2))


class Test05Cesaro(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        pub.options.printprogress = False
        self.run = trajectorytools.run_chain(
            swap.channel(), linalgtools.Dirac.identity(2), [1., 0.], 21,
            seed=0, burn_in=1)

    def tearDown(self):
        pub.options.printprogress = self.printprogress

    def test_01_residue_classes(self):
        estimate = trajectorytools.cesaro_subsample(self.run, 2)
        self.assertEqual([measure.size for measure in estimate.classes],
                         [10, 10])
        self.assertTrue(numpy.allclose(
            estimate.classes[0].mean_density_matrix(), numpy.diag([1., 0.])))
        self.assertTrue(numpy.allclose(
            estimate.classes[1].mean_density_matrix(), numpy.diag([0., 1.])))
    def test_02_average(self):
        estimate = trajectorytools.cesaro_subsample([self.run, self.run], 2)
        self.assertTrue(numpy.allclose(
            estimate.average.mean_density_matrix(), numpy.eye(2)/2.))
        self.assertEqual(len(estimate.measures), 3)
    def test_03_invalid_period(self):
        with self.assertRaises(ValueError):
            trajectorytools.cesaro_subsample(self.run, 0)


class Test06OneStepSamples(unittest.TestCase):

    def test_01_barycenter_for_dirac(self):
        channel = counterexample.channel()
        start = linalgtools.ProjectiveState([1., 1j])
        samples = trajectorytools.one_step_samples(
            channel, linalgtools.Dirac.identity(2), start, 20000,
            numpy.random.default_rng(4))
        target = linalgtools.apply_schrodinger(channel, start.projector)
        self.assertLess(
            numpy.linalg.norm(samples.mean_density_matrix()-target), .02)
    def test_02_observable_mean_for_all_randomizations(self):
        channel = counterexample.channel()
        start = linalgtools.ProjectiveState([1., 1j])
        observable = numpy.array([[1., .3-.2j], [.3+.2j, -.5]])
        exact = numpy.vdot(
            start.rep, numpy.dot(linalgtools.apply_heisenberg(
                channel, observable), start.rep)).real
        hadamard = numpy.array([[1., 1.], [1., -1.]])/numpy.sqrt(2.)
        randomizations = (
            linalgtools.Haar(),
            linalgtools.FiniteMixture([.3, .7], [numpy.eye(2), hadamard]),
            linalgtools.Convex(.5, linalgtools.Dirac(hadamard)))
        for (idx, randomization) in enumerate(randomizations):
            samples = trajectorytools.one_step_samples(
                channel, randomization, start, 20000,
                numpy.random.default_rng(10+idx))
            values = numpy.einsum('ni,ij,nj->n', samples.points.conj(),
                                  observable, samples.points).real
            self.assertLess(abs(numpy.mean(values)-exact), .03)
