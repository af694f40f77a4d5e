# import...
# ...from standard library
from __future__ import division, print_function
import unittest
import warnings
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj.core import linalgtools
from quantraj.core import objecttools
from quantraj.core import trajectorytools
from quantraj.auxs import analysistools
from quantraj.channels import counterexample
from quantraj.channels import depolarizing
from quantraj.channels import example1
from quantraj.channels import example2
from quantraj.channels import projection
from quantraj.channels import swap


class Test01Irreducibility(unittest.TestCase):

    def setUp(self):
        self.dephasing = linalgtools.KrausChannel(
            [numpy.diag([1., 0.]), numpy.diag([0., 1.])], name='dephasing')

    def test_01_irreducible_channels(self):
        for channel in (counterexample.channel(), swap.channel(),
                        example1.channel(), example2.channel()):
            self.assertTrue(analysistools.is_irreducible(channel)[0])
    def test_02_invariant_subspace(self):
        flag, witness = analysistools.is_irreducible(self.dephasing)
        self.assertFalse(flag)
        self.assertEqual(witness.shape[0], 2)
        for v in self.dephasing.kraus:
            image = numpy.dot(v, witness)
            projected = numpy.dot(witness, numpy.dot(witness.conj().T,
                                                     image))
            self.assertTrue(numpy.allclose(image, projected))
    def test_03_algebra_dimension(self):
        self.assertEqual(
            analysistools.generated_algebra_dim(self.dephasing), 2)
        self.assertEqual(
            analysistools.generated_algebra_dim(counterexample.channel()), 4)
    def test_04_period_of_reducible_channel(self):
        with self.assertRaises(objecttools.NotIrreducibleError):
            analysistools.period_and_decomposition(self.dephasing)
    def test_05_rotated_pinching(self):
        rng = numpy.random.default_rng(7)
        for dummy in range(5):
            u = trajectorytools.sample_haar_unitary(3, rng)
            channel = linalgtools.KrausChannel(
                [numpy.outer(u[:, idx], u[:, idx].conj())
                 for idx in range(3)], name='pinching')
            self.assertEqual(
                analysistools.generated_algebra_dim(channel), 3)
            flag, witness = analysistools.is_irreducible(channel)
            self.assertFalse(flag)
            self.assertIsNotNone(witness)
            for v in channel.kraus:
                image = numpy.dot(v, witness)
                projected = numpy.dot(
                    witness, numpy.dot(witness.conj().T, image))
                self.assertTrue(numpy.allclose(image, projected))
    def test_06_pinching_in_diagonal_basis(self):
        plus = numpy.array([1., 1.])/numpy.sqrt(2.)
        minus = numpy.array([1., -1.])/numpy.sqrt(2.)
        channel = linalgtools.KrausChannel(
            [numpy.outer(plus, plus), numpy.outer(minus, minus)])
        self.assertEqual(analysistools.generated_algebra_dim(channel), 2)
        flag, witness = analysistools.is_irreducible(channel)
        self.assertFalse(flag)
        self.assertEqual(witness.shape, (2, 1))
        overlap = max(abs(numpy.vdot(plus, witness[:, 0])),
                      abs(numpy.vdot(minus, witness[:, 0])))
        self.assertAlmostEqual(overlap, 1.)
        self.assertFalse(analysistools.is_primitive(channel))


class Test02Period(unittest.TestCase):

    def test_01_swap(self):
        period, decomposition = analysistools.period_and_decomposition(
            swap.channel())
        self.assertEqual(period, 2)
        self.assertEqual(decomposition.dims, [1, 1])
        projections = decomposition.projections
        self.assertTrue(numpy.allclose(
            linalgtools.apply_heisenberg(swap.channel(), projections[1]),
            projections[0]))
    def test_02_cyclic_shift_of_three(self):
        shift = numpy.roll(numpy.eye(3), 1, axis=0)
        channel = linalgtools.KrausChannel(
            [numpy.outer(shift[:, idx], numpy.eye(3)[idx])
             for idx in range(3)], name='shift')
        period, decomposition = analysistools.period_and_decomposition(
            channel)
        self.assertEqual(period, 3)
        self.assertEqual(decomposition.dims, [1, 1, 1])
    def test_03_aperiodic(self):
        for channel in (depolarizing.channel(3, .5), projection.channel(),
                        counterexample.channel()):
            self.assertEqual(
                analysistools.period_and_decomposition(channel)[0], 1)
    def test_04_peripheral_eigenvalues(self):
        values = analysistools.peripheral_eigenvalues(
            depolarizing.channel(2, .5))
        self.assertEqual(len(values), 1)
        self.assertAlmostEqual(values[0], 1.)
    def test_05_decomposition_summary(self):
        dict_ = analysistools.period_and_decomposition(
            swap.channel())[1].to_dict()
        self.assertEqual(dict_['period'], 2)
        self.assertEqual(len(dict_['projections']), 2)


class Test03Primitivity(unittest.TestCase):

    def test_01_primitive(self):
        for channel in (counterexample.channel(), example1.channel(),
                        example2.channel(), projection.channel()):
            self.assertTrue(analysistools.is_primitive(channel))
    def test_02_not_primitive(self):
        self.assertFalse(analysistools.is_primitive(swap.channel()))
    def test_03_crosscheck_silent(self):
        with warnings.catch_warnings(record=True) as record:
            warnings.simplefilter('always')
            analysistools.is_primitive(counterexample.channel())
            analysistools.is_primitive(swap.channel())
        self.assertFalse(any(issubclass(warning.category,
                                        objecttools.QuanTrajWarning)
                             for warning in record))
    def test_04_positivity_index(self):
        self.assertEqual(
            analysistools.positivity_index(depolarizing.channel(2, .5)), 1)
        self.assertIsNone(analysistools.positivity_index(swap.channel()))
    def test_05_primitivity_index(self):
        self.assertEqual(
            analysistools.primitivity_index(depolarizing.channel(2, .5)), 1)
        self.assertEqual(
            analysistools.primitivity_index(counterexample.channel()), 3)
    def test_06_word_span_dims(self):
        self.assertEqual(
            analysistools.word_span_dims(swap.channel(), [1., 0.], 4),
            [1, 1, 1, 1, 1])


class Test04Diagnostics(unittest.TestCase):

    def test_01_positivity_improving(self):
        result = analysistools.positivity_improving_diagnostic(
            depolarizing.channel(3, .5), restarts=5,
            rng=numpy.random.default_rng(0))
        self.assertEqual(result.verdict, 'improving')
        self.assertGreater(result.minimum, 1e-6)
    def test_02_counterexample_found(self):
        result = analysistools.positivity_improving_diagnostic(
            swap.channel(), restarts=20, rng=numpy.random.default_rng(0))
        self.assertEqual(result.verdict, 'counterexample')
        self.assertLess(result.minimum, 1e-9)
    def test_03_result_summary(self):
        dict_ = analysistools.positivity_improving_diagnostic(
            example1.channel()).to_dict()
        self.assertEqual(dict_['verdict'], 'counterexample')
        self.assertEqual(dict_['state'], [[1., 0.], [0., 0.], [0., 0.]])
    def test_04_covariance(self):
        unitary = numpy.array([[0., 1.], [1., 0.]])
        self.assertTrue(analysistools.is_covariant(swap.channel(), unitary))
        self.assertFalse(analysistools.is_covariant(
            counterexample.channel(), unitary))
    def test_05_covariance_not_unitary(self):
        with self.assertRaises(objecttools.NotUnitaryError):
            analysistools.is_covariant(swap.channel(), 2.*numpy.eye(2))


class Test05Purification(unittest.TestCase):

    def test_01_nonsingular(self):
        result = analysistools.purification_check(
            counterexample.channel(), counterexample.randomization())
        self.assertEqual(result.verdict, 'holds-by-nonsingularity')
    def test_02_unitary_mixture_fails(self):
        paulis = [numpy.array([[0., 1.], [1., 0.]]),
                  numpy.array([[0., -1j], [1j, 0.]]),
                  numpy.diag([1., -1.])]
        channel = linalgtools.KrausChannel(
            [pauli/numpy.sqrt(3.) for pauli in paulis], name='pauli')
        result = analysistools.purification_check(
            channel, linalgtools.Dirac.identity(3))
        self.assertEqual(result.verdict, 'fails')
        self.assertEqual(result.to_dict()['dark_projector'],
                         [[[1., 0.], [0., 0.]], [[0., 0.], [1., 0.]]])
    def test_03_qubit_without_unitary_multiples(self):
        result = analysistools.purification_check(
            depolarizing.channel(2, .5), linalgtools.Dirac.identity(5))
        self.assertEqual(result.verdict, 'holds')
        self.assertEqual((result.span_dim, result.target_dim), (2, 4))
    def test_04_reducible(self):
        channel = linalgtools.KrausChannel([numpy.eye(2)], name='id')
        with self.assertRaises(objecttools.NotIrreducibleError):
            analysistools.purification_check(channel,
                                             linalgtools.Dirac.identity(1))


class Test06InvariantState(unittest.TestCase):

    def test_01_projection(self):
        self.assertTrue(numpy.allclose(
            analysistools.invariant_state(projection.channel()).mat,
            projection.density()))
    def test_02_fixed_point(self):
        channel = counterexample.channel()
        rho = analysistools.invariant_state(channel).mat
        self.assertTrue(numpy.allclose(
            linalgtools.apply_schrodinger(channel, rho), rho))
    def test_03_similarity_normalization(self):
        kraus = example2.pre_similarity_kraus()
        channel = analysistools.similarity_normalized(kraus, name='w')
        self.assertTrue(linalgtools.validate(channel, 1e-8).ok)
        self.assertEqual(analysistools.generated_algebra_dim(channel),
                         analysistools.generated_algebra_dim(kraus))
    def test_04_perron_matrix_positive(self):
        radius, matrix = analysistools.perron_eigenvector(
            example2.pre_similarity_kraus())
        self.assertGreater(radius, 0.)
        self.assertGreater(numpy.min(numpy.linalg.eigvalsh(matrix)), 0.)


class Test07Analyze(unittest.TestCase):

    def test_01_report(self):
        report = analysistools.analyze(counterexample.channel(),
                                       counterexample.randomization(),
                                       restarts=5)
        self.assertTrue(report.irreducible)
        self.assertEqual(report.period, 1)
        self.assertTrue(report.primitive)
        self.assertEqual(report.algebra_dim, 4)
        self.assertEqual(report.primitivity_index, 3)
    def test_02_reducible_report(self):
        channel = linalgtools.KrausChannel(
            [numpy.diag([1., 0.]), numpy.diag([0., 1.])], name='dephasing')
        dict_ = analysistools.analyze(channel, restarts=3).to_dict()
        self.assertFalse(dict_['irreducible'])
        self.assertEqual(dict_['period'], 'unknown')
        self.assertFalse(dict_['primitive'])
        self.assertIsNotNone(dict_['witness_subspace'])
        self.assertIsNone(dict_['purification'])
    def test_03_report_keys(self):
        dict_ = analysistools.analyze(swap.channel(), restarts=3).to_dict()
        self.assertEqual(
            sorted(dict_),
            ['algebra_dim', 'invariant_state', 'irreducible',
             'peripheral_eigenvalues', 'period', 'positivity', 'primitive',
             'primitivity_index', 'purification', 'subspace_dims',
             'witness_subspace'])
        self.assertEqual(dict_['subspace_dims'], [1, 1])
