# import...
# ...from standard library
from __future__ import division, print_function
import unittest
# ...from site-packages
import numpy
# ...from QuanTraj
from quantraj import pub
from quantraj.core import experimenttools


def coin(sizes, seedsequence):
    """Fair coin."""
    values = numpy.random.default_rng(seedsequence).random(sizes['flips'])
    return [experimenttools.Check('mean', abs(values.mean()-.5) < .1,
                                  mean=float(values.mean()))]


class Test01Registry(unittest.TestCase):

    def setUp(self):
        experimenttools.experiment(
            'coin', flips=1000, quick={'flips': 100})(coin)

    def tearDown(self):
        experimenttools.EXPERIMENTS.pop('coin', None)

    def test_01_registered(self):
        experiment = experimenttools.EXPERIMENTS['coin']
        self.assertEqual(experiment.description, 'Fair coin.')
        self.assertEqual(experiment.sizes(), {'flips': 1000})
        self.assertEqual(experiment.sizes(quick=True), {'flips': 100})
    def test_02_verdict(self):
        verdict = experimenttools.EXPERIMENTS['coin'](seed=3, quick=True)
        self.assertEqual(verdict['verdict'], 'pass')
        self.assertEqual(verdict['config'], {'flips': 100})
        self.assertEqual((verdict['seed'], verdict['quick']), (3, True))
        self.assertEqual(verdict['checks'][0]['name'], 'mean')
    def test_03_reproducible(self):
        experiment = experimenttools.EXPERIMENTS['coin']
        self.assertEqual(experiment(seed=4), experiment(seed=4))
        self.assertNotEqual(experiment(seed=4)['checks'],
                            experiment(seed=5)['checks'])


class Test02Run(unittest.TestCase):

    def setUp(self):
        self.printprogress = pub.options.printprogress
        pub.options.printprogress = False

    def tearDown(self):
        pub.options.printprogress = self.printprogress

    def test_01_unknown_experiment(self):
        with self.assertRaises(KeyError):
            experimenttools.run('bell')
    def test_02_classifiers(self):
        verdict = experimenttools.run('classifiers', seed=0)
        self.assertEqual(verdict['verdict'], 'pass')
        self.assertTrue(all(check['passed'] for check in verdict['checks']))
    def test_03_full_and_quick_sizes(self):
        experiment = experimenttools.EXPERIMENTS['counterexample-6.1']
        self.assertEqual(experiment.sizes()['steps'], 100000)
        self.assertEqual(experiment.sizes(quick=True)['steps'], 20000)
        self.assertEqual(experiment.sizes(quick=True)['burn_in'], 1000)
    def test_04_every_experiment_documented(self):
        for experiment in experimenttools.EXPERIMENTS.values():
            self.assertTrue(experiment.description)
