"""
QuanTraj

Randomized quantum trajectories: simulation of the Markov chains on the
complex projective space driven by randomized Kraus decompositions of
quantum channels, estimation and testing of their invariant measures,
GAP measures and exact certificates of channel ergodicity properties.
"""

from quantraj.core.linalgtools import ProjectiveState
from quantraj.core.linalgtools import DensityMatrix
from quantraj.core.linalgtools import KrausChannel
from quantraj.core.linalgtools import Dirac
from quantraj.core.linalgtools import FiniteMixture
from quantraj.core.linalgtools import Haar
from quantraj.core.linalgtools import Convex
from quantraj.core.trajectorytools import run_chain
from quantraj.core.trajectorytools import run_chains
from quantraj.auxs.measuretools import EmpiricalMeasure
from quantraj.auxs.measuretools import estimate_invariant
from quantraj.auxs.measuretools import wasserstein1
from quantraj.auxs.gaptools import GapSampler
from quantraj.auxs.analysistools import analyze
from quantraj.core.objecttools import QuanTrajWarning
from quantraj.core import magictools
from quantraj import channels
from quantraj import pub

import warnings


def customwarn(message, category, filename, lineno, file=None, line=None):
    magictools.currentstream().write(warnings.formatwarning(
        message, category, filename, lineno))
warnings.showwarning = customwarn
warnings.filterwarnings('always', category=QuanTrajWarning)

__all__ = ['pub', 'channels',
           'ProjectiveState', 'DensityMatrix', 'KrausChannel',
           'Dirac', 'FiniteMixture', 'Haar', 'Convex',
           'run_chain', 'run_chains', 'EmpiricalMeasure',
           'estimate_invariant', 'wasserstein1', 'GapSampler', 'analyze',
           'QuanTrajWarning']
