# -*- coding: utf-8 -*-
"""This module provides features, which are used (or at least shared) by
all other modules of QuanTraj, most notably the global `options`.
"""
# import from...
# ...the standard library
import sys as __sys
# from QuanTraj
from quantraj.core import objecttools

options = objecttools.Options()

pyversion = int(__sys.version[0])
_printprogress_indentation = -4
