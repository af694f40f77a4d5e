# import...
# ...from standard library:
from __future__ import division, print_function
import os
import sys
import shutil
# ...from site-packages:
from setuptools import setup

install = 'install' in sys.argv
coverage_report = 'coverage_report' in sys.argv
if coverage_report:
    sys.argv.remove('coverage_report')

packages = ['quantraj', 'quantraj.core', 'quantraj.auxs',
            'quantraj.channels', 'quantraj.tests', 'quantraj.docs']

setup(name='QuanTraj',
      version='0.1.0',
      description='Randomized quantum trajectories, their invariant '
                  'measures and ergodicity certificates of quantum channels.',
      license='GPL-3.0',
      classifiers=[
          'Intended Audience :: Education',
          'Intended Audience :: Science/Research',
          'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
          'Operating System :: POSIX :: Linux',
          'Operating System :: Microsoft :: Windows',
          'Programming Language :: Python :: 3',
          'Programming Language :: Python :: Implementation :: CPython',
          'Topic :: Scientific/Engineering :: Physics',
          'Topic :: Scientific/Engineering :: Mathematics'
      ],
      keywords='quantum channel trajectory invariant measure ergodicity',
      packages=packages,
      package_data={'quantraj.docs': ['*.rst']},
      include_package_data=True,
      python_requires='>=3.8',
      install_requires=['numpy', 'scipy', 'sympy'],
      entry_points={
          'console_scripts': ['quantraj = quantraj.core.commandtools:main']})

if install:
    # Priorise site-packages (on Debian-based Linux distributions as Ubuntu
    # also dist-packages) in the import order to make sure, the following
    # imports refer to the newly build quantraj package on the respective
    # computer.
    paths = [path for path in sys.path if path.endswith('-packages')]
    for path in paths:
        sys.path.insert(0, path)
    # Make all restructured text documentation files available for
    # doctesting.
    import quantraj.docs
    for filename in os.listdir(os.path.join('quantraj', 'docs')):
        if filename.endswith('.rst'):
            shutil.copy(os.path.join('quantraj', 'docs', filename),
                        os.path.join(quantraj.docs.__path__[0], filename))
    # Execute all tests.
    oldpath = os.path.abspath('.')
    import quantraj.tests
    os.chdir(os.sep.join(quantraj.tests.__file__.split(os.sep)[:-1]))
    exitcode = int(os.system('coverage run -m --branch '
                             '--source quantraj --omit=test_everything.py '
                             'test_everything'))
    if exitcode:
        print('Use this QuanTraj version with caution on your system.  At '
              'least one verification test failed.  You should see in the '
              'information given above, whether essential features of '
              'QuanTraj are broken or perhaps only some typing errors in '
              'documentation were detected.  (exit code: %d)' % exitcode)
        sys.exit(1)
    if coverage_report:
        os.system('coverage report -m --skip-covered')
        os.system('coverage xml')
        shutil.move('coverage.xml', os.path.join(oldpath, 'coverage.xml'))
