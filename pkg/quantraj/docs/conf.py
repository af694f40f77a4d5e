# -*- coding: utf-8 -*-
#
# QuanTraj documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# The package root is two levels above this directory.
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.napoleon',
              'sphinx.ext.intersphinx',
              'sphinx.ext.viewcode',
              'sphinx.ext.mathjax']

autoclass_content = 'class'
autodoc_default_options = {'undoc-members': True}
autodoc_member_order = 'bysource'

# Napoleon settings
napoleon_google_docstring = False
napoleon_numpy_docstring = False
napoleon_include_private_with_doc = False
napoleon_include_special_with_doc = False
napoleon_use_admonition_for_examples = False
napoleon_use_admonition_for_notes = False
napoleon_use_admonition_for_references = False
napoleon_use_ivar = False
napoleon_use_param = False
napoleon_use_rtype = False

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None),
    'sympy': ('https://docs.sympy.org/latest', None)}

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'QuanTraj'
version = '0.1'
release = '0.1.0'

exclude_patterns = ['_build']
add_function_parentheses = True
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'default'
html_theme_options = {'stickysidebar': True}
html_static_path = []
htmlhelp_basename = 'QuanTrajdoc'

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'quantraj', u'QuanTraj Documentation', [], 1)
]
