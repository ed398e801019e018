# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

from polyflow import __version__

# -- Project information -----------------------------------------------------

project = 'polyflow'
copyright = '2026, the polyflow authors'
author = 'the polyflow authors'

version = __version__
release = __version__

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
]

source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinxdoc'
html_sidebars = {
    '**': ['relations.html', 'globaltoc.html', 'searchbox.html']
}
default_role = 'py:obj'

# -- Options for HTMLHelp output ---------------------------------------------

htmlhelp_basename = 'polyflowdoc'
