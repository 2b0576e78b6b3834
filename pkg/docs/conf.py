# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from maxarc import __version__  # noqa: E402

# -- Project information -----------------------------------------------------

project = u'maxarc'
copyright = u'2026, maxarc contributors'
author = u'maxarc contributors'

# The short X.Y version
version = u'.'.join(__version__.split('.')[:2])
# The full version, including alpha/beta/rc tags
release = __version__


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
language = 'en'
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# Keep numeric defaults such as the 2**24 budget readable in signatures.
autodoc_preserve_defaults = True


# -- Options for HTML output -------------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if on_rtd:
    import sphinx_rtd_theme
    html_theme = "sphinx_rtd_theme"
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
else:
    # The theme to use for HTML and HTML Help pages.  See the documentation for
    # a list of builtin themes.
    html_theme = 'alabaster'

html_static_path = ['_static']
htmlhelp_basename = 'maxarcdoc'


# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'maxarc.tex', u'maxarc Documentation',
     author, 'manual'),
]


# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'maxarc', u'maxarc Documentation',
     [author], 1)
]
