#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# plotkin_wef documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import re
import sys

# the package itself, for autodoc
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))


def _version():
    here = os.path.dirname(os.path.abspath(__file__))
    with open(os.path.join(here, '..', '..', 'plotkin_wef', 'version.py')) as f:
        return re.search(r"__version__\s*=\s*'([^']+)'", f.read()).group(1)


# -- General configuration ------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.todo',
    'sphinx.ext.mathjax',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'plotkin_wef'
copyright = '2024, the plotkin_wef developers'
author = 'the plotkin_wef developers'

# The short X.Y version, and the full version including alpha/beta/rc tags.
version = _version()
release = version

language = 'en'
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = True

# -- Options for HTML output ----------------------------------------------

import sphinx_rtd_theme
html_theme = "sphinx_rtd_theme"

html_domain_indices = False
html_show_sourcelink = False
htmlhelp_basename = 'plotkin_wefdoc'

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {
}

latex_documents = [
  (master_doc, 'plotkin_wef.tex', 'plotkin\\_wef Documentation',
   author, 'manual'),
]

# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'plotkin-wef', 'plotkin_wef Documentation',
     [author], 1)
]
