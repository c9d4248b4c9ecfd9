# Configuration file for the Sphinx documentation builder.
#
# For the full list of built-in configuration values, see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# Add kquasi to path


import sys
import os

sys.path.insert(0, os.path.abspath('..'))

import kquasi

rst_prolog = r"""
.. role:: paramtype

.. role:: monosp

.. |int| replace:: :paramtype:`integer`
.. |bool| replace:: :paramtype:`boolean`
.. |table| replace:: :paramtype:`CayleyTable`

.. |numpy| replace:: :monosp:`numpy`
.. |sympy| replace:: :monosp:`sympy`

.. |nbsp| unicode:: 0xA0
   :trim:

"""

# -- Project information -----------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#project-information

project = 'kquasi'
copyright = '2024, kquasi developers'
author = 'kquasi developers'
release = kquasi.__version__

# -- General configuration ---------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#general-configuration

extensions = []
extensions.append('sphinx.ext.autodoc')
extensions.append('sphinx.ext.coverage')
extensions.append('sphinx.ext.napoleon')
extensions.append('sphinx.ext.intersphinx')
extensions.append('sphinx_copybutton')


templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']


# -- Options for HTML output -------------------------------------------------
# https://www.sphinx-doc.org/en/master/usage/configuration.html#options-for-html-output

html_title = 'kquasi'
html_theme = 'furo'
html_static_path = ['_static']

# Force pygments style in dark mode back to the light variant
pygments_dark_style = 'tango'

# If true, links to the reST sources will be added to the sidebar.
html_show_sourcelink = False

html_theme_options = {
   # Disable edit button on read the docs
   "top_of_page_button": None,
}
