# Sphinx configuration of the racglattice documentation, build it with
# 'sphinx-build docs/source docs/build' from the root of the source tree.

import sys
from pathlib import Path

# autodoc imports racglattice from the source tree, not an installed copy
path = Path(__file__).parent / "../.."
sys.path.insert(0, str(path.absolute()))

import racglattice  # noqa: E402  pylint: disable=wrong-import-position

# -- Project information -----------------------------------------------------

project = 'racglattice'
copyright = '2026, The racglattice developers'  # pylint: disable=redefined-builtin
author = 'The racglattice developers'
release = racglattice.__version__

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx_rtd_theme",
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax'
]

# the docstrings follow the numpy convention
napoleon_google_docstring = False
napoleon_numpy_docstring = True

# keep the order of the sources, builders and checks read top-down
autodoc_member_order = 'bysource'

exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
