#!/usr/bin/env python3
#
# typek documentation build configuration file

import os
import sys

sys.path.insert(0, os.path.abspath('..'))

from typek import __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.napoleon',
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'typek'
copyright = u'2021, typek developers'
author = u'typek developers'

version = __version__
release = __version__

language = None

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = False

html_theme = 'sphinx_rtd_theme'

html_static_path = ['_static']

htmlhelp_basename = 'typekdoc'

latex_documents = [
    (master_doc, 'typek.tex', u'typek Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'typek', u'typek Documentation',
     [author], 1)
]

texinfo_documents = [
    (master_doc, 'typek', u'typek Documentation',
     author, 'typek', 'Exact verification of Calabi-Yau threefolds of type K.',
     'Miscellaneous'),
]

intersphinx_mapping = {'https://docs.python.org/': None}
