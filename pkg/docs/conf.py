# tori documentation build configuration file.
import os
import sys
sys.path.insert(0, os.path.abspath('../'))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
]
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'tori'
copyright = '2026, tori developers'
author = 'tori developers'
version = '1.0'
release = '1.0.0'

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'
todo_include_todos = False

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'toridoc'

latex_documents = [
    (master_doc, 'tori.tex', 'tori Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'tori', 'tori Documentation', [author], 1)
]
