import os
import sys

sys.path.insert(0, os.path.abspath('../../'))

from kcore import VERSION

extensions = ['sphinx.ext.autodoc']

autodoc_mock_imports = ['graphviz', 'networkx', 'sympy']

source_suffix = '.rst'
master_doc = 'index'

project = 'kcore'
copyright = '2024, kcore contributors'

version = '.'.join(map(str, VERSION))
release = version

pygments_style = 'sphinx'
html_theme = 'default'

man_pages = [
    ('index', 'kcore', 'kcore Documentation', ['kcore contributors'], 1),
]
