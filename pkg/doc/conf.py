# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.
#
# This file does only contain a selection of the most common options. For a
# full list see the documentation:
# http://www.sphinx-doc.org/en/master/config

from typing import Any, Mapping

import os
import re
from datetime import datetime


# -- Project information -----------------------------------------------------

year = datetime.now().year
project = "Halfcrit"
copyright = "{0} the Halfcrit authors".format(year)
author = "the Halfcrit authors"

# The version is read from setup.py, without importing the package
basepath, _ = os.path.split(os.path.realpath(__file__))
with open(os.path.join(basepath, "..", "setup.py"), encoding="utf-8") as f:
    m = re.search(r'version="([^"]+)"', f.read())
release = m.group(1) if m else "0.0.0"
version = ".".join(release.split(".")[:2])


# -- General configuration ---------------------------------------------------

extensions = ["sphinx.ext.autodoc"]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"
language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"
todo_include_todos = False


# -- Options for HTML output -------------------------------------------------

html_theme = "alabaster"
html_sidebars = {
    "**": ["about.html", "navigation.html", "relations.html", "searchbox.html"]
}
html_theme_options: Mapping[str, Any] = {
    "description": "Classifier uncertainty auditing",
    "sidebar_collapse": False,
    "fixed_sidebar": True,
}
htmlhelp_basename = "Halfcritdoc"


# -- Options for LaTeX output ------------------------------------------------

latex_elements = {
    "papersize": "a4paper",
    "pointsize": "10pt",
}
latex_documents = [
    (master_doc, "Halfcrit.tex", "Halfcrit Documentation", author, "manual")
]

man_pages = [(master_doc, "halfcrit", "Halfcrit Documentation", [author], 1)]
