"""Characters of simple gl(m|n)-modules via closed formulas and diagram calculus."""

__version__ = "0.1.0"
