"""
Variable-Inclusion Workbench

Finite logical matrices, Płonka sums, Hilbert proof checking and search, and
left variable inclusion companions, with a catalog of intuitionistic,
pre-rough and three-valued paraconsistent logics.
"""

__version__ = "0.1.0"
__author__ = "Variable-Inclusion Workbench Contributors"
__email__ = "contact@example.com"

# Package metadata
__title__ = "varincl-workbench"
__description__ = "Workbench for variable inclusion companions of propositional logics"
__license__ = "MIT"
__copyright__ = "Copyright 2026 Variable-Inclusion Workbench Contributors"
