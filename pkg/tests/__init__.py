"""
Test Suite for the Variable-Inclusion Workbench

Test Structure:
- unit/: Unit tests for individual modules
- integration/: End-to-end runs of the reproduction suite
- cli/: Command-line tests (marker: cli)

Fixtures live under corpus/ at the repository root.
"""

__version__ = "0.1.0"

CORPUS_DIR = "corpus"

__all__ = [
    "CORPUS_DIR",
]
