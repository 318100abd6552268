"""Unit Tests Package

Test Structure:
- test_formula.py, test_parser.py, test_generate.py: formulas and their syntax
- test_algebra.py, test_classes.py, test_plonka.py, test_storage.py: matrices and documents
- test_system.py, test_checker.py, test_scripts.py, test_search.py,
  test_transforms.py, test_soundness.py: Hilbert systems and proofs
- test_instances.py, test_oracles.py, test_properties.py, test_restricted.py:
  consequence oracles and companions
- test_registry.py, test_probes.py: catalog and probes
- test_config.py: configuration
"""

__all__ = []
