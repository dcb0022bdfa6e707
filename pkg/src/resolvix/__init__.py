"""resolvix: a finite-scale workbench for base-partition combinatorics."""

__version__ = "0.1.0"
