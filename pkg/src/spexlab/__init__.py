"""Desk-scale workbench for spectral Turán problems of degenerate graph families."""

__version__ = "0.1.0"
