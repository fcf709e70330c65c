"""Desk-scale workbench for constructive graph colourings."""

__version__ = "0.1.0"
