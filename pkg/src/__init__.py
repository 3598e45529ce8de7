"""
cauchykit package initializer.

Exact and numerical tooling for Cauchy numbers of the second kind.
"""

__version__ = "0.3.0"
