"""Minuscule Schubert varieties, their Calabi-Yau complete intersections, periods, monodromy and BPS numbers."""

__version__ = "0.1.0"
