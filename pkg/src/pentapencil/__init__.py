"""Exact and numeric computations around Gauss's miraculous pentagram, Poncelet closure and double equations."""

__version__ = "0.1.0"
