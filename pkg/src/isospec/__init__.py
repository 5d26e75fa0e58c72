"""Element-order spectra of L2(q), 2G2(q), J1 and friends, with checkers for
the arithmetic behind recognition-by-spectrum results."""

__version__ = "0.1.0"
