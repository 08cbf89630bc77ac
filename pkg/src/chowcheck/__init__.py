"""Exact intersection theory for rank-2 bundles on Fano fourfolds."""

__version__ = "0.1.0"
