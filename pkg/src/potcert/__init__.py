"""Exact reconstruction and certification of a 5x5 rank-2 counterexample to
the permanent-on-top and Pate conjectures."""

__version__ = "0.1.0"
