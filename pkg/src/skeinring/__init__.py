"""Skein-theoretic oriented link invariants over specializable coefficient rings."""

__version__ = "0.1.0"
