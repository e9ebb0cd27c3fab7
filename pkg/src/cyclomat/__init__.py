"""Cyclotomic matrices over finite fields: constructions, determinants and checks."""

__version__ = "0.1.0"
