"""Rubik's cube Cayley-graph census and probabilistic diameter estimates."""

__version__ = "0.1.0"
