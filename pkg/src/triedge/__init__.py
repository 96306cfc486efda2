"""Triangular-edge minimisation toolkit."""
