"""Exact combinatorics of symmetric systems: intersection systems as graphs,
independence numbers, cross families and primitivity checks."""

__version__ = "1.0.0"
