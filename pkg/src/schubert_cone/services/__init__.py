"""Combinatorial services: index sets, bijections, Hilbert functions, paths and minors."""
