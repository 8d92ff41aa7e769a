"""Exact combinatorics of tangent cones to Schubert varieties in the Grassmannian."""

__version__ = "1.0.0"
