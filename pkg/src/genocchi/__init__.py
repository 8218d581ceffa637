"""Higher-order generalized q-Genocchi numbers attached to Dirichlet characters."""

__version__ = "0.1.0"
