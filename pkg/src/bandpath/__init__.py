"""Exact invariants and coherent band pathways for small knots and links."""
__version__ = "0.1.0"
