"""Liar's domination on unit disk graphs.

Exact fixed-point UDG construction, verifiers and solvers for (liar's)
domination, orthogonal grid embeddings, and the planar-graph-to-UDG gadget
reduction together with an empirical check of its size correspondence.
"""

__version__ = "0.1.0"
