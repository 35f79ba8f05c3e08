"""Exact Macdonald polynomial expansions.

Computes the integral form J_lambda(X; q, t) in several bases (modified
Schur, Schur, monomial) by independent routes: determinantal formulas,
creation-operator recursion, and a Gram-Schmidt orthogonalization oracle.
All arithmetic is exact over the field of rational functions in q and t.
"""

__version__ = "0.1.0"

ENGINE_VERSION = __version__
