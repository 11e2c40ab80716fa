"""
vertex-forms package.
Exact invariant bilinear forms, their radicals and the identities behind
them, on truncated graded vertex algebras.
"""

__version__ = '1.0.0'
