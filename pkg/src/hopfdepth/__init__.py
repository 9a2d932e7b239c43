"""Depth of Hopf subalgebras in factorization algebras and double cross products."""
__version__ = "0.1.0"
