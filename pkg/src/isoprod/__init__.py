"""Surfaces isogenous to a product: exact construction, cohomology
action, and classification of automorphisms acting trivially on H*."""

__version__ = "0.1.0"
