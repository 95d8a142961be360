"""Exact computer algebra and verification suite for classical-group
invariant theory: Groebner bases, equivariant Hilbert functions, flat
torus degenerations, tangent-space rank bounds, and nilpotent-orbit
combinatorics, all over exact rationals."""

__version__ = "0.1.0"
