"""Self-orthogonal codes from weakly self-orthogonal 1-designs, orbit
matrices, and fixed-point submatrices, with designs built from transitive
permutation-group actions."""

__version__ = "0.1.0"
