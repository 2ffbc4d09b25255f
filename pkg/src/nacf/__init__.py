"""Exact arithmetic for triangular-coefficient polynomial families.

Subpackages cover integer polynomial construction (polyz), prime-field
factorization shapes (modp), certified floating-point root bounds (roots),
irreducibility certificates (irred), exact discriminants (discrim),
Galois-group identification from Frobenius statistics (galois), and the
quadratic-field theta-series machinery over Z[sqrt(-2)] (qfield).
"""

__version__ = "0.1.0"
