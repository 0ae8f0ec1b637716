"""Exact toolkit for pairs of triangles with perfect-square sides sharing
both perimeter and area.

All arithmetic is exact. Scalars cross the boundary as python ints or
"num/den" strings; reports come back as plain dicts matching the CLI's
structured output.
"""

from ._core import (
    __version__,
    ec_add,
    ec_mul,
    ec_neg,
    factor_a,
    factor_b,
    generate_pairs,
    is_trivial,
    isqrt,
    on_curve,
    on_quartic,
    pair_from_pqr,
    perfect_square_root,
    quartic_coeffs,
    rational_square_root,
    search,
    solve_u,
    substitute,
    to_quartic,
    to_weierstrass,
    verify,
)

__all__ = [
    "__version__",
    "ec_add",
    "ec_mul",
    "ec_neg",
    "factor_a",
    "factor_b",
    "generate_pairs",
    "is_trivial",
    "isqrt",
    "on_curve",
    "on_quartic",
    "pair_from_pqr",
    "perfect_square_root",
    "quartic_coeffs",
    "rational_square_root",
    "search",
    "solve_u",
    "substitute",
    "to_quartic",
    "to_weierstrass",
    "verify",
]
