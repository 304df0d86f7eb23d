"""Shared helpers for the test suite.

The determinant oracle here is deliberately naive (permutation expansion)
so it shares no code path with the fraction-free elimination it checks.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from multidisc import UniPoly


def perm_det(rows):
    """Determinant by explicit permutation expansion; fine up to ~7x7."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions for the parity
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = sign
        for i in range(n):
            prod = prod * rows[i][perm[i]]
        total = total + prod
    return total


def random_int_poly(rng: random.Random, n: int, bound: int = 9) -> UniPoly:
    """Random integer polynomial of exact degree n."""
    coeffs = [rng.randint(-bound, bound) for _ in range(n)]
    lead = rng.choice([c for c in range(-bound, bound + 1) if c])
    return UniPoly(coeffs + [lead])


def shift_poly(poly: UniPoly, offset) -> UniPoly:
    """Substitute x + offset for x (Horner over polynomials)."""
    base = UniPoly([Fraction(offset), 1])
    acc = UniPoly()
    for c in reversed(poly.coeffs):
        acc = acc * base + UniPoly([c])
    return acc
