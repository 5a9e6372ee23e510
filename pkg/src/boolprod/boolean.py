"""Subset-sum alphabets and Schur expansions of their products.

The (n,k) product is the product of the subset sums x_S over all k-subsets S
of {1..n}; the total product multiplies these over every k.  Everything is
expanded exactly in monomial space and converted through Kostka inversion; no
Schur-basis multiplication rule is used anywhere.
"""

from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import CapacityError
from .polyring import Alphabet, MonomialPoly, alphabet_product, graded_elementary, poly_product
from .schur import SchurVector, schur_from_poly

TOTAL_PRODUCT_MAX_N = 5  # degree 2^n - 1 blows up quickly past this


def subset_alphabet(n: int, k: int) -> Alphabet:
    """Alphabet of the C(n,k) subset-sum forms, subsets in lexicographic order."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    forms = []
    for subset in combinations(range(n), k):
        coeffs = [0] * n
        for i in subset:
            coeffs[i] = 1
        forms.append(tuple(coeffs))
    return Alphabet(n, tuple(forms))


@lru_cache(maxsize=None)
def _graded_subset_elementary(n: int, k: int) -> tuple[MonomialPoly, ...]:
    return tuple(graded_elementary(subset_alphabet(n, k)))


def ep_subset(n: int, k: int, p: int) -> SchurVector:
    """Schur expansion of the p-th elementary symmetric polynomial of the
    (n,k) subset-sum alphabet; zero vector for p past the alphabet size."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    graded = _graded_subset_elementary(n, k)
    if p >= len(graded):
        return SchurVector(n)
    return schur_from_poly(graded[p])


def boolean_product(n: int, k: int) -> SchurVector:
    """Schur expansion of the (n,k) product; homogeneous of degree C(n,k)."""
    return schur_from_poly(alphabet_product(subset_alphabet(n, k)))


def total_boolean(n: int) -> SchurVector:
    """Schur expansion of the total product over k = 1..n, degree 2^n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > TOTAL_PRODUCT_MAX_N:
        raise CapacityError(
            f"total product supported up to n={TOTAL_PRODUCT_MAX_N} "
            f"(degree 2^n - 1 = {2**n - 1} at n={n})"
        )
    factors = [alphabet_product(subset_alphabet(n, k)) for k in range(1, n + 1)]
    return schur_from_poly(poly_product(factors, n))


def boolean_degree(n: int, k: int) -> int:
    return comb(n, k)
