"""Products over two alphabets and their expansion into Schur pairs.

pjk_expand multiplies every form X_S + Y_T (S a j-subset of the x indices,
T a k-subset of the y indices) over the concatenated variable set and writes
the result as sum a_{lm} s_l(X) s_m(Y).  The j = k = 1 case must reproduce
the dual Cauchy expansion, which dual_cauchy_reference builds directly from
box complements without touching any polynomial arithmetic.
"""

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .errors import AsymmetryError, CapacityError, ConsistencyError
from .polyring import Alphabet, MonomialPoly, alphabet_product
from .schur import MVector, m_to_schur
from .tableaux import Partition, conjugate, subpartitions

PJK_FORM_CAP = 30
CAUCHY_BOX_CAP = 16

PartitionPair = tuple[Partition, Partition]


@dataclass
class BiSchurVector:
    """Combination of products s_lambda(X) s_mu(Y) over split variable blocks."""

    n: int
    m: int
    terms: dict[PartitionPair, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {pair: c for pair, c in self.terms.items() if c}
        for la, mu in self.terms:
            if len(la) > self.n or len(mu) > self.m:
                raise ValueError(f"({la}, {mu}) does not fit in {self.n}+{self.m} variables")

    def items_sorted(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())


def _strip(exps: tuple[int, ...]) -> Partition:
    return tuple(e for e in exps if e)


def _double_m(poly: MonomialPoly, n: int, m: int) -> dict[PartitionPair, int]:
    """Read off coefficients on pairs of weakly decreasing exponent blocks.

    Every monomial is compared against its block-sorted representative first,
    so asymmetry in either block is caught and attributed before extraction.
    """
    for exp, c in poly.terms.items():
        alpha, beta = exp[:n], exp[n:]
        ca = tuple(sorted(alpha, reverse=True))
        cb = tuple(sorted(beta, reverse=True))
        half = ca + beta
        if poly.coefficient(half) != c:
            raise AsymmetryError(exp, half, block="x")
        if poly.coefficient(ca + cb) != poly.coefficient(half):
            raise AsymmetryError(half, ca + cb, block="y")
    out = {}
    for exp, c in poly.terms.items():
        alpha, beta = exp[:n], exp[n:]
        if all(alpha[i] >= alpha[i + 1] for i in range(n - 1)) and all(
            beta[i] >= beta[i + 1] for i in range(m - 1)
        ):
            out[(_strip(alpha), _strip(beta))] = c
    return out


def pjk_expand(n: int, m: int, j: int, k: int) -> BiSchurVector:
    """Expand the product of all X_S + Y_T with |S| = j, |T| = k.

    Kostka inversion runs independently in each block: first every x-sorted
    slice is converted to Schur terms in X, then each of those is converted
    in Y.  Negative output coefficients would contradict the positivity this
    product is known to have, so they are a hard failure.
    """
    if not 0 <= j <= n:
        raise ValueError(f"need 0 <= j <= n, got j={j}, n={n}")
    if not 0 <= k <= m:
        raise ValueError(f"need 0 <= k <= m, got k={k}, m={m}")
    if n == 0 and m == 0:
        raise ValueError("need at least one variable")
    form_count = comb(n, j) * comb(m, k)
    if form_count > PJK_FORM_CAP:
        raise CapacityError(
            f"product of {form_count} forms exceeds the cap of {PJK_FORM_CAP}"
        )
    forms = []
    for s in combinations(range(n), j):
        for t in combinations(range(m), k):
            coeffs = [0] * (n + m)
            for i in s:
                coeffs[i] = 1
            for i in t:
                coeffs[n + i] = 1
            forms.append(tuple(coeffs))
    product = alphabet_product(Alphabet(n + m, tuple(forms)))
    doubled = _double_m(product, n, m)

    by_beta: dict[Partition, dict[Partition, int]] = {}
    for (alpha, beta), c in doubled.items():
        by_beta.setdefault(beta, {})[alpha] = c
    halfway: dict[Partition, dict[Partition, int]] = {}
    for beta, slice_terms in by_beta.items():
        for la, c in m_to_schur(MVector(n, slice_terms)).terms.items():
            halfway.setdefault(la, {})[beta] = c
    terms: dict[PartitionPair, int] = {}
    for la, slice_terms in halfway.items():
        for mu, c in m_to_schur(MVector(m, slice_terms)).terms.items():
            terms[(la, mu)] = c

    out = BiSchurVector(n, m, terms)
    if not out.is_nonnegative():
        bad = min(pair for pair, c in out.terms.items() if c < 0)
        raise ConsistencyError(
            f"negative coefficient at {bad} in the ({n},{m},{j},{k}) expansion"
        )
    return out


def dual_cauchy_reference(n: int, m: int) -> BiSchurVector:
    """The expansion of prod (x_i + y_t): one term per shape in the m-by-n box,
    pairing each lambda with the conjugate of its box complement."""
    if n < 1 or m < 1:
        raise ValueError(f"need n, m >= 1, got {n}, {m}")
    if n * m > CAUCHY_BOX_CAP:
        raise CapacityError(f"box size {n * m} exceeds the cap of {CAUCHY_BOX_CAP}")
    terms = {}
    for la in subpartitions((m,) * n):
        padded = la + (0,) * (n - len(la))
        complement = tuple(m - padded[n - 1 - i] for i in range(n))
        terms[(la, conjugate(_strip(complement)))] = 1
    return BiSchurVector(n, m, terms)
