"""Conversions between monomial-symmetric and Schur bases.

The Kostka matrix is unitriangular with respect to dominance, and the
descending tuple order on partitions linearly extends dominance, so
``m_to_schur`` is plain back-substitution.  ``schur_at_alphabet`` evaluates a
Schur polynomial at the forms of an alphabet through the dual Jacobi-Trudi
determinant in the alphabet's elementary symmetric polynomials.
"""

from dataclasses import dataclass, field

from .errors import AsymmetryError
from .polyring import Alphabet, MonomialPoly, graded_elementary
from .tableaux import Partition, conjugate, kostka, partitions_up_to


@dataclass
class MVector:
    """Integer combination of monomial symmetric polynomials m_lambda."""

    var_count: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {la: c for la, c in self.terms.items() if c}
        for la in self.terms:
            if len(la) > self.var_count:
                raise ValueError(f"{la} has more parts than variables")


@dataclass
class SchurVector:
    """Combination of Schur polynomials s_lambda.

    Coefficients are usually ints; the derangement module stores q-polynomials
    here instead, so only +, ==, and truthiness are assumed of them.
    """

    var_count: int
    terms: dict[Partition, object] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {la: c for la, c in self.terms.items() if c}
        for la in self.terms:
            if len(la) > self.var_count:
                raise ValueError(f"{la} has more parts than variables")

    def items_sorted(self):
        """Terms in the canonical descending partition order."""
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=True)

    def graded_piece(self, d: int) -> "SchurVector":
        return SchurVector(
            self.var_count, {la: c for la, c in self.terms.items() if sum(la) == d}
        )

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if self.var_count != other.var_count:
            raise ValueError("mixed variable counts")
        terms = dict(self.terms)
        for la, c in other.terms.items():
            s = terms.get(la, 0) + c
            if s:
                terms[la] = s
            elif la in terms:
                del terms[la]
        return SchurVector(self.var_count, terms)


def to_mvector(p: MonomialPoly) -> MVector:
    """Read a symmetric polynomial off in the monomial-symmetric basis.

    Every exponent vector's coefficient is compared against its sorted
    representative first; a mismatch raises AsymmetryError naming the two
    exponent vectors as a witness.
    """
    terms: dict[Partition, int] = {}
    for exp, c in p.terms.items():
        rep = tuple(sorted(exp, reverse=True))
        if p.terms.get(rep, 0) != c:
            raise AsymmetryError(exp, rep)
        if exp == rep:
            la = tuple(x for x in rep if x)
            terms[la] = c
    return MVector(p.var_count, terms)


def mvector_expand(v: MVector) -> MonomialPoly:
    """Inverse of to_mvector: sum of full monomial orbits."""
    from itertools import permutations

    terms: dict = {}
    for la, c in v.terms.items():
        padded = la + (0,) * (v.var_count - len(la))
        for exp in set(permutations(padded)):
            terms[exp] = c
    return MonomialPoly(v.var_count, terms)


def schur_to_m(v: SchurVector) -> MVector:
    """Expand each s_lambda as sum_mu K(lambda,mu) m_mu, lengths capped."""
    terms: dict[Partition, object] = {}
    for la, c in v.terms.items():
        for mu in partitions_up_to(sum(la), v.var_count):
            k = kostka(la, mu)
            if k:
                s = terms.get(mu, 0) + c * k
                if s:
                    terms[mu] = s
                elif mu in terms:
                    del terms[mu]
    return MVector(v.var_count, {la: c for la, c in terms.items() if c})


def m_to_schur(v: MVector) -> SchurVector:
    """Unique Schur expansion by back-substitution down the partition order."""
    work = dict(v.terms)
    out: dict[Partition, int] = {}
    while work:
        la = max(work)
        c = work.pop(la)
        if not c:
            continue
        out[la] = c
        for mu in partitions_up_to(sum(la), v.var_count):
            if mu == la:
                continue
            k = kostka(la, mu)
            if k:
                s = work.get(mu, 0) - c * k
                if s:
                    work[mu] = s
                elif mu in work:
                    del work[mu]
    return SchurVector(v.var_count, out)


def schur_from_poly(p: MonomialPoly) -> SchurVector:
    """Symmetry check, m-extraction, and Kostka inversion in one step."""
    return m_to_schur(to_mvector(p))


def _poly_det(m: list[list[MonomialPoly]], var_count: int) -> MonomialPoly:
    """Determinant with polynomial entries; Laplace expansion memoized on
    the live column set (fine for the small Jacobi-Trudi sizes used here)."""
    size = len(m)
    cache: dict[tuple[int, ...], MonomialPoly] = {}

    def minor(row: int, cols: tuple[int, ...]) -> MonomialPoly:
        if not cols:
            return MonomialPoly.constant(var_count, 1)
        got = cache.get(cols)
        if got is not None:
            return got
        acc = MonomialPoly(var_count)
        for pos, col in enumerate(cols):
            entry = m[row][col]
            if not entry:
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
            piece = entry * sub
            acc = acc + (piece if pos % 2 == 0 else piece.scale(-1))
        cache[cols] = acc
        return acc

    return minor(0, tuple(range(size)))


def schur_at_alphabet(la: Partition, a: Alphabet) -> SchurVector:
    """Schur polynomial of the alphabet's forms, expanded back in the
    Schur basis of the underlying variables.

    Uses det(e_{la'_i - i + j}(A)) over the conjugate shape; returns the zero
    vector when la has more parts than the alphabet has forms.
    """
    if not la:
        return SchurVector(a.var_count, {(): 1})
    if len(la) > len(a.forms):
        return SchurVector(a.var_count)
    laconj = conjugate(la)
    size = len(laconj)
    top_index = max(laconj[i] - (i + 1) + size for i in range(size))
    es = graded_elementary(a, cap=max(top_index, 0))
    zero = MonomialPoly(a.var_count)

    def e(p: int) -> MonomialPoly:
        if p < 0 or p >= len(es):
            return zero
        return es[p]

    matrix = [
        [e(laconj[i] - (i + 1) + (j + 1)) for j in range(size)] for i in range(size)
    ]
    return schur_from_poly(_poly_det(matrix, a.var_count))
