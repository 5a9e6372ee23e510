"""The (n, n-1) product specialized: q-deformation and tableau statistics.

The vector bnm1_q carries one q-polynomial per Schur term; at q = -1 it
collapses to the (n, n-1) Boolean product, at q = 0 to the expansion of
(e_1)^n.  a_coeffs_syt recounts the q = -1 coefficients by a purely
combinatorial statistic (standard tableaux whose smallest ascent is even),
and frobenius_dimension turns any such vector into the dimension of the
corresponding direct sum of irreducibles.
"""

from dataclasses import dataclass

from .boolean import subset_alphabet
from .errors import CapacityError
from .polyring import MonomialPoly, graded_elementary, poly_product
from .schur import SchurVector, schur_from_poly
from .tableaux import num_syt, partitions_up_to, smallest_ascent, syt_list

BNM1_MAX_N = 7
SYT_COEFF_MAX_N = 8


@dataclass(frozen=True)
class QPoly:
    """Univariate integer polynomial in q; coeffs[i] is the q^i coefficient."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = self.coeffs
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", trimmed)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly((other,))
        size = max(len(self.coeffs), len(other.coeffs))
        return QPoly(
            tuple(
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(size)
            )
        )

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(tuple(c * other for c in self.coeffs))
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return QPoly(tuple(out))

    __rmul__ = __mul__

    def __call__(self, q0: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            power = "" if j == 0 else ("q" if j == 1 else f"q^{j}")
            if power and abs(c) == 1:
                body = power
            elif power:
                body = f"{abs(c)}{power}"
            else:
                body = str(abs(c))
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _layer_vectors(n: int) -> list[SchurVector]:
    """Schur expansion of e_j(x_1..x_n) * (e_1)^(n-j) for j = 0..n."""
    base = subset_alphabet(n, 1)
    elem = graded_elementary(base)
    e1_powers = [MonomialPoly.constant(n, 1)]
    for _ in range(n):
        e1_powers.append(e1_powers[-1] * elem[1])
    return [schur_from_poly(elem[j] * e1_powers[n - j]) for j in range(n + 1)]


def bnm1_q(n: int) -> SchurVector:
    """Schur expansion of sum_j q^j e_j(X) (e_1(X))^(n-j), coefficients QPoly.

    All q-coefficients are nonnegative (each layer is a Pieri product of
    Schur-positive factors); asserted on the way out.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > BNM1_MAX_N:
        raise CapacityError(f"q-deformation capped at n={BNM1_MAX_N}, got {n}")
    layers = _layer_vectors(n)
    keys = set().union(*(v.terms for v in layers))
    terms = {}
    for la in keys:
        terms[la] = QPoly(tuple(layers[j].terms.get(la, 0) for j in range(n + 1)))
    out = SchurVector(n, terms)
    assert all(c >= 0 for poly in out.terms.values() for c in poly.coeffs)
    return out


def specialize_q(v: SchurVector, q0: int) -> SchurVector:
    """Evaluate every QPoly coefficient at q0; integer coefficients pass through."""
    terms = {}
    for la, c in v.terms.items():
        terms[la] = c(q0) if isinstance(c, QPoly) else c
    return SchurVector(v.var_count, terms)


def alternating_expansion(n: int) -> SchurVector:
    """Schur expansion of sum_j (-1)^j e_j(X) (e_1(X))^(n-j).

    Assembled as one signed sum in monomial space and converted once, so it
    shares no q bookkeeping with bnm1_q.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > BNM1_MAX_N:
        raise CapacityError(f"alternating expansion capped at n={BNM1_MAX_N}, got {n}")
    base = subset_alphabet(n, 1)
    elem = graded_elementary(base)
    total = MonomialPoly(n)
    sign = 1
    for j in range(n + 1):
        piece = poly_product([elem[j]] + [elem[1]] * (n - j), n)
        total = total + piece.scale(sign)
        sign = -sign
    return schur_from_poly(total)


def a_coeffs_syt(n: int) -> dict[tuple, int]:
    """For every shape of size n, the number of SYT whose smallest ascent is even.

    Zero counts are included so the association covers all partitions of n.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if n > SYT_COEFF_MAX_N:
        raise CapacityError(f"SYT sweep capped at n={SYT_COEFF_MAX_N}, got {n}")
    out = {}
    for la in partitions_up_to(n, n):
        out[la] = sum(1 for t in syt_list(la) if smallest_ascent(t) % 2 == 0)
    return out


def frobenius_dimension(v: SchurVector, q0: int) -> int:
    """Sum of c_lambda(q0) * f^lambda over the terms of v.

    Every key must be a partition of one common size; mixed sizes have no
    single symmetric-group interpretation and are rejected.
    """
    sizes = {sum(la) for la in v.terms}
    if len(sizes) > 1:
        raise ValueError(f"mixed partition sizes {sorted(sizes)} have no dimension")
    total = 0
    for la, c in v.terms.items():
        value = c(q0) if isinstance(c, QPoly) else c
        total += value * num_syt(la)
    return total
