"""Exact sparse multivariate polynomial arithmetic over a fixed variable count.

Coefficients are Python ints (arbitrary precision); exponent vectors are
tuples of length ``var_count``.  Zero coefficients are purged on every write.
Products of many factors go through a balanced binary tree to keep
intermediate supports small; the result is independent of association order.
"""

from dataclasses import dataclass
from operator import add

# A linear form is its coefficient vector over the ambient variables,
# e.g. x2 + x3 in 3 variables is (0, 1, 1).
LinearForm = tuple[int, ...]


@dataclass(frozen=True)
class Alphabet:
    """Ordered sequence of integer linear forms over a common variable count."""

    var_count: int
    forms: tuple[LinearForm, ...]

    def __post_init__(self):
        for f in self.forms:
            if len(f) != self.var_count:
                raise ValueError(
                    f"form {f} has {len(f)} coefficients, expected {self.var_count}"
                )

    def __len__(self) -> int:
        return len(self.forms)


def _mul_into(dest: dict, a: dict, b: dict) -> None:
    """dest += a*b at the raw term-dict level."""
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(map(add, ea, eb))
            c = dest.get(key, 0) + ca * cb
            if c:
                dest[key] = c
            elif key in dest:
                del dest[key]


class MonomialPoly:
    """Sparse polynomial: dict exponent-vector -> nonzero int coefficient."""

    __slots__ = ("var_count", "terms")

    def __init__(self, var_count: int, terms: dict | None = None):
        if var_count < 1:
            raise ValueError("var_count must be positive")
        self.var_count = var_count
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, var_count: int, c: int) -> "MonomialPoly":
        return cls(var_count, {(0,) * var_count: c} if c else {})

    @classmethod
    def from_form(cls, var_count: int, form: LinearForm) -> "MonomialPoly":
        terms = {}
        for i, c in enumerate(form):
            if c:
                e = [0] * var_count
                e[i] = 1
                terms[tuple(e)] = c
        return cls(var_count, terms)

    def _check_compatible(self, other: "MonomialPoly"):
        if self.var_count != other.var_count:
            raise ValueError("mixed variable counts")

    def __add__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check_compatible(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return MonomialPoly(self.var_count, terms)

    def __mul__(self, other: "MonomialPoly") -> "MonomialPoly":
        self._check_compatible(other)
        terms: dict = {}
        _mul_into(terms, self.terms, other.terms)
        return MonomialPoly(self.var_count, terms)

    def scale(self, c: int) -> "MonomialPoly":
        if not c:
            return MonomialPoly(self.var_count)
        return MonomialPoly(self.var_count, {e: c * v for e, v in self.terms.items()})

    def degree(self) -> int:
        """Max exponent sum; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exponents: tuple[int, ...]) -> int:
        return self.terms.get(tuple(exponents), 0)

    def graded_piece(self, d: int) -> "MonomialPoly":
        return MonomialPoly(
            self.var_count, {e: c for e, c in self.terms.items() if sum(e) == d}
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MonomialPoly)
            and self.var_count == other.var_count
            and self.terms == other.terms
        )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "MonomialPoly(0)"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"x{i+1}" + (f"^{p}" if p > 1 else "")
                for i, p in enumerate(e)
                if p
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MonomialPoly(" + " + ".join(bits) + ")"


def poly_product(polys: list[MonomialPoly], var_count: int) -> MonomialPoly:
    """Product of a list of polynomials via a balanced binary tree."""
    if not polys:
        return MonomialPoly.constant(var_count, 1)
    layer = list(polys)
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def alphabet_product(a: Alphabet) -> MonomialPoly:
    """Exact expansion of the product of all forms of the alphabet.

    An empty alphabet yields the constant 1 (empty product), not an error.
    """
    polys = [MonomialPoly.from_form(a.var_count, f) for f in a.forms]
    return poly_product(polys, a.var_count)


def _tmul(u: list[dict], v: list[dict], cap: int) -> list[dict]:
    """Truncated product of t-polynomials whose coefficients are term dicts."""
    out_len = min(len(u) + len(v) - 1, cap + 1)
    out: list[dict] = [dict() for _ in range(out_len)]
    for i, ui in enumerate(u):
        if not ui or i >= out_len:
            continue
        for j, vj in enumerate(v):
            if i + j >= out_len:
                break
            if vj:
                _mul_into(out[i + j], ui, vj)
    return out


def graded_elementary(a: Alphabet, cap: int | None = None) -> list[MonomialPoly]:
    """All elementary symmetric polynomials of the alphabet at once.

    Returns [e_0(A), e_1(A), ..., e_m(A)] with m = min(cap, |A|): the
    coefficients of t^p in prod_{f in A} (1 + t*f), computed by a balanced
    product tree of truncated t-polynomials.
    """
    top = len(a.forms)
    if cap is not None:
        top = min(cap, top)
    one = {(0,) * a.var_count: 1}
    layer: list[list[dict]] = [
        [dict(one), dict(MonomialPoly.from_form(a.var_count, f).terms)]
        for f in a.forms
    ]
    if not layer:
        return [MonomialPoly.constant(a.var_count, 1)]
    while len(layer) > 1:
        nxt = [
            _tmul(layer[i], layer[i + 1], top)
            for i in range(0, len(layer) - 1, 2)
        ]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    out = [MonomialPoly(a.var_count, terms) for terms in layer[0]]
    while len(out) < top + 1:
        out.append(MonomialPoly(a.var_count))
    return out


def elementary_of_alphabet(p: int, a: Alphabet) -> MonomialPoly:
    """p-th elementary symmetric polynomial of the forms of the alphabet.

    e_0 = 1; e_p = 0 for p beyond the alphabet size.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    if p > len(a.forms):
        return MonomialPoly(a.var_count)
    return graded_elementary(a, cap=p)[p]
