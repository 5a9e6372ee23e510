"""Brute-force reference implementations used to pin expected values.

Everything here is deliberately naive and shares no code with the package:
tableaux are enumerated cell by cell, determinants expand over permutations,
and point counts loop over whole vector spaces.  Slow but obviously correct
at the sizes the tests use.
"""

from collections import Counter
from itertools import permutations, product
from math import comb, factorial


def ssyt_fillings(shape, max_entry):
    """All semistandard fillings with entries in 1..max_entry.

    French convention: rows[0] is the bottom row, columns strictly increase
    upward, rows weakly increase rightward.
    """
    rows = [[0] * w for w in shape]
    cells = [(r, c) for r, w in enumerate(shape) for c in range(w)]
    out = []

    def fill(i):
        if i == len(cells):
            out.append(tuple(tuple(row) for row in rows))
            return
        r, c = cells[i]
        lo = 1
        if c:
            lo = max(lo, rows[r][c - 1])
        if r:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, max_entry + 1):
            rows[r][c] = v
            fill(i + 1)
        rows[r][c] = 0

    fill(0)
    return out


def ssyt_count(shape, content):
    """Number of semistandard fillings with content[i] copies of i+1."""
    target = {i + 1: c for i, c in enumerate(content) if c}
    hits = 0
    for filling in ssyt_fillings(shape, len(content)):
        seen = Counter(v for row in filling for v in row)
        if seen == target:
            hits += 1
    return hits


def schur_poly_direct(shape, var_count):
    """The Schur polynomial as a raw exponent-vector dict, one SSYT at a time."""
    out = {}
    for filling in ssyt_fillings(shape, var_count):
        seen = Counter(v for row in filling for v in row)
        exps = tuple(seen.get(i + 1, 0) for i in range(var_count))
        out[exps] = out.get(exps, 0) + 1
    return out


def naive_det(matrix):
    size = len(matrix)
    total = 0
    for perm in permutations(range(size)):
        sign = 1
        seen = list(perm)
        for i in range(size):
            for j in range(i + 1, size):
                if seen[i] > seen[j]:
                    sign = -sign
        term = sign
        for i in range(size):
            term *= matrix[i][perm[i]]
        total += term
    return total


def derangement_number(n):
    return sum((-1) ** k * comb(n, k) * factorial(n - k) for k in range(n + 1))


def brute_complement_count(n, p):
    """Count vectors in F_p^n with every nonempty subset sum nonzero."""
    hits = 0
    for vec in product(range(p), repeat=n):
        for mask in range(1, 1 << n):
            total = sum(vec[i] for i in range(n) if mask >> i & 1)
            if total % p == 0:
                break
        else:
            hits += 1
    return hits


def brute_partitions(d, max_parts):
    """All partitions of d with at most max_parts parts, as a set."""
    found = set()
    if d == 0:
        found.add(())
        return found
    for k in range(1, max_parts + 1):
        for parts in product(range(1, d + 1), repeat=k):
            if sum(parts) == d and all(
                parts[i] >= parts[i + 1] for i in range(k - 1)
            ):
                found.add(parts)
    return found
