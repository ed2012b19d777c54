"""Exact integer arithmetic helpers: binomials, rising factorials, determinants.

Everything here is exact. Counts are plain Python integers (arbitrary
precision) and the determinant is evaluated by fraction-free elimination,
so no floating point appears anywhere.
"""

from __future__ import annotations

import math

__all__ = [
    "binom",
    "catalan",
    "det_cofactor",
    "det_int",
    "factorial",
    "rising_factorial",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the one extension the counting formulas need.

    ``binom(n, 0) == 1`` for every integer ``n`` (including negatives) and
    ``binom(-1, k) == 0`` for ``k >= 1``, the m = -1 case of the binomial
    series.  ``k < 0`` gives 0.  Arguments with ``n <= -2`` and ``k >= 1``
    never arise in this library and are rejected in debug runs.
    """
    if k < 0:
        return 0
    if k == 0:
        return 1
    assert n >= -1, f"binom({n}, {k}): n <= -2 with k >= 1 is outside the supported domain"
    if n < k:
        return 0
    return math.comb(n, k)


factorial = math.factorial


def rising_factorial(a: int, m: int) -> int:
    """Product a (a+1) ... (a+m-1); the empty product 1 when m == 0."""
    if m < 0:
        raise ValueError(f"rising factorial length {m} is negative")
    out = 1
    for t in range(m):
        out *= a + t
    return out


def catalan(n: int) -> int:
    """The n-th Catalan number binom(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError(f"Catalan index {n} is negative")
    return math.comb(2 * n, n) // (n + 1)


def det_cofactor(a: list[list[int]]) -> int:
    """Determinant by cofactor expansion along the first row.

    Exponential in the size; meant for small matrices and as an independent
    check on :func:`det_int`.
    """
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    total = 0
    for j, head in enumerate(a[0]):
        if head == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = head * det_cofactor(minor)
        total += term if j % 2 == 0 else -term
    return total


def det_int(a) -> int:
    """Exact determinant of a square integer matrix.

    Runs fraction-free (Bareiss) elimination: every division performed is
    exact, keeping all intermediates integral.  The 0x0 matrix has
    determinant 1.  Should the divisibility check ever trip, matrices up to
    4x4 fall back to cofactor expansion.
    """
    rows = [list(row) for row in a]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return 1
    try:
        return _det_bareiss([row[:] for row in rows])
    except ArithmeticError:
        if n <= 4:
            return det_cofactor(rows)
        raise


def _det_bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # first nonzero pivot below, in column order; none means det 0
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - lead * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise ArithmeticError("fraction-free elimination hit an inexact division")
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[-1][-1]
