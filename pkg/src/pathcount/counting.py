"""Exact counters for northeast lattice paths below a bounding path.

``lp(v)``, the number of lattice points in the Pitman-Stanley polytope of
``v``, equals the number of paths restricted by the height path ``sigma(v)``.
Five independent engines compute it:

* ``recurrence``  - memoized head recurrence on difference vectors;
* ``determinant`` - Kreweras' binomial determinant, evaluated exactly;
* ``triangular``  - forward substitution through the inclusion-exclusion
  triangular system behind that determinant;
* ``theorem``     - sum of binomial products over the lattice points of the
  all-ones polytope (capacity-capped: the term count is a Catalan number);
* ``dp``          - column-by-column dynamic program directly over admissible
  heights, kept deliberately naive as the oracle the others are checked
  against.

All engines agree on every input; the test suite and the ``verify`` CLI
subcommand enforce this.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, product
from math import prod
from typing import Iterator

from .exactmath import binom, det_int, factorial
from .paths import Diffs, Heights, Point, delta, sigma, validate_heights

DEFAULT_THEOREM_CAP = 14
DEFAULT_MONOMIAL_CAP = 10**6

ENGINES = ("recurrence", "determinant", "triangular", "theorem", "dp")


class CapacityError(Exception):
    """An engine or enumeration was asked to exceed its configured cap."""


def enumerate_polytope(v: Diffs) -> Iterator[Point]:
    """Yield the lattice points of the Pitman-Stanley polytope of ``v``.

    Points are the nonnegative integer tuples whose every prefix sum is
    bounded by the matching prefix sum of ``v``, emitted in lexicographic
    order.  The stream is lazy and single-consumer.
    """
    n = len(v)
    point = [0] * n

    def walk(i: int, slack: int) -> Iterator[Point]:
        if i == n:
            yield tuple(point)
            return
        cap = slack + v[i]
        for x in range(cap + 1):
            point[i] = x
            yield from walk(i + 1, cap - x)
        point[i] = 0

    return walk(0, 0)


def count_recurrence(v: Diffs, memo: dict[Diffs, int] | None = None) -> int:
    """Count lattice points of the polytope of ``v`` by the head recurrence.

    lp(()) = 1 and lp(v) = sum over j = 0..v_1 of
    lp((v_1 + v_2 - j, v_3, ..., v_n)): group points by first coordinate j;
    dropping that coordinate lands in the polytope of the shortened vector.
    For n = 1 the sum collapses to v_1 + 1 copies of the empty polytope.
    ``memo`` maps every difference vector encountered to its count and is
    filled as a side effect.
    """
    if memo is None:
        memo = {}

    def lp(u: Diffs) -> int:
        cached = memo.get(u)
        if cached is not None:
            return cached
        if not u:
            result = 1
        elif len(u) == 1:
            result = u[0] + 1
        else:
            head, second = u[0], u[1]
            tail = u[2:]
            result = sum(lp((head + second - j,) + tail) for j in range(head + 1))
        memo[u] = result
        return result

    return lp(tuple(v))


def count_determinant(p: Heights) -> int:
    """Count restricted paths as Kreweras' determinant det[binom(p_i + 1, j - i + 1)]."""
    n = len(p)
    matrix = [[binom(p[i] + 1, j - i + 1) for j in range(n)] for i in range(n)]
    return det_int(matrix)


def count_triangular(p: Heights) -> int:
    """Solve the inclusion-exclusion triangular system by forward substitution.

    Equation j pins the count for the length-j prefix of ``p`` in terms of
    the shorter prefixes, so one O(n^2) sweep produces LP of every prefix and
    finally of ``p`` itself.
    """
    counts = [1]  # counts[k] = number of paths below the length-k prefix
    for j in range(1, len(p) + 1):
        acc = 0
        for i in range(1, j + 1):
            term = binom(p[i - 1] + 1, j - i + 1) * counts[i - 1]
            acc += term if (j - i) % 2 == 0 else -term
        counts.append(acc)
    return counts[-1]


def count_theorem(p: Heights, cap: int = DEFAULT_THEOREM_CAP) -> int:
    """Sum binomial products over the lattice points of the all-ones polytope.

    With v the difference vector of ``p``, the count is the sum over the
    C_{n+1} lattice points x of prod_i binom(v_{n+1-i} + x_i - 1, x_i), the
    binomials taken with the extended convention of :func:`~pathcount.exactmath.binom`
    so that a zero v entry forces x_i = 0.  The depth-first walk shares
    partial products along common prefixes and abandons a branch as soon as a
    factor vanishes.  Refuses n > cap since the term count grows like C_{n+1}.
    """
    n = len(p)
    if n > cap:
        raise CapacityError(f"theorem engine capacity exceeded: n = {n} is over the cap {cap}")
    w = tuple(reversed(delta(p)))  # w[i] feeds the binomial at position i of each point

    def walk(i: int, slack: int, partial: int) -> int:
        if i == n:
            return partial
        total = 0
        wi = w[i]
        for x in range(slack + 2):
            f = binom(wi + x - 1, x)
            if f:
                total += walk(i + 1, slack + 1 - x, partial * f)
        return total

    return walk(0, 0, 1)


def dp_oracle(p: Heights) -> int:
    """Count nondecreasing q with q_i <= p_i by a direct column sweep.

    Keeps, per column, the number of admissible prefixes ending at each
    height; a running prefix sum advances one column in O(p_i) time.  The
    terminal height is free (anything up to p_n).  This is the reference
    implementation the fancier engines are validated against.
    """
    ending = [1]  # before any column: the empty prefix, at height 0
    for bound in p:
        acc = 0
        nxt = []
        for h in range(bound + 1):
            if h < len(ending):
                acc += ending[h]
            nxt.append(acc)
        ending = nxt
    return sum(ending)


def enumerate_restricted(p: Heights) -> Iterator[Heights]:
    """Yield every nondecreasing q <= p in lexicographic order.

    Partial summation maps the polytope's lattice points onto the restricted
    paths and preserves lexicographic order.
    """
    for x in enumerate_polytope(delta(p)):
        yield sigma(x)


def macmahon_total(n: int, m: int) -> int:
    """Closed form for the sum of LP(p) over all paths p from (0,0) to (n,m):

    (m+n)! (m+n+1)! / (m! n! (m+1)! (n+1)!), always an integer.
    """
    if n < 0 or m < 0:
        raise ValueError(f"endpoint ({n}, {m}) has a negative coordinate")
    num = factorial(m + n) * factorial(m + n + 1)
    den = factorial(m) * factorial(n) * factorial(m + 1) * factorial(n + 1)
    assert num % den == 0
    return num // den


def macmahon_bruteforce(n: int, m: int) -> int:
    """The same aggregate summed path by path with :func:`dp_oracle`.

    Paths from (0,0) to (n, m) are exactly the nondecreasing height tuples of
    length n bounded by m (the climb to height m after the last E is forced),
    and for the same reason dp_oracle's free-terminal count already equals the
    fixed-endpoint count.
    """
    return sum(dp_oracle(p) for p in combinations_with_replacement(range(m + 1), n))


def monomial_oracle(p: Heights, cap: int = DEFAULT_MONOMIAL_CAP) -> int:
    """Count distinct monomials of prod_i (a_1 + ... + a_{p_i + 1}) by expansion.

    Exhausts all prod(p_i + 1) index choices and collects them as multisets;
    capped, and kept only as an independent small-scale check on the path
    counters.
    """
    total = prod(x + 1 for x in p)
    if total > cap:
        raise CapacityError(f"monomial oracle capacity exceeded: {total} choices is over the cap {cap}")
    seen = set()
    for choice in product(*(range(1, x + 2) for x in p)):
        seen.add(tuple(sorted(choice)))
    return len(seen)


def count(p: Heights, engine: str, theorem_cap: int = DEFAULT_THEOREM_CAP) -> int:
    """Count paths restricted by ``p`` with the named engine."""
    p = validate_heights(p)
    if engine in ("dp", "dp_oracle"):
        return dp_oracle(p)
    if engine == "recurrence":
        return count_recurrence(delta(p))
    if engine == "determinant":
        return count_determinant(p)
    if engine == "triangular":
        return count_triangular(p)
    if engine == "theorem":
        return count_theorem(p, cap=theorem_cap)
    raise ValueError(f"unknown engine {engine!r}; expected one of: {', '.join(ENGINES)}")
