"""p-adic valuations and the 3-adic valuation structure of the Barnes sum.

``v_adic`` is the generic valuation (with ``INFINITY`` for 0),
``factorial_valuation`` is Legendre's formula, and ``term_valuation`` is
the closed floor-sum expression for d(n, k) = v_3 of the k-th Barnes term
of a(n).  ``min_term_valuation`` scans all k and reports where the minimum
is attained and whether it is strict; the library never assumes the
minimum sits at k = floor(n/2), it verifies it.
"""

from __future__ import annotations

from typing import NamedTuple, Union

__all__ = [
    "INFINITY",
    "ExtNat",
    "v_adic",
    "factorial_valuation",
    "term_valuation",
    "min_term_valuation",
    "MinTermValuation",
]


class _InfiniteValuation:
    """The valuation of zero.  Compares greater than every integer.

    No arithmetic is defined on purpose: +infinity only ever flows into
    comparisons here, and an attempted addition should fail loudly.
    """

    __slots__ = ()

    def __repr__(self):
        return "INFINITY"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("apery3.INFINITY")

    def __lt__(self, other):
        if isinstance(other, (int, _InfiniteValuation)):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, int):
            return True
        if other is self:
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, _InfiniteValuation)):
            return True
        return NotImplemented


INFINITY = _InfiniteValuation()

ExtNat = Union[int, _InfiniteValuation]


def v_adic(x: int, p: int) -> ExtNat:
    """Largest d with p**d | x, or INFINITY when x = 0.

    Strips p^(2^j) greedily while divisible, then finishes with the
    recorded powers, so the cost is O(log v) big divisions rather than v.
    """
    if p < 2:
        raise ValueError("p must be at least 2")
    if x < 0:
        raise ValueError("x must be a nonnegative integer")
    if x == 0:
        return INFINITY
    value = 0
    powers = [p]
    while True:
        q, r = divmod(x, powers[-1])
        if r:
            break
        x = q
        value += 1 << (len(powers) - 1)
        powers.append(powers[-1] * powers[-1])
    for j in range(len(powers) - 2, -1, -1):
        q, r = divmod(x, powers[j])
        if r == 0:
            x = q
            value += 1 << j
    return value


def factorial_valuation(n: int, p: int) -> int:
    """v_p(n!) = sum_{i>=1} floor(n / p^i)  (Legendre's formula)."""
    if p < 2:
        raise ValueError("p must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    q = n
    while q:
        q //= p
        total += q
    return total


def term_valuation(n: int, k: int) -> int:
    """d(n, k): the 3-adic valuation of the k-th Barnes term of a(n).

    Evaluated as (n - 2k) + sum_{i>=1} (floor(n/3^i) - floor((n-2k)/3^i)
    - 2 floor(k/3^i)); every summand is nonnegative, which is asserted.
    The sum runs while 3^i <= n, past which all floors vanish.
    """
    if k < 0 or 2 * k > n:
        raise ValueError("need 0 <= 2k <= n")
    total = n - 2 * k
    pk = 3
    while pk <= n:
        s = n // pk - (n - 2 * k) // pk - 2 * (k // pk)
        assert s >= 0, f"negative summand at n={n}, k={k}, 3^i={pk}"
        total += s
        pk *= 3
    return total


class MinTermValuation(NamedTuple):
    argmin: int
    value: int
    unique: bool


def min_term_valuation(n: int) -> MinTermValuation:
    """Scan d(n, k) over k = 0..floor(n/2) and locate the minimum.

    Returns (argmin, value, unique) where unique says the minimum is
    strict.  Uniqueness is reported, not assumed, so a violation shows up
    as a test failure instead of a silent wrong answer.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    best_k = 0
    best = term_valuation(n, 0)
    unique = True
    for k in range(1, n // 2 + 1):
        d = term_valuation(n, k)
        if d < best:
            best, best_k, unique = d, k, True
        elif d == best:
            unique = False
    return MinTermValuation(best_k, best, unique)
