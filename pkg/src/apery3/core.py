"""Exact evaluation of a(n) = P_n(3), the central Delannoy numbers.

Four independent routes compute the same sequence over plain Python
integers (arbitrary precision, no floating point anywhere):

* ``apery_direct``           -- the defining sum  sum_k C(n,k) C(n+k,k)
* ``apery_barnes``           -- sum_k n!/(k!^2 (n-2k)!) 2^k 3^(n-2k)
* ``apery_convolution``      -- coefficient of x^n in (1+x)^n (2+x)^n
* ``apery_recurrence_range`` -- three-term Legendre recurrence at x = 3

The first three are written without shared caches or cross-calls so each
can serve as an oracle for the others; ``apery_direct`` is the brute-force
reference everything else is judged against.
"""

from __future__ import annotations

import math
from typing import Iterator, List

__all__ = [
    "binomial",
    "apery_direct",
    "apery_barnes",
    "apery_convolution",
    "apery_recurrence_range",
    "barnes_term",
    "barnes_terms",
]


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with C(n, k) = 0 for k > n.

    Computed as a multiplicative running product with an exact division at
    every step, which keeps intermediates no larger than the result.
    """
    if n < 0 or k < 0:
        raise ValueError("binomial expects nonnegative arguments")
    if k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def apery_direct(n: int) -> int:
    """a(n) by the defining sum  sum_{k=0..n} C(n,k) C(n+k,k).

    Both binomials are advanced by one exact multiply/divide per term.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    c_nk = 1  # C(n, k)
    c_nkk = 1  # C(n+k, k)
    for k in range(n + 1):
        total += c_nk * c_nkk
        c_nk = c_nk * (n - k) // (k + 1)
        c_nkk = c_nkk * (n + k + 1) // (k + 1)
    return total


def barnes_term(n: int, k: int) -> int:
    """The k-th term n!/(k!^2 (n-2k)!) * 2^k * 3^(n-2k) of the Barnes sum.

    Raises ArithmeticError if the multinomial division is not exact, which
    would signal an implementation bug rather than a caller error.
    """
    if n < 0 or k < 0 or 2 * k > n:
        raise ValueError("need 0 <= 2k <= n")
    q, r = divmod(math.factorial(n), math.factorial(k) ** 2 * math.factorial(n - 2 * k))
    if r:
        raise ArithmeticError(f"multinomial n!/(k!^2 (n-2k)!) not integral at n={n}, k={k}")
    return q * 2**k * 3 ** (n - 2 * k)


def barnes_terms(n: int) -> Iterator[int]:
    """Yield the Barnes-sum terms for k = 0..floor(n/2), exactly.

    Successive terms are related by the exact ratio
    2 (n-2k)(n-2k-1) / (9 (k+1)^2); every division is checked.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    term = 3**n
    yield term
    for k in range(n // 2):
        num = term * (2 * (n - 2 * k) * (n - 2 * k - 1))
        q, r = divmod(num, 9 * (k + 1) ** 2)
        if r:
            raise ArithmeticError(f"inexact Barnes term step at n={n}, k={k + 1}")
        term = q
        yield term


def apery_barnes(n: int) -> int:
    """a(n) by the Barnes sum over k = 0..floor(n/2)."""
    return sum(barnes_terms(n))


def apery_convolution(n: int) -> int:
    """a(n) as the coefficient of x^n in (1+x)^n (2+x)^n.

    Expanded as sum_{i=0..n} C(n,i) C(n,n-i) 2^(n-i).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    c = 1  # C(n, i) = C(n, n-i)
    p = 1 << n  # 2^(n-i)
    for i in range(n + 1):
        total += c * c * p
        p >>= 1
        c = c * (n - i) // (i + 1)
    return total


def apery_recurrence_range(n_max: int) -> List[int]:
    """[a(0), ..., a(n_max)] from (n+1) a(n+1) = 3(2n+1) a(n) - n a(n-1).

    The recurrence is inherently sequential, so the whole prefix is
    returned; single-value callers slice.  Every division by n+1 must be
    exact and is checked.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    seq = [1]
    if n_max >= 1:
        seq.append(3)
    for n in range(1, n_max):
        q, r = divmod(3 * (2 * n + 1) * seq[n] - n * seq[n - 1], n + 1)
        if r:
            raise ArithmeticError(f"recurrence step not integral at n={n + 1}")
        seq.append(q)
    return seq
