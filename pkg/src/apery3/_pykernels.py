"""Pure-Python sweep kernels.

Mirror of the compiled module ``apery3._kernels``: same functions, same
semantics, implemented over plain Python integers so there is no range
limit.  Selected automatically at import time when the compiled extension
is unavailable, and used as the escalation target when operands exceed
machine range.  Scans return the smallest failing n, or -1 when the whole
range checks out.
"""

from __future__ import annotations

BACKEND = "pure"


def _b_closed(n):
    acc = 0
    par = n & 1
    q = n
    j = 0
    while q:
        q, d = divmod(q, 3)
        if d == 1:
            acc = j - acc
        j += 1
    return par + acc


def _b_alt(n):
    acc = 0
    q = n
    j = 1
    while q:
        q, d = divmod(q, 3)
        if d == 1:
            acc = j - acc
        j += 1
    return acc


def _b_div9(n):
    total = 0
    while n:
        if n % 3 == 1:
            total += 1
            n //= 9
        else:
            n //= 3
            total += n & 1
    return total


def _b_div3(n):
    total = 0
    while n:
        q = n // 3
        if n % 3 == 1:
            total += 1 - (q & 1)
        else:
            total += q & 1
        n = q
    return total


def _eval_vector(n, matrices, initial):
    digits = []
    while n:
        n, d = divmod(n, 3)
        digits.append(d)
    v = initial
    for d in reversed(digits):
        m = matrices[d]
        v = (
            m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
        )
    return v


def _mat_vec3(m, v):
    return (
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    )


def b_closed_u64(n):
    return _b_closed(n)


def b_alt_u64(n):
    return _b_alt(n)


def b_div9_u64(n):
    return _b_div9(n)


def b_div3_u64(n):
    return _b_div3(n)


def eval_vector_u64(n, matrices, initial):
    return _eval_vector(n, matrices, initial)


def scan_b_methods(lo, hi, matrices, initial, output_index):
    """First n in [lo, hi] where the five b evaluators disagree, else -1.

    Compared per point: closed form, shifted closed form, the two digit
    recurrences, and the matrix representation built from ``matrices``.
    """
    for n in range(lo, hi + 1):
        b = _b_closed(n)
        if _b_alt(n) != b or _b_div9(n) != b or _b_div3(n) != b:
            return n
        if _eval_vector(n, matrices, initial)[output_index] != b:
            return n
    return -1


def scan_linrep_relation(lo, hi, matrices, initial):
    """First n in [lo, hi] violating the digit-step structure, else -1.

    Checks, per n: the evaluated state vector equals the digit-formula
    vector (b(n), 1, n mod 2); stepping the state with matrix d matches a
    fresh evaluation at 3n+d; and the same step applied to the
    digit-formula vector lands on the digit-formula vector at 3n+d.  The
    last check is what ties the matrices to the sequence itself.
    """
    for n in range(lo, hi + 1):
        w = (_b_closed(n), 1, n & 1)
        v = _eval_vector(n, matrices, initial)
        if v != w:
            return n
        for k in (0, 1, 2):
            child = 3 * n + k
            stepped = _mat_vec3(matrices[k], v)
            if stepped != _eval_vector(child, matrices, initial):
                return n
            if _mat_vec3(matrices[k], w) != (_b_closed(child), 1, child & 1):
                return n
    return -1


def scan_parity(lo, hi):
    """First n in [lo, hi] whose count of ternary 1-digits differs from n
    in parity, else -1."""
    for n in range(lo, hi + 1):
        r = 0
        q = n
        while q:
            q, d = divmod(q, 3)
            if d == 1:
                r += 1
        if (r - n) & 1:
            return n
    return -1
