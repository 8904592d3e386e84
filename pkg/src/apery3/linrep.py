"""Digit-indexed linear representations and an exact kernel-rank check.

A base-k linear representation carries one integer matrix per digit, an
initial vector, and an output coordinate; the sequence value at n is read
off a digit-indexed matrix product.  The concrete representation built by
``b_linear_representation`` computes b(n) = v_3(a(n)) with state vector
(b(n), 1, n mod 2).

``kernel_matrix`` stacks prefixes of the subsequence family
(u(base^d n + a))_n and ``integer_rank`` measures its rank over the
rationals by fraction-free elimination; a rank that stays put as depth and
prefix grow is desk-scale evidence that the family is finitely generated.
All arithmetic in this module is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

__all__ = [
    "Matrix",
    "LinearRep",
    "mat_vec",
    "b_linear_representation",
    "evaluate_digits",
    "evaluate_vector",
    "evaluate",
    "kernel_matrix",
    "integer_rank",
]

Matrix = Tuple[Tuple[int, ...], ...]


def mat_vec(matrix: Matrix, vector: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sum(row[j] * vector[j] for j in range(len(vector))) for row in matrix)


@dataclass(frozen=True)
class LinearRep:
    """One matrix per digit, an initial vector, and an output coordinate.

    Immutable after construction.  matrices[0] must fix the initial
    vector, otherwise appending leading zero digits would change the
    value and evaluation would be ill-defined.
    """

    base: int
    dim: int
    matrices: Tuple[Matrix, ...]
    initial: Tuple[int, ...]
    output_index: int

    def __post_init__(self):
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if len(self.matrices) != self.base:
            raise ValueError("need one matrix per digit")
        for m in self.matrices:
            if len(m) != self.dim or any(len(row) != self.dim for row in m):
                raise ValueError("matrices must be dim x dim")
        if len(self.initial) != self.dim:
            raise ValueError("initial vector has wrong length")
        if not 0 <= self.output_index < self.dim:
            raise ValueError("output_index out of range")
        if mat_vec(self.matrices[0], self.initial) != self.initial:
            raise ValueError("matrices[0] must fix the initial vector")


def b_linear_representation() -> LinearRep:
    """The base-3, dimension-3 representation of b(n) = v_3(a(n)).

    State vector (b(n), 1, n mod 2), initial value (0, 1, 0); the digit-0
    and digit-2 matrices coincide.
    """
    m02 = ((1, 0, 1), (0, 1, 0), (0, 0, 1))
    m1 = ((1, 1, -1), (0, 1, 0), (0, 1, -1))
    return LinearRep(base=3, dim=3, matrices=(m02, m1, m02), initial=(0, 1, 0), output_index=0)


def evaluate_digits(rep: LinearRep, digits: Sequence[int]) -> Tuple[int, ...]:
    """Fold the digit-indexed matrices over the initial vector.

    ``digits`` is least-significant first; the product is
    M[d0] . M[d1] ... M[dm] . initial, applied right to left.  Appending
    zero digits is a no-op thanks to the fixed-point invariant.
    """
    v = rep.initial
    for d in reversed(digits):
        v = mat_vec(rep.matrices[d], v)
    return v


def evaluate_vector(rep: LinearRep, n: int) -> Tuple[int, ...]:
    """State vector at n: expand n in base rep.base and fold."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    digits = []
    while n:
        n, d = divmod(n, rep.base)
        digits.append(d)
    return evaluate_digits(rep, digits)


def evaluate(rep: LinearRep, n: int) -> int:
    """Sequence value at n: the output coordinate of the state vector."""
    return evaluate_vector(rep, n)[rep.output_index]


def kernel_matrix(
    seq_values: Callable[[int], int], base: int, depth: int, prefix_len: int
) -> List[List[int]]:
    """Rows are length-``prefix_len`` prefixes of u(base^d n + a).

    One row per pair (d, a) with 0 <= d <= depth and 0 <= a < base^d, in
    lexicographic (d, a) order; sum of base^d rows in total.
    """
    if base < 2:
        raise ValueError("base must be at least 2")
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if prefix_len < 1:
        raise ValueError("prefix_len must be at least 1")
    rows = []
    step = 1
    for _ in range(depth + 1):
        for a in range(step):
            rows.append([seq_values(step * n + a) for n in range(prefix_len)])
        step *= base
    return rows


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Exact integer arithmetic throughout; each elimination step divides by
    the previous pivot and the division is checked to be exact.
    """
    m = [list(map(int, row)) for row in rows]
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(n_cols):
        piv = None
        for r in range(rank, n_rows):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][c]
        for r in range(rank + 1, n_rows):
            factor = m[r][c]
            if factor == 0 and pivot == prev:
                continue
            for cc in range(c + 1, n_cols):
                q, rem = divmod(pivot * m[r][cc] - factor * m[rank][cc], prev)
                assert rem == 0, "fraction-free step produced a remainder"
                m[r][cc] = q
            m[r][c] = 0
        prev = pivot
        rank += 1
        if rank == n_rows:
            break
    return rank
