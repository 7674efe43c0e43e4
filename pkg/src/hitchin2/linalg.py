"""Exact linear algebra over any exact field (Fraction or GaussianRational).

Plain Gaussian elimination with exact division; no pivoting heuristics are
needed because there is no rounding.  Entries only have to support
``+ - * /``, ``bool`` (nonzero test) and equality.
"""

from __future__ import annotations

from typing import Sequence


class SingularMatrixError(ValueError):
    """Raised by solvers on rank-deficient or inconsistent systems."""


def _rows_copy(rows) -> list[list]:
    return [list(r) for r in rows]


def exact_rref(rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form and pivot column indices."""
    m = _rows_copy(rows)
    if not m:
        return [], []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, n_rows) if m[i][c]), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def exact_rank(rows: Sequence[Sequence]) -> int:
    return len(exact_rref(rows)[1])


def exact_nullspace(rows: Sequence[Sequence]) -> list[list]:
    """Basis of the right kernel, one vector per non-pivot column."""
    m, pivots = exact_rref(rows)
    if not rows:
        return []
    n_cols = len(rows[0])
    some = next((x for r in rows for x in r if x), None)
    if some is None:  # zero matrix: kernel is everything
        one, zero = 1, 0
    else:
        one, zero = some / some, some - some
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * n_cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def exact_solve(rows: Sequence[Sequence], rhs: Sequence) -> list:
    """Solve A x = b exactly; A must have full column rank and b be consistent."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, pivots = exact_rref(aug)
    n_cols = len(rows[0])
    if n_cols in pivots:
        raise SingularMatrixError("inconsistent linear system")
    if len(pivots) != n_cols:
        raise SingularMatrixError("matrix does not have full column rank")
    zero = None
    for r in rows:
        for x in r:
            if x:
                zero = x - x
                break
        if zero is not None:
            break
    if zero is None:
        raise SingularMatrixError("zero matrix")
    x = [zero] * n_cols
    for r, pc in enumerate(pivots):
        x[pc] = m[r][n_cols]
    return x


def det3(m: Sequence[Sequence]):
    """3x3 determinant by cofactors; works for any commutative ring entries."""
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )
