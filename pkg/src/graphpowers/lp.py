"""Exact rational simplex for packing LPs: maximize 1.y subject to A y <= 1, y >= 0.

The slack basis is feasible from the start, so no phase one is needed. Bland's
rule (lowest-index entering and leaving variables) guarantees termination on
degenerate problems, which covering LPs over independent sets usually are.
"""

from __future__ import annotations

from fractions import Fraction


class Unbounded(ArithmeticError):
    pass


def solve_packing(rows: list[list[int]], ncols: int) -> tuple[Fraction, list[Fraction], list[Fraction]]:
    """Solve max sum(y) s.t. sum_{j in row} y_j <= 1 for every row, y >= 0.

    ``rows`` lists, for each constraint, the column indices with coefficient 1.
    Returns ``(value, y, x)`` where x is an optimal solution of the dual
    covering LP min sum(x) s.t. sum_{rows i containing j} x_i >= 1, x >= 0.
    """
    m = len(rows)
    one, zero = Fraction(1), Fraction(0)
    # dictionary form: basic_i = b_i - sum_k A[i][k] * nonbasic_k
    A = [[zero] * ncols for _ in range(m)]
    for i, row in enumerate(rows):
        for j in row:
            A[i][j] = one
    b = [one] * m
    c = [one] * ncols
    z = zero
    # variables 0..ncols-1 are y, ncols..ncols+m-1 are slacks
    nonbasic = list(range(ncols))
    basic = list(range(ncols, ncols + m))

    while True:
        entering = [(nonbasic[k], k) for k in range(ncols) if c[k] > 0]
        if not entering:
            break
        _, j = min(entering)
        leaving = [(b[i] / A[i][j], basic[i], i) for i in range(m) if A[i][j] > 0]
        if not leaving:
            raise Unbounded("objective is unbounded")
        _, _, i = min(leaving)

        p = A[i][j]
        row = A[i]
        for k in range(ncols):
            row[k] = row[k] / p if k != j else one / p
        b[i] /= p
        for r in range(m):
            if r == i:
                continue
            f = A[r][j]
            if f == 0:
                continue
            ar = A[r]
            for k in range(ncols):
                if k == j:
                    ar[k] = -f / p
                elif row[k]:
                    ar[k] -= f * row[k]
            b[r] -= f * b[i]
        f = c[j]
        z += f * b[i]
        for k in range(ncols):
            if k == j:
                c[k] = -f / p
            elif row[k]:
                c[k] -= f * row[k]
        nonbasic[j], basic[i] = basic[i], nonbasic[j]

    y = [zero] * ncols
    for i, var in enumerate(basic):
        if var < ncols:
            y[var] = b[i]
    x = [zero] * m
    for k, var in enumerate(nonbasic):
        if var >= ncols:
            x[var - ncols] = -c[k]
    return z, y, x
