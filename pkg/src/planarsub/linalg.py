"""Fraction-free determinants over exact rings."""


def bareiss_det(rows, zero, one, div):
    """Determinant by Bareiss elimination.

    ``div(a, b)`` must return the exact quotient a / b. Works for rationals
    and for UPoly entries alike.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix is not square")
    if n == 0:
        return one
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k] == zero:
            for r in range(k + 1, n):
                if m[r][k] != zero:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = div(row_i[j] * pivot - mik * row_k[j], prev)
            row_i[k] = zero
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det
