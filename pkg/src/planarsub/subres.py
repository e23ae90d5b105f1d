"""Sylvester matrices, k-subresultants and the closed forms for small pairs."""

from dataclasses import dataclass

from .linalg import bareiss_det
from .poly import UPoly, BPoly, coeffs_in

__all__ = [
    "BothConstantInVar", "KOutOfRange", "ZeroLeadingCoefficient",
    "SylvesterMatrix", "sylvester", "sylvester_from_coeffs", "subresultant",
    "subresultant_from_coeffs", "upoly_det", "r0_r1_quad_pair",
    "r0_r1_quad_cubic", "common_root_count", "resultant",
]


class BothConstantInVar(ValueError):
    pass


class KOutOfRange(ValueError):
    pass


class ZeroLeadingCoefficient(ValueError):
    pass


@dataclass(frozen=True)
class SylvesterMatrix:
    entries: tuple
    n: int
    m: int

    @property
    def size(self):
        return self.n + self.m

    def trimmed(self, k):
        N = self.size
        return [list(row[k:N - k]) for row in self.entries[k:N - k]]


def sylvester_from_coeffs(pc, qc):
    """Layout from descending-order coefficient lists (formal degrees).

    m rows of p slide right; then n rows of q slide left, so the last row
    starts at column 0.
    """
    n, m = len(pc) - 1, len(qc) - 1
    N = n + m
    zero = UPoly()
    rows = []
    for r in range(m):
        row = [zero] * N
        for t, c in enumerate(pc):
            row[r + t] = c
        rows.append(tuple(row))
    for r in range(n):
        off = n - 1 - r
        row = [zero] * N
        for t, c in enumerate(qc):
            row[off + t] = c
        rows.append(tuple(row))
    return SylvesterMatrix(tuple(rows), n, m)


def sylvester(p, q, var):
    pc = coeffs_in(p, var)
    qc = coeffs_in(q, var)
    if len(pc) <= 1 and len(qc) <= 1:
        raise BothConstantInVar(f"both inputs are constant in {var}")
    if not pc or not qc:
        raise BothConstantInVar("zero polynomial has no Sylvester matrix")
    return sylvester_from_coeffs(pc[::-1], qc[::-1])


def upoly_det(rows):
    return bareiss_det(rows, UPoly(), UPoly.const(1), lambda a, b: a.exact_div(b))


def _trim_det(S, k):
    if k < 0 or k > S.size // 2:
        raise KOutOfRange(f"k={k} outside 0..{S.size // 2}")
    return upoly_det(S.trimmed(k))


def subresultant(p, q, var, k):
    """Determinant of the Sylvester matrix with the first/last k rows and columns removed."""
    return _trim_det(sylvester(p, q, var), k)


def subresultant_from_coeffs(pc, qc, k):
    """Same, for descending coefficient lists with formal (possibly zero) leaders."""
    return _trim_det(sylvester_from_coeffs(pc, qc), k)


def resultant(u, v):
    """Sylvester-layout resultant of two univariate polynomials (sign as laid out)."""
    if u.is_zero() or v.is_zero():
        return UPoly().lc
    pc = [UPoly.const(c) for c in reversed(u.coeffs)]
    qc = [UPoly.const(c) for c in reversed(v.coeffs)]
    d = upoly_det(sylvester_from_coeffs(pc, qc).trimmed(0))
    return d.lc


def r0_r1_quad_pair(a, b, c, d):
    """p = y² + a y + b, q = y² + c y + d."""
    R1 = c - a
    R0 = -(d - b) ** 2 + (a * (d - b) - b * R1) * R1
    return R0, R1


def r0_r1_quad_cubic(a, b, c, d, e):
    """p = y² + a y + b, q = y³ + c y² + d y + e."""
    R1 = a * a - a * c - b + d
    s = a * b - b * c + e
    R0 = -s * s + (a * s - b * R1) * R1
    return R0, R1


def common_root_count(p, q):
    """Number of common complex roots with multiplicity, read off the subresultants."""
    if p.is_zero() or q.is_zero():
        raise ZeroLeadingCoefficient("zero polynomial has no leading coefficient")
    S = sylvester_from_coeffs([UPoly.const(c) for c in reversed(p.coeffs)],
                              [UPoly.const(c) for c in reversed(q.coeffs)])
    for k in range(S.size // 2 + 1):
        if _trim_det(S, k):
            return k
    raise AssertionError("all subresultants vanish")
