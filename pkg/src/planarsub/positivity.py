"""Sign changes of L(θ) = Σ b_j (2(j+1)θ + 2j+1) θ^j and the Hankel matrices behind them."""

from dataclasses import dataclass

from gmpy2 import mpq

from .linalg import bareiss_det
from .poly import UPoly, Q
from .realroots import sign_certificate

__all__ = [
    "DenominatorZero", "BadIndices", "NotSquare", "LemmaViolation", "BadLength",
    "alpha", "HankelMatrix", "hankel", "det_exact", "leading_minors",
    "bruna_poly", "IsZero", "Witnesses", "bruna_witnesses", "SquaresInput",
    "b_from_squares", "square_sums", "K_form",
]


class DenominatorZero(ValueError):
    pass


class BadIndices(ValueError):
    pass


class NotSquare(ValueError):
    pass


class LemmaViolation(AssertionError):
    pass


class BadLength(ValueError):
    pass


def alpha(i, k):
    """(-2)^(i+1) * prod_{l=0}^{i} (2k - l) / (4k - (2l + 1)); 1 for i = -1."""
    if k < 1 or i < -1 or i > 2 * k - 1:
        raise DenominatorZero(f"alpha({i}, {k}) is outside -1 <= i <= 2k-1, k >= 1")
    out = mpq((-2) ** (i + 1))
    for l in range(i + 1):
        out *= mpq(2 * k - l, 4 * k - (2 * l + 1))
    return out


@dataclass(frozen=True)
class HankelMatrix:
    j: int
    k: int
    entries: tuple

    def rows(self):
        return [list(r) for r in self.entries]


def hankel(j, k):
    """(j+1)x(j+1) matrix with entry(r, s) = alpha(2j - r - s + 1, k), 1-indexed."""
    if not 1 <= j <= k:
        raise BadIndices(f"need 1 <= j <= k, got j={j}, k={k}")
    n = j + 1
    entries = tuple(tuple(alpha(2 * j - r - s + 1, k) for s in range(1, n + 1))
                    for r in range(1, n + 1))
    return HankelMatrix(j, k, entries)


def _as_rows(M):
    rows = M.rows() if isinstance(M, HankelMatrix) else [list(r) for r in M]
    if any(len(r) != len(rows) for r in rows):
        raise NotSquare("matrix is not square")
    return [[Q(v) for v in r] for r in rows]


def det_exact(M):
    return bareiss_det(_as_rows(M), mpq(0), mpq(1), lambda a, b: a / b)


def leading_minors(M):
    rows = _as_rows(M)
    return [det_exact([r[:n] for r in rows[:n]]) for n in range(1, len(rows) + 1)]


def bruna_poly(b):
    """L(θ) = Σ b_j (2(j+1)θ + 2j + 1) θ^j."""
    out = [mpq(0)] * (len(b) + 1)
    for j, bj in enumerate(b):
        bj = Q(bj)
        out[j] += (2 * j + 1) * bj
        out[j + 1] += 2 * (j + 1) * bj
    return UPoly(out)


@dataclass(frozen=True)
class IsZero:
    tag: str = "IsZero"


@dataclass(frozen=True)
class Witnesses:
    theta1: object
    theta2: object
    tag: str = "Witnesses"


def bruna_witnesses(b):
    """Points with L(θ1) < 0 < L(θ2), or IsZero when L vanishes identically."""
    L = bruna_poly(b)
    if L.is_zero():
        return IsZero()
    neg = sign_certificate(L)
    pos = sign_certificate(-L)
    if neg.tag != "NegativeWitness" or pos.tag != "NegativeWitness":
        raise LemmaViolation(f"L = {L} does not change sign")
    return Witnesses(neg.witness, pos.witness)


@dataclass(frozen=True)
class SquaresInput:
    a: tuple
    c: tuple

    def __init__(self, a, c):
        object.__setattr__(self, "a", tuple(Q(v) for v in a))
        object.__setattr__(self, "c", tuple(Q(v) for v in c))

    @property
    def k(self):
        return len(self.a) - 1


def _check(inp):
    if len(inp.a) != len(inp.c) or len(inp.a) < 2:
        raise BadLength("a and c must both have length k+1 with k >= 1")


def square_sums(inp):
    """S_m = Σ_{r+s=m} (a_r a_s + c_r c_s) for m = 0..2k."""
    n = len(inp.a)
    S = [mpq(0)] * (2 * n - 1)
    for r in range(n):
        for s in range(n):
            S[r + s] += inp.a[r] * inp.a[s] + inp.c[r] * inp.c[s]
    return S


def b_from_squares(inp):
    """b_0..b_{2k-1} from the closed formula in terms of the square sums."""
    _check(inp)
    k = inp.k
    S = square_sums(inp)
    out = []
    for j in range(2 * k):
        acc = mpq(0)
        for l in range(j + 1):
            prod = mpq(1)
            for i in range(l + 1):
                prod *= mpq(j - (i - 1), 2 * (j - i) + 1)
            acc += (-2) ** l * prod * S[j - l]
        out.append(acc / (j + 1))
    return out


def K_form(inp):
    """K(a, c) = -4k b_{2k-1} + a_k² + c_k²."""
    _check(inp)
    k = inp.k
    b = b_from_squares(inp)
    return -4 * k * b[2 * k - 1] + inp.a[k] ** 2 + inp.c[k] ** 2
