"""Half-Reeb regions of the canonical families and the refuter for Jacobian pairs."""

from dataclasses import dataclass, field

import numpy as np
from gmpy2 import mpq

from .families import Family, family_polynomial, REGION_TEXT
from .poly import UPoly, BPoly, Q, diff, evaluate
from .realroots import ZeroPolynomial, sign_certificate
from .positivity import LemmaViolation

__all__ = [
    "PreconditionFailed", "WitnessSearchExhausted", "HrcRegion", "hrc_region",
    "jacobian_det", "tau", "divergence_verdict", "DivergenceVerdict",
    "truncated_integral", "L_theta", "zero_exponent_part", "RefutationCertificate",
    "refute_pair", "DIVERGENCE_THRESHOLD", "MAX_SEARCH_X",
]

MAX_SEARCH_X = 2 ** 64
PANELS = 2 ** 12

# families 3 and 4: h-based tau at or above this makes the integral over the region infinite
DIVERGENCE_THRESHOLD = -2


class PreconditionFailed(ValueError):
    pass


class WitnessSearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class HrcRegion:
    """Region between the singular edge and a compact transversal.

    ``outer`` is the variable of the outer integral with ``outer_range``;
    ``inner_bounds(t)`` gives float bounds of the inner variable at outer value t.
    """

    family: Family
    description: str
    outer: str
    outer_range: tuple

    def inner_bounds(self, t):
        a = float(self.family.a02)
        t = np.asarray(t, dtype=float)
        fid = self.family.id
        if fid == 1:
            return np.zeros_like(t), -1 / t - t * t
        if fid == 2:
            return -1 / (t * t) - a / t, np.full_like(t, a - 1)
        if fid == 3:
            return -1 / (t * t), np.zeros_like(t)
        return np.full_like(t, np.sqrt(2 - a)), np.sqrt(-1 / t - a - t)


def hrc_region(family):
    text = REGION_TEXT[family.id].replace("a02", f"({family.a02})") if family.id in (2, 4) \
        else REGION_TEXT[family.id]
    if family.id == 3:
        return HrcRegion(family, text, "x", (mpq(1), None))
    return HrcRegion(family, text, "y", (mpq(-1), mpq(0)))


def jacobian_det(p, q):
    return diff(p, "x") * diff(q, "y") - diff(p, "y") * diff(q, "x")


def _exponent(fid, i, j):
    if fid == 1:
        return j - i - 1
    if fid == 2:
        return j - 2 * i - 2
    return i - 2 * j - 3


def tau(family, h):
    """Exponent over the nonzero terms of h: min for families 1, 2 and max for 3, 4."""
    if h.is_zero():
        raise ZeroPolynomial("tau of the zero polynomial")
    vals = [_exponent(family.id, i, j) for i, j in h.terms]
    return min(vals) if family.id in (1, 2) else max(vals)


@dataclass(frozen=True)
class DivergenceVerdict:
    tag: str  # "Diverges" or "FiniteOrUnknown"
    tau: int


def divergence_verdict(family, h):
    if h.is_zero():
        raise PreconditionFailed("h is zero")
    t = tau(family, h)
    if family.id in (1, 2):
        if h.constant_term() == 0:
            raise PreconditionFailed("families 1 and 2 need h(0, 0) != 0")
        return DivergenceVerdict("Diverges", t)
    return DivergenceVerdict("Diverges" if t >= DIVERGENCE_THRESHOLD else "FiniteOrUnknown", t)


# ---------------------------------------------------------------- quadrature

def truncated_integral(family, h, eps, panels=PANELS):
    """Midpoint rule in a log variable along the outer axis; the inner integral is exact.

    Families 1, 2, 4 integrate over y in [-1, -eps], family 3 over x in [1, 1/eps].
    """
    eps = float(Q(eps))
    if not eps > 0:
        raise ValueError("eps must be positive")
    if h.is_zero():
        return 0.0
    reg = hrc_region(family)
    L = -np.log(eps)
    du = L / panels
    u = (np.arange(panels) + 0.5) * du
    if reg.outer == "y":
        # y = -exp(-u), u in [0, ln(1/eps)]
        t = -np.exp(-u)
        jac = -t
    else:
        t = np.exp(u)
        jac = t
    lo, hi = reg.inner_bounds(t)
    total = np.zeros_like(t)
    for (i, j), c in sorted(h.terms.items()):
        if reg.outer == "y":
            k, outer_pow = i, j
        else:
            k, outer_pow = j, i
        inner = (hi ** (k + 1) - lo ** (k + 1)) / (k + 1)
        total = total + float(c) * t ** outer_pow * inner
    return float(np.sum(total * jac) * du)


# ---------------------------------------------------------------- L(theta)

def L_theta(q):
    """Σ over terms of q with i = 2j + 1 of b_ij (2(j - i)θ - i) θ^j."""
    out = UPoly()
    for (i, j), b in q.terms.items():
        if i == 2 * j + 1:
            out = out + UPoly.monomial(j, b) * UPoly([-i, 2 * (j - i)])
    return out


def zero_exponent_part(h):
    """Coefficient of x^0 in h(x, θ/x^2), a polynomial in θ."""
    out = {}
    for (a, b), c in h.terms.items():
        if a == 2 * b:
            out[b] = out.get(b, 0) + c
    n = max(out, default=-1) + 1
    return UPoly([out.get(k, 0) for k in range(n)])


@dataclass(frozen=True)
class RefutationCertificate:
    tag: str  # "PointWitness" or "DivergenceCertificate"
    point: tuple = None
    value: object = None
    family: Family = None
    tau: int = None
    trace: tuple = field(default_factory=tuple)


def refute_pair(family, q):
    """Certificate that det D(p, q) is not positive everywhere, p the family polynomial."""
    if q.is_const():
        raise PreconditionFailed("q must be nonconstant")
    p = family_polynomial(family)
    h = jacobian_det(p, q)
    trace = [f"h = {h.to_str()}"]
    h00 = h.constant_term()
    if h00 <= 0:
        trace.append(f"h(0, 0) = {h00} <= 0")
        return RefutationCertificate("PointWitness", (mpq(0), mpq(0)), h00, family, None, tuple(trace))
    t = tau(family, h)
    trace.append(f"h(0, 0) = {h00} > 0, tau = {t}")
    if family.id in (1, 2):
        trace.append("b00 != 0 forces tau < 0; the integral of h over the region is infinite")
        return RefutationCertificate("DivergenceCertificate", family=family, tau=t, trace=tuple(trace))
    if t >= DIVERGENCE_THRESHOLD:
        trace.append(f"tau >= {DIVERGENCE_THRESHOLD}; the integral of h over the region is infinite")
        return RefutationCertificate("DivergenceCertificate", family=family, tau=t, trace=tuple(trace))
    L = L_theta(q)
    K = zero_exponent_part(h)
    if K != L:
        raise AssertionError(f"x^0 part of h(x, θ/x^2) is {K}, expected L = {L}")
    trace.append(f"L(θ) = {L.to_str('θ')}")
    # h(0, 0) = -b10 = L(0) > 0, so L is not identically zero
    cert = sign_certificate(L)
    if cert.tag != "NegativeWitness":
        raise LemmaViolation(f"L = {L} has no negative value")
    th = cert.witness
    trace.append(f"L({th}) = {L(th)} < 0")
    x = mpq(1)
    while x <= MAX_SEARCH_X:
        pt = (x, th / (x * x))
        v = evaluate(h, *pt)
        if v <= 0:
            trace.append(f"h({pt[0]}, {pt[1]}) = {v} <= 0")
            return RefutationCertificate("PointWitness", pt, v, family, t, tuple(trace))
        x *= 2
    raise WitnessSearchExhausted(f"no witness with x <= 2^64 for θ = {th}")
