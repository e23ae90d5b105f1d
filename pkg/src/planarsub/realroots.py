"""Real roots of univariate rational polynomials via Sturm sequences."""

from dataclasses import dataclass
from math import floor, ceil

from gmpy2 import mpq

from .poly import UPoly, Q

__all__ = [
    "ZeroPolynomial", "EndpointIsRoot", "IsolatingInterval", "SignCertificate",
    "squarefree_decomposition", "squarefree_part", "sturm_sequence",
    "count_real_roots", "isolate_roots", "sign_certificate", "sign_at_root",
    "cauchy_bound", "simplest_rational", "sample_points", "real_root_regions",
]


class ZeroPolynomial(ValueError):
    pass


class EndpointIsRoot(ValueError):
    pass


def _sign(v):
    return (v > 0) - (v < 0)


def squarefree_decomposition(u):
    """Yun's algorithm: list of (part, multiplicity) with monic coprime parts."""
    if u.is_zero():
        raise ZeroPolynomial("square-free decomposition of the zero polynomial")
    if u.degree == 0:
        return []
    out = []
    a = u.monic()
    d = a.deriv()
    g = a.gcd(d)
    b = a.exact_div(g)
    c = d.exact_div(g)
    i = 1
    while b.degree > 0:
        dd = c - b.deriv()
        y = b.gcd(dd)
        if y.degree > 0:
            out.append((y, i))
        b = b.exact_div(y)
        c = dd.exact_div(y)
        i += 1
    return out


def squarefree_part(u):
    if u.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if u.degree <= 0:
        return UPoly.const(1)
    return u.exact_div(u.gcd(u.deriv())).monic()


def _strip(u):
    """Divide by |lc| so sizes stay small while signs are preserved."""
    return u * (1 / abs(u.lc)) if u else u


def sturm_sequence(u):
    seq = [_strip(u), _strip(u.deriv())]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(_strip(-r))
    return [s for s in seq if s]


def _variations(signs):
    prev, n = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            n += 1
        prev = s
    return n


def _var_at(seq, t):
    return _variations([_sign(s(t)) for s in seq])


def _var_at_inf(seq, positive):
    out = []
    for s in seq:
        sg = _sign(s.lc)
        if not positive and s.degree % 2 == 1:
            sg = -sg
        out.append(sg)
    return _variations(out)


def count_real_roots(u, interval=None):
    """Number of distinct real roots, globally or in the open interval (a, b)."""
    if u.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if u.degree <= 0:
        return 0
    seq = sturm_sequence(u)
    if interval is None:
        return _var_at_inf(seq, False) - _var_at_inf(seq, True)
    a, b = Q(interval[0]), Q(interval[1])
    if u(a) == 0 or u(b) == 0:
        raise EndpointIsRoot(f"endpoint of ({a}, {b}) is a root")
    if a >= b:
        return 0
    return _var_at(seq, a) - _var_at(seq, b)


def cauchy_bound(u):
    lc = u.lc
    return 1 + max((abs(c / lc) for c in u.coeffs[:-1]), default=mpq(0))


@dataclass(frozen=True)
class IsolatingInterval:
    """(lo, hi] holds exactly one root of the square-free ``poly``.

    Endpoints are never roots of ``poly``, so the root is interior.
    """

    lo: object
    hi: object
    multiplicity: int
    poly: UPoly

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @property
    def width(self):
        return self.hi - self.lo

    def bisect(self):
        p = self.poly
        lo, hi = self.lo, self.hi
        m = (lo + hi) / 2
        while p(m) == 0:
            m = (m + hi) / 2
        if _sign(p(lo)) != _sign(p(m)):
            return IsolatingInterval(lo, m, self.multiplicity, p)
        return IsolatingInterval(m, hi, self.multiplicity, p)

    def refine(self, width):
        iv = self
        width = Q(width)
        while iv.width > width:
            iv = iv.bisect()
        return iv

    def exact_value(self):
        """The root when it is rational and a small candidate; else None."""
        if self.poly.degree == 1:
            return -self.poly.coeffs[0] / self.poly.coeffs[1]
        return None

    def approx(self):
        return float((self.lo + self.hi) / 2)


def _isolate_sqfree(p, mult):
    seq = sturm_sequence(p)
    B = cauchy_bound(p)
    out = []
    stack = [(-B, B)]
    while stack:
        lo, hi = stack.pop()
        n = _var_at(seq, lo) - _var_at(seq, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi, mult, p))
            continue
        m = (lo + hi) / 2
        while p(m) == 0:
            m = (m + hi) / 2
        stack.append((lo, m))
        stack.append((m, hi))
    return out


def isolate_roots(u):
    """Disjoint isolating intervals for all real roots, sorted, with multiplicities."""
    if u.is_zero():
        raise ZeroPolynomial("root isolation of the zero polynomial")
    ivs = []
    for part, mult in squarefree_decomposition(u):
        ivs.extend(_isolate_sqfree(part, mult))
    ivs.sort(key=lambda iv: iv.lo)
    # roots of distinct parts are distinct; shrink until pairwise separated
    changed = True
    while changed:
        changed = False
        for k in range(len(ivs) - 1):
            if ivs[k].hi >= ivs[k + 1].lo:
                ivs[k] = ivs[k].bisect()
                ivs[k + 1] = ivs[k + 1].bisect()
                changed = True
        ivs.sort(key=lambda iv: iv.lo)
    return ivs


def _separate(ivs, width):
    ivs = [iv.refine(width) for iv in ivs]
    changed = True
    while changed:
        changed = False
        for k in range(len(ivs) - 1):
            if ivs[k].hi >= ivs[k + 1].lo:
                ivs[k] = ivs[k].bisect()
                ivs[k + 1] = ivs[k + 1].bisect()
                changed = True
    return ivs


def simplest_rational(a, b):
    """Rational with the smallest denominator (then magnitude) in [a, b].

    ``a`` may be None for -infinity and ``b`` None for +infinity.
    """
    if a is None and b is None:
        return mpq(0)
    if a is None:
        return mpq(0) if b >= 0 else mpq(floor(b))
    if b is None:
        return mpq(0) if a <= 0 else mpq(ceil(a))
    a, b = Q(a), Q(b)
    if a <= 0 <= b:
        return mpq(0)
    if b < 0:
        return -simplest_rational(-b, -a)
    fl = floor(a)
    if fl == a:
        return mpq(fl)
    if fl + 1 <= b:
        return mpq(fl + 1)
    return fl + 1 / simplest_rational(1 / (b - fl), 1 / (a - fl))


def real_root_regions(u, width=mpq(1, 1024)):
    """Rational gaps between consecutive distinct real roots.

    Returns a list of (a, b) with a = None meaning -inf and b = None meaning
    +inf; each closed gap lies strictly between two consecutive roots.
    """
    ivs = _separate(isolate_roots(u), width) if u.degree > 0 else []
    bounds = [None] + [x for iv in ivs for x in (iv.lo, iv.hi)] + [None]
    return [(bounds[2 * k], bounds[2 * k + 1]) for k in range(len(ivs) + 1)]


def sample_points(u):
    """One rational point in each open region cut out by the real roots of u."""
    if u.is_zero():
        raise ZeroPolynomial("sampling against the zero polynomial")
    return [simplest_rational(a, b) for a, b in real_root_regions(u)]


@dataclass(frozen=True)
class SignCertificate:
    tag: str
    witness: object = None


def sign_certificate(u):
    if u.is_zero():
        return SignCertificate("IdenticallyZero")
    parts = squarefree_decomposition(u)
    if u.degree % 2 == 0 and u.lc > 0 and all(
            m % 2 == 0 or count_real_roots(p) == 0 for p, m in parts):
        return SignCertificate("NonnegativeEverywhere")
    for a, b in real_root_regions(u):
        z = simplest_rational(a, b)
        if u(z) < 0:
            return SignCertificate("NegativeWitness", z)
    raise AssertionError("no negative region found for a polynomial that is not nonnegative")


def sign_at_root(u, root):
    """Sign of u at the root isolated by ``root`` (an IsolatingInterval)."""
    if u.is_zero():
        return 0
    p = root.poly
    g = u.gcd(p)
    if g.degree > 0 and _sign(g(root.lo)) != _sign(g(root.hi)):
        return 0
    iv = root
    su = squarefree_part(u)
    while True:
        if su.degree <= 0 or (su(iv.lo) != 0 and su(iv.hi) != 0
                              and count_real_roots(su, (iv.lo, iv.hi)) == 0):
            return _sign(u(iv.hi)) if u(iv.hi) != 0 else _sign(u(iv.lo))
        iv = iv.bisect()
