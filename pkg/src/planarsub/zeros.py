"""Real common zeros of bivariate pairs: shaped-pair theorems and a general oracle."""

from dataclasses import dataclass, field
from itertools import count

from gmpy2 import mpq

from .poly import (UPoly, BPoly, AffineMap, Q, coeffs_in, from_coeffs, affine_substitute,
                   content_in, exact_div, bgcd, diff)
from .realroots import (isolate_roots, squarefree_part, sign_certificate, sign_at_root,
                        sample_points)
from .subres import subresultant, subresultant_from_coeffs, resultant

__all__ = [
    "ConstantInput", "AlphaNotCommonZero", "ShapedPair23", "ShapedPair22",
    "ZeroVerdict", "Box", "interval_eval", "common_real_zero", "real_zero_of",
    "critical_point_exists", "CriticalResult", "decide_thm_raiz23",
    "decide_thm_raiz22", "decide_cor_raiz23", "decide_cor_raiz22",
]

DEFAULT_WIDTH = mpq(1, 2 ** 20)


class ConstantInput(ValueError):
    pass


class AlphaNotCommonZero(ValueError):
    pass


# ---------------------------------------------------------------- intervals

def _ipow(lo, hi, e):
    if e == 0:
        return mpq(1), mpq(1)
    a, b = lo ** e, hi ** e
    if e % 2 == 0 and lo < 0 < hi:
        return mpq(0), max(a, b)
    return min(a, b), max(a, b)


def _imul(a, b):
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(ps), max(ps)


def interval_eval(p, box):
    """Exact enclosure of p over the closed box."""
    lo = hi = mpq(0)
    for (i, j), c in p.terms.items():
        t = _imul(_ipow(box.xlo, box.xhi, i), _ipow(box.ylo, box.yhi, j))
        t = (c * t[0], c * t[1]) if c > 0 else (c * t[1], c * t[0])
        lo += t[0]
        hi += t[1]
    return lo, hi


@dataclass(frozen=True)
class Box:
    xlo: object
    xhi: object
    ylo: object
    yhi: object

    def contains_zero_of(self, p):
        lo, hi = interval_eval(p, self)
        return lo <= 0 <= hi

    @property
    def width(self):
        return max(self.xhi - self.xlo, self.yhi - self.ylo)

    def as_lists(self):
        return [[self.xlo, self.xhi], [self.ylo, self.yhi]]


# ---------------------------------------------------------------- general oracle

def _shear(p, t):
    """p(X + tY, Y)."""
    return affine_substitute(p, AffineMap(1, t, 0, 1))


def _monic_in_y(p):
    cs = coeffs_in(p, "y")
    return cs and cs[-1].is_const() and len(cs) - 1 == p.degree


def _shears():
    yield mpq(0)
    for n in count(1):
        yield mpq(n)
        yield mpq(-n)


def _pair_box(ft, gt, xroot, t, width):
    """Locate the Y-coordinate above the X-root and return a box in (x, y)."""
    ry = subresultant(ft, gt, "x", 0)
    cands = isolate_roots(squarefree_part(ry))
    ix = xroot
    while True:
        alive = []
        for iy in cands:
            b = Box(ix.lo, ix.hi, iy.lo, iy.hi)
            if b.contains_zero_of(ft) and b.contains_zero_of(gt):
                alive.append(iy)
        if not alive:
            raise AssertionError("lost the common zero during pairing")
        cands = alive
        if len(cands) == 1:
            iy = cands[0]
            xw = ix.width + abs(t) * iy.width
            if xw <= width and iy.width <= width:
                xlo, xhi = ix.lo + min(t * iy.lo, t * iy.hi), ix.hi + max(t * iy.lo, t * iy.hi)
                return Box(xlo, xhi, iy.lo, iy.hi)
        ix = ix.bisect()
        cands = [iy.bisect() for iy in cands]


def _finite_common_zero(f, g, width):
    """Real common zero of coprime f, g (finitely many complex ones), or None."""
    if f.is_const() or g.is_const():
        return None
    best = None
    tried = 0
    need = None
    for t in _shears():
        ft, gt = _shear(f, t), _shear(g, t)
        if not (_monic_in_y(ft) and _monic_in_y(gt)):
            continue
        r = subresultant(ft, gt, "y", 0)
        if r.is_zero():
            raise AssertionError("coprime pair with vanishing resultant")
        if r.degree <= 0 or not isolate_roots(r):
            return None
        s = squarefree_part(r)
        if need is None:
            D = r.degree
            need = D * (D - 1) // 2 + 1
        if best is None or s.degree > best[0].degree:
            best = (s, t, ft, gt)
        tried += 1
        if s.degree == r.degree or tried >= need:
            break
    s, t, ft, gt = best
    # generic position: each real root of s carries exactly one common zero, which is real
    xroot = isolate_roots(s)[0]
    return _pair_box(ft, gt, xroot, t, width)


def real_zero_of(G, width=DEFAULT_WIDTH):
    """A box around a real zero of the nonconstant polynomial G, or None."""
    c = content_in(G, "y")
    if c.degree > 0:
        roots = isolate_roots(c)
        if roots:
            r = roots[0].refine(width)
            return Box(r.lo, r.hi, mpq(0), mpq(0))
        H = exact_div(G, BPoly.from_upoly(c, "x"))
    else:
        H = G
    if H.deg_in("y") <= 0:
        return None
    Hy = diff(H, "y")
    lc = coeffs_in(H, "y")[-1]
    crit = lc * subresultant(H, Hy, "y", 0)
    for x0 in sample_points(crit):
        u = H.specialize("x", x0)
        roots = isolate_roots(u)
        if roots:
            r = roots[0].refine(width)
            return Box(x0, x0, r.lo, r.hi)
    # isolated real points of H = 0 are singular, hence common zeros of H and H_y
    return _finite_common_zero(H, Hy, width)


def common_real_zero(f, g, width=DEFAULT_WIDTH):
    """A box containing a real common zero of f and g, or None when there is none."""
    width = Q(width)
    if f.is_zero() and g.is_zero():
        return Box(mpq(0), mpq(0), mpq(0), mpq(0))
    G = bgcd(f, g)
    if G.degree > 0:
        box = real_zero_of(G, width)
        if box is not None:
            return box
        f, g = exact_div(f, G), exact_div(g, G)
    box = _finite_common_zero(f, g, width)
    if box is not None:
        assert box.contains_zero_of(f) and box.contains_zero_of(g)
    return box


@dataclass(frozen=True)
class CriticalResult:
    exists: bool
    box: Box = None

    def __bool__(self):
        return self.exists


def critical_point_exists(p, width=DEFAULT_WIDTH):
    """Decide whether grad p has a real zero; a witness box is returned when it does."""
    if p.is_const():
        raise ConstantInput("constant polynomial")
    px, py = diff(p, "x"), diff(p, "y")
    box = common_real_zero(px, py, width)
    if box is None:
        return CriticalResult(False)
    assert box.contains_zero_of(px) and box.contains_zero_of(py)
    return CriticalResult(True, box)


# ---------------------------------------------------------------- shaped pairs

def _shaped(p, var, n):
    cs = coeffs_in(p, var)
    if len(cs) > n + 1:
        raise ValueError(f"degree in {var} exceeds {n}")
    cs = cs + [UPoly()] * (n + 1 - len(cs))
    return cs


@dataclass(frozen=True)
class ShapedPair23:
    """p = M y² + a y + b, q = N y³ + c y² + d y + e (y is ``var``)."""

    M: UPoly
    a: UPoly
    b: UPoly
    N: UPoly
    c: UPoly
    d: UPoly
    e: UPoly
    var: str = "y"

    @classmethod
    def from_bpolys(cls, p, q, var="y"):
        b, a, M = _shaped(p, var, 2)
        e, d, c, N = _shaped(q, var, 3)
        return cls(M, a, b, N, c, d, e, var)

    def polys(self):
        return (from_coeffs([self.b, self.a, self.M], self.var),
                from_coeffs([self.e, self.d, self.c, self.N], self.var))

    def R(self, k):
        return subresultant_from_coeffs([self.M, self.a, self.b],
                                        [self.N, self.c, self.d, self.e], k)


@dataclass(frozen=True)
class ShapedPair22:
    """p = M y² + a y + b, q = N y² + c y + d (y is ``var``)."""

    M: UPoly
    a: UPoly
    b: UPoly
    N: UPoly
    c: UPoly
    d: UPoly
    var: str = "y"

    @classmethod
    def from_bpolys(cls, p, q, var="y"):
        b, a, M = _shaped(p, var, 2)
        d, c, N = _shaped(q, var, 2)
        return cls(M, a, b, N, c, d, var)

    def polys(self):
        return (from_coeffs([self.b, self.a, self.M], self.var),
                from_coeffs([self.d, self.c, self.N], self.var))

    def R(self, k):
        return subresultant_from_coeffs([self.M, self.a, self.b], [self.N, self.c, self.d], k)


@dataclass(frozen=True)
class ZeroVerdict:
    tag: str
    box: Box = None
    note: str = ""
    facts: tuple = field(default_factory=tuple)


def _no_common_zero(u, v):
    return resultant(u, v) != 0


def _exists(pair, facts):
    p, q = pair.polys()
    box = common_real_zero(p, q)
    if box is None:
        raise AssertionError("theorem hypotheses hold but no common real zero was located")
    return ZeroVerdict("CommonRealZeroExists", box, facts=tuple(facts))


def _theorem(pair, with_M):
    R0 = pair.R(0)
    if R0.is_zero():
        return ZeroVerdict("HypothesesNotMet", note="R0 vanishes identically")
    facts = [f"R0 = {R0.to_str('t')}"]
    if not _no_common_zero(R0, pair.N):
        return ZeroVerdict("HypothesesNotMet", note="R0 and N share a zero", facts=tuple(facts))
    facts.append("res(R0, N) != 0")
    if with_M:
        if not _no_common_zero(R0, pair.M):
            return ZeroVerdict("HypothesesNotMet", note="R0 and M share a zero", facts=tuple(facts))
        facts.append("res(R0, M) != 0")
    bl = R0.lc
    cert = sign_certificate(R0 * bl)
    if cert.tag != "NegativeWitness":
        return ZeroVerdict("HypothesesNotMet", note="b_l R0 is nonnegative", facts=tuple(facts))
    facts.append(f"b_l R0({cert.witness}) < 0")
    return _exists(pair, facts)


def decide_thm_raiz23(pair):
    return _theorem(pair, with_M=False)


def _i_prime(pair, alpha):
    alpha = Q(alpha)
    R0 = pair.R(0)
    if R0(alpha) != 0 or pair.M(alpha) != 0:
        raise AlphaNotCommonZero(f"R0({alpha}) or M({alpha}) is nonzero")
    facts = [f"R0({alpha}) = M({alpha}) = 0"]
    if pair.N(alpha) == 0:
        return ZeroVerdict("HypothesesNotMet", note="N vanishes at alpha", facts=tuple(facts))
    if pair.a(alpha) != 0:
        facts.append(f"a({alpha}) != 0")
        return _exists(pair, facts)
    if pair.b(alpha) == 0:
        disc = pair.c(alpha) ** 2 - 4 * pair.N(alpha) * pair.d(alpha)
        facts.append(f"p({alpha}, .) = 0, discriminant {disc}")
        if disc >= 0:
            return _exists(pair, facts)
    return ZeroVerdict("NoCommonRealZeroOnLine", note=f"no shared real root on {alpha}",
                       facts=tuple(facts))


def decide_thm_raiz22(pair, variant="standard", alpha=None):
    if variant == "standard":
        return _theorem(pair, with_M=True)
    if variant == "i_prime":
        return _i_prime(pair, alpha)
    raise ValueError(f"unknown variant {variant!r}")


def _corollary(pair, bl_sign_ok, with_M):
    R0 = pair.R(0)
    if R0.is_zero():
        return ZeroVerdict("HypothesesNotMet", note="R0 vanishes identically")
    bl = R0.lc
    facts = [f"b_l = {bl}"]
    if not bl_sign_ok(bl):
        return ZeroVerdict("HypothesesNotMet", note="sign of b_l", facts=tuple(facts))
    if not _no_common_zero(R0, pair.N) or (with_M and not _no_common_zero(R0, pair.M)):
        return ZeroVerdict("HypothesesNotMet", note="R0 shares a zero with M or N",
                           facts=tuple(facts))
    R1 = pair.R(1)
    if R1.is_zero():
        return ZeroVerdict("HypothesesNotMet", note="R1 vanishes identically", facts=tuple(facts))
    for z in isolate_roots(R1):
        sM = sign_at_root(pair.M, z)
        sN = sign_at_root(pair.N, z)
        ok = (sM != 0 and sN != 0) if with_M else ((1 if bl > 0 else -1) * sM > 0 and sN != 0)
        if ok:
            facts.append(f"R1 root in ({z.lo}, {z.hi}]: sign M = {sM}, sign N = {sN}")
            return _exists(pair, facts)
    return ZeroVerdict("HypothesesNotMet", note="no root of R1 meets the sign conditions",
                       facts=tuple(facts))


def decide_cor_raiz23(pair):
    return _corollary(pair, lambda bl: True, with_M=False)


def decide_cor_raiz22(pair, alpha=None):
    if alpha is not None:
        return _i_prime(pair, alpha)
    return _corollary(pair, lambda bl: bl > 0, with_M=True)
