"""Degree-4 classification: quartic normal-form cases and submersion verdicts."""

from dataclasses import dataclass, field

import gmpy2
from gmpy2 import mpq

from .families import Family, family_polynomial, REGION_TEXT
from .levelsets import decide_connected
from .poly import (UPoly, BPoly, AffineMap, AffineEquivalence, Q, affine_substitute,
                   homogeneous_part, diff, evaluate)
from .realroots import (squarefree_decomposition, count_real_roots, isolate_roots,
                        cauchy_bound)
from .zeros import Box, ConstantInput, DEFAULT_WIDTH, critical_point_exists, interval_eval

__all__ = [
    "DegreeNotFour", "QuarticPartZero", "DegreeAboveFour", "QuarticCase", "quartic_case",
    "canonical_family_match", "match_family", "Sqrt", "DisconnectionCertificate",
    "disconnection_certificate", "verify_disconnection", "Verdict", "classify_degree4",
    "verify_witness_box", "ConstantInput",
]


class DegreeNotFour(ValueError):
    pass


class QuarticPartZero(ValueError):
    pass


class DegreeAboveFour(ValueError):
    pass


# ---------------------------------------------------------------- quartic case

@dataclass(frozen=True)
class QuarticCase:
    label: str
    pattern: tuple  # sorted (multiplicity, is_real) per projective root


def _projective_roots(q4):
    """Square-free parts of q4(t, 1) with multiplicity, plus the root at infinity."""
    u = UPoly([q4.terms.get((i, 4 - i), 0) for i in range(5)])
    if u.is_zero():
        raise QuarticPartZero("quartic part is zero")
    parts = list(squarefree_decomposition(u))
    inf = 4 - u.degree
    return parts, inf


def _pattern(q4):
    parts, inf = _projective_roots(q4)
    pat = []
    for part, m in parts:
        nreal = count_real_roots(part)
        pat += [(m, True)] * nreal
        pat += [(m, False)] * (part.degree - nreal)
    if inf:
        pat.append((inf, True))
    return tuple(sorted(pat, reverse=True))


def quartic_case(p):
    """Case label of the quartic part of p under real linear changes of variables."""
    if p.degree != 4:
        raise DegreeNotFour(f"total degree is {p.degree}, not 4")
    pat = _pattern(homogeneous_part(p, 4))
    mults = sorted((m for m, _ in pat), reverse=True)
    nreal = sum(1 for _, r in pat if r)
    if mults == [1, 1, 1, 1]:
        label = {4: "I", 2: "III", 0: "II"}[nreal]
    elif mults == [2, 1, 1]:
        label = "V" if nreal == 3 else "IV"
    elif mults == [2, 2]:
        label = "VII" if nreal == 2 else "VI"
    elif mults == [3, 1]:
        label = "VIII"
    else:
        label = "IX"
    return QuarticCase(label, pat)


# ---------------------------------------------------------------- family matching

def _rational_linear_forms(q4):
    """Factor q4 = c * prod l_k^m_k over Q; (a, b) stands for a*x + b*y.

    Returns [(form, multiplicity)] or None if some factor is not rational.
    """
    parts, inf = _projective_roots(q4)
    out = []
    for part, m in parts:
        if part.degree == 1:
            out.append(((mpq(1), part.coeffs[0] / part.coeffs[1]), m))
        elif part.degree == 2:
            c0, c1, c2 = part.coeffs
            disc = c1 * c1 - 4 * c0 * c2
            if disc < 0 or not _is_rat_square(disc):
                return None
            s = _rat_sqrt(disc)
            for r in ((-c1 + s) / (2 * c2), (-c1 - s) / (2 * c2)):
                out.append(((mpq(1), -r), m))
        else:
            return None
    if inf:
        out.append(((mpq(0), mpq(1)), inf))
    return out


def _is_rat_square(v):
    v = Q(v)
    return v >= 0 and gmpy2.is_square(v.numerator) and gmpy2.is_square(v.denominator)


def _rat_sqrt(v):
    return mpq(gmpy2.isqrt(v.numerator), gmpy2.isqrt(v.denominator))


def _rat_cbrt(v):
    """Rational cube root of v, or None."""
    n, d = v.numerator, v.denominator
    rn, en = gmpy2.iroot(abs(n), 3)
    rd, ed = gmpy2.iroot(d, 3)
    if not (en and ed):
        return None
    return mpq(rn if n > 0 else -rn, rd)


def _frame(l1, l2):
    """Linear T with l1∘T = x and l2∘T = y."""
    (a, b), (c, d) = l1, l2
    return AffineMap(a, b, c, d).inverse()


def _support_ok(r, allowed):
    return all(k in allowed for k in r.terms)


def _match_x2y2(r):
    """r has quartic part c x^2 y^2; try families 3 and 4."""
    c = r.terms[(2, 2)]
    a = lambda i, j: r.terms.get((i, j), mpq(0))
    if a(3, 0) != 0:
        return None
    e, f = -a(1, 2) / (2 * c), -a(2, 1) / (2 * c)
    T = AffineMap(1, 0, 0, 1, e, f)
    s = affine_substitute(r, T)
    if not _support_ok(s, {(2, 2), (0, 3), (0, 2), (0, 1), (0, 0)}):
        return None
    d, g, b, n0 = (s.terms.get(k, mpq(0)) for k in ((0, 3), (0, 2), (0, 1), (0, 0)))
    if b == 0:
        return None
    if d == 0:
        if g != 0:
            return None
        beta = b / c
        return Family(3), T.compose(AffineMap(1, 0, 0, beta)), 1 / (b * beta), n0
    if not _is_rat_square(b / d):
        return None
    root = _rat_sqrt(b / d)
    for beta in (root, -root):
        a2 = b / (c * beta)
        if a2 <= 0 or not _is_rat_square(a2):
            continue
        a02 = g * beta / b
        if a02 * a02 >= 3:
            return None
        M = 1 / (b * beta)
        return Family(4, a02), T.compose(AffineMap(_rat_sqrt(a2), 0, 0, beta)), M, n0
    return None


def _match_xy3(r):
    c = r.terms[(1, 3)]
    a = lambda i, j: r.terms.get((i, j), mpq(0))
    if a(3, 0) != 0 or a(2, 1) != 0:
        return None
    e, f = -a(0, 3) / c, -a(1, 2) / (3 * c)
    T = AffineMap(1, 0, 0, 1, e, f)
    s = affine_substitute(r, T)
    if not _support_ok(s, {(1, 3), (0, 2), (0, 1), (0, 0)}):
        return None
    g, b, n0 = (s.terms.get(k, mpq(0)) for k in ((0, 2), (0, 1), (0, 0)))
    if b == 0:
        return None
    beta = b / g if g else mpq(1)
    alpha = b / (c * beta * beta)
    a02 = 1 if g else 0
    return Family(2, a02), T.compose(AffineMap(alpha, 0, 0, beta)), 1 / (b * beta), n0


def _match_y4(r):
    c = r.terms[(0, 4)]
    a = lambda i, j: r.terms.get((i, j), mpq(0))
    a12 = a(1, 2)
    if a(3, 0) != 0 or a(2, 1) != 0 or a(2, 0) != 0 or a12 == 0:
        return None
    f = -a(1, 1) / (2 * a12)
    kappa = -(a(0, 3) + 4 * c * f) / a12
    T1 = AffineMap(1, kappa, 0, 1, 0, f)
    r1 = affine_substitute(r, T1)
    e = -r1.terms.get((0, 2), mpq(0)) / r1.terms[(1, 2)]
    T = T1.compose(AffineMap(1, 0, 0, 1, e, 0))
    s = affine_substitute(r, T)
    if not _support_ok(s, {(0, 4), (1, 2), (0, 1), (0, 0)}):
        return None
    b, n0 = s.terms.get((0, 1), mpq(0)), s.terms.get((0, 0), mpq(0))
    if b == 0:
        return None
    beta = _rat_cbrt(b / c)
    if beta is None:
        return None
    alpha = b / (a12 * beta)
    return Family(1), T.compose(AffineMap(alpha, 0, 0, beta)), 1 / (b * beta), n0


def _candidates(p):
    forms = _rational_linear_forms(homogeneous_part(p, 4))
    if forms is None:
        return
    ms = sorted(m for _, m in forms)
    if ms == [4]:
        l = forms[0][0]
        other = (mpq(0), mpq(1)) if l[0] else (mpq(1), mpq(0))
        yield _match_y4, _frame(other, l)
    elif ms == [1, 3]:
        (l1, _), (l3, _) = sorted(forms, key=lambda fm: fm[1])
        yield _match_xy3, _frame(l1, l3)
    elif ms == [2, 2]:
        (l1, _), (l2, _) = forms
        yield _match_x2y2, _frame(l1, l2)
        yield _match_x2y2, _frame(l2, l1)


def match_family(p):
    """(Family, AffineEquivalence E) with E.apply(p) equal to the family polynomial, or None.

    Only rational affine maps are searched.
    """
    if p.degree != 4:
        return None
    for matcher, L in _candidates(p):
        r = affine_substitute(p, L)
        res = matcher(r)
        if res is None:
            continue
        fam, T, M, n0 = res
        eq = AffineEquivalence(L.compose(T), M, -M * n0)
        if eq.apply(p) == family_polynomial(fam):
            return fam, eq
    return None


def canonical_family_match(p):
    res = match_family(p)
    return res[0] if res else None


# ---------------------------------------------------------------- disconnection

class Sqrt:
    """Positive square root of a rational; only even powers evaluate exactly."""

    __slots__ = ("square",)

    def __init__(self, square):
        self.square = Q(square)

    def __pow__(self, e):
        if e % 2:
            raise ValueError("odd power of a square root is not rational")
        return self.square ** (e // 2)

    def __float__(self):
        return float(self.square) ** 0.5

    def __eq__(self, other):
        return isinstance(other, Sqrt) and other.square == self.square

    def __hash__(self):
        return hash(("sqrt", self.square))

    def __str__(self):
        return f"sqrt({self.square})"

    __repr__ = __str__


def _sqrt_or_rat(v):
    return _rat_sqrt(v) if _is_rat_square(v) else Sqrt(v)


@dataclass(frozen=True)
class DisconnectionCertificate:
    """Two zeros of p split by a proper curve on which p keeps one sign.

    The curve is ``{graph_var = s, other = laurent(s)}`` for s > 0, with
    ``laurent`` a dict exponent -> coefficient.
    """

    family: Family
    point_a: tuple
    point_b: tuple
    graph_var: str
    laurent: dict
    separator: str
    facts: tuple = field(default_factory=tuple)


def disconnection_certificate(family):
    a = family.a02
    A = (mpq(0), mpq(0))
    if family.id == 1:
        B, var, lau = (mpq(-2), mpq(1)), "y", {-1: mpq(-1, 2), 2: mpq(-1)}
        text = "x = -1/(2s) - s^2, y = s (s > 0); there p = s/2 > 0"
    elif family.id == 2:
        B, var, lau = (-(1 + a), mpq(1)), "y", {-2: mpq(-1, 2), -1: -a}
        text = f"x = -1/(2s^2) - ({a})/s, y = s (s > 0); there p = s/2 > 0"
    elif family.id == 3:
        B, var, lau = (mpq(2), mpq(-1, 4)), "x", {-2: mpq(-1, 2)}
        text = "x = s, y = -1/(2s^2) (s > 0); there p = -1/(4s^2) < 0"
    else:
        B, var, lau = (_sqrt_or_rat(2 - a), mpq(-1)), "x", {-2: mpq(-1, 4)}
        text = f"x = s, y = -1/(4s^2) (s > 0); there p = y(3/4 + ({a})*y + y^2) < 0"
    lau = {k: v for k, v in lau.items() if v}
    return DisconnectionCertificate(family, A, B, var, lau, text)


def _laurent_mul(u, v):
    out = {}
    for i, a in u.items():
        for j, b in v.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: c for k, c in out.items() if c}


def _laurent_pow(u, n):
    out = {0: mpq(1)}
    for _ in range(n):
        out = _laurent_mul(out, u)
    return out


def _on_curve(p, cert):
    """p restricted to the separator, as a Laurent dict in s."""
    s = {1: mpq(1)}
    xs, ys = (s, cert.laurent) if cert.graph_var == "x" else (cert.laurent, s)
    out = {}
    for (i, j), c in p.terms.items():
        for k, v in _laurent_mul(_laurent_pow(xs, i), _laurent_pow(ys, j)).items():
            out[k] = out.get(k, 0) + c * v
    return {k: c for k, c in out.items() if c}


def _side(cert, pt):
    """+1 or -1 for the component of the complement of the separator holding pt."""
    gi = 0 if cert.graph_var == "x" else 1
    g, o = pt[gi], pt[1 - gi]
    lead = cert.laurent[min(cert.laurent)]
    # near graph coordinate 0+ the curve runs off to sign(lead) * infinity,
    # so every point with g <= 0 lies on the opposite side
    if not (float(g) > 0):
        return -1 if lead > 0 else 1
    phi = sum(c * g ** k if k >= 0 else c / g ** (-k) for k, c in cert.laurent.items())
    diff_ = o - phi
    if diff_ == 0:
        raise ValueError("point lies on the separator")
    return 1 if diff_ > 0 else -1


def verify_disconnection(cert, p=None):
    """Re-check a certificate exactly; returns the list of verified facts."""
    p = family_polynomial(cert.family) if p is None else p
    facts = []
    for name, pt in (("A", cert.point_a), ("B", cert.point_b)):
        if evaluate(p, *pt) != 0:
            raise AssertionError(f"p({name}) != 0")
        facts.append(f"p({name}) = 0")
    kmin = min(cert.laurent)
    if kmin >= 0:
        raise AssertionError("separator is not proper at s -> 0+")
    facts.append("separator is a graph over s > 0 escaping to infinity at both ends")
    F = _on_curve(p, cert)
    if not F:
        raise AssertionError("p vanishes identically on the separator")
    lo = min(F)
    u = UPoly([F.get(k, 0) for k in range(lo, max(F) + 1)])
    if u(0) == 0:
        raise AssertionError("stripping powers of s failed")
    B = cauchy_bound(u) + 1
    if u.degree > 0 and count_real_roots(u, (mpq(0), B)) > 0:
        raise AssertionError("p changes sign on the separator")
    sign = 1 if u(1) > 0 else -1
    facts.append(f"s^{-lo} * p on the separator has no positive roots; sign {'+' if sign > 0 else '-'}")
    if _side(cert, cert.point_a) == _side(cert, cert.point_b):
        raise AssertionError("A and B lie on the same side")
    facts.append("A and B lie in different components of the complement")
    return facts


# ---------------------------------------------------------------- verdicts

@dataclass(frozen=True)
class Verdict:
    tag: str
    box: Box = None
    rule: str = None
    family: Family = None
    hrc: str = None
    case: str = None
    note: str = None
    equivalence: AffineEquivalence = None
    certificate: object = None


def verify_witness_box(p, box):
    """Both partials have 0 in their exact enclosure over the box."""
    for var in ("x", "y"):
        lo, hi = interval_eval(diff(p, var), box)
        if not lo <= 0 <= hi:
            return False
    return True


def _univariate(p):
    if p.deg_in("x") <= 0:
        return "y"
    if p.deg_in("y") <= 0:
        return "x"
    return None


def _classify_univariate(p, var):
    u = p.specialize("x" if var == "y" else "y", 0)
    du = u.deriv()
    if du.degree > 0:
        roots = isolate_roots(du)
        if roots:
            iv = roots[0].refine(DEFAULT_WIDTH)
            z = (mpq(0), mpq(0))
            box = Box(iv.lo, iv.hi, *z) if var == "x" else Box(*z, iv.lo, iv.hi)
            assert verify_witness_box(p, box)
            return Verdict("NotSubmersion", box=box,
                           note=f"p depends on {var} only and its derivative has a real root")
    return Verdict("SubmersionAllConnected", rule="LinearInY",
                   note=f"p depends on {var} only and is strictly monotone; every level is one line")


def classify_degree4(p):
    """Submersion and level-set verdict for a nonconstant polynomial of degree <= 4."""
    if p.is_const():
        raise ConstantInput("constant polynomial")
    if p.degree > 4:
        raise DegreeAboveFour(f"total degree {p.degree} exceeds 4")
    var = _univariate(p)
    if var is not None:
        return _classify_univariate(p, var)
    crit = critical_point_exists(p)
    if crit.exists:
        assert verify_witness_box(p, crit.box)
        return Verdict("NotSubmersion", box=crit.box)
    if p.degree <= 2:
        return Verdict("SubmersionAllConnected", rule="Elementary",
                       note="a submersion of degree <= 2 has parabola or line levels")
    cert = decide_connected(p)
    if cert.tag == "ConnectedAllLevels":
        return Verdict("SubmersionAllConnected", rule=cert.rule, certificate=cert)
    case = quartic_case(p).label if p.degree == 4 else None
    m = match_family(p)
    if m is not None:
        fam, eq = m
        return Verdict("SubmersionDisconnected", family=fam, hrc=REGION_TEXT[fam.id],
                       case=case, equivalence=eq,
                       certificate=disconnection_certificate(fam))
    if p.degree == 3:
        note = "degree 3 submersion without a connectedness certificate"
    else:
        note = "no rule certified connectedness and no rational match to a canonical family"
    return Verdict("Undetermined", case=case, note=note)
