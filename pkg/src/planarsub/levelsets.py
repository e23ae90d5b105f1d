"""Connectedness certificates for level sets from quadratic and cubic discriminants."""

from dataclasses import dataclass, field
from math import floor

from gmpy2 import mpq

from .poly import UPoly, BPoly, Q, coeffs_in
from .realroots import count_real_roots, isolate_roots, sign_at_root, cauchy_bound

__all__ = [
    "DegreeTooHigh", "LeadingCoeffVanishesOnStrip", "ConnectednessCertificate",
    "quad_discriminant", "cubic_discriminant", "decide_connected", "check_certificate",
    "strip_bound",
]


class DegreeTooHigh(ValueError):
    pass


class LeadingCoeffVanishesOnStrip(ValueError):
    pass


def _other(var):
    return "y" if var == "x" else "x"


@dataclass(frozen=True)
class ConnectednessCertificate:
    """Outcome of decide_connected.

    ``mainvar`` is the variable the rule solves for; ``A, B, C`` are the
    coefficients in it (polynomials in the other variable), ``disc`` the
    discriminant at ``level``. ``facts`` lists each verified hypothesis.
    """

    tag: str
    rule: str = None
    mainvar: str = None
    level: object = None
    A: UPoly = None
    B: UPoly = None
    C: UPoly = None
    disc: UPoly = None
    facts: tuple = field(default_factory=tuple)


def quad_discriminant(p, mainvar):
    cs = coeffs_in(p, mainvar)
    if len(cs) > 3:
        raise DegreeTooHigh(f"degree in {mainvar} exceeds 2")
    cs = cs + [UPoly()] * (3 - len(cs))
    C, B, A = cs
    return A, B, C, B * B - A * C * 4


def cubic_discriminant(A, B, C):
    """D = Q²/4 + P³/27 for the monic cubic t³ + A t² + B t + C."""
    P = B - A * A * mpq(1, 3)
    Qc = C - A * B * mpq(1, 3) + A * A * A * mpq(2, 27)
    return Qc * Qc * mpq(1, 4) + P * P * P * mpq(1, 27)


def _no_real_roots(u):
    return not u.is_zero() and (u.degree == 0 or count_real_roots(u) == 0)


def _deg(u):
    return u.degree


# ---- rule checks; each returns (all_levels_ok, level_ok, facts)

def _linear(p, var, level):
    cs = coeffs_in(p, var)
    if len(cs) != 2:
        return None
    B, A = cs
    if not _no_real_roots(A):
        return None
    facts = (f"p is linear in {var}", f"A = {A.to_str(_other(var))} has no real roots")
    return True, True, facts, (UPoly(), A, B - level, None)


def _quad_2ttt(p, var, level):
    cs = coeffs_in(p, var)
    if len(cs) != 3:
        return None
    A, B, C, D0 = quad_discriminant(p, var)
    if not _no_real_roots(A):
        return None
    D = D0 + A * (4 * Q(level))
    facts = [f"A = {A.to_str(_other(var))} has no real roots"]
    all_ok = D0.degree > A.degree and D0.degree % 2 == 1
    lvl_ok = not D.is_zero() and D.degree % 2 == 1
    if all_ok:
        facts.append(f"Delta_0 has odd degree {D0.degree} > deg A, so every level has odd degree")
    elif lvl_ok:
        facts.append(f"Delta at level {level} has odd degree {D.degree}")
    else:
        return None
    return all_ok, lvl_ok, tuple(facts), (A, B, C - level, D)


def _quad_22tt(p, var, level):
    cs = coeffs_in(p, var)
    if len(cs) != 3:
        return None
    A, B, C, D0 = quad_discriminant(p, var)
    if A.degree <= 0:
        return None
    roots = isolate_roots(A)
    if len(roots) != 1:
        return None
    if sign_at_root(B, roots[0]) == 0:
        return None
    ov = _other(var)
    facts = [f"A = {A.to_str(ov)} has exactly one real zero, in ({roots[0].lo}, {roots[0].hi}]",
             "B is nonzero there, so the specialized equation has exactly one solution"]
    D = D0 + A * (4 * Q(level))
    all_ok = D0.degree > A.degree and D0.degree % 2 == 0 and D0.lc < 0
    lvl_ok = not D.is_zero() and D.degree % 2 == 0 and D.lc < 0
    if all_ok:
        facts.append(f"Delta_0 has even degree {D0.degree} > deg A with leading coefficient {D0.lc}")
    elif lvl_ok:
        facts.append(f"Delta at level {level} has even degree {D.degree}, leading coefficient {D.lc}")
    else:
        return None
    return all_ok, lvl_ok, tuple(facts), (A, B, C - level, D)


def _cubic3(p, var, level):
    cs = coeffs_in(p, var)
    if len(cs) != 4 or not cs[3].is_const():
        return None
    k = cs[3].lc
    C0, B, A = (c * (1 / k) for c in cs[:3])
    level = Q(level)
    P = B - A * A * mpq(1, 3)
    Qc = C0 - A * B * mpq(1, 3) + A * A * A * mpq(2, 27)
    D0 = cubic_discriminant(A, B, C0)
    D = cubic_discriminant(A, B, C0 - level / k)
    facts = [f"leading coefficient in {var} is the constant {k}"]
    # the level only moves the constant term of Q
    if P.degree <= 0 and Qc.degree <= 0:
        all_ok = P.lc > 0
    else:
        all_ok = (D0.degree > max(Qc.degree, 0) and D0.degree % 2 == 0 and D0.lc > 0)
    lvl_ok = not D.is_zero() and D.degree % 2 == 0 and D.lc > 0
    if all_ok:
        facts.append(f"D has even degree {D0.degree} and positive leading coefficient at every level")
    elif lvl_ok:
        facts.append(f"D at level {level} has even degree {D.degree} and positive leading coefficient")
    else:
        return None
    return all_ok, lvl_ok, tuple(facts), (A, B, C0 - level / k, D)


_RULES = (
    ("LinearInY", _linear),
    ("Quadratic2ttt", _quad_2ttt),
    ("Quadratic22tt", _quad_22tt),
    ("Cubic3", _cubic3),
)


def decide_connected(p, level=0):
    """First rule (in a fixed order, y before x) certifying p⁻¹{level} connected.

    Certificates assume p is a submersion, as the underlying statements do.
    """
    level = Q(level)
    for name, rule in _RULES:
        for var in ("y", "x"):
            res = rule(p, var, level)
            if res is None:
                continue
            all_ok, lvl_ok, facts, (A, B, C, D) = res
            tag = "ConnectedAllLevels" if all_ok else "ConnectedZeroLevel"
            return ConnectednessCertificate(tag, name, var, level, A, B, C, D, facts)
    return ConnectednessCertificate("Undetermined", level=level)


def check_certificate(cert, p=None):
    """Re-verify a certificate from its stored data (and p, when given)."""
    if cert.tag == "Undetermined":
        return True
    A, B, C, D = cert.A, cert.B, cert.C, cert.disc
    lvl = cert.level
    if cert.rule == "LinearInY":
        ok = _no_real_roots(B)
        if p is not None:
            B0, A0 = coeffs_in(p, cert.mainvar)
            ok = ok and A0 == B and B0 - lvl == C
        return ok
    if cert.rule in ("Quadratic2ttt", "Quadratic22tt"):
        ok = D == B * B - A * C * 4
        if p is not None:
            A0, B0, C0, D0 = quad_discriminant(p, cert.mainvar)
            ok = ok and A0 == A and B0 == B and C0 - lvl == C
            if cert.tag == "ConnectedAllLevels":
                if cert.rule == "Quadratic2ttt":
                    ok = ok and D0.degree > A.degree and D0.degree % 2 == 1
                else:
                    ok = ok and D0.degree > A.degree and D0.degree % 2 == 0 and D0.lc < 0
        if cert.rule == "Quadratic2ttt":
            return ok and _no_real_roots(A) and D.degree % 2 == 1
        roots = isolate_roots(A) if A.degree > 0 else []
        return (ok and len(roots) == 1 and sign_at_root(B, roots[0]) != 0
                and not D.is_zero() and D.degree % 2 == 0 and D.lc < 0)
    if cert.rule == "Cubic3":
        ok = D == cubic_discriminant(A, B, C) and not D.is_zero()
        return ok and D.degree % 2 == 0 and D.lc > 0
    return False


# ---------------------------------------------------------------- strip bound

def _iv_eval(u, lo, hi):
    """Enclosure of u over [lo, hi] by naive interval Horner."""
    a = b = mpq(0)
    for c in reversed(u.coeffs):
        ps = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(ps) + c, max(ps) + c
    return a, b


def _sup_abs_ratio(num, den, lo, hi):
    """Upper bound for sup |num/den| on [lo, hi], den without roots there."""
    if num.is_zero():
        return mpq(0)
    cand = [abs(num(lo) / den(lo)), abs(num(hi) / den(hi))]
    crit = num.deriv() * den - num * den.deriv()
    if not crit.is_zero() and crit.degree > 0:
        for iv in isolate_roots(crit):
            if iv.hi <= lo or iv.lo >= hi:
                continue
            iv = iv.refine(mpq(1, 2 ** 30))
            a, b = max(iv.lo, lo), min(iv.hi, hi)
            nlo, nhi = _iv_eval(num, a, b)
            dlo, dhi = _iv_eval(den, a, b)
            while dlo <= 0 <= dhi:
                iv = iv.bisect()
                a, b = max(iv.lo, lo), min(iv.hi, hi)
                nlo, nhi = _iv_eval(num, a, b)
                dlo, dhi = _iv_eval(den, a, b)
            cand.append(max(abs(nlo), abs(nhi)) / min(abs(dlo), abs(dhi)))
    return max(cand)


def _root_upper(v, k, den=2 ** 16):
    """Rational t on the grid 1/den with t**k >= v."""
    if v <= 0:
        return mpq(0)
    t = mpq(floor(float(v) ** (1.0 / k) * den), den)
    while t ** k < v:
        t += mpq(1, den)
    return t


def strip_bound(p, var, interval):
    """Rational B such that real zeros of p(., s) in ``var`` satisfy |t| <= B for s in the interval."""
    lo, hi = Q(interval[0]), Q(interval[1])
    cs = coeffs_in(p, var)
    if not cs:
        raise LeadingCoeffVanishesOnStrip("zero polynomial")
    an = cs[-1]
    n = len(cs) - 1
    if an.degree > 0:
        if an(lo) == 0 or an(hi) == 0 or count_real_roots(an, (lo, hi)) > 0:
            raise LeadingCoeffVanishesOnStrip(f"leading coefficient vanishes on [{lo}, {hi}]")
    total = mpq(1)
    for k in range(1, n + 1):
        A = _sup_abs_ratio(cs[n - k], an, lo, hi)
        total += _root_upper(n * A, k)
    return total
