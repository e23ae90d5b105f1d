"""Exact rational polynomials in one (dense) and two (sparse) variables."""

from fractions import Fraction
from math import comb

from gmpy2 import mpq

__all__ = [
    "Rat", "Q", "UPoly", "BPoly", "AffineMap", "AffineEquivalence",
    "DEG_ZERO", "X", "Y", "arith", "diff", "evaluate", "affine_substitute",
    "coeffs_in", "from_coeffs", "homogeneous_part", "content_in",
    "exact_div", "bgcd",
]

Rat = type(mpq(0))

# degree of the zero polynomial; compares below every integer
DEG_ZERO = float("-inf")


def Q(v):
    """Coerce int, str, Fraction or mpq to an exact rational."""
    if isinstance(v, Rat):
        return v
    if isinstance(v, Fraction):
        return mpq(v.numerator, v.denominator)
    if isinstance(v, float):
        raise TypeError("floats are not accepted as exact rationals")
    return mpq(v)


def _other(var):
    if var == "x":
        return "y"
    if var == "y":
        return "x"
    raise ValueError(f"unknown variable {var!r}")


class UPoly:
    """Dense univariate polynomial; ``coeffs[k]`` multiplies ``t**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs):
        obj = object.__new__(cls)
        cs = list(cs)
        while cs and cs[-1] == 0:
            cs.pop()
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else DEG_ZERO

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def is_zero(self):
        return not self.coeffs

    def is_const(self):
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rat, Fraction)):
            return self.coeffs == UPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UPoly({[str(c) for c in self.coeffs]})"

    def to_str(self, var="t"):
        if not self.coeffs:
            return "0"
        return BPoly({(k, 0): c for k, c in enumerate(self.coeffs)}).to_str().replace("x", var)

    def _coerce(self, other):
        if isinstance(other, UPoly):
            return other
        return UPoly.const(other)

    def __add__(self, other):
        o = self._coerce(other).coeffs
        a = self.coeffs
        n = max(len(a), len(o))
        return UPoly._raw([(a[k] if k < len(a) else 0) + (o[k] if k < len(o) else 0)
                           for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UPoly):
            c = Q(other)
            return UPoly._raw([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UPoly()
        out = [mpq(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return UPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = UPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc if self.coeffs else mpq(0)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < dq:
            return UPoly(), self
        quo = [mpq(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            quo[k - dq] = c
            if c:
                for j, oc in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * oc
        return UPoly._raw(quo), UPoly._raw(rem[:dq])

    def __floordiv__(self, other):
        if not isinstance(other, UPoly):
            return self * (1 / Q(other))
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def deriv(self):
        return UPoly._raw([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if not self.coeffs:
            return self
        return self * (1 / self.coeffs[-1])

    def compose(self, other):
        out = UPoly()
        for c in reversed(self.coeffs):
            out = out * other + c
        return out

    def gcd(self, other):
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def scale_arg(self, s):
        """u(s*t)."""
        s = Q(s)
        return UPoly._raw([c * s ** k for k, c in enumerate(self.coeffs)])


class BPoly:
    """Sparse bivariate polynomial: ``terms[(i, j)]`` multiplies ``x**i * y**j``."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = Q(c)
                if c:
                    clean[(int(k[0]), int(k[1]))] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = {k: c for k, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def from_upoly(cls, u, var):
        if var == "x":
            return cls._raw({(k, 0): c for k, c in enumerate(u.coeffs)})
        return cls._raw({(0, k): c for k, c in enumerate(u.coeffs)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self):
        return max((i + j for i, j in self.terms), default=DEG_ZERO)

    def deg_in(self, var):
        idx = 0 if var == "x" else 1
        return max((k[idx] for k in self.terms), default=DEG_ZERO)

    def is_const(self):
        return all(k == (0, 0) for k in self.terms)

    def constant_term(self):
        return self.terms.get((0, 0), mpq(0))

    def __eq__(self, other):
        if isinstance(other, BPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Rat, Fraction)):
            return self.terms == BPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"BPoly({self.to_str()!r})"

    def __str__(self):
        return self.to_str()

    def sorted_terms(self):
        """Terms ordered by total degree, then x-exponent, both descending."""
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def to_str(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = "*".join(mono)
            else:
                body = str(a) + "*" + "*".join(mono)
            sign = "-" if c < 0 else "+"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def _coerce(self, other):
        if isinstance(other, BPoly):
            return other
        if isinstance(other, UPoly):
            raise TypeError("mixing UPoly and BPoly; use BPoly.from_upoly")
        return BPoly.const(other)

    def __add__(self, other):
        o = self._coerce(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return BPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, BPoly):
            if isinstance(other, UPoly):
                raise TypeError("mixing UPoly and BPoly; use BPoly.from_upoly")
            c = Q(other)
            return BPoly._raw({k: c * v for k, v in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        out, base = BPoly.const(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __call__(self, x0, y0):
        return evaluate(self, x0, y0)

    def swap(self):
        return BPoly._raw({(j, i): c for (i, j), c in self.terms.items()})

    def diff(self, var):
        return diff(self, var)

    def specialize(self, var, value):
        """Substitute ``var = value``; returns a UPoly in the other variable."""
        value = Q(value)
        out = {}
        for (i, j), c in self.terms.items():
            if var == "x":
                k, v = j, c * value ** i
            else:
                k, v = i, c * value ** j
            out[k] = out.get(k, 0) + v
        n = max(out, default=-1) + 1
        return UPoly._raw([out.get(k, mpq(0)) for k in range(n)])


X = BPoly({(1, 0): 1})
Y = BPoly({(0, 1): 1})


class AffineMap:
    """T(x, y) = (a*x + b*y + e, c*x + d*y + f)."""

    __slots__ = ("a", "b", "c", "d", "e", "f")

    def __init__(self, a, b, c, d, e=0, f=0):
        self.a, self.b, self.c, self.d, self.e, self.f = (Q(v) for v in (a, b, c, d, e, f))
        if self.a * self.d - self.b * self.c == 0:
            raise ValueError("affine map is not invertible")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def __call__(self, x0, y0):
        return (self.a * x0 + self.b * y0 + self.e, self.c * x0 + self.d * y0 + self.f)

    def inverse(self):
        dt = self.det
        ia, ib, ic, id_ = self.d / dt, -self.b / dt, -self.c / dt, self.a / dt
        return AffineMap(ia, ib, ic, id_, -(ia * self.e + ib * self.f), -(ic * self.e + id_ * self.f))

    def compose(self, other):
        """self ∘ other."""
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        e = self.a * other.e + self.b * other.f + self.e
        f = self.c * other.e + self.d * other.f + self.f
        return AffineMap(a, b, c, d, e, f)

    def __eq__(self, other):
        return isinstance(other, AffineMap) and all(
            getattr(self, s) == getattr(other, s) for s in self.__slots__)

    def __hash__(self):
        return hash(tuple(getattr(self, s) for s in self.__slots__))

    def __repr__(self):
        return "AffineMap(" + ", ".join(str(getattr(self, s)) for s in self.__slots__) + ")"


class AffineEquivalence:
    """Records ``M * p∘map + N`` as the transformed polynomial."""

    __slots__ = ("map", "M", "N")

    def __init__(self, map, M, N=0):
        self.map = map
        self.M = Q(M)
        self.N = Q(N)
        if self.M == 0:
            raise ValueError("scale M must be nonzero")

    def apply(self, p):
        return affine_substitute(p, self.map) * self.M + self.N

    def __repr__(self):
        return f"AffineEquivalence({self.map!r}, M={self.M}, N={self.N})"


def arith(p, q, op):
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** int(q)
    raise ValueError(f"unknown op {op!r}")


def diff(p, var):
    out = {}
    for (i, j), c in p.terms.items():
        if var == "x" and i:
            out[(i - 1, j)] = c * i
        elif var == "y" and j:
            out[(i, j - 1)] = c * j
        elif var not in ("x", "y"):
            raise ValueError(f"unknown variable {var!r}")
    return BPoly._raw(out)


def evaluate(p, x0, y0):
    """Exact value at a point; works for any ring-like scalars."""
    acc = 0
    for (i, j), c in p.terms.items():
        acc = acc + c * x0 ** i * y0 ** j
    return acc if p.terms else mpq(0)


def _linear_powers(cx, cy, c0, n):
    """Powers 0..n of the affine form cx*x + cy*y + c0."""
    ell = BPoly({(1, 0): cx, (0, 1): cy, (0, 0): c0})
    out = [BPoly.const(1)]
    for _ in range(n):
        out.append(out[-1] * ell)
    return out


def affine_substitute(p, T):
    """p ∘ T."""
    if not p.terms:
        return BPoly()
    nx = max(i for i, _ in p.terms)
    ny = max(j for _, j in p.terms)
    px = _linear_powers(T.a, T.b, T.e, nx)
    py = _linear_powers(T.c, T.d, T.f, ny)
    out = BPoly()
    for (i, j), c in p.terms.items():
        out = out + px[i] * py[j] * c
    return out


def coeffs_in(p, var):
    """Coefficient list in ``var``; entries are UPolys in the other variable."""
    if not p.terms:
        return []
    idx = 0 if var == "x" else 1
    if var not in ("x", "y"):
        raise ValueError(f"unknown variable {var!r}")
    n = max(k[idx] for k in p.terms)
    rows = [dict() for _ in range(n + 1)]
    for k, c in p.terms.items():
        rows[k[idx]][k[1 - idx]] = c
    out = []
    for r in rows:
        m = max(r, default=-1) + 1
        out.append(UPoly._raw([r.get(t, mpq(0)) for t in range(m)]))
    return out


def from_coeffs(cs, var):
    """Inverse of coeffs_in."""
    out = {}
    for k, u in enumerate(cs):
        for t, c in enumerate(u.coeffs):
            if c:
                out[(k, t) if var == "x" else (t, k)] = c
    return BPoly._raw(out)


def homogeneous_part(p, d):
    return BPoly._raw({k: c for k, c in p.terms.items() if k[0] + k[1] == d})


def content_in(p, var):
    """Monic gcd of the coefficients of p viewed as a polynomial in ``var``."""
    g = UPoly()
    for u in coeffs_in(p, var):
        g = g.gcd(u) if g else u.monic()
        if g.is_const() and g:
            break
    return g


def _div_by_upoly(p, u, var):
    """Divide p by a polynomial u in the variable other than ``var``."""
    cs = [c.exact_div(u) for c in coeffs_in(p, var)]
    return from_coeffs(cs, var)


def exact_div(f, g):
    """f / g for BPolys when g divides f exactly."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    fc = coeffs_in(f, "y")
    gc = coeffs_in(g, "y")
    dg = len(gc) - 1
    if len(fc) - 1 < dg:
        if f.is_zero():
            return BPoly()
        raise ArithmeticError("inexact bivariate division")
    rem = list(fc)
    quo = [UPoly()] * (len(fc) - dg)
    for k in range(len(fc) - 1, dg - 1, -1):
        if rem[k].is_zero():
            continue
        c = rem[k].exact_div(gc[-1])
        quo[k - dg] = c
        for t, gt in enumerate(gc):
            rem[k - dg + t] = rem[k - dg + t] - c * gt
    if any(r for r in rem):
        raise ArithmeticError("inexact bivariate division")
    return from_coeffs(quo, "y")


def _prem(fc, gc):
    """Pseudo-remainder of coefficient lists (in y, coefficients UPoly in x)."""
    rem = list(fc)
    dg = len(gc) - 1
    lc = gc[-1]
    while len(rem) - 1 >= dg and rem:
        k = len(rem) - 1
        top = rem[k]
        rem = [r * lc for r in rem]
        for t, gt in enumerate(gc):
            rem[k - dg + t] = rem[k - dg + t] - top * gt
        while rem and rem[-1].is_zero():
            rem.pop()
    return rem


def _normalize_bpoly(p):
    """Scale so the leading term (highest y power, then highest x power) is 1."""
    if p.is_zero():
        return p
    k = max(p.terms, key=lambda t: (t[1], t[0]))
    return p * (1 / p.terms[k])


def bgcd(f, g):
    """Greatest common divisor in Q[x, y], normalized by its leading term."""
    if f.is_zero():
        return _normalize_bpoly(g)
    if g.is_zero():
        return _normalize_bpoly(f)
    cf, cg = content_in(f, "y"), content_in(g, "y")
    c = cf.gcd(cg)
    a = coeffs_in(_div_by_upoly(f, cf, "y"), "y")
    b = coeffs_in(_div_by_upoly(g, cg, "y"), "y")
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _prem(a, b)
        if not r:
            a, b = b, []
            break
        rc = UPoly()
        for u in r:
            rc = rc.gcd(u) if rc else u.monic()
        a, b = b, [u.exact_div(rc) for u in r]
    if b:
        # b is a nonzero element of Q[x] and the primitive parts are coprime in y
        prim = BPoly.const(1)
    else:
        cont = UPoly()
        for u in a:
            cont = cont.gcd(u) if cont else u.monic()
        prim = from_coeffs([u.exact_div(cont) for u in a], "y")
    return _normalize_bpoly(prim * BPoly.from_upoly(c, "x"))


def binomial_shift(u, s):
    """u(t + s) for a UPoly u."""
    s = Q(s)
    n = len(u.coeffs)
    out = [mpq(0)] * n
    for k, c in enumerate(u.coeffs):
        if c:
            for m in range(k + 1):
                out[m] += c * comb(k, m) * s ** (k - m)
    return UPoly._raw(out)
