"""Random generators and sympy bridges shared by the tests."""

import random

import sympy
from gmpy2 import mpq

from planarsub.poly import UPoly, BPoly, AffineMap

sx, sy, st = sympy.symbols("x y t")


def rand_rat(rng, num=9, den=4):
    return mpq(rng.randint(-num, num), rng.randint(1, den))


def rand_upoly(rng, deg, num=9, den=1):
    return UPoly([rand_rat(rng, num, den) for _ in range(deg + 1)])


def rand_bpoly(rng, deg, nterms=6, num=9, den=3):
    terms = {}
    for _ in range(nterms):
        i = rng.randint(0, deg)
        j = rng.randint(0, deg - i)
        terms[(i, j)] = rand_rat(rng, num, den)
    return BPoly(terms)


def rand_affine(rng, linear_only=False):
    while True:
        a, b, c, d = (rand_rat(rng, 5, 3) for _ in range(4))
        if a * d - b * c != 0:
            break
    if linear_only:
        return AffineMap(a, b, c, d)
    return AffineMap(a, b, c, d, rand_rat(rng, 5, 3), rand_rat(rng, 5, 3))


def to_sympy(p):
    if isinstance(p, UPoly):
        return sum(sympy.Rational(int(c.numerator), int(c.denominator)) * st ** k
                   for k, c in enumerate(p.coeffs))
    return sum(sympy.Rational(int(c.numerator), int(c.denominator)) * sx ** i * sy ** j
               for (i, j), c in p.terms.items())


def from_sympy_upoly(e, var=st):
    cs = sympy.Poly(e, var).all_coeffs()[::-1]
    return UPoly([mpq(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1])) for c in cs])


def from_sympy(e):
    out = {}
    for (i, j), c in sympy.Poly(sympy.expand(e), sx, sy).terms():
        n, d = sympy.fraction(c)
        out[(i, j)] = mpq(int(n), int(d))
    return BPoly(out)


def seeded(seed=0):
    return random.Random(seed)
