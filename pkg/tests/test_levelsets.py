import dataclasses

import numpy as np
import pytest
from gmpy2 import mpq
from scipy import ndimage

from planarsub.poly import UPoly, BPoly, coeffs_in
from planarsub.realroots import count_real_roots
from planarsub.levelsets import (DegreeTooHigh, LeadingCoeffVanishesOnStrip, quad_discriminant,
                                 cubic_discriminant, decide_connected, check_certificate,
                                 strip_bound)
from planarsub.cli import parse_poly as P

from corpus import BRANCHES, AC
from helpers import rand_bpoly, rand_rat, seeded


def U(*cs):
    return UPoly(cs)


def test_quad_discriminant_examples():
    A, B, C, D = quad_discriminant(P("x^2*y^2 + y + x^4 - 3"), "y")
    assert (A, B, C) == (U(0, 0, 1), U(1), U(-3, 0, 0, 0, 1))
    assert D == U(1, 0, 12, 0, 0, 0, -4)
    assert quad_discriminant(P("y"), "y")[3] == U(1)
    D = quad_discriminant(P("1/4*y^2 + x^2*y + x^3 + x^4 - 5"), "y")[3]
    assert D == U(5, 0, 0, -1)
    with pytest.raises(DegreeTooHigh):
        quad_discriminant(P("y^3"), "y")


def test_cubic_discriminant_examples():
    assert cubic_discriminant(U(), U(-1), U()) == U(mpq(-1, 27))
    assert cubic_discriminant(U(), U(), U()).is_zero()
    assert cubic_discriminant(U(), U(), U(2)) == U(1)


def test_linear_rule():
    p = P("y + x^2*y + x^4")
    for level in (0, 5, mpq(-7, 2)):
        c = decide_connected(p, level)
        assert (c.tag, c.rule, c.mainvar) == ("ConnectedAllLevels", "LinearInY", "y")
        assert check_certificate(c, p)


def test_22tt_rule():
    p = P("y + x^2*y^2 + x^4")
    c = decide_connected(p, 0)
    assert (c.tag, c.rule, c.mainvar) == ("ConnectedAllLevels", "Quadratic22tt", "y")
    assert c.disc.degree == 6 and c.disc.lc == -4
    assert check_certificate(c, p)
    assert any("exactly one real zero" in f for f in c.facts)


def test_family_three_undetermined():
    assert decide_connected(P("y + x^2*y^2"), 0).tag == "Undetermined"


def test_2ttt_and_cubic_rules():
    c = decide_connected(P("x + 1/4*y^2 + x^2*y + x^4"), 0)
    assert (c.rule, c.tag) == ("Quadratic2ttt", "ConnectedAllLevels")
    assert c.disc.degree % 2 == 1
    c = decide_connected(P("y + y^3 + x^4"), 0)
    assert (c.rule, c.tag) == ("Cubic3", "ConnectedAllLevels")
    assert c.disc.degree % 2 == 0 and c.disc.lc > 0


def test_level_only_certificate():
    # D is a positive constant at level 1 but vanishes at level 0
    c = decide_connected(P("2*y^3"), 1)
    assert (c.tag, c.rule) == ("ConnectedZeroLevel", "Cubic3")
    assert c.level == 1 and check_certificate(c, P("2*y^3"))


def test_tampered_certificate_rejected():
    p = P("y + x^2*y^2 + x^4")
    c = decide_connected(p, 0)
    bad = dataclasses.replace(c, disc=-c.disc)
    assert not check_certificate(bad, p)
    bad = dataclasses.replace(c, A=U(1, 0, 1))
    assert not check_certificate(bad, p)
    c = decide_connected(P("y + x^2*y + x^4"), 0)
    assert not check_certificate(dataclasses.replace(c, B=U(-1, 0, 1)))


def test_certificates_on_corpus_revalidate():
    for name, text, tag, _ in BRANCHES:
        p = P(text)
        c = decide_connected(p, 0)
        assert check_certificate(c, p), name


def band_components(p, level, R=4, n=512):
    """Connected components of grid cells where p - level changes sign."""
    g = np.linspace(-R, R, n + 1)
    X, Y = np.meshgrid(g, g, indexing="ij")
    V = sum(float(c) * X ** i * Y ** j for (i, j), c in p.terms.items()) - float(level)
    s = np.sign(V)
    corners = np.stack([s[:-1, :-1], s[1:, :-1], s[:-1, 1:], s[1:, 1:]])
    cells = ((corners.min(0) < 0) & (corners.max(0) > 0)) | (corners == 0).any(0)
    return ndimage.label(cells)[1]


def test_flood_fill_single_component():
    # heuristic cross-check of every certified submersion in the corpus
    for name, text, tag, _ in BRANCHES:
        if tag != AC:
            continue
        p = P(text)
        for level in (-1, 0, 1):
            if decide_connected(p, level).tag == "Undetermined":
                continue
            assert band_components(p, level) == 1, (name, level)


def test_flood_fill_sees_disconnected_families():
    assert band_components(P("y + x^2*y^2"), 0) >= 2
    assert band_components(P("y + x*y^2 + y^4"), 0) >= 2


def test_strip_bound_examples():
    b = strip_bound(P("x^2 - y"), "x", (0, 1))
    assert b >= 1 and (b - 1) ** 2 >= 2
    assert strip_bound(P("x - y"), "x", (0, 1)) >= 2
    assert strip_bound(P("2*x^2"), "x", (-3, 3)) >= 1
    with pytest.raises(LeadingCoeffVanishesOnStrip):
        strip_bound(P("y*x^2 + 1"), "x", (-1, 1))


def test_strip_bound_sound_random():
    rng = seeded(50)
    done = 0
    while done < 100:
        p = rand_bpoly(rng, 4, 6) + P("x^2") * (P("y^2") + rand_rat(rng, 3, 1) ** 2 + 1)
        lo = rand_rat(rng, 4, 2)
        hi = lo + mpq(rng.randint(1, 8), 2)
        try:
            B = strip_bound(p, "x", (lo, hi))
        except LeadingCoeffVanishesOnStrip:
            continue
        done += 1
        for k in range(50):
            y0 = lo + (hi - lo) * mpq(k, 49)
            u = p.specialize("y", y0)
            if u.degree <= 0:
                continue
            assert u(B) != 0 and u(-B) != 0
            assert count_real_roots(u) == count_real_roots(u, (-B, B))
