"""Acceptance criteria; each prints one PASS/FAIL line (also runnable as a script)."""

import math
import sys
import time
from pathlib import Path

from gmpy2 import mpq

sys.path.insert(0, str(Path(__file__).parent))

from planarsub.poly import UPoly, BPoly, affine_substitute, diff, evaluate
from planarsub.families import Family, family_polynomial
from planarsub.subres import (subresultant_from_coeffs, r0_r1_quad_pair, r0_r1_quad_cubic,
                              common_root_count)
from planarsub.levelsets import decide_connected, check_certificate
from planarsub.classify import quartic_case, classify_degree4, verify_witness_box
from planarsub.hrc import truncated_integral, refute_pair, jacobian_det, tau, DIVERGENCE_THRESHOLD
from planarsub.positivity import (alpha, hankel, det_exact, leading_minors, bruna_witnesses,
                                  bruna_poly, SquaresInput, b_from_squares, K_form)
from planarsub.cli import parse_poly as P

from helpers import rand_upoly, rand_bpoly, rand_affine, rand_rat, seeded

RESULTS = []


def report(n, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {n:2d} {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


ONE = UPoly([1])


def test_1_closed_forms():
    def body():
        rng = seeded(101)
        bad = 0
        for _ in range(200):
            a, b, c, d = (rand_upoly(rng, rng.randint(0, 3)) for _ in range(4))
            R0, R1 = r0_r1_quad_pair(a, b, c, d)
            bad += R0 != subresultant_from_coeffs([ONE, a, b], [ONE, c, d], 0)
            bad += R1 != subresultant_from_coeffs([ONE, a, b], [ONE, c, d], 1)
        for _ in range(200):
            a, b, c, d, e = (rand_upoly(rng, rng.randint(0, 3)) for _ in range(5))
            R0, R1 = r0_r1_quad_cubic(a, b, c, d, e)
            bad += R0 != subresultant_from_coeffs([ONE, a, b], [ONE, c, d, e], 0)
            bad += R1 != subresultant_from_coeffs([ONE, a, b], [ONE, c, d, e], 1)
        return bad
    bad, dt = timed(body)
    report(1, "closed forms = subresultants (200+200 pairs)", bad == 0 and dt < 5,
           f"{bad} mismatches, {dt:.2f}s (limit 5s)")


def test_2_common_root_count():
    def body():
        rng = seeded(102)
        bad = done = 0
        while done < 500:
            g = rand_upoly(rng, rng.randint(0, 4))
            p = g * rand_upoly(rng, rng.randint(1, 4))
            q = g * rand_upoly(rng, rng.randint(1, 4))
            if p.is_zero() or q.is_zero():
                continue
            done += 1
            bad += common_root_count(p, q) != p.gcd(q).degree
        return bad
    bad, dt = timed(body)
    report(2, "common_root_count = deg gcd (500 planted pairs)", bad == 0 and dt < 5,
           f"{bad} mismatches, {dt:.2f}s (limit 5s)")


def test_3_classification():
    fams = [Family(1), Family(2, 0), Family(2, 1), Family(3), Family(4, 0), Family(4, 1)]
    not_sub = ["y + x^4 + y^4", "x*y + y^3 + x^4 - x^2*y^2", "2*y - 3*x*y + x^3*y"]

    def body():
        bad = []
        for fam in fams:
            v = classify_degree4(family_polynomial(fam))
            if v.tag != "SubmersionDisconnected" or v.family != fam:
                bad.append(str(fam))
        assert P("2*y - 3*x*y + x^3*y").diff("y").specialize("x", -2).is_zero()
        for text in not_sub:
            p = P(text)
            v = classify_degree4(p)
            if v.tag != "NotSubmersion" or not verify_witness_box(p, v.box):
                bad.append(text)
        return bad
    bad, dt = timed(body)
    report(3, "classification of the four families and not-submersion branches",
           not bad and dt < 30, f"{len(fams)} families, {len(not_sub)} non-submersions, "
           f"wrong: {bad or 'none'}, {dt:.2f}s (limit 30s)")


def test_4_connectedness_rules():
    c1 = decide_connected(P("y + x^2*y + x^4"), 0)
    c2 = decide_connected(P("y + x^2*y^2 + x^4"), 0)
    ok = (c1.tag == c2.tag == "ConnectedAllLevels" and c1.rule == "LinearInY"
          and c2.rule == "Quadratic22tt" and c2.disc.degree == 6 and c2.disc.lc == -4
          and check_certificate(c1, P("y + x^2*y + x^4"))
          and check_certificate(c2, P("y + x^2*y^2 + x^4")))
    report(4, "connectedness certificates", ok,
           f"{c1.rule}, {c2.rule} with Delta degree {c2.disc.degree} lead {c2.disc.lc}; revalidated")


SEEDS = {
    "I": "x^4 - 6*x^2*y^2 + y^4", "II": "x^4 + y^4", "III": "x^4 - y^4",
    "IV": "y^2*(6*x^2 + y^2)", "V": "y^2*(6*x^2 - y^2)", "VI": "(x^2 + y^2)^2",
    "VII": "6*x^2*y^2", "VIII": "4*x^3*y", "IX": "x^4",
}


def test_5_quartic_case_invariance():
    def body():
        rng = seeded(105)
        bad = 0
        for label, s in SEEDS.items():
            p = P(s + " + y + x^2 - x*y")
            bad += quartic_case(p).label != label
            for _ in range(100):
                bad += quartic_case(affine_substitute(p, rand_affine(rng, linear_only=True))).label != label
        return bad
    bad, dt = timed(body)
    report(5, "quartic_case invariance (9 seeds x 100 maps)", bad == 0 and dt < 60,
           f"{bad} changes, {dt:.2f}s (limit 60s)")


def test_6_family_three_area():
    v = truncated_integral(Family(3), BPoly.const(1), mpq(1, 1000))
    err = abs(v - (1 - 1e-3))
    report(6, "family 3 truncated area at eps = 1e-3", err < 1e-3, f"{v:.6f}, error {err:.2e} (tol 1e-3)")


def test_7_family_one_divergence():
    epss = (1e-2, 1e-3, 1e-4)
    vals = [truncated_integral(Family(1), BPoly.const(1), mpq(1, round(1 / e))) for e in epss]
    errs = [abs(v - (math.log(1 / e) - 1 / 3 + e ** 3 / 3)) for v, e in zip(vals, epss)]
    xs = [math.log(1 / e) for e in epss]
    mx, my = sum(xs) / 3, sum(vals) / 3
    slope = sum((x - mx) * (y - my) for x, y in zip(xs, vals)) / sum((x - mx) ** 2 for x in xs)
    ok = max(errs) < 1e-3 and abs(slope - 1) <= 0.05
    report(7, "family 1 log divergence", ok, f"max error {max(errs):.2e} (tol 1e-3), slope {slope:.4f}")


def test_8_refuter_totality():
    fams = [Family(1), Family(2, 0), Family(2, 1), Family(3), Family(4, 0), Family(4, 1)]

    def body():
        rng = seeded(108)
        stats = {"PointWitness": 0, "DivergenceCertificate": 0}
        for fam in fams:
            p = family_polynomial(fam)
            done = 0
            while done < 100:
                q = rand_bpoly(rng, rng.randint(1, 6), rng.randint(1, 8))
                if q.is_const():
                    continue
                done += 1
                c = refute_pair(fam, q)
                h = jacobian_det(p, q)
                if c.tag == "PointWitness":
                    assert evaluate(h, *c.point) == c.value <= 0
                else:
                    assert evaluate(h, 0, 0) > 0
                    assert fam.id in (1, 2) or tau(fam, h) >= DIVERGENCE_THRESHOLD
                stats[c.tag] += 1
        return stats
    try:
        stats, dt = timed(body)
        ok, detail = dt < 60, f"{stats}, {dt:.2f}s (limit 60s)"
    except Exception as e:  # LemmaViolation, search exhaustion or a failed re-check
        ok, detail = False, f"{type(e).__name__}: {e}"
    report(8, "refute_pair on 100 random q per family", ok, detail)


def test_9_appendix():
    def body():
        bad = []
        for k in range(1, 9):
            for j in range(1, k + 1):
                if not det_exact(hankel(j, k)) > 0:
                    bad.append(f"det H_{j}^{k}")
            if not all(m > 0 for m in leading_minors(hankel(k, k))):
                bad.append(f"minors H_{k}^{k}")
        if det_exact(hankel(1, 1)) != mpq(8, 9):
            bad.append("det H_1^1")
        for k in range(2, 9):
            for i in range(1, 2 * k - 2):
                if alpha(i, k) != alpha(1, k) * alpha(i - 2, k - 1):
                    bad.append(f"alpha identity {i},{k}")
        for k in range(1, 7):
            n = k + 1

            def K(a):
                return K_form(SquaresInput(a, [0] * n))

            def e(*idx):
                return [sum(1 for i in idx if i == r) for r in range(n)]

            z = K([0] * n)
            hess = [[(K(e(r, s)) - K(e(r)) - K(e(s)) + z) / 2 for s in range(n)] for r in range(n)]
            if hess != hankel(k, k).rows():
                bad.append(f"half Hessian k={k}")
        return bad
    bad, dt = timed(body)
    report(9, "Hankel determinants, minors, alpha identity, half Hessian", not bad and dt < 10,
           f"failures: {bad or 'none'}, {dt:.2f}s (limit 10s)")


def test_10_bruna():
    rng = seeded(110)
    bad = 0
    for _ in range(500):
        b = [rand_rat(rng, 5, 3) for _ in range(rng.randint(1, 10))]
        if all(v == 0 for v in b):
            b[0] = mpq(1)
        w = bruna_witnesses(b)
        L = bruna_poly(b)
        bad += not (w.tag == "Witnesses" and L(w.theta1) < 0 < L(w.theta2))
    bad += bruna_witnesses([0] * 5).tag != "IsZero"
    rec = 0
    for _ in range(200):
        k = rng.randint(1, 5)
        a = [rand_rat(rng) for _ in range(k + 1)]
        c = [rand_rat(rng) for _ in range(k + 1)]
        bs = b_from_squares(SquaresInput(a, c))
        S = [sum(a[r] * a[j - r] + c[r] * c[j - r] for r in range(max(0, j - k), min(j, k) + 1))
             for j in range(2 * k + 1)]
        rec += bs[0] != a[0] ** 2 + c[0] ** 2
        rec += sum(2 * j * bs[j - 1] + (2 * j + 1) * bs[j] != S[j] for j in range(1, 2 * k))
    report(10, "sign-change witnesses and square recurrence", bad == 0 and rec == 0,
           f"{bad} witness failures in 501 vectors, {rec} recurrence mismatches in 200 inputs")


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
