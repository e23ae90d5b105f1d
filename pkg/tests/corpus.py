"""One concrete polynomial per branch of the degree-4 case analysis.

Entries are (branch, polynomial text, expected verdict, expected detail), where
the detail is a rule name, a family id, or None.
"""

NS = "NotSubmersion"
AC = "SubmersionAllConnected"
SD = "SubmersionDisconnected"

BRANCHES = [
    # cases I, II, III, VI: never submersions
    ("I", "y + x^4 - 6*x^2*y^2 + y^4", NS, None),
    ("II", "y + x^4 + y^4", NS, None),
    ("III", "y + x^4 - y^4", NS, None),
    ("VI b9", "y + (x^2 + y^2)^2", NS, None),
    ("VI b7", "y + x*y^2 + (x^2 + y^2)^2", NS, None),
    ("VI b5", "x + y^2 + (x^2 + y^2)^2", NS, None),
    ("VI b3", "x + (x^2 + y^2)^2", NS, None),
    ("VI gcd", "(x^2 + y^2)^2 - x^2 - y^2", NS, None),
    # case VIII
    ("V_1 a03", "x + y^3 + x^3*y", NS, None),
    ("V_1 a12 a20", "y + x^2 + x*y^2 + x^3*y", NS, None),
    ("V_1 a10 a12 opposite", "-x + x*y^2 + x^3*y", NS, None),
    ("V_1 a10 a12 same", "x + x*y^2 + x^3*y", NS, None),
    ("V_1 a10 zero", "y + x*y^2 + x^3*y", NS, None),
    ("V_1 a02", "x + y^2 + x^3*y", NS, None),
    ("V_3", "y + x*y + x^3*y", NS, None),
    ("V_4", "2*y - 3*x*y + x^3*y", NS, None),
    ("V_5 a10 zero", "x^2 + x^3*y", NS, None),
    ("V_5 a20 zero", "x + x^3*y", SD, 2),
    ("V_5 a20 one", "x + x^2 + x^3*y", SD, 2),
    # case IX
    ("VII_1", "y + y^3 + x^4", AC, "Cubic3"),
    ("VII_2 a12", "y + x*y^2 + x^4", NS, None),
    ("VII_2 a02", "x + y^2 + x^4", NS, None),
    ("VII_2 a11", "y + x*y + x^4", NS, None),
    ("VII_2 a01", "y + x^4", AC, "LinearInY"),
    ("VII_2 a01 a11 zero", "x + x^4", NS, None),
    ("VII_3 a02", "x + y^2 + x^2*y + x^4", NS, None),
    ("VII_3 a30", "x + x^3 + 1/4*y^2 + x^2*y + x^4", AC, "Quadratic2ttt"),
    ("VII_3 a20", "x + x^2 + 1/4*y^2 + x^2*y + x^4", NS, None),
    ("VII_3 a10", "x + 1/4*y^2 + x^2*y + x^4", AC, "Quadratic2ttt"),
    ("VII_3 origin", "1/4*y^2 + x^2*y + x^4", NS, None),
    ("VII_4 a01 negative", "-y + x^2*y + x^4", NS, None),
    ("VII_4 a01 positive", "y + x^2*y + x^4", AC, "LinearInY"),
    ("VII_5 a10 zero", "x^2*y + x^4", NS, None),
    ("VII_5 a10", "x + x^2*y + x^4", SD, 1),
    # case VII
    ("IV_1 b0", "x + x^3 + y^3 + x^2*y^2", NS, None),
    ("IV_1 a11", "x*y + x^3 + y^3 + x^2*y^2", NS, None),
    ("IV_1 a11 zero", "y + x^3 + y^3 + x^2*y^2", NS, None),
    ("IV_2 a20 positive", "y + x^2 + y^3 + x^2*y^2", AC, None),
    ("IV_2 cor22", "x + x*y - x^2 + y^3 + x^2*y^2", NS, None),
    ("IV_2 a11 zero", "x - x^2 + y^3 + x^2*y^2", NS, None),
    ("IV_2 b0 zero", "x*y - x^2 + y^3 + x^2*y^2", NS, None),
    ("IV_2 disc nonneg", "-x^2 + y^3 + x^2*y^2", NS, None),
    ("IV_2 disc negative", "y - x^2 + y^3 + x^2*y^2", NS, None),
    ("IV_2 a10", "x + y^3 + x^2*y^2", NS, None),
    ("IV_2 a10 b0 zero", "x + x*y + 3/2*y^2 + y^3 + x^2*y^2", NS, None),
    ("IV_2 a01 a11", "y + x*y + y^3 + x^2*y^2", NS, None),
    ("IV_2 a01 zero", "x*y + y^3 + x^2*y^2", NS, None),
    ("IV_2 family", "y + y^2 + y^3 + x^2*y^2", SD, 4),
    ("IV_2 family a02 zero", "y + y^3 + x^2*y^2", SD, 4),
    ("IV_2 not submersion", "y + 2*y^2 + y^3 + x^2*y^2", NS, None),
    ("IV_3 a02 one", "y + x^2 + y^2 + x^2*y^2", NS, None),
    ("IV_3 a02 minus one", "y + x^2 - y^2 + x^2*y^2", NS, None),
    ("IV_3 q5(1) zero", "-y + x*y + x^2 - y^2 + x^2*y^2", NS, None),
    ("IV_3 a10 a02 minus one", "x + y - y^2 + x^2*y^2", NS, None),
    ("IV_3 a10 a02 one", "x + y^2 + x^2*y^2", AC, "Quadratic2ttt"),
    ("IV_3 a11", "y + x*y + y^2 + x^2*y^2", NS, None),
    ("IV_3 a11 zero", "y + y^2 + x^2*y^2", NS, None),
    ("IV_4 a10", "x + y + x^2*y^2", NS, None),
    ("IV_4 a11", "y + x*y + x^2*y^2", NS, None),
    ("IV_4 family", "y + x^2*y^2", SD, 3),
    ("IV_4 family scaled", "2*y + x^2*y^2", SD, 3),
    # cases IV and V
    ("II_1 a22 one", "y + y^3 + x^4 + x^2*y^2", AC, "Cubic3"),
    ("II_1 a11", "x*y + y^3 + x^4 - x^2*y^2", NS, None),
    ("II_1 a01 negative", "-y + y^3 + x^4 - x^2*y^2", NS, None),
    ("II_1 a01 positive", "y + y^3 + x^4 - x^2*y^2", NS, None),
    ("II_1 a01 zero", "x + y^3 + x^4 - x^2*y^2", NS, None),
    ("II_2 a02", "y + y^2 + x^4 + x^2*y^2", NS, None),
    ("II_2 a01 zero", "x + x*y + x^4 + x^2*y^2", NS, None),
    ("II_2 a22 one", "y + x^4 + x^2*y^2", AC, "Quadratic22tt"),
    ("II_2 a11", "y + x*y + x^4 - x^2*y^2", NS, None),
    ("II_2 a11 zero", "y + x^4 - x^2*y^2", NS, None),
    ("II_2 a01 a11 zero", "x + x^4 - x^2*y^2", NS, None),
]
