"""The four canonical degree-4 submersions with a disconnected level set."""

from dataclasses import dataclass

from gmpy2 import mpq

from .poly import BPoly, Q

__all__ = ["Family", "family_polynomial", "REGION_TEXT"]


@dataclass(frozen=True)
class Family:
    id: int
    a02: object = mpq(0)

    def __init__(self, id, a02=0):
        a02 = Q(a02)
        if id not in (1, 2, 3, 4):
            raise ValueError(f"unknown family {id}")
        if id == 2 and a02 not in (0, 1):
            raise ValueError("family 2 needs a02 in {0, 1}")
        if id == 4 and not a02 * a02 < 3:
            raise ValueError("family 4 needs a02^2 < 3")
        if id in (1, 3) and a02 != 0:
            raise ValueError(f"family {id} has no parameter")
        object.__setattr__(self, "id", id)
        object.__setattr__(self, "a02", a02)

    @property
    def params(self):
        return {"a02": self.a02} if self.id in (2, 4) else {}

    def __str__(self):
        return f"family {self.id}" + (f" (a02 = {self.a02})" if self.id in (2, 4) else "")


def family_polynomial(fam):
    a = fam.a02
    if fam.id == 1:
        return BPoly({(0, 1): 1, (1, 2): 1, (0, 4): 1})
    if fam.id == 2:
        return BPoly({(0, 1): 1, (0, 2): a, (1, 3): 1})
    if fam.id == 3:
        return BPoly({(0, 1): 1, (2, 2): 1})
    return BPoly({(0, 1): 1, (0, 2): a, (0, 3): 1, (2, 2): 1})


REGION_TEXT = {
    1: "{-1 <= y < 0, 0 <= x <= -1/y - y^2} plus the ray {x >= 0, y = 0}",
    2: "{-1 <= y < 0, -1/y^2 - a02/y <= x <= a02 - 1}",
    3: "{x >= 1, -1/x^2 <= y <= 0}",
    4: "{-1 <= y < 0, sqrt(2 - a02) <= x <= sqrt(-1/y - a02 - y)}",
}
