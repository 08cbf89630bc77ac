"""Reference closed forms, kept apart from the engine so they can be compared.

Nothing in the engine reads these; they are the targets the verification
suite holds computed values against.
"""

from __future__ import annotations

from fractions import Fraction as F

from .ratcore import DEFAULT_ALPHABET as A

a, r, x, y, z, u, v = A.vars("a r x y z u v")

# quadric-bundle system, each entry as ``lhs - rhs``
QUADRIC_SYSTEM = (
    (r**4 * a**3 - 3 * r**3 * a**2 + 3 * r**2 * a - r) * x
    - (3 * r**2 * a**3 - 6 * r * a**2 + 3 * a) * y + a**3 * z - 2,
    (r**3 * a**4 - 4 * r**2 * a**3 + 6 * r * a**2 - 4 * a) * x + (4 * a**3 - 2 * r * a**4) * y,
    x - (r**2 * a**4 - 4 * r * a**3 + 6 * a**2) * y + a**4 * z,
)

# (numerator, denominator) of x, y, z
QUADRIC_SOLUTION = {
    "x": (4 * a, (r * a - 2) ** 2),
    "y": (2 * r**2 * a**2 - 4 * r * a + 4, a * (r * a - 2) ** 2),
    "z": (
        2 * r**4 * a**4 - 12 * r**3 * a**3 + 32 * r**2 * a**2 - 40 * r * a + 20,
        a**3 * (r * a - 2) ** 2,
    ),
}

# y-values quoted for the rejected r = 1 candidates a = 3, 4, in the order given
QUADRIC_REJECTED_Y = (F(5, 4), F(10, 3))

QUADRIC_ANSWER = {"a": 1, "r": 3, "x": 4}

BOUND_FACTOR = a * (a * r - 2) ** 2

CHI_COEFFICIENTS = (
    (a**5 * r**4 - 5 * a**4 * r**3 + 10 * a**3 * r**2 - 10 * a**2 * r + 5 * a) / 120 * x
    - (3 * a**5 * r**2 - 10 * a**4 * r + 10 * a**3) / 120 * y
    + a**5 / 120 * z,
    (a**4 * r**4 - 4 * a**3 * r**3 + 6 * a**2 * r**2 - 4 * a * r + 1) / 24 * x
    - (3 * a**4 * r**2 - 8 * a**3 * r + 6 * a**2) / 24 * y
    + a**4 / 24 * z,
    (5 * a**3 * r**4 - 15 * a**2 * r**3 + 15 * a * r**2 - 6 * r) / 72 * x
    - (5 * a**3 * r**2 - 10 * a**2 * r + 4 * a) / 24 * y
    + a**3 / 18 * z
    + (a**3 * r**2 - 3 * a**2 * r + 3 * a) / 72 * u
    - a**3 / 72 * v,
    (a**2 * r**4 - 2 * a * r**3 + r**2) / 24 * x
    - (3 * a**2 * r**2 - 4 * a * r) / 24 * y
    + (a**2 * r**2 - 2 * a * r + 1) / 24 * u
    - a**2 / 24 * v,
    a * r**4 / 180 * x - a * r**2 / 60 * y - a / 45 * z + (2 * a * r**2 - 3 * r) / 72 * u - a / 36 * v + a,
)

CHI_TARGETS = (F(0), F(1, 24), F(5, 12), F(35, 24), F(25, 12))

HRR_FAMILY = {
    "y": (5 * x - 1) / 2,
    "z": (13 * x - 7) / 2,
    "u": 2 * x + 12,
    "v": (13 * x + 41) / 2,
}

HRR_ANSWER = {"a": 1, "r": 3}

# x, y, z as (coefficient of c, coefficient of d) for [V] = c*s11 + d*s20
DEGREE_SPLIT = {"x": (3, 2), "y": (7, 5), "z": (17, 12)}

QUINTIC_DEGREE = 5
MCD_ANSWER = (1, 1, 1)

INEQ_CASES = (
    "a*rX = 3 and rY >= 2",
    "a <= 3, rX = 3, rY = 1",
    "a <= 4, rX = 1, rY = 1",
)

# the three (a, rX, rY) left once a*rX > 3
COMP_CASES = ((3, 3, 1), (2, 3, 1), (4, 1, 1))

# blow-up of the fourfold along curves: shifts of the correction terms and the
# lower summation index of the second sum, as stated in the reference
BLOWUP_SHIFTS = (2, 4)
BLOWUP_SECOND_SUM_START = 0

BETTI_RELATIONS = {"sB1": 0, "bX3": "bY3", "bX4": "bY4 + m"}

rY, d = A.vars("rY d")

# E_i . (a xi - H_Y)((ar-2) xi - r H_Y)^2, before and after factoring
SCROLL_EXPANDED = (r * a - 2) * ((d * r * rY + r) * a**2 - (3 * d * r + 2 * d * rY + 2) * a + 2 * d)
SCROLL_FACTORED = (r * a - 2) * (d * (r * rY * a**2 - (3 * r + 2 * rY) * a + 2) + a * (r * a - 2))
SCROLL_QUADRATIC = r * rY * a**2 - (3 * r + 2 * rY) * a + 2

# degree of the pulled-back anticanonical class on the minimal lift
def anticanonical_degree(a_, r_x):
    return a_ - F(3, r_x)
