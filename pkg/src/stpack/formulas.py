"""Closed-form densities for the named families.

These are independent of the polytope machinery and serve as regression
oracles and for the tables script.
"""

from fractions import Fraction


def _q(x) -> Fraction:
    return Fraction(x)


def triangle_density(a) -> Fraction:
    return Fraction(1)


def rectangle_density(a, b) -> Fraction:
    a, b = _q(a), _q(b)
    return min(a, b) ** 2 / (a * b)


def hirzebruch_branch(a, b, n) -> str:
    a, b = _q(a), _q(b)
    if n > 1:
        return "n>1"
    if a <= b:
        return "a<=b"
    if a < 2 * b:
        return "b<a<2b"
    return "a>=2b"


def hirzebruch_density(a, b, n) -> Fraction:
    a, b = _q(a), _q(b)
    branch = hirzebruch_branch(a, b, n)
    if branch in ("n>1", "a<=b"):
        return 2 * a / (n * a + 2 * b)
    if branch == "b<a<2b":
        return (a * a + b * b + (a - b) ** 2) / ((a + 2 * b) * a)
    return (a * a + 2 * b * b) / ((a + 2 * b) * a)


def type1_density(a, h) -> Fraction:
    a, h = _q(a), _q(h)
    return (a * a + 2 * h * h - 2 * a * h) / (a * a)


def type2_density(a, b) -> Fraction:
    a, b = _q(a), _q(b)
    return a / (a + b)


def type3a_density(a, b, n) -> Fraction:
    return hirzebruch_density(a, b, n)


def type3b_density(n) -> Fraction:
    return Fraction(2, n)


def type3c_alpha3(a, b, n, h) -> Fraction:
    a, b, h = _q(a), _q(b), _q(h)
    return (n - 1) * a + b - (n - 2) * h


def type3c_density(a, b, n, h) -> Fraction:
    a, b = _q(a), _q(b)
    return ((a + b) ** 2 + min(type3c_alpha3(a, b, n, h) ** 2, a * a)) / ((n * a + 2 * b) * a)
