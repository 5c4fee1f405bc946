"""2x2 matrices over K[x11, x12, x21, y11, y12, y21].

This is the ground truth every other module is checked against: the two
generic traceless matrices x, y and whatever they multiply out to.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .algebra import Poly, VarSpec, is_scalar

GEN = VarSpec.uniform(("x11", "x12", "x21", "y11", "y12", "y21"))


@dataclass(frozen=True)
class GenMat:
    """Entries ``(a11, a12, a21, a22)`` as Polys over a common varspec."""

    a11: Poly
    a12: Poly
    a21: Poly
    a22: Poly

    @property
    def vs(self):
        return self.a11.vs

    @property
    def entries(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    @classmethod
    def scalar(cls, p, vs=GEN):
        if is_scalar(p):
            p = Poly.const(vs, p)
        z = Poly.zero(p.vs)
        return cls(p, z, z, p)

    @classmethod
    def zero(cls, vs=GEN):
        return cls.scalar(Poly.zero(vs))

    @classmethod
    def identity(cls, vs=GEN):
        return cls.scalar(Poly.const(vs, 1))

    def __add__(self, other):
        return GenMat(self.a11 + other.a11, self.a12 + other.a12,
                      self.a21 + other.a21, self.a22 + other.a22)

    def __neg__(self):
        return GenMat(-self.a11, -self.a12, -self.a21, -self.a22)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, Poly):
            return GenMat(self.a11 * other, self.a12 * other, self.a21 * other, self.a22 * other)
        a, b = self, other
        return GenMat(
            a.a11 * b.a11 + a.a12 * b.a21,
            a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21,
            a.a21 * b.a12 + a.a22 * b.a22,
        )

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, Poly):
            return self * other
        return NotImplemented

    def trace(self):
        return self.a11 + self.a22

    def is_scalar_matrix(self):
        return not self.a12 and not self.a21 and self.a11 == self.a22

    def is_zero(self):
        return not (self.a11 or self.a12 or self.a21 or self.a22)

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]


def bracket(a, b):
    return a * b - b * a


def trace(a):
    return a.trace()


def generic_x():
    x11, x12, x21 = (Poly.var(GEN, n) for n in ("x11", "x12", "x21"))
    return GenMat(x11, x12, x21, -x11)


def generic_y():
    y11, y12, y21 = (Poly.var(GEN, n) for n in ("y11", "y12", "y21"))
    return GenMat(y11, y12, y21, -y11)


def central_tuv():
    """t = tr(x^2), u = tr(y^2), v = tr(xy) as polynomials in the entries."""
    x, y = generic_x(), generic_y()
    return (x * x).trace(), (y * y).trace(), (x * y).trace()


def eval_word(word):
    """Product of generic matrices spelled by ``word`` over {x, y}."""
    if not word:
        raise ValueError("empty word")
    gens = {"x": generic_x(), "y": generic_y()}
    out = None
    for letter in word:
        m = gens[letter]
        out = m if out is None else out * m
    return out


def _perm_sign(p):
    sign, seen = 1, set()
    for i in range(len(p)):
        if i in seen:
            continue
        j, length = i, 0
        while j not in seen:
            seen.add(j)
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def standard_polynomial(*mats):
    """s_n(m1..mn) = sum over permutations of sign * product."""
    total = None
    for p in permutations(range(len(mats))):
        prod = mats[p[0]]
        for i in p[1:]:
            prod = prod * mats[i]
        if _perm_sign(p) < 0:
            prod = -prod
        total = prod if total is None else total + prod
    return total


def specialize(m, values):
    """Evaluate a GenMat at rational values for its variables (dict by name)."""
    pt = [values[n] for n in m.vs.names]

    def ev(p):
        s = 0
        for e, c in p.terms.items():
            term = c
            for val, k in zip(pt, e):
                if k:
                    term = term * val ** k
            s += term
        return Poly.const(m.vs, s)

    return GenMat(ev(m.a11), ev(m.a12), ev(m.a21), ev(m.a22))
