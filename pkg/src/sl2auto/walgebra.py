"""The completed algebra of two generic traceless 2x2 matrices.

An element is stored by its coordinates over K[[t, u, v]] in the basis
1, x, y, z = [x, y].  With t, u, v of degree 2 in x, y, the coordinate of a
basis element of degree d is kept up to weighted degree ``order - d``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import TUV, Poly, Q, TruncSeries, is_scalar, tuv_vars
from .generic import GEN, GenMat, bracket, central_tuv, generic_x, generic_y

BASIS = ("1", "x", "y", "z")
BASIS_DEG = (0, 1, 1, 2)


def _build_table():
    t, u, v = tuv_vars()
    half = Q(1, 2)
    one = Poly.const(TUV, 1)
    w = v * v - t * u
    # TABLE[i][j] = {k: coeff} with basis_i * basis_j = sum coeff * basis_k
    table = [[None] * 4 for _ in range(4)]
    for j in range(4):
        table[0][j] = {j: one}
        table[j][0] = {j: one}
    table[1][1] = {0: t * half}
    table[2][2] = {0: u * half}
    table[1][2] = {0: v * half, 3: one * half}
    table[2][1] = {0: v * half, 3: -one * half}
    table[1][3] = {2: t, 1: -v}
    table[3][1] = {1: v, 2: -t}
    table[2][3] = {2: v, 1: -u}
    table[3][2] = {1: u, 2: -v}
    table[3][3] = {0: w}
    return table


MUL_TABLE = _build_table()


def _cut(order, k):
    return order - BASIS_DEG[k]


@dataclass(frozen=True, eq=False)
class WElement:
    p0: Poly
    px: Poly
    py: Poly
    pz: Poly
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        comps = []
        for k, p in enumerate((self.p0, self.px, self.py, self.pz)):
            if is_scalar(p):
                p = Poly.const(TUV, p)
            elif isinstance(p, TruncSeries):
                p = p.poly
            if p.vs != TUV:
                raise ValueError("WElement coordinates live in K[[t,u,v]]")
            comps.append(p.truncate(_cut(self.order, k)) if _cut(self.order, k) >= 0 else Poly.zero(TUV))
        for name, p in zip(("p0", "px", "py", "pz"), comps):
            object.__setattr__(self, name, p)

    @property
    def coords(self):
        return (self.p0, self.px, self.py, self.pz)

    @classmethod
    def from_coords(cls, coords, order):
        return cls(*coords, order=order)

    # named elements

    @classmethod
    def zero(cls, order):
        z = Poly.zero(TUV)
        return cls(z, z, z, z, order)

    @classmethod
    def basis(cls, k, order):
        coords = [Poly.zero(TUV)] * 4
        coords[k] = Poly.const(TUV, 1)
        return cls(*coords, order=order)

    @classmethod
    def one(cls, order):
        return cls.basis(0, order)

    @classmethod
    def x(cls, order):
        return cls.basis(1, order)

    @classmethod
    def y(cls, order):
        return cls.basis(2, order)

    @classmethod
    def z(cls, order):
        return cls.basis(3, order)

    @classmethod
    def central(cls, p, order):
        if is_scalar(p):
            p = Poly.const(TUV, p)
        z = Poly.zero(TUV)
        return cls(p, z, z, z, order)

    # arithmetic

    def _check(self, other):
        if not isinstance(other, WElement):
            return False
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return True

    def __add__(self, other):
        if is_scalar(other) or isinstance(other, Poly):
            other = WElement.central(other, self.order)
        if not self._check(other):
            return NotImplemented
        return WElement(*(a + b for a, b in zip(self.coords, other.coords)), order=self.order)

    __radd__ = __add__

    def __neg__(self):
        return WElement(*(-a for a in self.coords), order=self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        """Multiply by a rational or by a central polynomial in t, u, v."""
        if is_scalar(c):
            return WElement(*(a.scale(c) for a in self.coords), order=self.order)
        return WElement(*(a.mul_trunc(c, _cut(self.order, k)) for k, a in enumerate(self.coords)),
                        order=self.order)

    def __mul__(self, other):
        if is_scalar(other) or isinstance(other, Poly):
            return self.scale(other)
        if not self._check(other):
            return NotImplemented
        return w_mul(self, other)

    def __rmul__(self, other):
        if is_scalar(other) or isinstance(other, Poly):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, WElement):
            return NotImplemented
        return self.order == other.order and self.coords == other.coords

    def __hash__(self):
        return hash((self.coords, self.order))

    def is_zero(self):
        return not any(self.coords)

    def truncate(self, order):
        return w_truncate(self, order)

    def __str__(self):
        return w_to_text(self)

    def __repr__(self):
        return f"WElement({w_to_text(self)!r}, order={self.order})"

    def to_json(self):
        return {
            "order": self.order,
            **{name: p.to_json() for name, p in zip(("p0", "px", "py", "pz"), self.coords)},
        }

    @classmethod
    def from_json(cls, data):
        return cls(*(Poly.from_json(data[n], TUV) for n in ("p0", "px", "py", "pz")),
                   order=int(data["order"]))


def w_mul(lhs, rhs):
    if lhs.order != rhs.order:
        raise ValueError(f"order mismatch: {lhs.order} vs {rhs.order}")
    n = lhs.order
    acc = [Poly.zero(TUV)] * 4
    for i, p in enumerate(lhs.coords):
        if not p:
            continue
        for j, q in enumerate(rhs.coords):
            if not q:
                continue
            room = n - BASIS_DEG[i] - BASIS_DEG[j]
            if room < 0:
                continue
            pq = p.mul_trunc(q, room)
            if not pq:
                continue
            for k, coeff in MUL_TABLE[i][j].items():
                acc[k] = acc[k] + pq.mul_trunc(coeff, _cut(n, k))
    return WElement(*acc, order=n)


def w_bracket(lhs, rhs):
    return w_mul(lhs, rhs) - w_mul(rhs, lhs)


def w_ad_power(a, b, n):
    """a (ad b)^n, the left-normed commutator [a, b, ..., b]."""
    out = a
    for _ in range(n):
        out = w_bracket(out, b)
    return out


def w_truncate(e, order):
    if order < 0:
        raise ValueError("order must be >= 0")
    return WElement(*e.coords, order=min(order, e.order))


def from_word(word, order=None):
    """Normal form of an associative word in x, y."""
    if order is None:
        order = len(word)
    gens = {"x": WElement.x(order), "y": WElement.y(order)}
    out = WElement.one(order)
    for letter in word:
        out = w_mul(out, gens[letter])
    return out


def _tuv_matrix_values():
    t, u, v = central_tuv()
    return {"t": t, "u": u, "v": v}


def w_eval_generic(e):
    """Image of e in M_2(K[x_ij, y_ij]), coordinates read as polynomials."""
    vals = _tuv_matrix_values()
    x, y = generic_x(), generic_y()
    basis = (GenMat.identity(), x, y, bracket(x, y))
    out = GenMat.zero()
    for p, b in zip(e.coords, basis):
        if p:
            out = out + b * p.subs(vals, GEN)
    return out


def _coef_text(p, basis_text):
    if p == 1:
        return basis_text
    if len(p) == 1:
        return f"{p}·{basis_text}"
    return f"({p})·{basis_text}"


def w_to_text(e):
    """Canonical text ``p0 + (px)·x + (py)·y + (pz)·[x,y]``."""
    parts = []
    if e.p0:
        parts.append(str(e.p0) if len(e.p0) == 1 else f"({e.p0})")
    for p, b in zip(e.coords[1:], ("x", "y", "[x,y]")):
        if p:
            parts.append(_coef_text(p, b))
    if not parts:
        return "0"
    text = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            text += " - " + part[1:]
        else:
            text += " + " + part
    return text
