"""Baker's computation in the adjoint representation of G3.

Basis p1, p2, p3 with [p1, p2] = p1, [p1, p3] = 2 p2, [p2, p3] = p3.  The
coordinates of an element are power series in weight-1 variables of a
caller-chosen varspec; everything is kept to a uniform total degree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrix3 as m3
from .algebra import Poly, TruncSeries, VarSpec, baker_AB, is_scalar, recover_g
from .algebra import Q as rat
from .errors import ConsistencyError

G3_GENERIC = VarSpec.uniform(("x11", "x21", "x31", "x12", "x22", "x32"))


def _as_poly(p, vs):
    if isinstance(p, TruncSeries):
        return p.poly
    if is_scalar(p):
        return Poly.const(vs, p)
    return p


@dataclass(frozen=True, eq=False)
class G3Element:
    """x1*p1 + x2*p2 + x3*p3, coordinates kept to total degree ``order``."""

    x1: Poly
    x2: Poly
    x3: Poly
    order: int

    def __post_init__(self):
        vs = next((p.vs for p in (self.x1, self.x2, self.x3) if isinstance(p, (Poly, TruncSeries))), None)
        if vs is None:
            raise ValueError("G3Element needs at least one polynomial coordinate")
        for name in ("x1", "x2", "x3"):
            p = _as_poly(getattr(self, name), vs)
            object.__setattr__(self, name, p.truncate(self.order))

    @property
    def vs(self):
        return self.x1.vs

    @property
    def coords(self):
        return (self.x1, self.x2, self.x3)

    @classmethod
    def zero(cls, vs, order):
        z = Poly.zero(vs)
        return cls(z, z, z, order)

    @classmethod
    def generic(cls, j, vs=G3_GENERIC, order=6):
        """X_j = x_1j p1 + x_2j p2 + x_3j p3."""
        return cls(*(Poly.var(vs, f"x{i}{j}") for i in (1, 2, 3)), order=order)

    def __add__(self, other):
        return G3Element(*(a + b for a, b in zip(self.coords, other.coords)),
                         order=min(self.order, other.order))

    def __neg__(self):
        return G3Element(*(-a for a in self.coords), order=self.order)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return G3Element(*(a * c for a in self.coords), order=self.order)

    def truncate(self, order):
        return G3Element(*self.coords, order=min(order, self.order))

    def __eq__(self, other):
        if not isinstance(other, G3Element):
            return NotImplemented
        return self.order == other.order and self.coords == other.coords

    def __hash__(self):
        return hash((self.coords, self.order))

    def __str__(self):
        parts = []
        for p, b in zip(self.coords, ("p1", "p2", "p3")):
            if p:
                parts.append(f"({p})·{b}" if len(p) > 1 else (b if p == 1 else f"{p}·{b}"))
        if not parts:
            return "0"
        text = parts[0]
        for part in parts[1:]:
            text += " - " + part[1:] if part.startswith("-") else " + " + part
        return text

    def to_json(self):
        return {"order": self.order, "x1": self.x1.to_json(), "x2": self.x2.to_json(),
                "x3": self.x3.to_json()}


def g3_bracket(X, Y):
    """Structure-constant bracket."""
    n = min(X.order, Y.order)
    x1, x2, x3 = X.coords
    y1, y2, y3 = Y.coords
    # [p1,p2] = p1, [p1,p3] = 2p2, [p2,p3] = p3
    c1 = (x1 * y2 - x2 * y1).truncate(n)
    c2 = (2 * (x1 * y3 - x3 * y1)).truncate(n)
    c3 = (x2 * y3 - x3 * y2).truncate(n)
    return G3Element(c1, c2, c3, n)


@dataclass(frozen=True, eq=False)
class G3Matrix:
    entries: tuple
    order: int

    @property
    def cuts(self):
        return (self.order,) * 3

    @property
    def vs(self):
        return self.entries[0][0].vs

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def identity(cls, vs, order):
        return cls(m3.identity(vs, (order,) * 3), order)

    def __matmul__(self, other):
        """Plain matrix product."""
        n = min(self.order, other.order)
        return G3Matrix(m3.mul(self.entries, other.entries, (n,) * 3), n)

    def __mul__(self, other):
        """Composition ``self`` then ``other`` (operators act on the right)."""
        if not isinstance(other, G3Matrix):
            return NotImplemented
        return other @ self

    def power(self, k):
        out = G3Matrix.identity(self.vs, self.order)
        for _ in range(k):
            out = out @ self
        return out

    def apply(self, e):
        """Column action on coordinates."""
        n = min(self.order, e.order)
        col = e.coords
        rows = []
        for i in range(3):
            acc = Poly.zero(e.vs)
            for j in range(3):
                acc = acc + self.entries[i][j].mul_trunc(col[j], n)
            rows.append(acc)
        return G3Element(*rows, order=n)

    def trace(self):
        return m3.trace(self.entries)

    def __eq__(self, other):
        if not isinstance(other, G3Matrix):
            return NotImplemented
        return self.order == other.order and self.entries == other.entries

    def __hash__(self):
        return hash((self.entries, self.order))

    def __str__(self):
        return m3.to_text(self.entries)

    def to_json(self):
        return {"kind": "G3Matrix", "order": self.order, "entries": m3.to_json(self.entries)}


def p_matrix(X):
    """P(X), the matrix of e -> [e, X] in the basis p1, p2, p3."""
    x1, x2, x3 = X.coords
    z = Poly.zero(X.vs)
    rows = ((x2, -x1, z), (2 * x3, z, -2 * x1), (z, x3, -x2))
    return G3Matrix(m3.truncate_rows(rows, (X.order,) * 3), X.order)


def g3_g(X):
    x1, x2, x3 = X.coords
    n = X.order
    return TruncSeries((x2.mul_trunc(x2, n) - 4 * x1.mul_trunc(x3, n)), n)


def g3_exp(X, order=None):
    """Q(exp ad X) = I + A(g) P + B(g) P^2."""
    n = X.order if order is None else min(order, X.order)
    X = X.truncate(n)
    if any(p.constant_term() for p in X.coords):
        raise ValueError("G3 coordinates must have zero constant term")
    P = p_matrix(X)
    A, B = baker_AB(g3_g(X))
    cuts = (n,) * 3
    P2 = m3.mul(P.entries, P.entries, cuts)
    Q = m3.add(m3.identity(X.vs, cuts),
               m3.add(m3.scale(A, P.entries, cuts), m3.scale(B, P2, cuts), cuts), cuts)
    return G3Matrix(Q, n)


def m_values(Q):
    """M1, M2, M3 read off the entries of Q."""
    s = Q.entries
    half = rat(1, 2)
    m1 = -s[0][1] - s[1][2].scale(half)
    m2 = s[0][0] - s[2][2]
    m3_ = s[1][0].scale(half) + s[2][1]
    return m1, m2, m3_


def m_chain(Q):
    """Pairs (numerator, denominator) whose quotients all equal M = B/A^2.

    The sixth pair uses 1 - s22; the form with 1 - 2*s22 cannot hold since
    its constant term is -1 while M1*M3 has none.
    """
    s = Q.entries
    n = Q.order
    m1, m2, m3_ = m_values(Q)

    def mul(p, q):
        return p.mul_trunc(q, n)

    return [
        (2 * s[0][0] + 2 * s[2][2] - 4, mul(m2, m2) - 2 * mul(m1, m3_)),
        (2 * s[0][2], mul(m1, m1)),
        (2 * s[2][0], mul(m3_, m3_)),
        (s[1][0] - 2 * s[2][1], mul(m2, m3_)),
        (s[1][2] - 2 * s[0][1], mul(m1, m2)),
        (1 - s[1][1], mul(m1, m3_)),
    ]


def check_m_chain(Q, A, B):
    """Assert num * A^2 = B * den for every chain pair; returns the failing indices."""
    n = Q.order
    a2 = A.poly.mul_trunc(A.poly, n)
    bad = []
    for k, (num, den) in enumerate(m_chain(Q)):
        if num.mul_trunc(a2, n) != B.poly.mul_trunc(den, n):
            bad.append(k)
    return bad


def g3_recover(Q):
    """Z with Q = Q(exp ad Z), to Q.order."""
    n = Q.order
    h = (Q.trace() - 3).scale(rat(1, 2)).truncate(n)
    if h.constant_term():
        raise ValueError("trace(Q) - 3 must have zero constant term")
    g = recover_g(TruncSeries(h, n))
    A, B = baker_AB(g)
    bad = check_m_chain(Q, A, B)
    if bad:
        raise ConsistencyError(f"redundant expressions for M disagree (chain members {bad})")
    inv = (A * 2).inverse().poly
    Z = G3Element(*(m.mul_trunc(inv, n) for m in m_values(Q)), order=n)
    if g3_g(Z).poly != g.poly:
        raise ConsistencyError("g of the recovered element differs from the trace value")
    return Z


def g3_compose(X, Y, order=None):
    """Z with exp(ad Z) = exp(ad X) exp(ad Y)."""
    n = min(X.order, Y.order) if order is None else order
    return g3_recover(g3_exp(X, n) * g3_exp(Y, n))
