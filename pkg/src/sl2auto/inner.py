"""Inner automorphisms exp(ad X) of the completed generic-matrix algebra.

Matrices act on the coordinate column (x, y, [x, y]); column j holds the
image of the j-th basis element.  An automorphism matrix of order N describes
the action modulo x,y-degree > N, so rows x, y are kept to weighted degree
N - 1 and row [x, y] to N - 2.  Because ad X raises degree by one, such a
matrix pins down X only to order N - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import matrix3 as m3
from .algebra import (
    TUV,
    Poly,
    TruncSeries,
    baker_AB,
    exact_divide,
    recover_g,
    tuv_vars,
)
from .algebra import Q as rat
from .errors import ConsistencyError, NotDivisible
from .walgebra import WElement


def row_cuts(order):
    return (order - 1, order - 1, order - 2)


def quotient_cut(c):
    """Weighted-degree bound of K[t,u,v] / omega^[(c+1)/2]."""
    if c < 2:
        raise ValueError("nilpotency class must be >= 2")
    return 2 * ((c + 1) // 2 - 1)


@dataclass(frozen=True, eq=False)
class _Matrix:
    entries: tuple
    cuts: tuple
    order: int

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, _Matrix):
            return NotImplemented
        return self.cuts == other.cuts and self.entries == other.entries

    def __hash__(self):
        return hash((self.entries, self.cuts))

    def trace(self):
        return m3.trace(self.entries)

    def __str__(self):
        return m3.to_text(self.entries)

    def _json(self, kind):
        return {"kind": kind, "order": self.order, "cuts": list(self.cuts),
                "entries": m3.to_json(self.entries)}


class AdMatrix(_Matrix):
    """M(ad X) in the basis x, y, [x, y]."""

    def power(self, n):
        out = m3.identity(TUV, self.cuts)
        for _ in range(n):
            out = m3.mul(out, self.entries, self.cuts)
        return out

    def to_json(self):
        return self._json("AdMatrix")


@dataclass(frozen=True, eq=False)
class AutMatrix(_Matrix):
    """M(exp ad X); ``g``, ``A``, ``B`` are cached when built by exp_ad."""

    g: TruncSeries = None
    A: TruncSeries = None
    B: TruncSeries = None

    def __matmul__(self, other):
        """Plain matrix product."""
        if self.cuts != other.cuts:
            raise ValueError("automorphism matrices of different orders")
        return AutMatrix(m3.mul(self.entries, other.entries, self.cuts), self.cuts,
                         min(self.order, other.order))

    def __mul__(self, other):
        """Composition ``self`` then ``other``.

        Automorphisms act on the right (e -> [e, X] generates them) while
        columns hold images, so applying Q1 first and Q2 second has matrix
        Q2 @ Q1.  With this product exp_ad(X) * exp_ad(Y) = exp_ad(Z) for Z
        the BCH series of X and Y.
        """
        if not isinstance(other, AutMatrix):
            return NotImplemented
        return other @ self

    def to_json(self):
        d = self._json("AutMatrix")
        for name in ("g", "A", "B"):
            val = getattr(self, name)
            if val is not None:
                d[name] = val.to_json()
        return d

    @classmethod
    def from_json(cls, data):
        if data.get("kind", "AutMatrix") != "AutMatrix":
            raise ValueError(f"expected an AutMatrix document, got {data.get('kind')}")
        order = int(data["order"])
        cuts = tuple(data.get("cuts") or row_cuts(order))
        cached = {n: TruncSeries.from_json(data[n], TUV) for n in ("g", "A", "B") if n in data}
        return cls(m3.from_json(data["entries"], TUV), cuts, order, **cached)

    @classmethod
    def identity(cls, order):
        cuts = row_cuts(order)
        return cls(m3.identity(TUV, cuts), cuts, order)


def _require_derivation_element(X):
    if X.p0:
        raise ValueError("X must have zero scalar component (p0 = 0)")


def _resolve_order(X, order):
    n = X.order + 1 if order is None else order
    if n > X.order + 1:
        raise ValueError(f"X is known to order {X.order}; its automorphism only to {X.order + 1}")
    if n < 1:
        raise ValueError("order must be >= 1")
    return n


def _ad_entries(a, b, c, cuts):
    t, u, v = tuv_vars()
    z = Poly.zero(TUV)
    rows = (
        (-2 * c * v, -2 * c * u, 2 * (a * v + b * u)),
        (2 * c * t, 2 * c * v, -2 * (a * t + b * v)),
        (b, -a, z),
    )
    return m3.truncate_rows(rows, cuts)


def ad_matrix(X, order=None):
    """M(ad X) for X = a*x + b*y + c*[x, y] (p0 must vanish)."""
    _require_derivation_element(X)
    n = _resolve_order(X, order)
    cuts = row_cuts(n)
    return AdMatrix(_ad_entries(X.px, X.py, X.pz, cuts), cuts, n)


def _g_poly(a, b, c, cut):
    t, u, v = tuv_vars()
    w = v * v - t * u
    g = 2 * (a.mul_trunc(a, cut) * t + 2 * a.mul_trunc(b, cut) * v
             + b.mul_trunc(b, cut) * u + 2 * c.mul_trunc(c, cut) * w)
    return g.truncate(cut)


def g_of(X, order=None):
    """g(X) = 2(a^2 t + 2ab v + b^2 u + 2c^2 (v^2 - tu)), known to weighted degree ``order``."""
    _require_derivation_element(X)
    n = _resolve_order(X, order)
    return TruncSeries(_g_poly(X.px, X.py, X.pz, n), n)


def _exp_from(a, b, c, cuts, order):
    top = max(cuts)
    M = _ad_entries(a, b, c, cuts)
    g = TruncSeries(_g_poly(a, b, c, top), top)
    A, B = baker_AB(g)
    M2 = m3.mul(M, M, cuts)
    Q = m3.add(m3.identity(TUV, cuts),
               m3.add(m3.scale(A, M, cuts), m3.scale(B, M2, cuts), cuts), cuts)
    return AutMatrix(Q, cuts, order, g, A, B)


def exp_ad(X, order=None):
    """M(exp ad X) = I + A(g) M + B(g) M^2, M = M(ad X)."""
    _require_derivation_element(X)
    n = _resolve_order(X, order)
    return _exp_from(X.px, X.py, X.pz, row_cuts(n), n)


def exp_ad_mod(X, c):
    """M(exp ad X) computed directly with entries in K[t,u,v] / omega^[(c+1)/2]."""
    _require_derivation_element(X)
    if X.order < c:
        raise ValueError(f"X must be known to order >= {c}")
    k = quotient_cut(c)
    cuts = (k, k, k)
    return _exp_from(X.px, X.py, X.pz, cuts, c)


def apply_aut(Q, e):
    """Image of a W-element; the scalar part and central coefficients are fixed."""
    n = min(e.order, Q.order)
    col = (e.px, e.py, e.pz)
    new = []
    for i, cut in enumerate((n - 1, n - 1, n - 2)):
        acc = Poly.zero(TUV)
        for j in range(3):
            if col[j] and Q.entries[i][j]:
                acc = acc + Q.entries[i][j].mul_trunc(col[j], cut)
        new.append(acc)
    return WElement(e.p0, *new, order=n)


def _recover_c(M, cuts):
    t, u, v = tuv_vars()
    candidates = (
        (M[1][0], 2 * t, cuts[1]),
        (-M[0][1], 2 * u, cuts[0]),
        (-M[0][0], 2 * v, cuts[0]),
    )
    if all(not entry for entry, _, _ in candidates):
        return Poly.zero(TUV)
    for entry, den, cut in candidates:
        if not entry or cut < 2:
            continue
        try:
            return exact_divide(TruncSeries(entry, cut), den).poly
        except NotDivisible:
            continue
    raise ConsistencyError("no entry of the ad-matrix yields the [x,y]-coefficient")


def log_aut(Q):
    """Recover X (to order Q.order - 1) from Q = M(exp ad X).

    Raises ConsistencyError when Q is not such a matrix to its order.
    """
    n = Q.order
    cuts = Q.cuts
    if cuts != row_cuts(n):
        raise ValueError("log_aut needs an automorphism matrix with standard row bounds")
    if n < 2:
        return WElement.zero(max(n - 1, 0))
    hcut = min(cuts)
    E = Q.entries
    h = (m3.trace(E) - 3).scale(rat(1, 2)).truncate(hcut)
    if h.constant_term():
        raise ValueError("trace(Q) - 3 must have zero constant term")
    if Q.g is not None and Q.g.order >= hcut:
        g = Q.g.truncate(hcut)
    else:
        g = recover_g(TruncSeries(h, hcut))
    A, B = baker_AB(g)
    a_over_b = A / B
    inv_2a = (A * 2).inverse()
    I = m3.identity(TUV, cuts)
    Q2 = m3.mul(E, E, cuts)
    M = m3.sub(m3.scale(a_over_b, m3.sub(E, I, cuts), cuts),
               m3.scale(inv_2a, m3.sub(Q2, I, cuts), cuts), cuts)
    b = M[2][0]
    a = -M[2][1]
    c = _recover_c(M, cuts)
    X = WElement(Poly.zero(TUV), a, b, c, n - 1)
    check = ad_matrix(X, n).entries
    for i in range(3):
        for j in range(3):
            if check[i][j] != M[i][j]:
                raise ConsistencyError(
                    f"entry ({i + 1},{j + 1}) of the recovered ad-matrix is {M[i][j]}, "
                    f"but (a, b, c) predict {check[i][j]}")
    return X


def compose(X, Y, order=None):
    """Z with exp(ad Z) = exp(ad X) exp(ad Y), to ``order``."""
    n = min(X.order, Y.order) if order is None else order
    if n > min(X.order, Y.order):
        raise ValueError("inputs are not known to the requested order")
    _require_derivation_element(X)
    _require_derivation_element(Y)
    Q1 = exp_ad(X.truncate(n), n + 1)
    Q2 = exp_ad(Y.truncate(n), n + 1)
    return log_aut(Q1 * Q2)


def quotient_reduce(obj, c):
    """Reduce modulo the class-c nilpotent quotient.

    Matrix entries are taken modulo omega^[(c+1)/2] of K[t,u,v]; W-elements
    are truncated at degree c.
    """
    if c < 2:
        raise ValueError("nilpotency class must be >= 2")
    if isinstance(obj, WElement):
        return obj.truncate(c)
    k = quotient_cut(c)
    cuts = tuple(min(cut, k) for cut in obj.cuts)
    max_factors = (c + 1) // 2 - 1
    entries = tuple(tuple(p.truncate_count(max_factors).truncate(cuts[i]) for p in row)
                    for i, row in enumerate(obj.entries))
    if isinstance(obj, AutMatrix):
        cached = {}
        for name in ("g", "A", "B"):
            val = getattr(obj, name)
            cached[name] = None if val is None else val.truncate(min(val.order, k))
        return AutMatrix(entries, cuts, c, **cached)
    return type(obj)(entries, cuts, c)
