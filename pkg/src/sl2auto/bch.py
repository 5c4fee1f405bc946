"""Brute-force oracle: truncated free associative algebra on x, y.

Series are dicts from words (strings over "xy") to rationals.  An optional
set of forbidden subwords turns the free algebra into a monomial algebra,
used for the quotient with p^2 = q^2 = 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    Poly,
    Q,
    TruncSeries,
    UniSeries,
    VarSpec,
    _qstr,
    baker_AB,
    recover_g,
    uni_log1p,
)
from .generic import GenMat
from .walgebra import WElement, w_mul

LETTERS = "xy"


@dataclass(frozen=True, eq=False)
class FreeSeries:
    terms: dict
    order: int
    relations: tuple = field(default=())

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            if any(ch not in LETTERS for ch in w):
                raise ValueError(f"bad word {w!r}")
            if len(w) > self.order or not c or self._killed(w):
                continue
            clean[w] = Q(c)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "relations", tuple(self.relations))

    def _killed(self, w):
        return any(r in w for r in self.relations)

    @classmethod
    def const(cls, c, order, relations=()):
        return cls({"": c}, order, relations)

    @classmethod
    def letter(cls, ch, order, relations=()):
        return cls({ch: 1}, order, relations)

    def constant_term(self):
        return self.terms.get("", Q(0))

    def _like(self, terms, order=None):
        return FreeSeries(terms, self.order if order is None else order, self.relations)

    def __add__(self, other):
        if not isinstance(other, FreeSeries):
            other = self._like({"": other})
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return self._like(out, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self):
        return self._like({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = Q(c)
        return self._like({w: c * v for w, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FreeSeries):
            return self.scale(other)
        return free_mul(self, other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, FreeSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a = {w: c for w, c in self.terms.items() if len(w) <= n}
        b = {w: c for w, c in other.terms.items() if len(w) <= n}
        return a == b

    def homogeneous(self, d):
        return self._like({w: c for w, c in self.terms.items() if len(w) == d})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, w in enumerate(sorted(self.terms, key=lambda w: (len(w), w))):
            c = self.terms[w]
            mag = abs(c)
            if not w:
                text = _qstr(mag)
            elif mag == 1:
                text = w
            else:
                text = f"{_qstr(mag)}*{w}"
            if i == 0:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    def to_json(self):
        return {
            "order": self.order,
            "relations": list(self.relations),
            "terms": [{"word": w, "coeff": _qstr(self.terms[w])}
                      for w in sorted(self.terms, key=lambda w: (len(w), w))],
        }


def free_mul(s, r):
    n = min(s.order, r.order)
    rels = tuple(sorted(set(s.relations) | set(r.relations)))
    by_len = {}
    for w, c in r.terms.items():
        by_len.setdefault(len(w), []).append((w, c))
    out = {}
    for w1, c1 in s.terms.items():
        room = n - len(w1)
        for d in range(room + 1):
            for w2, c2 in by_len.get(d, ()):
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
    return FreeSeries(out, n, rels)


def free_exp(s):
    """exp(s) for s without constant term."""
    if s.constant_term():
        raise ValueError("free_exp needs zero constant term")
    out = FreeSeries.const(1, s.order, s.relations)
    power = out
    for k in range(1, s.order + 1):
        power = free_mul(power, s).scale(Q(1, k))
        if not power.terms:
            break
        out = out + power
    return out


def free_log(s):
    """log(s) for s with constant term 1."""
    if s.constant_term() != 1:
        raise ValueError("free_log needs constant term 1")
    r = s - 1
    out = FreeSeries({}, s.order, s.relations)
    power = FreeSeries.const(1, s.order, s.relations)
    for k in range(1, s.order + 1):
        power = free_mul(power, r)
        if not power.terms:
            break
        out = out + power.scale(Q((-1) ** (k - 1), k))
    return out


def bch(order):
    """log(exp(x) exp(y)) to word length ``order``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    x = FreeSeries.letter("x", order)
    y = FreeSeries.letter("y", order)
    return free_log(free_mul(free_exp(x), free_exp(y)))


def commutator_series(word, order):
    """Left-normed commutator [w1, ..., wk] expanded into words."""
    out = FreeSeries.letter(word[0], order)
    for ch in word[1:]:
        g = FreeSeries.letter(ch, order)
        out = free_mul(out, g) - free_mul(g, out)
    return out


def project_to_w(s, order=None):
    """Image in W: words go to their normal forms, summed."""
    n = s.order if order is None else order
    gens = {"x": WElement.x(n), "y": WElement.y(n)}
    cache = {"": WElement.one(n)}

    def image(w):
        if w not in cache:
            cache[w] = w_mul(image(w[:-1]), gens[w[-1]])
        return cache[w]

    out = WElement.zero(n)
    for w in sorted(s.terms, key=len):
        if len(w) <= n:
            out = out + image(w).scale(s.terms[w])
    return out


# nilpotent counterexample

AB = VarSpec.uniform(("a", "b"))
CVAR = VarSpec.uniform(("c",))


def NilpMat(a11, a12, a21, a22):
    """2x2 matrix over Q[a, b]."""
    def lift(p):
        return p if isinstance(p, Poly) else Poly.const(AB, p)
    return GenMat(lift(a11), lift(a12), lift(a21), lift(a22))


def _mat_trunc(m, n):
    return GenMat(*(p.truncate(n) for p in (m.a11, m.a12, m.a21, m.a22)))


def _mat_mul(m1, m2, n):
    return _mat_trunc(m1 * m2, n)


def nilpotent_matrices():
    a, b = Poly.var(AB, "a"), Poly.var(AB, "b")
    U = NilpMat(0, a, 0, 0)
    V = NilpMat(0, 0, b, 0)
    return U, V


def matrix_log1p(T, n):
    """log(I + T) for T with entries of positive degree, to degree n."""
    out = GenMat.zero(AB)
    power = GenMat.identity(AB)
    for k in range(1, n + 1):
        power = _mat_mul(power, T, n)
        if power.is_zero():
            break
        out = out + power * Q((-1) ** (k - 1), k)
    return out


def _uni_from_c_poly(p, order):
    coeffs = [Q(0)] * (order + 1)
    for (k,), q in p.terms.items():
        if k <= order:
            coeffs[k] = q
    return UniSeries(coeffs, order)


def phi_closed_form(kmax):
    """phi(c) = 1 / (2 A(g)) with cosh(sqrt g) - 1 = c/2."""
    c = Poly.var(CVAR, "c")
    g = recover_g(TruncSeries(c.scale(Q(1, 2)), kmax))
    A, _ = baker_AB(g)
    return _uni_from_c_poly((A * 2).inverse().poly, kmax)


def xi_identity_defect(phi, degree):
    """phi(c) * xi(2+xi)/(1+xi) - log(1+xi) in K[[xi]], with c = xi^2/(1+xi).

    phi known to c-degree k leaves the result exact to xi-degree 2k + 2,
    since c has xi-valuation 2 and the root factor has valuation 1.
    """
    if degree > 2 * phi.order + 2:
        raise ValueError("phi is too short for this xi-degree")
    phi = UniSeries(list(phi.coeffs), degree)
    one_plus = UniSeries([1, 1], degree)
    xi = UniSeries.identity(degree)
    c_of_xi = (xi * xi) / one_plus
    root = (xi * (xi + 2)) / one_plus
    lhs = phi(c_of_xi) * root
    return lhs - uni_log1p(xi)


def _free_log_in_monomial_algebra(order):
    """log((1 + p)(1 + q)) with p^2 = q^2 = 0, letters x=p, y=q."""
    rels = ("xx", "yy")
    p = FreeSeries.letter("x", order, rels)
    q = FreeSeries.letter("y", order, rels)
    ep, eq = free_exp(p), free_exp(q)
    return ep, eq, free_log(free_mul(ep, eq))


def _eval_free_on(s, U, V, n):
    gens = {"x": U, "y": V}
    cache = {"": GenMat.identity(AB)}

    def image(w):
        if w not in cache:
            cache[w] = _mat_mul(image(w[:-1]), gens[w[-1]], n)
        return cache[w]

    out = GenMat.zero(AB)
    for w, c in s.terms.items():
        out = out + image(w) * c
    return out


def nilpotent_example(order):
    """Checks for e^U e^V = I + T with U, V strictly triangular; returns a JSON-able report."""
    if order < 2:
        raise ValueError("order must be >= 2")
    n = order
    a, b = Poly.var(AB, "a"), Poly.var(AB, "b")
    c = a * b
    U, V = nilpotent_matrices()
    I = GenMat.identity(AB)
    checks = []

    def record(name, ok, detail=""):
        checks.append({"name": name, "pass": bool(ok), "detail": detail})

    record("U^2 = V^2 = 0", (U * U).is_zero() and (V * V).is_zero())
    eU, eV = I + U, I + V
    prod = eU * eV
    T = prod - I
    record("e^U e^V = [[1+ab, a], [b, 1]]",
           prod.a11 == 1 + c and prod.a12 == a and prod.a21 == b and prod.a22 == 1)
    record("T^2 = c(T + I)", (T * T - (T + I) * c).is_zero())
    powers = [I, T]
    ok = True
    for k in range(2, n + 1):
        powers.append(powers[-1] * T)
        if not (powers[k] - (powers[k - 1] + powers[k - 2]) * c).is_zero():
            ok = False
    record(f"T^n = c(T^(n-1) + T^(n-2)) for n <= {n}", ok)

    W = matrix_log1p(T, n)
    # phi from the (1,2) entry: W12 = 2a phi(c)
    kmax = (n - 1) // 2
    phi_poly = Poly.zero(AB)
    coeffs = []
    ok = True
    for k in range(kmax + 1):
        q = W.a12.terms.get((k + 1, k), Q(0)) / 2
        coeffs.append(q)
        phi_poly = phi_poly + c ** k * q
    stray = [e for e in W.a12.terms if e[0] != e[1] + 1]
    if stray:
        ok = False
    S = (T * 2) - I * c
    predicted = _mat_trunc(S * phi_poly, n)
    record("W' = phi(c)(2T - cI)", ok and (predicted - W).is_zero(),
           "compared entrywise to a,b-degree %d" % n)
    phi = UniSeries(coeffs, kmax)
    closed = phi_closed_form(kmax)
    record("phi = 1/(2 A(g)), cosh(sqrt g) = 1 + c/2", phi == closed)
    xi_deg = 2 * kmax + 2
    defect = xi_identity_defect(phi, xi_deg)
    record("phi(c) xi(2+xi)/(1+xi) = log(1+xi), c = xi^2/(1+xi)",
           all(not q for q in defect.coeffs[: xi_deg + 1]),
           "checked to xi-degree %d" % xi_deg)
    ep, eq, Wfree = _free_log_in_monomial_algebra(n)
    record("exp(p) = 1 + p when p^2 = 0",
           ep == FreeSeries({"": 1, "x": 1}, n) and eq == FreeSeries({"": 1, "y": 1}, n))
    image = _eval_free_on(Wfree, U, V, n)
    record("log((1+p)(1+q)) with p^2 = q^2 = 0 maps onto W'", (image - W).is_zero())

    return {
        "order": n,
        "phi": [_qstr(q) for q in coeffs],
        "checks": checks,
        "passed": all(ch["pass"] for ch in checks),
    }
