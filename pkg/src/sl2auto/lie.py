"""Lie elements inside the generic-matrix algebra.

Every Lie element has the shape

    alpha*x + beta*y + a*(xv - yt) + b*(xu - yv) + c*[x, y]

with rational alpha, beta and a, b, c in K[[t, u, v]].  Membership is decided
by two exact divisions by v^2 - tu; :func:`lie_form` rewrites such an element
as a rational combination of left-normed commutators in x and y.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import TUV, Poly, Q, TruncSeries, exact_divide, tuv_vars, _qstr
from .errors import NotDivisible
from .walgebra import WElement, w_bracket


@dataclass(frozen=True)
class NotLie:
    """Membership verdict for an element outside the Lie subalgebra."""

    reason: str

    def __bool__(self):
        return False

    def __str__(self):
        return f"NotLie: {self.reason}"


@dataclass(frozen=True, eq=False)
class LieDecomp:
    alpha: object
    beta: object
    a: Poly
    b: Poly
    c: Poly
    order: int

    def __post_init__(self):
        n = self.order
        object.__setattr__(self, "alpha", Q(self.alpha))
        object.__setattr__(self, "beta", Q(self.beta))
        for name, cut in (("a", n - 3), ("b", n - 3), ("c", n - 2)):
            p = getattr(self, name)
            if isinstance(p, TruncSeries):
                p = p.poly
            elif not isinstance(p, Poly):
                p = Poly.const(TUV, p)
            object.__setattr__(self, name, p.truncate(cut) if cut >= 0 else Poly.zero(TUV))

    def __eq__(self, other):
        if not isinstance(other, LieDecomp):
            return NotImplemented
        return (self.order, self.alpha, self.beta, self.a, self.b, self.c) == \
            (other.order, other.alpha, other.beta, other.a, other.b, other.c)

    def __hash__(self):
        return hash((self.order, self.alpha, self.beta, self.a, self.b, self.c))

    def to_welement(self):
        t, u, v = tuv_vars()
        px = self.a * v + self.b * u + self.alpha
        py = -(self.a * t) - self.b * v + self.beta
        return WElement(Poly.zero(TUV), px, py, self.c, self.order)

    def __str__(self):
        return decomp_to_text(self)

    def to_json(self):
        return {
            "order": self.order,
            "alpha": _qstr(self.alpha),
            "beta": _qstr(self.beta),
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "c": self.c.to_json(),
        }


def lie_membership(e):
    """LieDecomp of ``e`` or a NotLie verdict (exact up to e.order)."""
    if e.p0:
        return NotLie(f"scalar component {e.p0} is nonzero")
    n = e.order
    t, u, v = tuv_vars()
    alpha, beta = e.px.constant_term(), e.py.constant_term()
    f = e.px - alpha
    g = -(e.py - beta)
    zero = Poly.zero(TUV)
    if n < 3:
        # nothing of degree >= 3 survives; f, g are already zero
        return LieDecomp(alpha, beta, zero, zero, e.pz, n)
    w = v * v - t * u
    try:
        a = exact_divide(TruncSeries(f * v - g * u, n + 1), w)
        b = exact_divide(TruncSeries(g * v - f * t, n + 1), w)
    except NotDivisible:
        return NotLie(f"coefficients of x, y are not in the module spanned by "
                      f"xv - yt, xu - yv (to order {n})")
    return LieDecomp(alpha, beta, a.poly, b.poly, e.pz, n)


@dataclass(frozen=True)
class LieExpr:
    """Sum of rational multiples of left-normed commutators ``[w1, ..., wk]``."""

    terms: tuple = field(default_factory=tuple)

    def __post_init__(self):
        merged = {}
        for coeff, word in self.terms:
            word = tuple(word)
            if not word or any(ch not in "xy" for ch in word):
                raise ValueError(f"bad commutator word {word!r}")
            merged[word] = merged.get(word, 0) + Q(coeff)
        terms = tuple((merged[w], w) for w in sorted(merged, key=lambda w: (len(w), w)) if merged[w])
        object.__setattr__(self, "terms", terms)

    def __add__(self, other):
        return LieExpr(self.terms + other.terms)

    def __len__(self):
        return len(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (c, word) in enumerate(self.terms):
            body = word[0] if len(word) == 1 else "[" + ",".join(word) + "]"
            mag = abs(c)
            text = body if mag == 1 else f"{_qstr(mag)}·{body}"
            if i == 0:
                out.append(("-" if c < 0 else "") + text)
            else:
                out.append((" - " if c < 0 else " + ") + text)
        return "".join(out)

    def to_json(self):
        return [{"coeff": _qstr(c), "word": "".join(w)} for c, w in self.terms]


def _rewrite_a(i, j, k):
    """(xv - yt) t^i u^j v^k as (scale, word)."""
    if j > 0:
        word = ("x", "y", "y") + ("y",) * (2 * j - 1) + ("x",) * (2 * i + 1) + ("y", "x") * k
        return Q(1, 2 ** (i + j + k + 1)), word
    return Q(1, 2 ** (i + k + 1)), ("x", "y", "x") + ("x",) * (2 * i) + ("y", "x") * k


def _rewrite_b(i, j, k):
    """(xu - yv) t^i u^j v^k as (scale, word)."""
    if i > 0:
        word = ("x", "y", "x") + ("x",) * (2 * i - 1) + ("y",) * (2 * j + 1) + ("x", "y") * k
        return Q(1, 2 ** (i + j + k + 1)), word
    return Q(1, 2 ** (j + k + 1)), ("x", "y", "y") + ("y",) * (2 * j) + ("x", "y") * k


def _rewrite_c(i, j, k):
    """[x, y] t^i u^j v^k as (scale, word)."""
    word = ("x", "y") + ("x",) * (2 * i) + ("y",) * (2 * j) + ("x", "y") * k
    return Q(1, 2 ** (i + j + k)), word


def lie_form(d):
    """Rewrite a LieDecomp into left-normed commutators, monomial by monomial."""
    if not isinstance(d, LieDecomp):
        raise TypeError("lie_form expects a LieDecomp")
    terms = []
    if d.alpha:
        terms.append((d.alpha, ("x",)))
    if d.beta:
        terms.append((d.beta, ("y",)))
    for poly, rewrite in ((d.c, _rewrite_c), (d.a, _rewrite_a), (d.b, _rewrite_b)):
        for exp, q in poly.sorted_terms():
            scale, word = rewrite(*exp)
            terms.append((q * scale, word))
    return LieExpr(tuple(terms))


def eval_lie(expr, order):
    """Evaluate a LieExpr in the W-algebra at the given order."""
    gens = {"x": WElement.x(order), "y": WElement.y(order)}
    cache = {}

    def commutator(word):
        if word in cache:
            return cache[word]
        if len(word) == 1:
            val = gens[word[0]]
        else:
            val = w_bracket(commutator(word[:-1]), gens[word[-1]])
        cache[word] = val
        return val

    out = WElement.zero(order)
    for c, word in expr.terms:
        out = out + commutator(word).scale(c)
    return out


_GEN_TEXT = (
    ("c", "[x,y]"),
    ("a", "(x*v - y*t)"),
    ("b", "(x*u - y*v)"),
)


def decomp_to_text(d):
    """Expanded text: rational * central monomial * module generator, by degree."""
    pieces = []
    if d.alpha:
        pieces.append((1, d.alpha, "", "x"))
    if d.beta:
        pieces.append((1, d.beta, "", "y"))
    base_deg = {"a": 3, "b": 3, "c": 2}
    for name, gen in _GEN_TEXT:
        poly = getattr(d, name)
        for exp, q in poly.sorted_terms():
            mono = Poly.monomial(TUV, exp)._monomial_str(exp)
            pieces.append((base_deg[name] + TUV.degree(exp), q, mono, gen))
    pieces.sort(key=lambda p: p[0])
    if not pieces:
        return "0"
    out = []
    for i, (_, q, mono, gen) in enumerate(pieces):
        factors = ([_qstr(abs(q))] if abs(q) != 1 else []) + ([mono] if mono else []) + [gen]
        text = "·".join(factors)
        if i == 0:
            out.append(("-" if q < 0 else "") + text)
        else:
            out.append((" - " if q < 0 else " + ") + text)
    return "".join(out)
