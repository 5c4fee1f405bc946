"""Exact arithmetic kernel.

Rationals are ``gmpy2.mpq``.  A :class:`Poly` is a sparse polynomial over a
:class:`VarSpec` (named variables with positive integer weights); a
:class:`TruncSeries` is a polynomial together with a weighted-degree bound
beyond which nothing is known.  :class:`UniSeries` holds one-variable series
such as ``sinh(sqrt w)/sqrt w`` that get substituted into multivariate ones.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from gmpy2 import mpq

from .errors import NotDivisible

Rational = type(mpq(0))
_add = operator.add


def Q(value, den=None):
    """Coerce ``value`` (int, str "p/q", Fraction, mpq) to an exact rational."""
    if den is not None:
        return mpq(value, den)
    if isinstance(value, Rational):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction or a string")
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def is_scalar(value):
    return isinstance(value, (int, Rational, Fraction)) and not isinstance(value, bool)


@dataclass(frozen=True)
class VarSpec:
    names: tuple
    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        if len(self.weights) != len(self.names):
            raise ValueError("one weight per variable required")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be >= 1")

    @classmethod
    def uniform(cls, names, weight=1):
        names = tuple(names)
        return cls(names, (weight,) * len(names))

    def __len__(self):
        return len(self.names)

    def degree(self, exp):
        return sum(w * e for w, e in zip(self.weights, exp))

    def index(self, name):
        return self.names.index(name)

    def zero_exp(self):
        return (0,) * len(self.names)


# central variables of the generic-matrix algebra, each quadratic in x, y
TUV = VarSpec(("t", "u", "v"), (2, 2, 2))


class Poly:
    """Sparse polynomial with exact rational coefficients.

    Instances are treated as immutable.  ``terms`` maps exponent tuples to
    nonzero rationals.
    """

    __slots__ = ("vs", "terms", "_buckets", "_hash")

    def __init__(self, vs, terms=None):
        self.vs = vs
        clean = {}
        if terms:
            n = len(vs)
            for exp, c in dict(terms).items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise ValueError(f"bad exponent {exp} for {vs.names}")
                c = Q(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean
        self._buckets = None
        self._hash = None

    @classmethod
    def _raw(cls, vs, terms):
        p = cls.__new__(cls)
        p.vs = vs
        p.terms = terms
        p._buckets = None
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, vs):
        return cls._raw(vs, {})

    @classmethod
    def const(cls, vs, c):
        c = Q(c)
        return cls._raw(vs, {vs.zero_exp(): c} if c else {})

    @classmethod
    def var(cls, vs, name):
        exp = [0] * len(vs)
        exp[vs.index(name)] = 1
        return cls._raw(vs, {tuple(exp): mpq(1)})

    @classmethod
    def monomial(cls, vs, exp, c=1):
        return cls(vs, {tuple(exp): c})

    # inspection

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_zero(self):
        return not self.terms

    def constant_term(self):
        return self.terms.get(self.vs.zero_exp(), mpq(0))

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def degree(self):
        """Largest weighted degree of a term; -1 for the zero polynomial."""
        return max((self.vs.degree(e) for e in self.terms), default=-1)

    def valuation(self):
        """Smallest weighted degree of a term; None for zero."""
        return min((self.vs.degree(e) for e in self.terms), default=None)

    def is_homogeneous(self):
        return len({self.vs.degree(e) for e in self.terms}) <= 1

    def sorted_terms(self):
        """Terms by ascending degree; within a degree, earlier variables first."""
        deg = self.vs.degree
        return sorted(self.terms.items(), key=lambda it: (deg(it[0]), [-e for e in it[0]]))

    def leading_term(self):
        deg = self.vs.degree
        return max(self.terms.items(), key=lambda it: (deg(it[0]), it[0]))

    def buckets(self):
        """Terms grouped by weighted degree, ascending: [(deg, [(exp, c)])]."""
        if self._buckets is None:
            by = {}
            deg = self.vs.degree
            for e, c in self.terms.items():
                by.setdefault(deg(e), []).append((e, c))
            self._buckets = sorted(by.items())
        return self._buckets

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.vs != self.vs:
                raise ValueError(f"varspec mismatch: {self.vs.names} vs {other.vs.names}")
            return other
        if is_scalar(other):
            return Poly.const(self.vs, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(self.vs, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vs, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, c):
        c = Q(c)
        if not c:
            return Poly.zero(self.vs)
        return Poly._raw(self.vs, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.mul_trunc(other, None)

    __rmul__ = __mul__

    def mul_trunc(self, other, maxdeg):
        """Product keeping only terms of weighted degree <= maxdeg (None: all)."""
        if other.vs != self.vs:
            raise ValueError(f"varspec mismatch: {self.vs.names} vs {other.vs.names}")
        if not self.terms or not other.terms:
            return Poly.zero(self.vs)
        out = {}
        get = out.get
        rb = other.buckets()
        rmin = rb[0][0]
        for d1, t1 in self.buckets():
            if maxdeg is not None and d1 + rmin > maxdeg:
                break
            for d2, t2 in rb:
                if maxdeg is not None and d1 + d2 > maxdeg:
                    break
                for e1, c1 in t1:
                    for e2, c2 in t2:
                        e = tuple(map(_add, e1, e2))
                        out[e] = get(e, 0) + c1 * c2
        return Poly._raw(self.vs, {e: c for e, c in out.items() if c})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.const(self.vs, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def pow_trunc(self, n, maxdeg):
        result = Poly.const(self.vs, 1).truncate(maxdeg)
        for _ in range(n):
            result = result.mul_trunc(self, maxdeg)
        return result

    def truncate(self, maxdeg):
        """Drop terms of weighted degree > maxdeg.  ``None`` keeps everything."""
        if maxdeg is None:
            return self
        deg = self.vs.degree
        if self.degree() <= maxdeg:
            return self
        return Poly._raw(self.vs, {e: c for e, c in self.terms.items() if deg(e) <= maxdeg})

    def truncate_count(self, max_factors):
        """Drop monomials with more than ``max_factors`` variable factors."""
        return Poly._raw(
            self.vs, {e: c for e, c in self.terms.items() if sum(e) <= max_factors}
        )

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vs == other.vs and self.terms == other.terms
        if is_scalar(other):
            c = Q(other)
            if not c:
                return not self.terms
            return self.terms == {self.vs.zero_exp(): c}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vs, frozenset(self.terms.items())))
        return self._hash

    def subs(self, values, target_vs):
        """Substitute each variable by a Poly over ``target_vs``."""
        values = [values[n] if isinstance(values, dict) else values[i]
                  for i, n in enumerate(self.vs.names)]
        powers = [{0: Poly.const(target_vs, 1)} for _ in values]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * values[i]
            return cache[k]

        out = Poly.zero(target_vs)
        for e, c in self.terms.items():
            term = Poly.const(target_vs, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def derivative(self, name):
        i = self.vs.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return Poly._raw(self.vs, out)

    # text / json

    def _monomial_str(self, exp):
        parts = []
        for name, k in zip(self.vs.names, exp):
            if k == 1:
                parts.append(name)
            elif k:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self._monomial_str(e)
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_qstr(mag)}*{mono}"
            else:
                body = _qstr(mag)
            if i == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({str(self)!r}, vars={self.vs.names})"

    def to_json(self):
        return {
            "vars": list(self.vs.names),
            "weights": list(self.vs.weights),
            "terms": [
                {"exp": list(e), "num": str(c.numerator), "den": str(c.denominator)}
                for e, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data, vs=None):
        if vs is None:
            weights = data.get("weights") or [1] * len(data["vars"])
            vs = VarSpec(tuple(data["vars"]), tuple(weights))
        elif list(vs.names) != list(data["vars"]):
            raise ValueError(f"expected variables {vs.names}, got {data['vars']}")
        return cls(vs, {tuple(t["exp"]): mpq(int(t["num"]), int(t["den"])) for t in data["terms"]})


def _qstr(q):
    q = Q(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def tuv_vars():
    """The central generators t, u, v as polynomials."""
    return Poly.var(TUV, "t"), Poly.var(TUV, "u"), Poly.var(TUV, "v")


# ---------------------------------------------------------------------------
# truncated series


def _split(x):
    """(poly, order) for a Poly, TruncSeries or scalar; order None = exact."""
    if isinstance(x, TruncSeries):
        return x.poly, x.order
    if isinstance(x, Poly):
        return x, None
    return None, None


def _min_order(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class TruncSeries:
    """A power series known up to (and including) weighted degree ``order``."""

    __slots__ = ("poly", "order")

    def __init__(self, poly, order):
        if order is None or order < 0:
            raise ValueError("truncation order must be a non-negative int")
        self.poly = poly.truncate(order)
        self.order = int(order)

    @property
    def vs(self):
        return self.poly.vs

    @classmethod
    def const(cls, vs, c, order):
        return cls(Poly.const(vs, c), order)

    def _binary(self, other):
        if is_scalar(other):
            return Poly.const(self.vs, other), self.order
        p, o = _split(other)
        if p is None:
            return None, None
        if p.vs != self.vs:
            raise ValueError(f"varspec mismatch: {self.vs.names} vs {p.vs.names}")
        return p, _min_order(self.order, o)

    def __add__(self, other):
        p, o = self._binary(other)
        if p is None:
            return NotImplemented
        return TruncSeries(self.poly + p, o)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(-self.poly, self.order)

    def __sub__(self, other):
        p, o = self._binary(other)
        if p is None:
            return NotImplemented
        return TruncSeries(self.poly - p, o)

    def __rsub__(self, other):
        p, o = self._binary(other)
        if p is None:
            return NotImplemented
        return TruncSeries(p - self.poly, o)

    def __mul__(self, other):
        if is_scalar(other):
            return TruncSeries(self.poly.scale(other), self.order)
        p, o = self._binary(other)
        if p is None:
            return NotImplemented
        return TruncSeries(self.poly.mul_trunc(p, o), o)

    __rmul__ = __mul__

    def __pow__(self, n):
        return TruncSeries(self.poly.pow_trunc(n, self.order), self.order)

    def constant_term(self):
        return self.poly.constant_term()

    def is_zero(self):
        return self.poly.is_zero()

    def truncate(self, order):
        return TruncSeries(self.poly, min(order, self.order))

    def inverse(self):
        c0 = self.constant_term()
        if not c0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        e = (self * (1 / c0)) - 1
        if e.is_zero():
            return TruncSeries.const(self.vs, 1 / c0, self.order)
        n = self.order // e.poly.valuation()
        geom = UniSeries([(-1) ** k for k in range(n + 1)], n)
        return uni_compose_multi(geom, e) * (1 / c0)

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / Q(other))
        p, o = self._binary(other)
        if p is None:
            return NotImplemented
        if p.constant_term():
            return self * TruncSeries(p, o if o is not None else self.order).inverse()
        return exact_divide(self.truncate(o) if o is not None else self, p)

    def __eq__(self, other):
        if isinstance(other, TruncSeries):
            return self.order == other.order and self.poly == other.poly
        if isinstance(other, Poly) or is_scalar(other):
            p, _ = self._binary(other)
            return self.poly == p.truncate(self.order)
        return NotImplemented

    def __hash__(self):
        return hash((self.poly, self.order))

    def __str__(self):
        return f"{self.poly} + O({self.order + 1})"

    def __repr__(self):
        return f"TruncSeries({str(self.poly)!r}, order={self.order})"

    def to_json(self):
        d = self.poly.to_json()
        d["order"] = self.order
        return d

    @classmethod
    def from_json(cls, data, vs=None):
        return cls(Poly.from_json(data, vs), int(data["order"]))


def exact_divide(num, den):
    """Return q with q*den == num, or raise NotDivisible.

    ``num`` may be a Poly or a TruncSeries; ``den`` a Poly.  For a series the
    divisor must be homogeneous and the quotient is known to
    ``order - deg(den)``.  Division pivots on the graded-lex leading term of
    ``den``; for an exact multiple this reproduces the cofactor whatever the
    term order.
    """
    series_order = None
    if isinstance(num, TruncSeries):
        series_order = num.order
        num = num.poly
    if isinstance(den, TruncSeries):
        den = den.poly
    if is_scalar(den):
        den = Poly.const(num.vs, den)
    if den.vs != num.vs:
        raise ValueError("varspec mismatch")
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if series_order is not None:
        if not den.is_homogeneous():
            raise ValueError("series division needs a homogeneous divisor or a unit")
        if series_order < den.degree():
            raise ValueError("series order too low to determine any quotient term")

    lt_e, lt_c = den.leading_term()
    deg = num.vs.degree
    rem = dict(num.terms)
    quot = {}
    den_terms = list(den.terms.items())
    while rem:
        m = max(rem, key=lambda e: (deg(e), e))
        shift = tuple(a - b for a, b in zip(m, lt_e))
        if any(s < 0 for s in shift):
            raise NotDivisible(num, den)
        coef = rem[m] / lt_c
        quot[shift] = quot.get(shift, 0) + coef
        for e, c in den_terms:
            k = tuple(map(_add, shift, e))
            s = rem.get(k, 0) - coef * c
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    q = Poly._raw(num.vs, {e: c for e, c in quot.items() if c})
    if series_order is None:
        return q
    return TruncSeries(q, series_order - den.degree())


# ---------------------------------------------------------------------------
# one-variable series


class UniSeries:
    """Coefficients c_0..c_order of a power series in one variable."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = [Q(c) for c in coeffs]
        if order is None:
            order = max(len(coeffs) - 1, 0)
        coeffs = coeffs[: order + 1]
        coeffs += [mpq(0)] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, UniSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        return f"UniSeries({[_qstr(c) for c in self.coeffs]}, order={self.order})"

    def truncate(self, order):
        return UniSeries(self.coeffs, min(order, self.order))

    def _pair(self, other):
        if is_scalar(other):
            other = UniSeries([other], self.order)
        n = min(self.order, other.order)
        return other, n

    def __add__(self, other):
        other, n = self._pair(other)
        return UniSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return UniSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            q = Q(other)
            return UniSeries([q * c for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return UniSeries(
            [sum((a[i] * b[k - i] for i in range(k + 1)), mpq(0)) for k in range(n + 1)], n
        )

    __rmul__ = __mul__

    def inverse(self):
        a = self.coeffs
        if not a[0]:
            raise ZeroDivisionError("constant term is zero")
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            s = sum((a[i] * inv[k - i] for i in range(1, k + 1)), mpq(0))
            inv.append(-s / a[0])
        return UniSeries(inv, self.order)

    def __truediv__(self, other):
        if is_scalar(other):
            return self * (1 / Q(other))
        return self * other.inverse()

    def __call__(self, inner):
        """Composition self(inner); ``inner`` must have zero constant term."""
        if inner.coeffs[0]:
            raise ValueError("inner series must have zero constant term")
        n = min(self.order, inner.order)
        out = UniSeries([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out.truncate(n)

    def derivative(self):
        return UniSeries([k * self.coeffs[k] for k in range(1, self.order + 1)], max(self.order - 1, 0))

    def integral(self):
        return UniSeries([0] + [self.coeffs[k] / (k + 1) for k in range(self.order + 1)], self.order + 1)

    @classmethod
    def identity(cls, order):
        return cls([0, 1], order)


def uni_exp(s):
    """exp(s) for s with zero constant term."""
    if s.coeffs[0]:
        raise ValueError("uni_exp needs a zero constant term")
    n = s.order
    e = [mpq(1)]
    for k in range(1, n + 1):
        e.append(sum((i * s.coeffs[i] * e[k - i] for i in range(1, k + 1)), mpq(0)) / k)
    return UniSeries(e, n)


def uni_log1p(s):
    """log(1 + s) for s with zero constant term."""
    if s.coeffs[0]:
        raise ValueError("uni_log1p needs a zero constant term")
    if s.order == 0:
        return UniSeries([0], 0)
    quotient = s.derivative() * (s + 1).truncate(s.order - 1).inverse()
    return quotient.integral()


def uni_sqrt(s):
    """Square root with positive leading coefficient.

    ``s`` must start at an even power whose coefficient is a rational square.
    The result is known to order ``s.order - val(s)/2``.
    """
    nz = [k for k, c in enumerate(s.coeffs) if c]
    if not nz:
        return UniSeries([0], s.order)
    v = nz[0]
    if v % 2:
        raise ValueError("leading exponent is odd; no power-series square root")
    lead = s.coeffs[v]
    num, den = lead.numerator, lead.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    if lead < 0 or rn is None or rd is None:
        raise ValueError("leading coefficient is not a rational square")
    root = mpq(rn, rd)
    m = s.order - v
    unit = UniSeries(s.coeffs[v:], m) * (1 / lead)  # 1 + ...
    # sqrt(1 + e) through its binomial series
    binom = [mpq(1)]
    for k in range(1, m + 1):
        binom.append(binom[-1] * (mpq(1, 2) - (k - 1)) / k)
    half = UniSeries(binom, m)(unit - 1) * root
    out = [0] * (v // 2) + list(half.coeffs)
    return UniSeries(out, s.order - v // 2)


def _isqrt_exact(n):
    from math import isqrt

    n = int(n)
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def uni_reverse(s):
    """Compositional inverse r with s(r(w)) = w, for s(0)=0, s'(0)!=0."""
    if s.coeffs[0]:
        raise ValueError("uni_reverse needs s(0) = 0")
    if s.order < 1 or not s.coeffs[1]:
        raise ValueError("uni_reverse needs an invertible linear coefficient")
    n = s.order
    s1 = s.coeffs[1]
    r = [mpq(0), 1 / s1] + [mpq(0)] * (n - 1)
    for k in range(2, n + 1):
        # coefficient k of s(r) with r_k still 0; the unknown enters as s1*r_k
        ck = s(UniSeries(r, k))[k]
        r[k] = -ck / s1
    return UniSeries(r, n)


def uni_compose_multi(s, g):
    """s(g) for a one-variable series s and a multivariate series g, g(0) = 0.

    The result order is g's order, lowered if ``s`` is too short to reach it.
    """
    if isinstance(g, Poly):
        raise TypeError("pass a TruncSeries so the truncation order is explicit")
    if g.constant_term():
        raise ValueError("the inner series must have zero constant term")
    order = g.order
    if g.is_zero():
        return TruncSeries.const(g.vs, s.coeffs[0], order)
    val = g.poly.valuation()
    needed = order // val
    if s.order < needed:
        order = (s.order + 1) * val - 1
        needed = s.order
    p = g.poly.truncate(order)
    out = Poly.const(g.vs, s.coeffs[needed])
    for k in range(needed - 1, -1, -1):
        out = out.mul_trunc(p, order) + s.coeffs[k]
    return TruncSeries(out, order)


# the series whose substitution yields Baker's A, B and cosh(sqrt g) - 1


def sinhc_series(n):
    """sinh(sqrt w)/sqrt w = sum w^k/(2k+1)!."""
    return UniSeries([mpq(1, factorial(2 * k + 1)) for k in range(n + 1)], n)


def coshc_series(n):
    """(cosh(sqrt w) - 1)/w = sum w^k/(2k+2)!."""
    return UniSeries([mpq(1, factorial(2 * k + 2)) for k in range(n + 1)], n)


def cosh_minus_one_series(n):
    """cosh(sqrt w) - 1 = sum_{k>=1} w^k/(2k)!."""
    return UniSeries([0] + [mpq(1, factorial(2 * k)) for k in range(1, n + 1)], n)


def arccosh_squared_series(n):
    """r(h) with cosh(sqrt r) - 1 = h, obtained by reversion."""
    return uni_reverse(cosh_minus_one_series(n))


def _terms_needed(g):
    if g.is_zero():
        return 0
    return g.order // g.poly.valuation()


def baker_AB(g):
    """(A, B) = (sinh(sqrt g)/sqrt g, (cosh(sqrt g) - 1)/g) as series in g."""
    n = _terms_needed(g)
    return uni_compose_multi(sinhc_series(n), g), uni_compose_multi(coshc_series(n), g)


def recover_g(h):
    """The g with cosh(sqrt g) = 1 + h, for h without constant term."""
    return uni_compose_multi(arccosh_squared_series(max(_terms_needed(h), 1)), h)
