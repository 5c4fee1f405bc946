"""Named invariant checks shared by ``verify`` and the acceptance run.

Each check takes a ``random.Random`` plus size knobs and returns
``(ok, detail)``.  Sizes default to quick values; the acceptance run passes
the full ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import matrix3 as m3
from .algebra import (
    TUV,
    Poly,
    Q,
    TruncSeries,
    UniSeries,
    VarSpec,
    baker_AB,
    coshc_series,
    sinhc_series,
    uni_compose_multi,
)
from .bch import bch, nilpotent_example, project_to_w
from .g3 import G3_GENERIC, G3Element, check_m_chain, g3_exp, g3_g, g3_recover, p_matrix
from .generic import GenMat, bracket, eval_word, generic_x, generic_y, standard_polynomial
from .inner import (
    ad_matrix,
    compose,
    exp_ad,
    exp_ad_mod,
    g_of,
    log_aut,
    quotient_reduce,
)
from .lie import NotLie, lie_form, lie_membership, eval_lie
from .sampling import random_derivation_element, random_lie_decomp, random_poly, random_rational
from .walgebra import WElement, from_word, w_eval_generic


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def check_cubic(rng, count=10, order=12, maxdeg=4):
    """M^3 = g M for random X."""
    for k in range(count):
        X = random_derivation_element(rng, order, maxdeg)
        M = ad_matrix(X)
        g = g_of(X)
        if M.power(3) != m3.scale(g, M.entries, M.cuts):
            return False, f"sample {k}: {X}"
    return True, f"{count} samples, order {order}"


def check_ab_identity(rng, count=5, uni_order=20, order=12):
    """A^2 - B^2 g - 2B = 0 as series in g and after substituting random g."""
    A, B = sinhc_series(uni_order), coshc_series(uni_order)
    w = UniSeries.identity(uni_order)
    defect = A * A - B * B * w - B * 2
    if any(defect.coeffs):
        return False, "univariate identity"
    for k in range(count):
        g = random_poly(rng, TUV, order, 4, mindeg=2)
        gs = TruncSeries(g, order)
        a, b = baker_AB(gs)
        if a * a - b * b * gs - b * 2 != TruncSeries(Poly.zero(TUV), order):
            return False, f"sample {k}: g = {g}"
        # the composed identity directly
        lhs = uni_compose_multi(defect, gs)
        if lhs.poly:
            return False, f"composed defect, sample {k}"
    return True, f"order {uni_order} in w, {count} substitutions to order {order}"


def check_roundtrip(rng, count=10, order=10, maxdeg=4):
    for k in range(count):
        X = random_derivation_element(rng, order, maxdeg)
        if log_aut(exp_ad(X)) != X:
            return False, f"sample {k}: {X}"
    return True, f"{count} samples, order {order}"


def check_bch_oracle(order=8):
    x, y = WElement.x(order), WElement.y(order)
    Z = compose(x, y)
    P = project_to_w(bch(order))
    if Z != P:
        return False, "compose(x, y) differs from the projected BCH series"
    t, u, v = (Poly.var(TUV, n) for n in "tuv")
    low = (x + y + WElement.z(order).scale(Q(1, 2))
           - (x.scale(v) - y.scale(t)).scale(Q(1, 6))
           + (x.scale(u) - y.scale(v)).scale(Q(1, 6))
           - WElement.z(order).scale(v).scale(Q(1, 12)))
    if Z.truncate(4) != low.truncate(4):
        return False, f"degree <= 4 part is {Z.truncate(4)}"
    return True, f"order {order}"


def _xy_triples(order):
    x, y = WElement.x(order), WElement.y(order)
    z = WElement.z(order)
    t = Poly.var(TUV, "t")
    return [(x, y, x), (x + y, x, y), (x, y.scale(2) - x, z), (x.scale(t) + y, z, x - y)]


def check_group_law(order=8):
    for X, Y, W in _xy_triples(order):
        Z = compose(X, Y)
        if exp_ad(Z, order) != exp_ad(X, order) * exp_ad(Y, order):
            return False, f"homomorphism fails for {X}, {Y}"
        if compose(compose(X, Y), W) != compose(X, compose(Y, W)):
            return False, f"associativity fails for {X}, {Y}, {W}"
    return True, f"{len(_xy_triples(order))} triples, order {order}"


def _engineered_nonmember(rng, order):
    """A Lie element plus t*m*x (m a monomial): p0 = 0 but px is off the module.

    Needs order >= 3, the first degree where t*x is representable.
    """
    d = random_lie_decomp(rng, order)
    e = d.to_welement()
    t = Poly.var(TUV, "t")
    room = (order - 3) // 2
    i = rng.randint(0, min(room, 1))
    j = rng.randint(0, min(room - i, 1))
    bump = Poly.monomial(TUV, (i, j, 0), random_rational(rng) or 1)
    return WElement(e.p0, e.px + t * bump, e.py, e.pz, order)


def check_lie(rng, count=20, order=10):
    for k in range(count):
        d = random_lie_decomp(rng, order)
        e = d.to_welement()
        back = lie_membership(e)
        if not back or back != d:
            return False, f"membership round trip, sample {k}"
        if eval_lie(lie_form(back), order) != e:
            return False, f"lie_form round trip, sample {k}"
    for k in range(count):
        if k % 2:
            e = random_lie_decomp(rng, order).to_welement() + (random_rational(rng) or 1)
        else:
            e = _engineered_nonmember(rng, order)
        if not isinstance(lie_membership(e), NotLie):
            return False, f"non-member accepted, sample {k}: {e}"
    return True, f"{count} members, {count} non-members, order {order}"


def all_words(maxlen):
    for n in range(1, maxlen + 1):
        for w in product("xy", repeat=n):
            yield "".join(w)


def check_generic(rng, maxlen=6, specializations=20):
    count = 0
    for w in all_words(maxlen):
        if w_eval_generic(from_word(w)) != eval_word(w):
            return False, f"word {w}"
        count += 1
    x, y = generic_x(), generic_y()
    if not bracket(x * x, y).is_zero() or not bracket(y * y, x).is_zero():
        return False, "weak identities [x^2, y], [y^2, x]"
    vs = VarSpec.uniform(("e",))
    for k in range(specializations):
        mats = [GenMat(*(Poly.const(vs, random_rational(rng, 9)) for _ in range(4))) for _ in range(4)]
        if not standard_polynomial(*mats).is_zero():
            return False, f"s4 on specialization {k}"
    return True, f"{count} words, {specializations} s4 specializations"


def check_g3(rng, count=5, order=6):
    vs = G3_GENERIC
    X = G3Element.generic(1, vs, order)
    P = p_matrix(X)
    gP = m3.scale(g3_g(X), P.entries, P.cuts)
    if P.power(3).entries != gP:
        return False, "P^3 = g P"
    for k in range(count):
        coords = [random_poly(rng, vs, 3, 3, mindeg=1) for _ in range(3)]
        Xr = G3Element(*coords, order=order)
        Q_ = g3_exp(Xr)
        A, B = baker_AB(g3_g(Xr))
        bad = check_m_chain(Q_, A, B)
        if bad:
            return False, f"M-chain members {bad} fail, sample {k}"
        if g3_recover(Q_) != Xr:
            return False, f"round trip, sample {k}"
    Y = G3Element.generic(2, vs, order)
    prod = g3_exp(X) * g3_exp(Y)
    Z = g3_recover(prod)
    if g3_exp(Z) != prod:
        return False, "recovered product does not reproduce the matrix"
    return True, f"{count} random series, generic product, order {order}"


def check_nilpotent(order=19):
    report = nilpotent_example(order)
    failed = [c["name"] for c in report["checks"] if not c["pass"]]
    if failed:
        return False, "; ".join(failed)
    return True, f"phi = {', '.join(report['phi'][:4])}, ... ({len(report['phi'])} coefficients)"


def check_quotient(rng, classes=range(3, 9), maxdeg=4, order=None):
    """Reduction of the full matrix against the direct computation in the quotient."""
    for c in classes:
        X = random_derivation_element(rng, max(c + 1, order or 0), maxdeg)
        if quotient_reduce(exp_ad(X), c) != exp_ad_mod(X, c):
            return False, f"class {c}"
        if quotient_reduce(quotient_reduce(exp_ad(X), c), c) != quotient_reduce(exp_ad(X), c):
            return False, f"idempotence, class {c}"
    return True, f"classes {min(classes)}..{max(classes)}"


def run_all(rng, order=8):
    """The quick suite behind ``verify``."""
    results = []

    def run(name, fn, *args, **kw):
        try:
            ok, detail = fn(*args, **kw)
        except Exception as exc:  # a crash is a failed check
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, detail))

    run("cubic identity M^3 = g M", check_cubic, rng, 5, order)
    run("A^2 = B^2 g + 2B", check_ab_identity, rng, 5, 20, order)
    run("exp/log round trip", check_roundtrip, rng, 5, order)
    run("compose(x, y) = projected BCH", check_bch_oracle, order)
    run("group law", check_group_law, min(order, 6))
    run("Lie membership and lie_form", check_lie, rng, 10, order)
    run("generic-matrix ground truth", check_generic, rng, 5, 10)
    run("G3 suite", check_g3, rng, 3, min(order, 6))
    run("nilpotent example", check_nilpotent, max(order, 4))
    run("quotient reduction", check_quotient, rng, range(3, max(order, 4) + 1))
    return results
