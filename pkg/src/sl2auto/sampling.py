"""Seeded random inputs for the verify suite, the scripts and the acceptance run."""

from __future__ import annotations

import random

from .algebra import TUV, Poly, Q
from .lie import LieDecomp
from .walgebra import WElement


def random_rational(rng, span=5):
    num = rng.randint(-span, span)
    den = rng.randint(1, 3)
    return Q(num, den)


def random_poly(rng, vs, maxdeg, nterms=4, mindeg=0):
    """Sparse random polynomial with monomials of weighted degree in [mindeg, maxdeg]."""
    out = Poly.zero(vs)
    if maxdeg < mindeg:
        return out
    for _ in range(nterms):
        exp = [0] * len(vs.names)
        target = rng.randint(mindeg, maxdeg)
        deg = 0
        for _ in range(4 * len(vs.names)):
            i = rng.randrange(len(vs.names))
            if deg + vs.weights[i] > target:
                continue
            exp[i] += 1
            deg += vs.weights[i]
        out = out + Poly.monomial(vs, tuple(exp), random_rational(rng))
    return out


def random_derivation_element(rng, order, maxdeg=4, nterms=3):
    """Random X = a x + b y + c [x, y] with p0 = 0."""
    a = random_poly(rng, TUV, maxdeg, nterms)
    b = random_poly(rng, TUV, maxdeg, nterms)
    c = random_poly(rng, TUV, maxdeg, nterms)
    return WElement(Poly.zero(TUV), a, b, c, order)


def random_lie_decomp(rng, order, maxdeg=6, nterms=3):
    return LieDecomp(random_rational(rng), random_rational(rng),
                     random_poly(rng, TUV, maxdeg, nterms),
                     random_poly(rng, TUV, maxdeg, nterms),
                     random_poly(rng, TUV, maxdeg, nterms), order)


def make_rng(seed):
    return random.Random(seed)
