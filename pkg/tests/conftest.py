import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from sl2auto.algebra import TUV, Poly, Q
from sl2auto.g3 import G3_GENERIC, G3Element
from sl2auto.lie import LieDecomp
from sl2auto.walgebra import WElement

settings.register_profile(
    "default", max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


rationals = st.builds(lambda n, d: Q(n, d), st.integers(-6, 6), st.integers(1, 4))
nonzero_rationals = rationals.filter(bool)


@st.composite
def polys(draw, vs=TUV, maxdeg=4, max_terms=4, mindeg=0):
    out = Poly.zero(vs)
    n = len(vs.names)
    for _ in range(draw(st.integers(0, max_terms))):
        exp = tuple(draw(st.lists(st.integers(0, maxdeg), min_size=n, max_size=n)))
        if not mindeg <= vs.degree(exp) <= maxdeg:
            continue
        out = out + Poly.monomial(vs, exp, draw(rationals))
    return out


def welements(order=6, maxdeg=4, p0=True):
    zero = st.just(Poly.zero(TUV))
    return st.builds(lambda a, b, c, d: WElement(a, b, c, d, order),
                     polys(maxdeg=maxdeg) if p0 else zero,
                     polys(maxdeg=maxdeg), polys(maxdeg=maxdeg), polys(maxdeg=maxdeg))


def derivation_elements(order=6, maxdeg=4):
    return welements(order, maxdeg, p0=False)


def lie_decomps(order=8, maxdeg=5):
    return st.builds(lambda al, be, a, b, c: LieDecomp(al, be, a, b, c, order),
                     rationals, rationals, polys(maxdeg=maxdeg), polys(maxdeg=maxdeg),
                     polys(maxdeg=maxdeg))


def g3_elements(order=5, vs=G3_GENERIC):
    coord = polys(vs=vs, maxdeg=3, max_terms=3, mindeg=1)
    return st.builds(lambda a, b, c: G3Element(a, b, c, order), coord, coord, coord)


# acceptance lines, printed at the end of the run

ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
