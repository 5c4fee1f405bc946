from math import factorial

import pytest
from hypothesis import given, strategies as st

from sl2auto import matrix3 as m3
from sl2auto.algebra import TUV, Poly, Q, TruncSeries, baker_AB, tuv_vars
from sl2auto.errors import ConsistencyError
from sl2auto.inner import (
    AutMatrix,
    ad_matrix,
    apply_aut,
    compose,
    exp_ad,
    exp_ad_mod,
    g_of,
    log_aut,
    quotient_reduce,
    row_cuts,
)
from sl2auto.walgebra import WElement, w_bracket, w_mul

from conftest import derivation_elements, welements

N = 8
t, u, v = tuv_vars()
w = v * v - t * u
x, y, z = WElement.x(N), WElement.y(N), WElement.z(N)
ZERO = Poly.zero(TUV)


def rows(M):
    return [[M[i, j] for j in range(3)] for i in range(3)]


def test_ad_matrix_examples():
    assert rows(ad_matrix(x)) == [[0, 0, 2 * v], [0, 0, -2 * t], [0, -1, 0]]
    assert rows(ad_matrix(z)) == [[-2 * v, -2 * u, 0], [2 * t, 2 * v, 0], [0, 0, 0]]


def test_ad_matrix_rejects_scalar_part():
    with pytest.raises(ValueError):
        ad_matrix(x + 1)


def test_g_examples():
    assert g_of(x).poly == 2 * t
    assert g_of(z).poly == 4 * w


@given(derivation_elements(order=N), welements(order=N))
def test_column_action_is_bracket(X, e):
    # ad X acts on the right: e -> [e, X]; only central coefficients enter
    M = ad_matrix(X, N)
    e = WElement(ZERO, e.px, e.py, e.pz, N)
    col = (e.px, e.py, e.pz)
    image = [sum((M[i, j] * col[j] for j in range(3)), ZERO) for i in range(3)]
    assert WElement(ZERO, *image, order=N) == w_bracket(e, X).truncate(N)


@given(derivation_elements(order=10))
def test_cubic_identity(X):
    M = ad_matrix(X)
    assert M.power(3) == m3.scale(g_of(X), M.entries, M.cuts)


@given(derivation_elements(order=10))
def test_traces(X):
    M = ad_matrix(X)
    assert M.trace() == 0
    n = min(M.cuts)
    assert m3.trace(M.power(2)).truncate(n) == (2 * g_of(X)).poly.truncate(n)


def test_exp_of_zero():
    assert exp_ad(WElement.zero(6)) == AutMatrix.identity(7)


def test_exp_of_x_column_two():
    Q_ = exp_ad(x)
    A, B = baker_AB(TruncSeries(2 * t, N + 2))
    cx, cy, cz = Q_.cuts
    assert Q_[0, 1] == (-2 * B.poly * v).truncate(cx)
    assert Q_[1, 1] == (1 + 2 * B.poly * t).truncate(cy)
    assert Q_[2, 1] == (-A.poly).truncate(cz)


def test_exp_of_x_against_direct_summation():
    # sum_n y (ad x)^n / n!
    total, term = y, y
    for n in range(1, N + 1):
        term = w_bracket(term, x)
        total = total + term.scale(Q(1, factorial(n)))
    assert apply_aut(exp_ad(x, N), y) == total


@given(derivation_elements(order=N))
def test_trace_formula(X):
    Q_ = exp_ad(X)
    assert (Q_.trace() - 3).truncate(min(Q_.cuts)) == (2 * Q_.B * Q_.g).poly.truncate(min(Q_.cuts))


@given(derivation_elements(order=N))
def test_ab_identity_on_random_x(X):
    Q_ = exp_ad(X)
    A, B, g = Q_.A, Q_.B, Q_.g
    assert (A * A - B * B * g - B * 2).poly == 0


@given(derivation_elements(order=6, maxdeg=3), welements(order=6, maxdeg=3), welements(order=6, maxdeg=3))
def test_apply_is_multiplicative(X, e1, e2):
    Q_ = exp_ad(X, 6)
    assert apply_aut(Q_, w_mul(e1, e2)) == w_mul(apply_aut(Q_, e1), apply_aut(Q_, e2))


def test_apply_identity_and_centre():
    e = WElement(t, 1 + u, v, w, N)
    assert apply_aut(AutMatrix.identity(N), e) == e
    assert apply_aut(exp_ad(x + z), WElement.central(t * u, N)) == WElement.central(t * u, N)


@given(derivation_elements(order=N))
def test_exp_log_roundtrip(X):
    assert log_aut(exp_ad(X)) == X


@given(derivation_elements(order=7))
def test_log_without_cache_recomputes_g(X):
    Q_ = exp_ad(X)
    bare = AutMatrix(Q_.entries, Q_.cuts, Q_.order)
    assert log_aut(bare) == X


def test_log_of_identity():
    assert log_aut(AutMatrix.identity(N)) == WElement.zero(N - 1)


def test_log_detects_tampering():
    Q_ = exp_ad(x + y.scale(2), 7)
    E = [list(r) for r in Q_.entries]
    E[0][2] = E[0][2] + t
    with pytest.raises(ConsistencyError):
        log_aut(AutMatrix(tuple(map(tuple, E)), Q_.cuts, Q_.order))


def test_json_roundtrip():
    Q_ = exp_ad(x + z.scale(v), N)
    back = AutMatrix.from_json(Q_.to_json())
    assert back == Q_ and back.g == Q_.g


def test_compose_inverse():
    assert compose(x, -x) == WElement.zero(N)


def test_compose_low_degree_terms():
    Z = compose(WElement.x(4), WElement.y(4))
    expected = (WElement.x(4) + WElement.y(4) + WElement.z(4).scale(Q(1, 2))
                - (WElement.x(4).scale(v) - WElement.y(4).scale(t)).scale(Q(1, 6))
                + (WElement.x(4).scale(u) - WElement.y(4).scale(v)).scale(Q(1, 6))
                - WElement.z(4).scale(v * Q(1, 12)))
    assert Z == expected


def test_compose_associative():
    assert compose(compose(x, y), x) == compose(x, compose(y, x))


@given(derivation_elements(order=6, maxdeg=2), derivation_elements(order=6, maxdeg=2))
def test_homomorphism(X, Y):
    Z = compose(X, Y)
    assert exp_ad(Z, 6) == exp_ad(X, 6) * exp_ad(Y, 6)


def test_product_order_convention():
    # columns hold images and automorphisms act on the right, so the
    # composition "X then Y" is the plain product in the reverse order
    Q1, Q2 = exp_ad(x), exp_ad(y)
    assert Q1 * Q2 == Q2 @ Q1
    assert log_aut(Q1 @ Q2) == compose(y, x)


def test_quotient_example():
    q = quotient_reduce(exp_ad(WElement.x(4)), 3)
    assert [q[i, 1] for i in range(3)] == [-v, 1 + t, -1 - Q(1, 3) * t]


def test_quotient_keeps_linear_terms_only_for_class_3():
    q = quotient_reduce(exp_ad(x + y + z), 3)
    for i in range(3):
        for j in range(3):
            assert q[i, j].degree() <= 2


@given(derivation_elements(order=9, maxdeg=4), st.integers(3, 8))
def test_quotient_matches_direct_computation(X, c):
    assert quotient_reduce(exp_ad(X.truncate(c + 1)), c) == exp_ad_mod(X.truncate(c + 1), c)


@given(derivation_elements(order=8), st.integers(2, 8))
def test_quotient_idempotent(X, c):
    q = quotient_reduce(exp_ad(X), c)
    assert quotient_reduce(q, c) == q


def test_quotient_rejects_class_one():
    with pytest.raises(ValueError):
        quotient_reduce(exp_ad(x), 1)


def test_row_cuts():
    assert row_cuts(8) == (7, 7, 6)
    assert exp_ad(x).cuts == (8, 8, 7)
