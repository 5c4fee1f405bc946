import pytest
from hypothesis import given

from sl2auto import matrix3 as m3
from sl2auto.algebra import Poly, Q, TruncSeries, VarSpec, baker_AB
from sl2auto.errors import ConsistencyError
from sl2auto.g3 import (
    G3_GENERIC,
    G3Element,
    G3Matrix,
    check_m_chain,
    g3_bracket,
    g3_compose,
    g3_exp,
    g3_g,
    g3_recover,
    m_chain,
    p_matrix,
)

from conftest import g3_elements

S = VarSpec.uniform(("s",))
s = Poly.var(S, "s")
ZERO = Poly.zero(S)


def elem(a, b, c, order=6):
    return G3Element(a, b, c, order)


def rows(M):
    return [[M[i, j] for j in range(3)] for i in range(3)]


def test_structure_constants():
    p1, p2, p3 = elem(s, ZERO, ZERO), elem(ZERO, s, ZERO), elem(ZERO, ZERO, s)
    assert g3_bracket(p1, p2) == elem(s * s, ZERO, ZERO)
    assert g3_bracket(p1, p3) == elem(ZERO, 2 * s * s, ZERO)
    assert g3_bracket(p2, p3) == elem(ZERO, ZERO, s * s)


def test_p_matrix_of_p1():
    P = p_matrix(elem(1 + ZERO, ZERO, ZERO))
    assert rows(P) == [[0, -1, 0], [0, 0, -2], [0, 0, 0]]


def test_g_examples():
    assert g3_g(elem(ZERO, 1 + ZERO, ZERO)).poly == 1
    assert g3_g(elem(1 + ZERO, ZERO, ZERO)).poly == 0
    assert g3_g(elem(s, s, s)).poly == -3 * s * s


@given(g3_elements(), g3_elements())
def test_columns_are_brackets(X, E):
    # the column action of P(X) is e -> [e, X]
    assert p_matrix(X).apply(E) == g3_bracket(E, X)


@given(g3_elements())
def test_p_identities(X):
    P = p_matrix(X)
    assert P.trace() == 0
    assert P.power(3) == G3Matrix(m3.scale(g3_g(X), P.entries, P.cuts), P.order)
    assert m3.trace(P.power(2).entries) == 2 * g3_g(X).poly


def test_exp_when_g_vanishes():
    X = elem(s, ZERO, ZERO, 5)
    P = p_matrix(X)
    expected = m3.add(m3.identity(S, P.cuts),
                      m3.add(P.entries, m3.scale(Q(1, 2), P.power(2).entries, P.cuts), P.cuts), P.cuts)
    assert g3_exp(X).entries == expected


def test_exp_rejects_constant_terms():
    with pytest.raises(ValueError):
        g3_exp(elem(1 + s, ZERO, ZERO))


@given(g3_elements(order=6))
def test_recover_roundtrip(X):
    assert g3_recover(g3_exp(X)) == X


@given(g3_elements(order=6))
def test_m_chain_holds(X):
    Q_ = g3_exp(X)
    A, B = baker_AB(g3_g(X))
    assert check_m_chain(Q_, A, B) == []


def test_literal_sixth_member_fails():
    X = G3Element.generic(1, order=5)
    Q_ = g3_exp(X)
    A, B = baker_AB(g3_g(X))
    _, den = m_chain(Q_)[5]
    n = Q_.order
    num = 1 - 2 * Q_[1, 1]
    assert num.mul_trunc(A.poly * A.poly, n) != B.poly.mul_trunc(den, n)
    # its constant term is -1 while M1*M3 has none
    assert num.constant_term() == -1 and den.constant_term() == 0


def test_recover_detects_tampering():
    Q_ = g3_exp(G3Element.generic(1, order=5))
    E = [list(r) for r in Q_.entries]
    E[0][2] = E[0][2] + Poly.var(G3_GENERIC, "x11") ** 2
    with pytest.raises(ConsistencyError):
        g3_recover(G3Matrix(tuple(map(tuple, E)), Q_.order))


def test_generic_composition_low_degrees():
    n = 4
    X, Y = G3Element.generic(1, order=n), G3Element.generic(2, order=n)
    Z = g3_compose(X, Y)
    XY = g3_bracket(X, Y)
    bch3 = (g3_bracket(X, XY) + g3_bracket(Y, g3_bracket(Y, X))).scale(Q(1, 12))
    assert Z.truncate(3) == (X + Y + XY.scale(Q(1, 2)) + bch3).truncate(3)


def test_generic_composition_is_homomorphic():
    n = 4
    X, Y = G3Element.generic(1, order=n), G3Element.generic(2, order=n)
    Z = g3_compose(X, Y)
    assert g3_exp(Z) == g3_exp(X) * g3_exp(Y)


@given(g3_elements(order=5), g3_elements(order=5), g3_elements(order=5))
def test_composition_associative(X, Y, W):
    assert g3_compose(g3_compose(X, Y), W) == g3_compose(X, g3_compose(Y, W))


def test_g_series_order():
    assert isinstance(g3_g(G3Element.generic(2)), TruncSeries)
