from itertools import product

from hypothesis import given

from sl2auto.algebra import TUV, Poly, Q, tuv_vars
from sl2auto.generic import eval_word
from sl2auto.walgebra import (
    WElement,
    from_word,
    w_ad_power,
    w_bracket,
    w_eval_generic,
    w_mul,
)

from conftest import welements

N = 8
t, u, v = tuv_vars()
x, y, z = WElement.x(N), WElement.y(N), WElement.z(N)


def test_table_entries():
    assert x * x == WElement.central(t * Q(1, 2), N)
    assert y * y == WElement.central(u * Q(1, 2), N)
    assert x * y == (WElement.central(v, N) + z).scale(Q(1, 2))
    assert z * z == WElement.central(v * v - t * u, N)


def test_lie_relations():
    assert w_bracket(x, y) == z
    assert w_bracket(z, x) == (x.scale(v) - y.scale(t)).scale(2)
    assert w_bracket(z, y) == (x.scale(u) - y.scale(v)).scale(2)


def test_ad_powers_with_corrected_exponent():
    for k in (1, 2, 3):
        assert w_ad_power(x, y, 2 * k) == (x.scale(u) - y.scale(v)).scale(u ** (k - 1) * 2 ** k)
        # the odd case carries u^k
        assert w_ad_power(x, y, 2 * k + 1) == z.scale(u ** k * 2 ** k)
        assert w_ad_power(y, x, 2 * k + 1) == z.scale(-(t ** k) * 2 ** k)


def test_all_short_words_match_generic_matrices():
    count = 0
    for n in range(1, 7):
        for w in product("xy", repeat=n):
            w = "".join(w)
            assert w_eval_generic(from_word(w)) == eval_word(w), w
            count += 1
    assert count == 126


def test_weak_identity_in_w():
    assert from_word("xxy") == from_word("yxx")


def test_truncation_per_component():
    e = WElement(t, t * t, u, v, 3)
    assert e.p0 == t and e.px == 0 and e.py == u and e.pz == 0


@given(welements(), welements(), welements())
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(welements(), welements())
def test_bracket_antisymmetric(a, b):
    assert w_bracket(a, b) == -w_bracket(b, a)


@given(welements(order=6), welements(order=6), welements(order=6))
def test_jacobi(a, b, c):
    total = w_bracket(w_bracket(a, b), c) + w_bracket(w_bracket(b, c), a) + w_bracket(w_bracket(c, a), b)
    assert total.is_zero()


@given(welements(order=5, maxdeg=2), welements(order=5, maxdeg=2))
def test_product_matches_matrices(a, b):
    # the exact (untruncated) product is visible at low degree
    lhs = w_eval_generic(a * b)
    rhs = w_eval_generic(a) * w_eval_generic(b)
    diff = lhs - rhs
    for p in (diff.a11, diff.a12, diff.a21, diff.a22):
        assert p.truncate(5) == 0


@given(welements())
def test_json_roundtrip(e):
    assert WElement.from_json(e.to_json()) == e


def test_text():
    e = WElement(Poly.zero(TUV), 1 + t, -u, Poly.const(TUV, Q(1, 2)), N)
    assert str(e) == "(1 + t)·x - u·y + 1/2·[x,y]"
    assert str(WElement.zero(N)) == "0"
