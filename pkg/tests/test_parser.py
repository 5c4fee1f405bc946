import pytest
from hypothesis import given

from sl2auto.algebra import Q, VarSpec, tuv_vars
from sl2auto.inner import compose
from sl2auto.lie import lie_form, lie_membership
from sl2auto.parser import (
    AssocProduct,
    Bracket,
    CentralVar,
    Generator,
    ParseError,
    ScalarMul,
    Sum,
    ast_to_text,
    parse,
    parse_poly,
    parse_w,
)
from sl2auto.walgebra import WElement, w_bracket

from conftest import lie_decomps, polys, welements

N = 8
t, u, v = tuv_vars()
X, Y = Generator("x"), Generator("y")


def test_bracket():
    assert parse("[x,y,x]") == Bracket((X, Y, X))


def test_sum_with_scalars():
    expected = Sum((ScalarMul(Q(1, 2), Bracket((X, Y))),
                    ScalarMul(Q(-1), AssocProduct((CentralVar("t"), X)))))
    assert parse("1/2*[x,y] - t*x") == expected


@pytest.mark.parametrize("text", ["[x]", "x +", "x y", "(x", "[x,y", "1/0*x", "x^", ""])
def test_syntax_errors(text):
    with pytest.raises(ParseError):
        parse(text)


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse("x +\n  q")
    assert (info.value.line, info.value.col) == (2, 3)
    assert "q" in str(info.value)


def test_brackets_are_left_normed():
    assert parse_w("[x,y,x]", N) == w_bracket(w_bracket(WElement.x(N), WElement.y(N)), WElement.x(N))


def test_middle_dot_and_powers():
    assert parse_w("1/2·[x,y]", N) == parse_w("1/2*[x,y]", N)
    assert parse_w("x^2", N) == WElement.central(t * Q(1, 2), N)


def test_welement_text_parses_back():
    e = WElement(t, 1 + u, -v, t * v - Q(2, 3), N)
    assert parse_w(str(e), N) == e


@given(welements(order=N))
def test_printed_elements_round_trip(e):
    text = str(e)
    assert parse_w(text, N) == e
    assert str(parse_w(text, N)) == text


@given(lie_decomps(order=N))
def test_printed_lie_forms_round_trip(d):
    text = str(lie_form(d))
    assert parse_w(text, N) == d.to_welement()
    assert str(lie_form(lie_membership(parse_w(text, N)))) == text


def test_compose_output_is_stable():
    Z = compose(WElement.x(5), WElement.y(5))
    for text in (str(Z), str(lie_form(lie_membership(Z)))):
        once = ast_to_text(parse(text))
        assert ast_to_text(parse(once)) == once
        assert parse_w(once, 5) == Z


@given(welements(order=N))
def test_ast_text_is_a_fixed_point(e):
    node = parse(str(e))
    assert parse(ast_to_text(node)) == node


@given(polys())
def test_parse_poly_round_trip(p):
    assert parse_poly(str(p), p.vs) == p


def test_parse_poly_free_variables():
    p = parse_poly("2*a*b - b^2 + 1/3")
    assert p.vs == VarSpec.uniform(("a", "b"))
    with pytest.raises(ParseError):
        parse_poly("[a,b]")


@pytest.mark.parametrize("text", ["(1 + v) + [x,y]", "x + (y + t*x)", "-(x + y) - 2*(x - y)"])
def test_nested_sums_keep_their_shape(text):
    node = parse(text)
    assert parse(ast_to_text(node)) == node
