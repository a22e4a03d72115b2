import pytest
from hypothesis import given, settings, strategies as st

from dimfilter.errors import ParseError, ResourceError
from dimfilter.modules import Presentation
from dimfilter.session import format_session, parse_poly, parse_session
from dimfilter.poly import Ring


def test_basic_session():
    s = parse_session("ring R = QQ[x,y]\nideal I = (x^2, x*y)\nmodule M = quotient I")
    assert list(s.modules) == ["M"]
    x, y = s.ring.gens()
    assert s.module("M").gb == Presentation.quotient_ring([x ** 2, x * y]).gb
    assert s.where("M") == "M (line 3, column 8)"


def test_syntax_error_location():
    with pytest.raises(ParseError) as info:
        parse_session("ideal I = (x +)")
    assert (info.value.line, info.value.column) == (1, 12)
    assert str(info.value).startswith("line 1, column 12")


def test_linear_prime_accepted():
    s = parse_session("ring R = QQ[x,y]\nprime P = (x+y, x-y)")
    assert s.primes["P"].certificate == "linear"


def test_unverifiable_prime_needs_assume():
    text = "ring R = QQ[x,y,z]\nprime P = (x^2 + y^2, z)"
    with pytest.raises(ParseError) as info:
        parse_session(text)
    assert info.value.line == 2
    s = parse_session(text + " assume-prime")
    assert s.primes["P"].certificate == "declared"


@pytest.mark.parametrize("text, line, col", [
    ("ring R = QQ[x,y]\nideal I = (x)\nideal I = (y)", 3, 7),
    ("ring R = QQ[x,y]\nring S = QQ[z]", 2, 6),
    ("ideal I = (x)", 1, 7),
    ("# nothing here", 1, 1),
    ("ring R = Fp(12)[x]", 1, 13),
    ("ring R = QQ[x,y]\nideal I = (x, q)", 2, 15),
    ("ring R = QQ[x,y]\nmodule M = quotient J", 2, 21),
    ("ring R = QQ[x,y]\nmodule M = coker [x, y; x]", 2, 25),
])
def test_semantic_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_session(text)
    assert (info.value.line, info.value.column) == (line, col)


def test_degree_budget():
    with pytest.raises(ResourceError) as info:
        parse_session("ring R = QQ[x]\nideal I = (x^13)")
    assert info.value.budget == "degree"


def test_comments_and_blank_lines():
    s = parse_session("# header\n\nring R = QQ[x] # trailing\nideal I = (x)\n")
    assert list(s.ideals) == ["I"]


def test_division_by_constant():
    R = Ring(["x"])
    assert parse_poly(R, "x/2") == parse_poly(R, "1/2*x")
    with pytest.raises(ParseError) as info:
        parse_poly(R, "1/x")
    assert info.value.column == 2


def test_format_round_trip():
    text = ("ring R = Fp(32003)[x, y, z]\nideal I = (x*y - z^2, x^3)\n"
            "prime P = (x, y)\nprime Q = (x^2 + y^2, z) assume-prime\n"
            "module M = quotient I\nmodule C = coker [x, y; 0, z]\nmodule F = coker [0; 0]\n")
    s = parse_session(text)
    again = parse_session(format_session(s))
    assert format_session(again) == format_session(s)
    for name in s.modules:
        assert s.modules[name].gb == again.modules[name].gb
        assert s.modules[name].rank == again.modules[name].rank
    assert again.primes["Q"].certificate == "declared"


names = st.sampled_from(["x", "y", "z"])
atoms = st.one_of(names, st.integers(0, 9).map(str))


@st.composite
def expressions(draw, depth=0):
    if depth > 2 or draw(st.booleans()):
        base = draw(atoms)
        if draw(st.booleans()):
            base = f"{base}^{draw(st.integers(0, 3))}"
        return base
    a = draw(expressions(depth + 1))
    b = draw(expressions(depth + 1))
    op = draw(st.sampled_from(["+", "-", "*"]))
    return f"({a} {op} {b})"


@settings(max_examples=150, deadline=None)
@given(expressions())
def test_parse_print_parse(expr):
    R = Ring(["x", "y", "z"])
    f = parse_poly(R, expr)
    assert parse_poly(R, str(f)) == f
