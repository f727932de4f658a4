import json

import pytest

from charhopf import Engine, EngineConfig, ExpressionError, from_json, render
from charhopf.errors import ModeError, UndefinedScaledElement
from charhopf.hopf import coproduct
from charhopf.parser import BinOp, Call, parse, parse_scalar
from charhopf.scalars import var

E = Engine()
G = Engine(EngineConfig(mode="g2"))


def test_ast_shapes():
    assert isinstance(parse("bracket(x1,x2)"), Call)
    assert parse("serreL(1,2,3)").name == "serreL"
    node = parse("x1*x2 - x2*x1")
    assert isinstance(node, BinOp) and node.op == "-"


def test_evaluation(A):
    assert E.parse("serreL(1,2,1)") == A.x(1) * A.x(2) - var("p12") * A.x(2) * A.x(1)
    assert E.parse("bracket(x1,x2)") == E.parse("x1*x2 - p12 x2 x1")
    assert E.parse("serreL(1,2,3)") == A.serre_left(1, 2, 3)
    assert E.parse("serreR(2,2,1)") == A.serre_right(2, 2, 1)
    assert E.parse("bracedP(2,3)") == A.braced_power(2, 3)
    assert E.parse("bracedR(2,1,1)") == A.braced_right(2, 1, 1)
    assert E.parse("g(1) x1") == A.g(1) * A.x(1) == E.parse("g1x1")
    assert E.parse("x2^3") == A.x(2) ** 3
    assert E.parse("q") == var("p22")
    assert E.parse("(1 - q^2)/(1 - q)") == 1 + var("p22")


def test_precedence_and_whitespace():
    assert E.parse("x1 + x2 * 2") == E.parse("x1+2x2")
    assert E.parse("-x1^2") == E.parse("-(x1 x1)")
    assert E.parse("  3 / 4 ") == var("p22") ** 0 * 3 / 4


def test_g2_names_resolve():
    assert G.parse("p21") == var("q") ** -3 * var("p12") ** -1
    assert G.parse("p11") == var("q") ** 3


@pytest.mark.parametrize("text, pos", [("x1 +", 4), ("x1 $ x2", 3), ("serreL(1,2", 10),
                                       ("(x1", 3), ("x1^x2", 3)])
def test_syntax_errors_have_positions(text, pos):
    with pytest.raises(ExpressionError, match=f"position {pos}") as exc:
        E.parse(text)
    assert exc.value.position == pos


def test_index_errors():
    with pytest.raises(ExpressionError, match="index 3 out of range"):
        E.parse("x3")
    with pytest.raises(ExpressionError, match="out of range"):
        E.parse("serreL(1,3,2)")
    with pytest.raises(ExpressionError, match="takes 3 arguments"):
        E.parse("serreL(1,2)")


def test_engine_errors_propagate():
    with pytest.raises(ModeError, match="g2top requires g2 mode"):
        E.parse("g2top()")
    with pytest.raises(UndefinedScaledElement, match="1 - q\\^0"):
        G.parse("bracedL(1,2,4)")
    with pytest.raises(ExpressionError, match="division by a non-scalar"):
        E.parse("x1/x2")


def test_config_guards():
    with pytest.raises(ValueError, match="g2 mode requires n = 2"):
        EngineConfig(n=3, mode="g2")
    assert Engine(EngineConfig(n=3)).parse("x3 x1").degree() == (1, 0, 1)


@pytest.mark.parametrize("text", ["x1", "x1x2 - p12*x2x1", "serreL(1,2,3)", "bracedL(1,2,2)",
                                  "g1^2g2^-1x1 + 1/3*x2", "(1+q)/(1-p12)*x1^2x2", "0",
                                  "bracedR(2,3,1)"])
def test_text_round_trip(text):
    v = E.parse(text)
    assert E.parse(render(v)) == v
    assert render(E.parse(render(v))) == render(v)


def test_g2_round_trip():
    u = G.parse("g2top()")
    assert G.parse(render(u)) == u


@pytest.mark.parametrize("text", ["x1", "bracedL(1,2,2)", "g1 x2 + p21^-2/(1-q) x1x1"])
def test_json_round_trip(text):
    v = E.parse(text)
    assert from_json(render(v, "json"), E.algebra) == v
    t = coproduct(v)
    assert from_json(render(t, "json"), E.algebra) == t
    s = E.shuffle.omega(E.parse("x1x2"))
    assert from_json(render(s, "json"), E.algebra, E.shuffle) == s


def test_json_schema():
    doc = json.loads(render(coproduct(E.parse("x1")), "json"))
    term = doc["terms"][0]
    assert set(term) == {"coeff", "leftGroup", "leftWord", "rightGroup", "rightWord"}
    assert term["coeff"] == {"num": "1", "den": "1"}
    doc = json.loads(render(E.parse("2*g1x2"), "json"))
    assert doc["terms"] == [{"coeff": {"num": "2", "den": "1"}, "group": [1, 0], "word": [2]}]


def test_render_examples():
    d = coproduct(E.parse("x1"))
    assert render(d) == "x1 (x) 1 + g1 (x) x1"
    assert render(d, "latex") == r"x_1\otimes 1+g_1\otimes x_1"
    zero = E.parse("x1 - x1")
    assert render(zero) == render(zero, "latex") == "0"
    assert json.loads(render(zero, "json"))["terms"] == []
    assert render(E.parse("p12 g1^2g2^3"), "latex") == "p_{12}g_1^2g_2^3"


def test_parse_scalar_is_unaliased():
    assert parse_scalar("q^2 - p22") == var("q") ** 2 - var("p22")
