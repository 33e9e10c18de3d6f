import json
import random
from fractions import Fraction

import pytest

from qcartan.cli import main
from qcartan.exprparse import Evaluator, parse_expr, render_ast
from qcartan.uqalgebra import Algebra


def run(args, capsys):
    rc = main(args)
    out = capsys.readouterr().out
    return rc, out


def test_parse_examples():
    ast = parse_expr("B2 B1 - q B1 B2")
    assert ast[0] == "sum" and len(ast[1]) == 2
    prod = ast[1][0][1]
    assert prod == ("prod", (("gen", "B", 2), ("gen", "B", 1)))
    ast = parse_expr("[B3,[B2,B1]_q]_q")
    assert ast[0] == "comm" and ast[2][0] == "comm"
    assert parse_expr("kappa(E1)") == ("func", "kappa", ("gen", "E", 1))


def test_parse_errors():
    with pytest.raises(SyntaxError):
        parse_expr("E1 +")
    with pytest.raises(SyntaxError):
        parse_expr("@")
    with pytest.raises(SyntaxError):
        parse_expr("[E1 E2]")


def _random_ast(rng, depth=3):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([
            ("num", Fraction(rng.randint(1, 5), rng.randint(1, 3))),
            ("q",),
            ("gen", rng.choice("EF"), rng.randint(1, 2)),
            ("K1", rng.randint(1, 2), rng.choice([1, -1])),
            ("K", (Fraction(rng.randint(-2, 2)), Fraction(rng.randint(-2, 2)))),
        ])
    kind = rng.choice(["sum", "prod", "comm", "func", "pow", "ad"])
    if kind == "sum":
        return ("sum", tuple((rng.choice("+-"), _random_ast(rng, depth - 1))
                             for _ in range(2)))
    if kind == "prod":
        return ("prod", tuple(_random_ast(rng, depth - 1) for _ in range(2)))
    if kind == "comm":
        return ("comm", _random_ast(rng, depth - 1),
                _random_ast(rng, depth - 1), ("q",))
    if kind == "func":
        return ("func", rng.choice(["kappa", "sigma", "phi", "phiP"]),
                _random_ast(rng, depth - 1))
    if kind == "pow":
        return ("pow", ("gen", "F", rng.randint(1, 2)), rng.randint(1, 3))
    return ("ad", (("gen", "E", rng.randint(1, 2)),),
            _random_ast(rng, depth - 1))


def test_render_parse_roundtrip():
    # parse-render-parse is stable on parsed trees
    rng = random.Random(99)
    for _ in range(100):
        text = render_ast(_random_ast(rng))
        first = parse_expr(text)
        second = parse_expr(render_ast(first))
        assert second == first


def test_roundtrip_evaluates_equal():
    rng = random.Random(3)
    alg = Algebra("A", 2)
    ev = Evaluator(alg)
    for _ in range(25):
        ast = _random_ast(rng, depth=2)
        text = render_ast(ast)
        assert ev.run(parse_expr(text)) == ev.run(ast)


def test_normal_form_command(capsys):
    rc, out = run(["normal-form", "--family", "A", "--rank", "2",
                   "--expr", "E1 F1"], capsys)
    assert rc == 0
    assert "F1 E1" in out
    rc, out = run(["normal-form", "--family", "A", "--rank", "2",
                   "--expr", "E1 F1", "--json"], capsys)
    assert rc == 0
    assert json.loads(out)["terms"]


def test_equal_command(capsys):
    rc, _ = run(["equal", "--family", "A", "--rank", "2",
                 "--lhs", "E1 F1 - F1 E1",
                 "--rhs", "(Ki1 - Ki-1) (q - q^-1)^-1"], capsys)
    assert rc == 0
    rc, _ = run(["equal", "--family", "A", "--rank", "2",
                 "--lhs", "E1", "--rhs", "F1"], capsys)
    assert rc == 1


def test_equal_section82(capsys):
    rc, _ = run([
        "equal", "--pair", "AIII", "--n", "2",
        "--lhs", "B2 B1 - q B1 B2 - (q^-1 K[1,-1] - K[-1,1]) (q - q^-1)^-1"
                 " - (1+q)^-1",
        "--rhs", "(F2 F1 - q F1 F2) + q^-2 (E1 E2 - q E2 E1) K[-1,-1]"
                 " + (1+q)^-1 (K[-1,-1] - 1) + (q^-1 - q) F1 E1 Ki-2"],
        capsys)
    assert rc == 0


def test_theta_system_command(capsys):
    rc, out = run(["theta-system", "--pair", "AIII", "--n", "5", "--r", "2",
                   "--json"], capsys)
    assert rc == 0
    data = json.loads(out)
    assert data["cases"] == [3, 3]
    assert all(data["checks"].values())


def test_classical_command(capsys):
    rc, out = run(["classical-cartan", "--pair", "BI", "--n", "3", "--r", "3",
                   "--verify"], capsys)
    assert rc == 0
    assert "pass" in out


def test_member_command(capsys):
    rc, _ = run(["member", "--pair", "AIII", "--n", "2", "--expr", "B1"],
                capsys)
    assert rc == 0
    rc, _ = run(["member", "--pair", "AIII", "--n", "2", "--expr", "F1"],
                capsys)
    assert rc == 1


def test_cartan_command(capsys):
    rc, out = run(["cartan", "--pair", "AIII", "--n", "2", "--j", "1",
                   "--json"], capsys)
    assert rc == 0
    data = json.loads(out)
    assert data[0]["checks"]["kappa_pairing"]


def test_verify_command(capsys):
    rc, _ = run(["verify", "all", "--pair", "AIII", "--n", "2"], capsys)
    assert rc == 0


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["normal-form"])
    assert exc.value.code == 2


def test_bad_expression_exit_code(capsys):
    rc = main(["normal-form", "--family", "A", "--rank", "2",
               "--expr", "E9"])
    assert rc == 2


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "session.cfg"
    cfg.write_text("pair = AIII\nn = 2\nr = 1\n")
    rc, _ = run(["member", "--config", str(cfg), "--expr", "B1"], capsys)
    assert rc == 0
