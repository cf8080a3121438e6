import json

import pytest

from newtonsing.algebra import QQ, prime_field
from newtonsing.bivar import BivarPoly
from newtonsing.cli import (CSV_HEADER, diagram_svg, main, parse_expr,
                            parse_poly, poly_to_expr)
from newtonsing.errors import ParseError
from newtonsing.newton import newton_diagram

F3 = prime_field(3)


def test_parse_examples():
    f = parse_poly("x*(x-y)^2+y^7", 3)
    assert f == BivarPoly(F3, {(3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 7): 1})
    assert parse_poly("x+ x*(-1)", 3).is_zero()
    assert parse_poly("3*x^2+y", 3) == BivarPoly(F3, {(0, 1): 1})
    assert parse_poly("-x + x", 0).is_zero()
    assert parse_poly("2", 5) == BivarPoly(prime_field(5), {(0, 0): 2})


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as err:
        parse_poly("x + @", 3)
    assert "position 4" in str(err.value)
    with pytest.raises(ParseError):
        parse_poly("x^-2", 3)
    with pytest.raises(ParseError):
        parse_poly("x*(y", 3)
    with pytest.raises(ParseError):
        parse_poly("", 3)


def test_parse_print_round_trip():
    for text, p in [("x*(x-y)^2+y^7", 3), ("x^3+x*y+y^3", 3),
                    ("(x+y)^2+y^3", 7), ("x^2+y^5", 0),
                    ("2*x^2 - 3*y + x*y^4", 0)]:
        f = parse_poly(text, p)
        assert parse_poly(poly_to_expr(f), p) == f


def test_expr_ast_shape():
    assert parse_expr("x") == ("x",)
    assert parse_expr("x^2") == ("^", ("x",), 2)
    assert parse_expr("x+y") == ("+", ("x",), ("y",))


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_json(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--char", "3",
                           "--poly", "x*(x-y)^2+y^7", "--json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["mu"], doc["delta"], doc["r"], doc["wvc"]) == (8, 5, 3, 0)
    assert doc["flags"]["innd"] is False


def test_invariants_table(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--char", "3",
                           "--poly", "x^3+x*y+y^3")
    assert code == 0
    assert "mu               1" in out
    assert "innd             True" in out


def test_diagram_command(capsys, tmp_path):
    svg_path = tmp_path / "diagram.svg"
    code, out, _ = run_cli(capsys, "diagram", "--char", "3",
                           "--poly", "x^3+x*y+y^3", "--svg", str(svg_path))
    assert code == 0
    assert "(0, 3) (1, 1) (3, 0)" in out
    text = svg_path.read_text()
    assert text.startswith("<svg") and "</svg>" in text


def test_classify_json(capsys):
    code, out, _ = run_cli(capsys, "classify", "--char", "7",
                           "--poly", "(x+y)^2+y^3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["wnnd"] is False and doc["whnnd"] is True


def test_resolve_json(capsys):
    code, out, _ = run_cli(capsys, "resolve", "--char", "3",
                           "--poly", "x*(x-y)^2+y^7", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["delta"] == 5 and doc["r"] == 3
    assert doc["tree"]["mult"] == 3


def test_exit_codes(capsys):
    code, _, err = run_cli(capsys, "invariants", "--char", "3",
                           "--poly", "x + @")
    assert code == 1 and "position" in err
    code, _, err = run_cli(capsys, "invariants", "--char", "3",
                           "--poly", "x+ x*(-1)")
    assert code == 2
    code, _, err = run_cli(capsys, "resolve", "--char", "0",
                           "--poly", "x^2+y^3")
    assert code == 2
    code, _, err = run_cli(capsys, "resolve", "--char", "3",
                           "--poly", "x^2*(x+y)")
    assert code == 2
    code, _, err = run_cli(capsys, "invariants", "--char", "6",
                           "--poly", "x")
    assert code == 2
    code, _, err = run_cli(capsys, "nonsense")
    assert code == 1


def test_batch_csv_row_count(capsys, tmp_path):
    src = tmp_path / "polys.txt"
    src.write_text("x^2+y^5\nbroken((\n\nx*(x-y)^2+y^7\n")
    code, out, err = run_cli(capsys, "batch", "--char", "3",
                             "--input", str(src), "--csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 4
    assert "line 2" in err and "line 3" in err
    good = lines[1].split(",")
    assert good[0] == "x^2+y^5" and good[2] == "4"


def test_batch_jsonl(capsys, tmp_path):
    src = tmp_path / "polys.txt"
    src.write_text("x^2+y^5\nx*y\n")
    code, out, _ = run_cli(capsys, "batch", "--char", "5", "--input", str(src))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    docs = [json.loads(line) for line in lines]
    assert docs[0]["poly"] == "x^2+y^5"
    assert docs[1]["mu"] == 1


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify", "--chars", "3", "--samples", "10",
                           "--seed", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["failures"] == []


def test_svg_contains_hatch_for_inner_cone():
    f = parse_poly("x*(x-y)^2+y^7", 3)
    text = diagram_svg(f, newton_diagram(f))
    assert 'url(#hatch)' in text and text.count("<svg") == 1
