from fractions import Fraction

import pytest

from shirshov.cli import (ParseError, fmt_element, fmt_presentation, main,
                          parse_element, parse_presentation)
from shirshov.core import Alphabet, Polynomial

CHINESE2 = """\
# defining relations of the rank-2 presentation
kind assoc
gens x1 x2
rel x2*x1*x1 - x1*x2*x1
rel x2*x2*x1 - x2*x1*x2
"""

OPEN = """\
kind assoc
gens y x
rel x*x - y*x
"""

LEIBNIZ = """\
kind dialgebra
gens a b
bracket a a = b
"""

MODULE = """\
kind module
gens x1 x2
mgens v w
rel x1*x1*[v] - x2*[v]
rel x1*[w]
"""

AC = """\
kind ac
gens x1 x2
rel ((x2 x1) x1)
"""


def write(tmp_path, text, name="p.pres"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_parse_presentation_basics():
    P = parse_presentation(CHINESE2)
    assert P.kind == "assoc"
    assert P.alphabet.names == ("x1", "x2")
    assert len(P.relations) == 2
    assert P.relations[0] == Polynomial([((1, 0, 0), 1), ((0, 1, 0), -1)])


def test_parse_normalizes_to_monic():
    P = parse_presentation("kind assoc\ngens x y\nrel 2*x*x - 4*y\n")
    f = P.relations[0]
    assert f.leading_coeff() == 1
    assert f.coeff((1,)) == -2


def test_presentation_round_trip():
    for text in (CHINESE2, OPEN, MODULE, AC):
        P = parse_presentation(text)
        Q = parse_presentation(fmt_presentation(P))
        assert Q.kind == P.kind
        assert Q.alphabet == P.alphabet
        assert Q.mgens == P.mgens
        assert Q.relations == P.relations


def test_parse_element_kinds():
    ab = Alphabet(("x", "y"))
    p = parse_element("1/2*x*y - 3", "assoc", ab)
    assert p.coeff((0, 1)) == Fraction(1, 2)
    assert p.coeff(()) == -3
    assert fmt_element(p, parse_presentation(
        "kind assoc\ngens x y\nrel x\n")) == "1/2*x*y - 3"


def test_parse_element_errors():
    ab = Alphabet(("x", "y"))
    with pytest.raises(ParseError):
        parse_element("x*", "assoc", ab)
    with pytest.raises(ParseError):
        parse_element("x z", "assoc", ab)
    with pytest.raises(ParseError):
        parse_element("", "assoc", ab)
    with pytest.raises(ParseError):
        parse_element("x*y", "dialgebra", ab)  # no center
    with pytest.raises(ParseError):
        parse_element("@x*@y", "dialgebra", ab)  # two centers
    with pytest.raises(ParseError):
        parse_element("x*[v]", "module", ab, ())  # unknown module generator
    with pytest.raises(ParseError):
        parse_element("[v]*x", "module", ab, ("v",))  # generator not last
    with pytest.raises(ParseError):
        parse_element("(x y", "ac", ab)
    with pytest.raises(ParseError):
        parse_element("3", "ac", ab)


def test_parse_errors_report_position():
    try:
        parse_presentation("kind assoc\ngens x y\nrel x**y\n")
    except ParseError as exc:
        assert exc.line == 3
        assert exc.col == 7
    else:
        raise AssertionError("expected a ParseError")


def test_file_level_errors():
    for text in (
            "gens x\nrel x\n",                      # missing kind
            "kind assoc\nkind assoc\ngens x\n",     # duplicate kind
            "kind assoc\nrel x\n",                  # rel before gens
            "kind assoc\ngens x\nrel x - x\n",      # zero relation
            "kind assoc\ngens x\nmgens v\n",        # mgens outside module
            "kind module\ngens x\nrel x*[v]\n",     # rel before mgens
            "kind assoc\ngens x\nbracket x x = x\n",
            "kind nosuch\ngens x\n",
            "kind assoc\ngens x\nfoo bar\n",
            "kind dialgebra\ngens a\nrel @a\nbracket a a = a\n",
    ):
        with pytest.raises(ParseError):
            parse_presentation(text)


def test_check_exit_codes(tmp_path, capsys):
    assert main(["check", write(tmp_path, CHINESE2)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("format: 1\n")
    assert out.strip().endswith("true")
    assert main(["check", write(tmp_path, OPEN)]) == 1
    assert capsys.readouterr().out.strip().endswith("false")


def test_check_bounded_kinds(tmp_path, capsys):
    assert main(["check", write(tmp_path, LEIBNIZ), "--max-deg", "3"]) == 0
    assert "kind: dialgebra" in capsys.readouterr().out
    assert main(["check", write(tmp_path, MODULE)]) == 0
    assert main(["check", write(tmp_path, AC), "--max-deg", "4"]) == 0
    capsys.readouterr()


def test_parse_failure_exit_code(tmp_path, capsys):
    path = write(tmp_path, "kind assoc\ngens x\nrel x + $\n")
    assert main(["check", path]) == 2
    err = capsys.readouterr().err
    assert "line 3" in err


def test_missing_file_is_not_a_crash(tmp_path, capsys):
    assert main(["check", str(tmp_path / "absent.pres")]) == 2
    assert "error" in capsys.readouterr().err


def test_complete_command(tmp_path, capsys):
    out_path = str(tmp_path / "done.pres")
    code = main(["complete", write(tmp_path, OPEN), "--max-deg", "6",
                 "--max-elems", "50", "--out", out_path])
    assert code == 1
    report = capsys.readouterr().out
    assert report.strip().endswith("degree-capped")
    with open(out_path) as fh:
        Q = parse_presentation(fh.read())
    assert len(Q.relations) == 5

    chinese3 = """kind assoc
gens x1 x2 x3
rel x3*x2*x1 - x2*x3*x1
rel x3*x2*x1 - x3*x1*x2
rel x2*x1*x1 - x1*x2*x1
rel x2*x2*x1 - x2*x1*x2
rel x3*x1*x1 - x1*x3*x1
rel x3*x3*x1 - x3*x1*x3
rel x3*x2*x2 - x2*x3*x2
rel x3*x3*x2 - x3*x2*x3
"""
    code = main(["complete", write(tmp_path, chinese3, "c3.pres"),
                 "--max-deg", "6", "--max-elems", "40"])
    assert code == 0
    report = capsys.readouterr().out
    assert "elements: 9" in report
    assert report.strip().endswith("completed")


def test_complete_rejects_other_kinds(tmp_path, capsys):
    code = main(["complete", write(tmp_path, AC), "--max-deg", "4",
                 "--max-elems", "5"])
    assert code == 2
    capsys.readouterr()


def test_complete_budget_exit_code(tmp_path, capsys):
    code = main(["complete", write(tmp_path, OPEN), "--max-deg", "30",
                 "--max-elems", "100000", "--budget-seconds", "1e-9"])
    assert code == 3
    assert "budget" in capsys.readouterr().err


def test_nf_command(tmp_path, capsys):
    code = main(["nf", write(tmp_path, CHINESE2), "--elem",
                 "x2*x1*x1 + 2*x2*x2*x1"])
    assert code == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[-1] == "2*x2*x1*x2 + x1*x2*x1"
    code = main(["nf", write(tmp_path, MODULE), "--elem", "x1*x1*[v]"])
    assert code == 0
    assert capsys.readouterr().out.strip().endswith("x2*[v]")
    code = main(["nf", write(tmp_path, AC), "--elem", "((x2 x1) x1)"])
    assert code == 0
    assert capsys.readouterr().out.strip().endswith("\n0")


def test_irr_command(tmp_path, capsys):
    code = main(["irr", write(tmp_path, CHINESE2), "--max-len", "5",
                 "--count-only"])
    assert code == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[-1] == "1 2 4 6 9 12"
    code = main(["irr", write(tmp_path, CHINESE2), "--max-len", "2"])
    assert code == 0
    out = capsys.readouterr().out
    assert "len 0: 1\n" in out
    assert "len 1: x1 x2\n" in out


def test_cdcheck_command(tmp_path, capsys):
    assert main(["cdcheck", write(tmp_path, CHINESE2), "--max-deg",
                 "4"]) == 0
    out = capsys.readouterr().out
    assert "compositions: true" in out
    assert "deg 4: irr=22 rank=9 total=31 ok" in out
    assert main(["cdcheck", write(tmp_path, OPEN), "--max-deg", "3"]) == 1
    capsys.readouterr()
    assert main(["cdcheck", write(tmp_path, LEIBNIZ), "--max-deg",
                 "3"]) == 0
    capsys.readouterr()


def test_catalog_command(capsys):
    assert main(["catalog", "chinese", "--rank", "3"]) == 0
    out = capsys.readouterr().out
    assert "preset: chinese rank=3" in out
    assert out.strip().endswith("true")
    assert main(["catalog", "chinese", "--rank", "2", "--irr", "5",
                 "--count-only"]) == 0
    assert capsys.readouterr().out.strip().endswith("1 2 4 6 9 12")
    assert main(["catalog", "tensor", "--nx", "2", "--ny", "2",
                 "--cdcheck", "3"]) == 0
    assert "counts: true" in capsys.readouterr().out


def test_dialgebra_file_round_trip(tmp_path, capsys):
    # a bracket file expands to enveloping relations; nf uses them
    code = main(["nf", write(tmp_path, LEIBNIZ), "--elem", "a*@a"])
    assert code == 0
    assert capsys.readouterr().out.strip().endswith("@a*a - @b")
