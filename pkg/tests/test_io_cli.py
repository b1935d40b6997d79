from fractions import Fraction

import pytest

from pvgcolour import io
from pvgcolour.cli import main
from pvgcolour.errors import DuplicatePoints, ParseError
from pvgcolour.geometry import PointSet, build_pvg
from pvgcolour.svg import render_svg


def test_points_round_trip():
    ps = io.parse_points("# corners\n0 0\n1/2 -3\n\n-7/3 4\n")
    assert ps[1].x == Fraction(1, 2) and ps[2].x == Fraction(-7, 3)
    assert io.parse_points(io.format_points(ps)) == ps


@pytest.mark.parametrize("text", ["", "1\n", "1 2 3\n", "a b\n", "1/0 2\n", "1.5 2\n"])
def test_bad_points(text):
    with pytest.raises(ParseError):
        io.parse_points(text)


def test_duplicate_points():
    with pytest.raises(DuplicatePoints):
        io.parse_points("0 0\n2/2 0\n1 0\n")


def test_graph_round_trip():
    g = build_pvg(PointSet([(x, y) for x in range(3) for y in range(2)]))
    text = io.format_graph(g)
    assert text.startswith("6 ")
    assert io.parse_graph(text) == g
    with pytest.raises(ParseError):
        io.parse_graph("3 2\n0 1\n")


def test_colouring_round_trip():
    assert io.parse_colouring(io.format_colouring([2, 0, 1])) == [2, 0, 1]
    with pytest.raises(ParseError):
        io.parse_colouring("0 1\n2 0\n")
    with pytest.raises(ParseError):
        io.parse_colouring("0 1\n0 2\n")


def test_svg_has_every_point_and_edge():
    ps = PointSet([(0, 0), (1, 0), (0, 1)])
    g = build_pvg(ps)
    text = render_svg(ps, g, [0, 1, 2])
    assert text.count("<circle") == 3
    assert text.count("<line") == 3


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write, tmp_path


def test_cli_colour_yes_and_no(files, capsys):
    write, tmp = files
    k5 = write("k5.txt", "0 0\n4 0\n0 4\n4 4\n1 2\n")
    assert main(["colour", k5, "--k", "4"]) == 1
    assert capsys.readouterr().out.strip() == "NO"
    grid = write("grid.txt", "".join(f"{x} {y}\n" for x in range(3) for y in range(3)))
    out = str(tmp / "col.txt")
    assert main(["colour", grid, "--k", "4", "--out", out]) == 0
    assert main(["verify", grid, out]) == 0
    assert main(["colour", grid, "--k", "3"]) == 1


def test_cli_convex_pentagon_and_collinear(files, capsys):
    write, _ = files
    pentagon = write("pent.txt", "0 0\n4 0\n5 3\n2 5\n-1 3\n")
    assert main(["colour", "--k", "4", pentagon]) == 1
    assert capsys.readouterr().out == "NO\n"
    line = write("line.txt", "0 0\n2 2\n1 1\n3 3\n")
    assert main(["colour", "--k", "3", line]) == 0
    assert io.parse_colouring(capsys.readouterr().out) == [0, 0, 1, 1]


def test_cli_verify_rejects_bad_colouring(files, capsys):
    write, _ = files
    pts = write("p.txt", "0 0\n1 0\n")
    col = write("c.txt", "0 0\n1 0\n")
    assert main(["verify", pts, col]) == 1
    assert "INVALID" in capsys.readouterr().out


def test_cli_errors_exit_2(files, capsys):
    write, _ = files
    bad = write("bad.txt", "0 0\n0 x\n")
    assert main(["pvg", bad]) == 2
    assert "ParseError" in capsys.readouterr().err
    cnf = write("f.cnf", "p cnf 2 1\n1 -1 0\n")
    assert main(["reduce-sat", cnf, "--out-points", "/dev/null", "--out-meta", "/dev/null"]) == 2
    assert "NotThreeSat" in capsys.readouterr().err
    big = write("big.txt", "".join(f"{x} {y}\n" for x in range(6) for y in range(5)))
    assert main(["chromatic", big]) == 2
    assert "PreconditionError" in capsys.readouterr().err


def test_cli_chromatic_and_pvg(files, capsys):
    write, _ = files
    grid = write("grid.txt", "".join(f"{x} {y}\n" for x in range(3) for y in range(3)))
    assert main(["chromatic", grid]) == 0
    assert capsys.readouterr().out.split() == ["chromatic", "4", "clique", "4"]
    assert main(["pvg", grid]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "9 28"


def test_cli_reduce_sat_verify(files, capsys):
    write, tmp = files
    cnf = write("f.cnf", "p cnf 3 1\n1 2 3 0\n")
    pts, meta = str(tmp / "z.txt"), str(tmp / "z.json")
    assert main(["reduce-sat", cnf, "--out-points", pts, "--out-meta", meta, "--verify"]) == 0
    out = capsys.readouterr().out
    assert "points: 100 (l1 12, l2 80, l3 8)" in out
    assert "delta -1" in out
    assert len(io.parse_points(open(pts).read())) == 100


def test_cli_svg(files):
    write, tmp = files
    pts = write("p.txt", "0 0\n1 0\n0 1\n")
    out = tmp / "p.svg"
    assert main(["svg", pts, "--out", str(out)]) == 0
    assert out.read_text().startswith("<?xml")
