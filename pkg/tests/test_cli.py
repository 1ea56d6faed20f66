import pytest

from strong_transitivity.cli import main
from strong_transitivity.formats import parse_graph, parse_partition
from strong_transitivity.generators import gen_complete_bipartite
from strong_transitivity.verify import verify_strong_transitive


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


@pytest.fixture
def p3(tmp_path):
    return write(tmp_path, "p3.txt", "3 2\n0 1\n1 2")


def test_solve_examples(tmp_path, capsys):
    p6 = write(tmp_path, "p6.txt", "6 5\n0 1\n1 2\n2 3\n3 4\n4 5")
    wit = str(tmp_path / "w.txt")
    code, out = run(capsys, "solve", "--input", p6, "--witness", wit)
    assert code == 0 and out.out.strip() == "Tr_st = 3 (method: tree)"
    g = parse_graph(open(p6).read())
    assert verify_strong_transitive(g, parse_partition(open(wit).read(), g)).valid

    k32 = gen_complete_bipartite(3, 2)
    path = write(tmp_path, "k32.txt", "5 6\n" + "\n".join(f"{u} {v}" for u, v in k32.edges()))
    assert run(capsys, "solve", "--input", path)[1].out.strip() == "Tr_st = 2 (method: oracle)"

    k4 = write(tmp_path, "k4.col", "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4")
    assert run(capsys, "solve", "--input", k4, "--format", "dimacs")[1].out.strip() == "Tr_st = 4 (method: split)"


@pytest.mark.parametrize("method", ["oracle", "sat"])
def test_solve_forced_exact_methods(tmp_path, capsys, method):
    c4 = write(tmp_path, "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3")
    code, out = run(capsys, "solve", "--input", c4, "--method", method)
    assert code == 0 and out.out.strip() == f"Tr_st = 3 (method: {method})"


def test_solve_exit_codes(tmp_path, capsys):
    assert run(capsys, "solve", "--input", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "solve", "--input", write(tmp_path, "bad.txt", "3 1\n0 x"))[0] == 2
    assert run(capsys, "solve", "--input", write(tmp_path, "f.txt", "4 2\n0 1\n2 3"))[0] == 4
    c = "16 16\n" + "\n".join(f"{i} {(i + 1) % 16}" for i in range(16))
    assert run(capsys, "solve", "--input", write(tmp_path, "c16.txt", c))[0] == 3
    c4 = write(tmp_path, "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3")
    assert run(capsys, "solve", "--input", c4, "--method", "tree")[0] == 4
    assert run(capsys, "solve", "--input", c4, "--method", "split")[0] == 4


def test_verify_examples(tmp_path, capsys, p3):
    good = write(tmp_path, "good.txt", "2\n1 2\n0")
    bad = write(tmp_path, "bad.txt", "2\n0 2\n1")
    assert run(capsys, "verify", "--input", p3, "--partition", good)[0] == 0
    code, out = run(capsys, "verify", "--input", p3, "--partition", bad)
    assert code == 1 and out.out.strip() == "class 1 fails to strongly dominate vertex 1 in class 2"
    assert run(capsys, "verify", "--input", p3, "--partition", bad, "--mode", "plain")[0] == 0
    malformed = write(tmp_path, "m.txt", "2\n0 1\n1 2")
    assert run(capsys, "verify", "--input", p3, "--partition", malformed)[0] == 5


def test_reduce(tmp_path, capsys):
    k3 = write(tmp_path, "k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3")
    prefix = str(tmp_path / "out")
    code, out = run(capsys, "reduce", "--input", k3, "--out", prefix)
    assert code == 0 and out.out.strip() == "k = 7"
    g = parse_graph(open(prefix + ".graph").read())
    assert g.n == 235
    assert len(open(prefix + ".provenance").read().split("\n")) == 235
    p3 = write(tmp_path, "p3.col", "p edge 3 2\ne 1 2\ne 2 3")
    assert run(capsys, "reduce", "--input", p3, "--out", prefix)[1].out.strip() == "k = 6"
    two = write(tmp_path, "two.col", "p edge 4 2\ne 1 2\ne 3 4")
    assert run(capsys, "reduce", "--input", two, "--out", prefix)[0] == 4


def test_stnumber_and_oracle(tmp_path, capsys, p3):
    assert run(capsys, "stnumber", "--input", p3)[1].out.strip() == "0:2 1:1 2:2"
    c4 = write(tmp_path, "c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3")
    assert run(capsys, "oracle", "--input", c4)[1].out.strip() == "Tr_st = 3, Tr = 3"
    assert run(capsys, "oracle", "--input", p3, "--vertex", "1")[1].out.strip() == "st(1) = 1"
    assert run(capsys, "stnumber", "--input", c4)[0] == 4


def test_gen_and_determinism(tmp_path, capsys):
    out = str(tmp_path / "k32.txt")
    assert run(capsys, "gen", "--family", "complete-bipartite", "--a", "3", "--b", "2", "--out", out)[0] == 0
    g = parse_graph(open(out).read())
    assert g.edges() == gen_complete_bipartite(3, 2).edges()
    first = run(capsys, "gen", "--family", "random-tree", "--n", "40", "--seed", "5")[1].out
    second = run(capsys, "gen", "--family", "random-tree", "--n", "40", "--seed", "5")[1].out
    assert first == second


def test_encode(tmp_path, capsys, p3):
    out = str(tmp_path / "f.cnf")
    assert run(capsys, "encode", "--input", p3, "-k", "2", "--out", out)[0] == 0
    assert open(out).read().startswith("p cnf 6 ")


def test_bench(capsys):
    code, out = run(capsys, "bench", "--sizes", "200,400", "--repeats", "1")
    lines = out.out.strip().split("\n")
    assert code == 0 and lines[0] == "size,seconds,vertices_per_second" and len(lines) == 3
