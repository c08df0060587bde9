import csv

import pytest

from cclexdfs.cli import BENCH_COLUMNS, main
from cclexdfs.generators import FIG2_NAMES
from cclexdfs.graph import read_ordering


def gen(tmp_path, *flags, name="g"):
    graph, sigma = tmp_path / f"{name}.txt", tmp_path / f"{name}.sigma"
    code = main(["gen", *flags, "--out-graph", str(graph), "--out-sigma", str(sigma)])
    return code, graph, sigma


def test_gen_fixture(tmp_path, capsys):
    code, graph, sigma = gen(tmp_path, "--fixture", "fig2")
    assert code == 0
    assert graph.read_text().splitlines()[0] == "11 16"
    assert sigma.read_text() == " ".join(map(str, range(11))) + "\n"
    assert capsys.readouterr().out.strip() == "11 16"


def test_gen_single_vertex(tmp_path):
    code, graph, sigma = gen(tmp_path, "--n", "1", "--p", "0")
    assert code == 0
    assert graph.read_text() == "1 0\n" and sigma.read_text() == "0\n"


def test_gen_is_deterministic(tmp_path):
    _, g1, s1 = gen(tmp_path, "--n", "100", "--p", "0.3", "--seed", "7", name="a")
    _, g2, s2 = gen(tmp_path, "--n", "100", "--p", "0.3", "--seed", "7", name="b")
    assert g1.read_bytes() == g2.read_bytes() and s1.read_bytes() == s2.read_bytes()


def test_bad_flags_exit_2(tmp_path):
    with pytest.raises(SystemExit) as err:
        main(["gen", "--n", "x", "--out-graph", "a", "--out-sigma", "b"])
    assert err.value.code == 2
    assert gen(tmp_path, "--n", "3", "--p", "2")[0] == 2
    assert main(["gen", "--n", "3", "--out-graph", str(tmp_path / "no/such/dir/g"),
                 "--out-sigma", str(tmp_path / "s")]) == 2


def test_run_fig2(tmp_path):
    _, graph, sigma = gen(tmp_path, "--fixture", "fig2")
    out = tmp_path / "tau"
    assert main(["run", "--graph", str(graph), "--sigma", str(sigma), "--out", str(out)]) == 0
    tau = read_ordering(out)
    assert "".join(FIG2_NAMES[v] for v in tau) == "hkjigfdebca"


def test_run_fig1_plus(tmp_path, capsys):
    _, graph, sigma = gen(tmp_path, "--fixture", "fig1")
    capsys.readouterr()
    assert main(["run", "--graph", str(graph), "--sigma", str(sigma), "--plus"]) == 0
    assert capsys.readouterr().out.strip() == "4 2 3 0 1"  # e c d a b


def test_run_trace(tmp_path, capsys, monkeypatch):
    _, graph, sigma = gen(tmp_path, "--fixture", "fig2")
    monkeypatch.setenv("COCOMP_TRACE", "1")
    assert main(["run", "--graph", str(graph), "--sigma", str(sigma), "--out", str(tmp_path / "t")]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert "1 0 7 10" in lines  # P1 = {h, k} at label 0
    assert "refine 4 6 ((5, 3)(4))" in lines  # g pulls f, d
    assert "refine 4 7 ((5)(3)(4))" in lines  # then h pulls f
    assert "tau 5 1 2 0" in lines


def test_run_missing_file(tmp_path):
    assert main(["run", "--graph", str(tmp_path / "nope"), "--sigma", str(tmp_path / "nope")]) == 2


def test_run_bad_graph_file(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 0\n")
    sigma = tmp_path / "s"
    sigma.write_text("0 1 2\n")
    assert main(["run", "--graph", str(bad), "--sigma", str(sigma)]) == 2


def test_run_k3_then_verify(tmp_path):
    graph = tmp_path / "k3"
    graph.write_text("3 3\n0 1\n0 2\n1 2\n")
    sigma = tmp_path / "s"
    sigma.write_text("0 1 2\n")
    out = tmp_path / "tau"
    assert main(["run", "--graph", str(graph), "--sigma", str(sigma), "--out", str(out)]) == 0
    assert sorted(read_ordering(out)) == [0, 1, 2]
    assert main(["verify", "--graph", str(graph), "--ordering", str(out),
                 "--checks", "umbrella,4pc,flip,partition", "--sigma", str(sigma)]) == 0


def test_verify_fig2(tmp_path, capsys):
    _, graph, sigma = gen(tmp_path, "--fixture", "fig2")
    tau = tmp_path / "tau"
    main(["run", "--graph", str(graph), "--sigma", str(sigma), "--out", str(tau)])
    args = ["verify", "--graph", str(graph), "--sigma", str(sigma)]
    assert main([*args, "--ordering", str(tau), "--checks", "umbrella,4pc,flip,partition"]) == 0
    assert main([*args, "--ordering", str(sigma), "--checks", "flip"]) == 1
    assert "flip:" in capsys.readouterr().out.splitlines()[-1]


def test_verify_umbrella_witness(tmp_path, capsys):
    graph = tmp_path / "u"
    graph.write_text("3 1\n0 2\n")
    order = tmp_path / "o"
    order.write_text("0 1 2\n")
    assert main(["verify", "--graph", str(graph), "--ordering", str(order), "--checks", "umbrella"]) == 1
    assert capsys.readouterr().out.strip() == "umbrella: umbrella 0 1 2"


def test_verify_usage_errors(tmp_path):
    _, graph, sigma = gen(tmp_path, "--fixture", "fig1")
    assert main(["verify", "--graph", str(graph), "--ordering", str(sigma), "--checks", "flip"]) == 2
    assert main(["verify", "--graph", str(graph), "--ordering", str(sigma), "--checks", "nope"]) == 2


@pytest.mark.parametrize("seed", range(5))
def test_plus_run_matches_oracle(tmp_path, seed):
    _, graph, sigma = gen(tmp_path, "--n", "40", "--p", "0.3", "--seed", str(seed))
    tau = tmp_path / "tau"
    assert main(["run", "--graph", str(graph), "--sigma", str(sigma), "--plus", "--out", str(tau)]) == 0
    assert main(["verify", "--graph", str(graph), "--ordering", str(tau), "--sigma", str(sigma),
                 "--checks", "umbrella,4pc,flip,partition", "--against-oracle"]) == 0


def read_rows(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_bench_csv(tmp_path):
    path = tmp_path / "bench.csv"
    assert main(["bench", "--sizes", "1000,2000,4000", "--width", "6", "--p", "0.5",
                 "--csv", str(path)]) == 0
    assert path.read_text().splitlines()[0] == ",".join(BENCH_COLUMNS)
    rows = read_rows(path)
    assert len(rows) == 3
    for row in rows:
        n, m = int(row["n"]), int(row["m"])
        total = sum(int(row[k]) for k in ("label_touches", "bin_moves", "pivot_pushes", "refine_moves"))
        assert total <= 8 * (n + m)
    for a, b in zip(rows, rows[1:]):
        assert 1.5 <= int(b["bin_moves"]) / int(a["bin_moves"]) <= 2.5
    # appending keeps a single header
    assert main(["bench", "--sizes", "10", "--p", "1", "--csv", str(path)]) == 0
    text = path.read_text()
    assert text.count("label_touches") == 1
    last = read_rows(path)[-1]
    assert (last["m"], last["pivot_pushes"]) == ("0", "0")


def test_bench_bad_sizes(tmp_path):
    assert main(["bench", "--sizes", "a,b", "--csv", str(tmp_path / "x.csv")]) == 2
