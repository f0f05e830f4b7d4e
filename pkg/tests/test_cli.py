import json

from cliquebound.cli import main
from cliquebound.graph import parse_graph6


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_generate_multipartite(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "multipartite", "--parts", "2,2,2",
                       "--out", str(tmp_path))
    assert code == 0
    path = tmp_path / "multipartite_2-2-2.g6"
    assert path.exists()
    g = parse_graph6(path.read_text())
    assert (g.n, g.m) == (6, 12)


def test_generate_random_reproducible(tmp_path, capsys):
    for sub in ("a", "b"):
        code, _, _ = run(capsys, "generate", "random", "--n", "12", "--p", "1/2",
                         "--seed", "1", "--count", "10", "--out", str(tmp_path / sub))
        assert code == 0
    files_a = sorted((tmp_path / "a").iterdir())
    files_b = sorted((tmp_path / "b").iterdir())
    assert len(files_a) == 10
    assert [f.read_text() for f in files_a] == [f.read_text() for f in files_b]


def test_generate_rejects_zero_part(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "multipartite", "--parts", "2,0",
                       "--out", str(tmp_path))
    assert code == 2


def test_analyze_octahedron(tmp_path, capsys):
    run(capsys, "generate", "multipartite", "--parts", "2,2,2", "--out", str(tmp_path))
    code, out, err = run(capsys, "analyze", str(tmp_path), "--t", "3")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["true_count"] == 8
    assert rec["localized_zykov"] == "8/1"
    assert rec["tight"] is True
    assert rec["certificate"] == [2, 2, 2]
    assert "graph_hash" in rec and "version" in rec
    assert "1 tight" in err


def test_analyze_c5_range(tmp_path, capsys):
    (tmp_path / "c5.el").write_text("0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, _ = run(capsys, "analyze", str(tmp_path / "c5.el"),
                       "--t", "2", "--t-max", "4")
    assert code == 0
    recs = [json.loads(line) for line in out.splitlines()]
    assert [r["t"] for r in recs] == [2, 3, 4]
    assert all(not r["tight"] or r["t"] > 2 for r in recs)
    assert not recs[0]["tight"]


def test_analyze_empty_directory(tmp_path, capsys):
    code, _, err = run(capsys, "analyze", str(tmp_path))
    assert code == 2
    assert "no inputs" in err


def test_analyze_csv_format(tmp_path, capsys):
    run(capsys, "generate", "multipartite", "--parts", "1,1,1", "--out", str(tmp_path))
    code, out, _ = run(capsys, "analyze", str(tmp_path), "--t", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "file,n,m,t,N,localized_bound,zykov_bound,tight,certificate"
    assert lines[1].endswith("true,1+1+1")


def test_analyze_deterministic_output(tmp_path, capsys):
    run(capsys, "generate", "random", "--n", "9", "--p", "1/2", "--seed", "4",
        "--count", "3", "--out", str(tmp_path))
    outs = []
    for _ in range(2):
        code, out, _ = run(capsys, "analyze", str(tmp_path), "--t", "2", "--t-max", "3")
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]


def test_analyze_budget_exceeded(tmp_path, capsys):
    run(capsys, "generate", "multipartite", "--parts", "2,2,2", "--out", str(tmp_path))
    code, out, _ = run(capsys, "analyze", str(tmp_path), "--t", "3", "--budget", "1")
    assert code == 3
    assert "error" in json.loads(out.splitlines()[0])


def test_analyze_bad_t_range(tmp_path, capsys):
    (tmp_path / "x.el").write_text("0 1\n")
    code, _, _ = run(capsys, "analyze", str(tmp_path / "x.el"), "--t", "17")
    assert code == 2


def test_analyze_unparsable_file(tmp_path, capsys):
    (tmp_path / "bad.el").write_text("0 1 2 3\n")
    code, _, err = run(capsys, "analyze", str(tmp_path / "bad.el"), "--t", "2")
    assert code == 2
    assert "bad.el" in err


def test_phi_tight_exit(tmp_path, capsys):
    run(capsys, "generate", "multipartite", "--parts", "2,2,2", "--out", str(tmp_path))
    code, out, err = run(capsys, "phi", str(tmp_path / "multipartite_2-2-2.g6"),
                         "--t", "3", "--samples", "20")
    assert code == 0
    assert out.startswith("phi_uniform = 0/1")
    assert "tight" in err


def test_phi_strict_exit(tmp_path, capsys):
    (tmp_path / "c5.el").write_text("0 1\n1 2\n2 3\n3 4\n0 4\n")
    code, out, err = run(capsys, "phi", str(tmp_path / "c5.el"),
                         "--t", "2", "--samples", "20")
    assert code == 4
    assert "phi_uniform = 1/20" in out
    assert "step=" in out
    assert "strict" in err


def test_phi_single_vertex(tmp_path, capsys):
    (tmp_path / "k1.g6").write_text("@\n")
    code, out, _ = run(capsys, "phi", str(tmp_path / "k1.g6"), "--t", "2")
    assert code == 0
    assert "step=" not in out


def test_selfcheck_passes(capsys):
    code, out, _ = run(capsys, "selfcheck")
    assert code == 0
    assert "FAIL" not in out
    assert "0 failures" in out


def test_selfcheck_budget_exceeded(capsys):
    code, out, _ = run(capsys, "selfcheck", "--budget", "1")
    assert code == 3
    assert "BUDGET" in out


def test_selfcheck_detects_corrupted_bound(capsys, monkeypatch):
    # deliberately break the bound evaluation; the named invariant must FAIL
    import cliquebound.cli as cli_mod

    real = cli_mod.bound_report

    def corrupted(g, t, budget=None):
        rep = real(g, t, budget=budget)
        object.__setattr__(rep, "localized_zykov", rep.localized_zykov - 1)
        return rep

    monkeypatch.setattr(cli_mod, "bound_report", corrupted)
    code, out, _ = run(capsys, "selfcheck")
    assert code == 1
    assert any(line.startswith("FAIL soundness[") for line in out.splitlines())
