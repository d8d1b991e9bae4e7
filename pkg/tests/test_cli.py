import io
import json

from kernelgraphs.cli import main
from kernelgraphs.designs import OrthogonalArray, cyclic_square, mols_complete, oa_from_mols
from kernelgraphs.graphs import (
    complete,
    cycle,
    from_graph6,
    path,
    square_lattice,
    to_graph6,
)
from kernelgraphs.kernelgraph import hull, kernel_graph
from kernelgraphs.transform import Partition, Transformation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kernel_graph_text_and_json(tmp_path, capsys):
    f = tmp_path / "maps.txt"
    f.write_text("# a swap and a merge\n[2,1,3]\n[1,1,3]\n")
    code, out, err = run(capsys, "kernel-graph", str(f))
    expected = kernel_graph(
        [Transformation.parse("[2,1,3]"), Transformation.parse("[1,1,3]")]
    )
    g6 = to_graph6(expected.graph)
    assert code == 0
    assert out == f"{g6}\tmin_rank=2\n"

    code, out, _ = run(capsys, "--json", "kernel-graph", str(f))
    assert code == 0
    assert json.loads(out) == {
        "graph6": g6,
        "n": 3,
        "edges": expected.graph.edge_count,
        "min_rank": 2,
        "closed": False,
    }


def test_kernel_graph_closed_reads_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("[2,1,3]\n[1,1,3]\n"))
    code, out, _ = run(capsys, "--json", "kernel-graph", "--closed")
    assert code == 0
    assert json.loads(out)["closed"] is True


def test_hull_command(capsys):
    p4 = to_graph6(path(4))
    expected = to_graph6(hull(path(4)))
    code, out, _ = run(capsys, "hull", p4)
    assert code == 0
    assert out == f"{expected}\tis_hull=false\n"

    code, out, _ = run(capsys, "--json", "hull", to_graph6(cycle(4)))
    assert code == 0
    payload = json.loads(out)
    assert payload["is_hull"] is True
    assert payload["graph6"] == to_graph6(cycle(4))

    code, out, _ = run(capsys, "--json", "hull", "--iterate", p4)
    payload = json.loads(out)
    assert payload["steps"] == 1
    assert payload["graph6"] == expected


def test_derived_and_end_count(capsys):
    c4 = to_graph6(cycle(4))
    code, out, _ = run(capsys, "derived", c4)
    assert code == 0
    assert from_graph6(out.strip()).n == 4

    code, out, _ = run(capsys, "end-count", to_graph6(cycle(5)))
    assert code == 0
    assert out == "10\n"


def test_aut_command(capsys):
    code, out, _ = run(capsys, "aut", to_graph6(cycle(5)))
    assert code == 0
    assert out == "D10\torder=10\n"

    code, out, _ = run(capsys, "--json", "aut", to_graph6(complete(4)))
    payload = json.loads(out)
    assert payload["name"] == "S4"
    assert payload["order"] == 24
    for gen in payload["generators"]:
        assert Transformation.parse(gen).rank == 4


def test_mingen_command(capsys):
    code, out, _ = run(capsys, "mingen", to_graph6(cycle(4)))
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "size=1\tminimal=true\tlower_bound=1\tmethod=exhaustive"
    assert len(lines) == 2
    bracket, blocks = lines[1].split("\t")
    member = Transformation.parse(bracket)
    assert kernel_graph([member]).graph == cycle(4)
    assert Partition.parse(blocks) == member.kernel()

    # a graph that is not a hull has no endomorphic generating set
    code, _, err = run(capsys, "mingen", "--endomorphisms", to_graph6(path(4)))
    assert code == 1
    assert err.startswith("error:")


def test_sync_check_word_is_replayable(tmp_path, capsys):
    f = tmp_path / "maps.txt"
    f.write_text("[2,3,1]\n[1,1,3]\n")
    code, out, _ = run(capsys, "--json", "sync-check", str(f))
    assert code == 0
    payload = json.loads(out)
    assert payload["synchronizing"] is True
    members = [Transformation.parse("[2,3,1]"), Transformation.parse("[1,1,3]")]
    images = set(range(3))
    for index in payload["word"]:
        images = {members[index - 1].images[x] for x in images}
    assert len(images) == 1

    code, out, _ = run(capsys, "sync-check", "--closure", str(f))
    assert code == 0
    assert out.startswith("synchronizing\tword=")
    assert "closure_size=" in out


def test_sync_check_negative(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("[2,1,3]\n"))
    code, out, _ = run(capsys, "sync-check")
    assert code == 0
    assert out == "not synchronizing\n"


def test_census_command(tmp_path, capsys):
    out_dir = tmp_path / "census"
    code, out, _ = run(
        capsys,
        "--json",
        "--seed",
        "5",
        "census",
        "3",
        "--out",
        str(out_dir),
        "--sync-trials",
        "10",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["hulls"] == 4
    assert payload["sync_trials"]["trials"] == 10
    assert (out_dir / "hulls_n3.jsonl").exists()

    code, out, _ = run(capsys, "census", "3", "--out", str(out_dir))
    assert code == 0
    assert out.startswith("n=3\tgraphs=4\thulls=4\n")


def test_preimages_command(capsys):
    k4 = to_graph6(complete(4))
    code, out, _ = run(capsys, "preimages", k4)
    assert code == 0
    assert out.splitlines() == [k4]


def test_designs_mols_and_oa(capsys):
    code, out, _ = run(capsys, "--json", "designs", "mols", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 3
    assert len(payload["squares"][0]) == 4

    code, _, err = run(capsys, "designs", "mols", "6")
    assert code == 1
    assert "error:" in err

    code, out, _ = run(capsys, "--json", "designs", "oa", "4")
    payload = json.loads(out)
    assert payload["k"] == 5
    assert len(payload["rows"]) == 5
    OrthogonalArray(4, payload["rows"])


def test_designs_oa_graph_and_extendible(tmp_path, capsys):
    oa = oa_from_mols(mols_complete(3))
    f = tmp_path / "oa.txt"
    f.write_text("\n".join(" ".join(str(x) for x in row) for row in oa.rows) + "\n")
    code, out, _ = run(capsys, "designs", "oa-graph", str(f))
    assert code == 0
    assert out.endswith("n=3\tk=4\n")

    # the full array admits no further row
    code, out, _ = run(capsys, "designs", "extendible", str(f))
    assert code == 0
    assert out == "none\n"

    two = oa_from_mols([], n=3)
    f2 = tmp_path / "oa2.txt"
    f2.write_text("\n".join(" ".join(str(x) for x in row) for row in two.rows) + "\n")
    code, out, _ = run(capsys, "--json", "designs", "extendible", str(f2))
    payload = json.loads(out)
    assert payload["row"] is not None
    two.with_row(payload["row"])

    bad = tmp_path / "bad.txt"
    bad.write_text("1 2 3\n")
    code, _, err = run(capsys, "designs", "oa-graph", str(bad))
    assert code == 1
    assert "perfect square" in err


def test_bad_input_exit_codes(tmp_path, capsys):
    code, _, err = run(capsys, "hull", "@@not-a-graph@@")
    assert code == 1
    assert err.startswith("error:")

    f = tmp_path / "maps.txt"
    f.write_text("[2,1,3]\n[9,9]\n")
    code, _, err = run(capsys, "kernel-graph", str(f))
    assert code == 1
    assert "line 2" in err

    code, _, err = run(capsys, "kernel-graph", str(tmp_path / "missing.txt"))
    assert code == 1


def test_budget_exit_codes(capsys):
    big = to_graph6(square_lattice(3))
    code, _, err = run(capsys, "--node-budget", "5", "end-count", big)
    assert code == 2
    assert "budget" in err

    code, _, err = run(capsys, "--time-limit", "0.05", "census", "6", "--out", "/tmp/tl")
    assert code == 2
    assert "time" in err


def test_option_position_is_flexible(capsys):
    g6 = to_graph6(cycle(5))
    code_a, out_a, _ = run(capsys, "--json", "aut", g6)
    code_b, out_b, _ = run(capsys, "aut", "--json", g6)
    assert code_a == code_b == 0
    assert out_a == out_b


def test_pipe_round_trip_is_idempotent(tmp_path, capsys):
    f = tmp_path / "maps.txt"
    f.write_text("[3,3,4,3]\n[3,3,2,4]\n")
    _, out, _ = run(capsys, "kernel-graph", str(f))
    g6 = out.split("\t")[0]
    _, out, _ = run(capsys, "hull", g6)
    h6 = out.split("\t")[0]
    _, out, _ = run(capsys, "hull", h6)
    assert out.split("\t")[0] == h6
    assert out.rstrip().endswith("is_hull=true")


def test_json_output_matches_goldens(capsys):
    golden = {
        ("--json", "hull", "DUW"): '{"graph6": "D~{", "is_hull": false}',
        ("--json", "mingen", "C]"): (
            '{"kernels": ["{{1,2},{3,4}}"], "lower_bound": 1,'
            ' "members": ["[1,1,3,3]"], "method": "exhaustive",'
            ' "minimal": true, "size": 1}'
        ),
        ("--json", "aut", "DUW"): (
            '{"generators": ["[1,5,4,3,2]", "[2,1,5,4,3]", "[2,3,4,5,1]",'
            ' "[3,2,1,5,4]", "[3,4,5,1,2]", "[4,3,2,1,5]", "[4,5,1,2,3]",'
            ' "[5,1,2,3,4]", "[5,4,3,2,1]"], "name": "D10", "order": 10}'
        ),
    }
    for argv, want in golden.items():
        code, out, _ = run(capsys, *argv)
        assert code == 0
        assert out.rstrip("\n") == want
        # byte-stable across repeat runs
        _, again, _ = run(capsys, *argv)
        assert again == out
