import subprocess
import sys

import halinstar as hs
from halinstar import graphio

CLI = [sys.executable, "-m", "halinstar"]


def run(*args, stdin=None):
    return subprocess.run(
        CLI + list(args), input=stdin, capture_output=True, text=True
    )


def test_gen_color_verify_pipeline(tmp_path):
    gen = run("gen", "--family", "wheel", "--n", "3")
    assert gen.returncode == 0
    graph_file = tmp_path / "g.halin"
    graph_file.write_text(gen.stdout)

    color = run("color", str(graph_file))
    assert color.returncode == 0
    assert "RESULT colors=" in color.stderr
    assert "valid=true" in color.stderr
    coloring_file = tmp_path / "g.coloring"
    coloring_file.write_text(color.stdout)

    verify = run("verify", str(graph_file), str(coloring_file))
    assert verify.returncode == 0
    assert verify.stdout.startswith("VALID")


def test_color_reads_stdin():
    gen = run("gen", "--family", "cubicRandom", "--n", "4", "--seed", "5")
    color = run("color", stdin=gen.stdout)
    assert color.returncode == 0
    assert "valid=true" in color.stderr


def test_verify_rejects_adjacent_same_color(tmp_path):
    gen = run("gen", "--family", "wheel", "--n", "3")
    graph_file = tmp_path / "g.halin"
    graph_file.write_text(gen.stdout)
    g = hs.build_halin(graphio.parse_tree(gen.stdout))
    bad = hs.EdgeColoring(g.num_edges, 6)
    bad.assign(0, 1)
    bad.assign(1, 1)  # both spokes at the hub
    coloring_file = tmp_path / "bad.coloring"
    coloring_file.write_text(graphio.serialize_coloring(g, bad))
    verify = run("verify", str(graph_file), str(coloring_file))
    assert verify.returncode == 2
    assert verify.stderr.startswith("VIOLATION AdjacentSameColor 0,1 1")


def test_verify_flags_unassigned_edges(tmp_path):
    gen = run("gen", "--family", "wheel", "--n", "3")
    graph_file = tmp_path / "g.halin"
    graph_file.write_text(gen.stdout)
    g = hs.build_halin(graphio.parse_tree(gen.stdout))
    partial = hs.EdgeColoring(g.num_edges, 6)
    coloring_file = tmp_path / "partial.coloring"
    coloring_file.write_text(graphio.serialize_coloring(g, partial))
    verify = run("verify", str(graph_file), str(coloring_file))
    assert verify.returncode == 2
    assert verify.stderr.startswith("VIOLATION Unassigned")


def test_exact_reports_chi_and_nodes(tmp_path):
    gen = run("gen", "--family", "wheel", "--n", "3")
    graph_file = tmp_path / "g.halin"
    graph_file.write_text(gen.stdout)
    exact = run("exact", str(graph_file))
    assert exact.returncode == 0
    assert exact.stdout.startswith("EXACT chi_s=5 nodes=")


def test_exact_caps_to_unknown(tmp_path):
    gen = run("gen", "--family", "wheel", "--n", "3")
    graph_file = tmp_path / "g.halin"
    graph_file.write_text(gen.stdout)
    exact = run("exact", str(graph_file), "--max-colors", "4")
    assert exact.returncode == 0
    assert "chi_s=unknown" in exact.stdout


def test_bench_emits_versioned_csv(tmp_path):
    out = tmp_path / "sweep.csv"
    bench = run(
        "bench", "--delta", "4..5", "--count", "2", "--seed", "9", "--out", str(out)
    )
    assert bench.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "# halinstar sweep schema=1"
    assert lines[1].startswith("instance,family,vertices,cycle,delta,")
    rows = [line.split(",") for line in lines[2:]]
    assert len(rows) == 4
    assert all(row[8] == "true" for row in rows)


def test_bench_is_deterministic(tmp_path):
    a = run("bench", "--delta", "4", "--count", "3", "--seed", "2")
    b = run("bench", "--delta", "4", "--count", "3", "--seed", "2")
    # strip runtime column before comparing
    strip = lambda text: [line.rsplit(",", 1)[0] for line in text.splitlines()]
    assert strip(a.stdout) == strip(b.stdout)


def test_export_dot_includes_colors(tmp_path):
    gen = run("gen", "--family", "wheel", "--n", "3")
    graph_file = tmp_path / "g.halin"
    graph_file.write_text(gen.stdout)
    color = run("color", str(graph_file))
    coloring_file = tmp_path / "g.coloring"
    coloring_file.write_text(color.stdout)
    dot = run("export-dot", str(graph_file), "--coloring", str(coloring_file))
    assert dot.returncode == 0
    assert dot.stdout.startswith("graph halin {")
    assert 'label="1"' in dot.stdout


def test_trace_emits_reduction_frames():
    gen = run("gen", "--family", "cubicRandom", "--n", "5", "--seed", "8")
    color = run("color", "--cubic", "--trace", stdin=gen.stdout)
    assert color.returncode == 0
    assert '"case":' in color.stderr


def test_usage_error_exits_one():
    bad = run("color", "/nonexistent/file.halin")
    assert bad.returncode == 1
    assert "error:" in bad.stderr


def test_graph_file_round_trip_through_cli(tmp_path):
    gen = run("gen", "--family", "boundedDeltaRandom", "--n", "4", "--delta", "6", "--seed", "1")
    tree = graphio.parse_tree(gen.stdout)
    assert graphio.serialize_tree(tree) == gen.stdout
