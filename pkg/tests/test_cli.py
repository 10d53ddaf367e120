from homvec import standard_graph, write_graph6, write_weighted_json, lollipop
from homvec.cli import main


def g6(name, n):
    return write_graph6(standard_graph(name, n))


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_hom(capsys):
    code, out, _ = run(capsys, ["count", "--mode", "hom", "--left", g6("clique", 2), "--right", g6("clique", 3)])
    assert code == 0 and out == "6\n"


def test_count_aut(capsys):
    code, out, _ = run(capsys, ["count", "--mode", "aut", "--left", g6("cycle", 4)])
    assert code == 0 and out == "8\n"


def test_count_triangle_into_triangle_free(capsys):
    code, out, _ = run(capsys, ["count", "--mode", "hom", "--left", g6("cycle", 3), "--right", g6("cycle", 6)])
    assert code == 0 and out == "0\n"


def test_count_exists(capsys):
    code, out, _ = run(capsys, ["count", "--mode", "exists", "--left", g6("clique", 3), "--right", g6("clique", 2)])
    assert code == 0 and out == "false\n"


def test_count_weighted_target(tmp_path, capsys):
    path = tmp_path / "target.json"
    path.write_text(write_weighted_json(lollipop(1, 1)))
    code, out, _ = run(capsys, ["count", "--mode", "hom", "--left", g6("clique", 2), "--right", f"@{path}"])
    assert code == 0 and out == "3\n"  # maps (a,b), (b,a), (b,b) at unit weights


def test_weighted_target_rejected_outside_hom(tmp_path, capsys):
    path = tmp_path / "target.json"
    path.write_text(write_weighted_json(lollipop(1, 1)))
    code, _, err = run(capsys, ["count", "--mode", "inj", "--left", g6("clique", 2), "--right", f"@{path}"])
    assert code == 2 and "weighted" in err


def test_graph_from_file(tmp_path, capsys):
    path = tmp_path / "g.g6"
    path.write_text(g6("clique", 3) + "\n")
    code, out, _ = run(capsys, ["count", "--mode", "aut", "--left", f"@{path}"])
    assert code == 0 and out == "6\n"


def test_vector_csv(capsys):
    code, out, _ = run(capsys, ["vector", "--side", "right", "--class", "cliques", "--bound", "3", g6("clique", 2)])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "member_graph6,count"
    assert [line.split(",")[1] for line in lines[1:]] == ["0", "2", "6"]


def test_vector_treewidth_class(capsys):
    code, out, _ = run(capsys, ["vector", "--side", "left", "--class", "tw<=1", "--bound", "3", g6("cycle", 3)])
    assert code == 0
    assert len(out.splitlines()) > 1


def test_test_chromeq_equivalent(capsys):
    from homvec import chromatic_pair

    x1, x2 = chromatic_pair()
    code, out, _ = run(capsys, ["test", "--relation", "chromeq", write_graph6(x1), write_graph6(x2)])
    assert code == 0 and out == "equivalent\n"


def test_test_iso_distinguished_prints_witness(capsys):
    code, out, _ = run(capsys, ["test", "--relation", "iso", g6("clique", 3), g6("path", 3)])
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "distinguished"
    assert len(lines) == 2 and lines[1].count(",") == 2


def test_test_wl_relation(capsys):
    from homvec import fractional_pair, write_graph6 as w

    g3, h3 = fractional_pair(3)
    code, out, _ = run(capsys, ["test", "--relation", "wl:1", w(g3), w(h3)])
    assert code == 0 and out == "equivalent\n"
    code, out, _ = run(capsys, ["test", "--relation", "wl:2", w(g3), w(h3)])
    assert code == 1 and out == "distinguished\n"


def test_poly_chromatic_eight_ring(capsys):
    code, out, _ = run(capsys, ["poly", "--which", "chromatic", g6("cycle", 8)])
    assert code == 0
    assert out.strip() == "-7*x + 28*x^2 - 56*x^3 + 70*x^4 - 56*x^5 + 28*x^6 - 8*x^7 + x^8"


def test_param_fractional(capsys):
    code, out, _ = run(capsys, ["param", "--which", "chif", g6("cycle", 5)])
    assert code == 0 and out == "5/2\n"
    code, out, _ = run(capsys, ["param", "--which", "omega", g6("cycle", 5)])
    assert code == 0 and out == "2\n"


def test_usage_errors_exit_two(capsys):
    code, _, _ = run(capsys, ["count", "--mode", "bogus", "--left", "A_"])
    assert code == 2
    code, _, err = run(capsys, ["count", "--mode", "hom", "--left", "\x01", "--right", "A_"])
    assert code == 2 and "error" in err
    code, _, err = run(capsys, ["count", "--mode", "hom", "--left", "A_"])
    assert code == 2


def test_guard_overflow_exits_three(capsys):
    code, _, err = run(capsys, ["vector", "--side", "left", "--class", "all", "--bound", "20", "A_"])
    assert code == 3 and "guard" in err


def test_deterministic_output(capsys):
    args = ["vector", "--side", "left", "--class", "trees", "--bound", "4", g6("cycle", 5)]
    first = run(capsys, args)
    second = run(capsys, args)
    assert first == second


def test_suite_command(capsys):
    code, out, _ = run(capsys, ["suite", "--name", "decomposition"])
    assert code == 0
    assert out.startswith("PASS decomposition:")
    code, _, err = run(capsys, ["suite", "--name", "nonsense"])
    assert code == 2
