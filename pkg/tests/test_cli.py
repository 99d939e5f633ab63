import json

from vincular.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_recurrence(capsys):
    code, out, err = run(capsys, "count", "--n", "6")
    assert code == 0
    assert out.splitlines() == ["1", "1", "2", "6", "23", "105", "549"]
    assert err == ""


def test_count_other_pattern_recurrence(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "31-4-2", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["1", "1", "2", "6", "23", "104"]


def test_count_methods_agree(capsys):
    _, recurrence, _ = run(capsys, "count", "--n", "5")
    _, tree, _ = run(capsys, "count", "--n", "5", "--method", "tree")
    _, brute, _ = run(capsys, "count", "--n", "5", "--method", "brute")
    assert recurrence == tree == brute


def test_count_brute_any_pattern(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "1-3-2", "--n", "5", "--method", "brute")
    assert code == 0
    assert out.splitlines()[-1] == "42"


def test_count_recurrence_unknown_pattern(capsys):
    code, _, err = run(capsys, "count", "--pattern", "1-3-2", "--n", "5")
    assert code == 2
    assert "brute" in err


def test_count_cfrac_warns(capsys):
    code, out, err = run(capsys, "count", "--n", "6", "--method", "cfrac")
    assert code == 0
    assert out.splitlines() == ["1", "0", "2", "2", "5", "15", "48"]
    assert "disagrees" in err


def test_generate_lines(capsys):
    code, out, _ = run(capsys, "generate", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["3 2 1", "3 1 2", "2 3 1", "2 1 3", "1 2 3", "1 3 2"]


def test_generate_json_and_threads(capsys):
    code, out, _ = run(capsys, "generate", "--n", "5", "--format", "json", "--threads", "2")
    assert code == 0
    level = json.loads(out)
    assert len(level) == 105
    _, solo, _ = run(capsys, "generate", "--n", "5", "--format", "json")
    assert json.loads(solo) == level


def test_generate_cap(capsys):
    code, _, err = run(capsys, "generate", "--n", "12")
    assert code == 2
    assert "--force" in err


def test_triangle_u(capsys):
    code, out, _ = run(capsys, "triangle", "--which", "u", "--n", "2")
    assert code == 0
    assert out == "n,k,value\n0,0,1\n1,1,1\n2,1,1\n2,2,1\n"


def test_triangle_census_matches_v(capsys):
    code, census, _ = run(capsys, "triangle", "--which", "census", "--n", "5")
    assert code == 0
    _, v, _ = run(capsys, "triangle", "--which", "v", "--n", "5")
    v_rows = [line for line in v.splitlines() if not line.startswith(("n,", "0,"))]
    assert census.splitlines()[1:] == v_rows


def test_triangle_census_cap(capsys):
    code, _, err = run(capsys, "triangle", "--which", "census", "--n", "10")
    assert code == 2
    assert "--force" in err


def test_tree_dot(capsys):
    code, out, _ = run(capsys, "tree", "--n", "2")
    assert code == 0
    assert out.startswith("digraph gentree {")
    assert '"1 (0)" -> "21 (0)";' in out


def test_tree_json(capsys):
    code, out, _ = run(capsys, "tree", "--n", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["perm"] == [1]


def test_tree_dot_cap(capsys):
    code, _, err = run(capsys, "tree", "--n", "9")
    assert code == 2
    assert "force" in err


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 4
    assert all(": ok (" in line for line in lines)


def test_verify_single_suite_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "labelling", "--n", "4", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True
    assert report["suites"]["labelling"]["ok"] is True
    assert "eco" not in report["suites"]
