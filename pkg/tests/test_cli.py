import json

import pytest

from macmahon.cli import main


def _run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out


def test_enumerate_pp(capsys):
    code, out = _run(capsys, ["enumerate", "pp", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["outcome"] == "ok"
    assert report["payload"]["count"] == "3"
    assert report["payload"]["partitions"] == [[[2]], [[1, 1]], [[1], [1]]]


def test_enumerate_with_max_entry(capsys):
    code, out = _run(capsys, ["enumerate", "pp", "--n", "4", "--max-entry", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["payload"]["count"] == "5"


def test_verify_macmahon(capsys):
    code, out = _run(capsys, ["verify", "macmahon", "--s-order", "6"])
    assert code == 0
    report = json.loads(out)
    assert report["outcome"] == "match"
    assert report["payload"]["enumerated"] == [1, 1, 3, 6, 13, 24, 48]


def test_verify_vuletic_small(capsys):
    code, out = _run(capsys, ["verify", "vuletic", "--s-order", "3", "--q-order", "3", "--t-order", "3"])
    assert code == 0
    assert json.loads(out)["outcome"] == "match"


def test_verify_bb(capsys):
    code, out = _run(capsys, ["verify", "bb", "--r", "1", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["outcome"] == "match"
    assert report["payload"]["lhs"] == report["payload"]["rhs"] == [[3, "1"], [4, "1"]]


def test_verify_refined_macmahon_infinite_rank(capsys):
    code, out = _run(capsys, ["verify", "refined-macmahon", "--r", "inf", "--t-order", "3", "--q-order", "5"])
    assert code == 0
    assert json.loads(out)["payload"]["r"] == "inf"


def test_verify_limit_targets(capsys):
    code, out = _run(capsys, ["verify", "limit-class", "--max-weight", "3", "--l-order", "8"])
    assert code == 0
    assert json.loads(out)["outcome"] == "match"
    code, out = _run(capsys, ["verify", "limit-series", "--t-order", "3", "--l-order", "6"])
    assert code == 0
    assert json.loads(out)["outcome"] == "match"


def test_classes_table(capsys):
    code, out = _run(capsys, ["classes", "--r", "2", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    rows = report["payload"]["components"]
    assert [row["partition"] for row in rows] == [[[2]], [[1, 1]], [[1], [1]]]
    by_partition = {json.dumps(row["partition"]): row for row in rows}
    assert by_partition["[[2]]"]["d_plus"] == 2 * 2 + 4
    assert by_partition["[[1, 1]]"]["chi"] == 1
    assert by_partition["[[1], [1]]"]["chi"] == 2


def test_classes_csv(capsys):
    code = main(["--format", "csv", "classes", "--r", "1", "--n", "2"])
    out = capsys.readouterr().out
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "partition,class,d_plus,chi"
    assert len(lines) == 3
    # the format flag is also accepted after the subcommand
    code = main(["classes", "--r", "1", "--n", "2", "--format", "csv"])
    assert code == 0
    assert capsys.readouterr().out == out


def test_tangent(capsys):
    code, out = _run(capsys, ["tangent", "--tuple", "[[1],[ ]]", "--alpha", "4"])
    assert code == 0
    report = json.loads(out)
    assert report["payload"]["size"] == 4
    assert report["payload"]["expected_size"] == 4
    assert report["payload"]["d_plus"] == 3
    assert report["payload"]["size_ok"] is True


def test_count_points_grid(capsys):
    code, out = _run(capsys, ["count-points", "--grid", "[[1,1]]", "--p", "3"])
    assert code == 0
    report = json.loads(out)
    assert report["payload"]["count"] == "2"
    assert report["payload"]["predicted"] == "2"
    assert report["outcome"] == "match"


def test_count_points_chain_with_h(capsys):
    code, out = _run(
        capsys,
        ["count-points", "--chain-mu", "[2,2]", "--chain-nu", "[2,1]", "--chain-h", "[[0,1]]", "--p", "2"],
    )
    assert code == 0
    assert json.loads(out)["outcome"] == "match"


def test_count_points_budget_refusal(capsys):
    code, out = _run(capsys, ["count-points", "--grid", "[[3,3],[3,3]]", "--p", "2"])
    assert code == 3
    assert json.loads(out)["outcome"] == "error"


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2
    code, out = _run(capsys, ["count-points", "--p", "2"])
    assert code == 2
    assert json.loads(out)["outcome"] == "error"


def test_json_output_is_deterministic(capsys):
    _, first = _run(capsys, ["verify", "bb", "--r", "2", "--n", "2"])
    _, second = _run(capsys, ["verify", "bb", "--r", "2", "--n", "2"])
    assert first == second
    _, third = _run(capsys, ["enumerate", "pp", "--n", "4"])
    _, fourth = _run(capsys, ["enumerate", "pp", "--n", "4"])
    assert third == fourth


def test_table_format(capsys):
    code = main(["--format", "table", "verify", "macmahon", "--s-order", "4"])
    out = capsys.readouterr().out
    assert code == 0
    assert "match\tTrue" in out


def test_all_desk_scale(capsys):
    code, out = _run(capsys, ["all", "--desk-scale"])
    assert code == 0
    report = json.loads(out)
    assert report["outcome"] == "match"
    names = [c["name"] for c in report["payload"]["checks"]]
    assert names == [
        "macmahon",
        "vuletic",
        "limit-class",
        "refined-macmahon",
        "limit-series",
        "bb",
        "tangent",
        "oracle",
        "class-structure",
    ]
    assert all(c["match"] for c in report["payload"]["checks"])
