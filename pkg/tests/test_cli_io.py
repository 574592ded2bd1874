from __future__ import annotations

import json

import pytest

from cihodge.cli import main
from cihodge.engine import compute_diamond
from cihodge.errors import SchemaError, SpecError
from cihodge.io import (
    ambient_from_obj,
    diamond_from_json,
    diamond_to_json,
    dumps_ambient,
    load_ambient,
    loads_ambient,
    parse_ambient_name,
    parse_degrees,
)
from cihodge.variety import CISpec, ProjectiveSpace


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def quadric_file(tmp_path, quadric3):
    path = tmp_path / "quadric3.json"
    path.write_text(dumps_ambient(quadric3), encoding="utf-8")
    return path


def test_parsers():
    assert parse_ambient_name("P4") == ProjectiveSpace(4)
    assert parse_degrees("2, 3") == (2, 3)
    with pytest.raises(SpecError):
        parse_ambient_name("Q3")
    with pytest.raises(SpecError):
        parse_degrees("2,x")
    with pytest.raises(SpecError):
        parse_degrees("")


def test_diamond_json_round_trip():
    quintic = compute_diamond(CISpec(ProjectiveSpace(4), (5,)))
    assert diamond_from_json(json.loads(json.dumps(diamond_to_json(quintic)))) == quintic


def test_diamond_pretty(capsys):
    code, out, _ = run(capsys, "diamond", "--ambient", "P4", "--degrees", "5")
    assert code == 0
    assert "euler characteristic -200" in out
    assert "101" in out


def test_diamond_json_and_csv(capsys):
    code, out, _ = run(capsys, "diamond", "--ambient", "P4", "--degrees", "5", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["dim"] == 3
    assert [3, 2, 1, 101] in obj["cohomology"]
    code, out, _ = run(capsys, "diamond", "--ambient", "P2", "--degrees", "3", "--format", "csv")
    assert out.splitlines()[0] == "k,p,q,value"
    assert "1,1,0,1" in out.splitlines()


def test_json_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "mhs", "--degrees", "5", "--split", "3,2", "--format", "json")
    _, second, _ = run(capsys, "mhs", "--degrees", "5", "--split", "3,2", "--format", "json")
    assert first == second


def test_mhs_outputs(capsys):
    code, out, _ = run(capsys, "mhs", "--ambient", "P4", "--degrees", "5", "--split", "3,2")
    assert code == 0
    assert "h^{2,1} = 1 + 0 + 5 + 76 + 19 = 101" in out
    code, out, _ = run(capsys, "mhs", "--degrees", "5", "--format", "json")
    obj = json.loads(out)
    assert [p["weight"] for p in obj["pieces"]] == [2, 3, 4]
    assert [2, 1, 101] in obj["hodge_numbers"]
    code, out, _ = run(capsys, "mhs", "--degrees", "5", "--format", "csv")
    assert out.splitlines()[0] == "weight,p,q,value"


def test_trace_outputs(capsys):
    code, out, _ = run(capsys, "trace", "--ambient", "P3", "--degrees", "4", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert len(obj["nodes"]) <= 20 and obj["depth"] <= 4
    assert obj["nodes"][0]["key"] == "P3[4]"
    code, out, _ = run(capsys, "trace", "--ambient", "P3", "--degrees", "4")
    assert out.startswith("# 11 nodes, depth 3")


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--ambient", "P2", "--max-degree", "4", "--format", "json")
    rows = json.loads(out)
    assert code == 0
    assert [r["middle"][0] for r in rows] == [0, 0, 1, 3]


def test_usage_errors_exit_2(capsys):
    code, _, err = run(capsys, "diamond", "--ambient", "P2", "--degrees", "2,2,2")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "diamond", "--ambient", "X9", "--degrees", "2")
    assert code == 2
    code, _, err = run(capsys, "mhs", "--degrees", "5", "--split", "2,2")
    assert code == 2 and "--split" in err
    code, _, err = run(capsys, "diamond", "--ambient-file", "/nonexistent.json", "--degrees", "2")
    assert code == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["diamond"])
    assert info.value.code == 2


def test_ambient_file_round_trip_is_byte_identical(quadric_file):
    text = quadric_file.read_text(encoding="utf-8")
    assert dumps_ambient(load_ambient(quadric_file)) == text
    assert dumps_ambient(loads_ambient(text)) == text


def test_shifted_ambient_cannot_be_serialized(quadric3):
    with pytest.raises(SpecError):
        dumps_ambient(quadric3.shifted(1))


def test_projective_ambient_object():
    assert ambient_from_obj({"kind": "projective", "dim": 3}) == ProjectiveSpace(3)


@pytest.mark.parametrize(
    "mutate, field",
    [
        (lambda o: o.pop("degree"), "degree"),
        (lambda o: o.update(kind="weird"), "kind"),
        (lambda o: o.update(dim="3"), "dim"),
        (lambda o: o.update(extra=1), "extra"),
        (lambda o: o["sections"].pop(), "sections"),
        (lambda o: o["sections"][1].append([6, 3, 3, 1]), "sections[1]"),
        (lambda o: o["sections"][1][0].__setitem__(0, 5), "sections[1][0]"),
        (lambda o: o["sections"][2].append([1, 1, 1, 1]), "sections[2][2]"),
    ],
)
def test_schema_errors_name_the_field(quadric_file, mutate, field):
    obj = json.loads(quadric_file.read_text(encoding="utf-8"))
    mutate(obj)
    with pytest.raises(SchemaError) as info:
        ambient_from_obj(obj)
    assert info.value.field == field
    assert f"field {field}" in str(info.value)


def test_schema_error_reports_json_line():
    with pytest.raises(SchemaError) as info:
        loads_ambient('{\n  "kind": "custom",\n  "dim": 3,,\n}')
    assert info.value.line == 3


def test_invalid_tower_is_rejected_by_cli(tmp_path, quadric_file, capsys):
    obj = json.loads(quadric_file.read_text(encoding="utf-8"))
    obj["sections"][3] = [[0, 0, 0, 3]]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj), encoding="utf-8")
    code, _, err = run(capsys, "diamond", "--ambient-file", str(bad), "--degrees", "2")
    assert code == 2 and "degree" in err
    bad.write_text("[1, 2", encoding="utf-8")
    code, _, err = run(capsys, "diamond", "--ambient-file", str(bad), "--degrees", "2")
    assert code == 2 and "line 1" in err


def test_two_paths_agree_through_the_cli(quadric_file, capsys):
    _, custom, _ = run(capsys, "diamond", "--ambient-file", str(quadric_file), "--degrees", "3", "--format", "json")
    _, builtin, _ = run(capsys, "diamond", "--ambient", "P4", "--degrees", "2,3", "--format", "json")
    assert custom == builtin


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-ambient-dim", "4", "--max-degree", "6")
    assert code == 0
    assert out.strip().endswith("all checks passed")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-ambient-dim", "3", "--max-degree", "4", "--format", "json")
    obj = json.loads(out)
    assert code == 0 and obj["passed"]
    assert "plane-curve-genus" in [c["name"] for c in obj["checks"]]


def test_verify_catches_unreduced_point_convention(capsys):
    code, out, _ = run(capsys, "verify", "--max-ambient-dim", "3", "--max-degree", "5", "--unreduced-points")
    assert code == 1
    assert "FAIL  plane-curve-genus" in out


@pytest.mark.parametrize("ambient, degrees", [("P4", "5"), ("P3", "4"), ("P5", "2,3"), ("P2", "7")])
def test_pretty_and_json_carry_the_same_numbers(capsys, ambient, degrees):
    _, pretty, _ = run(capsys, "diamond", "--ambient", ambient, "--degrees", degrees)
    _, as_json, _ = run(capsys, "diamond", "--ambient", ambient, "--degrees", degrees, "--format", "json")
    rows = [[int(x) for x in line.split()] for line in pretty.splitlines()[1:]]
    assert rows == diamond_from_json(json.loads(as_json)).rows()
