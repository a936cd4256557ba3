"""End-to-end checks of the command-line interface, run in-process."""

import json

import pytest

from spinspread.cli import main, parse_group_spec
from spinspread.perms import CayleyTable


def test_spin_writes_representation(tmp_path, capsys):
    out = tmp_path / "spin7.json"
    rc = main(["spin", "--n", "7", "--out", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "degree 8" in text
    obj = json.loads(out.read_text())
    assert obj["degree"] == 8
    assert obj["group"] == "S7"
    assert len(obj["generators"]) == 6
    cert = obj["certificate"]
    assert cert["command"] == "spin"
    assert cert["seed"] == 1
    assert all(c["passed"] for c in cert["checks"])


def test_spin_rejects_small_n(capsys):
    assert main(["spin", "--n", "2"]) == 2
    assert "at least 3" in capsys.readouterr().err


def test_quadtype_prints_decision(capsys):
    assert main(["quadtype", "--parts", "4,2"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert main(["quadtype", "--parts", "4,3"]) == 0
    assert capsys.readouterr().out.strip() == "true"


@pytest.mark.parametrize("parts", ["x,3", "3", "4,2,1", "2,4", "3,0"])
def test_quadtype_rejects_bad_parts(parts, capsys):
    assert main(["quadtype", "--parts", parts]) == 2
    capsys.readouterr()


def test_spread_m3(tmp_path, capsys):
    out = tmp_path / "s3.json"
    rc = main(["spread", "--m", "3", "--out", str(out)])
    assert rc == 0
    assert "7 subspaces of dimension 4" in capsys.readouterr().out
    obj = json.loads(out.read_text())
    assert len(obj["members"]) == 7
    assert obj["report"]["complete"] is False
    assert obj["report"]["pairwise_trivial"] is True


def test_spread_extend_m3_is_complete(tmp_path, capsys):
    out = tmp_path / "s3x.json"
    rc = main(["spread", "--m", "3", "--extend", "--out", str(out)])
    assert rc == 0
    capsys.readouterr()
    obj = json.loads(out.read_text())
    assert len(obj["members"]) == 9
    assert obj["report"]["complete"] is True
    assert obj["report"]["singular_coverage"] == 135


def test_spread_rejects_bad_args(capsys):
    assert main(["spread", "--m", "2"]) == 2
    assert main(["spread", "--m", "4", "--extend"]) == 2
    assert main(["spread", "--m", "5", "--extend"]) == 2
    capsys.readouterr()


def test_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    rc = main(["verify", str(out)])
    assert rc == 0
    assert "stored_report_reproduced" in capsys.readouterr().out


def test_verify_detects_tampering(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    obj = json.loads(out.read_text())
    row = obj["members"][0][0]
    flipped = ("1" if row[0] == "0" else "0") + row[1:]
    obj["members"][0][0] = flipped
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(obj))
    rc = main(["verify", str(bad)])
    assert rc == 1
    assert "FAIL" in capsys.readouterr().out


def test_verify_missing_file_is_usage_error(tmp_path, capsys):
    assert main(["verify", str(tmp_path / "nope.json")]) == 2
    capsys.readouterr()


def test_a9_certificate(tmp_path, capsys):
    out = tmp_path / "a9.json"
    rc = main(["a9", "--out", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "covering 135 singular vectors" in text
    obj = json.loads(out.read_text())
    assert obj["certificate"]["outputs"]["block_count"] == 9
    assert obj["certificate"]["outputs"]["block_size"] == 15
    assert obj["provenance"]["group"] == "A9"


def test_action_cyclic7_regular(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    capsys.readouterr()
    rc = main(["action", "--group", "cyclic:7", "--spread", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "orbit sizes [7]" in text
    assert "regular: true" in text


def test_action_cyclic6_fixes_one_member(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    capsys.readouterr()
    rc = main(["action", "--group", "cyclic:6", "--spread", str(out)])
    assert rc == 0
    text = capsys.readouterr().out
    assert "orbit sizes [1, 6]" in text
    assert "regular: false" in text


def test_action_elemabelian9_on_a9(tmp_path, capsys):
    out = tmp_path / "a9.json"
    main(["a9", "--out", str(out)])
    capsys.readouterr()
    rc = main(["action", "--group", "elemabelian:9", "--spread", str(out)])
    assert rc == 0
    assert "regular: true" in capsys.readouterr().out


def test_action_from_cayley_file(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    table = [[(a + b) % 7 for b in range(7)] for a in range(7)]
    table_path = tmp_path / "c7.json"
    table_path.write_text(json.dumps(table))
    capsys.readouterr()
    rc = main(["action", "--group", f"cayley:{table_path}", "--spread", str(out)])
    assert rc == 0
    assert "regular: true" in capsys.readouterr().out


def test_action_rejects_bad_group_specs(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    capsys.readouterr()
    assert main(["action", "--group", "frobnicate:3", "--spread", str(out)]) == 2
    assert main(["action", "--group", "elemabelian:6", "--spread", str(out)]) == 2
    assert main(["action", "--group", "cyclic:no", "--spread", str(out)]) == 2
    capsys.readouterr()


def test_action_rejects_broken_cayley_table(tmp_path, capsys):
    out = tmp_path / "s3.json"
    main(["spread", "--m", "3", "--out", str(out)])
    # row 1 repeats an element, so left translation is not a bijection
    table_path = tmp_path / "broken.json"
    table_path.write_text(json.dumps([[0, 1], [1, 1]]))
    capsys.readouterr()
    rc = main(["action", "--group", f"cayley:{table_path}", "--spread", str(out)])
    assert rc == 2
    capsys.readouterr()


def test_parse_group_spec_constructors():
    assert parse_group_spec("cyclic:5").order == 5
    assert parse_group_spec("elemabelian:8").order == 8
    assert parse_group_spec("elemabelian:9").order == 9
    assert parse_group_spec("dihedral:4").order == 8
    assert parse_group_spec("quaternion8").order == 8
    assert parse_group_spec("elemabelian:9") == CayleyTable.elementary_abelian(3, 2)
    with pytest.raises(ValueError):
        parse_group_spec("quaternion8:2")
    with pytest.raises(ValueError):
        parse_group_spec("cayley:")


def test_output_is_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["spread", "--m", "3", "--out", str(a)])
    main(["spread", "--m", "3", "--out", str(b)])
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_seed_is_recorded(tmp_path, capsys):
    out = tmp_path / "s3.json"
    rc = main(["--seed", "5", "spread", "--m", "3", "--out", str(out)])
    assert rc == 0
    capsys.readouterr()
    obj = json.loads(out.read_text())
    assert obj["certificate"]["seed"] == 5


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
