import json

import pytest

from lrpictures import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def lines(out):
    return [json.loads(line) for line in out.splitlines() if line]


def test_coeff(capsys):
    code, out, _ = run(
        capsys, "coeff", "--y", "5,2,1", "--w", "3,2,2,1", "--z", "6,4,2,2,2",
        "--m", "3", "--n", "3",
    )
    assert code == 0
    assert lines(out) == [{"c": 3, "n_super": 3, "equal": True}]


def test_coeff_rejects_non_hook(capsys):
    code, _, err = run(
        capsys, "coeff", "--y", "3,3,3", "--w", "-", "--z", "3,3,3", "--m", "2", "--n", "2"
    )
    assert code == 2
    assert "hook" in err


def test_bad_partition_is_exit_2(capsys):
    code, _, err = run(capsys, "coeff", "--y", "x", "--w", "1", "--z", "1", "--m", "1", "--n", "1")
    assert code == 2
    assert "bad partition" in err


def test_enumerate_ssyt(capsys):
    code, out, _ = run(capsys, "enumerate", "ssyt", "--shape", "2,2", "--max-entry", "2")
    assert code == 0
    assert lines(out) == [{"shape": {"outer": [2, 2], "inner": []}, "rows": [[1, 1], [2, 2]]}]


def test_enumerate_glmn(capsys):
    code, out, _ = run(capsys, "enumerate", "glmn", "--shape", "1,1", "--m", "1", "--n", "1")
    assert code == 0
    assert len(lines(out)) == 2


def test_enumerate_lr_and_map_phihat(capsys):
    code, out, _ = run(
        capsys, "enumerate", "lr", "--y", "5,2,1", "--w", "3,2,2,1", "--z", "6,4,2,2,2"
    )
    assert code == 0
    records = lines(out)
    assert len(records) == 3
    with open("/tmp/lr_member.json", "w") as fh:
        json.dump(records[0], fh)
    code, out, _ = run(capsys, "map", "phihat", "--input", "/tmp/lr_member.json")
    assert code == 0
    assert lines(out) == [
        {"shape": {"outer": [3, 2, 2, 1], "inner": []}, "rows": [[1, 2, 2], [3, 4], [4, 5], [5]]}
    ]


def test_map_flag_mismatch_is_exit_2(capsys):
    code, out, _ = run(
        capsys, "enumerate", "lr", "--y", "5,2,1", "--w", "3,2,2,1", "--z", "6,4,2,2,2"
    )
    with open("/tmp/lr_member.json", "w") as fh:
        json.dump(lines(out)[0], fh)
    code, _, err = run(
        capsys, "map", "phihat", "--input", "/tmp/lr_member.json", "--w", "9"
    )
    assert code == 2
    assert "does not match" in err


def test_map_psi_phi_roundtrip(capsys, tmp_path):
    code, out, _ = run(
        capsys, "enumerate", "lrglr", "--y", "2,1", "--w", "2,1", "--z", "3,2,1"
    )
    assert code == 0
    members = lines(out)
    assert len(members) == 2
    for k, member in enumerate(members):
        path = tmp_path / f"member{k}.json"
        path.write_text(json.dumps(member))
        code, out, _ = run(capsys, "map", "psi", "--input", str(path), "--y", "2,1")
        assert code == 0
        pic = lines(out)[0]
        assert pic["domain"] == member["shape"]
        pic_path = tmp_path / f"pic{k}.json"
        pic_path.write_text(json.dumps(pic))
        code, out, _ = run(capsys, "map", "phi", "--input", str(pic_path))
        assert code == 0
        assert lines(out) == [member]


def test_map_omega(capsys, tmp_path):
    code, out, _ = run(
        capsys, "enumerate", "pictures", "--domain", "2,2", "--codomain", "4,3/2,1"
    )
    assert code == 0
    pic = lines(out)[0]
    path = tmp_path / "pic.json"
    path.write_text(json.dumps(pic))
    code, out, _ = run(capsys, "map", "omega", "--input", str(path))
    assert code == 0
    swapped = lines(out)[0]
    assert swapped["domain"] == pic["codomain"]
    assert sorted(tuple(map(tuple, pair)) for pair in swapped["map"]) == sorted(
        (tuple(v), tuple(u)) for u, v in (pair for pair in pic["map"])
    )


def test_map_psi_requires_y(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(json.dumps({"shape": {"outer": [1], "inner": []}, "rows": [[1]]}))
    code, _, err = run(capsys, "map", "psi", "--input", str(path))
    assert code == 2
    assert "--y" in err


def test_malformed_json_is_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{nope")
    code, _, err = run(capsys, "map", "phi", "--input", str(path))
    assert code == 2
    assert "line 1" in err


def test_missing_file_is_exit_2(capsys):
    code, _, err = run(capsys, "map", "phi", "--input", "/does/not/exist.json")
    assert code == 2


def test_verify_roundtrip_sweep(capsys):
    code, out, err = run(
        capsys, "verify", "roundtrip", "--max-size", "3", "--orders", "ME,FE"
    )
    assert code == 0
    records = lines(out)
    assert records
    for rec in records:
        assert rec["roundtrip_ok"] is True
        assert rec["c"] == rec["n_super"] == rec["pictures"]
    assert "ok" in err


def test_verify_is_deterministic(capsys):
    _, out1, _ = run(capsys, "verify", "roundtrip", "--max-size", "3", "--orders", "ME")
    _, out2, _ = run(capsys, "verify", "roundtrip", "--max-size", "3", "--orders", "ME")
    assert out1 == out2


def test_verify_parallel_matches_serial(capsys):
    _, out1, _ = run(capsys, "verify", "coefficients", "--max-size", "4")
    _, out2, _ = run(capsys, "verify", "coefficients", "--max-size", "4", "--jobs", "2")
    assert out1 == out2


def test_verify_decompositions(capsys):
    code, out, _ = run(capsys, "verify", "decomposition-glr", "--max-size", "2", "--r", "2")
    assert code == 0
    assert all(rec["pass"] for rec in lines(out))
    code, out, _ = run(
        capsys, "verify", "decomposition-glmn", "--max-size", "2", "--m", "1", "--n", "1"
    )
    assert code == 0
    assert all(rec["pass"] for rec in lines(out))


def test_verify_exit_1_on_failure(capsys, monkeypatch):
    from lrpictures import sweeps

    monkeypatch.setattr(sweeps, "record_ok", lambda rec: False)
    code, _, err = run(capsys, "verify", "coefficients", "--max-size", "2")
    assert code == 1
    assert "0/" in err.splitlines()[-1]


def test_order_file_is_honored(capsys, tmp_path):
    path = tmp_path / "order.json"
    # far-eastern order on the column (1,1), written out by hand
    path.write_text(json.dumps([[1, 1], [2, 1]]))
    code, out, _ = run(
        capsys, "enumerate", "lr", "--y", "-", "--w", "1,1", "--z", "1,1",
        "--order", f"@{path}",
    )
    assert code == 0
    assert len(lines(out)) == 1
    # an inadmissible explicit order is refused
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([[1, 1], [1, 2]]))
    code, _, err = run(
        capsys, "enumerate", "lr", "--y", "-", "--w", "2", "--z", "2",
        "--order", f"@{bad}",
    )
    assert code == 2
    assert "admissible" in err


def test_render_cli(capsys, tmp_path):
    path = tmp_path / "shape.json"
    path.write_text(json.dumps([2, 1]))
    code, out, _ = run(capsys, "render", "--input", str(path))
    assert code == 0
    assert "+---+---+" in out
    path.write_text(json.dumps({"shape": {"outer": [1], "inner": []}, "rows": [[1]]}))
    code, out, _ = run(capsys, "render", "--input", str(path))
    assert code == 0
    assert "| 1 |" in out
    path.write_text(json.dumps(42))
    code, _, err = run(capsys, "render", "--input", str(path))
    assert code == 2


def test_usage_error_is_exit_2(capsys):
    code, _, _ = run(capsys, "enumerate", "ssyt", "--shape", "2,2")
    assert code == 2
    code, _, _ = run(capsys, "nope")
    assert code == 2
