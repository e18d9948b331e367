"""Command line surface: subcommands, formats, exit codes."""

import json

import pytest

from quivertau.cli import main

B1 = "catalog:B1"
N3 = "catalog:N(3)"
N4 = "catalog:N(4)"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestClassify:
    def test_expect_match(self, capsys):
        code, out, _ = run(capsys, "classify", "catalog:A(2,+)",
                           "catalog:A(4,+-+)", "--expect", "finite")
        assert code == 0
        assert "status: finite" in out

    def test_expect_mismatch_exit_3(self, capsys):
        code, _, _ = run(capsys, "classify", N3, B1,
                         "--expect", "infinite")
        assert code == 3

    def test_json_and_text_agree(self, capsys):
        code, text_out, _ = run(capsys, "classify", N4, "catalog:LNak4")
        assert code == 0
        code, json_out, _ = run(capsys, "classify", N4, "catalog:LNak4",
                                "--format", "json")
        assert code == 0
        payload = json.loads(json_out)
        assert payload["status"] == "infinite"
        assert f"status: {payload['status']}" in text_out
        assert payload["rule"] in text_out
        assert payload["witness"]["frame"] == "n4-LNak4"
        assert isinstance(payload["trace"], list)

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "a2.quiver"
        path.write_text("vertex 1\nvertex 2\narrow a : 1 -> 2\n",
                        encoding="utf-8")
        code, out, _ = run(capsys, "classify", str(path), str(path))
        assert code == 0
        assert "status: finite" in out

    def test_missing_file_exit_2(self, capsys):
        code, _, err = run(capsys, "classify", "nope.quiver", N3)
        assert code == 2
        assert "input error" in err

    def test_bad_catalog_id_exit_2(self, capsys):
        code, _, _ = run(capsys, "classify", "catalog:Z", N3)
        assert code == 2

    def test_usage_error_exit_1(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["classify"])
        assert exc.value.code == 1


class TestOtherCommands:
    def test_single(self, capsys):
        code, out, _ = run(capsys, "single", "catalog:A(4,+++)",
                           "--expect", "finite")
        assert code == 0

    def test_envelope(self, capsys):
        code, out, _ = run(capsys, "envelope", N4)
        assert code == 0 and "finite" in out
        code, out, _ = run(capsys, "envelope", "catalog:A(3,++)")
        assert "infinite" in out

    def test_self_tensor(self, capsys, tmp_path):
        path = tmp_path / "cycle.quiver"
        path.write_text(
            "vertex 1\nvertex 2\nvertex 3\n"
            "arrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 3 -> 1\n",
            encoding="utf-8")
        code, out, _ = run(capsys, "self-tensor", str(path))
        assert code == 0 and "infinite" in out

    def test_triple(self, capsys):
        code, out, _ = run(capsys, "triple", "catalog:A(2,+)",
                           "catalog:A(2,+)", "catalog:A(2,+)")
        assert code == 0 and "infinite" in out

    def test_tensor_roundtrip(self, capsys, tmp_path):
        code, out, _ = run(capsys, "tensor", "catalog:A(2,+)", N3)
        assert code == 0
        from quivertau.presentation import parse_presentation
        pres = parse_presentation(out)
        assert len(pres.quiver.vertices) == 6

    def test_adachi(self, capsys):
        code, out, _ = run(capsys, "adachi", "catalog:N(5)",
                           "--mode", "naive", "--expect", "finite")
        assert code == 0

    def test_separated(self, capsys):
        code, out, _ = run(capsys, "separated", N3, "--format", "json")
        payload = json.loads(out)
        assert sorted(payload["components"]) == ["A1", "A1", "A2", "A2"]

    def test_graph_type(self, capsys):
        code, out, _ = run(capsys, "graph-type", "catalog:D(4,+++)")
        assert code == 0 and "D4" in out

    def test_dim(self, capsys):
        code, out, _ = run(capsys, "dim", B1)
        assert code == 0 and "total: 7" in out

    def test_quotient_search(self, capsys):
        code, out, _ = run(capsys, "quotient-search", "catalog:B5_1",
                           "--target", B1)
        assert code == 0 and "killed vertices: 5" in out
        code, out, _ = run(capsys, "quotient-search", N3,
                           "--target", "catalog:LNak4")
        assert code == 0 and "no quotient witness" in out

    def test_catalog_list_and_show(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0 and "B1" in out and "a4n3:+-+" in out
        code, out, _ = run(capsys, "catalog", "show", "B1")
        assert code == 0 and "zero γ.β" in out

    def test_witness(self, capsys):
        code, out, _ = run(capsys, "witness", "--frame", "a4n3:+-+")
        assert code == 0
        assert "hereditary check: True" in out
        code, out, _ = run(capsys, "witness", "--frame", "a3a3:++,++")
        assert code == 0
        assert "count-anomaly (paper figure)" in out

    def test_strings(self, capsys):
        code, out, _ = run(capsys, "strings", "catalog:N(5)")
        assert code == 0 and "band: none" in out

    def test_table(self, capsys):
        code, out, _ = run(capsys, "table", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_ok"]
        assert len(payload["rows"]) >= 24

    def test_verdict_json_schema_round_trip(self, capsys):
        code, out, _ = run(capsys, "classify", N3, "catalog:B5_2",
                           "--format", "json")
        payload = json.loads(out)
        assert set(payload) >= {"status", "rule", "citation", "trace"}
        assert json.loads(json.dumps(payload)) == payload

    def test_byte_identical_reruns(self, capsys):
        outputs = set()
        for _ in range(2):
            _, out, _ = run(capsys, "classify", N4, "catalog:B5_1",
                            "--format", "json")
            outputs.add(out)
        assert len(outputs) == 1
        for _ in range(2):
            _, out, _ = run(capsys, "table")
            outputs.add(out)
        assert len(outputs) == 2
