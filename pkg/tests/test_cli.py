"""End-to-end tests of the command-line interface via cli.main()."""

import pytest

from graphdd import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_threshold(capsys):
    code, out, _ = run(capsys, "count", "--class", "threshold", "-n", "5")
    assert code == 0
    assert out.strip() == "16"


def test_count_proper_interval(capsys):
    code, out, _ = run(capsys, "count", "--class", "proper-interval", "-n", "3")
    assert code == 0
    assert out.strip() == "2"


def test_count_chain(capsys):
    code, out, _ = run(capsys, "count", "--class", "chain", "-n", "3")
    assert code == 0
    assert out.strip() == "3"


def test_count_bigint(capsys):
    code, out, _ = run(capsys, "count", "--class", "threshold", "-n", "64")
    assert code == 0
    assert out.strip() == str(2**63)


def test_count_stats(capsys):
    code, out, _ = run(capsys, "count", "--class", "threshold", "-n", "4", "--stats")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "8"
    assert lines[1] == "level 1: 1 nodes"
    assert lines[-1] == "total 5 nodes"


def test_sample_deterministic_seed(capsys):
    args = ("sample", "--class", "proper-interval", "-n", "2", "--seed", "7")
    code, out1, _ = run(capsys, *args)
    assert code == 0
    assert out1 == "2 1\n1 2\n"
    code, out2, _ = run(capsys, *args)
    assert code == 0
    assert out1 == out2


def test_sample_seeded_runs_identical(capsys):
    args = (
        "sample", "--class", "proper-interval", "-n", "6",
        "--seed", "123", "--limit", "20", "--format", "string",
    )
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    assert len(out1.splitlines()) == 20


def test_sample_string_format(capsys):
    code, out, _ = run(
        capsys, "sample", "--class", "threshold", "-n", "1", "--seed", "0",
        "--format", "string",
    )
    assert code == 0
    assert out == "\n"  # single vertex encodes as the empty string


def test_sample_limit_draws(capsys):
    code, out, _ = run(
        capsys, "sample", "--class", "threshold", "-n", "2", "--seed", "1",
        "--limit", "5",
    )
    assert code == 0
    # each record is "2 0" (one line) or "2 1\n1 2" (two lines)
    lines = out.splitlines()
    assert 5 <= len(lines) <= 10
    assert sum(1 for ln in lines if ln.startswith("2 ")) == 5


def test_sample_empty_language(capsys):
    code, _, err = run(
        capsys, "sample", "--class", "proper-interval", "-n", "4", "--edges", "0",
    )
    assert code == 2
    assert "error" in err


def test_list_strings(capsys):
    code, out, _ = run(
        capsys, "list", "--class", "proper-interval", "-n", "3",
        "--format", "string",
    )
    assert code == 0
    assert set(out.split()) == {"LLLRRR", "LLRLRR"}


def test_list_chain_single_vertex(capsys):
    code, out, _ = run(
        capsys, "list", "--class", "chain", "-n", "1", "--format", "string"
    )
    assert code == 0
    assert out == "L\n"


def test_list_edge_records_self_delimiting(capsys):
    code, out, _ = run(capsys, "list", "--class", "threshold", "-n", "2")
    assert code == 0
    # two graphs: edgeless (header only) and a single edge (header + pair)
    assert out == "2 0\n2 1\n1 2\n"


def test_list_refuses_large_output(capsys):
    code, _, err = run(capsys, "list", "--class", "threshold", "-n", "12")
    assert code == 3
    assert "2048" in err


def test_list_limit_overrides_refusal(capsys):
    code, out, _ = run(
        capsys, "list", "--class", "threshold", "-n", "12",
        "--limit", "4", "--format", "string",
    )
    assert code == 0
    assert len(out.splitlines()) == 4


def test_list_count_agreement(capsys):
    code, count_out, _ = run(capsys, "count", "--class", "cochain", "-n", "6")
    assert code == 0
    code, list_out, _ = run(
        capsys, "list", "--class", "cochain", "-n", "6", "--format", "string"
    )
    assert code == 0
    strings = list_out.split()
    assert len(strings) == int(count_out.strip()) == 32
    assert len(set(strings)) == 32


def test_invalid_vertex_count(capsys):
    code, _, err = run(capsys, "count", "--class", "chain", "-n", "0")
    assert code == 2
    assert "error" in err


def test_invalid_bp_clique(capsys):
    code, _, _ = run(
        capsys, "count", "--class", "bipartite-permutation", "-n", "4",
        "--max-clique", "2",
    )
    assert code == 2


def test_invalid_k_and_m_together(capsys):
    code, _, _ = run(
        capsys, "count", "--class", "threshold", "-n", "4",
        "--max-clique", "2", "--edges", "3",
    )
    assert code == 2


def test_biclique_flag_rejected_off_chain(capsys):
    code, _, err = run(
        capsys, "count", "--class", "threshold", "-n", "4", "--max-biclique", "3"
    )
    assert code == 2
    assert "chain" in err


def test_biclique_flag_exclusive_with_clique(capsys):
    code, _, _ = run(
        capsys, "count", "--class", "chain", "-n", "5",
        "--max-clique", "3", "--max-biclique", "3",
    )
    assert code == 2


def test_chain_biclique_count(capsys):
    code, out, _ = run(
        capsys, "count", "--class", "chain", "-n", "5", "--max-biclique", "3"
    )
    assert code == 0
    assert out.strip() == "4"


def test_verify_threshold_range(capsys):
    code, out, _ = run(capsys, "verify", "-n", "1..5", "--class", "threshold")
    assert code == 0
    assert "all cross-checks passed" in out
    counts = [
        int(ln.split()[4])
        for ln in out.splitlines()
        if ln.startswith("threshold")
    ]
    assert counts == [1, 2, 4, 8, 16]


def test_verify_reports_formula_audit(capsys):
    code, out, _ = run(capsys, "verify", "-n", "4", "--class", "proper-interval")
    assert code == 0
    assert "edge-count formula audit" in out
    assert "literal sum of heights at L positions: 3 (claims m, overcounts)" in out
    assert "literal sum of even-position heights: 2 (claims m, overcounts)" in out


def test_verify_beyond_oracle_limit(capsys):
    code, _, err = run(capsys, "verify", "-n", "9", "--class", "threshold")
    assert code == 3
    assert "error" in err


def test_verify_bad_range(capsys):
    code, _, _ = run(capsys, "verify", "-n", "3..1", "--class", "threshold")
    assert code == 2


def test_export_dot(tmp_path, capsys):
    target = tmp_path / "pi4.dot"
    code, _, _ = run(
        capsys, "export", "--class", "proper-interval", "-n", "4",
        "-o", str(target),
    )
    assert code == 0
    text = target.read_text()
    assert text.startswith("digraph")
    assert text.rstrip().endswith("}")


def test_export_unwritable_path(capsys):
    code, _, err = run(
        capsys, "export", "--class", "chain", "-n", "3",
        "-o", "/nonexistent-dir/x.dot",
    )
    assert code == 1
    assert "error" in err


def test_argparse_rejects_unknown_class(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["count", "--class", "mystery", "-n", "3"])
    assert exc.value.code == 2
