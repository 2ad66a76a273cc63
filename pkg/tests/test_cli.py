"""CLI behavior: output, exit codes, file handling."""

import pytest

from z2z4codes.cli import main

C1_TEXT = "2 2\n11|20\n01|11\n"


@pytest.fixture()
def c1_file(tmp_path):
    path = tmp_path / "c1.code"
    path.write_text(C1_TEXT, encoding="utf-8")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info(capsys, c1_file):
    code, out, err = run(capsys, "info", c1_file)
    assert code == 0 and err == ""
    assert "type: (2, 2; 1, 1; 1)" in out
    assert "weight enumerator: x^6 + 4*x^3*y^3 + 3*x^2*y^4" in out


def test_we_variants(capsys, c1_file):
    assert run(capsys, "we", c1_file)[1].strip() == "x^6 + 4*x^3*y^3 + 3*x^2*y^4"
    assert run(capsys, "we", "--variant", "even", c1_file)[1].strip() == "x^6 + 3*x^2*y^4"
    assert (
        run(capsys, "we", "--variant", "shadow", c1_file)[1].strip()
        == "3*x^4*y^2 + 4*x^3*y^3 + y^6"
    )
    assert run(capsys, "we", "--format", "coeffs", c1_file)[1].strip() == "6: 1 0 0 4 3 0 0"


def test_classify(capsys, c1_file):
    code, out, _ = run(capsys, "classify", c1_file)
    assert code == 0 and out.strip() == "Type 0, non-separable, non-antipodal"


def test_dual_output_parses_back(capsys, c1_file, tmp_path):
    code, out, _ = run(capsys, "dual", c1_file)
    assert code == 0
    dual_file = tmp_path / "dual.code"
    dual_file.write_text(out, encoding="utf-8")
    code, out2, _ = run(capsys, "we", str(dual_file))
    assert out2.strip() == "x^6 + 4*x^3*y^3 + 3*x^2*y^4"


def test_dual_oracle_agrees(capsys, c1_file):
    _, plain, _ = run(capsys, "dual", c1_file)
    _, oracle, _ = run(capsys, "dual", "--oracle", c1_file)
    assert plain == oracle


def test_shadow(capsys, c1_file):
    code, out, _ = run(capsys, "shadow", c1_file)
    assert code == 0
    assert "shadow size: 8" in out and "11|22" in out


def test_neighbor_and_exit_codes(capsys, c1_file):
    code, out, _ = run(capsys, "neighbor", c1_file, "11|22")
    assert code == 0 and "2 2" in out
    code, _, err = run(capsys, "neighbor", c1_file, "01|11")
    assert code == 3 and "already a codeword" in err


def test_glue(capsys, c1_file):
    code, out, _ = run(capsys, "glue", c1_file, c1_file)
    assert code == 0
    assert "# variant: matched" in out and "4 4" in out


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "--name", "C2")
    assert code == 0 and out == "2 1\n11|0\n00|2\n"
    code, out, _ = run(
        capsys, "construct", "--alpha", "4", "--beta", "4", "--type", "TypeI", "--non-separable"
    )
    assert code == 0 and out.startswith("4 4\n")


def test_construct_inadmissible(capsys):
    code, _, err = run(capsys, "construct", "--alpha", "3", "--beta", "2", "--type", "Type0")
    assert code == 3 and "alpha = 2 + 2a" in err


def test_search(capsys):
    code, out, _ = run(capsys, "search", "2", "1")
    assert code == 0
    assert out.splitlines()[0] == "1 self-dual codes at alpha=2 beta=1"
    assert "[Type I] 11|0  00|2" in out


def test_search_guard_exit(capsys):
    code, _, err = run(capsys, "search", "8", "4")
    assert code == 4 and "guard" in err


def test_parse_error_exit(capsys, tmp_path):
    bad = tmp_path / "bad.code"
    bad.write_text("nonsense\n", encoding="utf-8")
    code, _, err = run(capsys, "info", str(bad))
    assert code == 2 and "line 1" in err


def test_guard_exit_and_override(capsys, tmp_path):
    big = tmp_path / "big.code"
    big.write_text("20 20\n", encoding="utf-8")
    code, _, err = run(capsys, "info", str(big))
    assert code == 4 and "guard" in err
    small = tmp_path / "n17.code"
    small.write_text("17 0\n", encoding="utf-8")
    code, _, _ = run(capsys, "--guard", "20", "info", str(small))
    assert code == 0


def test_missing_file(capsys):
    with pytest.raises(SystemExit) as err:
        main(["info", "/nonexistent/path.code"])
    assert err.value.code == 1


def test_verify(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert "checks passed" in out and "FAIL" not in out
