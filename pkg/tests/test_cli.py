import io
import json
import subprocess
import sys

import numpy as np
import pytest

from rankindep.cli import main, read_columns, InputError


def run(argv, stdin=None):
    """Run the CLI in-process; returns (exit code, stdout)."""
    out = io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(argv, out)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    finally:
        sys.stdin = old
    return code, out.getvalue()


def write(tmp_path, text, name="data.txt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_generate_monotone_rows():
    code, out = run(["generate", "monotone", "5", "--seed", "1"])
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert len(rows) == 5
    for x, y in rows:
        assert x == y
        assert len(x.replace("0.", "", 1).lstrip("0")) <= 17


def test_generate_reproducible_and_in_range():
    a = run(["generate", "yanagimoto", "1", "--seed", "42"])
    b = run(["generate", "yanagimoto", "1", "--seed", "42"])
    assert a == b
    code, out = run(["generate", "binary", "1000", "--seed", "3"])
    vals = np.loadtxt(io.StringIO(out))
    assert vals.shape == (1000, 2)
    assert np.all((vals >= 0) & (vals <= 1))


def test_generate_roundtrips_exactly():
    from rankindep.generators import generate
    code, out = run(["generate", "hyperbola", "50", "--seed", "9"])
    vals = np.array([[float(v) for v in line.split("\t")] for line in out.splitlines()])
    s = generate("hyperbola", 50, seed=9)
    assert np.array_equal(vals[:, 0], s.xs) and np.array_equal(vals[:, 1], s.ys)


def test_generate_unknown_exits_2():
    assert run(["generate", "spiral", "10"])[0] == 2


def test_monotone_input_all_tests(tmp_path):
    x = np.linspace(0.001, 1, 300)
    text = "x,y\n" + "".join(f"{a},{2 * a + 1}\n" for a in x)
    code, out = run(["test", "--input", write(tmp_path, text), "--test", "all"])
    assert code == 0
    res = json.loads(out)
    assert [r["statistic"] for r in res] == ["HOEFFDING_D", "REFINED_R", "TAU_STAR"]
    assert res[0]["value"] == 1 / 30
    assert res[2]["value"] == 2 / 3
    for r in res:
        assert set(r) == {"statistic", "value", "scaled", "n", "p_value", "p_method", "seed"}
        assert r["p_value"] == 1 / (1 + 2_000_000)
        assert r["n"] == 300


def test_yanagimoto_input(tmp_path):
    _, data = run(["generate", "yanagimoto", "300", "--seed", "0"])
    code, out = run(["test", "--input", write(tmp_path, data)])
    assert code == 0
    h, r, t = json.loads(out)
    assert h["p_value"] > 0.01
    assert r["p_value"] < 1e-3 and t["p_value"] < 1e-3


def test_stdin_and_tsv_output():
    data = "".join(f"{i}\t{(i * 7) % 11}\n" for i in range(11))
    code, out = run(["test", "--test", "taustar", "--pvalue", "none", "--format", "tsv"], data)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "statistic\tvalue\tscaled\tn\tp_value\tp_method\tseed"
    fields = lines[1].split("\t")
    assert fields[0] == "TAU_STAR" and fields[3] == "11" and fields[4] == "NA"


def test_whitespace_separated_with_header():
    data = "first second\n" + "".join(f"{i}  {i * 5 % 13}\n" for i in range(1, 13))
    code, out = run(["test", "--test", "hoeffding", "--pvalue", "none"], data)
    assert code == 0
    assert json.loads(out)[0]["n"] == 12


def test_permutation_output_is_byte_identical(tmp_path):
    _, data = run(["generate", "hyperbola", "80", "--seed", "5"])
    path = write(tmp_path, data)
    argv = ["test", "--input", path, "--pvalue", "permutation", "--resamples", "199", "--seed", "11"]
    a, b = run(argv), run(argv)
    assert a == b and a[0] == 0
    res = json.loads(a[1])
    assert all(r["p_method"] == "permutation" and r["seed"] == 11 for r in res)


def test_null_cache_flag(tmp_path):
    cache = tmp_path / "null.bin"
    data = "".join(f"{i},{(i * 5) % 17}\n" for i in range(17))
    code, _ = run(["test", "--null-cache", str(cache)], data)
    assert code == 0
    assert cache.read_bytes()[:8] == b"NDCACHE1"
    assert run(["test", "--null-cache", str(cache)], data)[0] == 0


def test_duplicate_x_exits_3():
    data = "1,2\n1,3\n2,4\n3,5\n4,6\n5,7\n"
    assert run(["test"], data)[0] == 3
    assert run(["test", "--ties", "random", "--seed", "1"], data)[0] == 0


def test_too_small_exits_4():
    data = "1,2\n2,1\n3,4\n4,3\n"
    assert run(["test"], data)[0] == 4
    assert run(["test", "--test", "taustar"], data)[0] == 0
    assert run(["test", "--test", "taustar"], "1,2\n2,1\n3,3\n")[0] == 4


@pytest.mark.parametrize("data, line", [
    ("x,y\n1,2\n2,abc\n", 3),
    ("1,2\n2,3,4\n", 2),
    ("1,2\n\n5,nan\n", 3),
    ("1\t2\n3\n", 2),
])
def test_parse_errors_exit_2_with_line(data, line, capsys):
    code, _ = run(["test"], data)
    assert code == 2
    assert f"line {line}" in capsys.readouterr().err


def test_read_columns_header_only_first_line():
    with pytest.raises(InputError):
        read_columns(io.StringIO("a,b\nc,d\n1,2\n"))
    xs, ys = read_columns(io.StringIO("\n  \n1.5e-3, -2\n"))
    assert xs == [1.5e-3] and ys == [-2.0]


def test_usage_errors_exit_2():
    assert run(["test", "--pvalue", "exact"])[0] == 2
    assert run(["test", "--resamples", "0"])[0] == 2
    assert run(["test", "--seed", str(2**64)])[0] == 2
    assert run(["frobnicate"])[0] == 2


def test_missing_file_exits_2(tmp_path):
    assert run(["test", "--input", str(tmp_path / "absent.csv")])[0] == 2


def test_help_documents_scaling(capsys):
    run(["test", "--help"])
    assert "n*tau*/36" in capsys.readouterr().out


def test_benchmark_small_sizes():
    code, out = run(["benchmark", "--sizes", "1000", "10000", "--format", "tsv"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tstatistic\tseconds"
    timed = [l.split("\t") for l in lines[1:] if not l.startswith("slope")]
    slopes = [l.split("\t") for l in lines if l.startswith("slope")]
    assert len(timed) == 6
    assert {s[1] for s in slopes} == {"hoeffding", "refined", "taustar"}


def test_benchmark_json_and_order_check():
    code, out = run(["benchmark", "--sizes", "500", "5000", "--test", "taustar"])
    doc = json.loads(out)
    assert code == 0 and set(doc["slopes"]) == {"taustar"}
    assert run(["benchmark", "--sizes", "5000", "500"])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "rankindep", "generate", "independent", "3"],
                          capture_output=True, text=True, check=True)
    assert len(proc.stdout.splitlines()) == 3
