import subprocess
import sys

import pytest

from conftest import FIG1_TEXT
from slpgram.cli import main
from slpgram.slp import format_slp, parse_slp


@pytest.fixture
def fig1_file(tmp_path, fig1):
    path = tmp_path / "fig1.slp"
    path.write_bytes(format_slp(fig1))
    return path


@pytest.fixture
def raw_file(tmp_path):
    path = tmp_path / "fig1.txt"
    path.write_bytes(FIG1_TEXT)
    return path


def run(capsysbinary, *argv):
    code = main([str(a) for a in argv])
    out, err = capsysbinary.readouterr()
    return code, out, err


def test_compress_decompress_roundtrip(tmp_path, capsysbinary, corpora):
    src = corpora[0]
    slp_path = tmp_path / "out.slp"
    code, _, err = run(capsysbinary, "compress", src, slp_path)
    assert code == 0
    assert b"n=" in err and b"T_len=" in err
    code, out, _ = run(capsysbinary, "decompress", slp_path)
    assert code == 0 and out == src.read_bytes()


def test_compress_one_byte(tmp_path, capsysbinary):
    src = tmp_path / "one"
    src.write_bytes(b"z")
    code, out, _ = run(capsysbinary, "compress", src)
    assert code == 0 and out == b"SLP 1\nT 122\n"


def test_compress_repetitive_shrinks(tmp_path, capsysbinary, corpora):
    versions = [p for p in corpora if p.name == "versions.txt"][0]
    code, out, _ = run(capsysbinary, "compress", versions)
    assert parse_slp(out).n < len(versions.read_bytes())


def test_count_ssa(capsysbinary, fig1_file):
    code, out, _ = run(capsysbinary, "count", fig1_file, "--q", 2, "--algo", "ssa")
    assert code == 0
    assert out == b"aa\t3\nab\t5\nba\t4\n"


@pytest.mark.parametrize("algo", ["nmp", "nsa"])
def test_count_raw_matches(capsysbinary, raw_file, algo):
    code, out, _ = run(capsysbinary, "count", raw_file, "--q", 2, "--algo", algo)
    assert code == 0 and out == b"aa\t3\nab\t5\nba\t4\n"


def test_count_all_algorithms_agree(capsysbinary, fig1_file):
    outs = set()
    for algo in ("nmp", "nsa", "smp", "ssa"):
        code, out, _ = run(capsysbinary, "count", fig1_file, "--q", 3, "--algo", algo, "--expand")
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_count_q_too_large(capsysbinary, fig1_file):
    code, out, _ = run(capsysbinary, "count", fig1_file, "--q", 50)
    assert code == 0 and out == b""


def test_count_format_errors(capsysbinary, fig1_file, raw_file):
    code, _, err = run(capsysbinary, "count", fig1_file, "--q", 2, "--algo", "nmp")
    assert code == 1 and b"--expand" in err
    code, _, err = run(capsysbinary, "count", raw_file, "--q", 2, "--algo", "ssa")
    assert code == 1
    code, _, err = run(capsysbinary, "count", raw_file, "--q", 0, "--algo", "nmp")
    assert code == 1


def test_bad_slp_file(tmp_path, capsysbinary):
    bad = tmp_path / "bad.slp"
    bad.write_bytes(b"SLP 2\nT 97\n")
    code, _, err = run(capsysbinary, "decompress", bad)
    assert code == 1 and b"error" in err


def test_kernel_self(capsysbinary, fig1_file):
    code, out, _ = run(capsysbinary, "kernel", fig1_file, fig1_file, "--q", 2)
    assert code == 0 and out == b"50\n"  # 3^2 + 5^2 + 4^2
    _, counts, _ = run(capsysbinary, "count", fig1_file, "--q", 2)
    assert int(out) == sum(int(line.split(b"\t")[1]) ** 2 for line in counts.splitlines())


def test_discover_toy(tmp_path, capsysbinary):
    d1, d2 = tmp_path / "pos", tmp_path / "neg"
    d1.mkdir()
    d2.mkdir()
    (d1 / "a.txt").write_bytes(b"aab")
    (d1 / "b.txt").write_bytes(b"aba")
    (d2 / "c.txt").write_bytes(b"bbb")
    code, out, _ = run(capsysbinary, "discover", d1, d2, "--q", 2)
    assert code == 0
    first = out.splitlines()[0].split(b"\t")
    assert first == [b"ab", b"2", b"0", b"2", b"0", b"1.0"]
    code, out, _ = run(capsysbinary, "discover", d1, d2, "--q", 2, "--scorer", "chi2", "--top", 1)
    assert len(out.splitlines()) == 1 and out.startswith(b"ab\t")


def test_genfib(capsysbinary, tmp_path):
    code, out, _ = run(capsysbinary, "genfib", 5)
    assert code == 0
    path = tmp_path / "f5.slp"
    path.write_bytes(out)
    code, text, _ = run(capsysbinary, "decompress", path)
    assert text == b"abaab"


def test_bench_rows(capsysbinary, fig1_file):
    code, out, _ = run(capsysbinary, "bench", fig1_file, "fib:15", "--q", "2,3", "--repeats", 3)
    assert code == 0
    lines = [line.split(b"\t") for line in out.splitlines()]
    assert lines[0] == b"input\talgo\tq\tn\tT_len\tz_len\tz_ratio\tmean_secs\trepeats".split(b"\t")
    rows = lines[1:]
    assert len(rows) == 2 * 2 * 4
    for row in rows:
        q, n, z_len, repeats = int(row[2]), int(row[3]), int(row[5]), int(row[8])
        assert z_len <= 2 * (q - 1) * n
        assert repeats == 3


def test_bench_rejects_few_repeats(capsysbinary):
    code, _, err = run(capsysbinary, "bench", "fib:10", "--repeats", 2)
    assert code == 1


def test_module_entry_point(fig1_file):
    res = subprocess.run([sys.executable, "-m", "slpgram", "count", str(fig1_file), "--q", "1"],
                         capture_output=True, check=True)
    assert res.stdout == b"a\t8\nb\t5\n"
