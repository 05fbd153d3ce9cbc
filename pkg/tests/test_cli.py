import io
import json
import subprocess
import sys

import pytest

from golden import LARGEST_LEFT, LEFT_CHAIN

from chiral_primes.cli import main


def run(*argv):
    out = io.StringIO()
    try:
        code = main(list(argv), out=out)
    except SystemExit as e:
        code = e.code
    return code, out.getvalue()


def test_enumerate_right_csv():
    code, text = run("enumerate", "--direction", "right", "--format", "csv")
    rows = text.splitlines()
    assert code == 0 and rows[0] == "generation,prime"
    assert len(rows) - 1 == 83 and rows[-1].startswith("8,")


def test_enumerate_left_max_gen_json():
    code, text = run("enumerate", "--direction", "left", "--max-gen", "2", "--format", "json")
    data = json.loads(text)
    assert code == 0
    assert [g["n"] for g in data["generations"]] == [1, 2]
    assert len(data["generations"][1]["primes"]) == 11
    assert data["termination"]["last_nonempty_generation"] == 24


def test_enumerate_left_text_final_line():
    code, text = run("enumerate", "--direction", "left")
    assert code == 0
    assert text.splitlines()[-1] == f"unique maximal prime: {LARGEST_LEFT}"


def test_figure_data():
    code, text = run("figure-data", "--direction", "right", "--format", "csv")
    rows = [tuple(map(int, r.split(","))) for r in text.splitlines()[1:]]
    assert code == 0 and len(rows) == 8
    assert max(rows, key=lambda r: r[1]) == (4, 16)
    code, text = run("figure-data", "--direction", "left", "--format", "csv")
    rows = [tuple(map(int, r.split(","))) for r in text.splitlines()[1:]]
    assert len(rows) == 24 and rows[-1] == (24, 1)
    assert [c for _, c in rows[19:]] == [6, 5, 4, 3, 1]


def test_chain():
    code, text = run("chain", LARGEST_LEFT, "--direction", "left")
    lines = text.splitlines()
    assert code == 0 and len(lines) == 24
    assert [int(l.split()[0]) for l in lines] == LEFT_CHAIN
    code, _ = run("chain", "25", "--direction", "right")
    assert code == 1


def test_chain_anomalous():
    code, text = run("chain", "1(0^41)" + LARGEST_LEFT, "--anomalous", "--format", "json")
    data = json.loads(text)
    assert code == 0 and data["all_prime"] and len(data["chain"]) == 25


def test_stats_json():
    code, text = run("stats", LARGEST_LEFT, "--format", "json")
    data = json.loads(text)
    assert code == 0
    assert data["longest_even_run"] == "26462" and data["odd_count"] == data["even_count"] == 12
    assert data["prime_prefixes"][0] == "3576863"


def test_verify():
    code, text = run("verify", "25")
    assert code == 1 and "divisor 5" in text
    code, text = run("verify", "23", "--format", "json")
    assert code == 0 and json.loads(text)["verdict"]["kind"] == "prime"


def test_verify_blocks():
    code, text = run("verify", "--blocks", "13,9", "--gaps", "5", "--format", "json")
    data = json.loads(text)
    assert data["number"] == "13000009"
    assert code == (0 if data["verdict"]["kind"] != "composite" else 1)


def test_verify_gap_syntax_large():
    code, text = run("verify", "1(0^41)" + LARGEST_LEFT, "--format", "json", "--seed", "4", "--rounds", "45")
    v = json.loads(text)["verdict"]
    assert code == 0 and v == {"kind": "probable_prime", "rounds": 45, "seed": 4, "strong_lucas": True}


def test_gap_search():
    code, text = run("gap-search", "--prefix", "1", "--suffix", "7", "--max-gap", "60", "--format", "json")
    hits = [json.loads(l) for l in text.splitlines()]
    assert code == 0 and [h["k"] for h in hits] == [1, 3, 7, 8, 23, 59]
    assert all(isinstance(h["number"], str) for h in hits)


def test_extend():
    code, text = run("extend", "3", "--max-gap", "5", "--format", "csv")
    assert code == 0 and [r.split(",")[0] for r in text.splitlines()[1:]] == ["1", "4", "5"]


def test_band_search_reproducible(capsys):
    argv = ("band-search", "--bands", "2", "--min-block-len", "2", "--max-block-len", "3",
            "--max-gap", "3", "--format", "json", "--seed", "1")
    code1, a = run(*argv)
    code2, b = run(*argv, "--threads", "2")
    assert code1 == code2 == 0 and a == b
    first = json.loads(a.splitlines()[0])
    assert set(first) == {"blocks", "gaps", "digits", "verdict", "anomalous_chain"}


def test_band_search_rejects_min_block_len_one():
    code, _ = run("band-search", "--min-block-len", "1")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "12x"),
        ("verify", "0123"),
        ("enumerate",),
        ("enumerate", "--direction", "up"),
        ("gap-search", "--prefix", "1", "--suffix", "3"),
        ("chain", "7", "--rounds", "0"),
        ("bogus",),
        ("verify",),
    ],
)
def test_usage_errors(argv, capsys):
    code, _ = run(*argv)
    assert code == 2


def test_malformed_number_is_named(capsys):
    run("verify", "12x")
    assert "12x" in capsys.readouterr().err


def test_cache_write_failure(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _ = run("enumerate", "--direction", "right", "--cache", str(blocker / "sub" / "c.json"))
    assert code == 3


def test_json_output_independent_of_threads(tmp_path):
    a = run("enumerate", "--direction", "left", "--format", "json")[1]
    b = run("enumerate", "--direction", "left", "--format", "json", "--threads", "2")[1]
    assert a == b


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "chiral_primes", "verify", "25"], capture_output=True, text=True
    )
    assert proc.returncode == 1 and "composite" in proc.stdout
