import io
import subprocess
import sys

import pytest

from strongpart.cli import run
from strongpart.constructions import NAMED


def call(argv, stdin=""):
    out = io.StringIO()
    old = sys.stdin
    sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, out)
    finally:
        sys.stdin = old
    return code, out.getvalue()


def gen(name, fmt=None):
    code, text = call(["gen", name] + (["--format", fmt] if fmt else []))
    assert code == 0
    return text


def test_h0_census_line():
    code, text = call(["partitions"], gen("h0"))
    assert code == 0
    assert text.splitlines()[-1] == "total=16 st=0 nonstrong=16 good=16"
    assert sum(line.startswith("partition=") for line in text.splitlines()) == 16


def test_find_st_and_all_st():
    assert call(["partitions", "--find-st"], gen("g2")) == (0, "st=0001\n")
    code, text = call(["partitions", "--all-st"], gen("g2"))
    assert "partition=0101 kind=st zero=-" in text
    assert call(["partitions", "--find-st"], gen("h0")) == (0, "st=none\n")


@pytest.mark.parametrize("name", sorted(NAMED))
def test_piped_round_trip(name):
    original = gen(name)
    _, structured = call(["convert", "--to", "structured"], original)
    _, dot = call(["convert", "--to", "dot"], structured)
    _, back = call(["convert", "--to", "structured" if name.startswith("t") else "hex"], dot)
    assert back == (gen(name, "structured") if name.startswith("t") else original)


def test_classify_output():
    code, text = call(["classify"], gen("h0"))
    lines = text.splitlines()
    assert code == 0
    assert lines[4].split() == ["m", "m", "m", "m", "."]
    assert "vertex=v5,1 good_to=-" in lines
    assert "vertex=v1,1 good_to=2,3,4,5" in lines


def test_stats_output():
    code, text = call(["stats"], gen("h0"))
    assert code == 0
    assert "r=2 c=5 regular=True nearly_regular=True" in text
    assert "part=5 n=0 n1=0 n2=0 n_prime=0" in text


def test_search_and_sample():
    code, text = call(["search", "--c", "4"])
    assert code == 0 and text.splitlines()[-1] == "classes=26 labeled=6936"
    a = call(["search", "--c", "6", "--sample", "5", "--seed", "3"])
    assert a == call(["search", "--c", "6", "--sample", "5", "--seed", "3"])
    assert len(a[1].split()) == 5


def test_verify_c4_scope():
    code, text = call(["verify", "--scope", "c4_g1g2", "--no-timing"])
    assert code == 0
    assert "classes=2" in text.splitlines()
    assert text == call(["verify", "--scope", "c4_g1g2", "--no-timing"])[1]


def test_budget_error_record(tmp_path):
    ck = tmp_path / "c.json"
    code, text = call(["verify", "--scope", "c5_h0_unique", "--budget", "1000",
                       "--checkpoint", str(ck)])
    assert code == 2 and text.startswith("error=budget") and str(ck) in text


def test_exit_codes():
    assert call(["nonsense"])[0] == 1
    assert call([])[0] == 1
    assert call(["partitions"], "")[0] == 1
    code, text = call(["partitions"], "xyz")
    assert code == 2 and text.startswith("error=MalformedInput")
    assert call(["stats"], "96959959a")[0] == 2
    assert call(["gen", "h7"])[0] == 1


def test_usage_for_unknown_scope():
    assert call(["verify", "--scope", "c9"])[0] == 1


def test_installed_entry_point_pipes():
    gen_p = subprocess.run([sys.executable, "-m", "strongpart", "gen", "h0"],
                           capture_output=True, text=True, check=True)
    part = subprocess.run([sys.executable, "-m", "strongpart", "partitions"], input=gen_p.stdout,
                          capture_output=True, text=True)
    assert part.returncode == 0
    assert part.stdout.splitlines()[-1] == "total=16 st=0 nonstrong=16 good=16"
