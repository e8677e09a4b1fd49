import json
import subprocess
import sys

import pytest

from aqcross import arcdiagram
from aqcross.cli import TABLE_HEADER, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("n,lines", [(2, 6), (3, 20), (5, 144)])
def test_generate(capsys, n, lines):
    code, out, _ = run(capsys, "generate", str(n))
    assert code == 0
    assert len(out.splitlines()) == lines
    assert all(len(line.split()) == 3 for line in out.splitlines())


@pytest.mark.parametrize("n", ["0", "21"])
def test_generate_out_of_range(n):
    with pytest.raises(SystemExit) as exc:
        main(["generate", n])
    assert exc.value.code not in (0, None)


def test_generate_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "generate", "3", "--out", str(tmp_path / "missing" / "x.txt"))
    assert code == 2 and "error" in err


def test_generate_to_file(tmp_path, capsys):
    path = tmp_path / "aq4.txt"
    assert run(capsys, "generate", "4", "--out", str(path))[0] == 0
    assert len(path.read_text().splitlines()) == 7 * 8


@pytest.mark.parametrize(
    "argv",
    [
        ["--scope", "graph", "--n-max", "6"],
        ["--scope", "partition", "--n-max", "6"],
        ["--scope", "upsilon", "--m-max", "4"],
        ["--scope", "black", "--n-max", "9"],
        ["--scope", "sequences", "--n-max", "10"],
        ["--scope", "formulas", "--n-max", "20"],
    ],
)
def test_verify_scopes(capsys, argv):
    code, out, _ = run(capsys, "verify", *argv)
    report = json.loads(out)
    assert code == 0 and report["ok"]
    assert report["checks"]


def test_verify_range_limits():
    with pytest.raises(SystemExit):
        main(["verify", "--scope", "upsilon", "--m-max", "13"])
    with pytest.raises(SystemExit):
        main(["verify", "--scope", "black", "--n-min", "10", "--n-max", "9"])


def test_verify_deterministic(capsys):
    argv = ["verify", "--scope", "upsilon", "--m-max", "3"]
    a = json.loads(run(capsys, *argv)[1])
    b = json.loads(run(capsys, *argv)[1])
    a.pop("wall_time_s")
    b.pop("wall_time_s")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--n-min", "8", "--n-max", "10")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == ",".join(TABLE_HEADER)
    assert lines[1].split(",")[:10] == "8,120,4464,9408,10656,4720,12624,41992,43648,1656".split(",")
    assert len(lines) == 4


def test_table_json(capsys):
    code, out, _ = run(capsys, "table", "--n-min", "8", "--format", "json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 1
    assert all(isinstance(v, str) for v in rows[0].values())
    assert rows[0]["total"] == "41992"
    assert rows[0]["lower_bound"] == "-519510144/21125"


def test_table_rejects_small_n():
    with pytest.raises(SystemExit):
        main(["table", "--n-min", "7"])


def test_svg_upsilon(capsys):
    _, one, _ = run(capsys, "svg", "upsilon", "1")
    assert one.count("<circle") == 8
    _, three, _ = run(capsys, "svg", "upsilon", "3")
    assert three.count("<path") == len(arcdiagram.upsilon(3))
    assert run(capsys, "svg", "upsilon", "3")[1] == three


def test_svg_black(capsys):
    _, text, _ = run(capsys, "svg", "black", "8")
    assert text.count("<line") == 4 * 2 * 2 ** (8 - 3)
    for part in ("U1", "V1", "U2", "V2", "U3", "V3", "U4", "V4"):
        assert f">{part}</text>" in text


def test_svg_limits():
    with pytest.raises(SystemExit):
        main(["svg", "upsilon", "9"])
    with pytest.raises(SystemExit):
        main(["svg", "black", "12"])


def test_module_entrypoint():
    res = subprocess.run([sys.executable, "-m", "aqcross", "generate", "2"], capture_output=True, text=True, check=True)
    assert len(res.stdout.splitlines()) == 6
