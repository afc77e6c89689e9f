import json
import re
import subprocess
import sys

import pytest

from admrank.cli import run
from admrank.forms import parse_form
from conftest import Q_TEXT

SCHEMA = {"degree", "border_rank", "cactus_rank", "complex_rank", "admissible_rank", "labels", "exact", "structure"}


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_rank_of_two_label_quartic(capsys):
    code, out, _ = call(capsys, "rank", Q_TEXT)
    assert code == 0
    data = json.loads(out)
    assert SCHEMA <= set(data)
    assert (data["border_rank"], data["cactus_rank"], data["complex_rank"], data["admissible_rank"]) == (3, 3, 3, 3)


def test_labels_of_two_label_quartic(capsys):
    code, out, err = call(capsys, "labels", Q_TEXT)
    assert code == 0 and not err
    data = json.loads(out)
    assert SCHEMA <= set(data) and data["exact"] is True
    assert {(lab["a"], lab["b"]) for lab in data["labels"]} == {(1, 1), (0, 3)}
    assert data["label_set"] == "{(1,1),(0,3)}"


def test_zero_form_is_a_parse_error(capsys):
    code, out, err = call(capsys, "rank", "2:0,0,0")
    assert code == 2 and not out
    assert "zero" in err.lower()


@pytest.mark.parametrize("bad", ["4:1,2", "x:1,2", "3:1,,2,3"])
def test_malformed_input_exits_two(capsys, bad):
    assert call(capsys, "rank", bad)[0] == 2


def test_unknown_subcommand_exits_two(capsys):
    assert call(capsys, "frobnicate", "2:1,0,1")[0] == 2


def test_domain_errors_exit_three(capsys):
    code, _, err = call(capsys, "labels", "2:1,0,2", "--structure", "fpf")
    assert code == 3 and "NotSigmaStable" in err
    code, _, err = call(capsys, "partition-svg", "3:0,1,0,0")
    assert code == 3 and "NotAPencil" in err


def test_sampled_labels_warn(capsys):
    code, out, err = call(capsys, "labels", "3:0,1,0,0")
    assert code == 0 and "warning" in err
    assert json.loads(out)["exact"] is False


def test_realrank(capsys):
    code, out, _ = call(capsys, "realrank", Q_TEXT)
    assert code == 0 and json.loads(out)["real_rank"] == 3
    # x^3 y^2: the search cannot exclude 4 but finds an all-real decomposition of length 5
    code, out, _ = call(capsys, "realrank", "5:0,0,1,0,0,0")
    data = json.loads(out)
    assert code == 4 and data["real_rank"] is None and data["interval"] == {"lo": 4, "hi": 5}


def test_file_input_and_output(tmp_path, capsys):
    src = tmp_path / "forms.txt"
    src.write_text("# two forms\n2:1,0,1\n\n" + Q_TEXT + "\n")
    out_path = tmp_path / "out.json"
    code, out, _ = call(capsys, "rank", "@" + str(src), "--out", str(out_path))
    assert code == 0 and not out
    data = json.loads(out_path.read_text())
    assert [d["admissible_rank"] for d in data] == [2, 3]
    assert call(capsys, "rank", "@" + str(tmp_path / "missing.txt"))[0] == 2


def test_printed_forms_round_trip(capsys):
    _, out, _ = call(capsys, "labels", Q_TEXT)
    data = json.loads(out)
    q = parse_form(Q_TEXT)
    assert parse_form(data["form"]).projectively_equal(q)
    for lab in data["labels"]:
        w = parse_form(lab["witness"])
        assert w.degree == 3
    assert "." not in data["certificate"]


def test_sample_json_and_csv(tmp_path, capsys):
    code, out, _ = call(capsys, "sample", "3", "--n", "40", "--seed", "2", "--bound", "20")
    assert code == 0
    data = json.loads(out)
    assert data["n_samples"] == 40 and sum(data["counts"].values()) == 40
    code, out, _ = call(capsys, "sample", "3", "--n", "40", "--seed", "2", "--bound", "20", "--format", "csv")
    assert out.splitlines()[0] == "key,count,frequency"


def test_boundary(capsys):
    code, out, _ = call(capsys, "boundary", "5", "--eps", "1/10,1/100")
    assert code == 0
    data = json.loads(out)
    assert [p["label_set"] for p in data["conjugate_track"]] == ["{(1,1)}", "{(1,1)}"]
    assert [p["label_set"] for p in data["real_track"]] == ["{(0,3)}", "{(0,3)}"]
    assert call(capsys, "boundary", "5", "--u", "1", "--v", "1")[0] == 3
    assert call(capsys, "boundary", "5", "--u", "one")[0] == 2
    assert call(capsys, "boundary", "5", "--eps", "a,b")[0] == 2


def test_partition_svg(tmp_path, capsys):
    target = tmp_path / "q.svg"
    assert call(capsys, "partition-svg", Q_TEXT, "--out", str(target))[0] == 0
    svg = target.read_text()
    assert svg.startswith("<svg") and 'width="800"' in svg and 'height="120"' in svg
    assert len(re.findall(r'class="tick"', svg)) == 5
    assert "(1,1)" in svg and "(0,3)" in svg
    _, out, _ = call(capsys, "partition-svg", "2:1,0,1")
    # the pencil (xy, x^2 - y^2) has one chart root at lambda = 0
    assert len(re.findall(r'class="tick"', out)) == 1
    assert "(0,2)" in out and "(1,0)" not in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "admrank.cli", "rank", "2:1,0,1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["complex_rank"] == 2
