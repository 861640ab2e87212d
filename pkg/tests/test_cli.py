import json
import pathlib

import pytest

from desing.cli import main
from desing.fixtures import example_file_text
from desing.idealfile import loads_ideal
from desing.ideals import ideal_equals
from desing.parsing import parse_polynomial

from util import ideal_like

GOLDEN = pathlib.Path(__file__).parent / "golden"


@pytest.fixture()
def ideal_path(tmp_path):
    def write(name):
        path = tmp_path / f"{name}.ideal"
        path.write_text(example_file_text(name), encoding="utf-8")
        return str(path)
    return write


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_order_command(ideal_path, capsys):
    code, out, err = run(capsys, "order", ideal_path("ex61"))
    assert (code, out, err) == (0, "2\n", "")


def test_hs_command(ideal_path, capsys):
    code, out, _ = run(capsys, "hs", ideal_path("ex61"), "--max-degree", "3")
    assert code == 0
    assert out == "1 5 14 30\n"


def test_hs_point_and_cumulative(ideal_path, capsys):
    path = ideal_path("ex61")
    code, out, _ = run(capsys, "hs", path, "--max-degree", "3",
                       "--point", "0,1,0,0,0")
    assert code == 0
    assert out == "1 5 14 29\n"
    code, out, _ = run(capsys, "hs", path, "--cumulative")
    assert code == 0
    assert out == "1 6 20 50\n"


def test_blowup_single_chart(ideal_path, capsys):
    code, out, _ = run(capsys, "blowup", ideal_path("ex61"),
                       "--center", "x,y,z,w,v", "--chart", "y",
                       "--transform", "strict")
    assert code == 0
    assert out == "z^2 + x^3*y^4\nv^3 + x^5 + w^5\n"


def test_blowup_all_charts(ideal_path, capsys):
    code, out, _ = run(capsys, "blowup", ideal_path("ex62"),
                       "--center", "x,y,z", "--transform", "weak")
    assert code == 0
    headers = [line for line in out.splitlines() if line.startswith("chart ")]
    assert headers == ["chart z (weak):", "chart y (weak):", "chart x (weak):"]
    assert "  order at chart origin: 5" in out.splitlines()


def test_delta_command(ex61, ideal_path, capsys):
    code, out, _ = run(capsys, "delta", ideal_path("ex61"))
    assert code == 0
    produced = ideal_like(ex61, out.splitlines())
    reference = ideal_like(ex61, ["z", "x^2*y^3", "x^3*y^2", "w^4", "x^4",
                                  "v^3*y", "v^2*y^2"])
    assert ideal_equals(produced, reference)


def test_sb_command(ideal_path, capsys):
    code, out, _ = run(capsys, "sb", ideal_path("ex62"))
    assert code == 0
    assert out.splitlines() == ["x^5 + y^11", "z^9 - y^11*x^4"]


def test_coeff_command(ideal_path, capsys):
    code, out, _ = run(capsys, "coeff", ideal_path("ex61"), "--var", "z")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "weighted order: 5"
    assert lines[1] == "level 0 exponent 1:"
    assert set(lines[2:]) == {"  x^3*y^3", "  x^5 + w^5 + y^2*v^3"}


def test_hybrid_command(ideal_path, capsys):
    code, out, _ = run(capsys, "hybrid", ideal_path("ex61"))
    assert code == 0
    assert out.splitlines() == [
        "stage degrees: 2 5",
        "contact frame: z x y w v",
        "working ideal at final degree 5:",
        "  z^5 + x^3*y^3*z^3",
        "  x^5 + w^5 + y^2*v^3",
        "order of working ideal: 5",
        "suggested center: V(x,y,z,w,v)",
    ]


def test_hybrid_center_only(ideal_path, capsys):
    code, out, _ = run(capsys, "hybrid", ideal_path("ex62"), "--center-only")
    assert code == 0
    assert out == "V(x,y,z)\n"


def test_invariant_command(ideal_path, capsys):
    code, out, _ = run(capsys, "invariant", ideal_path("ex62"))
    assert code == 0
    assert out == "entries: (9, 3) (798336, 1) (infinite, 0)\ndescent: y\n"
    code, out, _ = run(capsys, "invariant", ideal_path("ex61"))
    assert code == 0
    assert out == "entries: (5, 5) (infinite, 0)\ndescent: -\n"


def test_demo_matches_golden(capsys):
    code, out, err = run(capsys, "demo", "ex61")
    assert (code, err) == (0, "")
    assert out == (GOLDEN / "ex61_demo.txt").read_text(encoding="utf-8")


def test_demo_second_example(capsys):
    code, out, _ = run(capsys, "demo", "ex62")
    assert code == 0
    assert "suggested center: V(x,y,z)" in out
    assert "already non-singular" in out


def test_demo_unknown_name(capsys):
    code, _, err = run(capsys, "demo", "nope")
    assert code == 64
    assert "invalid choice" in err


def test_usage_errors(ideal_path, capsys):
    assert run(capsys, )[0] == 64
    code, _, err = run(capsys, "blowup", ideal_path("ex61"),
                       "--center", "x", "--transform", "sideways")
    assert code == 64
    assert "invalid choice" in err


def test_missing_file(tmp_path, capsys):
    code, _, err = run(capsys, "order", str(tmp_path / "nope.ideal"))
    assert code == 2
    assert "cannot read" in err


def test_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.ideal"
    path.write_text("ring x y\nx^\n", encoding="utf-8")
    code, _, err = run(capsys, "order", str(path))
    assert code == 2
    assert "line 1" in err


def test_domain_error_exit_code(ideal_path, capsys):
    code, _, err = run(capsys, "hs", ideal_path("ex61"), "--max-degree", "-1")
    assert code == 3
    assert "non-negative" in err


def test_bad_point_exit_code(ideal_path, capsys):
    code, _, err = run(capsys, "hs", ideal_path("ex61"), "--point", "1,2")
    assert code == 2
    assert "one coordinate per variable" in err


def test_json_output(ex61, ideal_path, capsys):
    path = ideal_path("ex61")
    code, out, _ = run(capsys, "order", path, "--json")
    assert code == 0
    data = json.loads(out)
    assert sorted(data) == ["generators", "order", "ring"]
    assert data["order"] == 2
    assert data["ring"]["variables"] == ["x", "y", "z", "w", "v"]
    # generator strings parse back to the input ideal
    assert ideal_equals(ideal_like(ex61, data["generators"]), ex61)
    code, again, _ = run(capsys, "order", path, "--json")
    assert (code, again) == (0, out)


def test_quiet_mode(ideal_path, capsys):
    code, out, err = run(capsys, "order", ideal_path("ex61"), "--quiet")
    assert (code, out, err) == (0, "", "")
