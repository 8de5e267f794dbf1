import io
from pathlib import Path

import pytest

from transpoly.cli import Session, main, repl_eval, run_lines, run_script

GOLDEN = Path(__file__).parent / "golden"


def run(*lines, **flags):
    out, err = io.StringIO(), io.StringIO()
    code = run_lines(list(lines), Session(**flags), out, err, keep_going=False, echo=False)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", ["example_1", "example_2"])
def test_golden_transcripts(name, capsys):
    code = run_script(str(GOLDEN / f"{name}.tp"))
    assert code == 0
    assert capsys.readouterr().out == (GOLDEN / f"{name}.out").read_text()


def test_divmod_output():
    code, out, _ = run("divmod X^(w) X^(2)+1")
    assert code == 0
    assert out == "quotient: sum(n<w, (-1)^n * X^(w - 2*(n+1)))\nremainder: 0\ntermination: w\n"


def test_degree_and_inverse():
    assert run("deg X^(w) + X^(3)")[1] == "w\n"
    _, out, _ = run("mod set X^(w) - 2 irreducible", "mod inv X")
    assert out.splitlines()[-1] == "1/2*X^(w - 1)"


def test_exhaustion_is_visible():
    code, _, err = run("set budget 2", "divmod X^(w) X^(2)+1")
    assert code == 3
    assert "budget exhausted after 2 steps; partial remainder degree w - 4" in err


def test_unbound_name_exit_code(tmp_path):
    script = tmp_path / "bad.tp"
    script.write_text("cmp a 1\n")
    assert main(["--script", str(script)]) == 2


def test_empty_script_and_missing_file(tmp_path):
    empty = tmp_path / "empty.tp"
    empty.write_text("")
    assert main(["--script", str(empty)]) == 0
    assert main(["--script", str(tmp_path / "nope.tp")]) == 1


def test_keep_going_reports_first_error(tmp_path, capsys):
    script = tmp_path / "mixed.tp"
    script.write_text("mod inv X\ncmp a 1\ndeg X^(w)\n")
    assert main(["--script", str(script), "--keep-going"]) == 3
    assert capsys.readouterr().out.endswith("> deg X^(w)\nw\n")


def test_json_mode_and_budget_flag(tmp_path, capsys, monkeypatch):
    script = tmp_path / "j.tp"
    script.write_text("show X^(2)\n")
    assert main(["--script", str(script), "--json"]) == 0
    assert '"schemaVersion":1' in capsys.readouterr().out
    monkeypatch.setenv("TRANSPOLY_BUDGET", "2")
    script.write_text("divmod X^(w) X^(2)+1\n")
    assert main(["--script", str(script)]) == 3
    assert main(["--script", str(script), "--budget", "50"]) == 0


def test_non_geometric_values_print_as_json():
    _, out, _ = run("mod set X^(w) - 2", "mod inv X^(3) + X + 1")
    assert out.splitlines()[-1].startswith('{"schemaVersion":1,"families":[{"kind":"recurrence"')


@pytest.mark.parametrize(
    "line",
    ["", "# comment", "frobnicate", "let w = 1", "divmod 1 0", "supp X 0", "set output yaml", "mod", "((((((", "cmp X"],
)
def test_repl_never_raises(line):
    out, session = repl_eval(line, Session())
    assert isinstance(out, str) and not session.done


def test_quit_ends_session():
    _, session = repl_eval("quit", Session())
    assert session.done
