import io
import re
import shlex
import subprocess
import sys
from pathlib import Path

import pytest

from macpresym.cli import main
from macpresym.conventions import Conventions, default_ledger_path, format_ledger

HERE = Path(__file__).parent
README = HERE.parent / "README.md"


def run(argv):
    out = io.StringIO()
    code = main(shlex.split(argv) if isinstance(argv, str) else argv, out)
    return code, out.getvalue()


def readme_examples():
    block = re.search(r"```console\n(.*?)```", README.read_text(encoding="utf-8"), re.S).group(1)
    examples = []
    for line in block.splitlines():
        if line.startswith("$ macpresym "):
            examples.append([line[len("$ macpresym "):], []])
        else:
            examples[-1][1].append(line)
    return [(cmd, "\n".join(lines) + "\n") for cmd, lines in examples]


@pytest.mark.parametrize("cmd,expected", readme_examples(), ids=lambda x: x[:40])
def test_readme_examples(cmd, expected):
    code, out = run(cmd)
    assert out == expected
    assert code == (1 if out.startswith("differ") else 0)


@pytest.mark.parametrize("cmd", [
    "compute E --n 3 --eta 2,0,1",
    "compute SIJ --eta-star 1,0 --I '' --J 1",
    "verify orthogonality --n 3 --k 1 --max-deg 3",
    "verify d1 --n0 1 --n1 2 --k 1 --a 0 --b 0",
    "verify dp --shape 'n0=1;Np=1,2' --k 1",
    "verify kadell --seed 11",
])
def test_documented_invocations_succeed(cmd):
    code, out = run(cmd)
    assert code == 0 and out


def test_usage_errors():
    assert run("compute E --n 2")[0] == 2
    assert run("compute SIJ --eta-star 0,1 --J 1")[0] == 2
    assert run("verify thm34 --kappa 1")[0] == 2
    assert run("verify dp --shape 'n0=1'")[0] == 2
    assert run("verify dp")[0] == 2
    assert run("compute inner --g E:0 --k 1")[0] == 2
    assert run("apply --op Ti --f E:1,0")[0] == 2
    assert run("--workers 0 verify d1 --n1 2")[0] == 2


def test_term_cap_is_a_resource_error():
    assert run("--term-cap 5 verify d1 --n0 2 --n1 2 --k 1")[0] == 3


def test_differences_exit_one():
    code, out = run("verify dp-ratio --shape 'n0=1;Np=1,2' --k 1 --form gamma")
    assert code == 1 and out.startswith("differ")
    code, out = run("verify kadell --count 2 --index literal")
    assert code == 1 and sum(l.startswith("differ ") for l in out.splitlines()) == 6


def test_json_output_and_timing():
    _, out = run("--format json compute E --n 2 --eta 1,0")
    assert '"object": "E"' in out and '"poly"' in out
    _, out = run("verify d1 --n1 2 --k 0 --format json")
    assert '"timing"' not in out
    _, out = run("verify d1 --n1 2 --k 0 --format json --timing")
    assert '"timing"' in out


def test_output_is_deterministic_across_runs_and_workers():
    cmd = "verify prescribed --max-n 3 --max-deg 2 --format json"
    _, a = run(cmd)
    _, b = run(cmd)
    _, c = run(cmd + " --workers 2")
    assert a == b == c


@pytest.mark.parametrize("line", (HERE / "golden_commands.txt").read_text().splitlines(),
                         ids=lambda s: s.split()[0])
def test_golden_corpus(line):
    name, cmd = line.split(" ", 1)
    _, out = run(cmd.split())
    assert out == (HERE / "golden" / ("%s.jsonl" % name)).read_text()


def test_missing_or_tampered_ledger_is_refused(tmp_path):
    assert run(["--ledger", str(tmp_path / "none"), "compute", "E", "--n", "1", "--eta", "0"])[0] == 2
    bad = tmp_path / "bad.ledger"
    text = default_ledger_path().read_text().replace("leg_length=standard", "leg_length=literal")
    bad.write_text(text)
    assert run(["compute", "E", "--n", "1", "--eta", "0", "--ledger", str(bad)])[0] == 2


def test_calibrate_check_reports_failures(tmp_path):
    wrong = tmp_path / "wrong.ledger"
    wrong.write_text(format_ledger(Conventions("right-first", "literal", "t^(i-1)", "ascents+n")))
    code, out = run(["calibrate", "--check", "--ledger", str(wrong)])
    assert code == 1
    assert "leg_length failures=7/146" in out
    code, out = run(["calibrate", "--check"])
    assert code == 0 and "failures=0/" in out


def test_calibrate_writes_the_shipped_ledger(tmp_path):
    target = tmp_path / "c.ledger"
    code, out = run(["calibrate", "--output", str(target)])
    assert code == 0
    assert target.read_text() == out == default_ledger_path().read_text()


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "macpresym.cli", "compute", "SIJ",
                           "--eta-star", "1,0", "--J", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "z1 - t^-1*z2\n"
