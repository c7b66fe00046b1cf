import io
import subprocess
import sys

import pytest

from treeaccess.cli import main

PAPER_TREE = "(0 (1 2 3) 4 5)"

PAPER_TABLE = (
    "1.\tcadad\t(0 (1 2 3) 4 5)\tdrop → ((1 2 3) 4 5)\n"
    "2.\tcada\t((1 2 3) 4 5)\taccess → (1 2 3)\n"
    "3.\tcad\t(1 2 3)\tdrop → (2 3)\n"
    "4.\tca\t(2 3)\taccess → 2\n"
    "5.\tc\t2\tcomplete\n"
)


def invoke(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err, stdin=io.StringIO(stdin))
    return code, out.getvalue(), err.getvalue()


# (argv, exit code, stdout)
GOLDEN = [
    (["eval", "classic", "cadadr", PAPER_TREE], 0, "2\n"),
    (["eval", "--notation", "classic", "cadadr", PAPER_TREE], 0, "2\n"),
    (["eval", "cadadr", "'(0 (1 2 3) 4 5)"], 0, "2\n"),
    (["eval", "star", "*5da", "(1 2 3 4 5 6 7)"], 0, "6\n"),
    (["eval", "ltr", "rdadac", PAPER_TREE], 0, "2\n"),
    (["eval", "classic", "cadadr", "(0)"], 1, ""),
    (["eval", "classic", "cdar", "(5)"], 1, ""),
    (["eval", "classic", "cabr", PAPER_TREE], 2, ""),
    (["eval", "classic", "car", "("], 2, ""),
    (["eval", "classic", "car", "(a . )"], 2, ""),
    (["eval", "classic", "car", ""], 2, ""),
    (["eval", "classic", "car"], 3, ""),
    (["eval", "pascal", "car", "(1)"], 3, ""),
    (["eval", "--notation", "ltr", "classic", "car", "(1)"], 3, ""),
    (["translate", "classic", "ltr", "cadadr"], 0, "rdadac\n"),
    (["translate", "--from", "classic", "--to", "ltr", "cadadr"], 0, "rdadac\n"),
    (["translate", "ltr", "star", "rdadac"], 0, "*dada\n"),
    (["translate", "star", "star", "*ddddda"], 0, "*5da\n"),
    (["translate", "star", "classic", "*5da"], 0, "cadddddr\n"),
    (["translate", "--to", "classic", "*dada"], 0, "cadadr\n"),
    (["translate", "classic", "ltr", "rdadac"], 2, ""),
    (["translate", "cadadr"], 3, ""),
    (["translate", "classic", "cadadr"], 3, ""),
    (["loc", "write", "*5n", "(1 2 3 4 5 6 7)", "apple"], 0, "(1 2 3 4 5 apple 7)\n"),
    (["loc", "w!", "*5n", "(1 2 3 4 5 6 7)", "apple"], 0, "(1 2 3 4 5 apple 7)\n"),
    (["loc", "suffix", "*5n", "(1 2 3 4 5 6 7 8)"], 0, "(6 7 8)\n"),
    (["loc", "read", "*5n", "(10 20 30 40 50 60 70)"], 0, "60\n"),
    (["loc", "prefix", "*5n", "(1 2 3 4 5 6 7 8)"], 0, "(1 2 3 4 5)\n"),
    (["loc", "prefix", "*0n", "(a b)"], 0, "()\n"),
    (["loc", "read", "*3n", "(1 2)"], 1, ""),
    (["loc", "read", "*3x", "(1 2)"], 2, ""),
    (["loc", "read", "*3n", "(1 2"], 2, ""),
    (["loc", "write", "*1n", "(1 2)", "(b"], 2, ""),
    (["loc", "write", "*1n", "(1 2)"], 3, ""),
    (["loc", "read", "*1n", "(1 2)", "x"], 3, ""),
    (["loc", "fold", "*1n", "(1 2)"], 3, ""),
    ([], 3, ""),
    (["frobnicate"], 3, ""),
]


@pytest.mark.parametrize("argv, code, stdout", GOLDEN, ids=[" ".join(g[0]) or "<none>" for g in GOLDEN])
def test_golden(argv, code, stdout):
    got_code, got_out, got_err = invoke(*argv)
    assert (got_code, got_out) == (code, stdout)
    if code:
        assert got_err.strip()


def test_trace_reproduces_paper_table():
    code, out, err = invoke("eval", "classic", "cadadr", PAPER_TREE, "--trace")
    assert code == 0
    assert out == PAPER_TABLE + "2\n"
    assert err == ""


def test_end_of_list_diagnostic():
    code, out, err = invoke("eval", "classic", "cadadr", "(0)")
    assert code == 1 and out == ""
    assert "EndOfList at step 2, remaining cada" in err


def test_failed_trace_goes_to_stderr():
    code, out, err = invoke("eval", "--trace", "cadadr", "(0)")
    assert code == 1 and out == ""
    assert err.startswith("1.\tcadad\t(0)\tdrop → ()\n")


@pytest.mark.parametrize("text, position", [("(", 1), ("(a . )", 5), ("", 0)])
def test_syntax_diagnostics_are_positioned(text, position):
    code, _, err = invoke("eval", "car", text)
    assert code == 2
    assert f"position {position}" in err


def test_tree_from_stdin():
    assert invoke("eval", "cadadr", "-", stdin=PAPER_TREE + "\n") == (0, "2\n", "")
    assert invoke("loc", "suffix", "*1n", "-", stdin="(a b c)") == (0, "(b c)\n", "")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "treeaccess", "eval", "classic", "cadadr", PAPER_TREE],
        capture_output=True,
        text=True,
        timeout=30,
    )
    assert (proc.returncode, proc.stdout) == (0, "2\n")
