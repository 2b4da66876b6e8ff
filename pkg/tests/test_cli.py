import io
import re
import subprocess
import sys

import pytest

from strictpot.cli import main
from strictpot.kripke import excluded_middle_model, render_model
from strictpot.proofs import corpus_path


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def em_file(tmp_path):
    p = tmp_path / "em.model"
    p.write_text(render_model(excluded_middle_model()), encoding="utf-8")
    return str(p)


@pytest.mark.parametrize("kind,src,expected", [
    ("star", "exists x P(x)", "<>G exists x []D P(x)"),
    ("godel", "P(a)", "[]D P(a)"),
])
def test_translate(kind, src, expected):
    assert run("translate", "--kind", kind, src) == (0, expected + "\n")


def test_translate_wrong_language():
    code, out = run("translate", "--kind", "ext-godel", "[]D P(a)")
    assert code == 2 and out == ""


def test_translate_parse_error():
    assert run("translate", "--kind", "godel", "P(a")[0] == 1


def test_translate_file_and_normalize(tmp_path):
    p = tmp_path / "in.txt"
    p.write_text("# header\nP(a)\n\n~P(a)\n", encoding="utf-8")
    code, out = run("translate", "--kind", "godel", "--file", str(p))
    assert code == 0 and out.splitlines() == ["[]D P(a)", "[]D ~[]D P(a)"]
    raw = run("translate", "--kind", "pot", "[]G P(a)")[1]
    norm = run("translate", "--kind", "pot", "--normalize", "[]G P(a)")[1]
    assert len(norm) <= len(raw)


def test_reverse_needs_anchor():
    assert run("translate", "--kind", "reverse", "[]G P(a)")[0] == 1
    code, out = run("translate", "--kind", "reverse", "--anchor", "xx", "[]G P(a)")
    assert code == 0 and out.strip()


def test_check_excluded_middle(em_file):
    assert run("check", em_file, "P(a) | ~P(a)", "--semantics", "forcing", "--world", "w0") == (0, "false\n")
    assert run("check", em_file, "P(a) | ~P(a)", "--semantics", "classical", "--world", "w0") == (0, "true\n")


def test_check_explain(em_file):
    code, out = run("check", em_file, "P(a) | ~P(a)", "--semantics", "forcing", "--explain")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "false"
    assert len(lines) > 2 and lines[2].startswith("  ")


def test_check_invalid_model(tmp_path):
    p = tmp_path / "bad.model"
    p.write_text("worlds: w0 w1\nleqD: w0<=w1\nleqG: w1<=w0\ndom w0: a\ndom w1: a\n", encoding="utf-8")
    code, out = run("check", str(p), "P(a)")
    assert code == 3
    assert out.startswith("invalid model") and "G-within-D" in out


def test_check_parse_errors(em_file, tmp_path):
    assert run("check", em_file, "P(a) &")[0] == 1
    p = tmp_path / "junk.model"
    p.write_text("worlds: w0\nnonsense\n", encoding="utf-8")
    assert run("check", str(p), "P(a)")[0] == 1
    assert run("check", em_file, "P(a)", "--world", "w9")[0] == 1


def test_prove_accept_and_reject():
    code, out = run("prove", str(corpus_path("subsump_4g.prf")), "--system", "BM-FOL")
    assert code == 0 and out.startswith("accepted: ")
    code, out = run("prove", str(corpus_path("neg_b_d.prf")), "--system", "BM-FOL")
    assert code == 4 and out.startswith("rejected at line 1:")
    rs = str(corpus_path("rs_collapse.prf"))
    assert run("prove", rs, "--system", "BM-FOL", "--with-reverse-subsumption")[0] == 0
    assert run("prove", rs, "--system", "BM-FOL")[0] == 4


def test_prove_syntax_error(tmp_path):
    p = tmp_path / "x.prf"
    p.write_text("1. P(a) ; wibble\n", encoding="utf-8")
    assert run("prove", str(p), "--system", "BM-FOL")[0] == 1


def test_inventory():
    code, out = run("inventory", "BM-FOL")
    ids = [l.split()[0] for l in out.splitlines()]
    assert code == 0 and "Mixed.2" in ids and "RS" not in ids
    assert "RS" in run("inventory", "BM-FOL", "--with-reverse-subsumption")[1]


def _replay(out, tmp_path, formula):
    head = re.search(r"at world (\S+)", out)
    assert head
    p = tmp_path / "cm.model"
    p.write_text(out, encoding="utf-8")
    return run("check", str(p), formula, "--world", head.group(1))


def test_countermodel_round_trip(tmp_path):
    f = "P(a) -> []D <>D P(a)"
    code, out = run("countermodel", f, "--max-worlds", "2", "--max-domain", "1")
    assert code == 0 and out.startswith("# search space:")
    assert _replay(out, tmp_path, f) == (0, "false\n")


def test_countermodel_out_file(tmp_path):
    target = tmp_path / "rs.model"
    code, _ = run("countermodel", "[]G P(a) -> []D P(a)", "--out", str(target))
    assert code == 0
    text = target.read_text(encoding="utf-8")
    world = re.search(r"at world (\S+)", text).group(1)
    assert run("check", str(target), "[]G P(a) -> []D P(a)", "--world", world) == (0, "false\n")


def test_countermodel_forcing_replay(tmp_path):
    f = "P(a) | ~P(a)"
    code, out = run("countermodel", f, "--semantics", "forcing")
    assert code == 0
    head = re.search(r"at world (\S+)", out).group(1)
    p = tmp_path / "f.model"
    p.write_text(out, encoding="utf-8")
    assert run("check", str(p), f, "--semantics", "forcing", "--world", head) == (0, "false\n")


def test_countermodel_exhausted():
    code, out = run("countermodel", "<>G []D P(a) -> []D <>G P(a)", "--max-worlds", "3")
    assert code == 5
    assert "exhausted bounds" in out


def test_bounds_must_be_positive():
    with pytest.raises(SystemExit):
        main(["countermodel", "P(a)", "--max-worlds", "0"], io.StringIO())


def test_properties_link_small(tmp_path):
    j = tmp_path / "r.json"
    code, out = run("properties", "--suite", "link", "--max-worlds", "2", "--max-domain", "2", "--depth", "2",
                    "--json", str(j))
    assert code == 0
    assert re.search(r"^  0 mismatches / \d+ checks", out, re.M)
    assert j.read_text(encoding="utf-8").startswith("[")


def test_config_file(tmp_path):
    cfg = tmp_path / "b.cfg"
    cfg.write_text("# defaults\nmax_worlds = 2\nmax_domain = 1\n", encoding="utf-8")
    code, out = run("--config", str(cfg), "countermodel", "<>D []D P(a) -> []D <>D P(a)")
    assert code == 5
    cfg.write_text("colour = blue\n", encoding="utf-8")
    assert run("--config", str(cfg), "countermodel", "P(a)")[0] == 1


def test_console_script_is_bit_identical():
    cmd = [sys.executable, "-m", "strictpot.cli", "countermodel", "<>D []D P(a) -> []D <>D P(a)"]
    a = subprocess.run(cmd, capture_output=True)
    b = subprocess.run(cmd, capture_output=True)
    assert a.returncode == 0
    assert a.stdout == b.stdout and a.stdout
