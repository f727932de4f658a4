import io
import json

import pytest

from charhopf.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_coproduct_text():
    code, out = run("coproduct", "--element", "x1")
    assert code == 0 and out.strip() == "x1 (x) 1 + g1 (x) x1"


def test_coproduct_latex_and_json():
    assert run("coproduct", "--element", "x1", "--format", "latex")[1].strip() == \
        r"x_1\otimes 1+g_1\otimes x_1"
    code, out = run("coproduct", "--element", "serreL(1,2,1)", "--format", "json")
    assert code == 0 and json.loads(out)["kind"] == "tensor"


def test_shuffle_and_omega():
    assert run("shuffle", "--left", "x1", "--right", "x2")[1].strip() == \
        "(x1x2) + p21^-1*(x2x1)"
    assert run("omega", "--element", "serreL(1,2,4)", "--mode", "g2")[1].strip() == "0"
    assert run("omega", "--element", "x2^2")[1].strip() == "(1 + p22^-1)*(x2^2)"


def test_usage_and_parse_errors(capsys):
    assert run("coproduct", "--element", "x1 +")[0] == 2
    assert "position 4" in capsys.readouterr().err
    assert run("coproduct", "--element", "g2top()")[0] == 2
    assert "g2top requires g2 mode" in capsys.readouterr().err
    assert run("coproduct", "--element", "bracedL(1,2,4)", "--mode", "g2")[0] == 2
    assert run("nonsense")[0] == 2
    assert run("coproduct")[0] == 2
    assert run("verify", "--identity", "nope")[0] == 2
    assert run("omega", "--element", "g1x1")[0] == 2
    assert run("coproduct", "--element", "x1", "--mode", "g2", "--n", "3")[0] == 2


def test_verify_single_identity_text():
    code, out = run("verify", "--identity", "coSer", "--max-n", "3")
    assert code == 0 and out.startswith("coSer: pass")


def test_verify_printed_fails():
    code, out = run("verify", "--identity", "leq", "--printed")
    assert code == 1 and "witness" in out


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "charhopf", "coproduct", "--element", "x2"],
                       capture_output=True, text=True, check=False)
    assert r.returncode == 0 and r.stdout.strip() == "x2 (x) 1 + g2 (x) x2"


@pytest.mark.parametrize("fmt", ["text", "latex"])
def test_verify_formats(fmt):
    code, out = run("verify", "--identity", "pol", "--max-n", "3", "--format", fmt)
    assert code == 0 and "pass" in out
