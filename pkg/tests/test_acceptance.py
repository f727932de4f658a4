"""Acceptance criteria 1-8.  Each test prints one PASS/FAIL line with its
elapsed time and budget; every comparison is exact."""

import io
import json
import time

import pytest

from charhopf import hopf
from charhopf.cli import main
from charhopf.verify import VerifyOptions, run_identity

OPTS = VerifyOptions()


def _line(capsys, n, ok, elapsed, budget, what):
    status = "PASS" if ok else "FAIL"
    timing = f"{elapsed:.2f} s" + (f", budget {budget} s" if budget else "")
    with capsys.disabled():
        print(f"\nacceptance criterion {n}: {status}  {what}  ({timing})")


def _run(capsys, n, budget, what, names, opts=OPTS):
    start = time.perf_counter()
    reports = [run_identity(name, opts) for name in names]
    elapsed = time.perf_counter() - start
    failed = [f"{r.identity}: {r.witness}" for r in reports if not r.passed]
    ok = not failed and elapsed < budget
    _line(capsys, n, ok, elapsed, budget, what)
    assert not failed, failed
    assert elapsed < budget


def test_criterion_1_serre_left_coproduct(capsys):
    _run(capsys, 1, 5, "Delta([x1 x2^n]) = closed form, n <= 6", ["coSer"])


def test_criterion_2_alpha_and_pol(capsys):
    _run(capsys, 2, 1, "alpha closed = recurrent and pol identity, n <= 8", ["alpha", "pol"])


def test_criterion_3_mirror_and_scaled_families(capsys):
    _run(capsys, 3, 10, "mon, ser3, mon1, coSer4, mon2 for n <= 6",
         ["mon", "ser3", "mon1", "coSer4", "mon2"])


def test_criterion_4_omega_formulas(capsys):
    _run(capsys, 4, 5, "Omega(x2^n) n <= 6; bic1, bic2 n <= 5", ["exm", "kmm"])


def test_criterion_5_shuffle_identities(capsys):
    assert OPTS.cases >= 50
    _run(capsys, 5, 10, "spro, proc/proc1, Omega multiplicative, braided compatibility",
         ["spro", "proc", "omega-mult", "braided-compat"])


def test_criterion_6_g2_suite(capsys):
    _run(capsys, 6, 10, "serre-kernel, leq, basis-change, c5 (four stages)",
         ["serre-kernel", "leq", "basis-change", "c5"])


def test_criterion_7_hopf_sanity(capsys):
    assert OPTS.cases >= 50
    _run(capsys, 7, 10, "Delta multiplicative and coassociative, 50 random cases",
         ["delta-mult", "coassoc"])


CRITERIA_IDENTITIES = {"coSer", "alpha", "pol", "mon", "ser3", "mon1", "coSer4", "mon2",
                       "exm", "kmm", "spro", "proc", "omega-mult", "braided-compat",
                       "serre-kernel", "leq", "basis-change", "c5", "delta-mult", "coassoc"}


def _verify_all():
    out = io.StringIO()
    code = main(["verify", "--identity", "all", "--format", "json"], out=out)
    return code, json.loads(out.getvalue())


@pytest.fixture
def corrupted_alpha(monkeypatch):
    original = hopf.alpha_closed

    def corrupted(params, n, k, i=1, j=2):
        value = original(params, n, k, i, j)
        return value * 2 if (n, k) == (2, 1) else value

    monkeypatch.setattr(hopf, "alpha_closed", corrupted)


def test_criterion_8_cli_verify_all(capsys):
    start = time.perf_counter()
    code, doc = _verify_all()
    elapsed = time.perf_counter() - start
    statuses = {r["identity"]: r["status"] for r in doc["identities"]}
    ok = (code == 0 and doc["passed"] and CRITERIA_IDENTITIES <= set(statuses)
          and all(s == "pass" for s in statuses.values()))
    _line(capsys, 8, ok, elapsed, None, f"verify --identity all: exit {code}, "
          f"{sum(s == 'pass' for s in statuses.values())}/{len(statuses)} pass")
    assert code == 0
    assert CRITERIA_IDENTITIES <= set(statuses)
    assert all(s == "pass" for s in statuses.values()), statuses


def test_criterion_8_corrupted_coefficient_fails(capsys, corrupted_alpha):
    start = time.perf_counter()
    code, doc = _verify_all()
    elapsed = time.perf_counter() - start
    failed = {r["identity"]: r["witness"] for r in doc["identities"] if r["status"] == "fail"}
    ok = code == 1 and "coSer" in failed and "term" in failed["coSer"]
    _line(capsys, "8b", ok, elapsed, None, f"corrupted alpha_2^(1): exit {code}, "
          f"failing {sorted(failed)}")
    assert code == 1
    assert not doc["passed"]
    assert "coSer" in failed and "alpha" in failed
    assert "term" in failed["coSer"]
