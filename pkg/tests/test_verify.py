from dataclasses import replace

from ruvcodes.ideals import IdealSpec
from ruvcodes.verify import FAIL, PASS, default_formula, exit_code, run_campaign, verify_spec


def corrupted(spec, params):
    report = default_formula(spec, params)
    if spec.tag == "B" and spec.ell == 5:
        return replace(report, d_h=2, d_sp=4)
    return report


def test_single_spec_passes(nou):
    res = verify_spec(IdealSpec("B", 5), nou)
    assert res.status == PASS
    assert {c.name for c in res.checks} == {"eta_exponent", "d_h", "d_sp"}
    assert "d_h" in res.witnesses


def test_corrupted_formula_is_caught(nou):
    res = verify_spec(IdealSpec("B", 5), nou, formula=corrupted)
    assert res.status == FAIL
    assert res.label == "<u(x^2-2)^5>"


def test_campaign_exit_code_on_corruption(nou):
    results = run_campaign(nou, z_policy="zero-only", cap=10**4, formula=corrupted)
    failing = [r.label for r in results if r.status == FAIL]
    assert failing == ["<u(x^2-2)^5>"]
    assert exit_code(results) == 1


def test_campaign_sorted_and_parallel_equal(nou):
    a = run_campaign(nou, z_policy="zero-only", cap=10**4)
    b = run_campaign(nou, z_policy="zero-only", cap=10**4, jobs=2)
    assert [r.spec.key for r in a] == sorted(r.spec.key for r in a)
    assert [(r.label, r.status) for r in a] == [(r.label, r.status) for r in b]
