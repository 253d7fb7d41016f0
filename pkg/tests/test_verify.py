"""Claim runners and report plumbing."""

import pytest

from repunit_toric.binomials import Binomial
from repunit_toric.reports import (
    ClaimResult,
    InstanceRef,
    VerificationReport,
    exit_code,
    parse_json,
    render_json,
    render_text,
)
from repunit_toric.semigroup import InstanceParams
from repunit_toric.verify import CLAIMS, four_variable_generators, run_claim


def all_pass(reports):
    return all(r.overall() == "pass" for r in reports)


def test_lemma_claims_pass():
    assert all_pass(run_claim("lemma2", InstanceParams(3, 2, 4)))
    assert all_pass(run_claim("lemma3", InstanceParams(2, 3, 6)))


def test_basis_claims_pass_per_index():
    reports = run_claim("prop-gb1", InstanceParams(1, 3, 5))
    assert len(reports) == 5
    assert [r.instance.i for r in reports] == [1, 2, 3, 4, 5]
    assert all_pass(reports)
    assert all_pass(run_claim("thm-gb2", InstanceParams(1, 3, 5), i=2))


def test_saturation_and_toric_claims_pass():
    assert all_pass(run_claim("cor-gb1", InstanceParams(2, 3, 5)))
    assert all_pass(run_claim("cor-gb2", InstanceParams(2, 3, 5)))


def test_example_claims_pass_on_pinned_instances():
    assert all_pass(run_claim("example5", InstanceParams(1, 5, 5)))
    assert all_pass(run_claim("example-n4-minors", InstanceParams(1, 3, 4)))
    assert all_pass(run_claim("example-gcd3", InstanceParams(3, 2, 4)))
    assert all_pass(run_claim("example-a3b3", InstanceParams(3, 3, 4)))


def test_printed_four_variable_set():
    gens = four_variable_generators(InstanceParams(1, 3, 4))
    assert len(gens) == 6
    assert Binomial((5, 0, 0, 0), (0, 1, 0, 3)) in gens
    with pytest.raises(ValueError):
        four_variable_generators(InstanceParams(1, 3, 5))


@pytest.mark.parametrize(
    "claim,params",
    [
        ("prop-gb1", InstanceParams(1, 1, 4)),
        ("thm-gb2", InstanceParams(2, 1, 5)),
        ("cor-gb1", InstanceParams(1, 1, 5)),
        ("cor-gb1", InstanceParams(1, 2, 3)),
        ("cor-gb2", InstanceParams(3, 2, 4)),
        ("example5", InstanceParams(1, 5, 4)),
        ("example5", InstanceParams(11, 5, 5)),
        ("example-n4-minors", InstanceParams(3, 2, 4)),
        ("example-gcd3", InstanceParams(1, 2, 4)),
        ("example-a3b3", InstanceParams(1, 3, 4)),
    ],
)
def test_refusals(claim, params):
    reports = run_claim(claim, params)
    assert all(r.overall() == "refused" for r in reports)
    assert exit_code(reports) == 2


def test_run_claim_argument_errors():
    with pytest.raises(ValueError):
        run_claim("lemma7", InstanceParams(1, 2, 4))
    with pytest.raises(ValueError):
        run_claim("prop-gb1", InstanceParams(1, 2, 4), i=9)
    with pytest.raises(ValueError):
        run_claim("lemma2", InstanceParams(1, 2, 4), i=1)


def test_claim_registry_defaults():
    assert set(CLAIMS) == {
        "lemma2", "lemma3", "prop-gb1", "thm-gb2", "cor-gb1", "cor-gb2",
        "example5", "example-n4-minors", "example-gcd3", "example-a3b3",
    }
    assert dict(CLAIMS["example5"].defaults) == {"b": 5, "n": 5}
    assert dict(CLAIMS["example-gcd3"].defaults) == {"a": 3, "b": 2, "n": 4}


def test_report_round_trip():
    reports = run_claim("example-gcd3", InstanceParams(3, 2, 4))
    assert parse_json(render_json(reports)) == tuple(reports)


def test_report_rendering_and_exit_codes():
    ok = ClaimResult("check-a", "pass", "fine", 3)
    bad = ClaimResult("check-b", "fail", "broke")
    refused = ClaimResult("check-c", "refused", "not applicable")
    inst = InstanceRef(1, 2, 4)
    assert VerificationReport(inst, (ok, bad)).overall() == "fail"
    assert VerificationReport(inst, (ok, bad, refused)).overall() == "refused"
    assert VerificationReport(inst, (ok,)).overall() == "pass"

    text = render_text([VerificationReport(InstanceRef(1, 2, 4, 2), (ok, bad))])
    assert text.splitlines() == [
        "instance: a=1 b=2 n=4 i=2",
        "  [pass] check-a: fine (3 ms)",
        "  [fail] check-b: broke (0 ms)",
        "overall: fail",
    ]

    assert exit_code([VerificationReport(inst, (ok,))]) == 0
    assert exit_code([VerificationReport(inst, (ok, bad))]) == 1
    assert exit_code([
        VerificationReport(inst, (ok, bad)),
        VerificationReport(inst, (refused,)),
    ]) == 2
    with pytest.raises(ValueError):
        ClaimResult("x", "maybe", "")


def test_timing_accumulates_by_claim_name():
    r = VerificationReport(
        InstanceRef(1, 2, 4),
        (ClaimResult("c", "pass", "", 5), ClaimResult("c", "pass", "", 7)),
    )
    assert r.timing() == {"c": 12}
