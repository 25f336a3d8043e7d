import pytest

from hopfcurrents.currents import engine
from hopfcurrents.expr import evaluate, render
from hopfcurrents.foundations import AlgebraError, builtin_context
from hopfcurrents.laws import law_boundary_square, lift_structure
from hopfcurrents.suites import (
    SUITES,
    SuiteReport,
    _check_law,
    basis_keys,
    reports_json,
    run_suite,
    run_suites,
    subgroups,
)

CTX = {name: builtin_context(name) for name in ("C1", "C2", "C3", "C4")}


@pytest.mark.parametrize("name", sorted(CTX))
@pytest.mark.parametrize("suite", SUITES)
def test_small_runs_pass(name, suite):
    options = {"exhaustive": False} if suite == "bimodule-derivation" else {}
    report = run_suite(CTX[name], suite, seed=3, cases=8, **options)
    assert report.ok, report.failures
    assert sum(report.checks.values()) > 0


def test_unknown_suite_rejected():
    with pytest.raises(AlgebraError):
        run_suite(CTX["C1"], "nonsense")


def test_reports_are_reproducible_in_process():
    a = reports_json(run_suites(CTX["C2"], ["hopf-axioms", "differential"], seed=11, cases=6))
    b = reports_json(run_suites(builtin_context("C2"), ["hopf-axioms", "differential"], seed=11, cases=6))
    assert a == b
    assert '"seed": 11' in a


def test_seed_changes_the_sample():
    a = reports_json(run_suites(CTX["C2"], ["differential"], seed=1, cases=6))
    b = reports_json(run_suites(CTX["C2"], ["differential"], seed=2, cases=6))
    assert a != b


def test_failure_expression_reproduces_the_value():
    ctx = CTX["C2"]
    e = engine(ctx).e
    report = SuiteReport("probe", ctx.name, 0, 1)
    _check_law(report, lift_structure(ctx), "boundary-square", law_boundary_square,
               [{(e, (), (0, 1)): 1, (e, (0,), ()): 2}])
    (failure,) = report.failures
    # shrinking keeps only the offending term
    assert failure.expression == "defect(boundary_square, lift((e | 1 | e1^e2)))"
    assert render(evaluate(failure.expression, ctx)) == failure.value != "0"


def test_graded_sign_is_recorded_as_a_witness():
    report = run_suite(CTX["C2"], "differential", seed=5, cases=10)
    assert report.ok
    (w,) = [w for w in report.witnesses if w["identity"] == "boundary-antipode-graded"]
    assert w["holds"] is False
    assert render(evaluate(w["expression"], CTX["C2"])) == w["value"] != "0"


def test_groupring_contrast_witnesses():
    heis = run_suite(CTX["C2"], "groupring-contrast", cases=10)
    (w,) = heis.witnesses
    assert heis.ok and w["holds"] is False and not w["degenerate"]
    assert w["convolve"] != w["groupring"]
    abelian = run_suite(CTX["C1"], "groupring-contrast", cases=10)
    assert abelian.ok and abelian.witnesses[0]["holds"] is True


def test_subgroup_enumeration():
    labels = [sorted(CTX["C1"].group.serialize(p) for p in s) for s in subgroups(CTX["C1"])]
    assert labels == [["e"], ["e", "g2"], ["e", "g1", "g2", "g3"]]
    heis = subgroups(CTX["C2"])
    assert len(heis) == 1 and len(heis[0]) == 1


def test_basis_keys_size():
    # 3 points x 10 monomials of degree <= 2 x 8 wedges
    assert len(basis_keys(CTX["C2"])) == 3 * 10 * 8
