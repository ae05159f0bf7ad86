import dataclasses
import time

import pytest
import sympy

from riemann_susy.catalog.ansatz import ANSATZ
from riemann_susy.catalog.solutions import SOLUTIONS
from riemann_susy.errors import CatalogError
from riemann_susy.reduction import (
    ImplicitRelation,
    ansatz_lookup,
    apply_ansatz,
    check_invariants,
    match_reduced,
    reduce_with,
    relation_lookup,
    solution_lookup,
    translated,
    verify_euler_double_wave,
    verify_implicit_relation,
    verify_solution,
)
from riemann_susy.symexpr import P


def test_label_parameters():
    a = ANSATZ["SL7(a=-1/2)"]
    assert a.subalgebra == "SL7"
    assert a.parameters == {"a": "-1/2"}
    assert ANSATZ["SL6*"].subalgebra == "SL6"
    assert ANSATZ["L4"].parameters == {}


def test_galilei_reduction():
    result = apply_ansatz(ANSATZ["L4"])
    assert result.residuals[0] == P("F_s + G/s")
    assert result.residuals[1] == P("G_s + F/s")
    assert result.prefactors == ["1", "1"]
    assert reduce_with("L4").status == "pass"


def test_prefactor_is_cleared():
    result = apply_ansatz(ANSATZ["L3"])
    assert result.residuals == [P("-2*F + s*F_s + G*F_s"), P("-2*G + s*G_s + F*G_s")]
    assert [sympy.sympify(p) for p in result.prefactors] == [sympy.Symbol("t") ** -3] * 2
    report = match_reduced(result, ANSATZ["L3"])
    assert report.status == "pass"
    assert [sympy.sympify(p) for p in report.prefactors] == [sympy.Symbol("t") ** -3] * 2


def test_polar_ansatz_needs_review():
    result = apply_ansatz(ANSATZ["L5"])
    assert result.prefactors == [None, None]
    report = match_reduced(result, ANSATZ["L5"])
    assert report.status == "manual-review"
    assert "depends on" in report.witness


@pytest.mark.parametrize("label", ["L1", "L2", "L3", "L7", "L8", "SL1", "SL2", "SL5"])
def test_reductions_match(label):
    report = reduce_with(label)
    assert report.status == "pass", report.witness


def test_wrong_reduced_equation_fails():
    wrong = dataclasses.replace(ANSATZ["L4"], expected=["F_s + 2*G/s", "G_s + F/s"])
    report = match_reduced(apply_ansatz(wrong), wrong)
    assert report.status == "fail"
    assert report.witness


@pytest.mark.parametrize("first", ["(1 + F**2)*(F_s + G/t)", "F*(F_s + G/t)"])
def test_multiplier_in_the_unknowns_is_not_a_match(first):
    scaled = dataclasses.replace(ANSATZ["L4"], expected=[first, "G_s + F/s"])
    report = match_reduced(apply_ansatz(scaled), scaled)
    assert report.status == "manual-review"
    assert report.witness.startswith("equation 0: the ratio depends on F")


def test_multiplier_that_is_not_a_monomial_is_not_a_match():
    scaled = dataclasses.replace(ANSATZ["L4"], expected=["(1 + x)*(F_s + G/s)", "G_s + F/s"])
    report = match_reduced(apply_ansatz(scaled), scaled)
    assert report.status == "manual-review"
    assert "not a monomial" in report.witness


def test_monomial_multiplier_is_recorded():
    scaled = dataclasses.replace(ANSATZ["L4"], expected=["x**2*(F_s + G/s)/3", "G_s + F/s"])
    report = match_reduced(apply_ansatz(scaled), scaled)
    assert report.status == "pass"
    assert sympy.sympify(report.prefactors[0]) == 3 / sympy.Symbol("x") ** 2


def test_printed_entry_is_flagged():
    assert reduce_with("SL6").status == "erratum"
    assert reduce_with("SL6*").status == "pass"


def test_invariants_are_annihilated():
    for label in ("L4", "L9", "SL3"):
        assert all(ok for _, ok in check_invariants(ANSATZ[label]))


def test_non_invariant_is_detected():
    wrong = dataclasses.replace(ANSATZ["L4"], invariants=["R"])
    assert check_invariants(wrong) == [("t", True), ("R", False)]


def test_unknown_labels():
    with pytest.raises(CatalogError):
        ansatz_lookup("L99")
    with pytest.raises(CatalogError):
        solution_lookup("nope")


def test_rational_solution():
    report = verify_solution(solution_lookup("as4"))
    assert report.status == "pass"
    assert report.tier == "symbolic"


def test_broken_solution_fails():
    record = solution_lookup("as4")
    broken = dataclasses.replace(record, id="broken", fields={"R": "x/t + C1*t + C2/t", "S": "x/t + C1*t"})
    report = verify_solution(broken)
    assert report.status == "fail"
    assert report.witness


def test_translated_solution():
    assert verify_solution(translated(solution_lookup("as4"), "1/3")).status == "pass"


K_RANGE = {"ranges": {"k": (2.5, 4.0)}}


def test_printed_implicit_relation_is_an_erratum():
    report = verify_implicit_relation(relation_lookup("as6B"))
    assert report.status == "erratum"
    assert report.tier == "quadrature"
    assert report.witness.startswith("F_ss = ")


def test_power_law_relation_solves_the_rule():
    relation = ImplicitRelation("power", "as6", value="C2*J", integrand="(k + 1)/2*f**((k - 1)/2)", domain=K_RANGE)
    assert verify_implicit_relation(relation).status == "pass"


def test_wrong_relation_fails():
    relation = ImplicitRelation("wrong", "as6", value="C2*J + F", integrand="(k + 1)/2*f**((k - 1)/2)",
                                domain=K_RANGE)
    report = verify_implicit_relation(relation, points=5)
    assert report.status == "fail"
    assert "from the rule" in report.witness


def test_relation_without_rule_is_rejected():
    with pytest.raises(CatalogError):
        verify_implicit_relation(ImplicitRelation("bad", "as4", value="J"))
    with pytest.raises(CatalogError):
        relation_lookup("nope")


def test_euler_double_wave():
    assert verify_euler_double_wave().status == "pass"
    assert verify_euler_double_wave(kappa=2).status == "pass"
    assert verify_euler_double_wave(flip=True).status == "fail"


@pytest.mark.slow
@pytest.mark.parametrize("label", sorted(ANSATZ))
def test_reduction_catalog(label):
    report = reduce_with(label)
    assert report.status != "fail", report.witness
    if label in ("L5", "L10"):
        assert report.status == "manual-review"
    elif not ANSATZ[label].notes:
        assert report.status == "pass", report.witness
    assert all(ok for _, ok in check_invariants(ANSATZ[label]))


@pytest.mark.slow
@pytest.mark.parametrize("ident", sorted(SOLUTIONS))
def test_solution_catalog(ident):
    record = SOLUTIONS[ident]
    report = verify_solution(record)
    assert report.status != "fail", report.witness
    if all("duplicated label" in n for n in record.notes):
        assert report.status == "pass", report.witness


@pytest.mark.slow
def test_ode_rule_is_checked_on_the_full_system():
    record = solution_lookup("as6")
    assert record.level == "pde" and record.equations is None
    assert verify_solution(record).status == "pass"
    report = verify_solution(dataclasses.replace(record, id="as6-free", ode={}))
    assert report.status == "fail"
    assert report.witness.startswith("equation 1")


@pytest.mark.slow
def test_implicit_solution_on_the_full_system():
    record = solution_lookup("as5")
    assert record.level == "pde"
    assert verify_solution(record).status == "erratum"


@pytest.mark.slow
@pytest.mark.parametrize("ident", ["as10", "solution10"])
def test_heavy_records_finish(ident):
    start = time.perf_counter()
    report = verify_solution(solution_lookup(ident))
    assert time.perf_counter() - start < 120
    assert report.status != "fail", report.witness
