import pytest

from riemann_susy import config
from riemann_susy.grassmann import Parity
from riemann_susy.liealg import VectorField, classical_generators, generator_map, susy_generators
from riemann_susy.symmetry import (
    check_invariance,
    classical_system,
    prolong,
    susy_system,
    verify_bracket_closure,
    verify_generator_suite,
)
from riemann_susy.symexpr import P


def test_prolongation_of_galilei_boost():
    w = generator_map("classical")["W"]
    pw = prolong(w, classical_system())
    assert pw.coefficient("R_x") == 0
    assert pw.coefficient("R_t") == P("-R_x")
    assert pw.coefficient("S_t") == P("-S_x")


def test_classical_generators_are_symmetries():
    suite = verify_generator_suite(classical_system(), classical_generators())
    assert suite.counts() == (6, 6)
    assert suite.passed


def test_susy_generators_are_symmetries():
    suite = verify_generator_suite(susy_system(), susy_generators())
    assert suite.counts() == (8, 8)


def test_threaded_suite_keeps_the_order(monkeypatch):
    monkeypatch.setitem(config.config["sampling"], "workers", "4")
    suite = verify_generator_suite(classical_system(), classical_generators())
    assert [r.generator for r in suite.reports] == [g.name for g in classical_generators()]
    assert suite.passed


def test_shift_of_R_is_not_a_symmetry():
    d_R = VectorField("d_R", {"R": "1"}, Parity.EVEN)
    for system in (classical_system(), susy_system()):
        report = check_invariance(d_R, system)
        assert not report.passed
        assert report.witness.startswith("equation 1")


def test_projective_generator_does_not_extend():
    j = generator_map("classical")["J"]
    assert check_invariance(j, classical_system()).passed
    assert not check_invariance(j, susy_system()).passed


@pytest.mark.slow
def test_brackets_of_symmetries_are_symmetries():
    for system, gens in ((classical_system(), classical_generators()), (susy_system(), susy_generators())):
        assert all(r.passed for r in verify_bracket_closure(system, gens))
