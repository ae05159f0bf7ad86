import pytest

from riemann_susy.conserve import (
    WeierstrassPath,
    check_divergence,
    density_flux,
    divergence_suite,
    path_independence,
    solution_callables,
    staircase_paths,
    weierstrass_chi,
)
from riemann_susy.errors import RiemannSusyError, UnsupportedOperationError
from riemann_susy.reduction import solution_lookup
from riemann_susy.symexpr import P


def test_first_pairs():
    pair = density_flux(1)
    assert pair.rho == P("R + S")
    assert pair.flux == P("R*S")
    pair = density_flux(2)
    assert pair.rho == P("R**2 + R*S + S**2")
    assert pair.flux == P("R**2*S + R*S**2")


def test_corrected_pairs_are_conserved():
    reports = divergence_suite(4)
    assert [r.pair.k for r in reports] == [1, 2, 3, 4]
    assert all(r.ok for r in reports)


@pytest.mark.slow
def test_corrected_pairs_up_to_ten():
    assert all(r.ok for r in divergence_suite(10))


def test_printed_pairs_are_not_conserved():
    for k in (1, 2):
        report = check_divergence(density_flux(k, "paper"))
        assert not report.ok
        assert report.as_json()["status"] == "fail"
        assert report.as_json()["witness"] != "0"


def test_bad_arguments():
    with pytest.raises(RiemannSusyError):
        density_flux(0)
    with pytest.raises(UnsupportedOperationError):
        density_flux(1, "other")


@pytest.fixture(scope="module")
def similarity_solution():
    return solution_callables(solution_lookup("as4").fields, {"C1": 0.0, "C2": 0.0})


def test_chi_has_a_potential(similarity_solution):
    # R = S = x/t: chi^(1) = x**2/t between the end points
    R_fn, S_fn = similarity_solution
    path = WeierstrassPath([(0.5, 1.0), (1.5, 1.0), (1.5, 2.0)], R_fn, S_fn)
    assert weierstrass_chi(1, path) == pytest.approx(0.875, abs=1e-7)


def test_path_independence(similarity_solution):
    R_fn, S_fn = similarity_solution
    paths = staircase_paths((0.5, 1.0), (1.5, 2.0))
    for k in (1, 2):
        report = path_independence(k, R_fn, S_fn, paths)
        assert report.ok
        assert len(report.values) == 2


def test_singular_path_is_rejected(similarity_solution):
    R_fn, S_fn = similarity_solution
    path = WeierstrassPath([(0.5, -0.5), (0.5, 0.5)], R_fn, S_fn)
    with pytest.raises(RiemannSusyError):
        weierstrass_chi(1, path, steps=1)


def test_unbound_constants():
    with pytest.raises(RiemannSusyError):
        solution_callables(solution_lookup("as4").fields, {"C1": 0.0})
