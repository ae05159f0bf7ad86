import sympy

from riemann_susy.superfield import (
    PHI,
    PSI,
    SuperExpr,
    check_decomposition,
    classical_limit,
    covariant_D,
    decompose_system,
    operator_identities,
    partial_x,
    smul,
    susy_Q,
)
from riemann_susy.symexpr import P
from riemann_susy.symmetry import susy_system


def test_covariant_derivative_of_superfield():
    d = covariant_D(PHI)
    assert d.body == P("R")
    assert d.soul == P("xi_x")


def test_D_squared_and_Q_squared():
    for f in (PHI, PSI):
        assert covariant_D(covariant_D(f)) == partial_x(f)
        assert susy_Q(susy_Q(f)) == -partial_x(f)
        assert (susy_Q(covariant_D(f)) + covariant_D(susy_Q(f))).is_zero_structural()


def test_theta_squares_to_zero():
    theta = SuperExpr.theta()
    assert smul(theta, theta).is_zero_structural()


def test_graded_leibniz_rule():
    lhs = covariant_D(smul(PHI, PSI))
    rhs = smul(covariant_D(PHI), PSI) - smul(PHI, covariant_D(PSI))
    assert lhs == rhs


def test_decomposition_with_free_parameters():
    a, b = sympy.symbols("a b")
    assert check_decomposition(a, b)
    assert check_decomposition(1, 1)
    assert check_decomposition(sympy.Rational(1, 2), 3)


def test_unit_parameters_give_the_susy_system():
    for computed, expected in zip(decompose_system(1, 1), susy_system().residuals):
        assert computed == expected


def test_classical_limit():
    limit = classical_limit()
    assert limit.r_eq == P("R_t + S*R_x")
    assert limit.s_eq == P("S_t + R*S_x")
    assert limit.xi_eq == 0
    assert limit.psi_eq == 0


def test_operator_identities_hold_on_random_components():
    results = operator_identities(samples=6, seed=7)
    assert [name for name, _ in results] == ["D^2 = d_x", "Q^2 = -d_x", "{Q,D} = 0"]
    assert all(ok for _, ok in results)
