import pytest
import sympy

from riemann_susy.errors import ParityError, ParseError, RegistryError, TierError, UnsupportedOperationError
from riemann_susy.grassmann import Parity
from riemann_susy.symexpr import (
    CLASSICAL_SPACE,
    SUSY_SPACE,
    P,
    SamplingDomain,
    SymExpr,
    is_zero,
    on_shell_reduce,
    parse,
    substitute,
    to_text,
    total_derivative,
    zero_test,
)
from riemann_susy.symmetry import classical_system


def test_odd_atoms_anticommute():
    assert P("xi*psi") == -P("psi*xi")
    assert P("xi*xi") == 0
    assert P("eta1*xi_x*eta1") == 0


def test_parity():
    assert P("R*xi").parity() is Parity.ODD
    assert P("xi*psi").parity() is Parity.EVEN
    assert P("R + xi").parity() is Parity.MIXED
    assert SymExpr().parity() is Parity.EVEN


def test_text_round_trip():
    for text in ("R*xi*psi_x + S**2", "exp(R)*eta1 - 3*xi_t*psi", "x/t + C1*t"):
        e = parse(text)
        assert parse(to_text(e)) == e


def test_parse_errors():
    with pytest.raises(ParseError):
        parse("R + unknown_name")
    with pytest.raises(ParseError):
        parse("sqrt(xi)")
    with pytest.raises(RegistryError):
        SymExpr.atom("nope")


def test_total_derivative_product_rule():
    assert total_derivative(P("R*S"), "x", CLASSICAL_SPACE) == P("R_x*S + R*S_x")
    assert total_derivative(P("x*t"), "t", CLASSICAL_SPACE) == P("x")
    assert total_derivative(P("xi*psi"), "x", SUSY_SPACE) == P("xi_x*psi + xi*psi_x")


def test_total_derivative_through_symmetry_variable():
    x, t = sympy.symbols("x t")
    space = CLASSICAL_SPACE.with_fields("reduced", {"F": ("s",)}, sigma=x / t)
    assert total_derivative(P("F"), "x", space) == P("F_s/t")
    assert total_derivative(P("F"), "t", space) == P("-x*F_s/t**2")
    assert total_derivative(P("s**2"), "x", space) == P("2*s/t")


def test_theta_is_not_a_total_derivative_variable():
    with pytest.raises(UnsupportedOperationError):
        total_derivative(P("xi"), "theta")


def test_substitute_field_and_jets():
    e = substitute(P("R_x + S"), {"R": P("x*t")}, CLASSICAL_SPACE)
    assert e == P("t + S")


def test_substitute_odd_field():
    e = substitute(P("xi_x*psi"), {"xi": P("eta1*x")})
    assert e == P("eta1*psi")


def test_substitute_expands_nilpotent_shift():
    e = substitute(P("exp(R)"), {"R": P("x + eta1*eta2")})
    assert e == P("exp(x) + exp(x)*eta1*eta2")


def test_substitute_checks_parity():
    with pytest.raises(ParityError):
        substitute(P("R"), {"R": P("xi")})
    with pytest.raises(ParityError):
        substitute(P("xi"), {"xi": P("R + eta1")})


def test_on_shell_reduce():
    system = classical_system()
    assert on_shell_reduce(P("R_t + S*R_x"), system) == 0
    assert on_shell_reduce(P("R_tx"), system) == P("-S_x*R_x - S*R_xx")


def test_symbolic_zero_test():
    assert is_zero(P("1/(R - S) + 1/(S - R)"), "symbolic").ok
    report = is_zero(P("R/(R - S)"), "symbolic")
    assert not report.ok
    assert "R" in report.witness
    with pytest.raises(TierError):
        is_zero(P("sqrt(R)"), "symbolic")


def test_numeric_zero_test():
    assert is_zero(P("sin(R)**2 + cos(R)**2 - 1"), "numeric").ok
    assert not is_zero(P("sin(R)"), "numeric").ok
    assert is_zero(P("sqrt(R**2) - R"), "numeric").ok
    negative = SamplingDomain(ranges={"R": (-2.0, -1.0)})
    assert not is_zero(P("sqrt(R**2) - R"), "numeric", domain=negative).ok


def test_numeric_zero_test_per_grassmann_component():
    assert is_zero(P("(sin(R)**2 + cos(R)**2 - 1)*eta1*eta2"), "numeric").ok
    assert not is_zero(P("sin(R)*eta1 + eta2"), "numeric").ok


def test_positive_guards():
    R = sympy.Symbol("R")
    domain = SamplingDomain(ranges={"R": (-2.0, 2.0)}, positive=[R])
    assert is_zero(P("sqrt(R**2) - R"), "numeric", domain=domain).ok


def test_zero_test_picks_tier():
    assert zero_test(P("R*S - S*R")).ok
    assert zero_test(P("exp(R)*exp(-R) - 1")).mode in ("symbolic", "numeric")
    assert zero_test(P("log(R) - log(R)")).ok
    assert zero_test(P("sin(R)**2 + cos(R)**2 - 1")).mode == "numeric"
