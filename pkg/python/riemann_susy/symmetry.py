"""
Evolutionary PDE systems, first prolongation of graded vector fields and
on-shell invariance checks.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import config
from .errors import RiemannSusyError
from .grassmann import Parity
from .liealg import VectorField, apply, bracket
from .logging import Logger
from .symexpr import (
    CLASSICAL_SPACE,
    SUSY_SPACE,
    JetSpace,
    SymExpr,
    is_odd_name,
    jet_name,
    on_shell_reduce,
    parse,
    to_text,
    total_derivative,
    zero_test,
)


@dataclass
class PDESystem:
    """
    residuals: left-hand sides set to zero
    solved: leading t-derivative -> right-hand side
    """

    name: str
    residuals: List[SymExpr]
    solved: Dict[str, SymExpr]
    fields: List[str]
    space: JetSpace
    independent: Tuple[str, ...] = ("x", "t")

    def field_parity(self, fld: str) -> Parity:
        return Parity.ODD if is_odd_name(fld) else Parity.EVEN

    def solved_form_consistent(self) -> bool:
        return all(on_shell_reduce(r, self).is_zero_structural() for r in self.residuals)


def _system(name, residuals, solved, fields, space):
    return PDESystem(name, [parse(r) for r in residuals], {k: parse(v) for k, v in solved.items()}, list(fields), space)


def classical_system() -> PDESystem:
    return _system(
        "classical",
        ["R_t + S*R_x", "S_t + R*S_x"],
        {"R_t": "-S*R_x", "S_t": "-R*S_x"},
        ["R", "S"],
        CLASSICAL_SPACE,
    )


def susy_system() -> PDESystem:
    return _system(
        "susy",
        ["R_t + S*R_x + psi_x*xi_x", "S_t + R*S_x + xi_x*psi_x", "xi_t + S*xi_x", "psi_t + R*psi_x"],
        {
            "R_t": "-S*R_x - psi_x*xi_x",
            "S_t": "-R*S_x - xi_x*psi_x",
            "xi_t": "-S*xi_x",
            "psi_t": "-R*psi_x",
        },
        ["R", "S", "xi", "psi"],
        SUSY_SPACE,
    )


EULER_SPACE = JetSpace("euler", {"u": ("x", "t"), "rho": ("x", "t"), "r1": ("x", "t"), "r2": ("x", "t")})


def euler_system() -> PDESystem:
    """isentropic Euler equations with p(rho) = kappa^2*rho + p0, each residual scaled to be free of rho"""
    return _system(
        "euler",
        ["u_t + u*u_x + kappa**2*rho_x/rho", "rho_t/rho + u*rho_x/rho + u_x"],
        {"u_t": "-u*u_x - kappa**2*rho_x/rho", "rho_t": "-u*rho_x - rho*u_x"},
        ["u", "rho"],
        EULER_SPACE,
    )


def prolong(v: VectorField, system: PDESystem, order: int = 1) -> VectorField:
    """
    Function:
    first prolongation phi^u_i = D_i(phi^u) - sum_j D_i(xi^j) u_j.
    Returns a field acting on the base coordinates and the first jets.
    """
    if order != 1:
        raise RiemannSusyError("only the first prolongation is available")
    space = system.space
    xis = {j: v.coefficient(j) for j in system.independent}
    coeffs = dict(v.coeffs)
    for fld in system.fields:
        phi = v.coefficient(fld)
        for i in system.independent:
            value = total_derivative(phi, i, space)
            for j in system.independent:
                d_xi = total_derivative(xis[j], i, space)
                if not d_xi.is_zero_structural():
                    value = value - d_xi * SymExpr.jet(fld, j)
            coeffs[jet_name(fld, i)] = value
    return VectorField("pr " + v.name, coeffs, v.parity, check=False)


@dataclass
class InvarianceReport:
    system: str
    generator: str
    passed: bool
    residuals: List[str] = field(default_factory=list)
    witness: Optional[str] = None

    def as_json(self) -> dict:
        return {
            "system": self.system,
            "generator": self.generator,
            "status": "pass" if self.passed else "fail",
            "witness": self.witness,
        }


def check_invariance(v: VectorField, system: PDESystem) -> InvarianceReport:
    """apply the prolonged field to every residual, reduce on-shell and zero-test"""
    pv = prolong(v, system)
    texts, witness = [], None
    for n, residual in enumerate(system.residuals):
        reduced = on_shell_reduce(apply(pv, residual), system)
        texts.append(to_text(reduced))
        report = zero_test(reduced)
        if not report.ok and witness is None:
            witness = "equation {}: {}".format(n, to_text(reduced))
    passed = witness is None
    Logger.debug("{} on {}: {}".format(v.name, system.name, "pass" if passed else witness))
    return InvarianceReport(system.name, v.name, passed, texts, witness)


@dataclass
class SuiteReport:
    system: str
    reports: List[InvarianceReport]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def counts(self) -> Tuple[int, int]:
        return sum(r.passed for r in self.reports), len(self.reports)


def verify_generator_suite(system: PDESystem, gens: Sequence[VectorField]) -> SuiteReport:
    reports = config.parallel_map(lambda g: check_invariance(g, system), gens)
    ok, total = sum(r.passed for r in reports), len(reports)
    Logger.info("{}: {}/{} generators leave the system invariant".format(system.name, ok, total))
    return SuiteReport(system.name, reports)


def verify_bracket_closure(system: PDESystem, gens: Sequence[VectorField]) -> List[InvarianceReport]:
    """every pairwise bracket of verified symmetries is again a symmetry"""
    out = []
    for i, a in enumerate(gens):
        for b in gens[i:]:
            c = bracket(a, b)
            if c.is_zero():
                continue
            out.append(check_invariance(c, system))
    return out
