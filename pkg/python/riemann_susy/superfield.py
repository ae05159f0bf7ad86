"""
Superspace calculus with one odd coordinate theta: expansions a + theta*b,
the covariant derivative D = theta*d_x + d_theta and the supersymmetry
generator Q = theta*d_x - d_theta. d_theta acts from the left.
"""
from collections import namedtuple
from dataclasses import dataclass
from typing import List, Tuple

import numpy as np
import sympy

from . import config
from .grassmann import Parity
from .logging import Logger
from .symexpr import SUSY_SPACE, JetSpace, SymExpr, parse, substitute, sym, total_derivative


def _split_parity(e: SymExpr) -> Tuple[SymExpr, SymExpr]:
    even = SymExpr({k: c for k, c in e.terms.items() if len(k) % 2 == 0}, canonical=True)
    odd = SymExpr({k: c for k, c in e.terms.items() if len(k) % 2 == 1}, canonical=True)
    return even, odd


@dataclass(frozen=True)
class SuperExpr:
    """body + theta*soul; neither part contains theta"""

    body: SymExpr
    soul: SymExpr
    space: JetSpace = SUSY_SPACE

    @classmethod
    def of(cls, body, soul=0, space: JetSpace = SUSY_SPACE) -> "SuperExpr":
        lift = lambda v: parse(v) if isinstance(v, str) else (v if isinstance(v, SymExpr) else SymExpr.scalar(v))
        return cls(lift(body), lift(soul), space)

    @classmethod
    def theta(cls, space: JetSpace = SUSY_SPACE) -> "SuperExpr":
        return cls(SymExpr(), SymExpr.scalar(1), space)

    def __add__(self, other: "SuperExpr") -> "SuperExpr":
        return SuperExpr(self.body + other.body, self.soul + other.soul, self.space)

    def __sub__(self, other: "SuperExpr") -> "SuperExpr":
        return SuperExpr(self.body - other.body, self.soul - other.soul, self.space)

    def __neg__(self) -> "SuperExpr":
        return SuperExpr(-self.body, -self.soul, self.space)

    def scale(self, c) -> "SuperExpr":
        """multiply by an even scalar"""
        return SuperExpr(self.body * c, self.soul * c, self.space)

    def __mul__(self, other: "SuperExpr") -> "SuperExpr":
        return smul(self, other)

    def __eq__(self, other):
        return isinstance(other, SuperExpr) and self.body == other.body and self.soul == other.soul

    def __hash__(self):
        return hash((self.body, self.soul))

    def is_zero_structural(self) -> bool:
        return self.body.is_zero_structural() and self.soul.is_zero_structural()

    def __str__(self):
        return "{} + theta*({})".format(self.body, self.soul)


def partial_x(e: SuperExpr) -> SuperExpr:
    return SuperExpr(total_derivative(e.body, "x", e.space), total_derivative(e.soul, "x", e.space), e.space)


def partial_t(e: SuperExpr) -> SuperExpr:
    return SuperExpr(total_derivative(e.body, "t", e.space), total_derivative(e.soul, "t", e.space), e.space)


def covariant_D(e: SuperExpr) -> SuperExpr:
    """D(a + theta*b) = b + theta*a_x"""
    return SuperExpr(e.soul, total_derivative(e.body, "x", e.space), e.space)


def susy_Q(e: SuperExpr) -> SuperExpr:
    """Q(a + theta*b) = -b + theta*a_x"""
    return SuperExpr(-e.soul, total_derivative(e.body, "x", e.space), e.space)


def smul(e1: SuperExpr, e2: SuperExpr) -> SuperExpr:
    """(a + theta*b)(c + theta*d) = ac + theta*(bc + (-1)^|a| ad)"""
    a_even, a_odd = _split_parity(e1.body)
    soul = e1.soul * e2.body + a_even * e2.soul - a_odd * e2.soul
    return SuperExpr(e1.body * e2.body, soul, e1.space)


def power_D(e: SuperExpr, n: int) -> SuperExpr:
    for _ in range(n):
        e = covariant_D(e)
    return e


PHI = SuperExpr.of("xi", "R")
PSI = SuperExpr.of("psi", "S")

Decomposition = namedtuple("Decomposition", ["r_eq", "s_eq", "xi_eq", "psi_eq"])


def superequations(a, b) -> Tuple[SuperExpr, SuperExpr]:
    """left-hand sides of the two superfield equations for parameters (a, b)"""
    a, b = sympy.sympify(a), sympy.sympify(b)
    first = partial_t(PHI) + smul(covariant_D(PSI), power_D(PHI, 2)).scale(a) \
        + smul(PSI, power_D(PHI, 3)).scale(1 - a)
    second = partial_t(PSI) + smul(covariant_D(PHI), power_D(PSI, 2)).scale(b) \
        + smul(PHI, power_D(PSI, 3)).scale(1 - b)
    return first, second


def decompose_system(a, b) -> Decomposition:
    """
    Function:
    split both superequations into theta^0 and theta^1 components.
    Returned in the order R, S, xi, psi equation.
    """
    first, second = superequations(a, b)
    return Decomposition(first.soul, second.soul, first.body, second.body)


def component_system(a, b) -> Decomposition:
    """the four component equations written out directly"""
    a, b = sympy.sympify(a), sympy.sympify(b)
    R, S, xi, psi = (SymExpr.jet(f) for f in ("R", "S", "xi", "psi"))
    j = SymExpr.jet
    return Decomposition(
        j("R", "t") + S * j("R", "x") + j("psi", "x") * j("xi", "x") * a + psi * j("xi", "xx") * (a - 1),
        j("S", "t") + R * j("S", "x") + j("xi", "x") * j("psi", "x") * b + xi * j("psi", "xx") * (b - 1),
        j("xi", "t") + S * j("xi", "x") * a + psi * j("R", "x") * (1 - a),
        j("psi", "t") + R * j("psi", "x") * b + xi * j("S", "x") * (1 - b),
    )


def check_decomposition(a, b) -> bool:
    computed, expected = decompose_system(a, b), component_system(a, b)
    return all(c == e for c, e in zip(computed, expected))


def classical_limit() -> Decomposition:
    """decomposition at a = b = 1 with the odd fields switched off"""
    zero = {"xi": SymExpr(), "psi": SymExpr()}
    return Decomposition(*(substitute(e, zero) for e in decompose_system(1, 1)))


def _random_superexpr(rng, parity: Parity) -> SuperExpr:
    """random polynomial components in x with generic fields and odd constants"""
    coef = lambda: sympy.Rational(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
    x = sym("x")
    even = SymExpr.scalar(coef() + coef() * x + coef() * x ** 2) \
        + SymExpr.jet("R") * coef() + SymExpr.jet("S") * SymExpr.jet("R", "x") * coef()
    odd = SymExpr.jet("xi") * coef() + SymExpr.jet("psi", "x") * (coef() * x) \
        + SymExpr.atom("eta1") * SymExpr.jet("S") * coef()
    if parity is Parity.EVEN:
        return SuperExpr(even, odd)
    return SuperExpr(odd, even)


def operator_identities(samples: int = 5, seed=None) -> List[Tuple[str, bool]]:
    """D^2 = d_x, Q^2 = -d_x and {Q, D} = 0 on random components of both parities"""
    seed = config.get_int("sampling", "seed") if seed is None else seed
    rng = np.random.default_rng(seed)
    checks = {"D^2 = d_x": True, "Q^2 = -d_x": True, "{Q,D} = 0": True}
    for i in range(samples):
        f = _random_superexpr(rng, Parity.EVEN if i % 2 == 0 else Parity.ODD)
        fx = partial_x(f)
        checks["D^2 = d_x"] &= covariant_D(covariant_D(f)) == fx
        checks["Q^2 = -d_x"] &= susy_Q(susy_Q(f)) == -fx
        checks["{Q,D} = 0"] &= (susy_Q(covariant_D(f)) + covariant_D(susy_Q(f))).is_zero_structural()
    for name, ok in checks.items():
        Logger.debug("superfield identity {}: {}".format(name, ok))
    return list(checks.items())
