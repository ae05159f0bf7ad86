"""
Conservation laws of the classical Riemann-invariant system and the
coordinate integrals of the associated immersion.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from . import config
from .errors import RiemannSusyError, UnsupportedOperationError
from .logging import Logger
from .symexpr import CLASSICAL_SPACE, SymExpr, is_zero, on_shell_reduce, parse, to_text, total_derivative
from .symmetry import classical_system

CONVENTIONS = ("corrected", "paper")

R, S = sympy.symbols("R S")


@dataclass
class ConservationPair:
    k: int
    rho: SymExpr
    flux: SymExpr
    convention: str

    def as_json(self) -> dict:
        return {"k": self.k, "convention": self.convention, "rho": to_text(self.rho), "flux": to_text(self.flux)}


def density_flux(k: int, convention: str = "corrected") -> ConservationPair:
    """
    corrected: rho = sum_{l=0}^{k} R^l S^(k-l), J = R*S*sum_{j=0}^{k-1} R^j S^(k-1-j)
    paper: rho = sum_{l=1}^{k} R^l S^(k-l), J = -R*S*sum_{j=1}^{k-1} R^j S^(k-1-j)
    """
    if k < 1:
        raise RiemannSusyError("conservation index k must be >= 1, got {}".format(k))
    if convention == "corrected":
        rho = sum(R ** l * S ** (k - l) for l in range(0, k + 1))
        flux = R * S * sum(R ** j * S ** (k - 1 - j) for j in range(0, k))
    elif convention == "paper":
        rho = sum(R ** l * S ** (k - l) for l in range(1, k + 1))
        flux = -R * S * sum((R ** j * S ** (k - 1 - j) for j in range(1, k)), sympy.Integer(0))
    else:
        raise UnsupportedOperationError("unknown convention {!r}".format(convention))
    return ConservationPair(k, SymExpr.scalar(rho), SymExpr.scalar(flux), convention)


@dataclass
class DivergenceReport:
    pair: ConservationPair
    ok: bool
    residual: str

    def as_json(self) -> dict:
        out = self.pair.as_json()
        out.update({"kind": "conservation", "status": "pass" if self.ok else "fail",
                    "witness": None if self.ok else self.residual})
        return out


def check_divergence(pair: ConservationPair) -> DivergenceReport:
    """D_t rho + D_x J reduced on-shell, symbolic zero test"""
    system = classical_system()
    div = total_derivative(pair.rho, "t", CLASSICAL_SPACE) + total_derivative(pair.flux, "x", CLASSICAL_SPACE)
    reduced = on_shell_reduce(div, system)
    report = is_zero(reduced, "symbolic")
    Logger.debug("k={} {}: {}".format(pair.k, pair.convention, to_text(reduced)))
    return DivergenceReport(pair, report.ok, to_text(reduced))


def divergence_suite(kmax: int, convention: str = "corrected") -> List[DivergenceReport]:
    return [check_divergence(density_flux(k, convention)) for k in range(1, kmax + 1)]


# immersion coordinates chi^(k) = integral of -J dt + rho dx


@dataclass
class WeierstrassPath:
    """piecewise-linear path through `vertices` and the solution it runs over"""

    vertices: List[Tuple[float, float]]
    R: Callable
    S: Callable

    def segments(self):
        return list(zip(self.vertices[:-1], self.vertices[1:]))


def weierstrass_chi(k: int, path: WeierstrassPath, steps: Optional[int] = None) -> float:
    """
    Function:
    composite midpoint rule along every segment; `steps` subdivisions per segment
    """
    steps = steps or config.get_int("weierstrass", "steps")
    pair = density_flux(k, "corrected")
    rho = sympy.lambdify((R, S), pair.rho.body(), modules="numpy")
    flux = sympy.lambdify((R, S), pair.flux.body(), modules="numpy")
    total = 0.0
    frac = (np.arange(steps) + 0.5) / steps
    for (x0, t0), (x1, t1) in path.segments():
        xs = x0 + frac * (x1 - x0)
        ts = t0 + frac * (t1 - t0)
        with np.errstate(all="raise"):
            try:
                r, s = np.broadcast_to(path.R(xs, ts), xs.shape), np.broadcast_to(path.S(xs, ts), xs.shape)
                values = rho(r, s) * (x1 - x0) - flux(r, s) * (t1 - t0)
            except FloatingPointError as exc:
                raise RiemannSusyError("solution cannot be evaluated on segment {} -> {}: {}".format(
                    (x0, t0), (x1, t1), exc))
        if not np.all(np.isfinite(values)):
            raise RiemannSusyError("solution is not finite on segment {} -> {}".format((x0, t0), (x1, t1)))
        total += float(np.sum(np.broadcast_to(values, xs.shape))) / steps
    return total


def solution_callables(fields: Dict[str, str], params: Dict[str, float]) -> Tuple[Callable, Callable]:
    """numpy callables R(x, t), S(x, t) from closed-form field texts"""
    x, t = sympy.symbols("x t")
    rep = {sympy.Symbol(k): v for k, v in params.items()}
    out = []
    for name in ("R", "S"):
        expr = parse(fields[name]).body().xreplace(rep)
        extra = expr.free_symbols - {x, t}
        if extra:
            raise RiemannSusyError("unbound parameters {} in {}".format(sorted(map(str, extra)), name))
        out.append(sympy.lambdify((x, t), expr, modules="numpy"))
    return out[0], out[1]


def staircase_paths(start: Sequence[float], end: Sequence[float]):
    """x-first and t-first staircases between two points"""
    (x0, t0), (x1, t1) = start, end
    return [(x0, t0), (x1, t0), (x1, t1)], [(x0, t0), (x0, t1), (x1, t1)]


@dataclass
class PathReport:
    k: int
    values: List[float]
    ok: bool
    tolerance: float

    def as_json(self) -> dict:
        return {"kind": "weierstrass", "id": "chi{}".format(self.k), "status": "pass" if self.ok else "fail",
                "values": self.values, "witness": None if self.ok else "path integrals differ"}


def path_independence(k: int, R_fn: Callable, S_fn: Callable, paths: Sequence[Sequence[Tuple[float, float]]],
                      steps: Optional[int] = None, tol: Optional[float] = None) -> PathReport:
    tol = tol if tol is not None else config.get_float("weierstrass", "tolerance")
    values = [weierstrass_chi(k, WeierstrassPath(list(p), R_fn, S_fn), steps) for p in paths]
    ref = values[0]
    ok = all(abs(v - ref) <= tol * (1 + abs(ref)) for v in values[1:])
    Logger.info("chi^({}) along {} paths: {}".format(k, len(values), ", ".join("{:.12g}".format(v) for v in values)))
    return PathReport(k, values, ok, tol)
