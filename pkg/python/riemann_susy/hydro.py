"""
Numerical side of the general integral of the classical system

    x = R F1'(R) - F1(R) + S F2'(S) - F2(S),    t = F1'(R) + F2'(S)

forward evaluation, Newton inversion back to (R, S), the gradient
catastrophe locus and grid diagnostics against R_t + S R_x = 0,
S_t + R S_x = 0.
"""
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import prettytable as pt
import sympy
from numpy.polynomial import Polynomial
from scipy.optimize import brentq

from . import config
from .errors import CatastropheError, NonConvergenceError, ParseError, RiemannSusyError
from .logging import Logger


@dataclass(frozen=True)
class Profile:
    """one single-variable function with its exact first and second derivative"""

    name: str
    F: Callable
    dF: Callable
    d2F: Callable
    poly: Optional[Polynomial] = None


def profile_from_poly(coeffs: Sequence[float], name: Optional[str] = None) -> Profile:
    """coefficients in increasing degree, c0 + c1*s + c2*s**2 + ..."""
    p = Polynomial([float(c) for c in coeffs])
    return Profile(name or "poly:" + ",".join("{:g}".format(c) for c in coeffs), p, p.deriv(1), p.deriv(2), p)


def _vectorize(fn):
    def wrapped(v):
        return np.asarray(fn(v), dtype=float) + np.zeros_like(v, dtype=float)
    return wrapped


def profile_from_expr(text: str) -> Profile:
    s = sympy.Symbol("s")
    try:
        expr = sympy.sympify(text, locals={"s": s})
    except (sympy.SympifyError, SyntaxError) as exc:
        raise ParseError("cannot parse profile {!r}: {}".format(text, exc))
    extra = expr.free_symbols - {s}
    if extra:
        raise ParseError("profile {!r} has free symbols {}".format(text, sorted(map(str, extra))))
    fns = [_vectorize(sympy.lambdify(s, e, modules="numpy")) for e in (expr, expr.diff(s), expr.diff(s, 2))]
    return Profile("expr:" + text, *fns)


PRESETS = {
    "quadratic": (0.0, 0.0, 1.0 / 2),
    "cubic": (0.0, 0.0, 0.0, 1.0 / 6),
    "quartic": (0.0, 0.0, 0.0, 0.0, 1.0 / 12),
}


def parse_profile(spec: str) -> Profile:
    """
    Function:
    1. preset name: quadratic, cubic, quartic
    2. poly:c0,c1,... increasing degree
    3. expr:<sympy expression in s>
    """
    if spec in PRESETS:
        return profile_from_poly(PRESETS[spec], spec)
    if spec.startswith("poly:"):
        try:
            coeffs = [float(c) for c in spec[5:].split(",") if c.strip()]
        except ValueError as exc:
            raise ParseError("bad polynomial profile {!r}: {}".format(spec, exc))
        if not coeffs:
            raise ParseError("empty polynomial profile {!r}".format(spec))
        return profile_from_poly(coeffs)
    if spec.startswith("expr:"):
        return profile_from_expr(spec[5:])
    raise ParseError("unknown profile {!r}; presets are {}".format(spec, ", ".join(PRESETS)))


@dataclass(frozen=True)
class ProfilePair:
    first: Profile
    second: Profile

    @classmethod
    def preset(cls, name: str) -> "ProfilePair":
        return cls(parse_profile(name), parse_profile(name))

    @classmethod
    def parse(cls, first: str, second: Optional[str] = None) -> "ProfilePair":
        return cls(parse_profile(first), parse_profile(second or first))

    @property
    def name(self) -> str:
        if self.first.name == self.second.name:
            return self.first.name
        return "{}/{}".format(self.first.name, self.second.name)


def forward_map(R, S, p: ProfilePair):
    f1, f2 = p.first, p.second
    x = R * f1.dF(R) - f1.F(R) + S * f2.dF(S) - f2.F(S)
    t = f1.dF(R) + f2.dF(S)
    return x, t


def jacobian(R: float, S: float, p: ProfilePair) -> np.ndarray:
    """d(x, t)/d(R, S)"""
    a, b = float(p.first.d2F(R)), float(p.second.d2F(S))
    return np.array([[R * a, S * b], [a, b]])


def hodograph_det(R, S, p: ProfilePair):
    return p.first.d2F(R) * p.second.d2F(S) * (R - S)


@dataclass
class Inversion:
    R: float
    S: float
    iterations: int
    det: float

    @property
    def branch(self) -> int:
        return int(np.sign(self.R - self.S))

    def as_json(self) -> dict:
        return {"R": self.R, "S": self.S, "iterations": self.iterations, "det": self.det, "branch": self.branch}


def invert_map(x: float, t: float, p: ProfilePair, guess: Tuple[float, float],
               tol: Optional[float] = None, max_iter: Optional[int] = None,
               delta: Optional[float] = None, max_halvings: Optional[int] = None) -> Inversion:
    """
    Function:
    damped Newton iteration for forward_map(R, S) = (x, t).
    1. the analytic Jacobian is singular (|det| <= delta): CatastropheError
    2. the full step is halved until the residual norm does not grow
    3. converged when the Newton step is <= tol relative to (R, S) or the
       residual reaches round-off; a damped step below tol is stagnation
    """
    tol = tol if tol is not None else config.get_float("hydro", "tolerance")
    max_iter = max_iter if max_iter is not None else config.get_int("hydro", "max_iter")
    delta = delta if delta is not None else config.get_float("hydro", "delta")
    max_halvings = max_halvings if max_halvings is not None else config.get_int("hydro", "max_halvings")
    target = np.array([x, t], dtype=float)

    def residual(z):
        return np.array(forward_map(z[0], z[1], p), dtype=float) - target

    z = np.array(guess, dtype=float)
    g = residual(z)
    # round-off floor of the residual at this target
    floor = 64 * np.finfo(float).eps * (1.0 + np.linalg.norm(target))
    trace = []
    for it in range(1, max_iter + 1):
        det = float(hodograph_det(z[0], z[1], p))
        if not np.isfinite(det) or abs(det) <= delta:
            raise CatastropheError((float(z[0]), float(z[1])), det)
        step = np.linalg.solve(jacobian(z[0], z[1], p), -g)
        if np.linalg.norm(step) <= tol * (1.0 + np.linalg.norm(z)) or np.linalg.norm(g) <= floor:
            z = z + step
            return Inversion(float(z[0]), float(z[1]), it, float(hodograph_det(z[0], z[1], p)))
        norm0 = np.linalg.norm(g)
        lam = 1.0
        for _ in range(max_halvings + 1):
            trial = z + lam * step
            g_trial = residual(trial)
            if np.all(np.isfinite(g_trial)) and np.linalg.norm(g_trial) <= norm0:
                break
            lam *= 0.5
        else:
            raise NonConvergenceError("line search failed at ({:.6g}, {:.6g}) after {} iterations".format(
                x, t, it), trace)
        z, g = trial, g_trial
        trace.append({"iteration": it, "R": float(z[0]), "S": float(z[1]),
                      "residual": float(np.linalg.norm(g)), "damping": lam})
        if lam < 1.0 and lam * np.linalg.norm(step) <= tol:
            raise NonConvergenceError("stagnated at ({:.6g}, {:.6g}) with residual {:.3g}".format(
                x, t, float(np.linalg.norm(g))), trace)
    raise NonConvergenceError("no convergence at ({:.6g}, {:.6g}) in {} iterations".format(x, t, max_iter), trace)


def round_trip(p: ProfilePair, n: int = 1000, seed: Optional[int] = None, box: Tuple[float, float] = (0.5, 2.0),
               min_gap: float = 0.1, jitter: float = 0.02) -> float:
    """worst |(R, S) - invert_map(forward_map(R, S))| over n random points with |R - S| >= min_gap"""
    seed = config.get_int("sampling", "seed") if seed is None else seed
    rng = np.random.default_rng(seed)
    worst, done = 0.0, 0
    while done < n:
        R, S = rng.uniform(*box, size=2)
        if abs(R - S) < min_gap:
            continue
        x, t = forward_map(R, S, p)
        guess = (R + rng.uniform(-jitter, jitter), S + rng.uniform(-jitter, jitter))
        inv = invert_map(x, t, p, guess)
        worst = max(worst, abs(inv.R - R), abs(inv.S - S))
        done += 1
    return worst


def _zeros(profile: Profile, lo: float, hi: float, n: int):
    """zeros of F'' on [lo, hi]; None when F'' vanishes identically"""
    if profile.poly is not None:
        d2 = profile.poly.deriv(2)
        if not np.any(d2.coef):
            return None
        roots = d2.roots() if d2.degree() > 0 else np.array([])
        real = sorted({round(float(r.real), 12) for r in np.atleast_1d(roots)
                       if abs(r.imag) < 1e-12 and lo <= r.real <= hi})
        return real
    grid = np.linspace(lo, hi, n)
    values = profile.d2F(grid)
    if np.all(values == 0):
        return None
    found = set(float(v) for v in grid[values == 0])
    for a, b, fa, fb in zip(grid[:-1], grid[1:], values[:-1], values[1:]):
        if fa * fb < 0:
            found.add(float(brentq(profile.d2F, a, b)))
    return sorted(found)


@dataclass
class LocusReport:
    domain: Tuple[Tuple[float, float], Tuple[float, float]]
    diagonal: bool
    R_lines: Optional[List[float]]
    S_lines: Optional[List[float]]
    band: int
    samples: int

    @property
    def degenerate(self) -> bool:
        """F1'' or F2'' vanishes identically: the whole domain is singular"""
        return self.R_lines is None or self.S_lines is None

    @property
    def empty(self) -> bool:
        return not self.degenerate and not self.diagonal and not self.R_lines and not self.S_lines

    def as_json(self) -> dict:
        return {"kind": "hydro", "id": "locus", "domain": [list(d) for d in self.domain], "diagonal": self.diagonal,
                "R_lines": self.R_lines, "S_lines": self.S_lines, "degenerate": self.degenerate,
                "empty": self.empty, "band": self.band, "samples": self.samples}


def catastrophe_locus(p: ProfilePair, domain: Tuple[Tuple[float, float], Tuple[float, float]],
                      n: int = 201, delta: Optional[float] = None) -> LocusReport:
    """
    zero set of det = F1''(R) F2''(S) (R - S) on the rectangle
    domain = ((Rmin, Rmax), (Smin, Smax)); `band` counts the sampled nodes
    with |det| <= delta
    """
    delta = delta if delta is not None else config.get_float("hydro", "delta")
    (r0, r1), (s0, s1) = domain
    diagonal = max(r0, s0) <= min(r1, s1)
    R_lines = _zeros(p.first, r0, r1, n)
    S_lines = _zeros(p.second, s0, s1, n)
    rr, ss = np.meshgrid(np.linspace(r0, r1, n), np.linspace(s0, s1, n), indexing="ij")
    band = int(np.count_nonzero(np.abs(hodograph_det(rr, ss, p)) <= delta))
    Logger.debug("locus of {} on {}: diagonal={} R={} S={}".format(p.name, domain, diagonal, R_lines, S_lines))
    return LocusReport(((r0, r1), (s0, s1)), diagonal, R_lines, S_lines, band, n * n)


# grid evaluation

STATUS_OK = 0
STATUS_CATASTROPHE = 1
STATUS_NONCONVERGENCE = 2
STATUS_NAMES = {STATUS_OK: "ok", STATUS_CATASTROPHE: "catastrophe", STATUS_NONCONVERGENCE: "nonconvergence"}


@dataclass
class GridSolveConfig:
    x_range: Tuple[float, float]
    t_range: Tuple[float, float]
    nx: int
    nt: int
    guess: Tuple[float, float]
    tol: float = field(default_factory=lambda: config.get_float("hydro", "tolerance"))
    max_iter: int = field(default_factory=lambda: config.get_int("hydro", "max_iter"))
    delta: float = field(default_factory=lambda: config.get_float("hydro", "delta"))

    def __post_init__(self):
        if self.nx < 2 or self.nt < 2:
            raise RiemannSusyError("grid counts must be >= 2, got {}x{}".format(self.nx, self.nt))
        if self.tol <= 0:
            raise RiemannSusyError("Newton tolerance must be positive")

    def axes(self):
        return np.linspace(*self.x_range, self.nx), np.linspace(*self.t_range, self.nt)


@dataclass
class GridResult:
    """arrays indexed [t, x]"""

    xs: np.ndarray
    ts: np.ndarray
    R: np.ndarray
    S: np.ndarray
    det: np.ndarray
    residual_R: np.ndarray
    residual_S: np.ndarray
    status: np.ndarray
    profile: str = ""

    @property
    def converged(self) -> np.ndarray:
        return self.status == STATUS_OK

    @property
    def branch(self) -> np.ndarray:
        return np.sign(self.R - self.S)

    def max_residual(self, interior: bool = False) -> float:
        res = np.maximum(np.abs(self.residual_R), np.abs(self.residual_S))
        if interior:
            res = res[1:-1, 1:-1]
        res = res[np.isfinite(res)]
        return float(res.max()) if res.size else float("nan")

    def table(self) -> pt.PrettyTable:
        table = pt.PrettyTable(["x", "t", "R", "S", "det", "residual_R", "residual_S", "branch", "status"])
        for i, t in enumerate(self.ts):
            for j, x in enumerate(self.xs):
                table.add_row([repr(float(x)), repr(float(t)), repr(float(self.R[i, j])), repr(float(self.S[i, j])),
                               repr(float(self.det[i, j])), repr(float(self.residual_R[i, j])),
                               repr(float(self.residual_S[i, j])), int(np.nan_to_num(self.branch[i, j])),
                               STATUS_NAMES[int(self.status[i, j])]])
        return table

    def to_csv(self) -> str:
        return self.table().get_csv_string()

    def as_json(self) -> dict:
        branches = sorted({int(b) for b in self.branch[self.converged]})
        ok = bool(self.converged.all())
        return {"kind": "hydro", "id": "grid", "profile": self.profile, "status": "pass" if ok else "fail",
                "nodes": int(self.status.size), "converged": int(self.converged.sum()),
                "catastrophe": int(np.count_nonzero(self.status == STATUS_CATASTROPHE)),
                "nonconvergence": int(np.count_nonzero(self.status == STATUS_NONCONVERGENCE)),
                "branches": branches, "max_residual": self.max_residual(),
                "witness": None if ok else "{} nodes failed".format(int((~self.converged).sum()))}


def _gradient(values, ts, xs):
    # second-order one-sided stencils need three nodes per axis
    d_t = np.gradient(values, ts, axis=0, edge_order=2 if len(ts) > 2 else 1)
    d_x = np.gradient(values, xs, axis=1, edge_order=2 if len(xs) > 2 else 1)
    return d_t, d_x


def evaluate_grid(cfg: GridSolveConfig, p: ProfilePair) -> GridResult:
    """
    Function:
    1. row-major sweep over t rows, x columns; each node starts Newton from
       its left neighbour, the node above at a row start, cfg.guess otherwise
    2. failed nodes keep NaN fields and a status flag
    3. residuals of R_t + S R_x and S_t + R S_x by second-order finite
       differences on the grid spacing
    """
    xs, ts = cfg.axes()
    shape = (cfg.nt, cfg.nx)
    R = np.full(shape, np.nan)
    S = np.full(shape, np.nan)
    det = np.full(shape, np.nan)
    status = np.full(shape, STATUS_OK, dtype=int)
    for i, t in enumerate(ts):
        for j, x in enumerate(xs):
            if j > 0 and status[i, j - 1] == STATUS_OK:
                guess = (R[i, j - 1], S[i, j - 1])
            elif i > 0 and status[i - 1, j] == STATUS_OK:
                guess = (R[i - 1, j], S[i - 1, j])
            else:
                guess = cfg.guess
            try:
                inv = invert_map(x, t, p, guess, tol=cfg.tol, max_iter=cfg.max_iter, delta=cfg.delta)
            except CatastropheError as exc:
                Logger.debug("node ({}, {}): {}".format(x, t, exc))
                status[i, j] = STATUS_CATASTROPHE
                continue
            except NonConvergenceError as exc:
                Logger.debug("node ({}, {}): {}".format(x, t, exc))
                status[i, j] = STATUS_NONCONVERGENCE
                continue
            R[i, j], S[i, j], det[i, j] = inv.R, inv.S, inv.det
    R_t, R_x = _gradient(R, ts, xs)
    S_t, S_x = _gradient(S, ts, xs)
    result = GridResult(xs, ts, R, S, det, R_t + S * R_x, S_t + R * S_x, status, p.name)
    failed = int((status != STATUS_OK).sum())
    if failed:
        Logger.warn("{} of {} grid nodes failed to invert".format(failed, status.size))
    return result
