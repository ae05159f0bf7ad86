"""
Symbolic expressions over jet coordinates with Grassmann-valued coefficients.

A SymExpr maps an ordered tuple of odd atoms (odd generators and odd jet
variables such as xi_x) to an even sympy coefficient. Even jet variables
(R, R_x, F_s, ...) are plain sympy Symbols inside the coefficients.
"""
import contextlib
import contextvars
import functools
import re
from dataclasses import dataclass, field
from enum import Enum, auto
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.parsing.sympy_parser import parse_expr

from . import config
from .errors import (
    NonEvolutionaryError,
    ParityError,
    ParseError,
    RegistryError,
    TierError,
    UnsupportedOperationError,
)
from .grassmann import REGISTRY, GrassmannElement, Parity, sort_with_sign
from .logging import Logger


class CoordKind(Enum):
    INDEPENDENT_EVEN = auto()
    INDEPENDENT_ODD = auto()
    FIELD_EVEN = auto()
    FIELD_ODD = auto()
    CONSTANT_EVEN = auto()
    CONSTANT_ODD = auto()


@dataclass(frozen=True)
class Coordinate:
    name: str
    kind: CoordKind

    @property
    def odd(self) -> bool:
        return self.kind in (CoordKind.INDEPENDENT_ODD, CoordKind.FIELD_ODD, CoordKind.CONSTANT_ODD)


COORDINATES: Dict[str, Coordinate] = {}
# s stands for the symmetry variable sigma
VAR_ORDER = {"x": 0, "t": 1, "s": 2}
_FIELD_RANK: Dict[str, int] = {}


def register_coordinate(name: str, kind: CoordKind) -> Coordinate:
    known = COORDINATES.get(name)
    if known is not None:
        if known.kind is not kind:
            raise RegistryError("{} already registered as {}".format(name, known.kind.name))
        return known
    if kind is CoordKind.CONSTANT_ODD:
        REGISTRY.register(name)
    if kind in (CoordKind.FIELD_EVEN, CoordKind.FIELD_ODD):
        _FIELD_RANK[name] = len(_FIELD_RANK)
    coord = Coordinate(name, kind)
    COORDINATES[name] = coord
    return coord


for _name in ("x", "t", "s"):
    register_coordinate(_name, CoordKind.INDEPENDENT_EVEN)
register_coordinate("theta", CoordKind.INDEPENDENT_ODD)
for _name in ("R", "S", "F", "G", "H", "u", "rho", "r1", "r2"):
    register_coordinate(_name, CoordKind.FIELD_EVEN)
for _name in ("xi", "psi", "Lambda", "Omega"):
    register_coordinate(_name, CoordKind.FIELD_ODD)
for _name in ("C0", "C1", "C2", "A0", "B0", "a", "b", "k", "l", "m", "p", "eps",
              "u0", "p0", "A", "kappa", "t0", "k0", "R0", "S0"):
    register_coordinate(_name, CoordKind.CONSTANT_EVEN)
for _name in REGISTRY.names():
    if _name != "theta":
        register_coordinate(_name, CoordKind.CONSTANT_ODD)

SIGMA = sympy.Symbol("s")
_EXPAND = contextvars.ContextVar("riemann_susy_expand", default=True)


@contextlib.contextmanager
def deferred_expansion():
    """
    SymExpr coefficients built inside the block are kept as constructed
    instead of expanded. Only for expressions that are evaluated numerically.
    """
    token = _EXPAND.set(False)
    try:
        yield
    finally:
        _EXPAND.reset(token)


def sym(name: str) -> sympy.Symbol:
    return sympy.Symbol(name)


def normalize_index(idx: str) -> str:
    return "".join(sorted(idx, key=lambda v: VAR_ORDER[v]))


def jet_name(fld: str, idx: str = "") -> str:
    idx = normalize_index(idx)
    return fld if not idx else "{}_{}".format(fld, idx)


def split_jet(name: str) -> Optional[Tuple[str, str]]:
    """(field, derivative index) for a jet variable name, None otherwise"""
    base, _, idx = name.partition("_")
    coord = COORDINATES.get(base)
    if coord is None or coord.kind not in (CoordKind.FIELD_EVEN, CoordKind.FIELD_ODD):
        return None
    if any(c not in VAR_ORDER for c in idx):
        return None
    return base, normalize_index(idx)


def is_odd_name(name: str) -> bool:
    jet = split_jet(name)
    if jet is not None:
        return COORDINATES[jet[0]].odd
    coord = COORDINATES.get(name)
    return coord is not None and coord.odd


def odd_order(name: str):
    if name in REGISTRY:
        return (0, REGISTRY.get(name).id, 0, ())
    jet = split_jet(name)
    if jet is None:
        raise RegistryError("{!r} is not an odd atom".format(name))
    fld, idx = jet
    return (1, _FIELD_RANK[fld], len(idx), tuple(VAR_ORDER[c] for c in idx))


def canonical_key(atoms: Sequence[str]):
    return sort_with_sign(atoms, key=odd_order)


class SymExpr(object):
    """
    Immutable canonical sum of terms. terms: odd-atom key -> expanded sympy
    coefficient; zero coefficients are dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Tuple[str, ...], sympy.Expr]] = None, canonical: bool = False):
        clean: Dict[Tuple[str, ...], sympy.Expr] = {}
        for key, coef in (terms or {}).items():
            if canonical:
                sign, ckey = 1, tuple(key)
            else:
                sign, ckey = canonical_key(key)
                if sign == 0:
                    continue
            total = clean.get(ckey, sympy.Integer(0)) + sign * sympy.sympify(coef)
            clean[ckey] = total
        self.terms = {}
        expand = _EXPAND.get()
        for key, coef in clean.items():
            if expand:
                coef = sympy.expand(coef)
            if coef != 0:
                self.terms[key] = coef

    # construction
    @classmethod
    def scalar(cls, value) -> "SymExpr":
        return cls({(): sympy.sympify(value)})

    @classmethod
    def atom(cls, name: str) -> "SymExpr":
        if is_odd_name(name):
            return cls({(name,): sympy.Integer(1)})
        if name not in COORDINATES and split_jet(name) is None:
            raise RegistryError("unknown coordinate {!r}".format(name))
        return cls({(): sym(name)})

    @classmethod
    def jet(cls, fld: str, idx: str = "") -> "SymExpr":
        return cls.atom(jet_name(fld, idx))

    @classmethod
    def from_grassmann(cls, g: GrassmannElement) -> "SymExpr":
        terms = {}
        for key, coef in g.terms.items():
            names = tuple(REGISTRY.by_id(i).name for i in key)
            terms[names] = sympy.nsimplify(coef) if isinstance(coef, float) else sympy.Rational(coef.numerator, coef.denominator)
        return cls(terms)

    @classmethod
    def zero(cls) -> "SymExpr":
        return cls()

    # queries
    def is_zero_structural(self) -> bool:
        return not self.terms

    def keys(self):
        return sorted(self.terms, key=lambda k: (len(k), [odd_order(a) for a in k]))

    def coefficient(self, key: Tuple[str, ...] = ()) -> sympy.Expr:
        return self.terms.get(tuple(key), sympy.Integer(0))

    def body(self) -> sympy.Expr:
        return self.coefficient(())

    def parity(self) -> Parity:
        if not self.terms:
            return Parity.EVEN
        parities = {len(k) % 2 for k in self.terms}
        if len(parities) == 2:
            return Parity.MIXED
        return Parity.ODD if parities.pop() else Parity.EVEN

    def even_symbols(self) -> set:
        out = set()
        for coef in self.terms.values():
            out |= coef.free_symbols
        return out

    def odd_atoms(self) -> set:
        return {a for key in self.terms for a in key}

    def atom_names(self) -> set:
        return {s.name for s in self.even_symbols()} | self.odd_atoms()

    def is_rational(self) -> bool:
        return all(is_rational_class(c) for c in self.terms.values())

    # arithmetic
    def __add__(self, other):
        other = _lift(other)
        terms = dict(self.terms)
        for key, coef in other.terms.items():
            terms[key] = terms.get(key, 0) + coef
        return SymExpr(terms, canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return SymExpr({k: -v for k, v in self.terms.items()}, canonical=True)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        terms: Dict[Tuple[str, ...], sympy.Expr] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                if set(ka) & set(kb):
                    continue
                sign, key = canonical_key(ka + kb)
                if sign == 0:
                    continue
                terms[key] = terms.get(key, 0) + sign * ca * cb
        return SymExpr(terms, canonical=True)

    def __rmul__(self, other):
        return _lift(other) * self

    def __truediv__(self, other):
        return self * SymExpr.scalar(1 / sympy.sympify(other))

    def __eq__(self, other):
        other = _lift(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((k, str(v)) for k, v in self.terms.items())))

    def map_coefficients(self, fn) -> "SymExpr":
        return SymExpr({k: fn(v) for k, v in self.terms.items()}, canonical=True)

    def xreplace(self, mapping) -> "SymExpr":
        return self.map_coefficients(lambda c: c.xreplace(mapping))

    def diff_coefficients(self, symbol) -> "SymExpr":
        return self.map_coefficients(lambda c: sympy.diff(c, symbol))

    def __repr__(self):
        return "SymExpr({})".format(to_text(self))

    def __str__(self):
        return to_text(self)


def _lift(value) -> SymExpr:
    if isinstance(value, SymExpr):
        return value
    if isinstance(value, GrassmannElement):
        return SymExpr.from_grassmann(value)
    return SymExpr.scalar(value)


def is_rational_class(coef: sympy.Expr) -> bool:
    """no elementary functions and only integer exponents"""
    if coef.atoms(sympy.Function):
        return False
    return all(p.exp.is_Integer for p in coef.atoms(sympy.Pow))


@dataclass(frozen=True)
class JetSpace:
    """
    The dependency structure expressions live in: which independent
    variables each field depends on, and the optional definition of the
    symmetry variable s = sigma(x, t).
    """

    name: str
    deps: Dict[str, Tuple[str, ...]]
    sigma: Optional[sympy.Expr] = None

    def with_fields(self, name: str, deps: Mapping[str, Tuple[str, ...]], sigma=None) -> "JetSpace":
        merged = dict(self.deps)
        merged.update(deps)
        return JetSpace(name, merged, sigma if sigma is not None else self.sigma)

    def sigma_derivative(self, v: str) -> sympy.Expr:
        if self.sigma is None:
            raise UnsupportedOperationError("space {} has no symmetry variable".format(self.name))
        return _sigma_derivative(self.sigma, v)


@functools.lru_cache(maxsize=None)
def _sigma_derivative(sigma: sympy.Expr, v: str) -> sympy.Expr:
    """d sigma / dv, as s times the logarithmic derivative when that is algebraic and shorter"""
    d = sympy.diff(sigma, sym(v))
    if d == 0 or not d.atoms(sympy.Function):
        return d
    ratio = sympy.simplify(d / sigma)
    if ratio.atoms(sympy.Function) or sympy.count_ops(ratio) >= sympy.count_ops(d):
        return d
    return SIGMA * ratio


CLASSICAL_SPACE = JetSpace("classical", {"R": ("x", "t"), "S": ("x", "t")})
SUSY_SPACE = JetSpace("susy", {"R": ("x", "t"), "S": ("x", "t"), "xi": ("x", "t"), "psi": ("x", "t")})
CONSTANT_SPACE = JetSpace("constants", {})


def _jet_increment(name: str, v: str, space: JetSpace) -> Optional[Tuple[sympy.Expr, str]]:
    """
    d/dv of one jet atom as (factor, new atom name); None when it vanishes
    """
    fld, idx = split_jet(name)
    deps = space.deps.get(fld, ())
    if v in deps:
        return sympy.Integer(1), jet_name(fld, idx + v)
    if "s" in deps and v in ("x", "t") and space.sigma is not None:
        factor = space.sigma_derivative(v)
        if factor == 0:
            return None
        return factor, jet_name(fld, idx + "s")
    return None


def _coefficient_derivative(coef: sympy.Expr, v: str, space: JetSpace) -> sympy.Expr:
    result = sympy.diff(coef, sym(v))
    for symbol in coef.free_symbols:
        name = symbol.name
        if name == "s" and v in ("x", "t") and space.sigma is not None:
            result += sympy.diff(coef, symbol) * space.sigma_derivative(v)
            continue
        if split_jet(name) is None:
            continue
        inc = _jet_increment(name, v, space)
        if inc is not None:
            result += sympy.diff(coef, symbol) * inc[0] * sym(inc[1])
    return result


def total_derivative(e: SymExpr, v: str, space: JetSpace = SUSY_SPACE) -> SymExpr:
    """
    Function:
    total derivative with respect to an independent even variable.
    1. coefficients follow the chain rule over even jets (and s through sigma)
    2. odd atoms are replaced in place; canonical reordering folds the sign
    """
    if v == "theta":
        raise UnsupportedOperationError("theta derivatives belong to the superfield module")
    if v not in VAR_ORDER:
        raise UnsupportedOperationError("{!r} is not an independent even variable".format(v))
    terms: Dict[Tuple[str, ...], sympy.Expr] = {}

    def add(key, coef):
        sign, ckey = canonical_key(key)
        if sign:
            terms[ckey] = terms.get(ckey, 0) + sign * coef

    for key, coef in e.terms.items():
        add(key, _coefficient_derivative(coef, v, space))
        for i, atom in enumerate(key):
            if split_jet(atom) is None:
                continue
            inc = _jet_increment(atom, v, space)
            if inc is None:
                continue
            add(key[:i] + (inc[1],) + key[i + 1:], coef * inc[0])
    return SymExpr(terms)


def derive(e: SymExpr, idx: str, space: JetSpace) -> SymExpr:
    for v in idx:
        e = total_derivative(e, v, space)
    return e


def _check_value_parity(name: str, value: SymExpr):
    if value.is_zero_structural():
        return
    expected = Parity.ODD if is_odd_name(name) else Parity.EVEN
    if value.parity() is not expected:
        raise ParityError("{} is {} but was assigned a {} value {}".format(
            name, expected.value, value.parity().value, to_text(value)))


def _taylor_substitute(coef: sympy.Expr, body: Dict, nil: Dict[sympy.Symbol, SymExpr]) -> SymExpr:
    """coef(body + nil) for even nilpotent shifts, expanded until it terminates"""
    acc = SymExpr.scalar(coef)
    total = acc.xreplace(body)
    for order in range(1, 64):
        step = SymExpr()
        for symbol, shift in nil.items():
            step = step + shift * acc.diff_coefficients(symbol)
        step = step / order
        if step.is_zero_structural():
            return total
        total = total + step.xreplace(body)
        acc = step
    raise UnsupportedOperationError("nilpotent substitution did not terminate")


def substitute(e: SymExpr, mapping: Mapping[str, object], space: JetSpace = SUSY_SPACE) -> SymExpr:
    """
    Function:
    simultaneous substitution.
    1. keys are field names, jet names or constant names
    2. a mapped field also replaces its jets by total derivatives of the value in `space`
    3. even values with nilpotent parts are expanded by Taylor's formula
    """
    mapping = {name: _lift(value) for name, value in mapping.items()}
    for name in mapping:
        if name not in COORDINATES and split_jet(name) is None:
            raise RegistryError("substitution target {!r} is not in the registry".format(name))
        _check_value_parity(name, mapping[name])

    cache: Dict[str, Optional[SymExpr]] = {}

    def value_of(name: str) -> Optional[SymExpr]:
        if name in cache:
            return cache[name]
        value = mapping.get(name)
        if value is None:
            jet = split_jet(name)
            if jet is not None and jet[1] and jet[0] in mapping:
                value = derive(mapping[jet[0]], jet[1], space)
        cache[name] = value
        return value

    result = SymExpr()
    for key, coef in e.terms.items():
        body, nil = {}, {}
        for symbol in coef.free_symbols:
            value = value_of(symbol.name)
            if value is None:
                continue
            body[symbol] = value.body()
            rest = value - SymExpr.scalar(value.body())
            if not rest.is_zero_structural():
                nil[symbol] = rest
        if nil:
            head = _taylor_substitute(coef, body, nil)
        else:
            head = SymExpr.scalar(coef.xreplace(body))
        for atom in key:
            value = value_of(atom)
            head = head * (value if value is not None else SymExpr({(atom,): 1}, canonical=True))
        result = result + head
    return result


def _reducible(name: str, solved: Mapping[str, SymExpr]) -> Optional[Tuple[str, str]]:
    jet = split_jet(name)
    if jet is None:
        return None
    fld, idx = jet
    for lead in solved:
        lfld, lidx = split_jet(lead)
        if lfld != fld:
            continue
        rest = list(idx)
        try:
            for c in lidx:
                rest.remove(c)
        except ValueError:
            continue
        return lead, "".join(rest)
    return None


def on_shell_reduce(e: SymExpr, system, depth: Optional[int] = None) -> SymExpr:
    """
    Function:
    replace solved leading derivatives and their prolongations until none remain.
    `system` provides `solved` (jet name -> SymExpr) and `space`.
    """
    solved = getattr(system, "solved", None)
    if not solved:
        raise NonEvolutionaryError("system {} has no solved form".format(getattr(system, "name", system)))
    depth = depth or config.get_int("reduction", "rewrite_depth")
    for _ in range(depth):
        rules = {}
        for name in e.atom_names():
            hit = _reducible(name, solved)
            if hit is not None:
                lead, extra = hit
                rules[name] = derive(solved[lead], extra, system.space)
        if not rules:
            return e
        e = substitute(e, rules, system.space)
    if any(_reducible(n, solved) for n in e.atom_names()):
        Logger.warn("on-shell reduction stopped after {} rounds".format(depth))
    return e


# zero testing


@dataclass
class ZeroReport:
    ok: bool
    mode: str
    witness: Optional[str] = None
    cleared_factor: Optional[str] = None
    max_residual: float = 0.0

    def __bool__(self):
        return self.ok


@dataclass
class SamplingDomain:
    """
    ranges: name -> (low, high); choices: name -> allowed values;
    positive: expressions that must be > 0 at every sampled point
    """

    ranges: Dict[str, Tuple[float, float]] = field(default_factory=dict)
    choices: Dict[str, Tuple[float, ...]] = field(default_factory=dict)
    positive: List[sympy.Expr] = field(default_factory=list)
    fixed: Dict[str, float] = field(default_factory=dict)


def _draw(symbols, domain: SamplingDomain, rng, low, high):
    values = {}
    for s in symbols:
        if s.name in domain.fixed:
            values[s] = domain.fixed[s.name]
        elif s.name in domain.choices:
            values[s] = float(rng.choice(domain.choices[s.name]))
        else:
            lo, hi = domain.ranges.get(s.name, (low, high))
            values[s] = float(rng.uniform(lo, hi))
    return values


def _finite(values) -> bool:
    arr = np.asarray(values, dtype=complex)
    return bool(np.all(np.isfinite(arr)) and np.all(np.abs(arr.imag) <= 1e-12 * (1 + np.abs(arr.real))))


def is_zero(e: SymExpr, mode: str = "symbolic", points: Optional[int] = None, tol: Optional[float] = None,
            seed: Optional[int] = None, domain: Optional[SamplingDomain] = None) -> ZeroReport:
    """
    Function:
    two-tier zero test, evaluated per Grassmann basis component.
    1. symbolic: numerator of the combined fraction expands to 0 (rational class only)
    2. numeric: |residual| <= tol * (1 + max |term|) over sampled points
    """
    if mode == "symbolic":
        factors = []
        for key in e.keys():
            coef = e.terms[key]
            if not is_rational_class(coef):
                raise TierError("coefficient of [{}] is outside the rational class".format("*".join(key)))
            num, den = sympy.fraction(sympy.together(coef))
            if sympy.expand(num) != 0:
                return ZeroReport(False, mode, witness="[{}]: {}".format("*".join(key), sympy.sstr(sympy.factor(num))))
            factors.append(sympy.sstr(den))
        return ZeroReport(True, mode, cleared_factor=", ".join(factors) or None)
    if mode != "numeric":
        raise UnsupportedOperationError("unknown zero-test mode {!r}".format(mode))
    return _numeric_zero(e, points, tol, seed, domain or SamplingDomain())


def _numeric_zero(e, points, tol, seed, domain) -> ZeroReport:
    points = points or config.get_int("sampling", "points")
    tol = tol if tol is not None else config.get_float("sampling", "tolerance")
    seed = config.get_int("sampling", "seed") if seed is None else seed
    low, high = config.get_float("sampling", "low"), config.get_float("sampling", "high")
    max_attempts = config.get_int("sampling", "max_attempts")
    rng = np.random.default_rng(seed)

    symbols = set()
    for coef in e.terms.values():
        symbols |= coef.free_symbols
    for expr in domain.positive:
        symbols |= expr.free_symbols
    symbols = sorted(symbols, key=lambda s: s.name)
    components = [(key, sympy.Add.make_args(e.terms[key])) for key in e.keys()]
    funcs = [(key, sympy.lambdify(symbols, list(parts), modules="numpy")) for key, parts in components]
    guards = [sympy.lambdify(symbols, g, modules="numpy") for g in domain.positive]

    accepted, attempts, worst = 0, 0, 0.0
    with np.errstate(all="ignore"):
        while accepted < points:
            attempts += 1
            if attempts > max_attempts:
                return ZeroReport(False, "numeric", witness="no admissible sample point after {} attempts".format(max_attempts))
            values = _draw(symbols, domain, rng, low, high)
            args = [values[s] for s in symbols]
            if any(not (np.isfinite(g(*args)) and g(*args) > 0) for g in guards):
                continue
            evaluated = [(key, np.asarray(fn(*args), dtype=complex).ravel()) for key, fn in funcs]
            if not all(_finite(vals) for _, vals in evaluated):
                continue
            accepted += 1
            for key, vals in evaluated:
                total = abs(vals.sum())
                scale = float(np.max(np.abs(vals))) if vals.size else 0.0
                worst = max(worst, total / (1.0 + scale))
                if total > tol * (1.0 + scale):
                    point = ", ".join("{}={:.6g}".format(s.name, values[s]) for s in symbols)
                    return ZeroReport(False, "numeric", witness="[{}] = {:.3e} at {}".format("*".join(key), total, point),
                                      max_residual=worst)
    return ZeroReport(True, "numeric", max_residual=worst)


def zero_test(e: SymExpr, **kwargs) -> ZeroReport:
    """symbolic when the expression is in the rational class, numeric otherwise"""
    if e.is_rational():
        return is_zero(e, "symbolic")
    return is_zero(e, "numeric", **kwargs)


# text format

_FUNCTIONS = {
    "exp": sympy.exp,
    "log": sympy.log,
    "ln": sympy.log,
    "sqrt": sympy.sqrt,
    "tan": sympy.tan,
    "atan": sympy.atan,
    "arctan": sympy.atan,
    "sin": sympy.sin,
    "cos": sympy.cos,
    "sec": sympy.sec,
    "Rational": sympy.Rational,
}
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _local_dict(text: str) -> dict:
    local = dict(_FUNCTIONS)
    for name in set(_IDENT.findall(text)):
        if name in _FUNCTIONS:
            continue
        if name not in COORDINATES and split_jet(name) is None:
            raise ParseError("unknown symbol {!r} in {!r}".format(name, text))
        local[name] = sympy.Symbol(name, commutative=False) if is_odd_name(name) else sympy.Symbol(name)
    return local


def from_sympy(expr) -> SymExpr:
    """convert a sympy expression whose odd atoms are noncommutative symbols"""
    expr = sympy.expand(sympy.sympify(expr))
    terms: Dict[Tuple[str, ...], sympy.Expr] = {}
    for term in sympy.Add.make_args(expr):
        c_part, nc_part = term.args_cnc()
        atoms: List[str] = []
        dead = False
        for factor in nc_part:
            if isinstance(factor, sympy.Pow):
                if factor.exp.is_Integer and factor.exp >= 2:
                    dead = True
                    break
                raise ParseError("odd atom under a non-integer power: {}".format(factor))
            if not isinstance(factor, sympy.Symbol):
                raise ParseError("odd atoms may only appear as products: {}".format(factor))
            atoms.append(factor.name)
        if dead:
            continue
        sign, key = canonical_key(atoms)
        if sign == 0:
            continue
        coef = sympy.Mul(*c_part)
        terms[key] = terms.get(key, 0) + sign * coef
    return SymExpr(terms, canonical=True)


def parse(text: str) -> SymExpr:
    try:
        expr = parse_expr(text, local_dict=_local_dict(text))
    except ParseError:
        raise
    except Exception as exc:
        raise ParseError("cannot parse {!r}: {}".format(text, exc))
    return from_sympy(expr)


def to_text(e: SymExpr) -> str:
    if not e.terms:
        return "0"
    parts = []
    for key in e.keys():
        coef = e.terms[key]
        if not key:
            parts.append(sympy.sstr(coef))
            continue
        atoms = "*".join(key)
        if coef == 1:
            parts.append(atoms)
        elif coef == -1:
            parts.append("-" + atoms)
        else:
            parts.append("({})*{}".format(sympy.sstr(coef), atoms))
    return " + ".join(parts)


def P(text: str) -> SymExpr:
    """shorthand used by the catalogs"""
    return parse(text)
