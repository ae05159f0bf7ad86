"""
Symmetry reduction: apply an invariant change of variables, compare the
result with the printed reduced system, and verify closed-form or
ODE-constrained solutions against the original equations.
"""
import contextlib
import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
import sympy
from scipy.integrate import quad

from . import config
from .errors import CatalogError, ParityError, ParseError, TierError
from .liealg import VectorField, apply, catalog_lookup
from .logging import Logger
from .symexpr import (
    SIGMA,
    JetSpace,
    SamplingDomain,
    SymExpr,
    deferred_expansion,
    is_zero,
    on_shell_reduce,
    parse,
    split_jet,
    substitute,
    to_text,
)
from .symmetry import PDESystem, classical_system, euler_system, susy_system

_LABEL = re.compile(r"^(?P<base>[A-Z]+\d+)\*?(?:\((?P<param>\w+)=(?P<value>[^)]+)\))?$")


def system_for(name: str) -> PDESystem:
    if name == "classical":
        return classical_system()
    if name == "susy":
        return susy_system()
    if name == "euler":
        return euler_system()
    raise CatalogError("unknown system {!r}".format(name))


def sampling_domain(spec: Optional[Mapping]) -> SamplingDomain:
    """build a SamplingDomain from the plain-dict form used in catalogs"""
    spec = spec or {}
    return SamplingDomain(
        ranges={k: tuple(v) for k, v in spec.get("ranges", {}).items()},
        choices={k: tuple(v) for k, v in spec.get("choices", {}).items()},
        positive=[parse(p).body() for p in spec.get("positive", [])],
        fixed=dict(spec.get("fixed", {})),
    )


def zero_under(e: SymExpr, domain: SamplingDomain, tier: Optional[str] = None):
    """
    Function:
    zero test that honours discrete parameter choices.
    1. symbolic: every combination of `choices` is substituted and tested exactly
    2. numeric: sampling over the domain
    3. None: symbolic when every substituted form is in the rational class
    """
    names = sorted(domain.choices)
    combos = [dict(zip(names, vals)) for vals in itertools.product(*(domain.choices[n] for n in names))] or [{}]
    variants = []
    for combo in combos:
        rep = {sympy.Symbol(n): sympy.nsimplify(v) for n, v in combo.items()}
        variants.append(e.xreplace(rep) if rep else e)
    if tier is None:
        tier = "symbolic" if all(v.is_rational() for v in variants) else "numeric"
    if tier == "symbolic":
        report = None
        for v in variants:
            report = is_zero(v, "symbolic")
            if not report.ok:
                return report
        return report
    return is_zero(e, "numeric", domain=domain)


# ansatz application and matching


@dataclass
class ReductionAnsatz:
    """
    label: subalgebra label, optionally with a starred variant or a fixed
    parameter such as SL7(a=-1/2)
    fields: original field -> expression in x, t and the reduced functions
    functions: reduced function -> the variables it depends on
    expected: printed reduced equations, s standing for sigma
    """

    label: str
    system: str
    sigma: str
    fields: Dict[str, str]
    functions: Dict[str, Tuple[str, ...]]
    expected: List[str]
    invariants: List[str] = field(default_factory=list)
    domain: Dict = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def subalgebra(self) -> str:
        m = _LABEL.match(self.label)
        return m.group("base") if m else self.label

    @property
    def parameters(self) -> Dict[str, str]:
        m = _LABEL.match(self.label)
        if m is None or m.group("param") is None:
            return {}
        return {m.group("param"): m.group("value")}

    def sigma_expr(self) -> sympy.Expr:
        return parse(self.sigma).body()

    def space(self) -> JetSpace:
        base = system_for(self.system).space
        return base.with_fields(self.label, self.functions, sigma=self.sigma_expr())

    def sampling(self) -> SamplingDomain:
        domain = sampling_domain(self.domain)
        for name, value in self.parameters.items():
            domain.fixed[name] = float(sympy.Rational(value))
        return domain

    def as_json(self) -> dict:
        return {
            "label": self.label,
            "system": self.system,
            "sigma": self.sigma,
            "fields": dict(self.fields),
            "functions": {k: list(v) for k, v in self.functions.items()},
            "expected": list(self.expected),
            "invariants": list(self.invariants),
            "domain": self.domain,
            "notes": list(self.notes),
        }


@dataclass
class AnsatzResult:
    """
    residuals: in the symmetry variable where the prefactor could be cleared,
    otherwise still in x and t
    prefactors: the cleared monomial per residual, None when nothing was cleared
    """

    label: str
    residuals: List[SymExpr]
    space: JetSpace
    sigma: sympy.Expr
    prefactors: List[Optional[str]] = field(default_factory=list)


_X, _T = sympy.Symbol("x"), sympy.Symbol("t")
_SCALE = 1.25


def _parameter_values(ansatz: ReductionAnsatz) -> Dict[sympy.Symbol, sympy.Expr]:
    return {sympy.Symbol(k): sympy.Rational(v) for k, v in ansatz.parameters.items()}


def _reference_point(sigma: sympy.Expr, domain: SamplingDomain) -> Dict[sympy.Symbol, float]:
    point = {_X: 1.3, _T: 0.7}
    for s in sigma.free_symbols - {_X, _T}:
        if s.name in domain.fixed:
            point[s] = domain.fixed[s.name]
        elif s.name in domain.choices:
            point[s] = float(domain.choices[s.name][0])
        elif s.name in domain.ranges:
            lo, hi = domain.ranges[s.name]
            point[s] = (lo + hi) / 2.0
        else:
            point[s] = 1.1
    return point


def _sigma_inverses(sigma: sympy.Expr, domain: SamplingDomain) -> List[Tuple[sympy.Symbol, sympy.Expr]]:
    """x or t solved from s = sigma(x, t), on the branch through a reference point"""
    point = _reference_point(sigma, domain)
    try:
        s_value = sigma.evalf(subs=point)
    except (TypeError, ValueError):
        return []
    out = []
    for var in (_X, _T):
        if var not in sigma.free_symbols:
            continue
        if sum(1 for f in sigma.atoms(sympy.Function) if f.has(var)) > 1:
            continue
        try:
            roots = sympy.solve(sympy.Eq(sigma, SIGMA), var)
        except (NotImplementedError, ValueError, TypeError):
            continue
        subs = {k: v for k, v in point.items() if k != var}
        subs[SIGMA] = s_value
        for root in roots:
            try:
                value = complex(root.evalf(subs=subs))
            except (TypeError, ValueError):
                continue
            if abs(value - point[var]) < 1e-9 * (1 + abs(point[var])):
                out.append((var, root))
                break
    return out


def _power_of(factor: sympy.Expr, w: sympy.Symbol) -> Optional[sympy.Expr]:
    b, e = factor.as_base_exp()
    while b.is_Pow:
        b, inner = b.as_base_exp()
        e = e * inner
    return e if b == w else None


def _same_exponent(a: sympy.Expr, b: sympy.Expr) -> bool:
    d = a - b
    return d == 0 or sympy.simplify(d) == 0


def _split_monomial(coef: sympy.Expr, w: sympy.Symbol) -> Optional[Tuple[sympy.Expr, sympy.Expr]]:
    """coef = w**n * rest with rest free of w"""
    rest, n = [], None
    for term in sympy.Add.make_args(coef):
        exponent, parts = sympy.Integer(0), []
        for factor in sympy.Mul.make_args(term):
            e = _power_of(factor, w)
            if e is not None:
                exponent += e
            elif factor.has(w):
                return None
            else:
                parts.append(factor)
        if n is None:
            n = exponent
        elif not _same_exponent(exponent, n):
            return None
        rest.append(sympy.Mul(*parts))
    return sympy.Add(*rest), (n if n is not None else sympy.Integer(0))


def _to_sigma(value: SymExpr, var: sympy.Symbol, root: sympy.Expr) -> Optional[Tuple[SymExpr, sympy.Expr]]:
    w = _T if var == _X else _X
    pieces, n = {}, None
    for key in value.keys():
        coef = value.coefficient(key).xreplace({var: root})
        coef = sympy.expand(sympy.powdenest(coef, force=True), force=True)
        split = _split_monomial(coef, w)
        if split is None:
            return None
        rest, exponent = split
        if rest == 0:
            continue
        if n is None:
            n = exponent
        elif not _same_exponent(exponent, n):
            return None
        pieces[key] = rest
    return SymExpr(pieces, canonical=True), w ** (n if n is not None else 0)


def apply_ansatz(ansatz: ReductionAnsatz) -> AnsatzResult:
    """
    Function:
    substitute the change of variables into every residual of the system.
    1. x or t is eliminated through s = sigma(x, t)
    2. the power of the remaining variable common to every term is cleared and recorded
    3. a residual without such a monomial prefactor is kept in x, t with prefactor None
    """
    system = system_for(ansatz.system)
    space = ansatz.space()
    mapping = {name: parse(text) for name, text in ansatz.fields.items()}
    params = {k: parse(v) for k, v in ansatz.parameters.items()}
    sigma = ansatz.sigma_expr().xreplace(_parameter_values(ansatz))
    inverses = _sigma_inverses(sigma, ansatz.sampling())
    residuals, prefactors = [], []
    for r in system.residuals:
        value = substitute(r, mapping, space)
        if params:
            value = substitute(value, params, space)
        rewritten = None
        for var, root in inverses:
            rewritten = _to_sigma(value, var, root)
            if rewritten is not None:
                break
        if rewritten is None:
            residuals.append(value)
            prefactors.append(None)
        else:
            residuals.append(rewritten[0])
            prefactors.append(sympy.sstr(rewritten[1]))
    if not inverses:
        Logger.debug("{}: sigma = {} has no usable inverse".format(ansatz.label, sigma))
    return AnsatzResult(ansatz.label, residuals, space, sigma, prefactors)


@dataclass
class MatchReport:
    label: str
    status: str
    prefactors: List[Optional[str]] = field(default_factory=list)
    witness: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def matched(self) -> bool:
        return self.status == "pass"

    def as_json(self) -> dict:
        return {
            "kind": "reduction",
            "label": self.label,
            "status": self.status,
            "prefactors": self.prefactors,
            "witness": self.witness,
            "notes": self.notes,
        }


def _jet_symbols(exprs: Sequence[sympy.Expr]):
    base, order0, higher = set(), set(), set()
    for e in exprs:
        for s in e.free_symbols:
            jet = split_jet(s.name)
            if jet is None:
                base.add(s)
            elif jet[1]:
                higher.add(s)
            else:
                order0.add(s)
    key = lambda s: s.name
    return sorted(base, key=key), sorted(order0, key=key), sorted(higher, key=key)


def _symbolic_ratio(c: sympy.Expr, e: sympy.Expr) -> Optional[sympy.Expr]:
    ratio = c / e
    if sympy.count_ops(ratio) > 150:
        return None
    try:
        return sympy.simplify(ratio)
    except Exception:
        return None


class _Mismatch(Exception):
    pass


def _close(a: float, b: float, rtol: float) -> bool:
    if np.isnan(a) or np.isnan(b):
        return True
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1e-300)


def _describe(values: Mapping[sympy.Symbol, float], symbols) -> str:
    return ", ".join("{}={:.4g}".format(s.name, values[s]) for s in symbols)


def _proportional(computed: SymExpr, expected: SymExpr, domain: SamplingDomain, rng, points: int,
                  rtol: float) -> Tuple[str, Optional[str]]:
    """
    Function:
    classify computed / expected over sampled points.
    1. fail: one side vanishes alone, or the ratio moves with the derivative jets
       or differs between Grassmann components
    2. manual-review: the ratio depends on the undifferentiated reduced
       functions or is not a monomial in x and t
    3. pass: the ratio is a nonzero monomial in x and t
    Returns:
        (status, reason)
    """
    keys = sorted(set(computed.keys()) | set(expected.keys()))
    if not keys:
        return "pass", None
    pairs = [(computed.coefficient(k), expected.coefficient(k)) for k in keys]
    base, order0, higher = _jet_symbols([c for c, _ in pairs] + [e for _, e in pairs] + list(domain.positive))
    symbols = base + order0 + higher
    funcs = [(sympy.lambdify(symbols, c, modules="numpy"), sympy.lambdify(symbols, e, modules="numpy"))
             for c, e in pairs]
    guards = [sympy.lambdify(symbols, g, modules="numpy") for g in domain.positive]
    low, high = config.get_float("sampling", "low"), config.get_float("sampling", "high")
    max_attempts = config.get_int("sampling", "max_attempts")
    coords = [s for s in base if s in (_X, _T)]

    def draw(values, names):
        for s in names:
            if s.name in domain.fixed:
                values[s] = domain.fixed[s.name]
            elif s.name in domain.choices:
                values[s] = float(rng.choice(domain.choices[s.name]))
            else:
                lo, hi = domain.ranges.get(s.name, (low, high))
                values[s] = float(rng.uniform(lo, hi))

    def redraw(values, names, lo, hi):
        moved = dict(values)
        for s in names:
            moved[s] = float(rng.uniform(lo, hi))
        return moved

    def scaled(values, s):
        moved = dict(values)
        moved[s] = moved[s] * _SCALE
        return moved

    def ratio_at(values) -> Optional[float]:
        args = [values[s] for s in symbols]
        for g in guards:
            v = g(*args)
            if not (np.isfinite(v) and v > 0):
                return None
        found = []
        for n, (fc, fe) in enumerate(funcs):
            cv, ev = complex(fc(*args)), complex(fe(*args))
            if not (np.isfinite(cv) and np.isfinite(ev)) or abs(cv.imag) + abs(ev.imag) > 1e-9:
                return None
            small_c, small_e = abs(cv) < 1e-12, abs(ev) < 1e-12
            if small_c and small_e:
                continue
            if small_c or small_e:
                raise _Mismatch("[{}] vanishes on one side only at {}".format("*".join(keys[n]),
                                                                              _describe(values, symbols)))
            found.append(cv.real / ev.real)
        if not found:
            return float("nan")
        if any(not _close(r, found[0], rtol) for r in found):
            raise _Mismatch("the ratio differs between components at {}".format(_describe(values, base + order0)))
        return found[0]

    accepted, attempts, review = 0, 0, None
    with np.errstate(all="ignore"):
        try:
            while accepted < points:
                attempts += 1
                if attempts > max_attempts:
                    return "fail", "no admissible sample point"
                values = {}
                draw(values, base)
                values = redraw(redraw(values, order0, low, high), higher, -high, high)
                r0 = ratio_at(values)
                r1 = ratio_at(redraw(values, higher, -high, high))
                if r0 is None or r1 is None:
                    continue
                if not _close(r1, r0, rtol):
                    return "fail", "ratio is not constant in the derivative jets at {}".format(
                        _describe(values, base + order0))
                if review is None and order0:
                    r2 = ratio_at(redraw(redraw(values, order0, low, high), higher, -high, high))
                    if r2 is None:
                        continue
                    if not _close(r2, r0, rtol):
                        review = "the ratio depends on {} at {}".format(
                            ", ".join(s.name for s in order0), _describe(values, base))
                if review is None and coords:
                    other = dict(values)
                    draw(other, coords)
                    rs = [ratio_at(v) for v in [scaled(values, s) for s in coords] + [other]
                          + [scaled(other, s) for s in coords]]
                    if any(r is None for r in rs):
                        continue
                    here, there = rs[:len(coords)], rs[len(coords) + 1:]
                    ro = rs[len(coords)]
                    if any(not _close(a / r0, b / ro, rtol) for a, b in zip(here, there)):
                        review = "the ratio is not a monomial in x and t at {}".format(_describe(values, base))
                accepted += 1
        except _Mismatch as exc:
            return "fail", str(exc)
    return ("manual-review", review) if review else ("pass", None)


def _recorded_factor(computed: SymExpr, expected: SymExpr, cleared: Optional[str]) -> Optional[str]:
    ratio = sympy.Integer(1)
    for k in sorted(set(computed.keys()) | set(expected.keys())):
        c, e = computed.coefficient(k), expected.coefficient(k)
        if c != 0 and e != 0:
            ratio = _symbolic_ratio(c, e)
            break
    if ratio is None:
        return "numeric"
    if cleared is not None:
        ratio = sympy.powsimp(sympy.sympify(cleared) * ratio)
    return sympy.sstr(ratio)


def match_reduced(result: AnsatzResult, ansatz: ReductionAnsatz, points: Optional[int] = None,
                  seed: Optional[int] = None) -> MatchReport:
    """
    Function:
    decide whether each computed residual is the printed reduced equation
    times a nonzero monomial in x and t. Both sides are compared in x, t with
    s replaced by sigma. A nonvanishing multiplier of any other shape gives
    "manual-review"; a printed entry with a note that fails gives "erratum".
    """
    points = points or min(config.get_int("sampling", "points"), 25)
    seed = config.get_int("sampling", "seed") if seed is None else seed
    rng = np.random.default_rng(seed)
    domain = ansatz.sampling()
    rep = {SIGMA: result.sigma}
    cleared = result.prefactors or [None] * len(result.residuals)
    prefactors, witness, review = [], None, None
    for n, (computed, text) in enumerate(zip(result.residuals, ansatz.expected)):
        expected = parse(text)
        if ansatz.parameters:
            expected = substitute(expected, {k: parse(v) for k, v in ansatz.parameters.items()}, result.space)
        expected, computed = expected.xreplace(rep), computed.xreplace(rep)
        status, why = _proportional(computed, expected, domain, rng, points, 1e-6)
        prefactors.append(_recorded_factor(computed, expected, cleared[n]) if status != "fail" else None)
        if status == "fail" and witness is None:
            witness = "equation {}: {}".format(n, why)
        elif status == "manual-review" and review is None:
            review = "equation {}: {}".format(n, why)
    if witness is not None:
        status = "erratum" if ansatz.notes else "fail"
    elif review is not None:
        status, witness = "manual-review", review
    else:
        status = "pass"
    Logger.debug("{}: {}".format(ansatz.label, status if witness is None else witness))
    return MatchReport(ansatz.label, status, prefactors, witness, list(ansatz.notes))


def reduce_with(label: str) -> MatchReport:
    ansatz = ansatz_lookup(label)
    return match_reduced(apply_ansatz(ansatz), ansatz)


def subalgebra_field(ansatz: ReductionAnsatz) -> VectorField:
    v = catalog_lookup(ansatz.subalgebra).vector_field()
    params = {k: parse(val) for k, val in ansatz.parameters.items()}
    if not params:
        return v
    coeffs = {z: substitute(c, params) for z, c in v.coeffs.items()}
    return VectorField(ansatz.label, coeffs, v.parity, check=False)


def check_invariants(ansatz: ReductionAnsatz) -> List[Tuple[str, bool]]:
    """v(sigma) = 0 and v(I) = 0 for every listed invariant"""
    v = subalgebra_field(ansatz)
    domain = ansatz.sampling()
    out = []
    for text in [ansatz.sigma] + list(ansatz.invariants):
        image = apply(v, parse(text))
        out.append((text, bool(zero_under(image, domain))))
    return out


def ansatz_lookup(label: str) -> ReductionAnsatz:
    from .catalog.ansatz import ANSATZ

    try:
        return ANSATZ[label]
    except KeyError:
        raise CatalogError("no invariant ansatz for {!r}".format(label))


# solution verification


@dataclass
class SolutionRecord:
    """
    fields: original field -> closed form (or form in terms of `functions`)
    ode: solved highest derivative of a reduced function, used as a rewrite rule
    odd_relations: odd constant -> replacement expressing a product constraint
    level: "pde" checks the original system, "reduced" the printed reduced system
    s_value: the symmetry variable as a function of the reduced unknowns, for
    implicit solutions; x is then eliminated through sigma(x, t) = s_value
    """

    id: str
    system: str
    subalgebra: str
    fields: Dict[str, str]
    functions: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    sigma: Optional[str] = None
    ode: Dict[str, str] = field(default_factory=dict)
    odd_relations: Dict[str, str] = field(default_factory=dict)
    definitions: List[Tuple[str, str]] = field(default_factory=list)
    tier: Optional[str] = None
    domain: Dict = field(default_factory=dict)
    equations: Optional[List[int]] = None
    level: str = "pde"
    s_value: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "system": self.system,
            "subalgebra": self.subalgebra,
            "fields": dict(self.fields),
            "functions": {k: list(v) for k, v in self.functions.items()},
            "sigma": self.sigma,
            "ode": dict(self.ode),
            "odd_relations": dict(self.odd_relations),
            "definitions": [list(d) for d in self.definitions],
            "tier": self.tier,
            "domain": self.domain,
            "equations": self.equations,
            "level": self.level,
            "s_value": self.s_value,
            "notes": list(self.notes),
        }


@dataclass
class SolutionReport:
    id: str
    status: str
    tier: str
    witness: Optional[str] = None
    notes: List[str] = field(default_factory=list)
    residuals: List[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "kind": "solution",
            "id": self.id,
            "status": self.status,
            "tier": self.tier,
            "witness": self.witness,
            "notes": self.notes,
        }


@dataclass
class _Rules:
    name: str
    solved: Dict[str, SymExpr]
    space: JetSpace


def _expand_definitions(text: str, record: SolutionRecord, space: JetSpace,
                        constants: Optional[Mapping[sympy.Symbol, sympy.Expr]] = None) -> SymExpr:
    e = parse(text)
    if constants:
        e = e.xreplace(constants)
    else:
        for name, value in record.definitions:
            e = substitute(e, {name: parse(value)}, space)
    if record.odd_relations:
        e = substitute(e, {k: parse(v) for k, v in record.odd_relations.items()}, space)
    return e


def _residuals(record: SolutionRecord, constants: Optional[Mapping[sympy.Symbol, sympy.Expr]] = None,
               domain: Optional[SamplingDomain] = None) -> Tuple[List[SymExpr], JetSpace]:
    if record.level == "reduced":
        ansatz = ansatz_lookup(record.subalgebra)
        space = JetSpace(record.id, dict(ansatz.functions))
        space = space.with_fields(record.id, record.functions)
        originals = [parse(t) for t in ansatz.expected]
    else:
        system = system_for(record.system)
        sigma = parse(record.sigma).body() if record.sigma else None
        space = system.space.with_fields(record.id, record.functions, sigma=sigma)
        originals = list(system.residuals)
    mapping = {name: _expand_definitions(text, record, space, constants) for name, text in record.fields.items()}
    residuals = [substitute(r, mapping, space) for r in originals]
    if record.ode:
        solved = {k: _expand_definitions(v, record, space, constants) for k, v in record.ode.items()}
        residuals = [on_shell_reduce(r, _Rules(record.id, solved, space)) for r in residuals]
    if record.s_value and record.level == "pde":
        residuals = _on_level_set(residuals, record, space.sigma, domain or sampling_domain(record.domain))
    elif record.s_value:
        rep = {SIGMA: parse(record.s_value).body()}
        residuals = [r.xreplace(rep) for r in residuals]
    elif record.sigma:
        rep = {SIGMA: parse(record.sigma).body()}
        residuals = [r.xreplace(rep) for r in residuals]
    if record.equations is not None:
        residuals = [residuals[i] for i in record.equations]
    return residuals, space


def _on_level_set(residuals: List[SymExpr], record: SolutionRecord, sigma: sympy.Expr,
                  domain: SamplingDomain) -> List[SymExpr]:
    """eliminate x through sigma(x, t) = s_value, so that the sampled point lies on the solution"""
    inverses = [(var, root) for var, root in _sigma_inverses(sigma, domain) if var == _X]
    if not inverses:
        raise TierError("{}: sigma = {} cannot be solved for x".format(record.id, sigma))
    root = inverses[0][1]
    value = parse(record.s_value).body()
    return [r.xreplace({_X: root}).xreplace({SIGMA: value}) for r in residuals]


def _definition_values(record: SolutionRecord, domain: SamplingDomain, rng,
                       draws: int) -> List[Dict[sympy.Symbol, sympy.Expr]]:
    """sampled constants with every definition evaluated in floating point"""
    pending = [(sympy.Symbol(name), parse(text).body()) for name, text in record.definitions]
    defined = {name for name, _ in pending}
    free = set()
    for _, e in pending:
        free |= e.free_symbols
    free = sorted(free - defined, key=lambda s: s.name)
    low, high = config.get_float("sampling", "low"), config.get_float("sampling", "high")
    max_attempts = config.get_int("sampling", "max_attempts")
    out, attempts = [], 0
    while len(out) < draws:
        attempts += 1
        if attempts > max_attempts:
            raise TierError("{}: no admissible parameter values".format(record.id))
        values: Dict[sympy.Symbol, float] = {}
        for s in free:
            if s.name in domain.fixed:
                values[s] = domain.fixed[s.name]
            elif s.name in domain.choices:
                values[s] = float(rng.choice(domain.choices[s.name]))
            else:
                lo, hi = domain.ranges.get(s.name, (low, high))
                values[s] = float(rng.uniform(lo, hi))
        todo, ok = list(pending), True
        while todo and ok:
            ready = [(s, e) for s, e in todo if not (e.free_symbols & {n for n, _ in todo})]
            if not ready:
                raise CatalogError("{}: circular definitions".format(record.id))
            for s, e in ready:
                try:
                    v = complex(e.evalf(subs=values))
                except (TypeError, ValueError):
                    ok = False
                    break
                if not np.isfinite(v) or abs(v.imag) > 1e-12 * (1 + abs(v.real)):
                    ok = False
                    break
                values[s] = v.real
                todo.remove((s, e))
        if ok:
            out.append({s: sympy.Float(v) for s, v in values.items()})
    return out


def _pinned(domain: SamplingDomain, values: Mapping[sympy.Symbol, sympy.Expr]) -> SamplingDomain:
    fixed = dict(domain.fixed)
    fixed.update({s.name: float(v) for s, v in values.items()})
    return SamplingDomain(dict(domain.ranges), dict(domain.choices), list(domain.positive), fixed)


def _evaluates_numerically(record: SolutionRecord, tier: Optional[str]) -> bool:
    if tier == "numeric":
        return True
    if tier == "symbolic":
        return False
    texts = list(record.fields.values()) + list(record.ode.values()) + [v for _, v in record.definitions]
    if record.sigma:
        texts.append(record.sigma)
    return not all(parse(text).is_rational() for text in texts)


def verify_solution(record: SolutionRecord, tier: Optional[str] = None) -> SolutionReport:
    """
    Function:
    substitute the record into its system and zero-test every residual.
    1. numeric records with an ode rule or definitions are built without expanding coefficients
    2. numeric records with definitions are checked at sampled parameter values,
       each definition evaluated in floating point
    3. a failing record with an erratum note reports "erratum", otherwise "fail"
    """
    tier = tier or (record.tier if record.tier in ("symbolic", "numeric") else None)
    label = "modulo-ODE" if record.ode else (tier or "auto")
    bad = "erratum" if record.notes else "fail"
    domain = sampling_domain(record.domain)
    numeric = _evaluates_numerically(record, tier)
    defer = numeric and bool(record.ode or record.definitions)
    try:
        with contextlib.ExitStack() as stack:
            if defer:
                stack.enter_context(deferred_expansion())
            if numeric and record.definitions:
                rng = np.random.default_rng(config.get_int("sampling", "seed"))
                draws = config.get_int("reduction", "parameter_draws")
                variants = []
                for values in _definition_values(record, domain, rng, draws):
                    pinned = _pinned(domain, values)
                    variants.append((_residuals(record, values, pinned)[0], pinned))
            else:
                variants = [(_residuals(record, domain=domain)[0], domain)]
    except ParityError as exc:
        Logger.info("{}: {}".format(record.id, exc))
        return SolutionReport(record.id, bad, label, str(exc), list(record.notes))
    except TierError as exc:
        return SolutionReport(record.id, bad, label, str(exc), list(record.notes))
    texts, witness, modes = [to_text(r) for r in variants[0][0]], None, set()
    for residuals, where in variants:
        for n, r in enumerate(residuals):
            try:
                report = zero_under(r, where, "numeric" if defer else tier)
            except TierError as exc:
                return SolutionReport(record.id, "fail", label, str(exc), list(record.notes), texts)
            modes.add(report.mode)
            if not report.ok and witness is None:
                witness = "equation {}: {}".format(n, report.witness)
    if not record.ode:
        label = tier or "+".join(sorted(modes)) or "symbolic"
    status = "pass" if witness is None else bad
    Logger.debug("{} -> {}".format(record.id, status))
    return SolutionReport(record.id, status, label, witness, list(record.notes), texts)


def solution_lookup(ident: str) -> SolutionRecord:
    from .catalog.solutions import SOLUTIONS

    try:
        return SOLUTIONS[ident]
    except KeyError:
        raise CatalogError("unknown solution id {!r}".format(ident))


# implicit relations checked by quadrature


@dataclass
class ImplicitRelation:
    """
    s = value(F, J) with J = int_0^F integrand(f) df, the printed implicit
    form of a record whose ode rule gives F_ss. The relation holds when
    F_s = 1/s'(F) and F_ss = -s''(F)/s'(F)**3 satisfy that rule.
    """

    id: str
    solution: str
    value: str
    integrand: Optional[str] = None
    domain: Dict = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def as_json(self) -> dict:
        return {
            "id": self.id,
            "solution": self.solution,
            "value": self.value,
            "integrand": self.integrand,
            "domain": self.domain,
            "notes": list(self.notes),
        }


_F, _J, _f = sympy.Symbol("F"), sympy.Symbol("J"), sympy.Symbol("f")


def _relation_expr(text: str) -> sympy.Expr:
    try:
        return sympy.sympify(text, locals={"F": _F, "J": _J, "f": _f, "s": SIGMA})
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ParseError("cannot parse {!r}: {}".format(text, exc))


def verify_implicit_relation(relation: ImplicitRelation, points: Optional[int] = None,
                             seed: Optional[int] = None) -> SolutionReport:
    """
    Function:
    sample F and the constants, integrate J with scipy quad and compare
    F_ss from the relation with the record's rewrite rule
    """
    record = solution_lookup(relation.solution)
    lead = [k for k in record.ode if split_jet(k) == ("F", "ss")]
    if not lead:
        raise CatalogError("{} has no rule for F_ss".format(record.id))
    points = points or config.get_int("reduction", "relation_points")
    seed = config.get_int("sampling", "seed") if seed is None else seed
    tol = config.get_float("reduction", "relation_tolerance")
    rng = np.random.default_rng(seed)
    domain = sampling_domain(relation.domain)
    bad = "erratum" if relation.notes else "fail"

    value = _relation_expr(relation.value)
    integrand = _relation_expr(relation.integrand).xreplace({_F: _f}) if relation.integrand else sympy.Integer(0)
    total = lambda e: sympy.diff(e, _F) + sympy.diff(e, _J) * integrand.xreplace({_f: _F})
    ds = total(value)
    d2s = total(ds)
    f_s, f_ss = sympy.Symbol("F_s"), sympy.Symbol("F_ss")
    rule = parse(record.ode[lead[0]]).body()
    constants = sorted((value.free_symbols | integrand.free_symbols | rule.free_symbols)
                       - {_F, _J, _f, f_s, SIGMA}, key=lambda s: s.name)
    args = [_F, _J] + constants
    first, second = sympy.lambdify(args, ds, "numpy"), sympy.lambdify(args, d2s, "numpy")
    at_s = sympy.lambdify(args, value, "numpy")
    at_rule = sympy.lambdify([_F, f_s, SIGMA] + constants, rule, "numpy")
    weight = sympy.lambdify([_f] + constants, integrand, "numpy")

    low, high = config.get_float("sampling", "low"), config.get_float("sampling", "high")
    max_attempts = config.get_int("sampling", "max_attempts")
    accepted, attempts, worst = 0, 0, 0.0
    with np.errstate(all="ignore"):
        while accepted < points:
            attempts += 1
            if attempts > max_attempts:
                return SolutionReport(relation.id, bad, "quadrature", "no admissible sample point", list(relation.notes))
            consts = []
            for c in constants:
                if c.name in domain.fixed:
                    consts.append(domain.fixed[c.name])
                elif c.name in domain.choices:
                    consts.append(float(rng.choice(domain.choices[c.name])))
                else:
                    lo, hi = domain.ranges.get(c.name, (low, high))
                    consts.append(float(rng.uniform(lo, hi)))
            lo, hi = domain.ranges.get("F", (low, high))
            f_value = float(rng.uniform(lo, hi))
            j_value = 0.0
            if relation.integrand:
                j_value, err = quad(lambda f: float(weight(f, *consts)), 0.0, f_value,
                                  epsabs=1e-12, epsrel=1e-10, limit=200)
                if not np.isfinite(j_value) or err > 1e-8 * (1 + abs(j_value)):
                    continue
            s1 = float(first(f_value, j_value, *consts))
            s2 = float(second(f_value, j_value, *consts))
            s0 = float(at_s(f_value, j_value, *consts))
            if not all(np.isfinite([s0, s1, s2])) or abs(s1) < 1e-8:
                continue
            from_relation = -s2 / s1 ** 3
            from_rule = float(at_rule(f_value, 1.0 / s1, s0, *consts))
            if not np.isfinite(from_rule):
                continue
            accepted += 1
            gap = abs(from_relation - from_rule) / (1.0 + abs(from_relation) + abs(from_rule))
            worst = max(worst, gap)
            if gap > tol:
                point = ", ".join(["F={:.6g}".format(f_value)]
                                  + ["{}={:.6g}".format(c.name, v) for c, v in zip(constants, consts)])
                witness = "F_ss = {:.6g} from the relation, {:.6g} from the rule at {}".format(
                    from_relation, from_rule, point)
                return SolutionReport(relation.id, bad, "quadrature", witness, list(relation.notes))
    Logger.debug("{}: worst relative gap {:.3e}".format(relation.id, worst))
    return SolutionReport(relation.id, "pass", "quadrature", None, list(relation.notes))


def relation_lookup(ident: str) -> ImplicitRelation:
    from .catalog.solutions import RELATIONS

    try:
        return RELATIONS[ident]
    except KeyError:
        raise CatalogError("unknown implicit relation {!r}".format(ident))


# Riemann double wave of the isentropic Euler equations


def verify_euler_double_wave(kappa=None, flip: bool = False) -> SolutionReport:
    """
    u = kappa*(r1 - r2) + u0 and rho = A*exp(r1 + r2) satisfy the Euler
    equations on solutions of the Riemann-invariant system with speeds
    u +- kappa. `flip` swaps the two speeds as a negative control.
    """
    system = euler_system()
    sign = -1 if flip else 1
    solved = {
        "r1_t": parse("-(kappa*(r1 - r2 + {}) + u0)*r1_x".format(sign)),
        "r2_t": parse("-(kappa*(r1 - r2 - {}) + u0)*r2_x".format(sign)),
    }
    mapping = {"u": parse("kappa*(r1 - r2) + u0"), "rho": parse("A*exp(r1 + r2)")}
    if kappa is not None:
        const = {"kappa": SymExpr.scalar(sympy.nsimplify(kappa))}
        mapping = {k: substitute(v, const, system.space) for k, v in mapping.items()}
        mapping.update(const)
        solved = {k: substitute(v, const, system.space) for k, v in solved.items()}
    rules = _Rules("riemann", solved, system.space)
    witness, modes = None, set()
    for n, r in enumerate(system.residuals):
        reduced = on_shell_reduce(substitute(r, mapping, system.space), rules)
        reduced = reduced.map_coefficients(sympy.powsimp)
        report = zero_under(reduced, SamplingDomain())
        modes.add(report.mode)
        if not report.ok and witness is None:
            witness = "equation {}: {}".format(n, report.witness)
    ident = "euler" if not flip else "euler-flipped"
    return SolutionReport(ident, "pass" if witness is None else "fail", "+".join(sorted(modes)), witness)


def translated(record: SolutionRecord, dx) -> SolutionRecord:
    """the image of a closed-form record under x -> x + dx"""
    x = sympy.Symbol("x")
    shift = {x: x + sympy.nsimplify(dx)}
    move = lambda text: to_text(parse(text).xreplace(shift))
    fields = {k: move(v) for k, v in record.fields.items()}
    domain = dict(record.domain)
    if "positive" in domain:
        domain["positive"] = [move(p) for p in domain["positive"]]
    return SolutionRecord(
        "{}+dx".format(record.id), record.system, record.subalgebra, fields,
        functions=dict(record.functions), sigma=move(record.sigma) if record.sigma else None,
        ode=dict(record.ode), odd_relations=dict(record.odd_relations),
        definitions=list(record.definitions), tier=record.tier, domain=domain,
        equations=record.equations, level=record.level, s_value=record.s_value, notes=list(record.notes),
    )
