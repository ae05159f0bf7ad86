"""
Graded vector fields, their brackets, structure tables and the adjoint
action, for the classical symmetry algebra and the symmetry superalgebra.
"""
import re
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import sympy

from . import config
from .errors import CatalogError, ClosureError, ParityError, SeriesTruncationError
from .grassmann import Parity
from .logging import Logger
from .symexpr import SymExpr, is_odd_name, parse, sym


def _parity_sign(p: Parity, q: Parity) -> int:
    return -1 if (p is Parity.ODD and q is Parity.ODD) else 1


class VectorField(object):
    """
    sum over coordinates z of coeffs[z] * d/dz. Coordinates may be base
    coordinates or jet variables (for prolongations).
    """

    __slots__ = ("name", "coeffs", "parity")

    def __init__(self, name: str, coeffs: Mapping[str, object], parity: Parity = Parity.EVEN, check: bool = True):
        self.name = name
        self.parity = parity
        self.coeffs: Dict[str, SymExpr] = {}
        for z, c in coeffs.items():
            c = parse(c) if isinstance(c, str) else (c if isinstance(c, SymExpr) else SymExpr.scalar(c))
            if not c.is_zero_structural():
                self.coeffs[z] = c
        if check:
            self._check_parity()

    def _check_parity(self):
        for z, c in self.coeffs.items():
            odd_target = is_odd_name(z) != (self.parity is Parity.ODD)
            expected = Parity.ODD if odd_target else Parity.EVEN
            if c.parity() is not expected:
                raise ParityError("{}: coefficient of d_{} is {} in a {} field".format(
                    self.name, z, c.parity().value, self.parity.value))

    def coefficient(self, z: str) -> SymExpr:
        return self.coeffs.get(z, SymExpr())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "VectorField") -> "VectorField":
        coeffs = dict(self.coeffs)
        for z, c in other.coeffs.items():
            coeffs[z] = coeffs.get(z, SymExpr()) + c
        return VectorField("{}+{}".format(self.name, other.name), coeffs, self.parity, check=False)

    def scale(self, c, name: Optional[str] = None) -> "VectorField":
        """c * self; an odd c flips the parity"""
        c = c if isinstance(c, SymExpr) else SymExpr.scalar(c)
        parity = self.parity
        if c.parity() is Parity.ODD:
            parity = Parity.EVEN if parity is Parity.ODD else Parity.ODD
        return VectorField(name or "({})*{}".format(c, self.name),
                           {z: c * v for z, v in self.coeffs.items()}, parity, check=False)

    def __neg__(self):
        return self.scale(-1, "-" + self.name)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        keys = set(self.coeffs) | set(other.coeffs)
        return all(self.coefficient(z) == other.coefficient(z) for z in keys)

    def __hash__(self):
        return hash(tuple(sorted((z, hash(c)) for z, c in self.coeffs.items())))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("({})*d_{}".format(self.coeffs[z], z) for z in sorted(self.coeffs))

    def __repr__(self):
        return "VectorField({}: {})".format(self.name, self)


def apply(v: VectorField, e: SymExpr) -> SymExpr:
    """
    Function:
    act with a graded vector field on an expression, derivatives from the left.
    1. even coordinates: coeff * d(coefficient)/dz
    2. odd coordinates: the atom is replaced in place with sign (-1)^(|v|*position)
    """
    result = SymExpr()
    for key, coef in e.terms.items():
        for z, phi in v.coeffs.items():
            if is_odd_name(z):
                continue
            d = sympy.diff(coef, sym(z))
            if d != 0:
                result = result + phi * SymExpr({key: d})
        for i, atom in enumerate(key):
            phi = v.coeffs.get(atom)
            if phi is None:
                continue
            sign = -1 if (v.parity is Parity.ODD and i % 2 == 1) else 1
            head = SymExpr({key[:i]: coef * sign})
            tail = SymExpr({key[i + 1:]: 1})
            result = result + head * phi * tail
    return result


def bracket(a: VectorField, b: VectorField) -> VectorField:
    """[A,B]^z = A(B^z) - (-1)^{|A||B|} B(A^z)"""
    sign = _parity_sign(a.parity, b.parity)
    coeffs = {}
    for z in set(a.coeffs) | set(b.coeffs):
        coeffs[z] = apply(a, b.coefficient(z)) - apply(b, a.coefficient(z)) * sign
    parity = Parity.EVEN if a.parity is b.parity else Parity.ODD
    return VectorField("[{},{}]".format(a.name, b.name), coeffs, parity, check=False)


def _monomial_equations(expr: sympy.Expr, unknowns: Sequence[sympy.Symbol]) -> List[sympy.Expr]:
    gens = sorted(expr.free_symbols - set(unknowns), key=lambda s: s.name)
    if not gens:
        return [expr]
    return list(sympy.Poly(expr, *gens).coeffs())


def expand_in_basis(v: VectorField, basis: Sequence[VectorField]) -> Optional[Dict[str, sympy.Expr]]:
    """constant coefficients c_i with v = sum c_i basis_i, or None"""
    lam = sympy.symbols("lam0:{}".format(len(basis)))
    equations = []
    coordinates = set(v.coeffs)
    for g in basis:
        coordinates |= set(g.coeffs)
    for z in coordinates:
        diff = v.coefficient(z)
        for l, g in zip(lam, basis):
            diff = diff - g.coefficient(z) * l
        for coef in diff.terms.values():
            equations.extend(_monomial_equations(sympy.expand(coef), lam))
    equations = [e for e in equations if e != 0]
    if not equations:
        return {g.name: sympy.Integer(0) for g in basis}
    solutions = list(sympy.linsolve(equations, lam))
    if not solutions:
        return None
    values = solutions[0]
    return {g.name: sympy.simplify(val.subs({l: 0 for l in lam})) for g, val in zip(basis, values)}


@dataclass
class StructureTable:
    generators: List[str]
    parities: List[Parity]
    entries: List[List[Dict[str, sympy.Expr]]]

    def entry(self, a: str, b: str) -> Dict[str, sympy.Expr]:
        return self.entries[self.generators.index(a)][self.generators.index(b)]

    def entry_text(self, a: str, b: str) -> str:
        return combination_text(self.entry(a, b), self.generators)

    def as_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "entries": [[[str(e.get(g, 0)) for g in self.generators] for e in row] for row in self.entries],
        }

    def bracket_vector(self, u: Sequence, w: Sequence) -> List[sympy.Expr]:
        """bracket of two combinations given by coefficient vectors"""
        out = [sympy.Integer(0)] * len(self.generators)
        for (i, ui), (j, wj) in product(enumerate(u), enumerate(w)):
            if ui == 0 or wj == 0:
                continue
            for k, g in enumerate(self.generators):
                out[k] += ui * wj * self.entries[i][j].get(g, 0)
        return [sympy.expand(c) for c in out]


def combination_text(coeffs: Mapping[str, sympy.Expr], order: Sequence[str]) -> str:
    parts = []
    for g in order:
        c = sympy.sympify(coeffs.get(g, 0))
        if c == 0:
            continue
        if c == 1:
            parts.append(g)
        elif c == -1:
            parts.append("-" + g)
        else:
            parts.append("{}{}".format(sympy.sstr(c), g))
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*([A-Z][A-Za-z0-9]*)")


def parse_combination(text: str) -> Dict[str, sympy.Expr]:
    """'-2W', 'M2', '0' -> {generator: coefficient}"""
    text = text.replace(" ", "")
    if text in ("", "0"):
        return {}
    out: Dict[str, sympy.Expr] = {}
    for sign, num, name in _TERM.findall(text):
        c = sympy.Integer(int(num) if num else 1) * (-1 if sign == "-" else 1)
        out[name] = out.get(name, 0) + c
    return out


def structure_table(gens: Sequence[VectorField]) -> StructureTable:
    """
    Function:
    all pairwise brackets expanded in the span of gens.
    Raises ClosureError naming the first pair that leaves the span.
    Pairs run on [sampling] workers threads.
    """
    names = [g.name for g in gens]

    def entry(pair):
        a, b = pair
        c = bracket(a, b)
        if c.is_zero():
            return {}
        coeffs = expand_in_basis(c, gens)
        if coeffs is None:
            raise ClosureError((a.name, b.name), str(c))
        return {k: v for k, v in coeffs.items() if v != 0}

    flat = config.parallel_map(entry, product(gens, gens))
    n = len(gens)
    entries = [flat[i * n:(i + 1) * n] for i in range(n)]
    Logger.debug("structure table over {} computed".format(", ".join(names)))
    return StructureTable(names, [g.parity for g in gens], entries)


def compare_tables(table: StructureTable, reference: Mapping[str, Mapping[str, str]]) -> List[str]:
    """entry-by-entry differences against a reference given as row -> column -> text"""
    mismatches = []
    for a in table.generators:
        for b in table.generators:
            expected = parse_combination(reference[a][b])
            got = {k: v for k, v in table.entry(a, b).items() if v != 0}
            if {k: sympy.Integer(v) for k, v in expected.items()} != got:
                mismatches.append("[{},{}]: computed {}, reference {}".format(
                    a, b, table.entry_text(a, b), reference[a][b]))
    return mismatches


def graded_antisymmetry(table: StructureTable) -> List[str]:
    failures = []
    for i, a in enumerate(table.generators):
        for j, b in enumerate(table.generators):
            sign = -_parity_sign(table.parities[i], table.parities[j])
            lhs = table.entries[i][j]
            rhs = {k: sign * v for k, v in table.entries[j][i].items()}
            if any(sympy.expand(lhs.get(g, 0) - rhs.get(g, 0)) != 0 for g in table.generators):
                failures.append("[{},{}]".format(a, b))
    return failures


def graded_jacobi(table: StructureTable) -> List[str]:
    """(-1)^{|A||C|}[A,[B,C]] + (-1)^{|B||A|}[B,[C,A]] + (-1)^{|C||B|}[C,[A,B]] = 0"""
    n = len(table.generators)
    unit = lambda i: [1 if k == i else 0 for k in range(n)]
    vec = lambda d: [d.get(g, 0) for g in table.generators]
    failures = []
    for i, j, k in product(range(n), repeat=3):
        p = table.parities
        total = [0] * n
        for (x, y, z) in ((i, j, k), (j, k, i), (k, i, j)):
            inner = vec(table.entries[y][z])
            outer = table.bracket_vector(unit(x), inner)
            sign = _parity_sign(p[x], p[z])
            total = [t + sign * o for t, o in zip(total, outer)]
        if any(sympy.expand(t) != 0 for t in total):
            failures.append("({},{},{})".format(*(table.generators[m] for m in (i, j, k))))
    return failures


def _span_basis(table: StructureTable, vectors: List[List[sympy.Expr]]) -> List[List[sympy.Expr]]:
    if not vectors:
        return []
    m = sympy.Matrix(vectors)
    return [list(r) for r in m.rowspace()]


def derived_series(table: StructureTable, max_steps: int = 16) -> List[int]:
    """dimensions of the derived series until it stalls or reaches 0"""
    n = len(table.generators)
    current = [[1 if k == i else 0 for k in range(n)] for i in range(n)]
    dims = [len(current)]
    for _ in range(max_steps):
        brackets = [table.bracket_vector(u, w) for u in current for w in current]
        current = _span_basis(table, [b for b in brackets if any(c != 0 for c in b)])
        dims.append(len(current))
        if len(current) == 0 or len(current) == dims[-2]:
            break
    return dims


def is_solvable(table: StructureTable) -> bool:
    return derived_series(table)[-1] == 0


def is_ideal(table: StructureTable, subset: Sequence[str]) -> bool:
    idx = [table.generators.index(g) for g in subset]
    for i in range(len(table.generators)):
        for j in idx:
            entry = table.entries[i][j]
            if any(v != 0 and g not in subset for g, v in entry.items()):
                return False
    return True


def adjoint_orbit(y: VectorField, x: VectorField, eps=None, max_order: Optional[int] = None,
                  truncate: bool = False) -> VectorField:
    """
    Function:
    sum_n eps^n/n! ad_Y^n(X), stopping when ad_Y^n(X) vanishes.
    Without truncate, a series still alive at max_order raises SeriesTruncationError.
    """
    eps = sympy.Symbol("eps") if eps is None else sympy.sympify(eps)
    max_order = max_order or config.get_int("liealg", "max_order")
    term, total = x, x
    for n in range(1, max_order + 1):
        term = bracket(y, term)
        if term.is_zero():
            Logger.debug("adjoint series of {} on {} terminated at order {}".format(y.name, x.name, n - 1))
            return VectorField("Ad(exp({}*{})){}".format(eps, y.name, x.name), total.coeffs, total.parity, check=False)
        total = total + term.scale(eps ** n / sympy.factorial(n))
    if truncate:
        Logger.warn("adjoint series of {} on {} truncated at order {}".format(y.name, x.name, max_order))
        return total
    raise SeriesTruncationError("ad_{}^n({}) is nonzero at n={}".format(y.name, x.name, max_order))


# the two algebras

def _field(name, parity=Parity.EVEN, **coeffs):
    return VectorField(name, coeffs, parity)


def classical_generators() -> List[VectorField]:
    """M1, M2, W, J, T1, T0 in table order"""
    return [
        _field("M1", x="x", t="t"),
        _field("M2", x="x", t="-t", R="2*R", S="2*S"),
        _field("W", x="t", R="1", S="1"),
        _field("J", t="x", R="-R**2", S="-S**2"),
        _field("T1", x="1"),
        _field("T0", t="1"),
    ]


def susy_generators() -> List[VectorField]:
    """D1, D2, D3, B, P0, P1, Y1, Y2 in table order"""
    return [
        _field("D1", x="2*x", t="3*t", R="-R", S="-S"),
        _field("D2", x="x", t="t", xi="xi"),
        _field("D3", x="x", t="t", psi="psi"),
        _field("B", x="t", R="1", S="1"),
        _field("P0", t="1"),
        _field("P1", x="1"),
        _field("Y1", Parity.ODD, xi="1"),
        _field("Y2", Parity.ODD, psi="1"),
    ]


def generator_map(algebra: str) -> Dict[str, VectorField]:
    gens = classical_generators() if algebra == "classical" else susy_generators()
    return {g.name: g for g in gens}


REFERENCE_TABLES = {
    "classical": {
        "M1": {"M1": "0", "M2": "0", "W": "0", "J": "0", "T1": "-T1", "T0": "-T0"},
        "M2": {"M1": "0", "M2": "0", "W": "-2W", "J": "2J", "T1": "-T1", "T0": "T0"},
        "W": {"M1": "0", "M2": "2W", "W": "0", "J": "-M2", "T1": "0", "T0": "-T1"},
        "J": {"M1": "0", "M2": "-2J", "W": "M2", "J": "0", "T1": "-T0", "T0": "0"},
        "T1": {"M1": "T1", "M2": "T1", "W": "0", "J": "T0", "T1": "0", "T0": "0"},
        "T0": {"M1": "T0", "M2": "-T0", "W": "T1", "J": "0", "T1": "0", "T0": "0"},
    },
    "susy": {
        "D1": {"D1": "0", "D2": "0", "D3": "0", "B": "B", "P0": "-3P0", "P1": "-2P1", "Y1": "0", "Y2": "0"},
        "D2": {"D1": "0", "D2": "0", "D3": "0", "B": "0", "P0": "-P0", "P1": "-P1", "Y1": "-Y1", "Y2": "0"},
        "D3": {"D1": "0", "D2": "0", "D3": "0", "B": "0", "P0": "-P0", "P1": "-P1", "Y1": "0", "Y2": "-Y2"},
        "B": {"D1": "-B", "D2": "0", "D3": "0", "B": "0", "P0": "-P1", "P1": "0", "Y1": "0", "Y2": "0"},
        "P0": {"D1": "3P0", "D2": "P0", "D3": "P0", "B": "P1", "P0": "0", "P1": "0", "Y1": "0", "Y2": "0"},
        "P1": {"D1": "2P1", "D2": "P1", "D3": "P1", "B": "0", "P0": "0", "P1": "0", "Y1": "0", "Y2": "0"},
        "Y1": {"D1": "0", "D2": "Y1", "D3": "0", "B": "0", "P0": "0", "P1": "0", "Y1": "0", "Y2": "0"},
        "Y2": {"D1": "0", "D2": "0", "D3": "Y2", "B": "0", "P0": "0", "P1": "0", "Y1": "0", "Y2": "0"},
    },
}


@dataclass
class SubalgebraRep:
    label: str
    algebra: str
    combination: List[Tuple[str, str]]
    constraints: str = ""
    splitting: bool = True

    def text(self) -> str:
        parts = []
        for coef, gen in self.combination:
            parts.append(gen if coef == "1" else ("-" + gen if coef == "-1" else "{}*{}".format(coef, gen)))
        return " + ".join(parts).replace("+ -", "- ")

    def vector_field(self) -> VectorField:
        gens = generator_map(self.algebra)
        total = None
        for coef, gen in self.combination:
            term = gens[gen].scale(parse(coef))
            total = term if total is None else total + term
        total.name = self.label
        return total


def catalog_lookup(label: str) -> SubalgebraRep:
    from .catalog.subalgebras import SUBALGEBRAS

    try:
        return SUBALGEBRAS[label]
    except KeyError:
        raise CatalogError("unknown subalgebra label {!r}".format(label))
