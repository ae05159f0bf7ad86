"""
Exact arithmetic in the Grassmann algebra over a finite ordered set of odd
generators. Monomials are strictly increasing tuples of generator ids; the
empty tuple is the body (pure scalar) part.
"""
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, Optional, Sequence, Tuple, Union

from .errors import KindMismatchError, ParityError, RegistryError
from .logging import Logger

Scalar = Union[Fraction, float]
Monomial = Tuple[int, ...]


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


class ScalarKind(Enum):
    EXACT = "exact"
    FLOAT = "float"


def sort_with_sign(seq: Sequence, key: Optional[Callable] = None):
    """
    Function:
    bubble the odd factors of seq into canonical order.
    Returns (sign, sorted tuple); sign is 0 when a factor repeats.
    """
    key = key or (lambda item: item)
    items = list(seq)
    sign = 1
    n = len(items)
    for i in range(n):
        for j in range(n - 1 - i):
            kj, kn = key(items[j]), key(items[j + 1])
            if kj == kn:
                return 0, ()
            if kj > kn:
                items[j], items[j + 1] = items[j + 1], items[j]
                sign = -sign
    for i in range(n - 1):
        if key(items[i]) == key(items[i + 1]):
            return 0, ()
    return sign, tuple(items)


@dataclass(frozen=True)
class GrassmannGenerator:
    id: int
    name: str


class GeneratorRegistry(object):
    """
    Append-only registry; registration order is the canonical sign reference.
    """

    def __init__(self, names: Iterable[str] = ()) -> None:
        self._lock = threading.Lock()
        self._by_name: Dict[str, GrassmannGenerator] = {}
        self._by_id: Dict[int, GrassmannGenerator] = {}
        for name in names:
            self.register(name)

    def register(self, name: str) -> GrassmannGenerator:
        with self._lock:
            if name in self._by_name:
                return self._by_name[name]
            gen = GrassmannGenerator(len(self._by_id), name)
            self._by_name[name] = gen
            self._by_id[gen.id] = gen
            Logger.debug("registered odd generator {} -> {}".format(name, gen.id))
            return gen

    def get(self, name: str) -> GrassmannGenerator:
        try:
            return self._by_name[name]
        except KeyError:
            raise RegistryError("unknown odd generator {!r}".format(name))

    def by_id(self, gid: int) -> GrassmannGenerator:
        return self._by_id[gid]

    def __contains__(self, name) -> bool:
        return name in self._by_name

    def names(self):
        return [self._by_id[i].name for i in range(len(self._by_id))]


REGISTRY = GeneratorRegistry(
    ["theta", "eta", "eta1", "eta2", "K", "K0", "K1", "L", "L0", "D1", "D2", "D3", "D4"]
)


def _coerce(value, kind: ScalarKind) -> Scalar:
    if kind is ScalarKind.EXACT:
        if isinstance(value, float):
            raise KindMismatchError("float scalar {} in an exact element".format(value))
        return Fraction(value)
    return float(value)


class GrassmannElement(object):
    """
    Immutable element of the exterior algebra. terms maps a strictly
    increasing tuple of generator ids to a nonzero coefficient.
    """

    __slots__ = ("terms", "kind")

    def __init__(self, terms: Optional[Dict[Monomial, Scalar]] = None, kind: ScalarKind = ScalarKind.EXACT):
        clean = {}
        for key, coef in (terms or {}).items():
            sign, canon = sort_with_sign(key)
            if sign == 0:
                continue
            coef = _coerce(coef, kind) * sign
            total = clean.get(canon, 0) + coef
            if total == 0:
                clean.pop(canon, None)
            else:
                clean[canon] = total
        self.terms = clean
        self.kind = kind

    @classmethod
    def scalar(cls, value, kind: ScalarKind = ScalarKind.EXACT) -> "GrassmannElement":
        return cls({(): value}, kind)

    @classmethod
    def generator(cls, name: str, coef=1, kind: ScalarKind = ScalarKind.EXACT) -> "GrassmannElement":
        gen = REGISTRY.register(name)
        return cls({(gen.id,): coef}, kind)

    def is_zero(self) -> bool:
        return not self.terms

    def body(self) -> Scalar:
        return self.terms.get((), _coerce(0, self.kind))

    def __add__(self, other):
        return gadd(self, _lift(other, self.kind))

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement({k: -v for k, v in self.terms.items()}, self.kind)

    def __sub__(self, other):
        return gadd(self, -_lift(other, self.kind))

    def __mul__(self, other):
        return gmul(self, _lift(other, self.kind))

    def __rmul__(self, other):
        return gmul(_lift(other, self.kind), self)

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            other = _lift(other, self.kind)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        return "GrassmannElement({})".format(str(self))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms, key=lambda k: (len(k), k)):
            names = "*".join(REGISTRY.by_id(i).name for i in key)
            coef = self.terms[key]
            if not key:
                parts.append(str(coef))
            elif coef == 1:
                parts.append(names)
            elif coef == -1:
                parts.append("-" + names)
            else:
                parts.append("{}*{}".format(coef, names))
        return " + ".join(parts).replace("+ -", "- ")


def _lift(value, kind: ScalarKind) -> GrassmannElement:
    if isinstance(value, GrassmannElement):
        return value
    return GrassmannElement.scalar(value, kind)


def _check_kind(a: GrassmannElement, b: GrassmannElement):
    if a.kind is not b.kind:
        raise KindMismatchError("cannot combine {} and {} scalars".format(a.kind.value, b.kind.value))


def gadd(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _check_kind(a, b)
    terms = dict(a.terms)
    for key, coef in b.terms.items():
        terms[key] = terms.get(key, 0) + coef
    return GrassmannElement(terms, a.kind)


def merge_monomials(left: Monomial, right: Monomial) -> Tuple[int, Monomial]:
    """sign and canonical key of the product of two canonical monomials"""
    if set(left) & set(right):
        return 0, ()
    return sort_with_sign(left + right)


def gmul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    _check_kind(a, b)
    terms: Dict[Monomial, Scalar] = {}
    for (ka, ca), (kb, cb) in product(a.terms.items(), b.terms.items()):
        sign, key = merge_monomials(ka, kb)
        if sign == 0:
            continue
        terms[key] = terms.get(key, 0) + sign * ca * cb
    return GrassmannElement(terms, a.kind)


def parity(a: GrassmannElement) -> Parity:
    if not a.terms:
        return Parity.EVEN
    parities = {len(key) % 2 for key in a.terms}
    if len(parities) == 2:
        return Parity.MIXED
    return Parity.ODD if parities.pop() else Parity.EVEN


def gsubstitute(a: GrassmannElement, assignment: Dict[str, GrassmannElement]) -> GrassmannElement:
    """
    Function:
    simultaneous substitution of odd generators by odd elements.
    1. every assigned value must be homogeneous odd
    2. each monomial is rebuilt factor by factor in its stored order
    """
    by_id = {}
    for name, value in assignment.items():
        value = _lift(value, a.kind)
        if parity(value) is not Parity.ODD and not value.is_zero():
            raise ParityError("value {} assigned to odd generator {} is not odd".format(value, name))
        _check_kind(a, value)
        by_id[REGISTRY.get(name).id] = value

    result = GrassmannElement({}, a.kind)
    for key, coef in a.terms.items():
        acc = GrassmannElement.scalar(coef, a.kind)
        for gid in key:
            factor = by_id.get(gid)
            if factor is None:
                factor = GrassmannElement({(gid,): 1}, a.kind)
            acc = gmul(acc, factor)
        result = gadd(result, acc)
    return result
