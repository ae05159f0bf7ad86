"""One-dimensional subalgebra representatives of both symmetry algebras."""
from ..liealg import SubalgebraRep

_ETA = [("eta1", "Y1"), ("eta2", "Y2")]


def _rep(label, algebra, combination, constraints="", splitting=True):
    return SubalgebraRep(label, algebra, list(combination), constraints, splitting)


_CLASSICAL = [
    _rep("L1", "classical", [("1", "T1")]),
    _rep("L2", "classical", [("1", "M1")]),
    _rep("L3", "classical", [("1", "M2")]),
    _rep("L4", "classical", [("1", "W")]),
    _rep("L5", "classical", [("1", "W"), ("-1", "J")]),
    _rep("L6", "classical", [("1", "M2"), ("k", "M1")], "k != 0, 1, -1"),
    _rep("L7", "classical", [("1", "M1"), ("1", "M2")]),
    _rep("L8", "classical", [("1", "M2"), ("-1", "M1")]),
    _rep("L9", "classical", [("1", "W"), ("eps", "M1")], "eps = +-1"),
    _rep("L10", "classical", [("1", "W"), ("-1", "J"), ("k", "M1")], "k != 0"),
    _rep("L11", "classical", [("1", "W"), ("eps", "T1")], "eps = +-1", splitting=False),
    _rep("L12", "classical", [("1", "M1"), ("1", "M2"), ("eps", "T0")], "eps = +-1", splitting=False),
    _rep("L13", "classical", [("1", "M2"), ("-1", "M1"), ("eps", "T1")], "eps = +-1", splitting=False),
]

_SUSY = [
    _rep("SL1", "susy", [("1", "P1")]),
    _rep("SL2", "susy", [("1", "P0")]),
    _rep("SL3", "susy", [("1", "B")]),
    _rep("SL4", "susy", [("1", "D1")]),
    _rep("SL5", "susy", [("1", "D2")]),
    _rep("SL6", "susy", [("1", "D3")]),
    _rep("SL7", "susy", [("1", "D2"), ("a", "D1")], "a != 0"),
    _rep("SL8", "susy", [("1", "D3"), ("a", "D1")], "a != 0"),
    _rep("SL9", "susy", [("1", "D3"), ("a", "D2")], "a != 0"),
    _rep("SL10", "susy", [("1", "D3"), ("a", "D2"), ("b", "D1")], "a, b != 0"),
    _rep("SL11", "susy", [("1", "D2"), ("eps", "B")], "eps = +-1"),
    _rep("SL12", "susy", [("1", "D3"), ("eps", "B")], "eps = +-1"),
    _rep("SL13", "susy", [("1", "D3"), ("a", "D2"), ("eps", "B")], "a != 0, eps = +-1"),
    _rep("SL14", "susy", [("1", "B"), ("eps", "P0")], "eps = +-1"),
    _rep("SL15", "susy", [("1", "Y1")]),
    _rep("SL16", "susy", [("1", "Y2")]),
    _rep("SL17", "susy", [("1", "Y1"), ("eps", "Y2")], "eps = +-1"),
    _rep("SL18", "susy", [("1", "P1")] + _ETA, splitting=False),
    _rep("SL19", "susy", [("1", "P0")] + _ETA, splitting=False),
    _rep("SL20", "susy", [("1", "B")] + _ETA, splitting=False),
    _rep("SL21", "susy", [("1", "D1")] + _ETA, splitting=False),
    _rep("SL22", "susy", [("1", "D2"), ("eta2", "Y2")], splitting=False),
    _rep("SL23", "susy", [("1", "D3"), ("eta1", "Y1")], splitting=False),
    _rep("SL24", "susy", [("1", "D2"), ("a", "D1"), ("eta2", "Y2")], "a != 0", splitting=False),
    _rep("SL25", "susy", [("1", "D3"), ("a", "D1"), ("eta1", "Y1")], "a != 0", splitting=False),
    _rep("SL26", "susy", [("1", "D2"), ("eps", "B"), ("eta2", "Y2")], "eps = +-1", splitting=False),
    _rep("SL27", "susy", [("1", "D3"), ("eps", "B"), ("eta1", "Y1")], "eps = +-1", splitting=False),
    _rep("SL28", "susy", [("1", "B"), ("eps", "P0")] + _ETA, "eps = +-1", splitting=False),
]

SUBALGEBRAS = {rep.label: rep for rep in _CLASSICAL + _SUSY}
