import pytest
import sympy

from riemann_susy import config
from riemann_susy.catalog.subalgebras import SUBALGEBRAS
from riemann_susy.errors import CatalogError, ParityError, SeriesTruncationError
from riemann_susy.grassmann import Parity
from riemann_susy.liealg import (
    REFERENCE_TABLES,
    VectorField,
    adjoint_orbit,
    apply,
    bracket,
    catalog_lookup,
    classical_generators,
    compare_tables,
    derived_series,
    expand_in_basis,
    generator_map,
    graded_antisymmetry,
    graded_jacobi,
    is_ideal,
    is_solvable,
    parse_combination,
    structure_table,
    susy_generators,
)
from riemann_susy.symexpr import P

eps = sympy.Symbol("eps")


@pytest.fixture(scope="module")
def classical():
    return structure_table(classical_generators())


@pytest.fixture(scope="module")
def susy():
    return structure_table(susy_generators())


def test_classical_table_matches_reference(classical):
    assert compare_tables(classical, REFERENCE_TABLES["classical"]) == []


def test_threaded_table_keeps_the_order(susy, monkeypatch):
    monkeypatch.setitem(config.config["sampling"], "workers", "4")
    table = structure_table(susy_generators())
    assert table.generators == susy.generators
    assert table.entries == susy.entries


def test_parallel_map_raises_the_first_failure(monkeypatch):
    monkeypatch.setitem(config.config["sampling"], "workers", "3")

    def check(n):
        if n % 2:
            raise CatalogError(str(n))
        return n

    assert config.parallel_map(lambda n: n * n, range(6)) == [0, 1, 4, 9, 16, 25]
    with pytest.raises(CatalogError, match="^1$"):
        config.parallel_map(check, range(6))


def test_susy_table_matches_reference(susy):
    assert compare_tables(susy, REFERENCE_TABLES["susy"]) == []


def test_single_entries(classical, susy):
    assert classical.entry_text("W", "J") == "-M2"
    assert classical.entry_text("M2", "W") == "-2W"
    assert susy.entry_text("B", "P0") == "-P1"
    assert susy.entry_text("D2", "Y1") == "-Y1"


def test_graded_identities(classical, susy):
    for table in (classical, susy):
        assert graded_antisymmetry(table) == []
        assert graded_jacobi(table) == []


def test_solvability(classical, susy):
    assert derived_series(classical) == [6, 5, 5]
    assert not is_solvable(classical)
    assert derived_series(susy) == [8, 5, 1, 0]
    assert is_solvable(susy)


def test_ideals(classical, susy):
    assert is_ideal(classical, ["T1", "T0"])
    assert not is_ideal(classical, ["W"])
    assert is_ideal(susy, ["Y1", "Y2"])
    assert is_ideal(susy, ["P0", "P1", "Y1", "Y2"])


def test_apply_and_bracket():
    g = generator_map("classical")
    assert apply(g["M1"], P("x*t")) == P("2*x*t")
    assert bracket(g["M1"], g["T1"]) == -g["T1"]
    assert expand_in_basis(bracket(g["W"], g["J"]), classical_generators())["M2"] == -1


def test_odd_generators():
    g = generator_map("susy")
    assert g["Y1"].parity is Parity.ODD
    assert bracket(g["Y1"], g["Y1"]).is_zero()
    assert bracket(g["D2"], g["Y1"]) == -g["Y1"]
    assert apply(g["Y1"], P("xi*psi")) == P("psi")
    assert apply(g["Y2"], P("xi*psi")) == P("-xi")


def test_parity_is_checked():
    with pytest.raises(ParityError):
        VectorField("bad", {"xi": "R"}, Parity.EVEN)


def test_adjoint_orbits():
    c = generator_map("classical")
    assert adjoint_orbit(c["T1"], c["M1"]) == c["M1"] + c["T1"].scale(eps)
    assert adjoint_orbit(c["W"], c["J"]) == c["J"] - c["M2"].scale(eps) - c["W"].scale(eps ** 2)
    s = generator_map("susy")
    assert adjoint_orbit(s["B"], s["D1"]) == s["D1"] - s["B"].scale(eps)


def test_adjoint_series_truncation():
    c = generator_map("classical")
    with pytest.raises(SeriesTruncationError):
        adjoint_orbit(c["M1"], c["T1"], max_order=4)
    truncated = adjoint_orbit(c["M1"], c["T1"], max_order=2, truncate=True)
    assert truncated == c["T1"].scale(1 - eps + eps ** 2 / 2)


def test_parse_combination():
    assert parse_combination("-2W") == {"W": -2}
    assert parse_combination("M2 - 3P0") == {"M2": 1, "P0": -3}
    assert parse_combination("0") == {}


def test_subalgebra_catalog():
    assert sum(r.algebra == "classical" for r in SUBALGEBRAS.values()) == 13
    assert sum(r.algebra == "susy" for r in SUBALGEBRAS.values()) == 28
    c = generator_map("classical")
    assert catalog_lookup("L9").vector_field() == c["W"] + c["M1"].scale(eps)
    assert catalog_lookup("L5").text() == "W - J"
    assert catalog_lookup("SL18").vector_field().parity is Parity.EVEN
    with pytest.raises(CatalogError):
        catalog_lookup("L99")
