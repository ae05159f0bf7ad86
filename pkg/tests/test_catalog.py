import json

import pytest

from riemann_susy.catalog import catalog_documents, dump_loaded, emit_catalog, load_catalog
from riemann_susy.catalog.ansatz import ANSATZ
from riemann_susy.catalog.solutions import RELATIONS, SOLUTIONS
from riemann_susy.errors import CatalogError


def test_json_lines_cover_every_record():
    docs = [json.loads(line) for line in emit_catalog("json").splitlines()]
    kinds = [d["kind"] for d in docs]
    subalgebras = [d for d in docs if d["kind"] == "subalgebra"]
    assert sum(d["algebra"] == "classical" for d in subalgebras) == 13
    assert sum(d["algebra"] == "susy" for d in subalgebras) == 28
    assert kinds.count("ansatz") == len(ANSATZ)
    assert kinds.count("solution") == len(SOLUTIONS)
    assert kinds.count("relation") == len(RELATIONS) == 1
    assert len(docs) == len(catalog_documents())


def test_load_and_dump_are_inverse():
    text = emit_catalog("json")
    loaded = load_catalog(text)
    assert dump_loaded(loaded) == text
    assert {a.label for a in loaded["ansatz"]} == set(ANSATZ)
    assert [r.id for r in loaded["relation"]] == ["as6B"]


def test_markdown_tables():
    text = emit_catalog("markdown")
    assert text.count("### ") == 6
    assert "### implicit relations" in text
    assert "### classical subalgebras" in text
    assert "| L4 " in text


@pytest.mark.parametrize("line", ["{not json", '{"kind": "table"}'])
def test_bad_lines_are_rejected(line):
    with pytest.raises(CatalogError):
        load_catalog(line)


def test_unknown_format():
    with pytest.raises(CatalogError):
        emit_catalog("yaml")


@pytest.mark.parametrize("ident, label", [("as7a", "L7"), ("as7b", "L8")])
def test_duplicated_label_is_noted(ident, label):
    notes = SOLUTIONS[ident].notes
    assert any("duplicated label as7" in n and label in n for n in notes)


def test_printed_readings_are_noted():
    notes = " ".join(SOLUTIONS["solution7A"].notes)
    assert "product K0*t**" in notes
    assert "a not in {0, -1, -1/2, -1/3}" in notes
    assert any("a not in" in n for n in SOLUTIONS["solution8A"].notes)


def test_printed_relation_is_quarantined():
    relation = RELATIONS["as6B"]
    assert relation.solution == "as6"
    assert "C2 = 0" in relation.notes[0]
