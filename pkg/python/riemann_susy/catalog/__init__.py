"""
Embedded catalogs: subalgebra representatives, invariant ansatz tables and
solution records, with JSON-lines and markdown emission.
"""
import json
from typing import Dict, List

import prettytable as pt

from ..errors import CatalogError
from ..liealg import SubalgebraRep
from ..reduction import ImplicitRelation, ReductionAnsatz, SolutionRecord
from .ansatz import ANSATZ
from .solutions import RELATIONS, SOLUTIONS
from .subalgebras import SUBALGEBRAS


def _subalgebra_json(rep: SubalgebraRep) -> dict:
    return {
        "kind": "subalgebra",
        "label": rep.label,
        "algebra": rep.algebra,
        "generator": rep.text(),
        "combination": [list(c) for c in rep.combination],
        "constraints": rep.constraints,
        "splitting": rep.splitting,
    }


def catalog_documents() -> List[dict]:
    docs = [_subalgebra_json(rep) for rep in SUBALGEBRAS.values()]
    docs += [dict(kind="ansatz", **a.as_json()) for a in ANSATZ.values()]
    docs += [dict(kind="solution", **r.as_json()) for r in SOLUTIONS.values()]
    docs += [dict(kind="relation", **r.as_json()) for r in RELATIONS.values()]
    return docs


def _markdown(title, fields, rows) -> str:
    table = pt.PrettyTable(fields)
    for row in rows:
        table.add_row(row)
    table.set_style(pt.MARKDOWN)
    table.align = "l"
    return "### {}\n\n{}\n".format(title, table.get_string())


def emit_catalog(fmt: str = "json") -> str:
    """
    Function:
    dump every catalog.
    json: one document per line; markdown: one table per catalog
    """
    if fmt == "json":
        return "\n".join(json.dumps(d, sort_keys=True) for d in catalog_documents()) + "\n"
    if fmt != "markdown":
        raise CatalogError("unknown catalog format {!r}".format(fmt))
    parts = []
    for algebra in ("classical", "susy"):
        rows = [[r.label, r.text(), r.constraints or "-", "yes" if r.splitting else "no"]
                for r in SUBALGEBRAS.values() if r.algebra == algebra]
        parts.append(_markdown("{} subalgebras".format(algebra), ["label", "generator", "constraints", "splitting"], rows))
    for system in ("classical", "susy"):
        rows = []
        for a in ANSATZ.values():
            if a.system != system:
                continue
            change = ", ".join("{} = {}".format(k, v) for k, v in a.fields.items())
            rows.append([a.label, a.sigma, change, "; ".join(a.expected), "; ".join(a.notes) or "-"])
        parts.append(_markdown("{} reductions".format(system), ["label", "sigma", "change of variables",
                                                               "reduced equations", "notes"], rows))
    rows = [[r.id, r.subalgebra, ", ".join("{} = {}".format(k, v) for k, v in r.fields.items()),
             r.tier or ("modulo-ODE" if r.ode else "auto"), "; ".join(r.notes) or "-"] for r in SOLUTIONS.values()]
    parts.append(_markdown("solutions", ["id", "subalgebra", "fields", "tier", "notes"], rows))
    rows = [[r.id, r.solution, "s = {}".format(r.value), r.integrand or "-", "; ".join(r.notes) or "-"]
            for r in RELATIONS.values()]
    parts.append(_markdown("implicit relations", ["id", "solution", "relation", "integrand of J", "notes"], rows))
    return "\n".join(parts)


def _tuples(mapping: Dict[str, list]) -> Dict[str, tuple]:
    return {k: tuple(v) for k, v in mapping.items()}


def load_catalog(text: str) -> Dict[str, list]:
    """parse JSON-lines produced by emit_catalog back into catalog objects"""
    out = {"subalgebra": [], "ansatz": [], "solution": [], "relation": []}
    for n, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        try:
            doc = json.loads(line)
        except ValueError as exc:
            raise CatalogError("line {}: {}".format(n + 1, exc))
        kind = doc.pop("kind", None)
        if kind == "subalgebra":
            doc.pop("generator", None)
            doc["combination"] = [tuple(c) for c in doc["combination"]]
            out[kind].append(SubalgebraRep(**doc))
        elif kind == "ansatz":
            doc["functions"] = _tuples(doc["functions"])
            out[kind].append(ReductionAnsatz(**doc))
        elif kind == "solution":
            doc["functions"] = _tuples(doc["functions"])
            doc["definitions"] = [tuple(d) for d in doc["definitions"]]
            out[kind].append(SolutionRecord(**doc))
        elif kind == "relation":
            out[kind].append(ImplicitRelation(**doc))
        else:
            raise CatalogError("line {}: unknown document kind {!r}".format(n + 1, kind))
    return out


def dump_loaded(catalog: Dict[str, list]) -> str:
    docs = [_subalgebra_json(r) for r in catalog["subalgebra"]]
    docs += [dict(kind="ansatz", **a.as_json()) for a in catalog["ansatz"]]
    docs += [dict(kind="solution", **r.as_json()) for r in catalog["solution"]]
    docs += [dict(kind="relation", **r.as_json()) for r in catalog["relation"]]
    return "\n".join(json.dumps(d, sort_keys=True) for d in docs) + "\n"
