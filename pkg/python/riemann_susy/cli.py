"""
riemann_susy command line tools.

Every subcommand runs one verification suite and writes one JSON document
per item, sorted by item id, followed by a summary document. Exit code 0
means no item failed, 1 means at least one failed, 2 is a usage error.
"""
import argparse
import functools
import json
import pathlib
import sys
import time
from typing import Callable, List, Optional

import prettytable as pt
import sympy

from . import __version__, config
from .catalog import emit_catalog
from .catalog.ansatz import ANSATZ
from .catalog.solutions import RELATIONS, SOLUTIONS
from .conserve import CONVENTIONS, divergence_suite, path_independence, solution_callables, staircase_paths
from .errors import CatalogError, ParseError, RiemannSusyError
from .grassmann import Parity
from .hydro import (
    GridSolveConfig,
    ProfilePair,
    catastrophe_locus,
    evaluate_grid,
    invert_map,
    round_trip,
)
from .liealg import (
    REFERENCE_TABLES,
    VectorField,
    adjoint_orbit,
    classical_generators,
    compare_tables,
    derived_series,
    generator_map,
    graded_antisymmetry,
    graded_jacobi,
    is_ideal,
    structure_table,
    susy_generators,
)
from .logging import Logger
from .reduction import (
    check_invariants,
    reduce_with,
    relation_lookup,
    solution_lookup,
    translated,
    verify_euler_double_wave,
    verify_implicit_relation,
    verify_solution,
)
from .superfield import check_decomposition, classical_limit, decompose_system, operator_identities
from .symmetry import check_invariance, classical_system, susy_system, verify_bracket_closure

STATUSES = ("pass", "fail", "erratum", "manual-review", "skipped")


class Report(object):
    """items of one run plus the summary written after them"""

    def __init__(self, suite: str, seed: int, timing: bool = False):
        self.suite = suite
        self.seed = seed
        self.timing = timing
        self.items: List[dict] = []
        self.texts: List[str] = []
        self.elapsed = 0.0

    def run(self, ident: str, fn: Callable[[], dict], control: bool = False,
            erratum: Optional[str] = None) -> dict:
        """
        Function:
        1. a RiemannSusyError raised by fn becomes a fail item
        2. control: a negative control, it passes when the check fails
        3. erratum: a failing check is recorded as erratum with this note
        """
        start = time.perf_counter()
        try:
            item = dict(fn())
        except RiemannSusyError as exc:
            item = {"status": "fail", "witness": str(exc)}
        elapsed = time.perf_counter() - start
        item["id"] = ident
        item.setdefault("witness", None)
        if control:
            item["control"] = True
            if item["status"] == "pass":
                item["status"], item["witness"] = "fail", "negative control passed"
            else:
                item["status"] = "pass"
        if erratum and item["status"] == "fail":
            item["status"] = "erratum"
            item["notes"] = list(item.get("notes") or []) + [erratum]
        if self.timing:
            item["timing"] = round(elapsed, 6)
        self.elapsed += elapsed
        self.items.append(item)
        Logger.debug("{}: {}".format(ident, item["status"]))
        return item

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for item in self.items:
            out[item["status"]] += 1
        return out

    def exit_code(self) -> int:
        return 1 if self.counts()["fail"] else 0

    def summary(self) -> dict:
        counts = self.counts()
        out = {"kind": "summary", "suite": self.suite, "version": __version__, "seed": self.seed,
               "counts": counts, "status": "fail" if counts["fail"] else "pass"}
        if self.timing:
            out["timing"] = round(self.elapsed, 6)
        return out

    def sorted_items(self) -> List[dict]:
        return sorted(self.items, key=lambda item: item["id"])

    def to_json_lines(self) -> str:
        docs = self.sorted_items() + [self.summary()]
        return "".join(json.dumps(d, sort_keys=True, default=str) + "\n" for d in docs)

    def to_pretty(self) -> str:
        table = pt.PrettyTable(["id", "status", "witness"])
        for item in self.sorted_items():
            witness = item.get("witness") or ""
            table.add_row([item["id"], item["status"], witness if len(witness) <= 80 else witness[:77] + "..."])
        table.set_style(pt.DEFAULT)
        table.align = "l"
        counts = ", ".join("{} {}".format(v, k) for k, v in self.counts().items())
        return "\n".join(self.texts + [table.get_string(), "{} (seed {}): {}".format(self.suite, self.seed, counts)]) + "\n"


def write_output(text: str, out: Optional[str] = None):
    """
    Function:
    write to stdout, or to `out`; relative paths are taken from the output
    directory (RIEMANN_SUSY_OUT overrides the configured one)
    """
    if not out:
        sys.stdout.write(text)
        return
    path = pathlib.Path(out)
    if not path.is_absolute():
        path = pathlib.Path(config.output_dir()) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    Logger.info("written {}".format(path))


# tables


@functools.lru_cache(maxsize=None)
def _structure(algebra: str):
    gens = classical_generators() if algebra == "classical" else susy_generators()
    return structure_table(gens)


def _pretty_structure(algebra: str) -> str:
    table = _structure(algebra)
    grid = pt.PrettyTable(["[,]"] + table.generators)
    for a in table.generators:
        grid.add_row([a] + [table.entry_text(a, b) for b in table.generators])
    grid.set_style(pt.DEFAULT)
    return "{} structure table\n{}".format(algebra, grid.get_string())


def _table_item(algebra: str, reference: Optional[str]) -> dict:
    table = _structure(algebra)
    item = {"kind": "table", "algebra": algebra, "status": "pass"}
    item.update(table.as_json())
    if reference == "paper":
        mismatches = compare_tables(table, REFERENCE_TABLES[algebra])
        n = len(table.generators) ** 2
        item["matched"] = "{}/{}".format(n - len(mismatches), n)
        if mismatches:
            item["status"], item["witness"] = "fail", "; ".join(mismatches)
    return item


def _failures_item(kind: str, failures: List[str]) -> dict:
    return {"kind": kind, "status": "fail" if failures else "pass",
            "witness": "; ".join(failures) if failures else None}


def _solvable_item(algebra: str) -> dict:
    dims = derived_series(_structure(algebra))
    solvable = dims[-1] == 0
    expected = algebra == "susy"
    return {"kind": "solvable", "derived_series": dims, "solvable": solvable,
            "status": "pass" if solvable == expected else "fail",
            "witness": None if solvable == expected else "derived series {}".format(dims)}


IDEALS = {"classical": [("T1", "T0")], "susy": [("Y1", "Y2"), ("P0", "P1", "Y1", "Y2")]}


def _adjoint_checks(algebra: str):
    """(generator Y, field X, expected Ad_exp(eps*Y) X)"""
    g = generator_map(algebra)
    eps = sympy.Symbol("eps")
    if algebra == "classical":
        return [
            ("T1", "M1", g["M1"] + g["T1"].scale(eps)),
            ("W", "J", g["J"] - g["M2"].scale(eps) - g["W"].scale(eps ** 2)),
        ]
    return [("B", "D1", g["D1"] - g["B"].scale(eps))]


def _adjoint_item(algebra: str, y: str, x: str, expected: VectorField) -> dict:
    g = generator_map(algebra)
    image = adjoint_orbit(g[y], g[x])
    ok = image == expected
    return {"kind": "adjoint", "image": str(image), "status": "pass" if ok else "fail",
            "witness": None if ok else "expected {}".format(expected)}


def suite_tables(report: Report, args):
    algebras = ["classical", "susy"] if args.algebra == "both" else [args.algebra]
    for algebra in algebras:
        report.run("table:{}".format(algebra), lambda a=algebra: _table_item(a, args.reference))
        report.run("antisymmetry:{}".format(algebra),
                   lambda a=algebra: _failures_item("antisymmetry", graded_antisymmetry(_structure(a))))
        report.run("jacobi:{}".format(algebra),
                   lambda a=algebra: _failures_item("jacobi", graded_jacobi(_structure(a))))
        report.run("solvable:{}".format(algebra), lambda a=algebra: _solvable_item(a))
        for subset in IDEALS[algebra]:
            ok = is_ideal(_structure(algebra), subset)
            report.run("ideal:{}:{}".format(algebra, ",".join(subset)),
                       lambda ok=ok: {"kind": "ideal", "status": "pass" if ok else "fail"})
        for y, x, expected in _adjoint_checks(algebra):
            report.run("adjoint:{}:{}:{}".format(algebra, y, x),
                       lambda a=algebra, y=y, x=x, e=expected: _adjoint_item(a, y, x, e))
        if args.pretty:
            report.texts.append(_pretty_structure(algebra))


# symmetries


def _systems(name: str):
    out = []
    if name in ("classical", "both"):
        out.append((classical_system(), classical_generators()))
    if name in ("susy", "both"):
        out.append((susy_system(), susy_generators()))
    return out


def _closure_item(system, gens) -> dict:
    failed = [r.generator for r in verify_bracket_closure(system, gens) if not r.passed]
    return {"kind": "closure", "status": "fail" if failed else "pass",
            "witness": "brackets that are not symmetries: {}".format(", ".join(failed)) if failed else None}


def suite_symmetries(report: Report, args):
    for system, gens in _systems(args.system):
        for g in gens:
            report.run("symmetry:{}:{}".format(system.name, g.name),
                       lambda g=g, s=system: check_invariance(g, s).as_json())
        report.run("closure:{}".format(system.name), lambda s=system, gs=gens: _closure_item(s, gs))
        d_R = VectorField("d_R", {"R": "1"}, Parity.EVEN)
        report.run("control:{}:d_R".format(system.name),
                   lambda s=system: check_invariance(d_R, s).as_json(), control=True)
        if system.name == "susy":
            j = generator_map("classical")["J"]
            report.run("control:susy:J", lambda s=system: check_invariance(j, s).as_json(), control=True)


# reductions


def _invariants_item(label: str) -> dict:
    results = check_invariants(ANSATZ[label])
    failed = [text for text, ok in results if not ok]
    return {"kind": "invariants", "checked": len(results), "status": "fail" if failed else "pass",
            "witness": "not annihilated: {}".format(", ".join(failed)) if failed else None}


def _superfield_items(report: Report):
    def identities():
        failed = [name for name, ok in operator_identities() if not ok]
        return _failures_item("superfield", failed)

    def decomposition():
        a, b = sympy.symbols("a b")
        return _failures_item("superfield", [] if check_decomposition(a, b) else ["component equations differ"])

    def susy_components():
        failed = ["equation {}".format(n) for n, (c, e) in enumerate(zip(decompose_system(1, 1), susy_system().residuals))
                  if c != e]
        return _failures_item("superfield", failed)

    def classical():
        limit = classical_limit()
        residuals = classical_system().residuals
        failed = [n for n, (c, e) in enumerate(zip(limit[:2], residuals)) if c != e]
        failed += [n for n, c in enumerate(limit[2:], 2) if not c.is_zero_structural()]
        return _failures_item("superfield", ["equation {}".format(n) for n in failed])

    report.run("superfield:identities", identities)
    report.run("superfield:decomposition", decomposition)
    report.run("superfield:susy-system", susy_components)
    report.run("superfield:classical-limit", classical)


def suite_reduce(report: Report, args):
    labels = args.label or [a.label for a in ANSATZ.values() if args.system in ("both", a.system)]
    for label in labels:
        if label not in ANSATZ:
            raise CatalogError("no invariant ansatz for {!r}".format(label))
        report.run("reduce:{}".format(label), lambda label=label: reduce_with(label).as_json())
        report.run("invariants:{}".format(label), lambda label=label: _invariants_item(label))
    if not args.label:
        _superfield_items(report)


# solutions


def suite_solutions(report: Report, args):
    ids = args.id or list(SOLUTIONS)
    for ident in ids:
        report.run("solution:{}".format(ident),
                   lambda ident=ident: verify_solution(solution_lookup(ident), tier=args.tier).as_json())
    if args.id:
        return
    report.run("solution:as4+dx", lambda: verify_solution(translated(solution_lookup("as4"), "1/3")).as_json())
    for ident in RELATIONS:
        report.run("relation:{}".format(ident),
                   lambda ident=ident: verify_implicit_relation(relation_lookup(ident)).as_json())
    report.run("euler", lambda: verify_euler_double_wave().as_json())
    report.run("control:euler-flipped", lambda: verify_euler_double_wave(flip=True).as_json(), control=True)


# conservation laws


def suite_conservation(report: Report, args, erratum: Optional[str] = None):
    for r in divergence_suite(args.kmax, args.convention):
        report.run("conservation:{}:k{:02d}".format(args.convention, r.pair.k), r.as_json, erratum=erratum)


def _params(items: Optional[List[str]]) -> dict:
    out = {}
    for item in items or []:
        name, _, value = item.partition("=")
        try:
            out[name.strip()] = float(value)
        except ValueError:
            raise ParseError("bad parameter {!r}, expected NAME=VALUE".format(item))
    return out


def _point(text: str):
    try:
        x, t = (float(v) for v in text.split(","))
    except ValueError:
        raise ParseError("bad point {!r}, expected X,T".format(text))
    return x, t


def suite_weierstrass(report: Report, args):
    record = solution_lookup(args.solution)
    params = {"C1": 0.0, "C2": 0.0}
    params.update(_params(args.param))
    R_fn, S_fn = solution_callables(record.fields, params)
    if args.path:
        with open(args.path, "r") as f:
            paths = [[tuple(v) for v in p] for p in json.load(f)]
    else:
        paths = staircase_paths(_point(args.start), _point(args.end))
    for k in args.k:
        report.run("weierstrass:{}:chi{}".format(record.id, k),
                   lambda k=k: path_independence(k, R_fn, S_fn, paths, steps=args.steps).as_json())


# general integral


def _floats(text: str, n: int, what: str) -> List[float]:
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        values = []
    if len(values) != n:
        raise ParseError("{} expects {} comma separated numbers, got {!r}".format(what, n, text))
    return values


def _profile_pair(args) -> ProfilePair:
    first = "poly:" + args.coeffs if args.coeffs else args.preset
    return ProfilePair.parse(first, args.second)


def _grid_item(args, pair) -> dict:
    x0, x1, nx, t0, t1, nt = _floats(args.grid, 6, "--grid")
    kwargs = {"tol": args.tol} if args.tol else {}
    cfg = GridSolveConfig((x0, x1), (t0, t1), int(nx), int(nt), tuple(_floats(args.guess, 2, "--guess")), **kwargs)
    result = evaluate_grid(cfg, pair)
    if args.csv:
        write_output(result.to_csv(), args.csv)
    return result.as_json()


def _invert_item(args, pair) -> dict:
    x, t = _point(args.point)
    kwargs = {"tol": args.tol} if args.tol else {}
    inv = invert_map(x, t, pair, tuple(_floats(args.guess, 2, "--guess")), **kwargs)
    item = {"kind": "hydro", "profile": pair.name, "x": x, "t": t, "status": "pass"}
    item.update(inv.as_json())
    return item


def _locus_item(args, pair) -> dict:
    r0, r1, s0, s1 = _floats(args.domain, 4, "--domain")
    item = catastrophe_locus(pair, ((r0, r1), (s0, s1))).as_json()
    item.update({"profile": pair.name, "status": "pass"})
    return item


def _round_trip_item(pair, n: int) -> dict:
    worst = round_trip(pair, n)
    ok = worst <= 1e-10
    return {"kind": "hydro", "profile": pair.name, "points": n, "max_error": worst,
            "status": "pass" if ok else "fail", "witness": None if ok else "max error {:.3e}".format(worst)}


def suite_hydro(report: Report, args):
    pair = _profile_pair(args)
    action = args.action
    # malformed options are usage errors, not failed items
    _point(args.point)
    _floats(args.guess, 2, "--guess")
    _floats(args.grid, 6, "--grid")
    _floats(args.domain, 4, "--domain")
    if action in ("invert", "all"):
        report.run("hydro:invert", lambda: _invert_item(args, pair))
    if action in ("grid", "all"):
        report.run("hydro:grid", lambda: _grid_item(args, pair))
    if action in ("locus", "all"):
        report.run("hydro:locus", lambda: _locus_item(args, pair))
    if action in ("roundtrip", "all"):
        report.run("hydro:roundtrip", lambda: _round_trip_item(pair, args.points))


def suite_all(report: Report, args):
    defaults = build_parser()
    sub = lambda *argv: defaults.parse_args(list(argv))
    suite_tables(report, sub("tables", "--reference", "paper"))
    suite_symmetries(report, sub("symmetries"))
    suite_reduce(report, sub("reduce"))
    suite_solutions(report, sub("solutions"))
    suite_conservation(report, sub("conservation", "--kmax", "10"))
    suite_conservation(report, sub("conservation", "--kmax", "2", "--convention", "paper"),
                       erratum="printed density and flux are not conserved")
    suite_weierstrass(report, sub("weierstrass", "--k", "1", "2", "3"))
    suite_hydro(report, sub("hydro"))


SUITES = {
    "tables": suite_tables,
    "symmetries": suite_symmetries,
    "reduce": suite_reduce,
    "solutions": suite_solutions,
    "conservation": suite_conservation,
    "weierstrass": suite_weierstrass,
    "hydro": suite_hydro,
    "all": suite_all,
}


def build_parser() -> argparse.ArgumentParser:
    """
    Parse the input arguments

    Returns:
        the argument parser with one sub parser per suite
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=config.get_int("sampling", "seed"),
                        help="seed of every sampled point")
    common.add_argument("--out", type=str, default=None, help="write the report to a file instead of stdout")
    common.add_argument("--timing", action="store_true", help="record wall time per item")
    common.add_argument("--pretty", action="store_true", help="print text tables instead of JSON lines")

    arg_parser = argparse.ArgumentParser(
        prog="riemann_susy",
        description="Verification suites for the Riemann invariant system and its supersymmetric extension.",
        formatter_class=argparse.RawTextHelpFormatter,
    )
    arg_parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    subparsers = arg_parser.add_subparsers(dest="command", required=True)

    p = subparsers.add_parser("tables", parents=[common], help="structure tables of both algebras")
    p.add_argument("--algebra", choices=["classical", "susy", "both"], default="both")
    p.add_argument("--reference", choices=["paper", "none"], default="none",
                   help="compare every entry with the embedded reference tables")

    p = subparsers.add_parser("symmetries", parents=[common], help="invariance of the systems under the generators")
    p.add_argument("--system", choices=["classical", "susy", "both"], default="both")

    p = subparsers.add_parser("reduce", parents=[common], help="symmetry reductions and superfield checks")
    p.add_argument("--label", action="append", help="ansatz label, repeatable")
    p.add_argument("--system", choices=["classical", "susy", "both"], default="both")

    p = subparsers.add_parser("solutions", parents=[common], help="invariant solutions")
    p.add_argument("--id", action="append", help="solution id, repeatable")
    p.add_argument("--tier", choices=["symbolic", "numeric"], default=None)

    p = subparsers.add_parser("conservation", parents=[common], help="conservation laws")
    p.add_argument("--kmax", type=int, default=10)
    p.add_argument("--convention", choices=list(CONVENTIONS), default="corrected")

    p = subparsers.add_parser("weierstrass", parents=[common], help="path independence of the immersion")
    p.add_argument("--k", type=int, nargs="+", default=[1])
    p.add_argument("--solution", default="as4")
    p.add_argument("--param", action="append", help="NAME=VALUE for constants of the solution")
    p.add_argument("--path", type=pathlib.Path, help="JSON file with a list of paths, each a list of [x, t]")
    p.add_argument("--start", default="0.5,1.0")
    p.add_argument("--end", default="1.5,2.0")
    p.add_argument("--steps", type=int, default=None)

    p = subparsers.add_parser("hydro", parents=[common], help="general integral solver")
    p.add_argument("action", nargs="?", choices=["invert", "grid", "locus", "roundtrip", "all"], default="all")
    p.add_argument("--preset", default="quadratic", help="quadratic, cubic, quartic, poly:c0,c1,.. or expr:<F(s)>")
    p.add_argument("--second", default=None, help="profile of F2, defaults to the one of F1")
    p.add_argument("--coeffs", default=None, help="polynomial coefficients of F1 in increasing degree")
    p.add_argument("--point", default="2.5,3.0", help="X,T for invert")
    p.add_argument("--guess", default="0.9,2.1", help="initial R,S")
    p.add_argument("--grid", default="2.5,3.0,50,2.8,3.0,50",
                   help="xmin,xmax,nx,tmin,tmax,nt; nodes without a real preimage "
                        "are flagged as failed and keep NaN fields")
    p.add_argument("--domain", default="-2,2,-2,2", help="Rmin,Rmax,Smin,Smax for locus")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--points", type=int, default=1000, help="samples of the round trip")
    p.add_argument("--csv", default=None, help="write grid nodes as CSV")

    subparsers.add_parser("all", parents=[common], help="every suite with default options")

    p = subparsers.add_parser("catalog", parents=[common], help="dump the embedded catalogs")
    p.add_argument("--format", choices=["json", "markdown"], default="json")
    return arg_parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    config.set_option("sampling", "seed", args.seed)
    if args.command == "catalog":
        write_output(emit_catalog(args.format), args.out)
        return 0
    report = Report(args.command, args.seed, args.timing)
    try:
        SUITES[args.command](report, args)
    except (ParseError, CatalogError) as exc:
        Logger.error(str(exc))
        return 2
    write_output(report.to_pretty() if args.pretty else report.to_json_lines(), args.out)
    counts = report.counts()
    Logger.info("{}: {} pass, {} fail, {} erratum".format(args.command, counts["pass"], counts["fail"],
                                                          counts["erratum"]))
    return report.exit_code()
