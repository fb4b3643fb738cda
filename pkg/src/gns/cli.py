"""Command-line front end.

All semigroup input travels as JSON (inline flag or file); output is JSON,
CSV or bare text on stdout with fully normalized ordering, so identical
invocations produce byte-identical documents.  Exit codes: 0 success, 2 usage
or input error, 3 budget exhausted / finiteness undetermined, 4 failed
self-check of a mathematically guaranteed fact.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import core, enumeration, families, invariants, sweeps
from .enumeration import Budget, CountRow, EnumerationQuery
from .errors import (
    BudgetExceeded,
    GnsError,
    LemmaViolation,
    Undetermined,
    UsageError,
)

_INPUT_ERRORS = (
    "DimensionError", "InvalidPermutation", "InvalidGap", "NotAMonoid", "NotGns",
    "TrivialSemigroup", "NotNumericalSemigroup", "NotMinimalTriple",
    "InvalidFamilyParams", "FamilyDegenerate", "WrongCase", "NotInScope", "UsageError",
)


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2))
    sys.stdout.write("\n")


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"bad JSON for {what}: {e}") from None


def _read_input(args, what: str):
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            return json.load(fh)
    raise UsageError(f"missing input for {what}")


def _budget_from(args) -> Budget | None:
    nodes = getattr(args, "budget_nodes", None)
    if nodes is None and os.environ.get("GNS_BUDGET_NODES"):
        nodes = int(os.environ["GNS_BUDGET_NODES"])
    seconds = getattr(args, "budget_seconds", None)
    if nodes is None and seconds is None:
        return None
    return Budget(max_nodes=nodes, max_seconds=seconds)


def _analysis_document(s: core.Gns) -> dict:
    doc = core.to_document(s)
    doc["report"] = invariants.report_to_document(invariants.report(s))
    return doc


def _semigroup_from_args(args) -> core.Gns:
    if args.input:
        return core.from_document(_read_input(args, "semigroup"))
    if args.gaps is not None:
        if args.dim is None:
            raise UsageError("--gaps requires --dim")
        return core.from_gaps(args.dim, _load_json(args.gaps, "--gaps"))
    raise UsageError("provide --gaps with --dim, or --input FILE")


def cmd_analyze(args) -> int:
    _emit(_analysis_document(_semigroup_from_args(args)))
    return 0


def cmd_construct(args) -> int:
    if args.input:
        s = core.from_document(_read_input(args, "generators"))
    else:
        if args.generators is None or args.dim is None:
            raise UsageError("provide --generators with --dim, or --input FILE")
        bound = _load_json(args.bound, "--bound") if args.bound else None
        s = core.from_generators(args.dim, _load_json(args.generators, "--generators"), bound)
    _emit(_analysis_document(s))
    return 0


def cmd_family(args) -> int:
    doc = _load_json(args.params, "--params") if args.params else _read_input(args, "family params")
    params = families.params_from_document(doc)
    s = families.build_family(params)
    out = {
        "params": families.params_to_document(params),
        "semigroup": core.to_document(s),
        "report": invariants.report_to_document(invariants.report(s)),
    }
    if isinstance(params, families.AxisPairFamily):
        out["verified"] = families.verify_axis_pair_family(params)
    elif isinstance(params, families.AxisTripleFamily):
        out["prediction"] = families.classify_axis_triple(params)
        if out["prediction"] == families.UNIQUE:
            pg = families.predicted_gaps_axis_triple(params)
            out["predicted_gaps"] = sorted([list(p) for p in pg.gaps])
            out["predicted_max_gap"] = list(pg.max_gap)
        out["witnesses"] = _witness_doc(families.witnesses_axis_triple(params, s))
    elif isinstance(params, families.CrossFamily):
        out["prediction"] = families.AT_LEAST_TWO
        out["witnesses"] = _witness_doc(families.witnesses_cross(params, s))
    else:
        out["prediction"] = families.classify_axis_pair_extra(params)
        if out["prediction"] == families.UNIQUE:
            pg = families.predicted_gaps_axis_pair_extra(params)
            out["predicted_gaps"] = sorted([list(p) for p in pg.gaps])
            out["predicted_max_gap"] = list(pg.max_gap)
        out["witnesses"] = _witness_doc(families.witnesses_axis_pair_extra(params, s))
    _emit(out)
    return 0


def _witness_doc(w: families.WitnessSet) -> dict:
    return {
        "family": w.family,
        "branch": w.branch,
        "points": {label: list(p) for label, p in sorted(w.points.items())},
        "meta": dict(sorted(w.meta.items())),
    }


def cmd_enumerate(args) -> int:
    query = EnumerationQuery(
        dim=args.dim,
        genus_min=args.min_genus if args.min_genus is not None else args.max_genus,
        genus_max=args.max_genus,
        edim_filter=args.edim,
        class_filter=args.cls,
        up_to_permutation=args.up_to_permutation,
    )
    out = enumeration.enumerate_by_genus(query, budget=_budget_from(args))
    docs = []
    for s in out:
        doc = core.to_document(s)
        if args.with_reports:
            doc["report"] = invariants.report_to_document(invariants.report(s))
        docs.append(doc)
    _emit({"query": {
        "dim": query.dim, "genus_min": query.genus_min, "genus_max": query.genus_max,
        "edim": query.edim_filter, "class": query.class_filter,
        "up_to_permutation": query.up_to_permutation,
    }, "count": len(docs), "semigroups": docs})
    return 0


def emit_table(rows: list[CountRow], fmt: str) -> str:
    """Render census rows; text is bare comma rows, csv adds the header."""
    if not rows:
        raise UsageError("no rows to emit")
    if fmt == "json":
        return json.dumps(
            [{"genus": r.genus, "AS": r.counts["AS"], "Sym": r.counts["Sym"],
              "PSym": r.counts["PSym"]} for r in rows],
            sort_keys=True, indent=2)
    if fmt in ("csv", "text"):
        lines = ["g,AS,Sym,PSym"] if fmt == "csv" else []
        lines += [f'{r.genus},{r.counts["AS"]},{r.counts["Sym"]},{r.counts["PSym"]}' for r in rows]
        return "\n".join(lines)
    raise UsageError(f"unknown table format {fmt!r}")


def cmd_table1(args) -> int:
    rows = enumeration.count_table(
        args.dim, args.max_genus, args.edim,
        workers=args.threads, budget=_budget_from(args),
    )
    sys.stdout.write(emit_table(rows, args.format))
    sys.stdout.write("\n")
    return 0


def cmd_conjecture(args) -> int:
    scan = enumeration.conjecture_scan(args.dim, args.max_genus, budget=_budget_from(args))
    _emit({
        "dim": args.dim,
        "max_genus": args.max_genus,
        "edim": 2 * args.dim + 2,
        "max_type": scan.max_type,
        "attaining": [core.to_document(s) for s in scan.attaining],
        "counterexamples": [core.to_document(s) for s in scan.counterexamples],
    })
    return 0


def cmd_verify(args) -> int:
    if args.quick:
        outcomes = sweeps.run_all(
            triple_max=10, triple_height_max=2, cross_max=7, extra_pair_max=8,
            extra_height_max=2, pair_family_odd_max=9, herzog_max=12,
            frobenius_max=15, enum_genus_2=5, enum_genus_3=3,
        )
    else:
        outcomes = sweeps.run_all(
            triple_max=args.triple_max, cross_max=args.cross_max,
            extra_pair_max=args.extra_pair_max, pair_family_odd_max=args.odd_max,
            herzog_max=args.herzog_max, frobenius_max=args.frobenius_max,
            enum_genus_2=args.enum_genus_2, enum_genus_3=args.enum_genus_3,
        )
    failed = False
    for outcome in outcomes:
        sys.stdout.write(outcome.line() + "\n")
        failed = failed or not outcome.ok
    if failed:
        raise LemmaViolation("verification sweeps reported violations")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gns",
        description="Generalized numerical semigroups: invariants, families, enumeration.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(p):
        p.add_argument("--budget-nodes", type=int, default=None,
                       help="node cap (env GNS_BUDGET_NODES also honored)")
        p.add_argument("--budget-seconds", type=float, default=None, help="wall-clock cap")

    p = sub.add_parser("analyze", help="invariant report for a semigroup given by its gaps")
    p.add_argument("--gaps", help="JSON list of points, e.g. '[[0,1],[1,0]]'")
    p.add_argument("--dim", type=int)
    p.add_argument("--input", help="JSON document file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a semigroup from generators")
    p.add_argument("--generators", help="JSON list of points")
    p.add_argument("--dim", type=int)
    p.add_argument("--bound", help="JSON point: explicit certification box")
    p.add_argument("--input", help="JSON document file")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("family", help="build a parametric family member and verify its claims")
    p.add_argument("--params", help="JSON family document (see README)")
    p.add_argument("--input", help="JSON document file")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("enumerate", help="list semigroups by genus")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--min-genus", type=int, default=None)
    p.add_argument("--edim", type=int, default=None)
    p.add_argument("--class", dest="cls", choices=["symmetric", "almost", "pseudo"], default=None)
    p.add_argument("--up-to-permutation", action="store_true")
    p.add_argument("--with-reports", action="store_true")
    add_budget(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table1", help="classified census per genus (AS / Sym / PSym)")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--edim", type=int, required=True)
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the tree walk")
    add_budget(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("conjecture", help="max type among almost symmetric, edim 2d+2")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-genus", type=int, required=True)
    add_budget(p)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("verify", help="run the full verification sweep suite")
    p.add_argument("--quick", action="store_true", help="reduced caps, a few seconds")
    p.add_argument("--triple-max", type=int, default=20)
    p.add_argument("--cross-max", type=int, default=12)
    p.add_argument("--extra-pair-max", type=int, default=15)
    p.add_argument("--odd-max", type=int, default=21)
    p.add_argument("--herzog-max", type=int, default=25)
    p.add_argument("--frobenius-max", type=int, default=30)
    p.add_argument("--enum-genus-2", type=int, default=7)
    p.add_argument("--enum-genus-3", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except (BudgetExceeded, Undetermined) as e:
        sys.stderr.write(f"{type(e).__name__}: {e}\n")
        if isinstance(e, Undetermined) and e.failures:
            sys.stderr.write(f"shell failures near: {list(e.failures)}\n")
        return 3
    except LemmaViolation as e:
        sys.stderr.write(f"LemmaViolation: {e}\n")
        return 4
    except GnsError as e:
        if type(e).__name__ in _INPUT_ERRORS:
            sys.stderr.write(f"{type(e).__name__}: {e}\n")
            return 2
        raise
    except OSError as e:
        sys.stderr.write(f"i/o error: {e}\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
