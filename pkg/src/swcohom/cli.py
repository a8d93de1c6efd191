"""Command-line driver: formal-ring, solve, chow, selftest.

Reports are emitted twice: a human-readable summary on stderr and a
deterministic JSON document on stdout (or --out).  Exit codes: 0 success,
1 mathematical failure, 2 budget exhausted, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .chow import (ChowReport, chern_subring, compare_bounds,
                   frobenius_probe, from_final_presentation, tilde_subring)
from .f2poly import BudgetExceeded, ContractError, F2Error, Ring, SchemaError
from .formalring import FormalRing, build_formal_ring
from .groebner import Algebra, Budget, minimal_generators
from .repdata import parse_cohomology, parse_repdata, validate_cross
from .solver import FinalPresentation, Solver

EXIT_OK, EXIT_MATH, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise SchemaError("%s is not valid JSON: %s" % (path, exc))


def _emit(doc: dict, out: str | None):
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _log(verbose: bool, msg: str):
    if verbose:
        sys.stderr.write(msg + "\n")


# ---------------------------------------------------------------------------
# document builders


def formal_ring_document(fr: FormalRing) -> dict:
    ring = fr.algebra.ring
    fmt = ring.format_poly
    return {
        "variables": [{"name": nm, "degree": ring.degrees[i],
                       "class": fr.classification[nm]}
                      for i, nm in enumerate(ring.names)],
        "relations": [fmt(g) for g in
                      minimal_generators(ring, fr.algebra.relations)],
        "groebner_basis": [fmt(g) for g in fr.algebra.relations],
        "eliminated": {nm: fmt(expr) for nm, expr in sorted(fr.eliminated.items())},
    }


def presentation_document(fp: FinalPresentation) -> dict:
    ring = fp.ring
    fmt = ring.format_poly
    table = {}
    for nm, t in fp.steenrod_table.items():
        if t is None:
            table[nm] = "unknown"
        else:
            table[nm] = {str(k): fmt(v) for k, v in sorted(t.items())}
    return {
        "generators": [{"name": nm, "degree": ring.degrees[i],
                        "kind": fp.kinds[nm]} for i, nm in enumerate(ring.names)],
        "relations": [fmt(g) for g in fp.relations],
        "groebner_basis": [fmt(g) for g in fp.kernel_basis],
        "sw_dictionary": {nm: fmt(v) for nm, v in sorted(fp.sw_dictionary.items())},
        "chern_dictionary": {nm: fmt(v) for nm, v in sorted(fp.chern_dictionary.items())},
        "steenrod_table": table,
        "verification_bound": fp.verification_bound,
    }


def chow_document(report: ChowReport) -> dict:
    return {
        "chern_generators": report.chern_generators,
        "tilde_generators": report.tilde_generators,
        "equal": report.equal,
        "equal_mod_sqrt0": report.equal_mod_sqrt0,
        "iterations": report.iterations,
        "stable": report.stable,
    }


def load_presentation_document(doc: dict) -> FinalPresentation:
    """Rebuild a solver presentation (or any unstable-algebra document)."""
    if "payload" in doc:
        doc = doc["payload"]
    gens = doc.get("generators")
    if not gens:
        raise SchemaError("presentation: missing generators")
    names = [g["name"] for g in gens]
    degrees = [g["degree"] for g in gens]
    kinds = {g["name"]: g.get("kind", "sw") for g in gens}
    ring = Ring(names, degrees)
    from .groebner import buchberger, present
    rels = [ring.parse(s) for s in doc.get("groebner_basis",
                                           doc.get("relations", ()))]
    alg = present(ring, rels)
    table_doc = doc.get("steenrod_table", {})
    table = {}
    for nm in names:
        entry = table_doc.get(nm)
        if entry is None or entry == "unknown":
            table[nm] = None
        else:
            table[nm] = {int(k): ring.parse(v) for k, v in entry.items()}
    rels_min = [ring.parse(s) for s in doc.get("relations", ())]
    sw = {nm: ring.parse(v) for nm, v in doc.get("sw_dictionary", {}).items()}
    chern = {nm: ring.parse(v) for nm, v in doc.get("chern_dictionary", {}).items()}
    return FinalPresentation(ring, kinds, tuple(rels_min), alg.relations,
                             sw, chern, table,
                             doc.get("verification_bound", 0))


# ---------------------------------------------------------------------------
# commands


def cmd_formal_ring(args) -> int:
    budget = Budget(args.budget)
    data = parse_repdata(_load_json(args.repdata))
    t0 = time.time()
    fr = build_formal_ring(data, budget, args.cap)
    _log(args.verbose, "formal ring built in %.2fs" % (time.time() - t0))
    doc = {"command": "formal-ring", "status": "success",
           "payload": formal_ring_document(fr)}
    if args.cap is not None:
        doc["cap"] = args.cap
        doc["warning"] = ("relations above degree %d were discarded" % args.cap)
    _emit(doc, args.out)
    ring = fr.algebra.ring
    _log(True, "formal ring: %d variables (%s), %d minimal relations, "
         "%d eliminated" % (ring.n,
                            " ".join("%s:%s" % (nm, fr.classification[nm])
                                     for nm in ring.names),
                            len(doc["payload"]["relations"]),
                            len(fr.eliminated)))
    return EXIT_OK


def cmd_solve(args) -> int:
    budget = Budget(args.budget)
    data = parse_repdata(_load_json(args.repdata))
    H = parse_cohomology(_load_json(args.cohomology), budget)
    warnings = validate_cross(data, H)
    for w in warnings:
        _log(True, "warning: " + w)
    t0 = time.time()
    fr = build_formal_ring(data, budget, args.cap)
    _log(args.verbose, "formal ring built in %.2fs" % (time.time() - t0))
    solver = Solver(fr, H, mode=args.mode, max_candidates=args.max_candidates,
                    budget=budget, verify_bound=args.verify_bound,
                    threads=args.threads)
    t0 = time.time()
    outcome = solver.run()
    _log(args.verbose, "solver finished in %.2fs" % (time.time() - t0))
    doc = {"command": "solve", "status": outcome.status, "stats": outcome.stats,
           "mode": args.mode}
    if outcome.detail:
        doc["detail"] = outcome.detail
    if outcome.presentation is not None:
        doc["payload"] = presentation_document(outcome.presentation)
    _emit(doc, args.out)
    if outcome.presentation is not None:
        fp = outcome.presentation
        _log(True, "solve: %s; generators %s; %d relations" %
             (outcome.status, ", ".join(fp.ring.names), len(fp.relations)))
    else:
        _log(True, "solve: %s (%s)" % (outcome.status, outcome.detail))
    return EXIT_OK if outcome.status == "success" else EXIT_MATH


def cmd_chow(args) -> int:
    budget = Budget(args.budget)
    fp = load_presentation_document(_load_json(args.presentation))
    A = from_final_presentation(fp)
    t0 = time.time()
    tilde, n_iter, stable = tilde_subring(A, args.max_q, budget, args.rank_budget)
    _log(args.verbose, "upper bound in %.2fs (N=%d)" % (time.time() - t0, n_iter))
    chern = chern_subring(fp, budget)
    report = compare_bounds(A.algebra, chern, tilde, budget, n_iter, stable)
    doc = {"command": "chow",
           "status": "success" if stable else "unstable-at-max-q",
           "payload": chow_document(report)}
    if args.probe_f_iso is not None:
        doc["payload"]["frobenius_probe"] = {
            "n": args.probe_f_iso,
            "holds": frobenius_probe(A.algebra, chern, tilde,
                                     args.probe_f_iso, budget)}
    _emit(doc, args.out)
    if report.equal:
        _log(True, "chow: bounds coincide after Q_%d; the cycle-map image is "
             "generated by %s" % (n_iter, ", ".join(report.chern_generators)))
    else:
        _log(True, "chow: bounds differ%s (lower %s | upper %s)" %
             (" only by square-zero classes" if report.equal_mod_sqrt0 else "",
              ", ".join(report.chern_generators),
              ", ".join(report.tilde_generators)))
    return EXIT_OK if stable else EXIT_MATH


def cmd_selftest(args) -> int:
    """Run the bundled fixtures end to end and report one line per check."""
    from .groebner import graded_dimension
    from .repdata import load_fixture

    budget = Budget(args.budget)
    failures = []

    def check(section, name, fn):
        selected = not args.only or args.only in section
        try:
            fn()
            if selected:
                sys.stderr.write("PASS  %-12s %s\n" % (section, name))
        except Exception as exc:  # noqa: BLE001 - report and continue
            if selected:
                failures.append((section, name, exc))
                sys.stderr.write("FAIL  %-12s %s: %s\n" % (section, name, exc))

    fixtures = ("z4", "q8", "g16_11", "z2cubed", "d8")
    parsed = {}
    for nm in fixtures:
        def parse(nm=nm):
            data = parse_repdata(load_fixture(nm + ".json"))
            H = parse_cohomology(load_fixture(nm + "_cohomology.json"), budget)
            validate_cross(data, H)
            parsed[nm] = (data, H)
        check("repdata", nm, parse)

    rings = {}
    for nm in fixtures:
        def build(nm=nm):
            data, _ = parsed[nm]
            rings[nm] = build_formal_ring(data, budget)
        check("formal-ring", nm, build)

    def z4_minimal():
        fr = rings["z4"]
        mins = minimal_generators(fr.ambient.ring, fr.ambient.relations, budget)
        got = {fr.ambient.ring.format_poly(g) for g in mins}
        assert got == {"w1(beta)", "w1(alpha)^2"}, got
    check("formal-ring", "z4 ideal", z4_minimal)

    outcomes = {}
    for nm in fixtures:
        def solve(nm=nm):
            data, H = parsed[nm]
            outcome = Solver(rings[nm], H, budget=budget).run()
            assert outcome.status == "success", outcome.status
            final = Algebra(outcome.presentation.ring,
                            outcome.presentation.kernel_basis)
            for d in range(0, 13):
                assert graded_dimension(final, d) == graded_dimension(H, d), d
            outcomes[nm] = outcome
        check("solve", nm, solve)

    for nm in ("q8", "z2cubed", "d8"):
        def chow(nm=nm):
            fp = outcomes[nm].presentation
            A = from_final_presentation(fp)
            tilde, n_iter, stable = tilde_subring(A, budget=budget)
            chern = chern_subring(fp, budget)
            rep = compare_bounds(A.algebra, chern, tilde, budget, n_iter, stable)
            assert rep.equal, "bounds differ"
        check("chow", nm, chow)

    if failures:
        sys.stderr.write("%d self-test failure(s)\n" % len(failures))
        return EXIT_MATH
    sys.stderr.write("self-test passed\n")
    return EXIT_OK


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="swc",
        description="Stiefel-Whitney presentations of mod-2 group cohomology")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--budget", type=int, default=None,
                       help="step budget (default: SWC_BUDGET or built-in)")
        p.add_argument("-v", "--verbose", action="store_true")

    p = sub.add_parser("formal-ring", help="build the formal ring from repdata")
    p.add_argument("--repdata", required=True)
    p.add_argument("--cap", type=int, default=None,
                   help="discard relations above this degree")
    common(p)
    p.set_defaults(fn=cmd_formal_ring)

    p = sub.add_parser("solve", help="present the cohomology by SW classes")
    p.add_argument("--repdata", required=True)
    p.add_argument("--cohomology", required=True)
    p.add_argument("--mode", choices=("quotient-lift", "exhaustive"),
                   default="quotient-lift")
    p.add_argument("--max-candidates", type=int, default=10 ** 6)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--verify-bound", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(fn=cmd_solve)

    p = sub.add_parser("chow", help="bound the image of the cycle map")
    p.add_argument("--presentation", required=True,
                   help="solver output document (or unstable-algebra document)")
    p.add_argument("--max-q", type=int, default=6,
                   help="largest Milnor derivation index to try")
    p.add_argument("--rank-budget", type=int, default=4096)
    p.add_argument("--probe-f-iso", type=int, default=None, metavar="N",
                   help="also check upper-bound generators to the 2^N-th "
                        "power against the Chern subring")
    common(p)
    p.set_defaults(fn=cmd_chow)

    p = sub.add_parser("selftest", help="run the bundled test suite")
    p.add_argument("--only", default=None, help="pytest -k filter")
    common(p)
    p.set_defaults(fn=cmd_selftest)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SchemaError, ContractError) as exc:
        sys.stderr.write("input error: %s\n" % exc)
        _emit_failure(args, "input-error", str(exc))
        return EXIT_INPUT
    except BudgetExceeded as exc:
        sys.stderr.write("budget error: %s\n" % exc)
        _emit_failure(args, "budget", str(exc))
        return EXIT_BUDGET
    except F2Error as exc:
        sys.stderr.write("error: %s\n" % exc)
        _emit_failure(args, "error", str(exc))
        return EXIT_MATH


def _emit_failure(args, status: str, detail: str):
    doc = {"command": getattr(args, "command", "?"), "status": status,
           "detail": detail}
    try:
        _emit(doc, getattr(args, "out", None))
    except OSError:
        pass


if __name__ == "__main__":
    sys.exit(main())
