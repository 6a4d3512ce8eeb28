"""Command line driver: ``python3 -m dfilab <command> ...``.

Exit codes: 0 success, 1 negative verdict, 2 bad input, 3 a cap or budget
was exceeded. JSON goes to stdout; human-readable tables go to stderr unless
``--quiet`` is given.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra import Field, TermOrder, parse_field, parse_order
from .errors import CapExceeded, DfiLabError, HypothesisFailed, InputError
from .simplicial import SimplicialComplex, clique_complex, f_vector, i_nonfaces

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class Problem:
    n: int
    m: int
    r: int
    delta: SimplicialComplex
    order: TermOrder
    field: Field

    def dfi(self):
        from .dfi import build_rdfi
        return build_rdfi(self.delta, self.n, self.r, self.order, self.field)


def _int(data: dict, key: str) -> int:
    if key not in data:
        raise InputError(f"missing key {key!r}")
    v = data[key]
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise InputError(f"{key!r} must be a positive integer")
    return v


def parse_problem(data: dict) -> Problem:
    """Validate the JSON input object and build the complex, order and field."""
    if not isinstance(data, dict):
        raise InputError("input must be a JSON object")
    n, m, r = _int(data, "n"), _int(data, "m"), _int(data, "r")
    cx = data.get("complex")
    if not isinstance(cx, dict) or len(cx) != 1 or not {"facets", "intervals"} & cx.keys():
        raise InputError('"complex" must hold exactly one of "facets" or "intervals"')
    if "facets" in cx:
        delta = SimplicialComplex(m, cx["facets"])
        if delta.facets and delta.r != r:
            raise InputError(f"facets have {delta.r} vertices but r = {r}")
    else:
        ivs = cx["intervals"]
        if not all(isinstance(iv, list) and len(iv) == 2 for iv in ivs):
            raise InputError("intervals are [a, b] pairs")
        delta = SimplicialComplex.from_intervals(m, ivs, r)
    order = parse_order(data.get("order"), n, m)
    field = parse_field(data.get("field"))
    return Problem(n, m, r, delta, order, field)


def load_problem(path: str) -> Problem:
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    return parse_problem(data)


class Output:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def json(self, obj):
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2, default=str) + "\n")

    def human(self, text: str):
        if not self.quiet:
            sys.stderr.write(text.rstrip("\n") + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_decompose(args, out: Output) -> int:
    p = load_problem(args.input)
    dec = clique_complex(p.delta, p.r)
    fv = f_vector(dec)
    out.json({"cliques": [list(c) for c in dec.cliques],
              "facet_cliques": {"{" + ",".join(map(str, f)) + "}": list(c) for f, c in dec.facet_cliques.items()},
              "f_vector": list(fv)})
    out.human("cliques: " + "  ".join("{" + ",".join(map(str, c)) + "}" for c in dec.cliques))
    out.human("f-vector (from the empty face): " + " ".join(map(str, fv)))
    return EXIT_OK


def cmd_check(args, out: Output) -> int:
    from .dfi import is_lcm_closed, is_unit_interval, lcm_closed_sweep
    dfi = load_problem(args.input).dfi()
    report: dict = {}
    wanted = [k for k in ("lcm_closed", "unit_interval", "all_diagonal_lex") if getattr(args, k)]
    if not wanted:
        wanted = ["lcm_closed"]
    ok = True
    if "lcm_closed" in wanted:
        rep = is_lcm_closed(dfi)
        report["lcm_closed"] = rep.to_json()
        ok &= rep.verdict
    if "unit_interval" in wanted:
        report["unit_interval"] = {"verdict": is_unit_interval(dfi)}
        ok &= report["unit_interval"]["verdict"]
    if "all_diagonal_lex" in wanted:
        rows = lcm_closed_sweep(dfi)
        report["all_diagonal_lex"] = rows
        ok &= all(r["verdict"] for r in rows if r["diagonal"])
    out.json(report)
    for k in wanted:
        v = report[k]
        verdict = all(r["verdict"] for r in v if r["diagonal"]) if k == "all_diagonal_lex" else v["verdict"]
        out.human(f"{k}: {verdict}")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_gb(args, out: Output) -> int:
    from .groebner import buchberger, is_groebner
    dfi = load_problem(args.input).dfi()
    gens = dfi.polynomials()
    if args.verify_only:
        chk = is_groebner(gens, dfi.order)
        rep = {"verdict": chk.verdict, "pairs_checked": chk.pairs_checked}
        if not chk.verdict:
            a, b = chk.pair
            rep["failing_pair"] = [str(dfi.generators[a]), str(dfi.generators[b])]
            rep["remainder"] = str(chk.remainder)
        out.json(rep)
        if chk.verdict:
            out.human(f"the {len(gens)} facet minors form a Groebner basis")
        else:
            rem = rep["remainder"]
            rem = rem if len(rem) <= 200 else rem[:200] + " ..."
            out.human(f"not a Groebner basis: S({rep['failing_pair'][0]}, {rep['failing_pair'][1]}) "
                      f"leaves remainder {rem}")
        return EXIT_OK if chk.verdict else EXIT_NEGATIVE
    gb = buchberger(gens, dfi.order, budget=args.budget)
    out.json({"size": len(gb.elements), "basis": [str(g) for g in gb.elements],
              "lead_terms": [str(m) for m in gb.lead_monomials()], "stats": gb.stats})
    out.human(f"reduced Groebner basis with {len(gb.elements)} elements")
    return EXIT_OK


def cmd_betti(args, out: Output) -> int:
    from .lcmlattice import gpw_betti
    p = load_problem(args.input)
    field = parse_field(args.field) if args.field else p.field
    dfi = p.dfi()
    M = dfi.lead_ideal() if args.side == "lt" else dfi.initial_ideal()
    table = gpw_betti(M, field)
    out.json({"side": args.side, "field": field.name, "pd": table.pd,
              "totals": list(table.totals),
              "rows": {str(k): list(v) for k, v in table.rows().items()},
              "betti": table.to_json(args.multigraded)})
    out.human(table.render())
    return EXIT_OK


def cmd_nonfaces(args, out: Output) -> int:
    p = load_problem(args.input)
    faces = i_nonfaces(clique_complex(p.delta, p.r), args.i, args.card)
    out.json({"i": args.i, "card": args.card, "nonfaces": [list(f) for f in faces]})
    out.human(f"{len(faces)} {args.i}-nonface(s) of cardinality {args.card}")
    return EXIT_OK


def cmd_en(args, out: Output) -> int:
    from .encomplex import build_en_complex, strand_homology
    p = load_problem(args.input)
    C = build_en_complex(clique_complex(p.delta, p.r), p.n, p.m, p.order)
    rep: dict = {"ranks": {str(i): k for i, k in C.ranks().items()}, "linear": C.is_linear(), "dd_zero": True}
    if args.homology:
        try:
            i, deg = (int(t) for t in args.homology.split(","))
        except ValueError as exc:
            raise InputError("--homology expects i,deg") from exc
        h, per = strand_homology(C, i, deg, p.field, detail=True)
        rep["homology"] = {"i": i, "degree": deg, "rank": h,
                           "multidegrees": [{"rows": list(a), "cols": list(b), "rank": v}
                                            for (a, b), v in sorted(per.items())]}
    out.json(rep)
    out.human("ranks: " + " ".join(f"C{i}={k}" for i, k in C.ranks().items()))
    if args.homology:
        out.human(f"H_{rep['homology']['i']} in degree {rep['homology']['degree']}: {rep['homology']['rank']}")
    return EXIT_OK


def cmd_cm(args, out: Output) -> int:
    from .cm import cm_report, cor_cmness_check
    p = load_problem(args.input)
    dfi = p.dfi()
    rep = cm_report(dfi.initial_ideal(), p.field)
    try:
        rep["criterion"] = cor_cmness_check(dfi)
    except HypothesisFailed as exc:
        rep["criterion"] = {"error": "HypothesisFailed", "message": str(exc)}
    out.json(rep)
    out.human(f"ht = {rep['ht']}, pd = {rep['pd']}, initial ideal Cohen-Macaulay: {rep['cm_initial']}")
    return EXIT_OK


def cmd_search(args, out: Output) -> int:
    from .groebner import necessity_search
    rows = necessity_search(args.r, args.n, args.mmax, intervals_only=args.intervals_only, limit=args.limit)
    if args.format == "json":
        out.json(rows)
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "facets", "cliques", "lcm_closed", "gb", "counterexample"])
        for r in rows:
            w.writerow([r["index"], json.dumps(r["facets"]), json.dumps(r["cliques"]),
                        r["lcm_closed"], r["gb"], r["counterexample"]])
        sys.stdout.write(buf.getvalue())
    flagged = sum(r["counterexample"] for r in rows)
    out.human(f"{len(rows)} complexes, {flagged} counterexample candidate(s)")
    return EXIT_OK


def cmd_selftest(args, out: Output) -> int:
    from .selftest import run_all
    results = run_all()
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else ""))
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dfilab", description="r-determinantal facet ideal toolkit")
    ap.add_argument("--quiet", action="store_true", help="suppress human-readable output on stderr")
    sub = ap.add_subparsers(dest="command", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress human-readable output on stderr")

    s = sub.add_parser("decompose", parents=[common], help="maximal cliques and f-vector")
    s.add_argument("input")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("check", parents=[common], help="structural conditions")
    s.add_argument("input")
    s.add_argument("--lcm-closed", dest="lcm_closed", action="store_true")
    s.add_argument("--unit-interval", dest="unit_interval", action="store_true")
    s.add_argument("--all-diagonal-lex", dest="all_diagonal_lex", action="store_true")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gb", parents=[common], help="Groebner basis or S-pair verification")
    s.add_argument("input")
    s.add_argument("--verify-only", action="store_true")
    s.add_argument("--budget", type=int, default=None)
    s.set_defaults(func=cmd_gb)

    s = sub.add_parser("betti", parents=[common], help="Betti table of a monomial ideal attached to the DFI")
    s.add_argument("input")
    s.add_argument("--side", choices=["lt", "initial"], default="lt")
    s.add_argument("--field", default=None, help="q or fp:P (defaults to the input's field)")
    s.add_argument("--multigraded", action="store_true")
    s.set_defaults(func=cmd_betti)

    s = sub.add_parser("nonfaces", parents=[common], help="i-nonfaces of the clique complex")
    s.add_argument("input")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--card", type=int, required=True)
    s.set_defaults(func=cmd_nonfaces)

    s = sub.add_parser("en", parents=[common], help="sparse Eagon-Northcott complex")
    s.add_argument("input")
    s.add_argument("--homology", default=None, metavar="I,DEG")
    s.set_defaults(func=cmd_en)

    s = sub.add_parser("cm", parents=[common], help="Cohen-Macaulay verdict")
    s.add_argument("input")
    s.set_defaults(func=cmd_cm)

    s = sub.add_parser("search", parents=[common], help="lcm-closed versus Groebner over small complexes")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mmax", type=int, required=True)
    s.add_argument("--intervals-only", action="store_true")
    s.add_argument("--limit", type=int, default=None)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("selftest", parents=[common], help="rerun the worked examples")
    s.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.quiet)
    try:
        return args.func(args, out)
    except (InputError, HypothesisFailed) as exc:
        return _fail(out, exc, EXIT_INPUT)
    except CapExceeded as exc:
        return _fail(out, exc, EXIT_CAP)


def _fail(out: Output, exc: DfiLabError, code: int) -> int:
    out.json({"error": exc.code, "message": str(exc)})
    sys.stderr.write(f"error: {exc}\n")
    return code
