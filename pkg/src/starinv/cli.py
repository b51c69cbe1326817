"""Command line front end.

    starinv classify       --ring <spec> --elem <literal> [--json]
    starinv verify         --ring <spec> --theorem <id>   [--json]
    starinv counterexample --ring <spec> --claim <id> [--all] [--json]
    starinv survey         --ring <spec> [--json]

Exit codes: 0 verified/classified, 1 refuted or counterexample found,
2 usage error, 3 exhaustiveness guard exceeded.

Every invocation builds one structured document (rendered as text by
default, as canonical JSON with --json); apart from ``elapsed_ms`` the
document is byte-identical across repeated runs.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .classify import classify_element
from .errors import (BoundExceededError, InvalidArgumentError,
                     InvalidParameterError, MethodDisagreementError,
                     ParseError, RingMismatchError, UnknownIdError)
from .rings import parse_elem, parse_ring_spec
from .theorems import CLAIMS, THEOREMS, find_counterexamples, run_theorem, survey


def _ring_block(ring):
    return {"spec": ring.spec(), "kind": ring.kind,
            "carrier_size": ring.carrier_size,
            "involution": ring.involution}


def _doc(invocation, ring, result, counts, witnesses, violations, elapsed_ms):
    return {"invocation": invocation, "ring": _ring_block(ring),
            "result": result, "counts": counts, "witnesses": witnesses,
            "violations": violations, "elapsed_ms": round(elapsed_ms, 3)}


def _emit(doc, as_json, render):
    if as_json:
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in render(doc):
            print(line)


# ------------------------------------------------------------------ classify

def _cmd_classify(args):
    ring = parse_ring_spec(args.ring)
    elem = parse_elem(ring, args.elem)
    start = time.perf_counter()
    report = classify_element(elem)
    elapsed = (time.perf_counter() - start) * 1000.0
    result = report.to_dict()
    witnesses = []
    for name, r in report.inverses.items():
        if r.exists:
            witnesses.append({"role": name, "value": r.inverse.value,
                              "index": r.inverse.index, "exponent": r.index})
    for name, s in report.systems.items():
        if s["solvable"]:
            witnesses.append({"role": f"{name}-first", "value": s["first_witness"],
                              "index": None, "exponent": None})
    counts = {"witness_counts":
              {name: r.witness_count for name, r in report.inverses.items()},
              "system_witnesses":
              {name: s["witness_count"] for name, s in report.systems.items()}}
    doc = _doc({"command": "classify", "ring": ring.spec(),
                "elem": args.elem.strip(), "json": args.json},
               ring, result, counts, witnesses, [], elapsed)
    _emit(doc, args.json, _render_classify)
    return 0


def _render_classify(doc):
    r = doc["result"]
    yield f"ring {doc['ring']['spec']}  |R| = {doc['ring']['carrier_size']}"
    yield f"element {r['element']}  (index {r['element_index']})"
    dmp_n = f" (n = {r['dmp_index']})" if r["dmp_index"] is not None else ""
    yield f"  is_ep = {r['is_ep']}   is_cep = {r['is_cep']}   is_star_dmp = {r['is_star_dmp']}{dmp_n}"
    yield "  inverses:"
    for name, d in r["inverses"].items():
        if d["exists"]:
            extra = f"  (exponent {d['index']})" if d["index"] is not None else ""
            multi = f"  [{d['witness_count']} witnesses]" if d["witness_count"] > 1 else ""
            yield f"    {name:14s} {d['inverse']}{extra}{multi}"
        else:
            yield f"    {name:14s} absent"
    yield "  method verdicts:"
    for family in ("ep", "cep", "dmp"):
        verdicts = r["methods"][family]
        parts = " ".join(f"{k.split('.', 1)[1]}={v}" for k, v in verdicts.items())
        yield f"    {family}: {parts}"
    if r["decompositions"]:
        yield "  decompositions:"
        for kind, d in r["decompositions"].items():
            parts = ", ".join(f"{k} = {v}" for k, v in d["parts"].items())
            exp = f"  (n = {d['exponent']})" if "exponent" in d else ""
            yield f"    {kind}: {parts}{exp}"
    yield "  equation systems:"
    for name, s in r["systems"].items():
        if s["solvable"]:
            yield (f"    {name:14s} solvable, {s['witness_count']} witnesses, "
                   f"first x = {s['first_witness']}")
        else:
            yield f"    {name:14s} unsolvable"


# -------------------------------------------------------------------- verify

def _cmd_verify(args):
    ring = parse_ring_spec(args.ring)
    report = run_theorem(ring, args.theorem)
    result = report.to_dict()
    counts = {"elements_checked": report.elements_checked,
              "hypothesis_count": report.hypothesis_count,
              "violations": len(report.violations)}
    doc = _doc({"command": "verify", "ring": ring.spec(),
                "theorem": args.theorem, "json": args.json},
               ring, result, counts, [], list(report.violations),
               report.elapsed_ms)
    _emit(doc, args.json, _render_verify)
    return 1 if report.verdict == "refuted" else 0


def _render_verify(doc):
    r = doc["result"]
    desc = THEOREMS[r["theorem"]].description
    yield f"theorem {r['theorem']} on {r['ring']}: {r['verdict'].upper()}"
    yield f"  claim: {desc}"
    yield (f"  checked {r['elements_checked']} instances "
           f"(hypothesis satisfied by {r['hypothesis_count']}); "
           f"{len(doc['violations'])} violations; "
           f"{doc['elapsed_ms']:.1f} ms")
    for v in doc["violations"][:10]:
        yield f"  violation: {v}"
    if len(doc["violations"]) > 10:
        yield f"  ... and {len(doc['violations']) - 10} more"


# ------------------------------------------------------------ counterexample

def _cmd_counterexample(args):
    ring = parse_ring_spec(args.ring)
    report = find_counterexamples(ring, args.claim, find_all=args.all)
    result = report.to_dict()
    counts = {"elements_checked": report.checked,
              "findings": len(report.findings)}
    doc = _doc({"command": "counterexample", "ring": ring.spec(),
                "claim": args.claim, "all": args.all, "json": args.json},
               ring, result, counts, list(report.findings), [],
               report.elapsed_ms)
    _emit(doc, args.json, _render_counterexample)
    return 1 if report.findings else 0


def _render_counterexample(doc):
    r = doc["result"]
    yield f"claim {r['claim']} on {r['ring']}: {CLAIMS[r['claim']]}"
    if not doc["witnesses"]:
        yield "  no counterexample in this ring"
        return
    for f in doc["witnesses"]:
        yield (f"  counterexample a = {f['element']} (index {f['element_index']}), "
               f"witness x = {f['witness_x']} "
               f"({f['witness_count']} witnesses); a is not EP")


# -------------------------------------------------------------------- survey

def _cmd_survey(args):
    ring = parse_ring_spec(args.ring)
    start = time.perf_counter()
    report = survey(ring)
    elapsed = (time.perf_counter() - start) * 1000.0
    result = report.to_dict()
    doc = _doc({"command": "survey", "ring": ring.spec(), "json": args.json},
               ring, result, result, [], [], elapsed)
    _emit(doc, args.json, _render_survey)
    return 0


def _render_survey(doc):
    r = doc["result"]
    yield f"survey of {r['ring']}"
    for key in ("carrier_size", "units", "projections", "central_projections",
                "group_invertible", "mp_invertible", "ep", "cep", "star_dmp",
                "core_invertible"):
        yield f"  {key:20s} {r[key]}"
    yield f"  invariants_ok        {r['invariants_ok']}"


# ---------------------------------------------------------------------- main

def _build_parser():
    p = argparse.ArgumentParser(
        prog="starinv",
        description="exact generalized inverses and EP classification in "
                    "finite rings with involution")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify one element")
    c.add_argument("--ring", required=True, help="zn(n) | gauss(n) | mat(k,base,inv)")
    c.add_argument("--elem", required=True, help="element literal")
    c.add_argument("--json", action="store_true")
    c.set_defaults(fn=_cmd_classify)

    v = sub.add_parser("verify", help="exhaustively verify a registry claim")
    v.add_argument("--ring", required=True)
    v.add_argument("--theorem", required=True,
                   help=f"one of: {', '.join(sorted(THEOREMS))}")
    v.add_argument("--json", action="store_true")
    v.set_defaults(fn=_cmd_verify)

    x = sub.add_parser("counterexample", help="search for counterexamples")
    x.add_argument("--ring", required=True)
    x.add_argument("--claim", required=True,
                   help=f"one of: {', '.join(sorted(CLAIMS))}")
    x.add_argument("--all", action="store_true", help="list every witness")
    x.add_argument("--json", action="store_true")
    x.set_defaults(fn=_cmd_counterexample)

    s = sub.add_parser("survey", help="count the distinguished classes")
    s.add_argument("--ring", required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=_cmd_survey)
    return p


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, InvalidParameterError, InvalidArgumentError,
            RingMismatchError, UnknownIdError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MethodDisagreementError as exc:
        # a disagreement between proved-equivalent characterizations is a
        # refutation-grade event, never expected on a correct build
        print(f"refuted: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
