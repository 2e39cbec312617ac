"""Command-line entry point: ``colordesigns <command> ...``.

Coordinate sets are 1-based comma lists; blocks are separated by ``/``.
Compositions are comma lists of counts in canonical element order
(GF(3): 0,1,2; GF(4): 0,1,s,s2).  Exit status 2 means a malformed argument,
1 a failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import acceptance, catalog
from .designs import (colored_design_check, generalized_colored_design_check, homogeneity_scan, lambda_table,
                      packing_covering_params)
from .enumerators import SplitSpec, complete_jacobi, cwe, jacobi, scwe, split_complete_jacobi
from .errors import ColorDesignsError
from .invariants import group_alphabet, invariance_report, molien_bivariate, named_group, reynolds
from .polyring import from_json, parse, render, to_json


class ArgError(Exception):
    """A malformed command-line value; carries the flag it came from."""

    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ArgError(flag, f"expected a comma-separated list of integers, got {text!r}") from None


def parse_blocks(text: str, flag: str = "--split") -> list[list[int]]:
    """'1,2/3,4' -> [[1, 2], [3, 4]]; an empty block is written as nothing between slashes."""
    return [_int_list(part, flag) for part in text.split("/")]


def _load_code(name: str):
    try:
        return catalog.get(name)
    except ColorDesignsError as exc:
        raise ArgError("code", str(exc)) from None


def _spec(code, split: str | None, refs: str | None) -> SplitSpec:
    blocks = parse_blocks(split) if split else [list(range(1, code.length + 1))]
    ref_blocks = None
    if refs is not None:
        ref_blocks = parse_blocks(refs, "--refs")
        if len(ref_blocks) != len(blocks):
            raise ArgError("--refs", f"{len(ref_blocks)} reference sets for {len(blocks)} blocks")
    try:
        return SplitSpec(tuple(tuple(b) for b in blocks),
                         None if ref_blocks is None else tuple(tuple(r) for r in ref_blocks), n=code.length)
    except ColorDesignsError as exc:
        raise ArgError("--split" if refs is None else "--split/--refs", str(exc)) from None


def _emit_poly(p, as_json: bool) -> None:
    print(to_json(p) if as_json else render(p))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    code = _load_code(args.code)
    kind = args.kind
    if kind == "cwe":
        p = cwe(code)
    elif kind == "scwe":
        p = scwe(code, _spec(code, args.split, None))
    elif kind in ("cj", "jacobi"):
        if args.split and len(parse_blocks(args.split)) > 1:
            raise ArgError("--split", f"{kind} takes a single block; use scj")
        refs = _int_list(args.refs, "--refs") if args.refs else []
        try:
            p = complete_jacobi(code, refs) if kind == "cj" else jacobi(code, refs)
        except ColorDesignsError as exc:
            raise ArgError("--refs", str(exc)) from None
    else:
        ell = len(parse_blocks(args.split)) if args.split else 1
        spec = _spec(code, args.split, args.refs if args.refs is not None else "/" * (ell - 1))
        p = split_complete_jacobi(code, spec)
    _emit_poly(p, args.json)
    return 0


def _design_query(code, comp_text: str, t_text: str, split: str | None):
    if split:
        spec = _spec(code, split, None)
        comp = [tuple(b) for b in parse_blocks(comp_text, "--comp")]
        ts = _int_list(t_text, "--t")
        if len(comp) != spec.ell or len(ts) != spec.ell:
            raise ArgError("--comp/--t", f"need one composition and one strength per block ({spec.ell})")
        return lambda cc: generalized_colored_design_check(code, spec, comp, ts, cc)
    comp = tuple(_int_list(comp_text, "--comp"))
    if len(comp) != code.field.q:
        raise ArgError("--comp", f"need {code.field.q} counts, got {len(comp)}")
    if sum(comp) != code.length:
        raise ArgError("--comp", f"counts sum to {sum(comp)}, not n={code.length}")
    try:
        t = int(t_text)
    except ValueError:
        raise ArgError("--t", f"expected an integer, got {t_text!r}") from None
    return lambda cc: colored_design_check(code, comp, t, cc)


def cmd_design(args) -> int:
    code = _load_code(args.code)
    run = _design_query(code, args.comp, args.t, args.split)
    try:
        rep = run(not args.no_cross_check)
    except ColorDesignsError as exc:
        raise ArgError("--comp/--t", str(exc)) from None
    if args.json:
        obj = rep.to_json_obj()
        obj["packing_covering"] = packing_covering_params(rep)
        print(json.dumps(obj))
    else:
        print(rep.summary())
        if args.verbose:
            print(packing_covering_params(rep)["statement"])
    return 0


def cmd_lambda_table(args) -> int:
    code = _load_code(args.code)
    comps = []
    for c in args.comp:
        for part in c.split(";"):
            comp = tuple(_int_list(part, "--comp"))
            if len(comp) != code.field.q or sum(comp) != code.length:
                raise ArgError("--comp", f"{part!r} is not a composition of n={code.length} over {code.field.q} symbols")
            comps.append(comp)
    try:
        tab = lambda_table(code, comps, args.t, cross_check=not args.no_cross_check)
    except ColorDesignsError as exc:
        raise ArgError("--t", str(exc)) from None
    if args.json:
        print(json.dumps(tab.to_json_obj()))
    elif args.csv:
        sys.stdout.write(tab.to_csv())
    else:
        sys.stdout.write(tab.render(args.width))
    return 0


def cmd_scan(args) -> int:
    code = _load_code(args.code)
    res = homogeneity_scan(code, args.tmax)
    if args.json:
        print(json.dumps(res.to_json_obj()))
    else:
        sys.stdout.write(res.render())
    return 0


def _read_poly(source: str, alphabet):
    text = sys.stdin.read() if source == "-" else None
    if text is None:
        path = Path(source)
        text = path.read_text() if path.is_file() else source
    text = text.strip()
    try:
        if text.startswith("{"):
            return from_json(text)
        return parse(text, alphabet)
    except (ValueError, KeyError, ColorDesignsError) as exc:
        raise ArgError("--poly", str(exc)) from None


def cmd_invariants(args) -> int:
    grp = named_group(args.group)
    alphabet = group_alphabet(grp)
    if args.action == "molien":
        tab = molien_bivariate(grp, args.max_degree)
        if args.json:
            print(json.dumps(tab.to_json_obj()))
        elif args.text:
            for d in range(args.max_degree + 1):
                print(tab.render_degree(d))
        else:
            sys.stdout.write(tab.to_csv())
        return 0
    if args.action == "reynolds":
        seed = _read_poly(args.seed, alphabet) if args.seed else None
        if seed is None or len(seed.terms) != 1:
            raise ArgError("--seed", "expected a single monomial")
        _emit_poly(reynolds(seed, grp, alphabet), args.json)
        return 0
    if args.code:
        code = _load_code(args.code)
        p = cwe(code) if not args.split else scwe(code, _spec(code, args.split, None))
    elif args.poly:
        p = _read_poly(args.poly, alphabet)
    else:
        raise ArgError("--poly", "give --poly or --code")
    if p.alphabet is not alphabet and getattr(p.alphabet, "q", None) != grp.dim:
        raise ArgError("--poly", f"polynomial alphabet has {p.alphabet.q} letters, group dimension is {grp.dim}")
    verdicts = invariance_report(p, grp.generators)
    ok = all(verdicts)
    if args.json:
        print(json.dumps({"group": grp.name, "invariant": ok, "per_generator": verdicts}))
    else:
        print(f"invariant: {'yes' if ok else 'no'}")
        for i, v in enumerate(verdicts, 1):
            print(f"  generator {i}: {'fixed' if v else 'moved'}")
    return 0


def cmd_verify(args) -> int:
    only = set(_int_list(args.only, "--only")) if args.only else None
    results = acceptance.run(only)
    failed = [r for r in results if not r.passed]
    if args.json:
        print(json.dumps([{"criterion": r.number, "title": r.title, "passed": r.passed,
                           "details": r.details, "seconds": round(r.seconds, 2)} for r in results]))
    else:
        for r in results:
            print(r.line())
            if args.verbose or not r.passed:
                for d in r.details:
                    print(f"    {d}")
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="colordesigns", description="Enumerators, colored designs and invariants of small codes.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="print an enumerator polynomial")
    p.add_argument("kind", choices=["cwe", "scwe", "jacobi", "cj", "scj"])
    p.add_argument("code", help="catalog name or catalog-format file")
    p.add_argument("--split", help="blocks, e.g. 1,2/3,4")
    p.add_argument("--refs", help="reference sets, one per block, e.g. 1/3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("design", help="check a colored design")
    p.add_argument("code")
    p.add_argument("--comp", required=True, help="composition, e.g. 6,3,3 (per block with --split: 1,1,0/0,1,1)")
    p.add_argument("--t", required=True, help="strength (per block with --split: 1,0)")
    p.add_argument("--split")
    p.add_argument("--no-cross-check", action="store_true")
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("lambda-table", help="lambda table for one or more compositions")
    p.add_argument("code")
    p.add_argument("--comp", required=True, action="append", help="repeatable; or ';'-separated")
    p.add_argument("--t", required=True, type=int)
    p.add_argument("--width", type=int, default=8)
    p.add_argument("--no-cross-check", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_lambda_table)

    p = sub.add_parser("scan", help="largest t for which all / some compositions give designs")
    p.add_argument("code")
    p.add_argument("--tmax", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("invariants", help="matrix-group computations")
    p.add_argument("--group", required=True, choices=["g3", "g4"])
    p.add_argument("--json", action="store_true")
    isub = p.add_subparsers(dest="action", required=True)
    m = isub.add_parser("molien")
    m.add_argument("--max-degree", type=int, default=12)
    m.add_argument("--text", action="store_true", help="print f[d] lines instead of CSV")
    r = isub.add_parser("reynolds")
    r.add_argument("--seed", required=True, help="monomial, e.g. x_0^2y_0^4")
    c = isub.add_parser("check")
    c.add_argument("--poly", help="polynomial text or JSON, a file containing either, or - for stdin")
    c.add_argument("--code", help="use the enumerator of this code instead")
    c.add_argument("--split", help="with --code: use the split enumerator")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", help="comma list of criterion numbers")
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ArgError as exc:
        print(f"colordesigns: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
