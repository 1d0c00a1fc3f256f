"""Command-line front end.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 resource cap or timeout.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from . import __version__
from .bounds import BoundError, best_bound, bound_main
from .cache import ResultCache, RunRecord, cache_key, canonical_json
from .constructions import projective_plane, star, sunflower
from .core import (
    BlockSet,
    CapExceededError,
    Family,
    FamilyError,
    LSpec,
    decompose,
    helly_witness,
    intersection_sizes,
    is_l_intersecting,
    is_uniform,
    kernel,
    trace_bound_check,
    union_size_check,
)
from .familyio import FamilyFormatError, format_family, read_family
from .scan import scan_conjecture
from .solver import DEFAULT_ENUM_CAP, DEFAULT_VERTEX_CAP, SolverTimeout, enumerate_maximum, max_family

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_l(text: str, allow_zero: bool = True) -> LSpec:
    try:
        vals = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"-L expects comma-separated integers, got {text!r}") from None
    if not vals:
        raise UsageError("-L must list at least one value")
    if len(set(vals)) != len(vals):
        print(f"warning: duplicate values in -L {text!r} ignored", file=sys.stderr)
    if any(v < 0 for v in vals):
        raise UsageError(f"-L values must be nonnegative, got {text!r}")
    if not allow_zero and 0 in vals:
        raise UsageError("-L must contain positive integers only for this command")
    return LSpec.of(vals)


def _set_str(b: BlockSet) -> str:
    return "{" + ",".join(map(str, b.elements)) + "}" if b.mask else "∅"


def _sizes_str(sizes) -> str:
    return "{" + ",".join(map(str, sizes)) + "}"


def _table(rows: list[list[str]], header: list[str]) -> str:
    widths = [max(len(str(r[i])) for r in rows + [header]) for i in range(len(header))]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))]
    out.extend(fmt.format(*map(str, r)) for r in rows)
    return "\n".join(line.rstrip() for line in out)


def _emit(args, record: RunRecord, human: str) -> None:
    if args.json:
        d = record.to_dict()
        d["cached"] = record.cached
        print(canonical_json(d))
    else:
        if record.cached:
            print("(cached result)")
        print(human)


def _cache(args) -> ResultCache | None:
    return None if args.no_cache else ResultCache(args.cache_dir)


# -- bound --------------------------------------------------------------------

def cmd_bound(args) -> int:
    L = parse_l(args.L)
    table = best_bound(args.n, args.k, L)
    rows = [[r.name, str(r.value), r.applicable, r.condition, r.citation] for r in table.reports]
    lines = [_table(rows, ["bound", "value", "applicable", "condition", "citation"])]
    for name, err in table.errors:
        lines.append(f"skipped {name}: {err}")
    m = table.minimum
    lines.append(f"minimum applicable: {m.name} = {m.value}" if m else "minimum applicable: none")
    payload = {
        "reports": [r.to_dict() for r in table.reports],
        "errors": [list(e) for e in table.errors],
        "minimum": None if m is None else {"name": m.name, "value": str(m.value)},
    }
    params = {"n": str(args.n), "k": str(args.k), "L": [str(v) for v in L]}
    _emit(args, RunRecord.new("bound", params, payload), "\n".join(lines))
    return EXIT_OK


# -- construct ----------------------------------------------------------------

def summarize(F: Family) -> str:
    sizes = sorted({len(b) for b in F})
    uni = f"uniform k={sizes[0]}" if len(sizes) == 1 else f"not uniform (sizes {_sizes_str(sizes)})"
    inter = _sizes_str(intersection_sizes(F)) if len(F) >= 2 else "n/a"
    ker = _set_str(kernel(F)) if len(F) else "undefined"
    return f"{uni}, intersections {inter}, kernel {ker}"


_CONSTRUCT_NEEDS = {"star": ("n", "k", "t"), "sunflower": ("n", "k", "lam", "m"), "plane": ("q",)}


def cmd_construct(args) -> int:
    missing = [name for name in _CONSTRUCT_NEEDS[args.kind] if getattr(args, name) is None]
    if missing:
        flags = ", ".join("-lambda" if m == "lam" else f"-{m}" for m in missing)
        raise UsageError(f"construct {args.kind} needs {flags}")
    if args.kind == "star":
        F = star(args.n, args.k, args.t)
        params = {"n": args.n, "k": args.k, "t": args.t}
    elif args.kind == "sunflower":
        F = sunflower(args.n, args.k, args.lam, args.m)
        params = {"n": args.n, "k": args.k, "lambda": args.lam, "m": args.m}
    else:
        plane = projective_plane(args.q)
        F = plane.lines
        params = {"q": args.q}
        if args.incidence:
            Path(args.incidence).write_text(plane.incidence_text(), encoding="utf-8")
    summary = summarize(F)
    text = format_family(F, comments=[f"{args.kind} {params}", f"{len(F)} blocks; {summary}"])
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        human = f"{len(F)} blocks written to {args.output}\n{summary}"
    else:
        human = text.rstrip("\n")
    payload = {"size": str(len(F)), "summary": summary, "family": text}
    _emit(args, RunRecord.new("construct", {"kind": args.kind, **{k: str(v) for k, v in params.items()}}, payload), human)
    return EXIT_OK


# -- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    F = read_family(args.family_file)
    checks: list[tuple[str, bool | None, str]] = []
    checks.append(("blocks", None, str(len(F))))
    if args.k is not None:
        checks.append(("uniform", is_uniform(F, args.k), f"k={args.k}"))
    if len(F) >= 2:
        checks.append(("intersection_sizes", None, _sizes_str(intersection_sizes(F))))
    if len(F):
        checks.append(("kernel", None, _set_str(kernel(F))))
    L = parse_l(args.L) if args.L else None
    if L is not None:
        checks.append(("l_intersecting", is_l_intersecting(F, L), f"L={L}"))
    l1 = args.l1 if args.l1 is not None else (L.l1 if L is not None else None)

    def lemma(name, fn):
        try:
            checks.append((name, *fn()))
        except (FamilyError, CapExceededError) as exc:
            checks.append((name, False, f"precondition failed: {exc}"))

    witness = None
    if args.helly or args.decompose == "helly":
        if args.k is None:
            raise UsageError("--helly needs -k")

        def helly():
            nonlocal witness
            witness = helly_witness(F, args.k)
            if witness is None:
                return True, f"kernel {_set_str(kernel(F))}; no Helly witness"
            ok = len(witness) <= args.k + 1 and not kernel(witness).mask
            return ok, f"witness of {len(witness)} blocks: " + " ".join(_set_str(b) for b in witness)
        lemma("helly", helly)
    if args.union:
        if args.k is None:
            raise UsageError("--union needs -k")

        def union():
            r = union_size_check(F, args.k)
            return r.holds, f"|union| = {r.union_size} <= {r.bound}"
        lemma("union", union)
    if args.trace:
        if l1 is None:
            raise UsageError("--trace needs --l1 or -L")
        block = BlockSet.of(int(x) for x in args.trace.split(","))

        def trace():
            r = trace_bound_check(F, block, l1)
            return r.holds, f"|Q & F| = {r.trace_size} >= {l1 + 1}"
        lemma("trace", trace)
    if args.decompose:
        if l1 is None:
            raise UsageError("--decompose needs --l1 or -L")

        def dec():
            if args.decompose == "helly":
                if witness is None:
                    raise FamilyError("no Helly witness to take M from (kernel nonempty)")
                M = witness.union()
            else:
                M = BlockSet.of(int(x) for x in args.decompose.split(","))
            parts = decompose(F, M, l1)
            covered = set().union(*(p.masks for p in parts.values())) if parts else set()
            ok = covered == set(F.masks)
            if L is not None and L.positive:
                rest = L.values[1:]
                ok = ok and all(is_l_intersecting(p, rest) for p in parts.values())
            return ok, f"M = {_set_str(M)}, {len(parts)} nonempty parts, cover {'exact' if covered == set(F.masks) else 'INCOMPLETE'}"
        lemma("decompose", dec)

    rows = [[name, "" if ok is None else ("pass" if ok else "FAIL"), detail] for name, ok, detail in checks]
    failed = any(ok is False for _, ok, _ in checks)
    payload = {"checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in checks], "ok": not failed}
    params = {"file": str(args.family_file), "k": args.k, "L": args.L}
    _emit(args, RunRecord.new("verify", params, payload), _table(rows, ["check", "result", "detail"]))
    return EXIT_VERIFY if failed else EXIT_OK


# -- solve --------------------------------------------------------------------

def cmd_solve(args) -> int:
    L = parse_l(args.L, allow_zero=False)
    workers = 1 if args.deterministic else args.workers
    params = {
        "n": str(args.n), "k": str(args.k), "L": [str(v) for v in L], "cap": str(args.cap),
        "enumerate": args.enumerate, "enum_cap": str(args.enum_cap), "anchor": not args.no_anchor,
        "workers": str(workers),
    }
    cache = _cache(args)
    record = cache.get("solve", params) if cache else None
    if record is None:
        try:
            cert = max_family(args.n, args.k, L, cap=args.cap, timeout=args.timeout_seconds,
                              workers=workers, anchor=not args.no_anchor)
        except SolverTimeout as exc:
            c = exc.certificate
            print(f"TIMEOUT: best family found has size {c.optimum} "
                  "(lower bound only, NOT optimal)", file=sys.stderr)
            if args.json:
                print(canonical_json({"timeout": True, "certificate": c.to_dict()}))
            return EXIT_RESOURCE
        payload = {"certificate": cert.to_dict()}
        try:
            main = bound_main(args.n, args.k, L)
            payload["main_bound"] = main.to_dict()
        except BoundError as exc:
            payload["main_bound"] = None
            payload["main_bound_error"] = str(exc)
        if args.enumerate:
            en = enumerate_maximum(args.n, args.k, L, args.enum_cap, vertex_cap=args.cap,
                                   timeout=args.timeout_seconds)
            payload["enumeration"] = {
                "count": str(len(en.families)),
                "complete": en.complete,
                "kernel_sizes": [str(len(kernel(f))) for f in en.families],
            }
        record = RunRecord.new("solve", params, payload)
        if cache:
            cache.put(record)
            cache.write_text(record.key, payload["certificate"]["witness"], suffix=".family")
    p = record.payload
    cert = p["certificate"]
    lines = [f"optimum {cert['optimum']}" + ("" if cert["optimal"] else " (NOT optimal)")]
    if cache:
        lines.append(f"witness: {cache.path(cache_key('solve', params), '.family')}")
    else:
        lines.append("witness:\n" + cert["witness"].rstrip("\n"))
    ub = cert["upper_bound_used"]
    if ub:
        lines.append(f"search stopped at bound: {ub['name']} = {ub['value']}")
    if p.get("main_bound"):
        mb = p["main_bound"]
        lines.append(f"optimum {cert['optimum']} vs main-bound {mb['value']} (applicable {mb['applicable']})")
    else:
        lines.append(f"main-bound not evaluable: {p.get('main_bound_error')}")
    if "enumeration" in p:
        e = p["enumeration"]
        dist = Counter(e["kernel_sizes"])
        lines.append(f"{e['count']} maximum families{'' if e['complete'] else ' (INCOMPLETE)'};"
                     f" kernel sizes {dict(sorted(dist.items()))}")
    lines.append(f"nodes explored {cert['nodes_explored']}, elapsed {cert['elapsed']:.3f}s")
    _emit(args, record, "\n".join(lines))
    return EXIT_OK


# -- scan ---------------------------------------------------------------------

def cmd_scan(args) -> int:
    L = parse_l(args.L, allow_zero=False)
    threshold = args.k * args.k - args.k + 1
    if args.n_from <= threshold:
        raise UsageError(f"n must exceed k^2-k+1 = {threshold} (got --from {args.n_from})")
    workers = 1 if args.deterministic else args.workers
    params = {
        "k": str(args.k), "L": [str(v) for v in L], "from": str(args.n_from), "to": str(args.n_to),
        "cap": str(args.cap), "enum_cap": str(args.enum_cap), "enumerate": not args.no_enumerate,
        "timeout": str(args.timeout_seconds),
    }
    cache = _cache(args)
    record = cache.get("scan", params) if cache else None
    if record is None:
        report = scan_conjecture(args.k, L, args.n_from, args.n_to, cap=args.cap, enum_cap=args.enum_cap,
                                 timeout=args.timeout_seconds, workers=workers,
                                 enumerate_optima=not args.no_enumerate)
        record = RunRecord.new("scan", params, report.to_dict())
        if cache and not any(r["error"] for r in record.payload["rows"]):
            cache.put(record)
    rows = []
    for r in record.payload["rows"]:
        ks = r["extremal_kernel_sizes"]
        dist = "" if ks is None else str(dict(sorted(Counter(ks).items())))
        rows.append([
            r["n"], r["optimum"] or "-", r["conjectured_bound"],
            {True: "yes", False: "NO", None: "-"}[r["bound_holds"]],
            {True: "yes", False: "no", None: "-"}[r["further_clause_applies"]],
            r["optima_count"] or "-", dist, r["conjecture_kernel_holds"], r["error"] or "",
        ])
    human = _table(rows, ["n", "optimum", "C(n-l1,s)", "bound_holds", "at_bound", "#optima",
                          "kernel sizes", "kernel_claim", "error"])
    human += f"\nmonotone optimum: {'yes' if record.payload['monotone'] else 'NO'}"
    _emit(args, record, human)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the machine-readable run record")
    common.add_argument("--cache-dir", default=None, help="cache directory (default $LINTERSECT_CACHE_DIR)")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    p = argparse.ArgumentParser(prog="lintersect", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", parents=[common], help="table of upper bounds")
    b.add_argument("-n", type=int, required=True)
    b.add_argument("-k", type=int, required=True)
    b.add_argument("-L", required=True, help="comma-separated intersection sizes")
    b.set_defaults(func=cmd_bound)

    c = sub.add_parser("construct", parents=[common], help="write a known family")
    c.add_argument("kind", choices=["star", "sunflower", "plane"])
    c.add_argument("-n", type=int)
    c.add_argument("-k", type=int)
    c.add_argument("-t", type=int)
    c.add_argument("-lambda", "--lambda", dest="lam", type=int)
    c.add_argument("-m", type=int)
    c.add_argument("-q", type=int)
    c.add_argument("-o", "--output", help="family file to write (default stdout)")
    c.add_argument("--incidence", help="for plane: also write 'point line' pairs here")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", parents=[common], help="check a family file")
    v.add_argument("family_file")
    v.add_argument("-k", type=int)
    v.add_argument("-L")
    v.add_argument("--l1", type=int, help="l1 for --trace/--decompose (default min L)")
    v.add_argument("--helly", action="store_true", help="search for a Helly witness")
    v.add_argument("--union", action="store_true", help="check the union-size lemma on the family")
    v.add_argument("--trace", metavar="BLOCK", help="check the trace lemma for BLOCK against the family")
    v.add_argument("--decompose", metavar="M", help="decompose over M (comma list, or 'helly')")
    v.set_defaults(func=cmd_verify)

    def solver_opts(sp):
        sp.add_argument("-k", type=int, required=True)
        sp.add_argument("-L", required=True)
        sp.add_argument("--cap", type=int, default=DEFAULT_VERTEX_CAP, help="vertex cap on C(n,k)")
        sp.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
        sp.add_argument("--timeout-seconds", type=float, default=None)
        sp.add_argument("--workers", type=int, default=1)
        sp.add_argument("--deterministic", action="store_true", help="force a single worker")

    s = sub.add_parser("solve", parents=[common], help="exact maximum family")
    s.add_argument("-n", type=int, required=True)
    solver_opts(s)
    s.add_argument("--enumerate", action="store_true", help="also list all maximum families")
    s.add_argument("--no-anchor", action="store_true", help="disable symmetry anchoring")
    s.set_defaults(func=cmd_solve)

    sc = sub.add_parser("scan", parents=[common], help="scan the conjecture over a range of n")
    solver_opts(sc)
    sc.add_argument("--from", dest="n_from", type=int, required=True)
    sc.add_argument("--to", dest="n_to", type=int, required=True)
    sc.add_argument("--no-enumerate", action="store_true", help="skip kernel checks")
    sc.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FamilyFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, FamilyError, BoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(args_usage(parser, args), file=sys.stderr)
        return EXIT_INVALID


def args_usage(parser, args) -> str:
    for action in parser._subparsers._group_actions:
        sp = action.choices.get(args.command)
        if sp is not None:
            return sp.format_usage().rstrip()
    return parser.format_usage().rstrip()


if __name__ == "__main__":
    sys.exit(main())
