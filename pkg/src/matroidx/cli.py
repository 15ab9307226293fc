"""Command-line entry point.

Exit codes: 0 success, 1 usage or operational error, 2 a conjecture-relevant
finding (violation, missing exchange or cyclic order, diameter != rank).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from pathlib import Path

from . import __version__
from .basecobase import (
    build_graph,
    component_diameters,
    diameter,
    export_adjacency,
    find_cyclic_order,
    is_connected,
)
from .errors import MatroidError
from .exchange import (
    BasePair,
    ExchangeSequence,
    brute_force_serial_exchange,
    full_serial_exchange,
    pair_serial_exchange,
    verify_sequence,
)
from .harness import (
    RNG_NAME,
    CorpusSpec,
    disjoint_base_pairs,
    resolve_checks,
    run_property_suite,
    summarize,
    write_jsonl,
)
from .io import load_matroid

SCHEMA_VERSION = 1
EXIT_OK, EXIT_ERROR, EXIT_FINDING = 0, 1, 2

log = logging.getLogger("matroidx")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _labels(text):
    return [t for t in (s.strip() for s in text.split(",")) if t] if text else []


def _report(command, config, result, findings=(), timings=None, exit_code=0, findings_path=None):
    findings = list(findings)
    rep = {
        "schema_version": SCHEMA_VERSION,
        "tool": "matroidx",
        "version": __version__,
        "command": command,
        "config": config,
        "summary": summarize(findings),
        "result": result,
        "timings": timings or {},
        "exit_code": exit_code,
    }
    if findings_path is not None:
        rep["findings_path"] = str(findings_path)
    else:
        rep["findings"] = [f.to_json() for f in findings]
    return rep


def _load_pair(args):
    m = load_matroid(args.matroid)
    if args.A or args.B:
        if not (args.A and args.B):
            raise UsageError("--A and --B must be given together")
        return BasePair.from_labels(m, _labels(args.A), _labels(args.B))
    pairs = disjoint_base_pairs(m, 1)
    if not pairs:
        raise UsageError("matroid has no two disjoint bases")
    return pairs[0]


def _print_sequence(m, seq: ExchangeSequence, out):
    print(f"a_order: {' '.join(m.labels[x] for x in seq.a_order)}", file=out)
    print(f"b_order: {' '.join(m.labels[x] for x in seq.b_order)}", file=out)
    print("certificate:", file=out)
    for i, s in enumerate(seq.certificate):
        side = "A" if i % 2 == 0 else "B"
        print(f"  step {i // 2 + 1} {side}: {{{', '.join(m.label_list(s))}}}", file=out)


def cmd_exchange(args, out):
    p = _load_pair(args)
    m = p.matroid
    subset = _labels(args.subset)
    if args.full:
        if subset:
            raise UsageError("--full takes no --subset")
        seq = full_serial_exchange(p, fallback=args.fallback, max_steps=args.max_steps)
    else:
        ids = sorted(m.ids(subset))
        if len(ids) != len(subset):
            raise UsageError("--subset repeats an element")
        if args.brute:
            if not 1 <= len(ids) <= 4:
                raise UsageError("--brute needs a subset of size 1 to 4")
            seq = brute_force_serial_exchange(p, ids, max_steps=args.max_steps)
        else:
            if len(ids) != 2:
                raise UsageError("constructive mode needs a subset of exactly two elements"
                                 " (use --brute or --full)")
            seq = pair_serial_exchange(p, *ids)

    config = {"matroid": str(args.matroid), "A": p.labels()[0], "B": p.labels()[1],
              "subset": subset, "brute": args.brute, "full": args.full,
              "fallback": args.fallback, "max_steps": args.max_steps}
    if seq is None:
        result = {"found": False}
        code = EXIT_FINDING
    else:
        result = {"found": True, "route": seq.route, "sequence": seq.to_json(m)}
        code = EXIT_OK
        if args.verify:
            fresh = load_matroid(args.matroid)
            q = BasePair.from_labels(fresh, *p.labels())
            ok = verify_sequence(q, ExchangeSequence.from_json(fresh, seq.to_json(m)))
            result["verified"] = ok
            if not ok:
                code = EXIT_ERROR
    if args.json:
        json.dump(_report("exchange", config, result, exit_code=code), out, indent=2, sort_keys=True)
        print(file=out)
    elif seq is None:
        print("no serial symmetric exchange exists for this subset", file=out)
    else:
        _print_sequence(m, seq, out)
        if args.verify:
            print(f"verified: {result['verified']}", file=out)
    return code


def _load_config(path) -> dict:
    try:
        import tomllib
    except ModuleNotFoundError:
        import tomli as tomllib
    with open(path, "rb") as fh:
        raw = tomllib.load(fh)
    return {k.replace("-", "_"): v for k, v in raw.items()}


def _spec_from_args(args) -> tuple[CorpusSpec, list[str]]:
    cfg = _load_config(args.config) if args.config else {}
    checks = cfg.pop("checks", "all")
    flags = {
        "family": args.family, "max_rank": args.max_rank, "seed": args.seed,
        "max_n": args.max_n, "random_graphs": args.random_graphs,
        "max_vertices": args.max_vertices, "gf2_count": args.gf2_count,
        "pairs_per_matroid": args.pairs_per_matroid, "max_steps": args.max_steps,
        "graphs": _labels(args.graphs) or None,
        "gf2_ranks": [int(x) for x in _labels(args.gf2_ranks)] or None,
        "fixtures": args.fixture or None,
        "allow_large": args.allow_large or None,
    }
    cfg.update({k: v for k, v in flags.items() if v is not None})
    for k in ("graphs", "gf2_ranks", "fixtures"):
        if k in cfg:
            v = cfg[k]
            cfg[k] = tuple(_labels(v) if isinstance(v, str) else v)
    if args.checks is not None:
        checks = args.checks
    known = set(CorpusSpec.__dataclass_fields__)
    unknown = set(cfg) - known
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return CorpusSpec(**cfg), resolve_checks(checks)


def cmd_check(args, out):
    spec, checks = _spec_from_args(args)
    t0 = time.perf_counter()
    findings = run_property_suite(spec, checks)
    elapsed = time.perf_counter() - t0
    statuses = {f.status for f in findings}
    code = EXIT_FINDING if "violation" in statuses else EXIT_ERROR if "error" in statuses else EXIT_OK
    if args.out:
        write_jsonl(findings, args.out)
    config = {"spec": spec.to_json(), "checks": checks, "rng": RNG_NAME}
    result = {"instances": len({f.matroid["name"] for f in findings}), "findings": len(findings)}
    if args.json:
        rep = _report("check", config, result, findings, {"run_seconds": round(elapsed, 3)},
                      code, findings_path=args.out)
        json.dump(rep, out, indent=2, sort_keys=True)
        print(file=out)
    else:
        print(f"{result['instances']} instances, {len(findings)} findings "
              f"({elapsed:.2f}s, rng {RNG_NAME}, seed {spec.seed})", file=out)
        for name, row in summarize(findings).items():
            print(f"  {name:28s} pass {row['pass']:5d}  violation {row['violation']:3d}"
                  f"  error {row['error']:3d}", file=out)
        for f in findings:
            if f.status != "pass":
                msg = f.detail.get("message") or f.detail.get("error")
                print(f"  {f.status.upper()}: {f.check} on {f.matroid['name']}: {msg}", file=out)
    return code


def cmd_graph(args, out):
    m = load_matroid(args.matroid)
    g = build_graph(m)
    d = diameter(g)
    result = {"vertices": len(g.vertices), "edges": len(g.adjacency), "rank": g.rank,
              "connected": is_connected(g), "diameter": d}
    if d is None:
        result["component_diameters"] = component_diameters(g)
    if args.export:
        Path(args.export).write_text(export_adjacency(g), encoding="utf-8")
        result["export"] = str(args.export)
    code = EXIT_OK if d == g.rank else EXIT_FINDING
    if args.json:
        json.dump(_report("graph", {"matroid": str(args.matroid)}, result, exit_code=code),
                  out, indent=2, sort_keys=True)
        print(file=out)
    else:
        for k, v in result.items():
            print(f"{k}: {v}", file=out)
        if code == EXIT_FINDING:
            print("FINDING: diameter differs from the rank", file=out)
    return code


def cmd_cyclic(args, out):
    p = _load_pair(args)
    m = p.matroid
    order = find_cyclic_order(p, max_steps=args.max_steps)
    result = {"found": order is not None}
    if order is not None:
        result["order"] = [m.labels[x] for x in order.sequence]
    code = EXIT_OK if order is not None else EXIT_FINDING
    config = {"matroid": str(args.matroid), "A": p.labels()[0], "B": p.labels()[1]}
    if args.json:
        json.dump(_report("cyclic", config, result, exit_code=code), out, indent=2, sort_keys=True)
        print(file=out)
    elif order is None:
        print("FINDING: no cyclic base order exists", file=out)
    else:
        print("order: " + " ".join(result["order"]), file=out)
    return code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-steps", type=int, default=None)
    common.add_argument("--fallback", choices=["brute"], default=None,
                        help="degrade to exhaustive search if a construction fails")
    common.add_argument("--verify", action="store_true",
                        help="re-check printed certificates with a fresh oracle")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = _Parser(prog="matroidx", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"matroidx {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    ex = sub.add_parser("exchange", parents=[common], help="serial symmetric exchange")
    ex.add_argument("matroid")
    ex.add_argument("--A", required=True)
    ex.add_argument("--B", required=True)
    ex.add_argument("--subset", default="")
    ex.add_argument("--brute", action="store_true", help="exhaustive search (subset size <= 4)")
    ex.add_argument("--full", action="store_true", help="full exchange of A (rank <= 4)")

    ck = sub.add_parser("check", parents=[common], help="run the property suite over a corpus")
    ck.add_argument("--config")
    ck.add_argument("--family")
    ck.add_argument("--max-rank", type=int)
    ck.add_argument("--max-n", type=int)
    ck.add_argument("--checks")
    ck.add_argument("--graphs")
    ck.add_argument("--random-graphs", type=int)
    ck.add_argument("--max-vertices", type=int)
    ck.add_argument("--gf2-ranks")
    ck.add_argument("--gf2-count", type=int)
    ck.add_argument("--pairs-per-matroid", type=int)
    ck.add_argument("--fixture", action="append")
    ck.add_argument("--allow-large", action="store_true")
    ck.add_argument("--out", help="write findings as JSON lines")

    gr = sub.add_parser("graph", parents=[common], help="base-cobase graph statistics")
    gr.add_argument("matroid")
    gr.add_argument("--export")

    cy = sub.add_parser("cyclic", parents=[common], help="search for a cyclic base order")
    cy.add_argument("matroid")
    cy.add_argument("--A")
    cy.add_argument("--B")
    return parser


COMMANDS = {"exchange": cmd_exchange, "check": cmd_check, "graph": cmd_graph,
            "cyclic": cmd_cyclic}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, MatroidError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            print(f"witness: {json.dumps(witness, sort_keys=True)}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
