"""Command-line surface.

Subcommands: gen, detect, decide, color, oracle, verify, info.  JSON goes to
stdout (one document per run, stable schema), human prose to stderr.

decide exit codes: 0 colorable, 2 obstruction, 3 precondition violation,
4 desk cap exceeded, 1 parse/usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, generators, io, verify
from .deciders import DECIDERS, check_freeness
from .errors import (
    BullchromeError,
    DeskCapExceeded,
    DisconnectedInput,
    FreenessViolation,
    ParseError,
    TimeBudgetExceeded,
)
from .graph import Graph
from .oracle import (
    chromatic_number,
    clique_number,
    exact_coloring,
    independence_number,
    max_matching,
)
from .graph import complement
from .patterns import (
    find_fixed_pattern,
    find_odd_antihole,
    find_odd_hole,
    find_odd_wheel,
    find_spindle,
    parse_pattern_token,
)

FAMILIES = sorted(f"{fam}" for _, fam in DECIDERS)


def _read_graph(path: str, fmt: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "dimacs"
    return io.loads(text, fmt)


def _emit(doc: dict) -> None:
    print(json.dumps(doc, separators=(",", ":"), sort_keys=True))


def _gen_spec(spec: str) -> Graph:
    """family:param graph specs, e.g. cycle:7, antihole:9, complete:2,
    wheel:5, spindle:2, expansion:2,1,2,1,1."""
    name, _, arg = spec.partition(":")
    name = name.strip().lower()
    if name == "cycle":
        return generators.cycle(int(arg))
    if name == "antihole":
        return generators.antihole(int(arg))
    if name == "complete":
        return generators.complete(int(arg))
    if name == "wheel":
        return generators.wheel(int(arg))
    if name == "spindle":
        return generators.spindle(int(arg))
    if name == "expansion":
        return generators.build_expansion(tuple(int(x) for x in arg.split(",")))
    raise ParseError(f"unknown generator spec {spec!r}")


def cmd_gen(args) -> int:
    from .graph import join

    if args.kind == "spindle":
        G = generators.spindle(int(args.args[0]))
    elif args.kind == "cycle":
        G = generators.cycle(int(args.args[0]))
    elif args.kind == "antihole":
        G = generators.antihole(int(args.args[0]))
    elif args.kind == "complete":
        G = generators.complete(int(args.args[0]))
    elif args.kind == "wheel":
        G = generators.wheel(int(args.args[0]))
    elif args.kind == "expansion":
        G = generators.build_expansion(
            tuple(int(x) for x in args.args[0].split(",")))
    elif args.kind == "join":
        if len(args.args) < 2:
            raise ParseError("gen join needs two graph specs")
        G = _gen_spec(args.args[0])
        for spec in args.args[1:]:
            G = join(G, _gen_spec(spec))
    elif args.kind == "random":
        if args.n is None or args.free is None:
            raise ParseError("gen random needs --n and --free")
        G = generators.random_hfree(args.n, args.p, args.free.split(","),
                                    seed=args.seed, max_tries=args.max_tries)
        if G is None:
            print("generator exhausted its attempts", file=sys.stderr)
            return 1
    else:
        raise ParseError(f"unknown generator {args.kind!r}")
    sys.stdout.write(io.dumps(G, args.format)
                     + ("\n" if args.format == "json" else ""))
    return 0


def cmd_detect(args) -> int:
    G = _read_graph(args.input, args.format)
    tok = args.pattern.strip().lower().replace("-", "_")
    if tok == "odd_hole":
        w = find_odd_hole(G, args.min_len, args.budget)
    elif tok == "odd_antihole":
        w = find_odd_antihole(G, args.min_len, args.budget)
    elif tok == "spindle":
        w = find_spindle(G, args.budget)
    elif tok == "odd_wheel":
        w = find_odd_wheel(G, budget=args.budget)
    else:
        kind, r = parse_pattern_token(args.pattern)
        w = find_fixed_pattern(G, kind, r)
    _emit({"schema": 1, "found": w is not None,
           "witness": w.to_json_dict() if w else None})
    return 0


def cmd_decide(args) -> int:
    G = _read_graph(args.input, args.format)
    key = (args.k, args.family)
    if key not in DECIDERS:
        supported = ", ".join(f"({k},{f})" for k, f in sorted(DECIDERS))
        print(f"unsupported (k, family) pair {key}; supported: {supported}",
              file=sys.stderr)
        return 1
    try:
        verdict = DECIDERS[key](G, args.budget)
    except FreenessViolation as exc:
        _emit({"schema": 1, "error": "freeness", "witness":
               exc.witness.to_json_dict()})
        return 3
    except DisconnectedInput as exc:
        _emit({"schema": 1, "error": "disconnected", "detail": str(exc)})
        return 3
    except (DeskCapExceeded, TimeBudgetExceeded) as exc:
        _emit({"schema": 1, "error": "desk_cap", "detail": str(exc)})
        return 4
    doc = {"schema": 1}
    doc.update(verdict.to_json_dict())
    _emit(doc)
    return 0 if verdict.colorable else 2


def cmd_color(args) -> int:
    G = _read_graph(args.input, args.format)
    try:
        col = exact_coloring(G, args.k, args.budget)
    except DeskCapExceeded as exc:
        _emit({"schema": 1, "error": "desk_cap", "detail": str(exc)})
        return 4
    _emit({"schema": 1, "k": args.k,
           "coloring": list(col.colors) if col else None})
    return 0 if col else 2


def cmd_oracle(args) -> int:
    G = _read_graph(args.input, args.format)
    try:
        doc = {
            "schema": 1,
            "chi": chromatic_number(G, budget=args.budget),
            "omega": clique_number(G, args.budget),
            "alpha": independence_number(G, args.budget),
            "beta0_complement": max_matching(complement(G)),
        }
    except DeskCapExceeded as exc:
        _emit({"schema": 1, "error": "desk_cap", "detail": str(exc)})
        return 4
    _emit(doc)
    return 0


def cmd_verify(args) -> int:
    report = verify.run_suite(
        args.theorem,
        n_max=args.n_max,
        seeds=args.seeds,
        seed0=args.seed0,
        jobs=args.jobs,
        sizes_max=args.sizes_max,
        p_values=tuple(int(x) for x in args.p.split(",")),
        k_values=tuple(int(x) for x in args.k_values.split(",")),
        sample_p9=args.sample_p9,
    )
    print(json.dumps(report, separators=(",", ":"), sort_keys=True))
    ok = not report["failures"]
    print(f"{report['suite']}: {report['agreements']}/{report['instances']} "
          f"agree, {len(report['failures'])} failures, "
          f"{report['desk_caps']} desk caps", file=sys.stderr)
    return 0 if ok else 1


def cmd_info(args) -> int:
    from .oracle import DEFAULT_ORACLE_BUDGET
    from .patterns import DEFAULT_PATTERN_BUDGET, DESK_CAP

    _emit({
        "schema": 1,
        "version": __version__,
        "families": sorted(f"{k}:{fam}" for k, fam in DECIDERS),
        "desk_cap": DESK_CAP,
        "pattern_budget": DEFAULT_PATTERN_BUDGET,
        "oracle_budget": DEFAULT_ORACLE_BUDGET,
        "budget_env": "BULLCHROME_BUDGET",
    })
    return 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="bullchrome",
        description="k-colorability deciders with certificates for bull-free "
                    "graph families")
    sub = top.add_subparsers(dest="command", required=True)

    def add_io(p, needs_input=True):
        if needs_input:
            p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", default="auto",
                       choices=("auto", "json", "dimacs"))
        p.add_argument("--budget", type=int, default=None,
                       help="search node budget override")

    g = sub.add_parser("gen", help="generate a named graph")
    g.add_argument("kind", choices=("cycle", "antihole", "complete", "wheel",
                                    "spindle", "expansion", "join", "random"))
    g.add_argument("args", nargs="*", help="generator arguments")
    g.add_argument("--format", default="json", choices=("json", "dimacs"))
    g.add_argument("--n", type=int, default=None)
    g.add_argument("--p", type=float, default=0.5)
    g.add_argument("--free", default=None,
                   help="comma list of forbidden patterns, e.g. bull,claw")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-tries", type=int, default=100)
    g.set_defaults(fn=cmd_gen)

    d = sub.add_parser("detect", help="find a named induced pattern")
    add_io(d)
    d.add_argument("--pattern", required=True,
                   help="bull|claw|chair|c5|kN|odd-hole|odd-antihole|"
                        "spindle|odd-wheel")
    d.add_argument("--min-len", type=int, default=5)
    d.set_defaults(fn=cmd_detect)

    dc = sub.add_parser("decide", help="k-colorability with certificates")
    add_io(dc)
    dc.add_argument("--k", type=int, required=True)
    dc.add_argument("--family", required=True,
                    help="bull-claw | bull-chair | bull-chair-c5free | "
                         "bull-claw-c5free")
    dc.set_defaults(fn=cmd_decide)

    co = sub.add_parser("color", help="exact k-coloring or refutation")
    add_io(co)
    co.add_argument("--k", type=int, required=True)
    co.set_defaults(fn=cmd_color)

    orc = sub.add_parser("oracle", help="exact chi/omega/alpha/matching")
    add_io(orc)
    orc.set_defaults(fn=cmd_oracle)

    v = sub.add_parser("verify", help="seeded verification suites")
    v.add_argument("theorem", choices=verify.THEOREMS)
    v.add_argument("--n-max", type=int, default=11)
    v.add_argument("--seeds", type=int, default=500)
    v.add_argument("--seed0", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--sizes-max", type=int, default=3)
    v.add_argument("--p", default="5,7", help="cycle lengths for thm4")
    v.add_argument("--k-values", default="3,4,5")
    v.add_argument("--sample-p9", type=int, default=200)
    v.set_defaults(fn=cmd_verify)

    i = sub.add_parser("info", help="version, caps and budgets")
    i.set_defaults(fn=cmd_info)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 1
    except BullchromeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
