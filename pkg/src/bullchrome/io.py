"""Graph serialization: JSON dicts and DIMACS .col text.

JSON wire format: {"n": int, "edges": [[u, v], ...]} with 0-based vertices.
DIMACS: "p edge n m" header plus "e u v" lines, 1-based on the wire.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .graph import Graph, make_graph


def graph_to_json_dict(G: Graph) -> dict:
    return {"n": G.n, "edges": [[u, v] for u, v in G.edges()]}


def graph_from_json_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        edges = [(int(u), int(v)) for u, v in d["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad graph JSON: {exc}") from exc
    return make_graph(n, edges)


def dumps_json(G: Graph) -> str:
    return json.dumps(graph_to_json_dict(G), separators=(",", ":"))


def loads_json(text: str) -> Graph:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    return graph_from_json_dict(d)


def dumps_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {G.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def loads_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "edges", "col"):
                raise ParseError(f"line {lineno}: bad problem line {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: bad edge line {line!r}")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise ParseError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ParseError("missing problem line")
    return make_graph(n, edges)


def loads(text: str, fmt: str) -> Graph:
    if fmt == "json":
        return loads_json(text)
    if fmt == "dimacs":
        return loads_dimacs(text)
    raise ParseError(f"unknown format {fmt!r}")


def dumps(G: Graph, fmt: str) -> str:
    if fmt == "json":
        return dumps_json(G)
    if fmt == "dimacs":
        return dumps_dimacs(G)
    raise ParseError(f"unknown format {fmt!r}")
