"""Serialization: graph6 for simple graphs, a JSON dialect for weighted graphs.

graph6 is the published header-less format restricted to the single-byte size
range n <= 62: one byte n+63, then the upper triangle of the adjacency matrix
in column order, packed big-endian six bits per byte, each byte offset by 63.
graph6 cannot carry loops or weights, hence the JSON dialect with rationals
serialized as "p/q" strings.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import guards
from .errors import FormatError, ValidationError
from .graphs import Graph
from .weighted import WeightedGraph


def write_graph6(g: Graph) -> str:
    if g.n > guards.GRAPH6_MAX_N:
        raise ValidationError(f"graph6 single-byte size caps at {guards.GRAPH6_MAX_N} vertices")
    out = [chr(g.n + 63)]
    masks = g.masks
    bits = 0
    nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            bits = (bits << 1) | ((masks[i] >> j) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    data = text.rstrip("\n")
    if not data:
        raise FormatError("empty graph6 string", 0)
    first = ord(data[0])
    if not 63 <= first <= 63 + guards.GRAPH6_MAX_N:
        raise FormatError(f"bad size byte {data[0]!r} (only n <= {guards.GRAPH6_MAX_N} supported)", 0)
    n = first - 63
    need = (n * (n - 1) // 2 + 5) // 6
    if len(data) - 1 != need:
        raise FormatError(f"expected {need} edge bytes for n={n}, got {len(data) - 1}", min(len(data), need + 1))
    bits = []
    for k, ch in enumerate(data[1:], start=1):
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise FormatError(f"byte {ch!r} outside graph6 range", k)
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    if any(bits[pos:]):
        raise FormatError("nonzero padding bits", len(data) - 1)
    return Graph(n, edges)


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _parse_fraction(s, where):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"bad rational {s!r} in {where}", 0) from exc


def write_weighted_json(w: WeightedGraph) -> str:
    payload = {
        "n": w.n,
        "edges": [list(e) for e in w.edges],
        "loops": list(w.loops),
        "vw": [_fraction_str(w.vertex_weights[v]) for v in range(w.n)],
        "ew": [_fraction_str(w.edge_weights[e]) for e in w.edges],
        "lw": [_fraction_str(w.loop_weights[v]) for v in w.loops],
    }
    return json.dumps(payload, separators=(", ", ": "))


def parse_weighted_json(text: str) -> WeightedGraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(payload, dict):
        raise FormatError("top level must be an object", 0)
    for key in ("n", "edges", "loops", "vw", "ew", "lw"):
        if key not in payload:
            raise FormatError(f"missing key {key!r}", 0)
    n = payload["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise FormatError("n must be an integer", 0)
    if not all(isinstance(payload[k], list) for k in ("edges", "loops", "vw", "ew", "lw")):
        raise FormatError("edges/loops/vw/ew/lw must be arrays", 0)
    edges = []
    for e in payload["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise FormatError(f"bad edge entry {e!r}", 0)
        edges.append(tuple(e))
    loops = list(payload["loops"])
    if not all(isinstance(v, int) for v in loops):
        raise FormatError("loops must list vertex indices", 0)
    if len(payload["vw"]) != n:
        raise FormatError("vw must list one weight per vertex", 0)
    if len(payload["ew"]) != len(edges):
        raise FormatError("ew must parallel edges", 0)
    if len(payload["lw"]) != len(loops):
        raise FormatError("lw must parallel loops", 0)
    try:
        return WeightedGraph(
            n,
            edges,
            loops,
            {v: _parse_fraction(s, "vw") for v, s in enumerate(payload["vw"])},
            {e: _parse_fraction(s, "ew") for e, s in zip(edges, payload["ew"])},
            {v: _parse_fraction(s, "lw") for v, s in zip(loops, payload["lw"])},
        )
    except ValidationError as exc:
        raise FormatError(str(exc), 0) from exc
