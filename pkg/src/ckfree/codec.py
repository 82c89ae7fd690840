"""Graph serialization: graph6 for abstract graphs, a rotation-preserving
text format for embedded graphs, and DOT export.

The rotation format ("planar-rotation v1") is line oriented:

    planar-rotation v1
    n <vertex count>
    v <id>: <neighbor ids in rotation order>
    outer <u> <v>
    label <name> <id>

One `v` line per vertex, in id order.  `outer` names the directed edge on
the unbounded face.  `label` lines are optional and carry the distinguished
vertex names (x, y, w1, z1, ...).
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .embedding import EmbeddedGraph, GraphStructureError


class ParseError(ValueError):
    """Malformed codec input; carries the offending byte offset or line."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


# -- graph6 ------------------------------------------------------------------


def _g6_size_header(n: int) -> str:
    if n < 0:
        raise GraphStructureError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(
            chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0)
        )
    raise GraphStructureError(f"n={n} too large for graph6")


def encode_graph6(g: EmbeddedGraph | tuple[int, Iterable[tuple[int, int]]]) -> str:
    """graph6 text of a labeled simple graph (embedding is not carried)."""
    if isinstance(g, EmbeddedGraph):
        n, edges = g.n, g.edges()
    else:
        n, edges = g[0], list(g[1])
    adj = set()
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphStructureError(f"bad edge ({u},{v})")
        adj.add((min(u, v), max(u, v)))
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = [
        chr(63 + (bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
                  | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]))
        for i in range(0, len(bits), 6)
    ]
    return _g6_size_header(n) + "".join(chunks)


def decode_graph6(text: str) -> tuple[int, list[tuple[int, int]]]:
    """(n, sorted edge list) from graph6 text."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 input", 0)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"character {ch!r} outside graph6 range", off)
    pos = 0
    if s[0] != "~":
        n = ord(s[0]) - 63
        pos = 1
    elif len(s) >= 2 and s[1] != "~":
        if len(s) < 4:
            raise ParseError("truncated extended size header", len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
    else:
        if len(s) < 8:
            raise ParseError("truncated extended size header", len(s))
        n = 0
        for ch in s[2:8]:
            n = n << 6 | (ord(ch) - 63)
        pos = 8
    nbits = n * (n - 1) // 2
    expected = pos + (nbits + 5) // 6
    if len(s) != expected:
        raise ParseError(
            f"graph6 body for n={n} must be {expected} bytes, got {len(s)}",
            min(len(s), expected),
        )
    bits = []
    for ch in s[pos:]:
        val = ord(ch) - 63
        bits.extend((val >> sh) & 1 for sh in (5, 4, 3, 2, 1, 0))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return n, sorted(edges)


# -- rotation format ---------------------------------------------------------

ROTATION_FORMAT_HEADER = "planar-rotation v1"


def encode_planar(g: EmbeddedGraph, labels: Mapping[str, int] | None = None) -> str:
    lines = [ROTATION_FORMAT_HEADER, f"n {g.n}"]
    for v, rot in enumerate(g.rotations):
        lines.append(f"v {v}: " + " ".join(str(u) for u in rot))
    lines.append(f"outer {g.outer_edge[0]} {g.outer_edge[1]}")
    for name in sorted(labels or {}):
        lines.append(f"label {name} {labels[name]}")
    return "\n".join(lines) + "\n"


def decode_planar(text: str) -> tuple[EmbeddedGraph, dict[str, int]]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != ROTATION_FORMAT_HEADER:
        raise ParseError(f"missing '{ROTATION_FORMAT_HEADER}' header line")

    def fail(lineno: int, msg: str):
        raise ParseError(f"line {lineno + 1}: {msg}")

    n = None
    rotations: dict[int, tuple[int, ...]] = {}
    outer = None
    labels: dict[str, int] = {}
    for ln, raw in enumerate(lines[1:], start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] == "n":
                n = int(parts[1])
            elif parts[0] == "v":
                v = int(parts[1].rstrip(":"))
                rotations[v] = tuple(int(t) for t in parts[2:])
            elif parts[0] == "outer":
                outer = (int(parts[1]), int(parts[2]))
            elif parts[0] == "label":
                labels[parts[1]] = int(parts[2])
            else:
                fail(ln, f"unknown record {parts[0]!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise
            fail(ln, f"malformed record: {raw!r}")
    if n is None:
        raise ParseError("missing 'n' record")
    if outer is None:
        raise ParseError("missing 'outer' record")
    if sorted(rotations) != list(range(n)):
        raise ParseError("vertex records do not cover 0..n-1 exactly")
    g = EmbeddedGraph(tuple(rotations[v] for v in range(n)), outer)
    try:
        g.validate()
    except GraphStructureError as exc:
        raise ParseError(f"inconsistent embedding: {exc}")
    for name, v in labels.items():
        if not 0 <= v < n:
            raise ParseError(f"label {name} points at missing vertex {v}")
    return g, labels


# -- DOT ----------------------------------------------------------------------


def export_dot(g: EmbeddedGraph, labels: Mapping[str, int] | None = None) -> str:
    """Deterministic DOT text; hub vertices x and y are double circled."""
    by_vertex: dict[int, list[str]] = {}
    for name, v in (labels or {}).items():
        by_vertex.setdefault(v, []).append(name)
    lines = ["graph H {", "  node [shape=circle];"]
    for v in range(g.n):
        names = sorted(by_vertex.get(v, []))
        attrs = []
        if names:
            attrs.append(f'label="{v}:{",".join(names)}"')
        if any(nm in ("x", "y") for nm in names):
            attrs.append("shape=doublecircle")
        lines.append(f"  {v}" + (f" [{', '.join(attrs)}]" if attrs else "") + ";")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
