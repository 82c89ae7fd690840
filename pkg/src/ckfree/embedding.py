"""Simple planar graphs with combinatorial embeddings (rotation systems).

A graph is stored as one neighbor tuple per vertex.  The tuple order is the
cyclic order of edges around the vertex; faces are traced with the rule
"after arriving at v from u, leave along the neighbor following u in v's
rotation".  The unbounded face is designated by a directed edge lying on it.

Rotation tuples are cyclic, but operations keep the concrete linearization
deterministic: `delete_edge` cuts each affected rotation at the gap left by
the removed edge, which is exactly what the gluing step of the block
construction needs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphStructureError(ValueError):
    """A malformed embedding, or an operation that would produce one."""


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of one face, as a cyclic vertex sequence."""

    boundary: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.boundary)

    def directed_edges(self) -> list[tuple[int, int]]:
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class EmbeddedGraph:
    """Immutable simple connected graph with a rotation-system embedding.

    outer_edge is a directed edge (u, v) whose face walk is the unbounded
    face.  All mutating-style operations return new graphs.
    """

    rotations: tuple[tuple[int, ...], ...]
    outer_edge: tuple[int, int]

    @property
    def n(self) -> int:
        return len(self.rotations)

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.rotations[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rotations[u] if u < v]

    # -- validity -----------------------------------------------------------

    def validate(self) -> None:
        """Check simplicity, symmetry, connectivity and Euler's formula."""
        n = self.n
        nbr_sets = []
        for v, rot in enumerate(self.rotations):
            s = set(rot)
            if v in s:
                raise GraphStructureError(f"loop at vertex {v}")
            if len(s) != len(rot):
                raise GraphStructureError(f"parallel edge at vertex {v}")
            nbr_sets.append(s)
        for v, rot in enumerate(self.rotations):
            for u in rot:
                if not 0 <= u < n:
                    raise GraphStructureError(f"neighbor {u} of {v} out of range")
                if v not in nbr_sets[u]:
                    raise GraphStructureError(f"asymmetric adjacency {v}->{u}")
        if n > 1 and not self._connected():
            raise GraphStructureError("graph is not connected")
        u, v = self.outer_edge
        if n >= 2 and not self.has_edge(u, v):
            raise GraphStructureError("outer-face edge is not an edge of the graph")
        e = self.edge_count
        f = len(self.face_walks())
        if n >= 1 and n - e + f != 2:
            raise GraphStructureError(
                f"Euler check failed: V={n} E={e} F={f} gives {n - e + f}"
            )

    def _connected(self) -> bool:
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            v = stack.pop()
            for u in self.rotations[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    stack.append(u)
        return count == self.n

    # -- faces --------------------------------------------------------------

    def _succ_index(self) -> list[dict[int, int]]:
        return [{u: i for i, u in enumerate(rot)} for rot in self.rotations]

    def trace_face(self, start: tuple[int, int]) -> FaceWalk:
        """Face walk containing the directed edge `start`."""
        pos = self._succ_index()
        walk = []
        a, b = start
        while True:
            walk.append(a)
            rot = self.rotations[b]
            try:
                i = pos[b][a]
            except KeyError:
                raise GraphStructureError(f"({a},{b}) is not a directed edge")
            a, b = b, rot[(i + 1) % len(rot)]
            if (a, b) == start:
                break
        return FaceWalk(tuple(walk))

    def face_walks(self) -> list[FaceWalk]:
        """All face walks; every directed edge lies on exactly one."""
        pos = self._succ_index()
        seen: set[tuple[int, int]] = set()
        walks: list[FaceWalk] = []
        for v in range(self.n):
            for w in self.rotations[v]:
                if (v, w) in seen:
                    continue
                walk = []
                a, b = v, w
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    rot = self.rotations[b]
                    a, b = b, rot[(pos[b][a] + 1) % len(rot)]
                walks.append(FaceWalk(tuple(walk)))
        return walks

    def outer_face(self) -> FaceWalk:
        return self.trace_face(self.outer_edge)

    def _is_face(self, walk: Sequence[int]) -> bool:
        pos = self._succ_index()
        m = len(walk)
        for i in range(m):
            p, q, r = walk[i], walk[(i + 1) % m], walk[(i + 2) % m]
            if q not in pos[p]:
                return False
            rot = self.rotations[q]
            if rot[(pos[q][p] + 1) % len(rot)] != r:
                return False
        return True


def face_walks(g: EmbeddedGraph) -> list[FaceWalk]:
    return g.face_walks()


def is_triangulation(g: EmbeddedGraph) -> bool:
    """True iff every face, the outer one included, is a triangle."""
    if g.n < 3:
        return False
    if not all(len(f) == 3 for f in g.face_walks()):
        return False
    if g.edge_count != 3 * g.n - 6:
        raise GraphStructureError("all faces triangular but E != 3V-6")
    return True


def is_near_triangulation(g: EmbeddedGraph, outer_len: int) -> bool:
    """True iff the outer face has the given length and every other face is
    a triangle."""
    outer = set(g.outer_face().directed_edges())
    for f in g.face_walks():
        if f.directed_edges()[0] in outer:
            if len(f) != outer_len:
                return False
        elif len(f) != 3:
            return False
    return True


def add_vertex_in_face(
    g: EmbeddedGraph, f: FaceWalk | Sequence[int]
) -> tuple[EmbeddedGraph, int]:
    """Insert a new degree-3 vertex inside the triangular face f.

    Returns the new graph and the id of the new vertex (always g.n).
    """
    walk = tuple(f.boundary if isinstance(f, FaceWalk) else f)
    if len(walk) != 3:
        raise GraphStructureError("can only subdivide a triangular face")
    if not g._is_face(walk):
        raise GraphStructureError(f"{walk} is not a face of the graph")
    outer = g.outer_face().directed_edges()
    if (walk[0], walk[1]) in outer:
        raise GraphStructureError("refusing to subdivide the outer face")
    a, b, c = walk
    new = g.n
    rots = [list(r) for r in g.rotations]
    # for each directed edge (p, q) of the walk, the new vertex follows p
    # in q's rotation; its own rotation is the reversed walk
    for p, q in ((a, b), (b, c), (c, a)):
        rots[q].insert(rots[q].index(p) + 1, new)
    rots.append([c, b, a])
    return (
        EmbeddedGraph(tuple(tuple(r) for r in rots), g.outer_edge),
        new,
    )


def add_edge_in_face(g: EmbeddedGraph, u: int, v: int) -> EmbeddedGraph:
    """Add the chord u-v inside the face containing both vertices."""
    if g.has_edge(u, v) or u == v:
        raise GraphStructureError(f"cannot add chord {u}-{v}")
    for f in g.face_walks():
        if u in f.boundary and v in f.boundary:
            walk = f.boundary
            break
    else:
        raise GraphStructureError(f"{u} and {v} share no face")
    rots = [list(r) for r in g.rotations]
    _insert_chord(rots, walk, u, v)
    return EmbeddedGraph(tuple(tuple(r) for r in rots), g.outer_edge)


def _insert_chord(
    rots: list[list[int]], walk: Sequence[int], u: int, v: int
) -> None:
    # each endpoint receives the other right after its predecessor on the walk
    m = len(walk)
    for a, b in ((u, v), (v, u)):
        pred = walk[(walk.index(a) - 1) % m]
        rots[a].insert(rots[a].index(pred) + 1, b)


def delete_edge(g: EmbeddedGraph, u: int, v: int) -> EmbeddedGraph:
    """Delete edge u-v, merging its two incident faces.

    The rotations at u and v are re-linearized to start just after the
    removed neighbor, so the cut sits at the merged-face gap.
    """
    if not g.has_edge(u, v):
        raise GraphStructureError(f"edge {u}-{v} not present")
    rots = list(g.rotations)
    for a, b in ((u, v), (v, u)):
        rot = list(rots[a])
        i = rot.index(b)
        rots[a] = tuple(rot[i + 1 :] + rot[:i])
    outer_edge = g.outer_edge
    if set(outer_edge) == {u, v}:
        walk = g.outer_face()
        for e in walk.directed_edges():
            if set(e) != {u, v}:
                outer_edge = e
                break
        else:
            raise GraphStructureError("outer face has no surviving edge")
    return EmbeddedGraph(tuple(rots), outer_edge)


def identify_vertices(
    graphs: Sequence[EmbeddedGraph],
    groups: Sequence[Sequence[tuple[int, int]]],
) -> tuple[EmbeddedGraph, list[dict[int, int]]]:
    """Disjoint union of graphs, merging each group of (graph, vertex) pairs
    into one vertex.

    The merged vertex's rotation concatenates the member rotations in group
    order (each member contributing its stored cyclic interval).  Group g
    becomes vertex g; the remaining vertices follow in graph-major order.
    Returns the glued graph and one old->new id map per input graph.

    Raises GraphStructureError if the identification would create a loop or
    a parallel edge.
    """
    where: dict[tuple[int, int], int] = {}
    for gi, members in enumerate(groups):
        for gr, v in members:
            if not 0 <= v < graphs[gr].n:
                raise GraphStructureError(f"group member ({gr},{v}) out of range")
            if (gr, v) in where:
                raise GraphStructureError(f"vertex ({gr},{v}) in two groups")
            where[(gr, v)] = gi

    maps: list[dict[int, int]] = [dict() for _ in graphs]
    next_id = len(groups)
    for gr, g in enumerate(graphs):
        for v in range(g.n):
            if (gr, v) in where:
                maps[gr][v] = where[(gr, v)]
            else:
                maps[gr][v] = next_id
                next_id += 1

    rots: list[list[int]] = [[] for _ in range(next_id)]
    for gi, members in enumerate(groups):
        for gr, v in members:
            rots[gi].extend(maps[gr][u] for u in graphs[gr].rotations[v])
    for gr, g in enumerate(graphs):
        for v in range(g.n):
            if (gr, v) not in where:
                rots[maps[gr][v]] = [maps[gr][u] for u in g.rotations[v]]

    for v, rot in enumerate(rots):
        if v in rot:
            raise GraphStructureError(f"identification creates a loop at {v}")
        if len(set(rot)) != len(rot):
            raise GraphStructureError(f"identification creates a parallel edge at {v}")

    u0, v0 = graphs[0].outer_edge
    outer_edge = (maps[0][u0], maps[0][v0])
    return EmbeddedGraph(tuple(tuple(r) for r in rots), outer_edge), maps


def triangle() -> EmbeddedGraph:
    """The 3-cycle with outer face (0, 1, 2)."""
    return EmbeddedGraph(((1, 2), (2, 0), (0, 1)), (0, 1))
