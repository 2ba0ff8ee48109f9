"""Finite simplicial graphs and the primitive operations every formula consumes.

Vertices are opaque strings with a stable lexicographic order; all
downstream tie-breaking (class representatives, component order, report
arrays) derives from it, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(Exception):
    """Base class for graph-layer failures."""


class UnknownVertexError(GraphError):
    pass


class NotAdmissibleError(GraphError):
    """The operation needs a connected, triangle-free graph with >= 2 edges."""


class ParseError(GraphError):
    pass


class SizeLimitError(GraphError):
    """An enumeration was asked to run beyond its configured size limit."""


class InvariantViolation(RuntimeError):
    """A structural fact the theory guarantees failed to hold.

    Raising this means either the implementation is wrong or the input
    escaped the admissibility gate; it is never silently ignored.
    """


class SimplicialGraph:
    """Finite simplicial graph: no loops, no multi-edges, symmetric adjacency.

    Immutable after construction; safe for unrestricted concurrent use.
    """

    __slots__ = ("vertices", "edges", "_adj", "_index", "_validation", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]]):
        verts = set(str(v) for v in vertices)
        edge_set = set()
        for e in edges:
            u, v = str(e[0]), str(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u!r}")
            verts.add(u)
            verts.add(v)
            edge_set.add((u, v) if u < v else (v, u))
        self.vertices: tuple[str, ...] = tuple(sorted(verts))
        self.edges: tuple[tuple[str, str], ...] = tuple(sorted(edge_set))
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[str, frozenset[str]] = {v: frozenset(ns) for v, ns in adj.items()}
        self._index: dict[str, int] = {v: i for i, v in enumerate(self.vertices)}
        self._validation: ValidationReport | None = None
        self._hash = hash((self.vertices, self.edges))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SimplicialGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"SimplicialGraph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def index(self, v: str) -> int:
        self._check_vertex(v)
        return self._index[v]

    def _check_vertex(self, v: str) -> None:
        if v not in self._index:
            raise UnknownVertexError(f"unknown vertex {v!r}")

    def adjacent(self, u: str, v: str) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._adj[u]

    def degree(self, v: str) -> int:
        self._check_vertex(v)
        return len(self._adj[v])

    def link(self, v: str) -> frozenset[str]:
        """Open link: the neighbours of v, never containing v itself."""
        self._check_vertex(v)
        return self._adj[v]

    def star(self, v: str) -> frozenset[str]:
        """Closed star: link(v) together with v."""
        self._check_vertex(v)
        return self._adj[v] | {v}

    def perp(self, theta: Iterable[str]) -> frozenset[str]:
        """Intersection of the closed stars of all vertices of theta.

        These are exactly the generators commuting with everything in theta.
        theta must be nonempty.
        """
        verts = list(theta)
        if not verts:
            raise GraphError("perp of an empty vertex set is undefined")
        result: frozenset[str] | None = None
        for v in verts:
            st = self.star(v)
            result = st if result is None else result & st
        assert result is not None
        return result

    def is_leaf(self, v: str) -> bool:
        return self.degree(v) == 1

    def leaves(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.degree(v) == 1)

    def interior_vertices(self) -> tuple[str, ...]:
        return tuple(v for v in self.vertices if self.degree(v) >= 2)

    def _components_of(self, verts: set[str]) -> tuple[frozenset[str], ...]:
        """Connected components of the induced subgraph, ordered by least member."""
        seen: set[str] = set()
        comps = []
        for start in sorted(verts):
            if start in seen:
                continue
            comp = {start}
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y in verts and y not in comp:
                        comp.add(y)
                        queue.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def components_minus_vertex(self, v: str) -> tuple[frozenset[str], ...]:
        """Components of the graph with v deleted; the count is delta_C(v)."""
        self._check_vertex(v)
        return self._components_of(set(self.vertices) - {v})

    def components_minus_star(self, v: str) -> tuple[frozenset[str], ...]:
        """Components of the graph with the closed star of v deleted."""
        self._check_vertex(v)
        return self._components_of(set(self.vertices) - set(self.star(v)))

    def graph_distance(self, u: str, v: str) -> int:
        """Edge count of a shortest path from u to v (graph assumed connected)."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        dist = {u: 0}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == v:
                        return dist[y]
                    queue.append(y)
        raise GraphError(f"no path from {u!r} to {v!r}: graph is disconnected")

    def distances_from(self, v: str) -> dict[str, int]:
        self._check_vertex(v)
        dist = {v: 0}
        queue = deque([v])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def induced(self, verts: Iterable[str]) -> "SimplicialGraph":
        vs = set(verts)
        for v in vs:
            self._check_vertex(v)
        es = [(u, v) for u, v in self.edges if u in vs and v in vs]
        return SimplicialGraph(vs, es)


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    triangle_free: bool
    edge_count: int
    is_star: bool
    star_center: str | None
    admissible: bool

    def to_obj(self) -> dict:
        return {
            "connected": self.connected,
            "triangle_free": self.triangle_free,
            "edge_count": self.edge_count,
            "is_star": self.is_star,
            "star_center": self.star_center,
            "admissible": self.admissible,
        }


def validate(g: SimplicialGraph) -> ValidationReport:
    """Compute the admissibility flags. Never raises."""
    if g._validation is not None:
        return g._validation
    n = len(g.vertices)
    if n == 0:
        report = ValidationReport(False, True, 0, False, None, False)
        g._validation = report
        return report
    # connectivity by BFS from the least vertex
    seen = {g.vertices[0]}
    queue = deque([g.vertices[0]])
    while queue:
        x = queue.popleft()
        for y in g._adj[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    connected = len(seen) == n
    triangle_free = all(not (g._adj[u] & g._adj[v]) for u, v in g.edges)
    edge_count = len(g.edges)
    # a star has one centre adjacent to everything else and all else univalent;
    # requiring degree(centre) >= 2 keeps the centre unique
    star_center = None
    for v in g.vertices:
        if g.degree(v) == n - 1 and n >= 3:
            if all(g.degree(u) == 1 for u in g.vertices if u != v):
                star_center = v
            break
    is_star = star_center is not None
    admissible = connected and triangle_free and edge_count >= 2
    report = ValidationReport(connected, triangle_free, edge_count, is_star, star_center, admissible)
    g._validation = report
    return report


def require_admissible(g: SimplicialGraph) -> ValidationReport:
    report = validate(g)
    if not report.admissible:
        reasons = []
        if not report.connected:
            reasons.append("disconnected")
        if not report.triangle_free:
            reasons.append("has a triangle")
        if report.edge_count < 2:
            reasons.append("fewer than 2 edges")
        raise NotAdmissibleError("graph is not admissible: " + ", ".join(reasons))
    return report


# ---------------------------------------------------------------------------
# external text / JSON formats


def parse_graph_text(text: str) -> tuple[SimplicialGraph, list[str]]:
    """Parse the line-oriented edge format.

    `#` starts a comment; `u v` declares an edge; a single token declares an
    isolated vertex. Duplicate edge lines are deduplicated with a warning.
    """
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    seen_edges: set[tuple[str, str]] = set()
    warnings: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            u, v = tokens
            if u == v:
                raise ParseError(f"line {lineno}: loop edge {u!r} {v!r}")
            key = (u, v) if u < v else (v, u)
            if key in seen_edges:
                warnings.append(f"duplicate edge {key[0]} {key[1]} (line {lineno})")
            else:
                seen_edges.add(key)
                edges.append(key)
        else:
            raise ParseError(f"line {lineno}: expected 1 or 2 tokens, got {len(tokens)}")
    return SimplicialGraph(vertices, edges), warnings


def parse_graph_json(text: str) -> tuple[SimplicialGraph, list[str]]:
    """Parse the JSON form {"vertices": [...], "edges": [[u, v], ...]}."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("graph JSON must be an object")
    vertices = obj.get("vertices", [])
    edges = obj.get("edges", [])
    if not isinstance(vertices, list) or not isinstance(edges, list):
        raise ParseError("graph JSON needs list-valued 'vertices' and 'edges'")
    warnings: list[str] = []
    seen: set[tuple[str, str]] = set()
    cleaned = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"bad edge entry {e!r}")
        u, v = str(e[0]), str(e[1])
        if u == v:
            raise ParseError(f"loop edge {u!r}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            warnings.append(f"duplicate edge {key[0]} {key[1]}")
        else:
            seen.add(key)
            cleaned.append(key)
    return SimplicialGraph([str(v) for v in vertices], cleaned), warnings


def parse_graph(text: str) -> tuple[SimplicialGraph, list[str]]:
    """Sniff the format: JSON if the first non-space character is '{'."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_graph_json(text)
    return parse_graph_text(text)


def graph_to_obj(g: SimplicialGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [[u, v] for u, v in g.edges],
    }
