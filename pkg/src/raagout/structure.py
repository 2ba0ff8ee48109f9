"""Derived combinatorial structure: vertex classes, the core subgraph, joins,
and the per-vertex counts feeding every rank and dimension formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import (
    GraphError,
    InvariantViolation,
    SimplicialGraph,
    require_admissible,
    validate,
)


@dataclass(frozen=True)
class VertexClasses:
    """Partition of the vertices by equal links, with the link-inclusion order."""

    classes: tuple[frozenset[str], ...]  # ordered by least member
    links: tuple[frozenset[str], ...]    # links[i] is the common link of classes[i]
    maximal: tuple[int, ...]             # indices of maximal classes

    def class_of(self, v: str) -> int:
        for i, cls in enumerate(self.classes):
            if v in cls:
                return i
        raise GraphError(f"unknown vertex {v!r}")

    def leq(self, i: int, j: int) -> bool:
        return self.links[i] <= self.links[j]


@dataclass(frozen=True)
class Join:
    """Complete bipartite subgraph left * right, checked at construction."""

    left: frozenset[str]
    right: frozenset[str]

    @property
    def vertices(self) -> frozenset[str]:
        return self.left | self.right

    def to_obj(self) -> dict:
        return {"left": sorted(self.left), "right": sorted(self.right)}


def make_join(g: SimplicialGraph, left, right) -> Join:
    left = frozenset(left)
    right = frozenset(right)
    if left & right:
        raise InvariantViolation(f"join sides intersect: {sorted(left & right)}")
    for u in left:
        for v in right:
            if not g.adjacent(u, v):
                raise InvariantViolation(f"join is not complete bipartite: {u!r} !~ {v!r}")
    for side in (left, right):
        for u in side:
            for v in side:
                if u < v and g.adjacent(u, v):
                    raise InvariantViolation(f"edge {u!r}-{v!r} inside one join side")
    return Join(left, right)


@dataclass(frozen=True)
class VertexCounts:
    delta: int     # valence in the full graph
    delta0: int    # valence inside the core subgraph
    delta_c: int   # number of components of the graph minus the vertex
    leaves: int    # leaf components (= leaves attached to the vertex)
    twigs: int
    branches: int

    def to_obj(self) -> dict:
        return {
            "delta": self.delta,
            "delta0": self.delta0,
            "delta_c": self.delta_c,
            "leaves": self.leaves,
            "twigs": self.twigs,
            "branches": self.branches,
        }


@dataclass(frozen=True)
class StructureReport:
    classes: VertexClasses
    v0: tuple[str, ...]
    gamma0: SimplicialGraph
    counts: dict[str, VertexCounts]      # keyed by v in v0
    cyclic: tuple[str, ...]
    separating: tuple[str, ...]
    leaf_vertices: tuple[str, ...]
    interior: tuple[str, ...]
    w0: tuple[str, ...]
    is_star: bool
    star_center: str | None

    @property
    def leaf_count(self) -> int:
        return len(self.leaf_vertices)

    def to_obj(self) -> dict:
        return {
            "classes": [sorted(c) for c in self.classes.classes],
            "maximal_classes": [sorted(self.classes.classes[i]) for i in self.classes.maximal],
            "v0": list(self.v0),
            "gamma0_edges": [[u, v] for u, v in self.gamma0.edges],
            "counts": {v: c.to_obj() for v, c in sorted(self.counts.items())},
            "cyclic": list(self.cyclic),
            "separating": list(self.separating),
            "leaf_vertices": list(self.leaf_vertices),
            "interior": list(self.interior),
            "w0": list(self.w0),
            "is_star": self.is_star,
            "star_center": self.star_center,
        }


def vertex_classes(g: SimplicialGraph) -> VertexClasses:
    """Group vertices by equal links; order classes by link inclusion."""
    require_admissible(g)
    by_link: dict[frozenset[str], list[str]] = {}
    for v in g.vertices:
        by_link.setdefault(g.link(v), []).append(v)
    pairs = sorted(by_link.items(), key=lambda kv: min(kv[1]))
    classes = tuple(frozenset(vs) for _, vs in pairs)
    links = tuple(lk for lk, _ in pairs)
    maximal = tuple(
        i
        for i in range(len(classes))
        if not any(j != i and links[i] < links[j] for j in range(len(classes)))
    )
    return VertexClasses(classes, links, maximal)


def gamma0_vertices(g: SimplicialGraph) -> tuple[str, ...]:
    """Least representative of each maximal class; a star collapses to its centre."""
    report = require_admissible(g)
    if report.is_star:
        assert report.star_center is not None
        return (report.star_center,)
    classes = vertex_classes(g)
    return tuple(sorted(min(classes.classes[i]) for i in classes.maximal))


def is_cyclic(g: SimplicialGraph, v: str) -> bool:
    """True when the perp of the link collapses to the vertex itself."""
    require_admissible(g)
    if g.is_leaf(v):
        raise GraphError(f"{v!r} is a leaf; cyclicity is defined for interior vertices")
    return g.perp(g.link(v)) == frozenset({v})


def maximal_join(g: SimplicialGraph, v: str) -> Join:
    """The canonical maximal join attached to an interior vertex: link * perp(link)."""
    require_admissible(g)
    if g.is_leaf(v):
        raise GraphError(f"{v!r} is a leaf; maximal joins attach to interior vertices")
    link = g.link(v)
    return make_join(g, link, g.perp(link))


def edge_join(g: SimplicialGraph, v: str, w: str) -> Join:
    """Intersection join of the maximal joins at two adjacent interior vertices."""
    require_admissible(g)
    if g.is_leaf(v) or g.is_leaf(w):
        raise GraphError("edge joins need two interior vertices")
    if not g.adjacent(v, w):
        raise GraphError(f"{v!r} and {w!r} are not adjacent")
    perp_v = g.perp(g.link(v))
    perp_w = g.perp(g.link(w))
    if not perp_v <= g.link(w):
        raise InvariantViolation(
            f"perp(link({v!r})) = {sorted(perp_v)} is not inside link({w!r})"
        )
    if not perp_w <= g.link(v):
        raise InvariantViolation(
            f"perp(link({w!r})) = {sorted(perp_w)} is not inside link({v!r})"
        )
    return make_join(g, perp_w, perp_v)


def classify_components(
    g: SimplicialGraph, v: str
) -> tuple[tuple[frozenset[str], str], ...]:
    """Tag each component of the graph minus v as leaf, twig, or branch.

    A twig sits inside the radius-2 ball around v including edge interiors:
    every vertex at distance <= 2 and no edge with both endpoints at
    distance exactly 2 (such an edge's midpoint would be further out).
    """
    dist = g.distances_from(v)
    out = []
    for comp in g.components_minus_vertex(v):
        if len(comp) == 1:
            out.append((comp, "leaf"))
            continue
        within = all(dist[x] <= 2 for x in comp)
        far_edge = any(
            dist[u] == 2 and dist[w] == 2
            for u, w in g.edges
            if u in comp and w in comp
        )
        out.append((comp, "twig" if within and not far_edge else "branch"))
    return tuple(out)


def w0_vertices(g: SimplicialGraph, v0: tuple[str, ...]) -> tuple[str, ...]:
    """Core vertices with leaves attached or lying on an embedded 4-cycle."""
    out = []
    for v in v0:
        if any(g.is_leaf(u) for u in g.link(v)):
            out.append(v)
            continue
        if _on_square(g, v):
            out.append(v)
    return tuple(out)


def _on_square(g: SimplicialGraph, v: str) -> bool:
    nbrs = sorted(g.link(v))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            if (g.link(x) & g.link(y)) - {v}:
                return True
    return False


def structure_report(g: SimplicialGraph) -> StructureReport:
    """Assemble the full derived structure, asserting the core-subgraph facts."""
    report = require_admissible(g)
    classes = vertex_classes(g)
    v0 = gamma0_vertices(g)
    gamma0 = g.induced(v0)
    leaf_vertices = g.leaves()
    interior = g.interior_vertices()
    cyclic = tuple(v for v in interior if g.perp(g.link(v)) == frozenset({v}))
    separating = tuple(v for v in g.vertices if len(g.components_minus_vertex(v)) >= 2)

    counts: dict[str, VertexCounts] = {}
    for v in v0:
        tags = classify_components(g, v)
        n_leaf = sum(1 for _, t in tags if t == "leaf")
        n_twig = sum(1 for _, t in tags if t == "twig")
        n_branch = sum(1 for _, t in tags if t == "branch")
        counts[v] = VertexCounts(
            delta=g.degree(v),
            delta0=gamma0.degree(v),
            delta_c=len(tags),
            leaves=n_leaf,
            twigs=n_twig,
            branches=n_branch,
        )

    w0 = w0_vertices(g, v0)
    sr = StructureReport(
        classes=classes,
        v0=v0,
        gamma0=gamma0,
        counts=counts,
        cyclic=cyclic,
        separating=separating,
        leaf_vertices=leaf_vertices,
        interior=interior,
        w0=w0,
        is_star=report.is_star,
        star_center=report.star_center,
    )
    _assert_structure_invariants(g, sr)
    return sr


def _assert_structure_invariants(g: SimplicialGraph, sr: StructureReport) -> None:
    for v, c in sr.counts.items():
        if c.delta_c != c.leaves + c.twigs + c.branches:
            raise InvariantViolation(f"component tags at {v!r} do not partition")
    if not validate(sr.gamma0).connected and len(sr.v0) > 1:
        raise InvariantViolation("core subgraph is disconnected")
    v0set = set(sr.v0)
    if not set(sr.cyclic) <= v0set:
        raise InvariantViolation("a cyclic vertex escaped the core subgraph")
    if v0set & set(sr.leaf_vertices):
        raise InvariantViolation("a leaf entered the core subgraph")
    if not sr.is_star:
        # every vertex lies in the link of some core vertex, and in the perp
        # of the link of at most one
        for x in g.vertices:
            havens = [w for w in sr.v0 if x in g.link(w)]
            if not havens:
                raise InvariantViolation(f"{x!r} lies in no core-vertex link")
            perps = [w for w in sr.v0 if x in g.perp(g.link(w))]
            if len(perps) > 1:
                raise InvariantViolation(f"{x!r} lies in two core perps {perps!r}")
