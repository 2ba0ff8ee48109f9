"""Built-in graph families, so the standard examples need no fixture files.

Family literals: path:n, cycle:n, nmtree:n,m, spider:k, join:n,m, overlap:n,m.
"""

from __future__ import annotations

import random

from .graph import GraphError, SimplicialGraph, validate


def _names(prefix: str, n: int) -> list[str]:
    width = max(2, len(str(n)))
    return [f"{prefix}{i:0{width}d}" for i in range(1, n + 1)]


def path_graph(n: int) -> SimplicialGraph:
    """Path on n vertices (n - 1 edges)."""
    if n < 1:
        raise GraphError("path:n needs n >= 1")
    vs = _names("v", n)
    return SimplicialGraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def cycle_graph(n: int) -> SimplicialGraph:
    if n < 3:
        raise GraphError("cycle:n needs n >= 3")
    vs = _names("v", n)
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    return SimplicialGraph(vs, edges)


def nm_tree(n: int, m: int) -> SimplicialGraph:
    """One interior edge v-w with n leaves at v and m leaves at w."""
    if n < 1 or m < 1:
        raise GraphError("nmtree:n,m needs n, m >= 1")
    edges = [("v", "w")]
    for p in _names("lv", n):
        edges.append(("v", p))
    for q in _names("lw", m):
        edges.append(("w", q))
    return SimplicialGraph([], edges)


def spider_graph(k: int) -> SimplicialGraph:
    """Centre v with k legs of length two: v - m_i - t_i."""
    if k < 1:
        raise GraphError("spider:k needs k >= 1")
    edges = []
    mids = _names("m", k)
    tips = _names("t", k)
    for mid, tip in zip(mids, tips):
        edges.append(("v", mid))
        edges.append((mid, tip))
    return SimplicialGraph([], edges)


def join_graph(n: int, m: int) -> SimplicialGraph:
    """Complete bipartite graph between n u-vertices and m w-vertices."""
    if n < 1 or m < 1:
        raise GraphError("join:n,m needs n, m >= 1")
    us = _names("u", n)
    ws = _names("w", m)
    return SimplicialGraph(us + ws, [(u, w) for u in us for w in ws])


def overlap_graph(n: int, m: int) -> SimplicialGraph:
    """Complete bipartite K_{n,m} plus one pendant leaf on each w-vertex."""
    if n < 2 or m < 2:
        raise GraphError("overlap:n,m needs n, m >= 2")
    us = _names("u", n)
    ws = _names("w", m)
    qs = _names("q", m)
    edges = [(u, w) for u in us for w in ws]
    edges += [(w, q) for w, q in zip(ws, qs)]
    return SimplicialGraph([], edges)


_FAMILIES = {
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "nmtree": (nm_tree, 2),
    "spider": (spider_graph, 1),
    "join": (join_graph, 2),
    "overlap": (overlap_graph, 2),
}


def family_graph(literal: str) -> SimplicialGraph:
    """Build a graph from a family literal like "nmtree:2,3"."""
    name, sep, argpart = literal.partition(":")
    if not sep:
        raise GraphError(f"family literal needs a ':', got {literal!r}")
    if name not in _FAMILIES:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(sorted(_FAMILIES))}")
    builder, arity = _FAMILIES[name]
    try:
        args = [int(a) for a in argpart.split(",")]
    except ValueError:
        raise GraphError(f"family arguments must be integers, got {argpart!r}")
    if len(args) != arity:
        raise GraphError(f"family {name!r} takes {arity} argument(s), got {len(args)}")
    return builder(*args)


def random_tree(rng: random.Random, n: int, prefix: str = "v") -> SimplicialGraph:
    """Uniform random attachment tree on n vertices."""
    if n < 1:
        raise GraphError("tree needs n >= 1")
    vs = _names(prefix, n)
    edges = []
    for i in range(1, n):
        j = rng.randrange(i)
        edges.append((vs[j], vs[i]))
    return SimplicialGraph(vs, edges)


def random_admissible_graph(rng: random.Random, max_vertices: int = 12) -> SimplicialGraph:
    """Random connected triangle-free graph with at least 2 edges.

    Starts from a random tree and adds random chords whenever they close no
    triangle, so admissibility holds by construction.
    """
    n = rng.randint(3, max_vertices)
    g = random_tree(rng, n)
    verts = list(g.vertices)
    edges = set(g.edges)
    extra = rng.randint(0, n)
    for _ in range(extra):
        u, v = rng.sample(verts, 2)
        key = (u, v) if u < v else (v, u)
        if key in edges:
            continue
        candidate = SimplicialGraph(verts, list(edges | {key}))
        if validate(candidate).triangle_free:
            edges.add(key)
    return SimplicialGraph(verts, sorted(edges))
