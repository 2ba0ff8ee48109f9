"""Brute-force word-problem oracle, independent of the normal-form engine.

Closure of a word under single-step rewrites: swap an adjacent commuting
pair, or freely cancel an adjacent inverse pair. Two words represent the
same element iff their closures intersect (rewrites never insert, and both
closures contain the whole reduced shuffle class of the element).
"""

from __future__ import annotations

from collections import deque

from .graph import SimplicialGraph
from .words import Letter, Word, _check_same_graph


def rewrite_neighbors(g: SimplicialGraph, letters: tuple[Letter, ...]):
    for i in range(len(letters) - 1):
        a, b = letters[i], letters[i + 1]
        if a.gen == b.gen and a.sign == -b.sign:
            yield letters[:i] + letters[i + 2 :]
        if a.gen != b.gen and g.adjacent(a.gen, b.gen):
            yield letters[:i] + (b, a) + letters[i + 2 :]


def closure(w: Word, max_size: int | None = None) -> set[tuple[Letter, ...]]:
    g = w.graph
    seen = {w.letters}
    queue = deque([w.letters])
    while queue:
        current = queue.popleft()
        for nxt in rewrite_neighbors(g, current):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
                if max_size is not None and len(seen) > max_size:
                    raise RuntimeError("rewrite closure exceeded its size budget")
    return seen


def oracle_equal(w1: Word, w2: Word) -> bool:
    """Equality decided purely by rewrite closures."""
    _check_same_graph(w1, w2)
    first = closure(w1)
    if w2.letters in first:
        return True
    g = w2.graph
    seen = {w2.letters}
    queue = deque([w2.letters])
    while queue:
        current = queue.popleft()
        for nxt in rewrite_neighbors(g, current):
            if nxt in first:
                return True
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False
