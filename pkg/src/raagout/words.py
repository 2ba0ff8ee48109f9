"""Exact arithmetic in the group defined by a simplicial graph.

Elements are words in signed generators; two letters commute exactly when
their generators span an edge. A word is reduced when no inverse pair can
cancel through commuting letters, and the normal form is the
lexicographically least shuffle of the reduced word, so words represent
the same group element iff their normal forms are letter-identical.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .graph import GraphError, ParseError, SimplicialGraph


class WordError(GraphError):
    pass


class Letter(NamedTuple):
    gen: str
    sign: int  # +1 or -1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


@dataclass(frozen=True)
class Word:
    """Immutable word over the generators of an ambient graph."""

    graph: SimplicialGraph = field(compare=False)
    letters: tuple[Letter, ...] = ()
    is_normal: bool = field(default=False, compare=False)

    def __post_init__(self):
        for letter in self.letters:
            if letter.gen not in self.graph._index:
                raise WordError(f"letter {letter.gen!r} is not a vertex of the graph")
            if letter.sign not in (1, -1):
                raise WordError(f"letter sign must be +1 or -1, got {letter.sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Word)
            and self.graph == other.graph
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash(self.letters)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"

    def inverse(self) -> "Word":
        return Word(self.graph, tuple(l.inverse() for l in reversed(self.letters)))

    def __mul__(self, other: "Word") -> "Word":
        _check_same_graph(self, other)
        return Word(self.graph, self.letters + other.letters)


def _check_same_graph(*words: Word) -> None:
    first = words[0].graph
    for w in words[1:]:
        if w.graph != first:
            raise WordError("words live over different ambient graphs")


def word(g: SimplicialGraph, letters: Iterable[tuple[str, int]] | Iterable[Letter]) -> Word:
    return Word(g, tuple(Letter(gen, sign) for gen, sign in letters))


def generator_word(g: SimplicialGraph, v: str, sign: int = 1) -> Word:
    return Word(g, (Letter(v, sign),))


def identity_word(g: SimplicialGraph) -> Word:
    return Word(g, (), is_normal=True)


def _letter_key(g: SimplicialGraph, letter: Letter) -> tuple[int, int]:
    # generator order first, then +1 before -1
    return (g._index[letter.gen], 0 if letter.sign > 0 else 1)


def reduce_word(w: Word, trace: list[str] | None = None) -> Word:
    """Delete inverse pairs whose intervening letters all commute with them.

    Fixpoint of leftmost cancellable-pair search; the result is geodesic.
    """
    g = w.graph
    letters = list(w.letters)
    changed = True
    while changed:
        changed = False
        for j in range(1, len(letters)):
            gj = letters[j]
            i = j - 1
            while i >= 0:
                li = letters[i]
                if li.gen == gj.gen:
                    if li.sign == -gj.sign:
                        del letters[j]
                        del letters[i]
                        if trace is not None:
                            trace.append(_format_letters(letters))
                        changed = True
                    break
                if not g.adjacent(li.gen, gj.gen):
                    break
                i -= 1
            if changed:
                break
    return Word(g, tuple(letters))


def normal_form(w: Word, trace: list[str] | None = None) -> Word:
    """Reduce, then greedily emit the least front-movable letter.

    A letter can move to the front iff every earlier letter commutes with
    it. All reduced words of an element form one shuffle class, so the
    greedy pick computes the lexicographically least member.
    """
    if w.is_normal:
        return w
    g = w.graph
    reduced = reduce_word(w, trace=trace)
    remaining = list(reduced.letters)
    out: list[Letter] = []
    while remaining:
        best = None
        best_key = None
        seen: set[str] = set()
        for k, letter in enumerate(remaining):
            movable = all(nb in g._adj[letter.gen] for nb in seen)
            if movable:
                key = _letter_key(g, letter)
                if best_key is None or key < best_key:
                    best, best_key = k, key
            seen.add(letter.gen)
        assert best is not None
        out.append(remaining.pop(best))
        if trace is not None:
            trace.append(_format_letters(out) + " | " + _format_letters(remaining))
    return Word(g, tuple(out), is_normal=True)


def equal(w1: Word, w2: Word) -> bool:
    """Same group element: letter-identical normal forms."""
    _check_same_graph(w1, w2)
    return normal_form(w1).letters == normal_form(w2).letters


def conjugate(gel: Word, w: Word) -> Word:
    """Normal form of gel * w * gel^-1."""
    _check_same_graph(gel, w)
    return normal_form(gel * w * gel.inverse())


def support(w: Word) -> frozenset[str]:
    """Generators of the normal form (an invariant of the group element)."""
    return frozenset(l.gen for l in normal_form(w).letters)


def in_special_subgroup(w: Word, theta: Iterable[str]) -> bool:
    """Membership in the subgroup generated by theta, via reduced-word support."""
    return support(w) <= frozenset(theta)


def centralizes(gel: Word, theta: Iterable[str]) -> bool:
    """True when gel commutes with every generator in theta."""
    verts = sorted(set(theta))
    if not verts:
        raise WordError("centralizes needs a nonempty vertex set")
    g = gel.graph
    for t in verts:
        t_word = generator_word(g, t)
        if not equal(conjugate(gel, t_word), t_word):
            return False
    return True


# ---------------------------------------------------------------------------
# word literal syntax: whitespace-separated `v`, `v^-1`, or `v'`


def parse_word(g: SimplicialGraph, text: str) -> Word:
    letters = []
    for token in text.split():
        if token.endswith("^-1"):
            gen, sign = token[:-3], -1
        elif token.endswith("'"):
            gen, sign = token[:-1], -1
        else:
            gen, sign = token, 1
        if not gen:
            raise ParseError(f"empty generator in token {token!r}")
        if gen not in g._index:
            raise ParseError(f"unknown generator token {gen!r}")
        letters.append(Letter(gen, sign))
    return Word(g, tuple(letters))


def _format_letters(letters: Iterable[Letter]) -> str:
    return " ".join(l.gen if l.sign > 0 else f"{l.gen}^-1" for l in letters)


def format_word(w: Word) -> str:
    return _format_letters(w.letters)
