"""Automorphisms of the graph group by generator images.

Covers the standard generating set (inversions, partial conjugations,
transvections, graph symmetries, inner automorphisms), the kernel
generators coming from separating vertices, restriction to maximal joins
with constructive conjugating witnesses, projection to the free groups on
links, and the distinguished abelian families used for the lower bound.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import (
    GraphError,
    InvariantViolation,
    ParseError,
    SimplicialGraph,
    SizeLimitError,
    require_admissible,
)
from .structure import Join, classify_components, gamma0_vertices, maximal_join
from .words import (
    Letter,
    Word,
    conjugate,
    equal,
    format_word,
    generator_word,
    identity_word,
    normal_form,
    parse_word,
    support,
)

DEFAULT_SYMMETRY_LIMIT = 16


@dataclass(frozen=True, eq=False)
class Automorphism:
    graph: SimplicialGraph
    images: Mapping[str, Word]  # total on vertices, stored in normal form
    kind: tuple
    factors: tuple["Automorphism", ...] = ()

    @property
    def primitive_factors(self) -> tuple["Automorphism", ...]:
        return self.factors if self.kind[0] == "composite" else (self,)

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def __repr__(self) -> str:
        return f"Automorphism({format_automorphism(self)})"


def _certify(g: SimplicialGraph, images: Mapping[str, Word]) -> None:
    # adjacent generators must keep commuting images; this is the
    # well-definedness certificate for an endomorphism
    for u, v in g.edges:
        if not equal(images[u] * images[v], images[v] * images[u]):
            raise InvariantViolation(
                f"images of adjacent generators {u!r}, {v!r} do not commute"
            )


def _make(g: SimplicialGraph, images: dict[str, Word], kind: tuple,
          factors: tuple[Automorphism, ...] = ()) -> Automorphism:
    if set(images) != set(g.vertices):
        raise GraphError("automorphism images must cover every generator")
    norm = {v: normal_form(w) for v, w in images.items()}
    _certify(g, norm)
    return Automorphism(g, norm, kind, factors)


def identity_automorphism(g: SimplicialGraph) -> Automorphism:
    return _make(g, {v: generator_word(g, v) for v in g.vertices}, ("identity",))


def inversion(g: SimplicialGraph, v: str) -> Automorphism:
    g._check_vertex(v)
    images = {x: generator_word(g, x) for x in g.vertices}
    images[v] = generator_word(g, v, -1)
    return _make(g, images, ("inversion", v))


def partial_conjugation(g: SimplicialGraph, v: str, component: Iterable[str]) -> Automorphism:
    """Conjugate every generator of `component` by v.

    `component` must avoid v and, off the star of v, be a union of
    components of the graph minus st(v); otherwise no automorphism results.
    """
    g._check_vertex(v)
    comp = frozenset(component)
    if v in comp:
        raise GraphError("conjugated component must not contain the conjugating vertex")
    for x in comp:
        g._check_vertex(x)
    outside = comp - g.star(v)
    for piece in g.components_minus_star(v):
        if piece & outside and not piece <= outside:
            raise GraphError(
                f"{sorted(comp)} is not a union of components off the star of {v!r}"
            )
    vw = generator_word(g, v)
    images = {}
    for x in g.vertices:
        base = generator_word(g, x)
        images[x] = conjugate(vw, base) if x in comp else base
    return _make(g, images, ("partial_conjugation", v, comp))


def transvection(g: SimplicialGraph, target: str, mult: str, side: str = "right") -> Automorphism:
    """target -> target*mult (right) or mult*target (left); needs st(mult) >= lk(target)."""
    g._check_vertex(target)
    g._check_vertex(mult)
    if target == mult:
        raise GraphError("transvection needs distinct vertices")
    if not g.link(target) <= g.star(mult):
        raise GraphError(
            f"transvection {target!r} -> {target!r}*{mult!r} is illegal: "
            f"st({mult!r}) does not contain lk({target!r})"
        )
    if side not in ("right", "left"):
        raise GraphError(f"side must be 'right' or 'left', got {side!r}")
    ttype = "II" if g.adjacent(target, mult) else "I"
    images = {x: generator_word(g, x) for x in g.vertices}
    t, m = Letter(target, 1), Letter(mult, 1)
    images[target] = Word(g, (t, m) if side == "right" else (m, t))
    return _make(g, images, ("transvection", target, mult, ttype, side))


def inner_automorphism(g: SimplicialGraph, gel: Word) -> Automorphism:
    if gel.graph != g:
        raise GraphError("conjugator lives over a different graph")
    images = {x: conjugate(gel, generator_word(g, x)) for x in g.vertices}
    return _make(g, images, ("inner", normal_form(gel)))


def symmetry_automorphism(g: SimplicialGraph, perm: Mapping[str, str]) -> Automorphism:
    if sorted(perm) != list(g.vertices) or sorted(perm.values()) != list(g.vertices):
        raise GraphError("symmetry must be a permutation of the vertices")
    images = {x: generator_word(g, perm[x]) for x in g.vertices}
    return _make(g, images, ("symmetry", tuple(sorted(perm.items()))))


# ---------------------------------------------------------------------------
# the group operations


def apply(phi: Automorphism, w: Word) -> Word:
    if w.graph != phi.graph:
        raise GraphError("word and automorphism live over different graphs")
    letters: list[Letter] = []
    for letter in w.letters:
        img = phi.images[letter.gen]
        letters.extend(img.letters if letter.sign > 0 else img.inverse().letters)
    return normal_form(Word(phi.graph, tuple(letters)))


def compose(phi: Automorphism, psi: Automorphism) -> Automorphism:
    """phi after psi: x -> phi(psi(x))."""
    if phi.graph != psi.graph:
        raise GraphError("automorphisms live over different graphs")
    images = {x: apply(phi, psi.images[x]) for x in phi.graph.vertices}
    return _make(
        phi.graph, images, ("composite",),
        phi.primitive_factors + psi.primitive_factors,
    )


def equal_in_aut(phi: Automorphism, psi: Automorphism) -> bool:
    if phi.graph != psi.graph:
        raise GraphError("automorphisms live over different graphs")
    return all(equal(phi.images[x], psi.images[x]) for x in phi.graph.vertices)


def is_conjugation_by(phi: Automorphism, gel: Word) -> bool:
    """True when phi sends every generator x to gel * x * gel^-1."""
    g = phi.graph
    return all(
        equal(phi.images[x], conjugate(gel, generator_word(g, x)))
        for x in g.vertices
    )


# ---------------------------------------------------------------------------
# the generating set


def enumerate_generators(g: SimplicialGraph) -> list[Automorphism]:
    """Inversions, partial conjugations, and right transvections.

    Partial conjugations run over components of the graph minus a closed
    star and only exist when there are at least two (the single-component
    conjugation is inner). Symmetries and inners are produced elsewhere.
    """
    require_admissible(g)
    gens: list[Automorphism] = [inversion(g, v) for v in g.vertices]
    for v in g.vertices:
        comps = g.components_minus_star(v)
        if len(comps) >= 2:
            for comp in comps:
                gens.append(partial_conjugation(g, v, comp))
    for target in g.vertices:
        for mult in g.vertices:
            if mult == target or not g.link(target) <= g.star(mult):
                continue
            tv = transvection(g, target, mult, side="right")
            if tv.kind[3] == "II" and not g.is_leaf(target):
                raise InvariantViolation(
                    f"type II transvection target {target!r} is not a leaf"
                )
            gens.append(tv)
    return gens


def k0_generators(g: SimplicialGraph) -> list[Automorphism]:
    """Spanning set of the restriction kernel: conjugations by separating
    vertices of the non-leaf components of the graph minus the vertex.

    Only vertices whose star-removal also disconnects the graph are used;
    the vertices this drops contribute nothing but inner conjugations.
    Returns a spanning set, not a basis; the rank comes from the bounds module.
    """
    report = require_admissible(g)
    if report.is_star:
        return []
    out = []
    for v in g.vertices:
        comps = g.components_minus_vertex(v)
        if len(comps) < 2:
            continue
        if len(g.components_minus_star(v)) < 2:
            continue
        for comp in comps:
            if len(comp) > 1:
                out.append(partial_conjugation(g, v, comp))
    return out


# ---------------------------------------------------------------------------
# graph symmetries


def symmetry_limit() -> int:
    return int(os.environ.get("RAAG_MAX_SYM_VERTICES", str(DEFAULT_SYMMETRY_LIMIT)))


def graph_symmetries(g: SimplicialGraph, limit: int | None = None) -> list[dict[str, str]]:
    """All adjacency-preserving vertex permutations, by backtracking."""
    cap = symmetry_limit() if limit is None else limit
    if len(g.vertices) > cap:
        raise SizeLimitError(
            f"symmetry enumeration limited to {cap} vertices "
            f"(graph has {len(g.vertices)}; raise RAAG_MAX_SYM_VERTICES to override)"
        )
    verts = list(g.vertices)
    results: list[dict[str, str]] = []
    assignment: dict[str, str] = {}
    used: set[str] = set()

    def backtrack(i: int) -> None:
        if i == len(verts):
            results.append(dict(assignment))
            return
        v = verts[i]
        for w in verts:
            if w in used or g.degree(w) != g.degree(v):
                continue
            if all(g.adjacent(v, u) == g.adjacent(w, img) for u, img in assignment.items()):
                assignment[v] = w
                used.add(w)
                backtrack(i + 1)
                del assignment[v]
                used.remove(w)

    backtrack(0)
    results.sort(key=lambda p: tuple(p[v] for v in verts))
    return results


def sym0_member(g: SimplicialGraph, perm: Mapping[str, str]) -> bool:
    """True when the symmetry only permutes vertices within their own class."""
    return all(g.link(perm[v]) == g.link(v) for v in g.vertices)


def q_order(g: SimplicialGraph, syms: list[dict[str, str]] | None = None) -> int:
    if syms is None:
        syms = graph_symmetries(g)
    n0 = sum(1 for p in syms if sym0_member(g, p))
    if n0 == 0 or len(syms) % n0 != 0:
        raise InvariantViolation("class-preserving symmetries do not form a subgroup index")
    return len(syms) // n0


# ---------------------------------------------------------------------------
# restriction to maximal joins


@dataclass(frozen=True)
class RestrictionResult:
    join: Join
    witness: Word
    restricted_images: dict[str, Word] = field(compare=False)


def _pointwise_fixes(phi: Automorphism, verts: frozenset[str]) -> bool:
    g = phi.graph
    return all(equal(phi.images[x], generator_word(g, x)) for x in sorted(verts))


def _factor_witness(factor: Automorphism, join: Join) -> Word:
    g = factor.graph
    jv = join.vertices
    kind = factor.kind[0]
    if _pointwise_fixes(factor, jv):
        return identity_word(g)
    if kind in ("identity", "inversion", "transvection"):
        candidates = [identity_word(g)]
    elif kind == "partial_conjugation":
        u = factor.kind[1]
        candidates = [generator_word(g, u), generator_word(g, u, -1), identity_word(g)]
    elif kind == "inner":
        candidates = [factor.kind[1]]
    else:
        raise GraphError(
            f"no join witness rule for automorphism kind {kind!r} "
            "(graph symmetries permute the joins instead of preserving them)"
        )
    for cand in candidates:
        inv = cand.inverse()
        if all(support(conjugate(inv, factor.images[x])) <= jv for x in sorted(jv)):
            return cand
    raise InvariantViolation(
        f"factor {format_automorphism(factor)} does not carry the join "
        f"{sorted(jv)} into a conjugate of itself"
    )


def verify_preserves_join(phi: Automorphism, join: Join) -> RestrictionResult:
    """Find a conjugating witness g with phi(A_J) = g A_J g^-1 and certify it.

    The witness is assembled per factor the way the generator-by-generator
    proof does: inversions and transvections act internally, a partial
    conjugation either fixes the join subgroup or conjugates all of it by
    its vertex, an inner automorphism contributes its own conjugator.
    """
    g = phi.graph
    witness = identity_word(g)
    for factor in reversed(phi.primitive_factors):
        witness = normal_form(apply(factor, witness) * _factor_witness(factor, join))
    inv = witness.inverse()
    restricted: dict[str, Word] = {}
    for x in sorted(join.vertices):
        img = conjugate(inv, phi.images[x])
        if not support(img) <= join.vertices:
            raise InvariantViolation(
                f"restriction failure: image of {x!r} leaves the join after "
                f"de-conjugating by {format_word(witness) or 'the identity'}"
            )
        restricted[x] = img
    return RestrictionResult(join, witness, restricted)


# ---------------------------------------------------------------------------
# projection to the free group on a link


def free_reduce(letters: tuple[Letter, ...]) -> tuple[Letter, ...]:
    """Free-group reduction: cancel adjacent inverse pairs only."""
    stack: list[Letter] = []
    for letter in letters:
        if stack and stack[-1].gen == letter.gen and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def project(phi: Automorphism, v: str) -> dict[str, tuple[Letter, ...]]:
    """Image of phi in the free group on lk(v): restrict to the join at v,
    kill the perp letters, and reduce freely (the link spans no edges)."""
    join = maximal_join(phi.graph, v)
    rr = verify_preserves_join(phi, join)
    out: dict[str, tuple[Letter, ...]] = {}
    for x in sorted(join.left):
        kept = tuple(l for l in rr.restricted_images[x].letters if l.gen not in join.right)
        out[x] = free_reduce(kept)
    return out


def free_inner_witness(
    images: Mapping[str, tuple[Letter, ...]]
) -> tuple[Letter, ...] | None:
    """Conjugator g with images[x] = g x g^-1 in the free group, or None.

    Constructive: the reduced form of g x g^-1 is h x h^-1 with h obtained
    from g by stripping trailing powers of x, so h is read off the first
    moved generator and the stripped power is recovered by verification.
    """
    moved = {x: w for x, w in sorted(images.items()) if w != (Letter(x, 1),)}
    if not moved:
        return ()
    x0, w0 = next(iter(moved.items()))
    if len(w0) % 2 == 0:
        return None
    k = len(w0) // 2
    if w0[k] != Letter(x0, 1):
        return None
    h = w0[:k]
    h_inv = tuple(l.inverse() for l in reversed(h))
    if free_reduce(h + (Letter(x0, 1),) + h_inv) != w0:
        return None
    max_m = max(len(w) for w in images.values())

    def check(cand: tuple[Letter, ...]) -> bool:
        cand_inv = tuple(l.inverse() for l in reversed(cand))
        return all(
            free_reduce(cand + (Letter(x, 1),) + cand_inv) == w
            for x, w in images.items()
        )

    for m in range(0, max_m + 1):
        for mm in ((m,) if m == 0 else (m, -m)):
            sign = 1 if mm > 0 else -1
            cand = free_reduce(h + (Letter(x0, sign),) * abs(mm))
            if check(cand):
                return cand
    return None


# ---------------------------------------------------------------------------
# the abelian families A, L, C


def abelian_subgroup_generators(g: SimplicialGraph) -> dict[str, list[Automorphism]]:
    """Left/right transvections onto dominating core vertices (A), leaf
    transvections (L), and per-core-vertex conjugations of the non-leaf
    components (C)."""
    report = require_admissible(g)
    if report.is_star:
        raise GraphError("the abelian families are defined for non-star graphs")
    v0 = gamma0_vertices(g)
    v0set = set(v0)
    a_gens: list[Automorphism] = []
    for v in g.vertices:
        if v in v0set:
            continue
        eligible = [w for w in v0 if g.link(v) <= g.link(w)]
        top = [
            w
            for w in eligible
            if not any(w2 != w and g.link(w) < g.link(w2) for w2 in eligible)
        ]
        target = min(top)
        a_gens.append(transvection(g, v, target, side="left"))
        a_gens.append(transvection(g, v, target, side="right"))
    l_gens = [
        transvection(g, u, min(g.link(u)), side="right") for u in g.leaves()
    ]
    c_gens: list[Automorphism] = []
    for v in v0:
        for comp, tag in classify_components(g, v):
            if tag != "leaf":
                c_gens.append(partial_conjugation(g, v, comp))
    return {"A": a_gens, "L": l_gens, "C": c_gens}


def commutes_with_witness(
    x: Automorphism, y: Automorphism
) -> tuple[str, Word | None]:
    """How the pair commutes: ("exact", None) in Aut, ("inner", g) when the
    compositions differ by the witnessed inner automorphism c(g), else
    ("fail", None)."""
    g = x.graph
    xy = compose(x, y)
    yx = compose(y, x)
    if equal_in_aut(xy, yx):
        return ("exact", None)
    pc_verts = [
        f.kind[1]
        for f in (x, y)
        if f.kind[0] == "partial_conjugation"
    ]
    candidates: list[Word] = []
    if len(pc_verts) == 2:
        u, w = pc_verts
        for p, q in ((u, w), (w, u)):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    candidates.append(
                        Word(g, (Letter(p, s1), Letter(q, s2), Letter(p, -s1), Letter(q, -s2)))
                    )
    for cand in candidates:
        if all(
            equal(xy.images[t], conjugate(cand, yx.images[t]))
            for t in g.vertices
        ):
            return ("inner", normal_form(cand))
    return ("fail", None)


# ---------------------------------------------------------------------------
# automorphism literals: inv(v), pc(v; u1 u2 ...), tv(w<-w*v), tv(w<-v*w),
# inner(word), id, composed left-to-right with `;` at the top level


def parse_automorphism(g: SimplicialGraph, text: str) -> Automorphism:
    parts = _split_top_level(text)
    autos = [_parse_single(g, part.strip()) for part in parts if part.strip()]
    if not autos:
        return identity_automorphism(g)
    result = autos[0]
    for nxt in autos[1:]:
        result = compose(result, nxt)
    return result


def _split_top_level(text: str) -> list[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses in automorphism literal")
        if ch == ";" and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses in automorphism literal")
    parts.append("".join(current))
    return parts


def _parse_single(g: SimplicialGraph, text: str) -> Automorphism:
    if text == "id":
        return identity_automorphism(g)
    head, sep, rest = text.partition("(")
    if not sep or not rest.endswith(")"):
        raise ParseError(f"bad automorphism literal {text!r}")
    body = rest[:-1].strip()
    head = head.strip()
    if head == "inv":
        return inversion(g, body)
    if head == "pc":
        vpart, sep2, comp = body.partition(";")
        if not sep2:
            raise ParseError("pc literal needs 'pc(v; u1 u2 ...)'")
        return partial_conjugation(g, vpart.strip(), comp.split())
    if head == "tv":
        target, arrow, product = body.partition("<-")
        if not arrow:
            raise ParseError("tv literal needs 'tv(w<-w*v)'")
        target = target.strip()
        lhs, star, rhs = product.partition("*")
        if not star:
            raise ParseError("tv literal needs a '*' on the right-hand side")
        lhs, rhs = lhs.strip(), rhs.strip()
        if lhs == target:
            return transvection(g, target, rhs, side="right")
        if rhs == target:
            return transvection(g, target, lhs, side="left")
        raise ParseError(f"tv target {target!r} must appear on one side of '*'")
    if head == "inner":
        return inner_automorphism(g, parse_word(g, body))
    raise ParseError(f"unknown automorphism head {head!r}")


def format_automorphism(phi: Automorphism) -> str:
    kind = phi.kind[0]
    if kind == "identity":
        return "id"
    if kind == "inversion":
        return f"inv({phi.kind[1]})"
    if kind == "partial_conjugation":
        return f"pc({phi.kind[1]}; {' '.join(sorted(phi.kind[2]))})"
    if kind == "transvection":
        _, target, mult, _, side = phi.kind
        rhs = f"{target}*{mult}" if side == "right" else f"{mult}*{target}"
        return f"tv({target}<-{rhs})"
    if kind == "inner":
        return f"inner({format_word(phi.kind[1])})"
    if kind == "symmetry":
        imgs = " ".join(f"{v}>{w}" for v, w in phi.kind[1])
        return f"sym({imgs})"
    return ";".join(format_automorphism(f) for f in phi.primitive_factors)
