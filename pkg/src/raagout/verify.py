"""Verification suites that mechanically check the structural claims on a
given graph: kernel witnesses, abelian commutation, join restriction,
symmetry classification, and word-engine agreement with the brute-force
oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import oracle
from .autos import (
    Automorphism,
    abelian_subgroup_generators,
    commutes_with_witness,
    compose,
    enumerate_generators,
    format_automorphism,
    free_inner_witness,
    graph_symmetries,
    is_conjugation_by,
    k0_generators,
    partial_conjugation,
    project,
    q_order,
    sym0_member,
    symmetry_automorphism,
    verify_preserves_join,
)
from .graph import InvariantViolation, SimplicialGraph, require_admissible
from .structure import classify_components, gamma0_vertices, maximal_join, vertex_classes
from .words import Letter, Word, equal, format_word, generator_word, support

SUITES = ("kernel", "commute", "joins", "symmetries", "words")


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail"
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_obj(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


def _ok(name: str, detail: str = "") -> Check:
    return Check(name, "pass", detail)


def _bad(name: str, detail: str) -> Check:
    return Check(name, "fail", detail)


def run_suite(g: SimplicialGraph, suite: str, *, max_len: int = 6, seed: int = 0,
              pairs: int = 200) -> list[Check]:
    require_admissible(g)
    if suite == "kernel":
        return kernel_suite(g)
    if suite == "commute":
        return commute_suite(g)
    if suite == "joins":
        return joins_suite(g)
    if suite == "symmetries":
        return symmetries_suite(g)
    if suite == "words":
        return words_suite(g, max_len=max_len, seed=seed, pairs=pairs)
    raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")


# ---------------------------------------------------------------------------


def kernel_suite(g: SimplicialGraph) -> list[Check]:
    """Kernel generators restrict to witnessed conjugations on every core
    join and project to witnessed inner maps on every link free group."""
    checks: list[Check] = []
    gens = k0_generators(g)
    v0 = gamma0_vertices(g)
    if not gens:
        checks.append(_ok("kernel:empty", "no kernel generators on this graph"))
    for gen in gens:
        label = format_automorphism(gen)
        conj_vertex = gen.kind[1]
        for v in v0:
            name = f"kernel:{label}:join[{v}]"
            try:
                rr = verify_preserves_join(gen, maximal_join(g, v))
            except InvariantViolation as exc:
                checks.append(_bad(name, str(exc)))
                continue
            if not support(rr.witness) <= {conj_vertex}:
                checks.append(_bad(
                    name,
                    f"witness {format_word(rr.witness)!r} is not a power of {conj_vertex!r}",
                ))
                continue
            proj = project(gen, v)
            free_witness = free_inner_witness(proj)
            if free_witness is None:
                checks.append(_bad(name, f"projection at {v!r} is not inner"))
            else:
                checks.append(_ok(
                    name,
                    f"witness {format_word(rr.witness) or 'e'}; projection inner",
                ))
    # composing the conjugations of all non-leaf components of any vertex
    # recovers the inner automorphism of that vertex
    for v in g.vertices:
        non_leaf = [comp for comp, tag in classify_components(g, v) if tag != "leaf"]
        if not non_leaf:
            continue
        total = partial_conjugation(g, v, non_leaf[0])
        for comp in non_leaf[1:]:
            total = compose(total, partial_conjugation(g, v, comp))
        name = f"kernel:inner-composition[{v}]"
        if is_conjugation_by(total, generator_word(g, v)):
            checks.append(_ok(name))
        else:
            checks.append(_bad(name, f"composition is not conjugation by {v!r}"))
    return checks


def commute_suite(g: SimplicialGraph) -> list[Check]:
    """Pairwise commutation of the A, L, C families: exact in Aut, or equal
    up to a witnessed inner automorphism (the crossing conjugation pairs)."""
    report = require_admissible(g)
    checks: list[Check] = []
    if report.is_star:
        return [_ok("commute:star", "abelian families are defined for non-star graphs")]
    fams = abelian_subgroup_generators(g)
    labelled: list[tuple[str, Automorphism]] = []
    for fam in ("A", "L", "C"):
        for i, gen in enumerate(fams[fam]):
            labelled.append((f"{fam}{i}:{format_automorphism(gen)}", gen))
    for i in range(len(labelled)):
        for j in range(i + 1, len(labelled)):
            name_i, x = labelled[i]
            name_j, y = labelled[j]
            name = f"commute:{name_i}|{name_j}"
            status, witness = commutes_with_witness(x, y)
            if status == "exact":
                checks.append(_ok(name, "exact"))
            elif status == "inner":
                checks.append(_ok(name, f"inner witness {format_word(witness)}"))
            else:
                checks.append(_bad(name, "compositions differ by a non-inner map"))
    return checks


def joins_suite(g: SimplicialGraph) -> list[Check]:
    """Every enumerated generator carries every core join to a conjugate of
    itself, with a constructive witness."""
    checks: list[Check] = []
    gens = enumerate_generators(g)
    v0 = gamma0_vertices(g)
    for gen in gens:
        label = format_automorphism(gen)
        for v in v0:
            name = f"joins:{label}:J[{v}]"
            try:
                rr = verify_preserves_join(gen, maximal_join(g, v))
            except InvariantViolation as exc:
                checks.append(_bad(name, str(exc)))
            else:
                checks.append(_ok(name, f"witness {format_word(rr.witness) or 'e'}"))
    return checks


def symmetries_suite(g: SimplicialGraph) -> list[Check]:
    checks: list[Check] = []
    syms = graph_symmetries(g)
    classes = vertex_classes(g)
    members = []
    for perm in syms:
        in_sym0 = sym0_member(g, perm)
        by_class = all(
            perm[v] in classes.classes[classes.class_of(v)] for v in g.vertices
        )
        if in_sym0 != by_class:
            checks.append(_bad(
                "symmetries:characterization",
                f"link test and class test disagree on {perm}",
            ))
        if in_sym0:
            members.append(perm)
            symmetry_automorphism(g, perm)  # certificate must hold
    checks.append(_ok("symmetries:characterization",
                      f"{len(members)} of {len(syms)} symmetries are class-preserving"))
    closed = all(
        sym0_member(g, {v: p[q[v]] for v in g.vertices}) for p in members for q in members
    )
    checks.append(
        _ok("symmetries:sym0-closed") if closed
        else _bad("symmetries:sym0-closed", "class-preserving symmetries not closed")
    )
    try:
        order = q_order(g, syms)
        checks.append(_ok("symmetries:q-order", f"|Sym| = {len(syms)}, q_order = {order}"))
    except InvariantViolation as exc:
        checks.append(_bad("symmetries:q-order", str(exc)))
    return checks


# ---------------------------------------------------------------------------


def random_word(rng: random.Random, g: SimplicialGraph, gens: list[str], max_len: int) -> Word:
    n = rng.randint(0, max_len)
    return Word(g, tuple(Letter(rng.choice(gens), rng.choice((1, -1))) for _ in range(n)))


def perturb_word(rng: random.Random, w: Word) -> Word:
    """A word equal to w in the group: random commuting swaps and inserted
    cancelling pairs."""
    g = w.graph
    letters = list(w.letters)
    for _ in range(rng.randint(1, 4)):
        move = rng.random()
        if move < 0.5 and len(letters) >= 2:
            i = rng.randrange(len(letters) - 1)
            a, b = letters[i], letters[i + 1]
            if a.gen != b.gen and g.adjacent(a.gen, b.gen):
                letters[i], letters[i + 1] = b, a
        else:
            v = rng.choice(g.vertices)
            s = rng.choice((1, -1))
            i = rng.randrange(len(letters) + 1)
            letters[i:i] = [Letter(v, s), Letter(v, -s)]
    return Word(g, tuple(letters))


def words_suite(g: SimplicialGraph, *, max_len: int = 6, seed: int = 0,
                pairs: int = 200) -> list[Check]:
    """Random word pairs: engine equality must agree with the rewrite oracle."""
    rng = random.Random(seed)
    checks: list[Check] = []
    gens_pool = list(g.vertices)
    failures = 0
    agree = 0
    for k in range(pairs):
        sample = rng.sample(gens_pool, min(len(gens_pool), 3))
        w1 = random_word(rng, g, sample, max_len)
        w2 = perturb_word(rng, w1) if rng.random() < 0.5 else random_word(rng, g, sample, max_len)
        got = equal(w1, w2)
        want = oracle.oracle_equal(w1, w2)
        if got != want:
            failures += 1
            checks.append(_bad(
                f"words:pair{k}",
                f"engine says {got}, oracle says {want} for "
                f"{format_word(w1)!r} vs {format_word(w2)!r}",
            ))
        else:
            agree += 1
    checks.append(
        _ok("words:oracle-agreement", f"{agree}/{pairs} sampled pairs agree")
        if failures == 0
        else _bad("words:oracle-agreement", f"{failures} disagreements")
    )
    return checks
