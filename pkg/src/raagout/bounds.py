"""Closed-form rank and dimension formulas assembled into a BoundsReport.

Every formula is evaluated over the core vertex set with the per-vertex
counts from the structure report; the two routes to the lower bound and
the kernel-rank bookkeeping identity are cross-checked on every call, and
a lower bound exceeding an upper bound is a hard failure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import GraphError, InvariantViolation, SimplicialGraph, require_admissible
from .structure import StructureReport, structure_report


@dataclass(frozen=True)
class BoundsReport:
    rank_k0: int
    rank_kp: int
    rank_g: int | None                 # absent for stars
    vcd_lower: int
    vcd_upper_hs: int
    vcd_upper_better: int
    vcd_exact: int | None              # present iff lower meets the least upper bound
    outer_space_dims: dict | None      # absent for stars
    tree_bounds: dict | None           # present only for non-star trees
    applied_formulas: tuple[str, ...]
    negative_rank_summands: tuple[str, ...]  # core vertices with delta_c - tau - 1 < 0

    def to_obj(self) -> dict:
        return {
            "rank_K0": self.rank_k0,
            "rank_KP": self.rank_kp,
            "rank_G": self.rank_g,
            "vcd_lower": self.vcd_lower,
            "vcd_upper_HS": self.vcd_upper_hs,
            "vcd_upper_better": self.vcd_upper_better,
            "vcd_exact": self.vcd_exact,
            "outer_space_dims": self.outer_space_dims,
            "tree_bounds": self.tree_bounds,
            "applied_formulas": list(self.applied_formulas),
            "negative_rank_summands": list(self.negative_rank_summands),
        }


def rank_k0(g: SimplicialGraph, sr: StructureReport) -> int:
    """Rank of the restriction kernel: 0 for a star, else
    sum over core vertices of (delta_C - leaves - 1)."""
    require_admissible(g)
    if sr.is_star:
        return 0
    return sum(c.delta_c - c.leaves - 1 for c in sr.counts.values())


def rank_kp(g: SimplicialGraph, sr: StructureReport) -> int:
    """Rank of the projection kernel: the leaf count for a star, else
    sum over core vertices of (delta_C - 1)."""
    require_admissible(g)
    if sr.is_star:
        return sr.leaf_count
    return sum(c.delta_c - 1 for c in sr.counts.values())


def rank_g(g: SimplicialGraph, sr: StructureReport) -> int:
    """Rank of the abelian subgroup from the transvection and conjugation
    families: 2|V \\ V0| + sum over core vertices of (delta_C - tau - 1)."""
    require_admissible(g)
    if sr.is_star:
        raise GraphError("the abelian lower-bound subgroup is defined for non-star graphs")
    n_outside = len(g.vertices) - len(sr.v0)
    total = 2 * n_outside + sum(c.delta_c - c.twigs - 1 for c in sr.counts.values())
    if total < 0:
        raise InvariantViolation(f"abelian subgroup rank came out negative: {total}")
    return total


def outer_space_dims(g: SimplicialGraph, sr: StructureReport) -> dict | None:
    """Leaf count, the cyclic-vertex embedding dimensions, and the spine
    dimension bound. Absent for stars (the counts presuppose a non-star)."""
    require_admissible(g)
    if sr.is_star:
        return None
    k = sum(sr.counts[v].delta0 for v in sr.cyclic)
    dim_q = sum(sr.counts[v].delta0 - 1 for v in sr.cyclic)
    spine = sum(2 * c.delta - 3 for c in sr.counts.values())
    return {
        "num_leaves": sr.leaf_count,
        "k": k,
        "dim_Q": dim_q,
        "spine_dim_bound": spine,
    }


def tree_bounds(g: SimplicialGraph, sr: StructureReport) -> dict | None:
    """Specialised bounds for (non-star) trees, cross-checked against the
    general formulas they were derived from."""
    require_admissible(g)
    num_edges = len(g.edges)
    if sr.is_star or num_edges != len(g.vertices) - 1:
        return None
    leaf_total = sr.leaf_count
    gamma0_leaves = sum(1 for v in sr.v0 if sr.gamma0.degree(v) <= 1)
    lower = num_edges - 1 + 2 * leaf_total - gamma0_leaves
    w0_term = sum(sr.counts[v].delta - 1 for v in sr.w0)
    upper = num_edges + leaf_total - 3 + w0_term
    if lower != rank_g(g, sr):
        raise InvariantViolation(
            f"tree lower bound {lower} disagrees with the general formula {rank_g(g, sr)}"
        )
    return {"lower": lower, "upper": upper}


def vcd_bounds(g: SimplicialGraph, sr: StructureReport | None = None) -> BoundsReport:
    require_admissible(g)
    if sr is None:
        sr = structure_report(g)
    formulas: list[str] = []
    negative = tuple(
        v for v, c in sorted(sr.counts.items()) if c.delta_c - c.twigs - 1 < 0
    )

    r_k0 = rank_k0(g, sr)
    r_kp = rank_kp(g, sr)
    if r_k0 + sr.leaf_count != r_kp:
        raise InvariantViolation(
            f"kernel bookkeeping failed: rank_K0 {r_k0} + leaves {sr.leaf_count} "
            f"!= rank_KP {r_kp}"
        )

    if sr.is_star:
        leafs = sr.leaf_count
        lower = leafs
        upper_hs = leafs + (2 * leafs - 3)
        upper_better = upper_hs
        r_g = None
        formulas += [
            "rank_K0 = 0 (star)",
            "rank_KP = |W| (star)",
            "vcd_lower = rank of the leaf-transvection group",
            "vcd_upper_HS = rank_KP + (2|W| - 3)",
            "vcd_upper_better = vcd_upper_HS (star)",
        ]
    else:
        r_g = rank_g(g, sr)
        # second route to the same number, as a cross-check
        alt = 2 * len(g.vertices) + sum(
            c.delta_c - c.twigs - 3 for c in sr.counts.values()
        )
        if alt != r_g:
            raise InvariantViolation(
                f"the two lower-bound routes disagree: {r_g} vs {alt}"
            )
        lower = r_g
        upper_hs = sum(c.delta_c - 1 for c in sr.counts.values()) + sum(
            2 * c.delta - 3 for c in sr.counts.values()
        )
        upper_better = sum(
            c.delta_c + c.delta - 3 for c in sr.counts.values()
        ) + sum(sr.counts[v].delta - 1 for v in sr.w0)
        formulas += [
            "rank_K0 = sum(delta_C - leaves - 1)",
            "rank_KP = sum(delta_C - 1)",
            "vcd_lower = rank_G = 2|V - V0| + sum(delta_C - tau - 1)",
            "vcd_upper_HS = rank_KP + sum(2 delta - 3)",
            "vcd_upper_better = sum(delta_C + delta - 3) + sum_{W0}(delta - 1)",
        ]

    if upper_better > upper_hs:
        raise InvariantViolation(
            f"the refined upper bound {upper_better} exceeds the product bound {upper_hs}"
        )
    least_upper = min(upper_hs, upper_better)
    if lower > least_upper:
        raise InvariantViolation(
            f"lower bound {lower} exceeds upper bound {least_upper}"
        )
    exact = lower if lower == least_upper else None
    if exact is not None:
        formulas.append("vcd_exact: bounds meet")

    trees = tree_bounds(g, sr)
    if trees is not None:
        if trees["upper"] != upper_better:
            raise InvariantViolation(
                f"tree upper bound {trees['upper']} disagrees with the general "
                f"formula {upper_better}"
            )
        formulas.append("tree_bounds = (e - 1 + 2l - l0, e + l - 3 + sum_{W0}(delta - 1))")

    return BoundsReport(
        rank_k0=r_k0,
        rank_kp=r_kp,
        rank_g=r_g,
        vcd_lower=lower,
        vcd_upper_hs=upper_hs,
        vcd_upper_better=upper_better,
        vcd_exact=exact,
        outer_space_dims=outer_space_dims(g, sr),
        tree_bounds=trees,
        applied_formulas=tuple(formulas),
        negative_rank_summands=negative,
    )
