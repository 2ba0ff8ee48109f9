"""Report assembly and canonical JSON serialization.

Canonical means: keys sorted, arrays in the deterministic orders fixed by
the producing modules, integers only. Identical input graphs give
byte-identical reports.
"""

from __future__ import annotations

import json

from .autos import enumerate_generators, format_automorphism, graph_symmetries, sym0_member
from .bounds import vcd_bounds
from .graph import SimplicialGraph, SizeLimitError, graph_to_obj, validate
from .structure import structure_report
from .verify import Check
from .words import format_word


def generators_section(g: SimplicialGraph, skip_symmetries: bool = False) -> dict:
    gens = enumerate_generators(g)
    counts = {
        "inversions": 0,
        "partial_conjugations": 0,
        "transvections_type_I": 0,
        "transvections_type_II": 0,
    }
    listing = []
    for gen in gens:
        kind = gen.kind[0]
        if kind == "inversion":
            counts["inversions"] += 1
        elif kind == "partial_conjugation":
            counts["partial_conjugations"] += 1
        else:
            counts[f"transvections_type_{gen.kind[3]}"] += 1
        listing.append({
            "literal": format_automorphism(gen),
            "kind": kind,
            "images": {
                v: format_word(w) for v, w in gen.images.items()
                if w.letters != ((v, 1),)
            },
        })
    section = {"counts": counts, "list": listing}
    if skip_symmetries:
        section["symmetries"] = {"skipped": "requested"}
    else:
        try:
            syms = graph_symmetries(g)
        except SizeLimitError as exc:
            section["symmetries"] = {"skipped": str(exc)}
        else:
            n0 = sum(1 for p in syms if sym0_member(g, p))
            section["symmetries"] = {
                "order": len(syms),
                "sym0_order": n0,
                "q_order": len(syms) // n0,
            }
    return section


def build_report(
    g: SimplicialGraph,
    warnings: list[str] | None = None,
    *,
    include_structure: bool = False,
    include_generators: bool = False,
    include_bounds: bool = False,
    verifications: list[Check] | None = None,
    skip_symmetries: bool = False,
) -> dict:
    report: dict = {
        "graph": graph_to_obj(g),
        "validation": validate(g).to_obj(),
    }
    if warnings:
        report["warnings"] = list(warnings)
    if include_structure:
        sr = structure_report(g)
        report["structure"] = sr.to_obj()
        if include_bounds:
            report["bounds"] = vcd_bounds(g, sr).to_obj()
    elif include_bounds:
        report["bounds"] = vcd_bounds(g).to_obj()
    if include_generators:
        report["generators"] = generators_section(g, skip_symmetries=skip_symmetries)
    if verifications is not None:
        report["verifications"] = [c.to_obj() for c in verifications]
    return report


def canonical_json(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def render_text(report: dict) -> str:
    """Human-readable view of the same data."""
    lines: list[str] = []
    gobj = report["graph"]
    lines.append(f"graph: {len(gobj['vertices'])} vertices, {len(gobj['edges'])} edges")
    lines.append("  vertices: " + " ".join(gobj["vertices"]))
    val = report["validation"]
    flags = ", ".join(
        f"{k}={val[k]}" for k in ("connected", "triangle_free", "edge_count", "is_star")
    )
    lines.append(f"validation: admissible={val['admissible']} ({flags})")
    for warning in report.get("warnings", []):
        lines.append(f"warning: {warning}")
    if "structure" in report:
        s = report["structure"]
        lines.append("structure:")
        lines.append("  V0: " + " ".join(s["v0"]))
        lines.append(
            "  classes: " + "; ".join(" ".join(c) for c in s["classes"])
        )
        lines.append("  cyclic: " + (" ".join(s["cyclic"]) or "-"))
        lines.append("  separating: " + (" ".join(s["separating"]) or "-"))
        lines.append("  W0: " + (" ".join(s["w0"]) or "-"))
        for v, c in s["counts"].items():
            lines.append(
                f"  {v}: delta={c['delta']} delta0={c['delta0']} deltaC={c['delta_c']} "
                f"leaves={c['leaves']} twigs={c['twigs']} branches={c['branches']}"
            )
    if "generators" in report:
        gsec = report["generators"]
        counts = gsec["counts"]
        lines.append(
            "generators: "
            + ", ".join(f"{k}={v}" for k, v in sorted(counts.items()))
        )
        sym = gsec["symmetries"]
        if "skipped" in sym:
            lines.append(f"  symmetries: skipped ({sym['skipped']})")
        else:
            lines.append(
                f"  symmetries: order={sym['order']} sym0={sym['sym0_order']} "
                f"q_order={sym['q_order']}"
            )
    if "bounds" in report:
        b = report["bounds"]
        lines.append("bounds:")
        lines.append(
            f"  rank_K0={b['rank_K0']} rank_KP={b['rank_KP']} rank_G={b['rank_G']}"
        )
        lines.append(
            f"  vcd: {b['vcd_lower']} <= vcd <= {b['vcd_upper_better']} "
            f"(product bound {b['vcd_upper_HS']})"
        )
        if b["vcd_exact"] is not None:
            lines.append(f"  vcd_exact = {b['vcd_exact']}")
        if b["tree_bounds"] is not None:
            tb = b["tree_bounds"]
            lines.append(f"  tree bounds: [{tb['lower']}, {tb['upper']}]")
        if b["outer_space_dims"] is not None:
            d = b["outer_space_dims"]
            lines.append(
                f"  outer space: leaves={d['num_leaves']} k={d['k']} "
                f"dim_Q={d['dim_Q']} spine_dim_bound={d['spine_dim_bound']}"
            )
    if "verifications" in report:
        lines.append("verifications:")
        for check in report["verifications"]:
            mark = "ok " if check["status"] == "pass" else "FAIL"
            detail = f" - {check['detail']}" if check["detail"] else ""
            lines.append(f"  [{mark}] {check['name']}{detail}")
    return "\n".join(lines) + "\n"
