"""Report dictionaries for the CLI and their text rendering.

Every report is a plain dict of strings, numbers, lists and dicts with a fixed
key order, so the JSON twin and the text form are deterministic.
"""

from __future__ import annotations

import json

from .ar import Catalog, Regular
from .cluster import b_algebra
from .generator import GeneratorModule, SampleResult, Verdict, WREPDIM_DEFINITION
from .tilting import ConeDecomposition, TiltingModule, TorsionClass


def _s(labels) -> list[str]:
    return [str(l) for l in labels]


def quiver_section(cat: Catalog) -> dict:
    Q = cat.Q
    return {
        "type": Q.name,
        "vertices": Q.n,
        "arrows": [[s + 1, t + 1] for s, t in Q.arrows],
        "null_root": list(cat.cox.delta),
        "tubes": [{"id": t.tube_id, "rank": t.rank, "mouth": [list(d) for d in t.mouth_dims]}
                  for t in cat.exceptional_tubes()],
        "window": {"power": cat.window.power, "levels": cat.window.levels},
    }


def tilting_section(T: TiltingModule) -> list[dict]:
    out = []
    for l, X in zip(T.labels, T.reps):
        kind = "regular" if isinstance(l, Regular) else l.side
        out.append({"label": str(l), "kind": kind, "dims": list(X.dims)})
    return out


def validate_report(name: str, T: TiltingModule) -> dict:
    return {
        "command": "validate",
        "instance": name,
        "quiver": quiver_section(T.catalog),
        "tilting": tilting_section(T),
        "summands": T.n,
        "rigid": True,
        "torsion_class": "finite" if T.preinjective else "infinite",
    }


def cones_section(T: TiltingModule, cones: ConeDecomposition) -> list[dict]:
    return [{"vertex": str(c.vertex), "level": c.level, "summands": _s(cones.summands[c.vertex]),
             "members": _s(c.members)} for c in cones.cones]


def torsion_report(name: str, T: TiltingModule, torsion: TorsionClass, cones: ConeDecomposition) -> dict:
    union = {m for c in cones.cones for m in c.members}
    return {
        "command": "torsion",
        "instance": name,
        "tubes": quiver_section(T.catalog)["tubes"],
        "torsion": {"preinjective": _s(torsion.preinjective), "regular": _s(torsion.regular),
                    "size": len(torsion.members), "scan_bound": torsion.bound},
        "maximal_cones": cones_section(T, cones),
        "cone_levels": [c.level for c in cones.cones],
        "regular_torsion_in_cones": all(l in union for l in torsion.regular),
    }


def b_quiver_section(G: GeneratorModule) -> dict:
    B = b_algebra(G.ctx.C, G.T.labels, "source")
    return {
        "vertices": [f"{k + 1}:{l}" for k, l in enumerate(G.T.labels)],
        "arrows": [[i + 1, j + 1] for i, j in B.arrow_list()],
        "dimension": B.dimension,
    }


def generator_report(name: str, G: GeneratorModule) -> dict:
    from .generator import missing_injectives
    ctx = G.ctx
    summands = []
    for l in G.labels:
        summands.append({"label": str(l), "parts": G.provenance(l), "b_dims": list(ctx.b_dims(ctx.C.obj(l))),
                         "b_injective": ctx.is_b_injective(l)})
    have = set(G.labels)
    miss = missing_injectives(G)
    return {
        "command": "generator",
        "instance": name,
        "slice": f"tau^{G.slice.power} DH",
        "slice_power": G.slice.power,
        "N1": _s(G.N1),
        "Q": _s(G.Q),
        "H": _s(G.Hpart),
        "cones": [_s(c) for c in G.cones],
        "dropped": _s(G.dropped),
        "summands": summands,
        "count": len(G.labels),
        "torsion_contained": all(l in have for l in G.torsion.members),
        "cogenerator": not miss,
        "missing_injectives": _s(miss),
        "b_quiver": b_quiver_section(G),
    }


def sample_row(r: SampleResult, entry=None) -> dict:
    row = {
        "label": str(r.label),
        "exact": r.exact,
        "f_epi": r.f_epi,
        "j_mono": r.j_mono,
        "approximation": r.approximation,
        "nota": r.nota,
        "criterion": r.criterion,
        "middle": list(r.middle_labels),
        "middle_in_M": r.middle_in_M,
        "kernel_dims": list(r.kernel_dims),
        "note": r.summary,
    }
    row["pd"] = None
    if entry is not None:
        row["pd"] = entry.pd
        row["M0"] = entry.M0
        row["M1"] = entry.M1
        row["hom_alternating_sum"] = entry.alternating_sum
    return row


def verify_report(name: str, G: GeneratorModule, rows: list[dict]) -> dict:
    def count(key):
        return sum(1 for r in rows if r.get(key) is True)
    summary = {"samples": len(rows)}
    for key in ("exact", "f_epi", "j_mono", "approximation", "nota", "criterion", "middle_in_M"):
        summary[key] = count(key)
    summary["pd_le_1"] = sum(1 for r in rows if r.get("pd") is not None and r["pd"] <= 1)
    return {
        "command": "verify",
        "instance": name,
        "slice_power": G.slice.power,
        "scope": "finite catalog window (property check, not a proof)",
        "summary": summary,
        "samples": rows,
    }


def verdict_section(v: Verdict) -> dict:
    return {
        "gl_dim_end": v.gl_dim,
        "gl_dim_error": v.gl_dim_error,
        "generator": v.generator,
        "representation_infinite": v.rep_infinite,
        "w_rep_dim": v.w_rep_dim,
        "cogenerator": v.cogenerator,
        "missing_injectives": _s(v.missing_injectives),
        "rep_dim": v.rep_dim,
        "w_rep_dim_definition": WREPDIM_DEFINITION,
    }


def gldim_report(name: str, G: GeneratorModule, v: Verdict, E, certificate: list[dict] | None = None) -> dict:
    out = {
        "command": "gldim",
        "instance": name,
        "slice_power": G.slice.power,
        "b_quiver": b_quiver_section(G),
        "end_algebra": {"summands": E.m, "dimension": E.dimension, "loewy_length": E.loewy_length()},
        "verdict": verdict_section(v),
    }
    if certificate is not None:
        out["certificate"] = {
            "samples": len(certificate),
            "pd_le_1": sum(1 for r in certificate if r["pd"] is not None and r["pd"] <= 1),
            "approximation": sum(1 for r in certificate if r["approximation"]),
            "holds": all(r["pd"] is not None and r["pd"] <= 1 and r["approximation"] and r["hom_alternating_sum"] == 0
                         for r in certificate),
            "entries": certificate,
        }
    return out


# ---------------------------------------------------------------- rendering


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def _scalar(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def render_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, v in report.items():
        if isinstance(v, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(v, indent + 1))
        elif isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v):
            lines.append(f"{pad}{key}:")
            for x in v:
                if isinstance(x, dict):
                    body = render_text(x, indent + 2).splitlines()
                    lines.append(f"{pad}  - {body[0].strip()}")
                    lines.extend(body[1:])
                else:
                    lines.append(f"{pad}  - {_scalar(x)}")
        else:
            lines.append(f"{pad}{key}: {_scalar(v)}")
    return "\n".join(l for l in lines if l != "")
