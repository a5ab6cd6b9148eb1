"""Command line front-end: ``tamecluster <command> --spec <file>``.

Exit codes: 0 everything verified, 1 malformed input or invalid tilting
module, 2 a checked property failed (the report names the witness).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report as rp
from .ar import CatalogError
from .instances import InstanceSpec, SpecError, bundled_names, load_spec
from .tilting import TiltingError, enumerate_torsion, maximal_cones

EXIT_OK, EXIT_INPUT, EXIT_PROPERTY = 0, 1, 2


def _common(p: argparse.ArgumentParser):
    p.add_argument("--spec", required=True, help="instance JSON file or bundled name (%s)" % ", ".join(bundled_names()))
    p.add_argument("--window", type=int, help="largest transjective power in the catalog window")
    p.add_argument("--levels", type=int, help="largest tube level in the catalog window (default rank + 2)")
    p.add_argument("--cogenerator", action=argparse.BooleanOptionalAction, default=None,
                   help="choose the slice so that the preinjective tau^2 T_i lie in T(Sigma)")
    p.add_argument("--slice", type=int, dest="slice_power", help="use Sigma = tau^k DH")
    p.add_argument("--cutoff", type=int, help="projective dimension cutoff for gl.dim")
    p.add_argument("--json", help="write the JSON twin of the report here")
    p.add_argument("--figures", help="directory for matplotlib figures")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tamecluster", description="Cluster-tilted algebras of Euclidean type: "
                                 "torsion classes, the generator M', its approximations and gl.dim End(M').")
    sub = ap.add_subparsers(dest="command", required=True)
    for name, help_ in [("validate", "parse the instance and check the tilting module"),
                        ("torsion", "torsion class and maximal cones"),
                        ("generator", "manifest of M' and the cogenerator check"),
                        ("verify", "sequence (1) and the approximation property on the catalog window"),
                        ("gldim", "End_B(M'), its global dimension and the verdict"),
                        ("dot", "DOT text for a component")]:
        p = sub.add_parser(name, help=help_)
        _common(p)
        if name in ("verify", "gldim"):
            p.add_argument("--limit", type=int, help="verify only the first N samples")
        if name == "gldim":
            p.add_argument("--certificate", action="store_true",
                           help="also certify pd Hom_B(M', X') <= 1 on every window sample")
        if name == "dot":
            p.add_argument("--component", default="tubes",
                           help="tubes | tube:<id> | preinjective | preprojective | bquiver")
    return ap


def _load(args) -> InstanceSpec:
    spec = load_spec(args.spec)
    for key, v in (("window", args.window), ("levels", args.levels), ("cogenerator", args.cogenerator),
                   ("slice", args.slice_power), ("cutoff", args.cutoff)):
        if v is not None:
            spec.options[key] = v
    return spec


def _emit(args, out, rep: dict):
    out.write(rp.render_text(rep) + "\n")
    if args.json:
        Path(args.json).write_text(rp.to_json(rep))


def _generator(spec: InstanceSpec, T):
    from .generator import build_generator
    o = spec.options
    return build_generator(T, bool(o["cogenerator"]), slice_power=o["slice"])


def _samples(G, limit):
    from .generator import sample_labels
    S = sample_labels(G)
    return S[:limit] if limit is not None else S


def cmd_validate(spec, T, args, out) -> int:
    _emit(args, out, rp.validate_report(spec.name, T))
    return EXIT_OK


def cmd_torsion(spec, T, args, out) -> int:
    tor = enumerate_torsion(T)
    cones = maximal_cones(T)
    rep = rp.torsion_report(spec.name, T, tor, cones)
    _emit(args, out, rep)
    if args.figures:
        from .figures import plot_tube
        d = Path(args.figures)
        d.mkdir(parents=True, exist_ok=True)
        for t in T.catalog.exceptional_tubes():
            plot_tube(d / f"{spec.name}-tube-{t.tube_id}.png", T.catalog, t.tube_id, T, tor, cones)
    return EXIT_OK if rep["regular_torsion_in_cones"] else EXIT_PROPERTY


def cmd_generator(spec, T, args, out) -> int:
    G = _generator(spec, T)
    rep = rp.generator_report(spec.name, G)
    _emit(args, out, rep)
    if args.figures:
        from .figures import plot_quiver
        d = Path(args.figures)
        d.mkdir(parents=True, exist_ok=True)
        q = rep["b_quiver"]
        plot_quiver(d / f"{spec.name}-b-quiver.png", q["vertices"], [(i - 1, j - 1) for i, j in q["arrows"]],
                    f"quiver of B ({spec.name})")
    return EXIT_OK if rep["torsion_contained"] else EXIT_PROPERTY


def cmd_verify(spec, T, args, out) -> int:
    from .generator import verify_sample
    from .gldim import end_algebra, resolution_entry
    G = _generator(spec, T)
    E = end_algebra(G.ctx, G.objects())
    rows = []
    for l in _samples(G, args.limit):
        s = verify_sample(G, l)
        entry = resolution_entry(E, G, l, spec.options["cutoff"], sample=s) if s.built else None
        rows.append(rp.sample_row(s, entry))
    rep = rp.verify_report(spec.name, G, rows)
    _emit(args, out, rep)
    ok = all(r["exact"] and r["approximation"] for r in rows)
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_gldim(spec, T, args, out) -> int:
    from .generator import verdict, verify_sample
    from .gldim import end_algebra, resolution_entry
    G = _generator(spec, T)
    E = end_algebra(G.ctx, G.objects())
    v = verdict(G, spec.options["cutoff"], E)
    cert = None
    if args.certificate:
        cert = []
        for l in _samples(G, args.limit):
            s = verify_sample(G, l)
            if not s.built:
                cert.append(dict(rp.sample_row(s), M0=[], M1=[], hom_alternating_sum=None))
                continue
            cert.append(rp.sample_row(s, resolution_entry(E, G, l, spec.options["cutoff"], sample=s)))
    rep = rp.gldim_report(spec.name, G, v, E, cert)
    _emit(args, out, rep)
    if args.figures:
        from .figures import plot_quiver
        d = Path(args.figures)
        d.mkdir(parents=True, exist_ok=True)
        q = rep["b_quiver"]
        plot_quiver(d / f"{spec.name}-b-quiver.png", q["vertices"], [(i - 1, j - 1) for i, j in q["arrows"]],
                    f"quiver of B ({spec.name})")
    ok = v.w_rep_dim_witness and (cert is None or rep["certificate"]["holds"])
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_dot(spec, T, args, out) -> int:
    from . import dot
    cat = T.catalog
    comp = args.component
    tor = enumerate_torsion(T) if T.preinjective else None
    cones = maximal_cones(T)
    if comp == "tubes":
        text = "".join(dot.tube_dot(cat, t.tube_id, T, tor, cones) for t in cat.exceptional_tubes())
    elif comp.startswith("tube:"):
        text = dot.tube_dot(cat, comp[5:], T, tor, cones)
    elif comp in ("preinjective", "preprojective"):
        text = dot.transjective_dot(cat, comp, T, tor)
    elif comp == "bquiver":
        q = rp.b_quiver_section(_generator(spec, T))
        text = dot.quiver_dot(f"B {spec.name}", q["vertices"], [(i - 1, j - 1) for i, j in q["arrows"]])
    else:
        raise SpecError("--component", f"unknown component {comp!r}")
    out.write(text)
    if args.json:
        Path(args.json).write_text(rp.to_json({"command": "dot", "instance": spec.name, "component": comp, "dot": text}))
    return EXIT_OK


COMMANDS = {"validate": cmd_validate, "torsion": cmd_torsion, "generator": cmd_generator,
            "verify": cmd_verify, "gldim": cmd_gldim, "dot": cmd_dot}


def main(argv=None, out=None) -> int:
    from .generator import GeneratorError
    from .gldim import GlDimError
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        spec = _load(args)
        T = spec.tilting_module()
    except (SpecError, TiltingError, CatalogError) as e:
        out.write(f"error: {e}\n")
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](spec, T, args, out)
    except SpecError as e:
        out.write(f"error: {e}\n")
        return EXIT_INPUT
    except (TiltingError, CatalogError) as e:
        out.write(f"error: {e}\n")
        return EXIT_INPUT
    except (GeneratorError, GlDimError) as e:
        out.write(f"property failure: {e}\n")
        if getattr(e, "witness", None) is not None:
            out.write(f"witness: {e.witness}\n")
        return EXIT_PROPERTY


if __name__ == "__main__":
    sys.exit(main())
