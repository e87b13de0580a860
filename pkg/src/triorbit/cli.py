"""Command-line interface: ``triorbit <group> <verb> [options]``.

Exit codes: 0 success, 1 verification failure, 2 usage or quiver error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .braidk0 import braid_generator, orbit_quotient_action, preserves_form, verify_braid_relations
from .clustergeom import cluster_tilting_objects, crossing, diagonals, geom_bijection, triangulations
from .derivedcat import DbIndec, derived_category
from .orbitcat import AutoEquivalence, OrbitCategory, orbit_category
from .quiverrep import Quiver, QuiverError, interval_of, validate_quiver
from .serialize import dbindec_to_json, dumps, parse_field, parse_quiver
from .suites import Report, run_all

__all__ = ["main", "run", "export_ar_quiver"]

PALETTE = (
    "red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "cyan4", "gold3", "gray40",
    "navy", "olivedrab", "tomato", "turquoise4", "orchid", "sienna", "steelblue", "firebrick", "seagreen", "black",
)


class UsageError(Exception):
    pass


def _label_name(oc_or_cat, x: DbIndec) -> str:
    cat = getattr(oc_or_cat, "cat", oc_or_cat)
    i, j = interval_of(cat.module(x).dims, cat.quiver)
    return f"M[{i},{j}]@{x.shift}"


def export_ar_quiver(oc: OrbitCategory, window: tuple[int, int] = (-1, 1)) -> str:
    """DOT digraph of the labels with shift in ``window``, mesh arrows, one color per F-orbit.

    Every label is tau^{-k} P_i for a unique (k, i); for each arrow i -> j
    of Q the irreducible maps are (k, j) -> (k, i) and (k, i) -> (k+1, j).
    """
    cat = oc.cat
    q = cat.quiver
    lo, hi = window
    nodes = sorted((x for x in cat.labels(range(lo, hi + 1))), key=lambda x: (x.shift, x.module_index))
    wanted = set(nodes)
    coord: dict[DbIndec, tuple[int, int]] = {}
    span = (hi - lo + 3) * (oc.period + 1) * 2
    for k in range(-span, span + 1):
        for i in q.vertices:
            x = cat.translate(DbIndec(cat.projective_index[i], 0), -k)
            if x in wanted:
                coord[x] = (k, i)
    if len(coord) != len(nodes):
        raise RuntimeError("could not place every label in the mesh")
    at = {c: x for x, c in coord.items()}
    orbit_ids = {x: n for n, x in enumerate(oc.indecomposables)}
    lines = ["digraph ar_quiver {", "  rankdir=LR;"]
    for x in nodes:
        color = PALETTE[orbit_ids[oc.canonical(x)] % len(PALETTE)]
        lines.append(f'  "{_label_name(cat, x)}" [color={color}, fontcolor={color}];')
    edges = set()
    for x in nodes:
        k, v = coord[x]
        for i, j in q.arrows:
            if v == j and (k, i) in at:
                edges.add((x, at[(k, i)]))
            if v == i and (k + 1, j) in at:
                edges.add((x, at[(k + 1, j)]))
    key = lambda e: (e[0].shift, e[0].module_index, e[1].shift, e[1].module_index)
    for a, b in sorted(edges, key=key):
        lines.append(f'  "{_label_name(cat, a)}" -> "{_label_name(cat, b)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# argument handling


def _load_quiver(args) -> Quiver:
    if args.quiver:
        with open(args.quiver, encoding="utf-8") as fh:
            return parse_quiver(fh.read())
    if args.inline:
        return parse_quiver(args.inline)
    return Quiver.linear(args.n)


def _emit(args, payload: dict, table: str | None = None) -> None:
    if args.format == "json" or table is None:
        print(dumps(payload))
    else:
        print(table, end="" if table.endswith("\n") else "\n")


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    out.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(out) + "\n"


def _orbit(args) -> OrbitCategory:
    q = _load_quiver(args)
    return orbit_category(q, AutoEquivalence(args.functor[0], args.functor[1]), parse_field(args.field))


def _report_exit(args, reports: list[Report]) -> int:
    payload = {"reports": [r.to_json() for r in reports], "ok": all(r.ok for r in reports)}
    table = _table(["suite", "cases", "failures", "seconds"],
                   [[r.name, r.cases, len(r.failures), f"{r.seconds:.2f}"] for r in reports])
    _emit(args, payload, table)
    return 0 if payload["ok"] else 1


# ---------------------------------------------------------------------------
# verbs


def cmd_quiver_validate(args) -> int:
    q = _load_quiver(args)
    cls = validate_quiver(q)
    _emit(args, {"class": str(cls), "family": cls.family, "rank": cls.rank}, f"{cls}\n")
    return 0


def cmd_db_homs(args) -> int:
    cat = derived_category(_load_quiver(args), parse_field(args.field))
    labels = cat.labels(range(args.shifts[0], args.shifts[1] + 1))
    rows = []
    for x in labels:
        for y in labels:
            rows.append({"x": dbindec_to_json(cat, x), "y": dbindec_to_json(cat, y), "dim": cat.hom_dim(x, y)})
    names = [_label_name(cat, x) for x in labels]
    grid = [[names[a]] + [cat.hom_dim(x, y) for y in labels] for a, x in enumerate(labels)]
    _emit(args, {"homs": rows}, _table(["Hom"] + names, grid))
    return 0


def cmd_db_serre(args) -> int:
    cat = derived_category(_load_quiver(args), parse_field(args.field))
    rep = Report("serre")
    labels = cat.labels(range(args.shifts[0], args.shifts[1] + 1))
    for x in labels:
        for y in labels:
            lhs, rhs = cat.hom_dim(x, y), cat.hom_dim(y, cat.serre(x))
            rep.check(lhs == rhs, x=_label_name(cat, x), y=_label_name(cat, y), hom_xy=lhs, hom_y_nux=rhs)
    return _report_exit(args, [rep])


def cmd_orbit_homs(args) -> int:
    oc = _orbit(args)
    objs = oc.indecomposables
    rows, grid = [], []
    for x in objs:
        line = [_label_name(oc, x)]
        for y in objs:
            h = oc.hom(x, y)
            rows.append({"x": dbindec_to_json(oc.cat, x), "y": dbindec_to_json(oc.cat, y),
                         "total": h.total, "support": {str(k): v for k, v in sorted(h.support.items())}})
            line.append(h.total)
        grid.append(line)
    _emit(args, {"functor": str(oc.F), "homs": rows}, _table(["Hom"] + [_label_name(oc, y) for y in objs], grid))
    return 0


def cmd_orbit_indecs(args) -> int:
    oc = _orbit(args)
    objs = oc.indecomposables
    _emit(args, {"functor": str(oc.F), "count": len(objs), "objects": [dbindec_to_json(oc.cat, x) for x in objs]},
          "".join(_label_name(oc, x) + "\n" for x in objs))
    return 0


def cmd_orbit_cy(args) -> int:
    oc = _orbit(args)
    rep = Report("two_cy")
    for x in oc.indecomposables:
        for y in oc.indecomposables:
            lhs, rhs = oc.hom(x, y).total, oc.hom(y, x.suspend(2)).total
            rep.check(lhs == rhs, x=_label_name(oc, x), y=_label_name(oc, y), hom=lhs, hom_dual=rhs)
    return _report_exit(args, [rep])


def cmd_orbit_dg(args) -> int:
    oc = _orbit(args)
    rep = Report("dg_compare")
    p_star = 0
    for x in oc.indecomposables:
        for y in oc.indecomposables:
            dims, p = oc.dg_hom(x, y)
            p_star = max(p_star, p)
            total = oc.hom(x, y).total
            rep.check(dims[0] == total, x=_label_name(oc, x), y=_label_name(oc, y), dg_degree0=dims[0], total=total)
    rep.notes["max_stabilization_index"] = p_star
    return _report_exit(args, [rep])


def cmd_orbit_ar(args) -> int:
    oc = _orbit(args)
    sys.stdout.write(export_ar_quiver(oc, tuple(args.window)))
    return 0


def cmd_geom_diagonals(args) -> int:
    ds = diagonals(args.n)
    _emit(args, {"n": args.n, "count": len(ds), "diagonals": [[d.i, d.j] for d in ds]},
          "".join(f"{d}\n" for d in ds))
    return 0


def cmd_geom_tilting(args) -> int:
    q = Quiver.linear(args.n)
    oc = orbit_category(q, AutoEquivalence(-1, 1), parse_field(args.field))
    count = len(cluster_tilting_objects(oc))
    _emit(args, {"count": count}, f"{count}\n")
    return 0


def cmd_geom_bijection(args) -> int:
    q = Quiver.linear(args.n)
    oc = orbit_category(q, AutoEquivalence(-1, 1), parse_field(args.field))
    b = geom_bijection(oc)
    if args.dot:
        ds = list(b)
        lines = ["graph bijection {"]
        for d in ds:
            lines.append(f'  "{d}" [label="{d}\\n{_label_name(oc, b[d])}"];')
        for k, d in enumerate(ds):
            for e in ds[k + 1:]:
                if crossing(d, e):
                    lines.append(f'  "{d}" -- "{e}";')
        lines.append("}")
        sys.stdout.write("\n".join(lines) + "\n")
        return 0
    payload = {"n": args.n, "mapping": [{"diagonal": [d.i, d.j], "object": dbindec_to_json(oc.cat, x)}
                                        for d, x in b.items()]}
    code = 0
    if args.check:
        moved = {frozenset(b[d] for d in t) for t in triangulations(args.n)}
        ok = moved == set(cluster_tilting_objects(oc))
        payload["transports_triangulations"] = ok
        code = 0 if ok else 1
    _emit(args, payload, _table(["diagonal", "object"], [[str(d), _label_name(oc, x)] for d, x in b.items()]))
    return code


def cmd_braid_check(args) -> int:
    q = Quiver.linear(args.m)
    rel = verify_braid_relations(q)
    forms = [preserves_form(q, i) for i in range(1, args.m + 1)]
    payload = {"m": args.m, "braid_relations": rel, "form_preserved": forms,
               "generators": [braid_generator(q, i) for i in range(1, args.m + 1)]}
    ok = rel and all(forms)
    _emit(args, payload, f"braid relations: {rel}\nform preserved: {forms}\n")
    return 0 if ok else 1


def cmd_braid_quotient(args) -> int:
    act = orbit_quotient_action(Quiver.linear(args.m))
    payload = {"m": act.m, "invariants": list(act.invariants),
               "generator_images": [[list(r) for r in img] for img in act.generator_images],
               "well_defined": list(act.well_defined), "trivial": act.trivial}
    _emit(args, payload, f"invariants: {list(act.invariants)}\nwell defined: {list(act.well_defined)}\n"
                         f"trivial: {act.trivial}\n")
    return 0 if act.trivial else 1


def cmd_verify_all(args) -> int:
    return _report_exit(args, run_all(args.n, args.seed, parse_field(args.field)))


# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="Q", help="Q (default) or a prime p")
    common.add_argument("--format", choices=("json", "table", "dot"), default="json")
    common.add_argument("--quiver", metavar="FILE", help="quiver file: 'vertices n' then 'arrow s t' lines")
    common.add_argument("--inline", metavar="TEXT", help="quiver text inline; ';' separates lines")
    common.add_argument("--n", type=int, default=2, help="size: linear A_n when no quiver is given")
    common.add_argument("--seed", type=int, default=0)
    functor = argparse.ArgumentParser(add_help=False)
    functor.add_argument("--functor", type=int, nargs=2, metavar=("TAU", "SIGMA"), default=(-1, 1),
                         help="orbit by tau^TAU Sigma^SIGMA (default: cluster, -1 1)")

    p = argparse.ArgumentParser(prog="triorbit", description="Orbit categories of type-A derived categories.")
    groups = p.add_subparsers(dest="group", required=True)

    def verb(group, name, fn, parents=(common,), **kw):
        sp = group.add_parser(name, parents=list(parents), **kw)
        sp.set_defaults(func=fn)
        return sp

    g = groups.add_parser("quiver").add_subparsers(dest="verb", required=True)
    verb(g, "validate", cmd_quiver_validate)

    g = groups.add_parser("db").add_subparsers(dest="verb", required=True)
    verb(g, "homs", cmd_db_homs).add_argument("--shifts", type=int, nargs=2, default=(0, 1))
    verb(g, "serre-check", cmd_db_serre).add_argument("--shifts", type=int, nargs=2, default=(-3, 3))

    g = groups.add_parser("orbit").add_subparsers(dest="verb", required=True)
    verb(g, "homs", cmd_orbit_homs, (common, functor))
    verb(g, "indecs", cmd_orbit_indecs, (common, functor))
    verb(g, "cy-check", cmd_orbit_cy, (common, functor))
    verb(g, "dg-compare", cmd_orbit_dg, (common, functor))
    verb(g, "ar-quiver", cmd_orbit_ar, (common, functor)).add_argument(
        "--window", type=int, nargs=2, default=(-1, 1))

    g = groups.add_parser("geom").add_subparsers(dest="verb", required=True)
    verb(g, "diagonals", cmd_geom_diagonals)
    verb(g, "tilting-count", cmd_geom_tilting)
    b = verb(g, "bijection", cmd_geom_bijection)
    b.add_argument("--check", action="store_true")
    b.add_argument("--dot", action="store_true")

    g = groups.add_parser("braid").add_subparsers(dest="verb", required=True)
    verb(g, "check", cmd_braid_check).add_argument("--m", type=int, required=True)
    verb(g, "quotient", cmd_braid_quotient).add_argument("--m", type=int, required=True)

    g = groups.add_parser("verify").add_subparsers(dest="verb", required=True)
    verb(g, "all", cmd_verify_all)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "n", 1) < 1 or getattr(args, "m", 1) < 1:
        print("error: sizes must be positive", file=sys.stderr)
        return 2
    try:
        parse_field(args.field)
        return args.func(args)
    except (QuiverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
