"""Verification suites: each runs one family of identities exhaustively or on seeded samples.

A suite returns a :class:`Report`; failures record the inputs and both
sides of the violated identity.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .braidk0 import orbit_quotient_action, preserves_form, skew_form, verify_braid_relations
from .clustergeom import cluster_tilting_objects, diagonals, geom_bijection, triangulations
from .derivedcat import derived_category
from .dgkernel import (
    ChainMap,
    Complex,
    GradedMap,
    _hom,
    compose,
    cone,
    cone_triangle,
    homology_dims,
    homology_homs,
    identity_map,
    is_cofibration,
    is_weak_equivalence,
    quotient,
    shift,
    shift_map,
    verify_cone_representability,
)
from .exactlin import QQ, Field, Matrix, kernel, rank
from .orbitcat import AutoEquivalence, cluster_category, orbit_category
from .quiverrep import Quiver
from .sampling import random_chain_map, random_cofibration, random_complex

__all__ = [
    "Report",
    "serre_suite",
    "two_cy_suite",
    "finiteness_suite",
    "cone_suite",
    "homotopy_suite",
    "counting_suite",
    "braid_suite",
    "cofibration_suite",
    "brute_force_homotopy_dim",
    "SUITES",
    "run_all",
]

CATALAN = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132}


@dataclass
class Report:
    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, **detail) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(detail)

    def to_json(self) -> dict:
        return {"suite": self.name, "cases": self.cases, "failures": self.failures,
                "seconds": round(self.seconds, 3), "ok": self.ok, **({"notes": self.notes} if self.notes else {})}


def _timed(name: str, body: Callable[[Report], None]) -> Report:
    rep = Report(name)
    start = time.perf_counter()
    body(rep)
    rep.seconds = time.perf_counter() - start
    return rep


def _label(x) -> list[int]:
    return [x.module_index, x.shift]


# ---------------------------------------------------------------------------
# 1. Serre duality


def serre_suite(n_max: int = 5, shifts: tuple[int, int] = (-3, 3), field: Field = QQ) -> Report:
    def body(rep):
        for n in range(1, n_max + 1):
            cat = derived_category(Quiver.linear(n), field)
            labels = cat.labels(range(shifts[0], shifts[1] + 1))
            for x in labels:
                nx = cat.serre(x)
                for y in labels:
                    lhs, rhs = cat.hom_dim(x, y), cat.hom_dim(y, nx)
                    rep.check(lhs == rhs, n=n, x=_label(x), y=_label(y), hom_xy=lhs, hom_y_nux=rhs)

    return _timed("serre", body)


# ---------------------------------------------------------------------------
# 2. 2-Calabi-Yau


def two_cy_suite(n_max: int = 4, field: Field = QQ) -> Report:
    def body(rep):
        for n in range(1, n_max + 1):
            oc = cluster_category(Quiver.linear(n), field)
            objs = oc.indecomposables
            for x in objs:
                for y in objs:
                    lhs, rhs = oc.hom(x, y).total, oc.hom(y, x.suspend(2)).total
                    rep.check(lhs == rhs, n=n, x=_label(x), y=_label(y), hom=lhs, hom_dual=rhs)
                    e1, e2 = oc.ext1(x, y), oc.ext1(y, x)
                    rep.check(e1 == e2, n=n, x=_label(x), y=_label(y), ext_xy=e1, ext_yx=e2)

    return _timed("two_cy", body)


# ---------------------------------------------------------------------------
# 3. Orbit hom finiteness and dg compatibility


def finiteness_suite(n_support: int = 5, n_dg: int = 3, field: Field = QQ) -> Report:
    def body(rep):
        p_star = {}
        for n in range(1, n_support + 1):
            oc = cluster_category(Quiver.linear(n), field)
            objs = oc.indecomposables
            for x in objs:
                for y in objs:
                    try:
                        h = oc.hom(x, y)
                    except ValueError as exc:
                        rep.check(False, n=n, x=_label(x), y=_label(y), error=str(exc))
                        continue
                    keys = sorted(h.support)
                    width_ok = not keys or keys[-1] - keys[0] <= 3
                    inside = all(-10 <= k <= 10 for k in keys)
                    rep.check(width_ok and inside, n=n, x=_label(x), y=_label(y), support=keys)
                    if n <= n_dg:
                        dims, p = oc.dg_hom(x, y)
                        p_star[n] = max(p_star.get(n, 0), p)
                        rep.check(dims[0] == h.total, n=n, x=_label(x), y=_label(y),
                                  dg_degree0=dims[0], orbit_total=h.total)
        rep.notes["max_stabilization_index"] = p_star

    return _timed("finiteness_dg", body)


# ---------------------------------------------------------------------------
# 4. Cone representability


def cone_suite(seed: int = 0, count: int = 30, field: Field = QQ) -> Report:
    q = Quiver.linear(2)

    def body(rep):
        rng = random.Random(seed)
        for k in range(count):
            X = random_complex(rng, q, field)
            Y = random_complex(rng, q, field)
            Z = random_complex(rng, q, field)
            f = random_chain_map(rng, X, Y)
            rep.check(verify_cone_representability(f, Z), case=k, kind="random")
        # identity on a nonzero complex: positive case and the three corruptions
        X = Complex.zero(q, field)
        while X.is_zero():
            X = random_complex(rng, q, field)
        ident = identity_map(X)
        rep.check(verify_cone_representability(ident, X), kind="identity")
        for corruption in ("sign", "dropped", "swapped"):
            rep.check(not verify_cone_representability(ident, X, corruption=corruption),
                      kind="corruption", corruption=corruption)

    return _timed("cone", body)


# ---------------------------------------------------------------------------
# 5. Homotopy category against a brute-force oracle


def _layout(X: Complex, Y: Complex, n: int):
    """Offsets of each (k, vertex) block in a flat vector of per-vertex matrices X_k -> Y_{k+n}."""
    blocks = []
    off = 0
    for k in X.degrees:
        for v in X.quiver.vertices:
            r, c = Y.obj(k + n).dim(v), X.obj(k).dim(v)
            blocks.append((k, v, off, r, c))
            off += r * c
    return blocks, off


def _unflatten(vec, blocks, field) -> dict:
    out = {}
    for k, v, off, r, c in blocks:
        out[(k, v)] = Matrix._raw(r, c, tuple(vec[off:off + r * c]), field)
    return out


def _mat(d: dict, k: int, v: int, r: int, c: int, field) -> Matrix:
    return d.get((k, v)) or Matrix.zeros(r, c, field)


def _linear_map_columns(size: int, fn, field) -> list[tuple]:
    cols = []
    for j in range(size):
        e = [field.zero] * size
        e[j] = field.one
        cols.append(fn(e))
    return cols


def brute_force_homotopy_dim(X: Complex, Y: Complex) -> int:
    """dim {chain maps} / {d_Y h + h d_X}, from raw per-vertex matrices (no hom-space bases)."""
    q, fld = X.quiver, X.field

    def intertwine(vec, n, blocks):
        mats = _unflatten(vec, blocks, fld)
        out = []
        for k in X.degrees:
            for a, (s, t) in enumerate(q.arrows):
                ms = _mat(mats, k, s, Y.obj(k + n).dim(s), X.obj(k).dim(s), fld)
                mt = _mat(mats, k, t, Y.obj(k + n).dim(t), X.obj(k).dim(t), fld)
                out.extend((Y.obj(k + n).maps[a] @ ms - mt @ X.obj(k).maps[a]).entries)
        return tuple(out)

    b0, n0 = _layout(X, Y, 0)
    b1, n1 = _layout(X, Y, 1)

    def chain_condition(vec):
        mats = _unflatten(vec, b0, fld)
        out = []
        for k in range(X.low, X.high + 2):
            for v in q.vertices:
                fk = _mat(mats, k, v, Y.obj(k).dim(v), X.obj(k).dim(v), fld)
                fk1 = _mat(mats, k - 1, v, Y.obj(k - 1).dim(v), X.obj(k - 1).dim(v), fld)
                out.extend((Y.d(k).mats[v - 1] @ fk - fk1 @ X.d(k).mats[v - 1]).entries)
        return tuple(out)

    def homotopy_boundary(vec):
        mats = _unflatten(vec, b1, fld)
        out = [fld.zero] * n0
        for k, v, off, r, c in b0:
            hk = _mat(mats, k, v, Y.obj(k + 1).dim(v), X.obj(k).dim(v), fld)
            hk1 = _mat(mats, k - 1, v, Y.obj(k).dim(v), X.obj(k - 1).dim(v), fld)
            m = Y.d(k + 1).mats[v - 1] @ hk + hk1 @ X.d(k).mats[v - 1]
            out[off:off + r * c] = m.entries
        return tuple(out)

    if n0 == 0:
        return 0
    cols = [intertwine(e, 0, b0) + chain_condition(e) for e in _linear_map_columns(n0, lambda e: e, fld)]
    system = Matrix.from_columns(cols, fld, rows=len(cols[0]))
    cycles_dim = n0 - rank(system)
    if n1 == 0:
        return cycles_dim
    hcols = [intertwine(e, 1, b1) for e in _linear_map_columns(n1, lambda e: e, fld)]
    h_space, _ = kernel(Matrix.from_columns(hcols, fld, rows=len(hcols[0]))) if hcols[0] else \
        ([tuple(e) for e in _linear_map_columns(n1, lambda e: e, fld)], ())
    if not h_space:
        return cycles_dim
    boundaries = Matrix.from_columns([homotopy_boundary(h) for h in h_space], fld, rows=n0)
    return cycles_dim - rank(boundaries)


def homotopy_suite(seed: int = 0, count: int = 50, field: Field = QQ) -> Report:
    q = Quiver.linear(2)

    def body(rep):
        rng = random.Random(seed)
        for k in range(count):
            X = random_complex(rng, q, field)
            Y = random_complex(rng, q, field)
            got, _ = homology_homs(X, Y)
            want = brute_force_homotopy_dim(X, Y)
            rep.check(got == want, case=k, homology_homs=got, brute_force=want)

    return _timed("homotopy", body)


# ---------------------------------------------------------------------------
# 6. Counting identities


def counting_suite(n_max: int = 4, field: Field = QQ) -> Report:
    def body(rep):
        for n in range(1, n_max + 1):
            oc = cluster_category(Quiver.linear(n), field)
            objs = oc.indecomposables
            expected = n * (n + 3) // 2
            rep.check(len(objs) == expected == len(diagonals(n)), n=n, orbit_indecomposables=len(objs),
                      diagonals=len(diagonals(n)), expected=expected)
            tri = triangulations(n)
            tilt = cluster_tilting_objects(oc)
            rep.check(len(tri) == len(tilt) == CATALAN[n], n=n, triangulations=len(tri),
                      tilting=len(tilt), catalan=CATALAN[n])
            try:
                b = geom_bijection(oc)
            except RuntimeError as exc:
                rep.check(False, n=n, error=str(exc))
                continue
            moved = {frozenset(b[d] for d in t) for t in tri}
            rep.check(moved == set(tilt), n=n, transported=len(moved), tilting=len(tilt))

    return _timed("counting", body)


# ---------------------------------------------------------------------------
# 7. Braid relations and the quotient action


def braid_suite(m_max: int = 6, quotient_max: int = 4) -> Report:
    def body(rep):
        for m in range(1, m_max + 1):
            q = Quiver.linear(m)
            rep.check(verify_braid_relations(q), m=m, check="braid_relations")
            for i in range(1, m + 1):
                rep.check(preserves_form(q, i), m=m, i=i, check="form_preservation")
            if m >= 2:
                rep.check(not verify_braid_relations(q, skew_form(q, symmetric=True)), m=m,
                          check="symmetrized_control_fails")
        for m in range(1, quotient_max + 1):
            act = orbit_quotient_action(Quiver.linear(m))
            rep.check(act.trivial, m=m, check="quotient_trivial", invariants=list(act.invariants),
                      well_defined=list(act.well_defined),
                      images=[[list(r) for r in img] for img in act.generator_images])

    return _timed("braid", body)


# ---------------------------------------------------------------------------
# 8. Cofibrations


def _postcompose_matrix(Z: Complex, g: ChainMap) -> Matrix:
    """H_0 Hom(Z, A) -> H_0 Hom(Z, B) induced by g: A -> B, in homology bases."""
    src, tgt = _hom(Z, g.source), _hom(Z, g.target)
    basis = src.homology_basis(0)
    rows = tgt.homology_dim(0)
    cols = [tgt.homology_coords(compose(g, b)) for b in basis]
    return Matrix.from_columns(cols, Z.field, rows=rows) if cols else Matrix.zeros(rows, 0, Z.field)


def triangle_exactness(f: ChainMap, Z: Complex) -> list[tuple[int, int, int]]:
    """(rank in, dim, rank out) at Y, Cf and Sigma X for Hom_K(Z, -) of X -> Y -> Cf -> Sigma X -> Sigma Y."""
    tri = cone_triangle(f)
    maps = [f, tri.inclusion, tri.projection, shift_map(f, 1)]
    mats = [_postcompose_matrix(Z, g) for g in maps]
    out = []
    for k in range(1, 4):
        middle = _hom(Z, maps[k].source).homology_dim(0)
        out.append((rank(mats[k - 1]), middle, rank(mats[k])))
    return out


def cofibration_suite(seed: int = 0, count: int = 20, field: Field = QQ) -> Report:
    q = Quiver.linear(2)

    def body(rep):
        rng = random.Random(seed)
        for k in range(count):
            i, W = random_cofibration(rng, q, field)
            rep.check(is_cofibration(i), case=k, check="is_cofibration")
            Q, proj = quotient(i)
            C = cone(i)
            hq, hc = homology_dims(Q), homology_dims(C)
            rep.check(hq == hc, case=k, check="homology", quotient=str(hq), cone=str(hc))
            comparison = ChainMap.from_function(C, Q, 0, lambda n: proj.comp(n) @ _first_block(C, i, n))
            rep.check(is_weak_equivalence(comparison), case=k, check="comparison_weak_equivalence")
            Z = random_complex(rng, q, field)
            for spot, (r_in, dim, r_out) in zip(("Y", "Cf", "SigmaX"), triangle_exactness(i, Z)):
                rep.check(r_in + r_out == dim, case=k, check="exactness", at=spot,
                          rank_in=r_in, dim=dim, rank_out=r_out)

    return _timed("cofibration", body)


def _first_block(C: Complex, f: ChainMap, n: int):
    """Projection (Cf)_n = Y_n (+) X_{n-1} -> Y_n."""
    from .quiverrep import RepMorphism, block_morphism

    Y, X = f.target, f.source
    return block_morphism([Y.obj(n), X.obj(n - 1)], [Y.obj(n)], [[RepMorphism.identity(Y.obj(n)), None]],
                          source=C.obj(n), target=Y.obj(n))


# ---------------------------------------------------------------------------


SUITES = {
    "serre": 1,
    "two_cy": 2,
    "finiteness_dg": 3,
    "cone": 4,
    "homotopy": 5,
    "counting": 6,
    "braid": 7,
    "cofibration": 8,
}


def run_all(n: int = 5, seed: int = 0, field: Field = QQ) -> list[Report]:
    """Every acceptance suite with sizes capped at ``n``."""
    return [
        serre_suite(min(n, 5), field=field),
        two_cy_suite(min(n, 4), field=field),
        finiteness_suite(min(n, 5), min(n, 3), field=field),
        cone_suite(seed, field=field),
        homotopy_suite(seed, field=field),
        counting_suite(min(n, 4), field=field),
        braid_suite(max(min(n, 6), 2), min(n, 4)),
        cofibration_suite(seed, field=field),
    ]
