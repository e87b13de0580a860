"""Label model of the bounded derived category of a type-A quiver.

Every indecomposable of D^b(kQ) is a shifted module ``Sigma^a M``; functors
act on the labels ``(module_index, shift)``.  Complexes only appear through
:func:`DerivedCategory.realize`, which returns a projective resolution so that
homotopy classes on realizations compute morphisms in D^b.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .dgkernel import Complex, shift
from .exactlin import QQ, Field
from .quiverrep import (
    Quiver,
    Rep,
    TypeAOnlyError,
    ar_translate,
    block_morphism,
    direct_sum,
    ext1_dim,
    hom_space,
    indecomposables,
    injective,
    projective,
    projective_resolution,
    validate_quiver,
)

__all__ = [
    "DbIndec",
    "DbObject",
    "DerivedCategory",
    "Realization",
    "derived_category",
]


@dataclass(frozen=True, order=True)
class DbIndec:
    """The object Sigma^shift M where M = indecomposables(q)[module_index]."""

    module_index: int
    shift: int = 0

    def suspend(self, n: int = 1) -> "DbIndec":
        return DbIndec(self.module_index, self.shift + n)


@dataclass(frozen=True)
class DbObject:
    """A formal direct sum: sorted (indecomposable, multiplicity) pairs."""

    summands: tuple[tuple[DbIndec, int], ...] = ()

    def __post_init__(self):
        counts = Counter()
        for x, m in self.summands:
            if m < 1:
                raise ValueError("multiplicities must be positive")
            counts[x] += m
        object.__setattr__(self, "summands", tuple(sorted(counts.items())))

    @classmethod
    def of(cls, items: Iterable[DbIndec]) -> "DbObject":
        return cls(tuple(Counter(items).items()))

    def __iter__(self):
        for x, m in self.summands:
            for _ in range(m):
                yield x

    def is_zero(self) -> bool:
        return not self.summands


@dataclass(frozen=True)
class Realization:
    """A complex of sums of standard projectives, with the vertex of each summand by degree."""

    complex: Complex
    vertices: dict

    def at(self, n: int) -> tuple[int, ...]:
        return self.vertices.get(n, ())

    def __hash__(self):
        return hash(self.complex)


class DerivedCategory:
    """D^b(kQ) for a type-A quiver Q, with hom and Ext tables and the tau tables."""

    def __init__(self, quiver: Quiver, field: Field = QQ):
        cls = validate_quiver(quiver)
        if cls.family != "A":
            raise TypeAOnlyError(f"derived category model is type A only (got {cls})")
        self.quiver = quiver
        self.field = field
        self.modules = indecomposables(quiver, field)
        self._index = {m: k for k, m in enumerate(self.modules)}
        n = len(self.modules)
        self.hom = [[hom_space(a, b).dimension for b in self.modules] for a in self.modules]
        self.ext = [[ext1_dim(a, b) for b in self.modules] for a in self.modules]
        self.projective_index = {v: self.index_of(projective(quiver, v, field)) for v in quiver.vertices}
        self.injective_index = {v: self.index_of(injective(quiver, v, field)) for v in quiver.vertices}
        proj_vertex = {k: v for v, k in self.projective_index.items()}
        tau = []
        for k, m in enumerate(self.modules):
            if k in proj_vertex:
                tau.append(DbIndec(self.injective_index[proj_vertex[k]], -1))
            else:
                tau.append(DbIndec(self.index_of(ar_translate(m)), 0))
        self._tau = tuple(tau)
        inv = {}
        for k, t in enumerate(tau):
            inv[t.module_index] = DbIndec(k, -t.shift)
        if len(inv) != n:
            raise ArithmeticError("translate is not a bijection on module labels")
        self._tau_inv = tuple(inv[k] for k in range(n))
        self._real: dict = {}

    def index_of(self, rep: Rep) -> int:
        return self._index[rep]

    def module(self, x: DbIndec) -> Rep:
        return self.modules[x.module_index]

    def labels(self, shifts: Iterable[int]) -> list[DbIndec]:
        return [DbIndec(k, a) for a in shifts for k in range(len(self.modules))]

    # -- hom dimensions ----------------------------------------------------

    def hom_dim(self, x: DbIndec, y: DbIndec) -> int:
        """Hom(Sigma^a M, Sigma^b N): Hom(M, N) if b = a, Ext^1(M, N) if b = a + 1, else 0."""
        diff = y.shift - x.shift
        if diff == 0:
            return self.hom[x.module_index][y.module_index]
        if diff == 1:
            return self.ext[x.module_index][y.module_index]
        return 0

    def hom_dim_obj(self, x: DbObject, y: DbObject) -> int:
        return sum(mx * my * self.hom_dim(a, b) for a, mx in x.summands for b, my in y.summands)

    # -- functors on labels -----------------------------------------------

    def translate(self, x: DbIndec, n: int = 1) -> DbIndec:
        """tau^n; negative n applies the inverse."""
        table = self._tau if n >= 0 else self._tau_inv
        for _ in range(abs(n)):
            t = table[x.module_index]
            x = DbIndec(t.module_index, x.shift + t.shift)
        return x

    def suspend(self, x: DbIndec, n: int = 1) -> DbIndec:
        return x.suspend(n)

    def serre(self, x: DbIndec, n: int = 1) -> DbIndec:
        """nu^n with nu = Sigma tau."""
        return self.translate(x, n).suspend(n)

    def verify_serre_duality(self, x: DbIndec, y: DbIndec, nu=None) -> bool:
        """dim Hom(X, Y) == dim Hom(Y, nu X); ``nu`` may be replaced for negative controls."""
        nu = nu or self.serre
        return self.hom_dim(x, y) == self.hom_dim(y, nu(x))

    def is_projective(self, x: DbIndec) -> bool:
        return x.module_index in self.projective_index.values()

    # -- realizations -------------------------------------------------------

    def realize(self, x: DbIndec) -> Realization:
        """Sigma^a M as the shifted minimal projective resolution P1 -> P0 (degrees a+1, a)."""
        if x not in self._real:
            base = self._base_realization(x.module_index)
            cx = shift(base.complex, x.shift)
            verts = {k + x.shift: v for k, v in base.vertices.items()}
            self._real[x] = Realization(cx, verts)
        return self._real[x]

    @lru_cache(maxsize=None)
    def _base_realization(self, k: int) -> Realization:
        res = projective_resolution(self.modules[k])
        objects = {0: res.d.target}
        diffs = {}
        verts = {0: res.p0_vertices}
        if res.p1_vertices:
            objects[1] = res.d.source
            diffs[1] = res.d
            verts[1] = res.p1_vertices
        return Realization(Complex.build(objects, diffs, self.quiver, self.field), verts)

    def realize_object(self, x: DbObject) -> Realization:
        """Degreewise direct sum of the summand realizations."""
        parts = [self.realize(a) for a in x]
        if not parts:
            return Realization(Complex.zero(self.quiver, self.field), {})
        degs = sorted({n for p in parts for n in p.complex.degrees})
        objects, diffs, verts = {}, {}, {}
        for n in degs:
            objects[n] = direct_sum([p.complex.obj(n) for p in parts], self.quiver, self.field)
            verts[n] = tuple(v for p in parts for v in p.at(n))
        for n in degs:
            if n - 1 in objects:
                src = [p.complex.obj(n) for p in parts]
                tgt = [p.complex.obj(n - 1) for p in parts]
                grid = [[parts[j].complex.d(n) if i == j else None for i in range(len(parts))] for j in range(len(parts))]
                diffs[n] = block_morphism(src, tgt, grid, source=objects[n], target=objects[n - 1])
        return Realization(Complex.build(objects, diffs, self.quiver, self.field), verts)


@lru_cache(maxsize=None)
def derived_category(quiver: Quiver, field: Field = QQ) -> DerivedCategory:
    return DerivedCategory(quiver, field)
