"""Bounded chain complexes of quiver representations as a dg category.

Grading is homological: ``d_n: X_n -> X_{n-1}``.  A graded map of degree
``n`` has components ``X_k -> Y_{k+n}`` and the hom-complex differential is
``df = d_Y f - (-1)^n f d_X``.  Plain vector spaces are representations of
the one-vertex quiver, so the same code covers complexes of vector spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .exactlin import QQ, DimensionMismatchError, Field, FieldMismatchError, Matrix, kernel, rank, rref, solve
from .quiverrep import (
    Quiver,
    QuiverError,
    Rep,
    RepMorphism,
    _solve_columns,
    block_morphism,
    cokernel_rep,
    direct_sum,
    hom_space,
    kernel_rep,
)

__all__ = [
    "Complex",
    "GradedMap",
    "ChainMap",
    "HomComplex",
    "HomotopyClass",
    "hom_complex",
    "shift",
    "shift_map",
    "cone",
    "cone_triangle",
    "verify_cone_representability",
    "cycle_homs",
    "homology_homs",
    "is_nullhomotopic",
    "nullhomotopy",
    "is_cofibration",
    "is_weak_equivalence",
    "is_quasi_isomorphism",
    "has_homotopy_inverse",
    "homology",
    "homology_dims",
    "quotient",
    "compose",
    "identity_map",
]


@lru_cache(maxsize=None)
def _zero(q: Quiver, field: Field) -> Rep:
    return Rep.zero(q, field)


def _zero_map(source: Rep, target: Rep) -> RepMorphism:
    return RepMorphism.zero(source, target)


@dataclass(frozen=True)
class Complex:
    """A bounded complex; ``diffs[i]`` is ``d_{low+i+1}: X_{low+i+1} -> X_{low+i}``.

    Zero objects at either end are trimmed, so equal complexes compare equal
    regardless of how they were padded.
    """

    quiver: Quiver
    field: Field
    low: int
    objects: tuple[Rep, ...]
    diffs: tuple[RepMorphism, ...]

    def __post_init__(self):
        objs = list(self.objects)
        diffs = list(self.diffs)
        if len(diffs) != max(len(objs) - 1, 0):
            raise DimensionMismatchError("need one differential between each pair of adjacent objects")
        for r in objs:
            if r.quiver != self.quiver:
                raise QuiverError("complex objects over different quivers")
            if r.field is not self.field:
                raise FieldMismatchError("complex objects over different fields")
        for i, d in enumerate(diffs):
            if d.source != objs[i + 1] or d.target != objs[i]:
                raise DimensionMismatchError(f"differential d_{self.low + i + 1} has the wrong source or target")
        for i in range(1, len(diffs)):
            if not (diffs[i - 1] @ diffs[i]).is_zero():
                raise ValueError(f"d_{self.low + i} o d_{self.low + i + 1} != 0")
        low = self.low
        while objs and objs[0].is_zero():
            objs.pop(0)
            if diffs:
                diffs.pop(0)
            low += 1
        while objs and objs[-1].is_zero():
            objs.pop()
            if diffs:
                diffs.pop()
        if not objs:
            low = 0
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "objects", tuple(objs))
        object.__setattr__(self, "diffs", tuple(diffs))

    # -- construction -------------------------------------------------------

    @classmethod
    def build(cls, objects: Mapping[int, Rep], diffs: Mapping[int, RepMorphism] | None = None,
              quiver: Quiver | None = None, field: Field | None = None) -> "Complex":
        """From ``{degree: Rep}`` and ``{n: d_n}``; missing differentials are zero."""
        diffs = dict(diffs or {})
        if objects:
            any_rep = next(iter(objects.values()))
            quiver = quiver or any_rep.quiver
            field = field or any_rep.field
        if quiver is None:
            raise ValueError("empty complex needs a quiver")
        field = field or QQ
        if not objects:
            return cls(quiver, field, 0, (), ())
        for n in diffs:
            if n not in objects and n - 1 not in objects:
                raise ValueError(f"differential d_{n} between zero objects")
        lo = min(objects)
        hi = max(objects)
        z = _zero(quiver, field)
        objs = [objects.get(k, z) for k in range(lo, hi + 1)]
        ds = []
        for k in range(lo + 1, hi + 1):
            d = diffs.get(k)
            ds.append(d if d is not None else _zero_map(objs[k - lo], objs[k - 1 - lo]))
        return cls(quiver, field, lo, tuple(objs), tuple(ds))

    @classmethod
    def stalk(cls, rep: Rep, degree: int = 0) -> "Complex":
        return cls(rep.quiver, rep.field, degree, (rep,), ())

    @classmethod
    def zero(cls, quiver: Quiver, field: Field = QQ) -> "Complex":
        return cls(quiver, field, 0, (), ())

    @classmethod
    def of_vector_spaces(cls, dims: Mapping[int, int], diffs: Mapping[int, Matrix] | None = None,
                         field: Field = QQ) -> "Complex":
        """A complex of vector spaces; ``diffs[n]`` has shape ``dims[n-1] x dims[n]``."""
        q = Quiver(1)
        objects = {k: Rep.vector_space(d, field) for k, d in dims.items()}
        maps = {}
        for n, m in (diffs or {}).items():
            src = objects.get(n, Rep.vector_space(0, field))
            tgt = objects.get(n - 1, Rep.vector_space(0, field))
            maps[n] = RepMorphism(src, tgt, (m,))
        return cls.build(objects, maps, q, field)

    # -- access ---------------------------------------------------------------

    @property
    def high(self) -> int:
        return self.low + len(self.objects) - 1

    @property
    def degrees(self) -> range:
        return range(self.low, self.low + len(self.objects))

    def is_zero(self) -> bool:
        return not self.objects

    def obj(self, n: int) -> Rep:
        if self.low <= n <= self.high:
            return self.objects[n - self.low]
        return _zero(self.quiver, self.field)

    def d(self, n: int) -> RepMorphism:
        if self.low < n <= self.high:
            return self.diffs[n - self.low - 1]
        return _zero_map(self.obj(n), self.obj(n - 1))

    def dims(self) -> dict[int, tuple[int, ...]]:
        return {n: self.obj(n).dims for n in self.degrees}


# ---------------------------------------------------------------------------
# Graded maps


@dataclass(frozen=True)
class GradedMap:
    """Homogeneous map of degree ``degree``; ``comps[i]: X_{low+i} -> Y_{low+i+degree}``."""

    source: Complex
    target: Complex
    comps: tuple[RepMorphism, ...]
    degree: int = 0

    def __post_init__(self):
        X, Y = self.source, self.target
        object.__setattr__(self, "comps", tuple(self.comps))
        if X.quiver != Y.quiver or X.field is not Y.field:
            raise QuiverError("graded map between complexes over different quivers or fields")
        if len(self.comps) != len(X.objects):
            raise DimensionMismatchError("one component per source degree required")
        for k, c in zip(X.degrees, self.comps):
            if c.source != X.obj(k) or c.target != Y.obj(k + self.degree):
                raise DimensionMismatchError(f"component at degree {k} has the wrong source or target")

    @classmethod
    def from_function(cls, X: Complex, Y: Complex, degree: int,
                      fn: Callable[[int], RepMorphism | None]) -> "GradedMap":
        comps = []
        for k in X.degrees:
            c = fn(k)
            comps.append(c if c is not None else _zero_map(X.obj(k), Y.obj(k + degree)))
        return cls(X, Y, tuple(comps), degree)

    @classmethod
    def zero(cls, X: Complex, Y: Complex, degree: int = 0) -> "GradedMap":
        return cls.from_function(X, Y, degree, lambda k: None)

    def comp(self, k: int) -> RepMorphism:
        X = self.source
        if X.low <= k <= X.high:
            return self.comps[k - X.low]
        return _zero_map(X.obj(k), self.target.obj(k + self.degree))

    def _like(self, comps) -> "GradedMap":
        return GradedMap(self.source, self.target, tuple(comps), self.degree)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        if (self.source, self.target, self.degree) != (other.source, other.target, other.degree):
            raise ValueError("adding graded maps of different type")
        return self._like(a + b for a, b in zip(self.comps, other.comps))

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + (-other)

    def __neg__(self) -> "GradedMap":
        return self._like(-a for a in self.comps)

    def scale(self, c) -> "GradedMap":
        return self._like(a.scale(c) for a in self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def as_graded(self) -> "GradedMap":
        return GradedMap(self.source, self.target, self.comps, self.degree)


def differential(f: GradedMap) -> GradedMap:
    """d f = d_Y f - (-1)^n f d_X, a map of degree n - 1."""
    X, Y, n = f.source, f.target, f.degree
    sign = -1 if n % 2 else 1

    def comp(k):
        a = Y.d(k + n) @ f.comp(k)
        b = f.comp(k - 1) @ X.d(k)
        return a - b.scale(sign)

    return GradedMap.from_function(X, Y, n - 1, comp)


def compose(g: GradedMap, f: GradedMap) -> GradedMap:
    """g o f, of degree |g| + |f|."""
    if f.target != g.source:
        raise ValueError("graded maps are not composable")
    return GradedMap.from_function(f.source, g.target, f.degree + g.degree,
                                   lambda k: g.comp(k + f.degree) @ f.comp(k))


class ChainMap(GradedMap):
    """A degree-0 cycle of the hom complex."""

    def __init__(self, source: Complex, target: Complex, comps: Sequence[RepMorphism], degree: int = 0):
        if degree != 0:
            raise ValueError("a chain map has degree 0")
        super().__init__(source, target, tuple(comps), 0)

    def __post_init__(self):
        super().__post_init__()
        if not differential(self).is_zero():
            raise ValueError("components do not commute with the differentials")

    @classmethod
    def of(cls, f: GradedMap) -> "ChainMap":
        return cls(f.source, f.target, f.comps)

    @classmethod
    def from_function(cls, X, Y, degree, fn) -> "ChainMap":
        return cls.of(GradedMap.from_function(X, Y, degree, fn))

    @classmethod
    def zero(cls, X: Complex, Y: Complex, degree: int = 0) -> "ChainMap":
        return cls.of(GradedMap.zero(X, Y, 0))


def identity_map(X: Complex) -> ChainMap:
    return ChainMap(X, X, tuple(RepMorphism.identity(r) for r in X.objects))


# ---------------------------------------------------------------------------
# Hom complexes


class HomComplex:
    """Coordinates for Hom(X, Y) as a complex of vector spaces.

    Degree ``n`` is the direct sum over ``k`` of ``hom_space(X_k, Y_{k+n})``;
    coordinates concatenate the blocks in increasing ``k``.
    """

    def __init__(self, X: Complex, Y: Complex):
        if X.quiver != Y.quiver or X.field is not Y.field:
            raise QuiverError("hom complex between complexes over different quivers or fields")
        self.X, self.Y = X, Y
        self.field = X.field
        self._diff: dict[int, Matrix] = {}
        self._hom: dict[int, tuple] = {}

    @property
    def degrees(self) -> range:
        X, Y = self.X, self.Y
        if X.is_zero() or Y.is_zero():
            return range(0)
        return range(Y.low - X.high, Y.high - X.low + 1)

    def blocks(self, n: int) -> list[tuple[int, object]]:
        X, Y = self.X, self.Y
        return [(k, hom_space(X.obj(k), Y.obj(k + n))) for k in X.degrees]

    def dim(self, n: int) -> int:
        return sum(h.dimension for _, h in self.blocks(n))

    def element(self, n: int, coords: Sequence) -> GradedMap:
        comps = {}
        off = 0
        for k, h in self.blocks(n):
            comps[k] = h.element(coords[off:off + h.dimension])
            off += h.dimension
        if off != len(coords):
            raise DimensionMismatchError(f"{len(coords)} coordinates for a {off}-dimensional space")
        return GradedMap.from_function(self.X, self.Y, n, comps.get)

    def coords(self, f: GradedMap) -> tuple:
        if f.source != self.X or f.target != self.Y:
            raise ValueError("map does not belong to this hom complex")
        out = ()
        for k, h in self.blocks(f.degree):
            out += h.coords(f.comp(k))
        return out

    def basis(self, n: int) -> list[GradedMap]:
        dim = self.dim(n)
        f = self.field
        return [self.element(n, [f.one if i == j else f.zero for i in range(dim)]) for j in range(dim)]

    def differential_matrix(self, n: int) -> Matrix:
        """Matrix of d: Hom_n -> Hom_{n-1}."""
        if n not in self._diff:
            cols = [self.coords(differential(b)) for b in self.basis(n)]
            self._diff[n] = Matrix.from_columns(cols, self.field, rows=self.dim(n - 1))
        return self._diff[n]

    def cycles(self, n: int) -> list[GradedMap]:
        basis, _ = kernel(self.differential_matrix(n))
        return [self.element(n, v) for v in basis]

    def _homology_data(self, n: int):
        if n not in self._hom:
            f = self.field
            dim = self.dim(n)
            z_basis, _ = kernel(self.differential_matrix(n))
            bd = self.differential_matrix(n + 1)
            _, piv = rref(bd)
            b_cols = [bd.col(j) for j in piv]
            reps = []
            current = list(b_cols)
            r = len(current)
            for z in z_basis:
                trial = current + [z]
                if rank(Matrix.from_columns(trial, f, rows=dim)) > r:
                    current, r = trial, r + 1
                    reps.append(z)
            system = Matrix.from_columns(current, f, rows=dim) if current else Matrix.zeros(dim, 0, f)
            self._hom[n] = (len(b_cols), reps, system)
        return self._hom[n]

    def homology_dim(self, n: int) -> int:
        return len(self._homology_data(n)[1])

    def homology_basis(self, n: int) -> list[GradedMap]:
        return [self.element(n, z) for z in self._homology_data(n)[1]]

    def homology_coords(self, z: GradedMap) -> tuple:
        """Class of a cycle in the basis of ``homology_basis(z.degree)``."""
        nb, _, system = self._homology_data(z.degree)
        x = solve(system, self.coords(z))
        if x is None:
            raise ValueError("not a cycle")
        return tuple(x[nb:])

    def boundary_preimage(self, z: GradedMap) -> GradedMap | None:
        """Some h of degree |z| + 1 with dh = z, or None."""
        x = solve(self.differential_matrix(z.degree + 1), self.coords(z))
        return None if x is None else self.element(z.degree + 1, x)

    def as_complex(self) -> Complex:
        degs = list(self.degrees)
        q = Quiver(1)
        if not degs:
            return Complex.zero(q, self.field)
        dims = {n: self.dim(n) for n in degs}
        diffs = {n: self.differential_matrix(n) for n in degs if n - 1 in dims}
        return Complex.of_vector_spaces(dims, diffs, self.field)


@lru_cache(maxsize=4096)
def _hom(X: Complex, Y: Complex) -> HomComplex:
    return HomComplex(X, Y)


def hom_complex(X: Complex, Y: Complex) -> Complex:
    return _hom(X, Y).as_complex()


# ---------------------------------------------------------------------------
# Shift, homology, cone


def shift(X: Complex, n: int) -> Complex:
    """(Sigma^n X)_{k+n} = X_k with differential (-1)^n d."""
    if n == 0:
        return X
    sign = -1 if n % 2 else 1
    return Complex(X.quiver, X.field, X.low + n, X.objects, tuple(d.scale(sign) for d in X.diffs))


def shift_map(f: GradedMap, n: int) -> GradedMap:
    """Sigma^n f with the same components, so d(Sigma^n f) = (-1)^n Sigma^n(df)."""
    g = GradedMap(shift(f.source, n), shift(f.target, n), f.comps, f.degree)
    return ChainMap.of(g) if isinstance(f, ChainMap) else g


def homology(X: Complex, n: int) -> Rep:
    """H_n(X) = ker d_n / im d_{n+1} as a representation."""
    K, incl = kernel_rep(X.d(n))
    d_in = X.d(n + 1)
    q, f = X.quiver, X.field
    mats = tuple(_solve_columns(incl.mats[v - 1], d_in.mats[v - 1]) for v in q.vertices)
    into_k = RepMorphism(d_in.source, K, mats)
    H, _ = cokernel_rep(into_k)
    return H


def homology_dims(X: Complex) -> dict[int, tuple[int, ...]]:
    """Nonzero homology dimension vectors by degree."""
    out = {}
    for n in X.degrees:
        H = homology(X, n)
        if not H.is_zero():
            out[n] = H.dims
    return out


def _ident(r: Rep) -> RepMorphism:
    return RepMorphism.identity(r)


@dataclass(frozen=True)
class ConeData:
    """cone(f) with its universal maps and the triangle maps Y -> Cf -> Sigma X."""

    complex: Complex
    iota_y: ChainMap
    iota_x: GradedMap
    inclusion: ChainMap
    projection: ChainMap


def _cone_complex(f: GradedMap, corruption: str | None = None) -> tuple[Complex, Callable, Callable]:
    X, Y = f.source, f.target
    swap = corruption == "swapped"
    drop = corruption == "dropped"
    sign = -1 if corruption == "sign" else 1

    def parts(k):
        if drop:
            return [Y.obj(k)]
        return [X.obj(k - 1), Y.obj(k)] if swap else [Y.obj(k), X.obj(k - 1)]

    lo = min(Y.low, X.low + 1) if not (X.is_zero() and Y.is_zero()) else 0
    hi = max(Y.high, X.high + 1) if not (X.is_zero() and Y.is_zero()) else -1
    objects = {k: direct_sum(parts(k), X.quiver, X.field) for k in range(lo, hi + 1)}
    diffs = {}
    for k in range(lo + 1, hi + 1):
        if drop:
            grid = [[Y.d(k)]]
        else:
            fx = f.comp(k - 1).scale(sign)
            # swapped order keeps the (Y, X) block layout against the (X, Y) objects
            grid = [[Y.d(k), fx], [None, -X.d(k - 1)]]
        diffs[k] = block_morphism(parts(k), parts(k - 1), grid, source=objects[k], target=objects[k - 1])
    C = Complex.build(objects, diffs, X.quiver, X.field)

    def y_slot(k):
        return 0 if not swap else 1

    def iota_y(k):
        ps = parts(k)
        col = [_ident(Y.obj(k)) if i == y_slot(k) else None for i in range(len(ps))]
        return block_morphism([Y.obj(k)], ps, [[c] for c in col], source=Y.obj(k), target=C.obj(k))

    def iota_x(j):
        ps = parts(j + 1)
        if drop:
            return None
        x_slot = 1 - y_slot(j + 1)
        col = [_ident(X.obj(j)) if i == x_slot else None for i in range(len(ps))]
        return block_morphism([X.obj(j)], ps, [[c] for c in col], source=X.obj(j), target=C.obj(j + 1))

    return C, iota_y, iota_x


def cone_triangle(f: GradedMap) -> ConeData:
    """(Cf)_k = Y_k (+) X_{k-1}, d(y, x) = (d y + f x, -d x)."""
    if f.degree != 0:
        raise ValueError("cone of a map of nonzero degree")
    f = ChainMap.of(f)
    X, Y = f.source, f.target
    C, iy, ix = _cone_complex(f)
    iota_y = ChainMap.from_function(Y, C, 0, iy)
    iota_x = GradedMap.from_function(X, C, 1, ix)
    SX = shift(X, 1)

    def proj(k):
        return block_morphism([Y.obj(k), X.obj(k - 1)], [X.obj(k - 1)], [[None, _ident(X.obj(k - 1))]],
                              source=C.obj(k), target=SX.obj(k))

    projection = ChainMap.from_function(C, SX, 0, proj)
    return ConeData(C, iota_y, iota_x, iota_y, projection)


def cone(f: GradedMap) -> Complex:
    return cone_triangle(f).complex


def _module_differential(f: GradedMap, Z: Complex, n: int) -> Matrix:
    """d(a, b) = (da, af - db) on M(Z)_n = Hom(Y,Z)_n (+) Hom(X,Z)_{n+1}."""
    hy, hx = _hom(f.target, Z), _hom(f.source, Z)
    cols = []
    for a in hy.basis(n):
        cols.append(hy.coords(differential(a)) + hx.coords(compose(a, f)))
    for b in hx.basis(n + 1):
        db = differential(b)
        cols.append((Z.field.zero,) * hy.dim(n - 1) + tuple(-x for x in hx.coords(db)))
    rows = hy.dim(n - 1) + hx.dim(n)
    return Matrix.from_columns(cols, Z.field, rows=rows)


def verify_cone_representability(f: GradedMap, Z: Complex, corruption: str | None = None,
                                 candidate: tuple[Complex, GradedMap, GradedMap] | None = None) -> bool:
    """Check that g -> (g iota_Y, (-1)^n g iota_X) is an isomorphism Hom(C, Z) -> M(Z) of complexes.

    ``C`` is cone(f) unless a ``candidate`` triple (C, iota_Y, iota_X) is
    given; ``corruption`` in {"sign", "dropped", "swapped"} builds a broken
    candidate instead, for negative controls.  Invalid input yields False.
    """
    try:
        if f.degree != 0 or not differential(f).is_zero():
            return False
        X, Y = f.source, f.target
        if Z.quiver != X.quiver or Z.field is not X.field:
            return False
        if candidate is None:
            C, iy, ix = _cone_complex(f, corruption)
            iota_y = GradedMap.from_function(Y, C, 0, iy)
            iota_x = GradedMap.from_function(X, C, 1, ix)
        else:
            C, iota_y, iota_x = candidate
            if iota_y.source != Y or iota_x.source != X or iota_y.target != C or iota_x.target != C:
                return False
            if iota_y.degree != 0 or iota_x.degree != 1:
                return False
        # the universal element must be a 0-cycle of M(C)
        if not differential(iota_y).is_zero():
            return False
        if not (compose(iota_y, f) - differential(iota_x)).is_zero():
            return False
        hc, hy, hx = _hom(C, Z), _hom(Y, Z), _hom(X, Z)
        degs = set(hc.degrees) | set(hy.degrees) | {n - 1 for n in hx.degrees}
        if not degs:
            return True
        lo, hi = min(degs) - 1, max(degs) + 1
        phis = {}
        for n in range(lo, hi + 1):
            sign = -1 if n % 2 else 1
            cols = [hy.coords(compose(g, iota_y)) + tuple(sign * x for x in hx.coords(compose(g, iota_x)))
                    for g in hc.basis(n)]
            m_dim = hy.dim(n) + hx.dim(n + 1)
            if len(cols) != m_dim:
                return False
            phi = Matrix.from_columns(cols, Z.field, rows=m_dim)
            if rank(phi) != m_dim:
                return False
            phis[n] = phi
        for n in range(lo + 1, hi + 1):
            left = phis[n - 1] @ hc.differential_matrix(n)
            right = _module_differential(f, Z, n) @ phis[n]
            if left != right:
                return False
        return True
    except (ValueError, ArithmeticError):
        return False


# ---------------------------------------------------------------------------
# Cycle and homology categories


def cycle_homs(X: Complex, Y: Complex) -> list[ChainMap]:
    return [ChainMap.of(z) for z in _hom(X, Y).cycles(0)]


@dataclass(frozen=True, eq=False)
class HomotopyClass:
    representative: ChainMap

    @property
    def source(self) -> Complex:
        return self.representative.source

    @property
    def target(self) -> Complex:
        return self.representative.target

    def coords(self) -> tuple:
        return _hom(self.source, self.target).homology_coords(self.representative)

    def __eq__(self, other):
        if not isinstance(other, HomotopyClass):
            return NotImplemented
        if (self.source, self.target) != (other.source, other.target):
            return False
        return is_nullhomotopic(self.representative - other.representative)

    def __hash__(self):
        return hash((self.source, self.target, self.coords()))

    def is_zero(self) -> bool:
        return is_nullhomotopic(self.representative)


def homology_homs(X: Complex, Y: Complex) -> tuple[int, list[HomotopyClass]]:
    hc = _hom(X, Y)
    basis = [HomotopyClass(ChainMap.of(z)) for z in hc.homology_basis(0)]
    return len(basis), basis


def nullhomotopy(f: GradedMap) -> GradedMap | None:
    """A degree |f|+1 map h with dh = f, if one exists."""
    return _hom(f.source, f.target).boundary_preimage(f.as_graded())


def is_nullhomotopic(f: GradedMap) -> bool:
    return nullhomotopy(f) is not None


# ---------------------------------------------------------------------------
# Cofibrations and weak equivalences


def _is_split_mono(m: RepMorphism) -> bool:
    h = hom_space(m.target, m.source)
    ident = RepMorphism.identity(m.source).flat()
    if not ident:
        return True
    cols = [(b @ m).flat() for b in h.basis]
    if not cols:
        return False
    return solve(Matrix.from_columns(cols, m.source.field, rows=len(ident)), ident) is not None


def is_cofibration(f: GradedMap) -> bool:
    """Every component is a split monomorphism of representations."""
    return all(_is_split_mono(c) for c in f.comps)


def is_weak_equivalence(f: GradedMap) -> bool:
    """f is a chain homotopy equivalence, i.e. cone(f) is contractible."""
    C = cone(f)
    return is_nullhomotopic(identity_map(C))


def is_quasi_isomorphism(f: GradedMap) -> bool:
    return not homology_dims(cone(f))


def has_homotopy_inverse(f: GradedMap) -> bool:
    """Solve dg = 0, gf - dh = 1, fg - dh' = 1 directly (cross-check for is_weak_equivalence)."""
    X, Y = f.source, f.target
    h_yx, h_xx, h_yy = _hom(Y, X), _hom(X, X), _hom(Y, Y)
    fld = X.field
    cols = []
    z_xx0 = (fld.zero,) * h_xx.dim(0)
    z_yy0 = (fld.zero,) * h_yy.dim(0)
    z_yxm = (fld.zero,) * h_yx.dim(-1)
    for g in h_yx.basis(0):
        cols.append(h_yx.coords(differential(g)) + h_xx.coords(compose(g, f)) + h_yy.coords(compose(f, g)))
    for h in h_xx.basis(1):
        cols.append(z_yxm + tuple(-x for x in h_xx.coords(differential(h))) + z_yy0)
    for h in h_yy.basis(1):
        cols.append(z_yxm + z_xx0 + tuple(-x for x in h_yy.coords(differential(h))))
    rhs = z_yxm + h_xx.coords(identity_map(X)) + h_yy.coords(identity_map(Y))
    if not rhs:
        return True
    if not cols:
        return all(x == 0 for x in rhs)
    return solve(Matrix.from_columns(cols, fld, rows=len(rhs)), rhs) is not None


def quotient(f: GradedMap) -> tuple[Complex, ChainMap]:
    """Y / im f with its projection; intended for cofibrations."""
    X, Y = f.source, f.target
    q, fld = Y.quiver, Y.field
    cok = {}
    for k in Y.degrees:
        cok[k] = cokernel_rep(f.comp(k))
    diffs = {}
    for k in Y.degrees:
        if k - 1 not in cok:
            continue
        (Ck, pk), (Cm, pm) = cok[k], cok[k - 1]
        mats = []
        for v in q.vertices:
            sec = _solve_columns(pk.mats[v - 1], Matrix.identity(Ck.dim(v), fld))
            mats.append(pm.mats[v - 1] @ Y.d(k).mats[v - 1] @ sec)
        diffs[k] = RepMorphism(Ck, Cm, tuple(mats))
    Q = Complex.build({k: c for k, (c, _) in cok.items()}, diffs, q, fld)
    proj = ChainMap.from_function(Y, Q, 0, lambda k: cok[k][1])
    return Q, proj
