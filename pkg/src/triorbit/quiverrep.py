"""Quivers, their representations, and homological algebra in rep(Q).

Conventions are covariant: a representation puts a space at every vertex and a
matrix of shape ``dims[target] x dims[source]`` on every arrow.  The
indecomposable projective ``P_i`` has a basis of paths starting at ``i``, so
``dim Hom(P_i, M) = dims(M)[i]``.  Everything else (which simple is
projective, the direction of Ext, the Coxeter matrix) follows from that.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

from .exactlin import QQ, DimensionMismatchError, Field, FieldMismatchError, Matrix, kernel, rank, solve

__all__ = [
    "Quiver",
    "QuiverError",
    "OrientedCycleError",
    "NotDynkinError",
    "TypeAOnlyError",
    "DynkinClass",
    "validate_quiver",
    "Rep",
    "RepMorphism",
    "HomSpace",
    "direct_sum",
    "interval_module",
    "indecomposables",
    "path_order",
    "hom_space",
    "projective",
    "injective",
    "projective_cover",
    "projective_resolution",
    "Resolution",
    "ext1_dim",
    "ar_translate",
    "nakayama_map",
    "kernel_rep",
    "cokernel_rep",
    "normalize_interval",
    "interval_of",
    "cartan_matrix",
    "coxeter_matrix",
]


class QuiverError(ValueError):
    pass


class OrientedCycleError(QuiverError):
    pass


class NotDynkinError(QuiverError):
    pass


class TypeAOnlyError(QuiverError):
    pass


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        object.__setattr__(self, "arrows", arrows)
        if self.vertex_count < 1:
            raise QuiverError("a quiver needs at least one vertex")
        for s, t in arrows:
            if not (1 <= s <= self.vertex_count and 1 <= t <= self.vertex_count):
                raise QuiverError(f"arrow {s}->{t} uses a vertex outside 1..{self.vertex_count}")

    @classmethod
    def linear(cls, n: int) -> "Quiver":
        """The linearly oriented A_n quiver 1 -> 2 -> ... -> n."""
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def out_arrows(self, v: int) -> list[int]:
        return [k for k, (s, _) in enumerate(self.arrows) if s == v]

    def in_arrows(self, v: int) -> list[int]:
        return [k for k, (_, t) in enumerate(self.arrows) if t == v]

    def topological_order(self) -> list[int]:
        indeg = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            indeg[t] += 1
        queue = deque(v for v in self.vertices if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for k in self.out_arrows(v):
                t = self.arrows[k][1]
                indeg[t] -= 1
                if indeg[t] == 0:
                    queue.append(t)
        if len(order) != self.vertex_count:
            raise OrientedCycleError("quiver has an oriented cycle")
        return order

    def path_counts(self) -> dict[tuple[int, int], int]:
        """Number of paths i ~> j for every ordered pair (trivial paths included)."""
        order = self.topological_order()
        counts = {}
        for i in self.vertices:
            c = {v: 0 for v in self.vertices}
            c[i] = 1
            for v in order:
                if c[v]:
                    for k in self.out_arrows(v):
                        c[self.arrows[k][1]] += c[v]
            for j in self.vertices:
                counts[(i, j)] = c[j]
        return counts

    def path(self, i: int, j: int) -> tuple[int, ...] | None:
        """The arrows of some path i ~> j (unique in a tree), or None."""
        prev = {i: None}
        queue = deque([i])
        while queue:
            v = queue.popleft()
            if v == j:
                break
            for k in self.out_arrows(v):
                t = self.arrows[k][1]
                if t not in prev:
                    prev[t] = (v, k)
                    queue.append(t)
        if j not in prev:
            return None
        out = []
        v = j
        while prev[v] is not None:
            v, k = prev[v]
            out.append(k)
        return tuple(reversed(out))


class DynkinClass(NamedTuple):
    family: str
    rank: int

    def __str__(self) -> str:
        return f"{self.family}_{self.rank}"


def validate_quiver(q: Quiver) -> DynkinClass:
    """Classify the underlying graph as a Dynkin diagram, or raise."""
    for s, t in q.arrows:
        if s == t:
            raise OrientedCycleError(f"loop at vertex {s} is an oriented cycle")
    q.topological_order()
    n = q.vertex_count
    edges = set()
    for s, t in q.arrows:
        e = (min(s, t), max(s, t))
        if e in edges:
            raise NotDynkinError(f"multiple edges between {e[0]} and {e[1]}")
        edges.add(e)
    adj = {v: set() for v in q.vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen = {1}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != n:
        raise NotDynkinError("underlying graph is not connected")
    if len(edges) != n - 1:
        raise NotDynkinError("underlying graph has a cycle")
    branch = [v for v in q.vertices if len(adj[v]) >= 3]
    if not branch:
        return DynkinClass("A", n)
    if len(branch) > 1 or len(adj[branch[0]]) > 3:
        raise NotDynkinError("underlying tree is not Dynkin")
    c = branch[0]
    arms = []
    for start in sorted(adj[c]):
        length, prev, cur = 1, c, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return DynkinClass("D", n)
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return DynkinClass("E", n)
    raise NotDynkinError(f"tree with arms {arms} is not Dynkin")


def _require_type_a(q: Quiver) -> None:
    cls = validate_quiver(q)
    if cls.family != "A":
        raise TypeAOnlyError(f"explicit representations are type A only (got {cls})")


@lru_cache(maxsize=None)
def path_order(q: Quiver) -> tuple[int, ...]:
    """Vertices of a type-A quiver read along the underlying path.

    Starts from the endpoint with the smaller label, so a linearly labelled
    quiver gets positions equal to labels.
    """
    _require_type_a(q)
    if q.vertex_count == 1:
        return (1,)
    adj = {v: [] for v in q.vertices}
    for s, t in q.arrows:
        adj[s].append(t)
        adj[t].append(s)
    start = min(v for v in q.vertices if len(adj[v]) == 1)
    order = [start]
    prev = None
    cur = start
    while len(order) < q.vertex_count:
        nxt = [w for w in adj[cur] if w != prev][0]
        prev, cur = cur, nxt
        order.append(cur)
    return tuple(order)


# ---------------------------------------------------------------------------
# Representations and morphisms


@dataclass(frozen=True)
class Rep:
    quiver: Quiver
    dims: tuple[int, ...]
    maps: tuple[Matrix, ...]
    field: Field = QQ

    def __post_init__(self):
        q = self.quiver
        object.__setattr__(self, "dims", tuple(self.dims))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.dims) != q.vertex_count:
            raise DimensionMismatchError("one dimension per vertex required")
        if any(d < 0 for d in self.dims):
            raise DimensionMismatchError("negative dimension")
        if len(self.maps) != len(q.arrows):
            raise DimensionMismatchError("one matrix per arrow required")
        for (s, t), m in zip(q.arrows, self.maps):
            if m.field is not self.field:
                raise FieldMismatchError(f"arrow {s}->{t} matrix over {m.field!r}, rep over {self.field!r}")
            if m.shape != (self.dims[t - 1], self.dims[s - 1]):
                raise DimensionMismatchError(f"arrow {s}->{t} has shape {m.shape}, expected {(self.dims[t - 1], self.dims[s - 1])}")

    @classmethod
    def zero(cls, q: Quiver, field: Field = QQ) -> "Rep":
        return cls(q, (0,) * q.vertex_count, tuple(Matrix.zeros(0, 0, field) for _ in q.arrows), field)

    @classmethod
    def vector_space(cls, dim: int, field: Field = QQ) -> "Rep":
        """A plain vector space, i.e. a representation of the one-vertex quiver."""
        return cls(Quiver(1), (dim,), (), field)

    def dim(self, v: int) -> int:
        return self.dims[v - 1]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def arrow_map(self, k: int) -> Matrix:
        return self.maps[k]

    def path_map(self, path: Sequence[int]) -> Matrix:
        """Matrix of the composite along a sequence of arrow indices."""
        if not path:
            raise ValueError("empty path has no source; use identity")
        s = self.quiver.arrows[path[0]][0]
        m = Matrix.identity(self.dims[s - 1], self.field)
        for k in path:
            m = self.maps[k] @ m
        return m


@dataclass(frozen=True)
class RepMorphism:
    """A morphism of representations: one matrix per vertex, intertwining arrows."""

    source: Rep
    target: Rep
    mats: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "mats", tuple(self.mats))
        src, tgt = self.source, self.target
        if src.quiver != tgt.quiver:
            raise QuiverError("morphism between representations of different quivers")
        if src.field is not tgt.field:
            raise FieldMismatchError("morphism between representations over different fields")
        if len(self.mats) != src.quiver.vertex_count:
            raise DimensionMismatchError("one matrix per vertex required")
        for v, m in zip(src.quiver.vertices, self.mats):
            if m.shape != (tgt.dims[v - 1], src.dims[v - 1]):
                raise DimensionMismatchError(f"vertex {v}: shape {m.shape}, expected {(tgt.dims[v - 1], src.dims[v - 1])}")
        for k, (s, t) in enumerate(src.quiver.arrows):
            if self.mats[t - 1] @ src.maps[k] != tgt.maps[k] @ self.mats[s - 1]:
                raise ValueError(f"matrices do not intertwine arrow {s}->{t}")

    @classmethod
    def zero(cls, source: Rep, target: Rep) -> "RepMorphism":
        f = source.field
        return cls(source, target, tuple(Matrix.zeros(target.dims[i], source.dims[i], f) for i in range(len(source.dims))))

    @classmethod
    def identity(cls, rep: Rep) -> "RepMorphism":
        return cls(rep, rep, tuple(Matrix.identity(d, rep.field) for d in rep.dims))

    @classmethod
    def unchecked(cls, source: Rep, target: Rep, mats) -> "RepMorphism":
        m = object.__new__(cls)
        object.__setattr__(m, "source", source)
        object.__setattr__(m, "target", target)
        object.__setattr__(m, "mats", tuple(mats))
        return m

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """Composite ``self o other``."""
        if other.target != self.source:
            raise ValueError("morphisms are not composable")
        return RepMorphism.unchecked(other.source, self.target, tuple(a @ b for a, b in zip(self.mats, other.mats)))

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("adding morphisms with different source/target")
        return RepMorphism.unchecked(self.source, self.target, tuple(a + b for a, b in zip(self.mats, other.mats)))

    def __sub__(self, other: "RepMorphism") -> "RepMorphism":
        return self + (-other)

    def __neg__(self) -> "RepMorphism":
        return RepMorphism.unchecked(self.source, self.target, tuple(-a for a in self.mats))

    def scale(self, c) -> "RepMorphism":
        return RepMorphism.unchecked(self.source, self.target, tuple(a.scale(c) for a in self.mats))

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def flat(self) -> tuple:
        out = ()
        for m in self.mats:
            out += m.entries
        return out

    def is_injective(self) -> bool:
        return all(rank(m) == m.cols for m in self.mats)

    def is_surjective(self) -> bool:
        return all(rank(m) == m.rows for m in self.mats)


def direct_sum(reps: Sequence[Rep], q: Quiver | None = None, field: Field | None = None) -> Rep:
    if not reps:
        if q is None:
            raise ValueError("empty direct sum needs a quiver")
        return Rep.zero(q, field or QQ)
    q = reps[0].quiver
    f = reps[0].field
    dims = tuple(sum(r.dims[i] for r in reps) for i in range(q.vertex_count))
    maps = tuple(Matrix.block_diag([r.maps[k] for r in reps], f) for k in range(len(q.arrows)))
    return Rep(q, dims, maps, f)


def block_morphism(source_parts: Sequence[Rep], target_parts: Sequence[Rep], blocks, source: Rep | None = None, target: Rep | None = None) -> RepMorphism:
    """Assemble a morphism between direct sums from a grid ``blocks[j][i]: source_i -> target_j``.

    ``None`` entries are zero blocks.
    """
    q = (source_parts or target_parts)[0].quiver if (source_parts or target_parts) else None
    f = (source_parts or target_parts)[0].field
    source = source if source is not None else direct_sum(list(source_parts), q, f)
    target = target if target is not None else direct_sum(list(target_parts), q, f)
    mats = []
    for vi in range(source.quiver.vertex_count):
        rows = []
        for j, tp in enumerate(target_parts):
            row = []
            for i, sp in enumerate(source_parts):
                b = blocks[j][i]
                row.append(b.mats[vi] if b is not None else Matrix.zeros(tp.dims[vi], sp.dims[vi], f))
            rows.append(Matrix.hstack(row) if row else Matrix.zeros(tp.dims[vi], 0, f))
        mats.append(Matrix.vstack(rows, cols=source.dims[vi], field=f) if rows else Matrix.zeros(0, source.dims[vi], f))
    return RepMorphism(source, target, tuple(mats))


# ---------------------------------------------------------------------------
# Interval modules


def interval_module(q: Quiver, i: int, j: int, field: Field = QQ) -> Rep:
    """M[i, j]: one-dimensional at path positions i..j, identity maps inside."""
    order = path_order(q)
    n = q.vertex_count
    if not 1 <= i <= j <= n:
        raise ValueError(f"invalid interval [{i}, {j}] for A_{n}")
    support = set(order[i - 1:j])
    dims = tuple(1 if v in support else 0 for v in q.vertices)
    maps = []
    for s, t in q.arrows:
        if s in support and t in support:
            maps.append(Matrix.identity(1, field))
        else:
            maps.append(Matrix.zeros(dims[t - 1], dims[s - 1], field))
    return Rep(q, dims, tuple(maps), field)


@lru_cache(maxsize=None)
def indecomposables(q: Quiver, field: Field = QQ) -> tuple[Rep, ...]:
    """The n(n+1)/2 interval modules of a type-A quiver, ordered by (i, j)."""
    n = q.vertex_count
    return tuple(interval_module(q, i, j, field) for i in range(1, n + 1) for j in range(i, n + 1))


def interval_of(dims: Sequence[int], q: Quiver) -> tuple[int, int] | None:
    """The path-position interval whose indicator is ``dims``, if any."""
    order = path_order(q)
    pos = [dims[v - 1] for v in order]
    if any(d not in (0, 1) for d in pos) or sum(pos) == 0:
        return None
    ones = [k for k, d in enumerate(pos) if d == 1]
    if ones[-1] - ones[0] + 1 != len(ones):
        return None
    return ones[0] + 1, ones[-1] + 1


def normalize_interval(rep: Rep) -> Rep | None:
    """The canonical interval module isomorphic to ``rep``, or None if ``rep`` is not one."""
    iv = interval_of(rep.dims, rep.quiver)
    if iv is None:
        return None
    for (s, t), m in zip(rep.quiver.arrows, rep.maps):
        if rep.dim(s) == 1 and rep.dim(t) == 1 and m[0, 0] == 0:
            return None
    return interval_module(rep.quiver, iv[0], iv[1], rep.field)


def projective(q: Quiver, i: int, field: Field = QQ) -> Rep:
    """P_i: spanned by the paths starting at ``i``."""
    _require_type_a(q)
    if i not in q.vertices:
        raise ValueError(f"invalid vertex {i}")
    counts = q.path_counts()
    dims = tuple(counts[(i, v)] for v in q.vertices)
    iv = interval_of(dims, q)
    return interval_module(q, iv[0], iv[1], field)


def injective(q: Quiver, i: int, field: Field = QQ) -> Rep:
    """I_i: dual to the paths ending at ``i``."""
    _require_type_a(q)
    if i not in q.vertices:
        raise ValueError(f"invalid vertex {i}")
    counts = q.path_counts()
    dims = tuple(counts[(v, i)] for v in q.vertices)
    iv = interval_of(dims, q)
    return interval_module(q, iv[0], iv[1], field)


# ---------------------------------------------------------------------------
# Hom spaces


def _intertwiner_system(M: Rep, N: Rep) -> Matrix:
    """Rows: one equation per entry of N_a phi_s - phi_t M_a; columns: entries of (phi_v)."""
    q = M.quiver
    f = M.field
    offsets = {}
    off = 0
    for v in q.vertices:
        offsets[v] = off
        off += N.dim(v) * M.dim(v)
    ncols = off
    rows = []
    z = f.zero
    for k, (s, t) in enumerate(q.arrows):
        Ma, Na = M.maps[k], N.maps[k]
        ms, mt, ns, nt = M.dim(s), M.dim(t), N.dim(s), N.dim(t)
        for i in range(nt):
            for j in range(ms):
                row = [z] * ncols
                # (N_a phi_s)[i, j] = sum_l N_a[i, l] phi_s[l, j]
                for l in range(ns):
                    c = Na[i, l]
                    if c != 0:
                        idx = offsets[s] + l * ms + j
                        row[idx] = row[idx] + c
                # (phi_t M_a)[i, j] = sum_l phi_t[i, l] M_a[l, j]
                for l in range(mt):
                    c = Ma[l, j]
                    if c != 0:
                        idx = offsets[t] + i * mt + l
                        row[idx] = row[idx] - c
                rows.append(row)
    return Matrix.from_rows(rows, f, cols=ncols) if rows else Matrix.zeros(0, ncols, f)


@dataclass(frozen=True)
class HomSpace:
    source: Rep
    target: Rep
    basis: tuple[RepMorphism, ...]
    free: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coords(self, phi: RepMorphism) -> tuple:
        """Coordinates of an intertwiner in ``basis``."""
        flat = phi.flat()
        return tuple(flat[c] for c in self.free)

    def element(self, coeffs: Sequence) -> RepMorphism:
        if len(coeffs) != len(self.basis):
            raise DimensionMismatchError(f"{len(coeffs)} coordinates for a {len(self.basis)}-dimensional hom space")
        out = RepMorphism.zero(self.source, self.target)
        for c, b in zip(coeffs, self.basis):
            if c != 0:
                out = out + b.scale(c)
        return out


def _unflatten(vec: Sequence, M: Rep, N: Rep) -> tuple[Matrix, ...]:
    mats = []
    off = 0
    for v in M.quiver.vertices:
        r, c = N.dim(v), M.dim(v)
        mats.append(Matrix._raw(r, c, tuple(vec[off:off + r * c]), M.field))
        off += r * c
    return tuple(mats)


@lru_cache(maxsize=65536)
def hom_space(M: Rep, N: Rep) -> HomSpace:
    """Basis of Hom(M, N) as the null space of the intertwining equations."""
    if M.quiver != N.quiver:
        raise QuiverError("hom_space between representations of different quivers")
    if M.field is not N.field:
        raise FieldMismatchError("hom_space between representations over different fields")
    system = _intertwiner_system(M, N)
    basis, free = kernel(system)
    morphisms = tuple(RepMorphism.unchecked(M, N, _unflatten(b, M, N)) for b in basis)
    return HomSpace(M, N, morphisms, free)


# ---------------------------------------------------------------------------
# Kernels, cokernels, projective covers


def _solve_columns(B: Matrix, C: Matrix) -> Matrix:
    """X with B @ X == C, column by column; B is assumed to have full column rank on im C."""
    cols = []
    for j in range(C.cols):
        x = solve(B, C.col(j))
        if x is None:
            raise ArithmeticError("column not in the span")
        cols.append(x)
    if not cols:
        return Matrix.zeros(B.cols, 0, B.field)
    return Matrix.from_columns(cols, B.field, rows=B.cols)


def kernel_rep(phi: RepMorphism) -> tuple[Rep, RepMorphism]:
    """Kernel of ``phi`` as a subrepresentation together with its inclusion."""
    M = phi.source
    q, f = M.quiver, M.field
    incl = []
    for v in q.vertices:
        basis, _ = kernel(phi.mats[v - 1])
        incl.append(Matrix.from_columns(basis, f, rows=M.dim(v)) if basis else Matrix.zeros(M.dim(v), 0, f))
    dims = tuple(m.cols for m in incl)
    maps = []
    for k, (s, t) in enumerate(q.arrows):
        maps.append(_solve_columns(incl[t - 1], M.maps[k] @ incl[s - 1]))
    K = Rep(q, dims, tuple(maps), f)
    return K, RepMorphism(K, M, tuple(incl))


def cokernel_rep(phi: RepMorphism) -> tuple[Rep, RepMorphism]:
    """Cokernel of ``phi`` together with the projection onto it."""
    N = phi.target
    q, f = N.quiver, N.field
    proj, sections = [], []
    for v in q.vertices:
        ann, _ = kernel(phi.mats[v - 1].T)
        Q = Matrix.from_rows(ann, f, cols=N.dim(v)) if ann else Matrix.zeros(0, N.dim(v), f)
        proj.append(Q)
        sections.append(_solve_columns(Q, Matrix.identity(Q.rows, f)))
    dims = tuple(m.rows for m in proj)
    maps = tuple(proj[t - 1] @ N.maps[k] @ sections[s - 1] for k, (s, t) in enumerate(q.arrows))
    C = Rep(q, dims, maps, f)
    return C, RepMorphism(N, C, tuple(proj))


def yoneda_map(M: Rep, v: int, element: Sequence) -> RepMorphism:
    """The morphism P_v -> M sending the trivial path at ``v`` to ``element``."""
    q, f = M.quiver, M.field
    P = projective(q, v, f)
    col = Matrix.from_columns([element], f, rows=M.dim(v))
    mats = []
    for w in q.vertices:
        if P.dim(w) == 0:
            mats.append(Matrix.zeros(M.dim(w), 0, f))
        elif w == v:
            mats.append(col)
        else:
            mats.append(M.path_map(q.path(v, w)) @ col)
    return RepMorphism(P, M, tuple(mats))


def _summand_offsets(parts: Sequence[Rep], v: int) -> list[int]:
    offs, off = [], 0
    for p in parts:
        offs.append(off)
        off += p.dim(v)
    return offs


def sum_of_projectives(q: Quiver, vertices: Sequence[int], field: Field = QQ) -> Rep:
    return direct_sum([projective(q, v, field) for v in vertices], q, field)


def sum_of_injectives(q: Quiver, vertices: Sequence[int], field: Field = QQ) -> Rep:
    return direct_sum([injective(q, v, field) for v in vertices], q, field)


def projective_cover(M: Rep) -> tuple[tuple[int, ...], RepMorphism]:
    """Minimal projective cover: summand vertices (one per top basis vector) and the map onto M."""
    q, f = M.quiver, M.field
    _require_type_a(q)
    vertices, parts = [], []
    for v in q.vertices:
        d = M.dim(v)
        if d == 0:
            continue
        radical = [M.maps[k] for k in q.in_arrows(v)]
        span_cols = [c for m in radical for c in m.columns()]
        current = rank(Matrix.from_columns(span_cols, f, rows=d)) if span_cols else 0
        for e in range(d):
            unit = [f.one if x == e else f.zero for x in range(d)]
            trial = span_cols + [unit]
            r = rank(Matrix.from_columns(trial, f, rows=d))
            if r > current:
                span_cols, current = trial, r
                vertices.append(v)
                parts.append(yoneda_map(M, v, unit))
    P = direct_sum([p.source for p in parts], q, f)
    mats = []
    for w in q.vertices:
        blocks = [p.mats[w - 1] for p in parts]
        mats.append(Matrix.hstack(blocks) if blocks else Matrix.zeros(M.dim(w), 0, f))
    return tuple(vertices), RepMorphism(P, M, tuple(mats))


@dataclass(frozen=True)
class Resolution:
    """0 -> P1 --d--> P0 --cover--> M -> 0 with P0, P1 sums of standard projectives."""

    module: Rep
    p1_vertices: tuple[int, ...]
    p0_vertices: tuple[int, ...]
    d: RepMorphism
    cover: RepMorphism


@lru_cache(maxsize=None)
def projective_resolution(M: Rep) -> Resolution:
    """Minimal projective resolution; length at most one since kQ is hereditary."""
    p0, cover = projective_cover(M)
    K, incl = kernel_rep(cover)
    p1, cover_k = projective_cover(K)
    if cover_k.source.dims != K.dims:
        raise ArithmeticError("kernel of a projective cover is not projective; kQ should be hereditary")
    d = incl @ cover_k
    d = RepMorphism(d.source, d.target, d.mats)
    return Resolution(M, p1, p0, d, cover)


def ext1_dim(M: Rep, N: Rep) -> int:
    """dim coker(Hom(P0, N) -> Hom(P1, N)) for the minimal projective resolution of M.

    Hom(P_v, N) is identified with N_v (Yoneda); precomposition with a path
    map P_u -> P_v becomes the action of that path on N.
    """
    if M.quiver != N.quiver:
        raise QuiverError("ext1_dim between representations of different quivers")
    res = projective_resolution(M)
    q, f = M.quiver, M.field
    if not res.p1_vertices:
        return 0
    p0_parts = [projective(q, v, f) for v in res.p0_vertices]
    rows = []
    for j, u in enumerate(res.p1_vertices):
        col_off = _summand_offsets([projective(q, x, f) for x in res.p1_vertices], u)[j]
        row_offs = _summand_offsets(p0_parts, u)
        blocks = []
        for i, v in enumerate(res.p0_vertices):
            if p0_parts[i].dim(u) == 0:
                blocks.append(Matrix.zeros(N.dim(u), N.dim(v), f))
                continue
            c = res.d.mats[u - 1][row_offs[i], col_off]
            path = q.path(v, u)
            act = N.path_map(path) if path else Matrix.identity(N.dim(v), f)
            blocks.append(act.scale(c))
        rows.append(Matrix.hstack(blocks))
    induced = Matrix.vstack(rows)
    return induced.rows - rank(induced)


def _canonical_injective_map(q: Quiver, u: int, v: int, field: Field) -> RepMorphism:
    """The map I_u -> I_v dual to the path v ~> u (identity on the support of I_v)."""
    Iu, Iv = injective(q, u, field), injective(q, v, field)
    mats = []
    for w in q.vertices:
        if Iv.dim(w) and Iu.dim(w):
            mats.append(Matrix.identity(1, field))
        else:
            mats.append(Matrix.zeros(Iv.dim(w), Iu.dim(w), field))
    return RepMorphism(Iu, Iv, tuple(mats))


def nakayama_map(src_vertices: Sequence[int], tgt_vertices: Sequence[int], phi: RepMorphism) -> RepMorphism:
    """Apply the Nakayama functor to a map between sums of standard projectives.

    ``phi: (+)P_u -> (+)P_v`` decomposes into path coefficients; each path
    map P_u -> P_v goes to the dual path map I_u -> I_v.
    """
    q, f = phi.source.quiver, phi.source.field
    src_parts = [projective(q, u, f) for u in src_vertices]
    tgt_parts = [projective(q, v, f) for v in tgt_vertices]
    grid = []
    for j, v in enumerate(tgt_vertices):
        row = []
        for i, u in enumerate(src_vertices):
            if tgt_parts[j].dim(u) == 0:
                row.append(None)
                continue
            col = _summand_offsets(src_parts, u)[i]
            r = _summand_offsets(tgt_parts, u)[j]
            c = phi.mats[u - 1][r, col]
            row.append(_canonical_injective_map(q, u, v, f).scale(c) if c != 0 else None)
        grid.append(row)
    src_inj = [injective(q, u, f) for u in src_vertices]
    tgt_inj = [injective(q, v, f) for v in tgt_vertices]
    return block_morphism(src_inj, tgt_inj, grid,
                          source=direct_sum(src_inj, q, f), target=direct_sum(tgt_inj, q, f))


def ar_translate(M: Rep) -> Rep | None:
    """tau M = ker(nu P1 -> nu P0) for the minimal projective presentation; None for projectives."""
    _require_type_a(M.quiver)
    if hom_space(M, M).dimension != 1:
        raise ValueError("ar_translate expects an indecomposable representation")
    res = projective_resolution(M)
    if not res.p1_vertices:
        return None
    nu_d = nakayama_map(res.p1_vertices, res.p0_vertices, res.d)
    K, _ = kernel_rep(nu_d)
    out = normalize_interval(K)
    if out is None:
        raise ArithmeticError(f"Nakayama construction produced a non-interval module {K.dims}")
    return out


def cartan_matrix(q: Quiver) -> Matrix:
    """C with column i equal to the dimension vector of P_i."""
    counts = q.path_counts()
    n = q.vertex_count
    return Matrix.from_rows([[counts[(i, v)] for i in q.vertices] for v in q.vertices], QQ, cols=n)


def coxeter_matrix(q: Quiver) -> Matrix:
    """Phi = -C^T C^{-1}; sends dim M to dim tau M for non-projective indecomposables."""
    validate_quiver(q)
    C = cartan_matrix(q)
    phi = -(C.T @ C.inverse())
    if any(x.denominator != 1 for x in phi.entries):
        raise ArithmeticError("Coxeter matrix is not integral")
    return phi
