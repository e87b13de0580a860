"""Braid generators on K_0 of an A_m quiver and their action on an orbit quotient lattice.

The lattice has the classes of the simples as basis.  The braid generators
are transvections for the antisymmetrized Euler form, and the quotient is
L = coker(1 - [F]) for the cluster functor F.  All arithmetic is over the
integers with plain nested lists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .quiverrep import Quiver, TypeAOnlyError, coxeter_matrix, validate_quiver

__all__ = [
    "IntMatrix",
    "euler_matrix",
    "skew_form",
    "braid_generator",
    "verify_braid_relations",
    "preserves_form",
    "smith_form",
    "cluster_functor_k0",
    "QuotientAction",
    "orbit_quotient_action",
    "SIGN",
]

IntMatrix = list[list[int]]

# Global sign of the transvections; +1 is the only choice under which the
# symmetrized negative control (reflections would satisfy the relations) fails.
SIGN = 1


def _identity(m: int) -> IntMatrix:
    return [[int(i == j) for j in range(m)] for i in range(m)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)] for i in range(len(a))]


def transpose(a: IntMatrix) -> IntMatrix:
    return [list(r) for r in zip(*a)] if a else []


def _sub(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def _require_a(q: Quiver) -> int:
    cls = validate_quiver(q)
    if cls.family != "A":
        raise TypeAOnlyError(f"K_0 braid action is type A only (got {cls})")
    return q.vertex_count


def euler_matrix(q: Quiver) -> IntMatrix:
    """E[i][j] = delta_ij - #arrows i -> j; <x, y> = x^T E y is dim Hom - dim Ext^1."""
    m = _require_a(q)
    e = _identity(m)
    for s, t in q.arrows:
        e[s - 1][t - 1] -= 1
    return e


def skew_form(q: Quiver, symmetric: bool = False) -> IntMatrix:
    """E - E^T (or E + E^T when ``symmetric``, the negative control)."""
    e = euler_matrix(q)
    et = transpose(e)
    return [[a + b if symmetric else a - b for a, b in zip(r, s)] for r, s in zip(e, et)]


def braid_generator(q: Quiver, i: int, form: IntMatrix | None = None) -> IntMatrix:
    """T_i(x) = x + SIGN * <s_i, x> s_i."""
    m = _require_a(q)
    if not 1 <= i <= m:
        raise ValueError(f"generator index {i} outside 1..{m}")
    w = form if form is not None else skew_form(q)
    t = _identity(m)
    for j in range(m):
        t[i - 1][j] += SIGN * w[i - 1][j]
    return t


def verify_braid_relations(q: Quiver, form: IntMatrix | None = None) -> bool:
    m = _require_a(q)
    ts = [braid_generator(q, i, form) for i in range(1, m + 1)]
    for i in range(m - 1):
        a, b = ts[i], ts[i + 1]
        if matmul(matmul(a, b), a) != matmul(matmul(b, a), b):
            return False
    for j in range(m):
        for k in range(j + 2, m):
            if matmul(ts[j], ts[k]) != matmul(ts[k], ts[j]):
                return False
    return True


def preserves_form(q: Quiver, i: int) -> bool:
    t = braid_generator(q, i)
    w = skew_form(q)
    return matmul(matmul(transpose(t), w), t) == w


def cluster_functor_k0(q: Quiver) -> IntMatrix:
    """[F] = [tau^-1 Sigma] = -Phi^-1 in the basis of simples."""
    _require_a(q)
    inv = coxeter_matrix(q).inverse()
    return [[-int(x) for x in inv.row(i)] for i in range(inv.rows)]


def smith_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Unimodular U, V and diagonal D with U a V = D and d_1 | d_2 | ... (non-negative)."""
    rows = len(a)
    cols = len(a[0]) if a else 0
    d = [list(r) for r in a]
    u = _identity(rows)
    v = _identity(cols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in d:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):
        d[dst] = [x + c * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for r in d:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    for t in range(min(rows, cols)):
        while True:
            nonzero = [(abs(d[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if d[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = d[t][t]
            done = True
            for i in range(t + 1, rows):
                if d[i][t]:
                    add_row(t, i, -(d[i][t] // p))
                    done = done and d[i][t] == 0
            for j in range(t + 1, cols):
                if d[t][j]:
                    add_col(t, j, -(d[t][j] // p))
                    done = done and d[t][j] == 0
            if not done:
                continue
            # divisibility: fold any entry not divisible by the pivot into row t
            bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if d[i][j] % p]
            if bad:
                add_row(bad[0][0], t, 1)
                continue
            break
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
    return u, d, v


def _inverse_unimodular(u: IntMatrix) -> IntMatrix:
    from .exactlin import Matrix
    inv = Matrix.from_rows(u).inverse()
    return [[int(x) for x in inv.row(i)] for i in range(inv.rows)]


@dataclass(frozen=True)
class QuotientAction:
    m: int
    invariants: tuple[int, ...]
    generator_images: tuple[tuple[tuple[int, ...], ...], ...]
    well_defined: tuple[bool, ...]
    trivial: bool


def orbit_quotient_action(q: Quiver) -> QuotientAction:
    """Action of T_1..T_m on L = coker(1 - [F]).

    L is the product of Z/d_i over the Smith invariants d_i != 1 (d_i = 0
    meaning a free summand).  A generator is well defined on L when it maps
    im(1 - [F]) into itself; its image is then its matrix on those summands,
    reduced modulo the d_i.
    """
    m = _require_a(q)
    f = cluster_functor_k0(q)
    a = _sub(_identity(m), f)
    u, d, _ = smith_form(a)
    diag = [d[i][i] for i in range(m)]
    keep = [i for i in range(m) if diag[i] != 1]
    u_inv = _inverse_unimodular(u)
    images, defined = [], []
    trivial = True
    for i in range(1, m + 1):
        t = matmul(matmul(u, braid_generator(q, i)), u_inv)
        ok = True
        # T must send d_j e_j into D Z^m for every j
        for j in range(m):
            for r in range(m):
                val = t[r][j] * diag[j]
                mod = diag[r]
                if (mod == 0 and val != 0) or (mod != 0 and val % mod):
                    ok = False
        defined.append(ok)

        def red(x, k):
            return x % diag[k] if diag[k] else x

        img = tuple(tuple(red(t[r][j], r) for j in keep) for r in keep)
        images.append(img)
        ident = tuple(tuple(red(int(r == j), r) for j in keep) for r in keep)
        if not ok or img != ident:
            trivial = False
    invariants = tuple(diag[i] for i in keep)
    return QuotientAction(m, invariants, tuple(images), tuple(defined), trivial)
