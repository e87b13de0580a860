"""Exact linear algebra over the rationals and prime fields.

Every dimension computed elsewhere in the package goes through this module.
Rational scalars are :class:`fractions.Fraction`; prime-field scalars are
:class:`GFElement`.  Matrices are immutable and row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "Field",
    "QQ",
    "GF",
    "GFElement",
    "FieldMismatchError",
    "DimensionMismatchError",
    "Matrix",
    "rank",
    "kernel_basis",
    "kernel",
    "solve",
    "rref",
    "parse_scalar",
]


class FieldMismatchError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class Field:
    """A ground field.  Instances are singletons per characteristic."""

    characteristic: int = 0

    def __call__(self, value):
        raise NotImplementedError

    def contains(self, value) -> bool:
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


class _Rationals(Field):
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, GFElement):
            raise FieldMismatchError(f"cannot coerce {value!r} from GF({value.p}) into Q")
        if isinstance(value, str):
            return Fraction(value.strip())
        return Fraction(value)

    def contains(self, value) -> bool:
        return type(value) is Fraction

    def __repr__(self) -> str:
        return "QQ"

    def __reduce__(self):
        return (_rationals, ())


def _rationals():
    return QQ


QQ = _Rationals()


class GFElement:
    """An element of the prime field F_p, stored as a residue in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other) -> int:
        if isinstance(other, GFElement):
            if other.p != self.p:
                raise FieldMismatchError(f"GF({self.p}) vs GF({other.p})")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return GFElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return GFElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        return GFElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        return GFElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other) % self.p
        if o == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return GFElement(self.value * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return GFElement(self._other(other), self.p) / self

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, GFElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GFElement({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


class _PrimeField(Field):
    def __init__(self, p: int):
        self.characteristic = p

    def __call__(self, value) -> GFElement:
        p = self.characteristic
        if isinstance(value, GFElement):
            if value.p != p:
                raise FieldMismatchError(f"GF({value.p}) element used in GF({p})")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} has no image in GF({p})")
            return GFElement(value.numerator * pow(value.denominator, -1, p), p)
        return GFElement(int(value), p)

    def contains(self, value) -> bool:
        return isinstance(value, GFElement) and value.p == self.characteristic

    def __repr__(self) -> str:
        return f"GF({self.characteristic})"

    def __reduce__(self):
        return (GF, (self.characteristic,))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


@lru_cache(maxsize=None)
def GF(p: int = 32003) -> Field:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _PrimeField(p)


def parse_scalar(text: str, field: Field = QQ):
    return field(text)


# ---------------------------------------------------------------------------
# Row reduction kernels on mutable lists.  Shared by every public operation.


def _rref_rows(rows: list[list], ncols: int) -> list[int]:
    """Reduce ``rows`` in place to reduced row echelon form; return pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            for j in range(c, ncols):
                prow[j] = prow[j] * inv
        for i in range(nrows):
            if i != r:
                row = rows[i]
                fac = row[c]
                if fac != 0:
                    for j in range(c, ncols):
                        if prow[j] != 0:
                            row[j] = row[j] - fac * prow[j]
        pivots.append(c)
        r += 1
    return pivots


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix over a single :class:`Field`."""

    rows: int
    cols: int
    entries: tuple
    field: Field = QQ

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("negative matrix shape")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )
        contains = self.field.contains
        for x in self.entries:
            if not contains(x):
                raise FieldMismatchError(f"entry {x!r} does not belong to {self.field!r}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionMismatchError("ragged rows")
        return cls(len(rows), cols, tuple(field(x) for r in rows for x in r), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], field: Field = QQ, rows: int | None = None) -> "Matrix":
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        for c in columns:
            if len(c) != rows:
                raise DimensionMismatchError("ragged columns")
        return cls(rows, len(columns), tuple(field(columns[j][i]) for i in range(rows) for j in range(len(columns))), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> "Matrix":
        z = field.zero
        return cls(rows, cols, (z,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> "Matrix":
        z, o = field.zero, field.one
        return cls(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)), field)

    @classmethod
    def _raw(cls, rows: int, cols: int, entries: tuple, field: Field) -> "Matrix":
        # Skips the per-entry field check; only for entries produced by field arithmetic.
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "entries", entries)
        object.__setattr__(m, "field", field)
        return m

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.cols)]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"Matrix({self.rows}x{self.cols}, [{body}], {self.field!r})"

    # -- arithmetic -----------------------------------------------------------

    def _check_field(self, other: "Matrix"):
        if other.field is not self.field:
            raise FieldMismatchError(f"{self.field!r} vs {other.field!r}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} + {other.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"{self.shape} - {other.shape}")
        return Matrix._raw(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)), self.field)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(self.rows, self.cols, tuple(-a for a in self.entries), self.field)

    def scale(self, c) -> "Matrix":
        c = self.field(c)
        return Matrix._raw(self.rows, self.cols, tuple(c * a for a in self.entries), self.field)

    def __rmul__(self, c) -> "Matrix":
        return self.scale(c)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f"{self.shape} @ {other.shape}")
        n, m, p = self.rows, self.cols, other.cols
        z = self.field.zero
        if m == 0:
            return Matrix._raw(n, p, (z,) * (n * p), self.field)
        a, b = self.entries, other.entries
        bcols = [b[j::p] for j in range(p)]
        out = []
        for i in range(n):
            arow = a[i * m:(i + 1) * m]
            nz = [(k, x) for k, x in enumerate(arow) if x != 0]
            if not nz:
                out.extend((z,) * p)
                continue
            for j in range(p):
                col = bcols[j]
                s = z
                for k, x in nz:
                    y = col[k]
                    if y != 0:
                        s = s + x * y
                out.append(s)
        return Matrix._raw(n, p, tuple(out), self.field)

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"vector of length {len(v)} for {self.shape} matrix")
        z = self.field.zero
        out = []
        for i in range(self.rows):
            s = z
            for x, y in zip(self.row(i), v):
                if x != 0 and y != 0:
                    s = s + x * y
            out.append(s)
        return tuple(out)

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(self.cols, self.rows, tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)), self.field)

    transpose = T

    def change_field(self, field: Field) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(field(x) for x in self.entries), field)

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> "Matrix":
        rows, cols = list(rows), list(cols)
        return Matrix._raw(len(rows), len(cols), tuple(self[i, j] for i in rows for j in cols), self.field)

    def kron(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        r, c = self.rows * other.rows, self.cols * other.cols
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                for j in range(self.cols):
                    x = self[i, j]
                    out.extend(x * y for y in other.row(k))
        return Matrix._raw(r, c, tuple(out), self.field)

    # -- stacking -------------------------------------------------------------

    @staticmethod
    def hstack(blocks: Sequence["Matrix"], rows: int | None = None, field: Field | None = None) -> "Matrix":
        if not blocks:
            return Matrix.zeros(rows or 0, 0, field or QQ)
        f = blocks[0].field
        r = blocks[0].rows
        for b in blocks:
            if b.field is not f:
                raise FieldMismatchError("hstack over mixed fields")
            if b.rows != r:
                raise DimensionMismatchError("hstack row mismatch")
        out = []
        for i in range(r):
            for b in blocks:
                out.extend(b.row(i))
        return Matrix._raw(r, sum(b.cols for b in blocks), tuple(out), f)

    @staticmethod
    def vstack(blocks: Sequence["Matrix"], cols: int | None = None, field: Field | None = None) -> "Matrix":
        if not blocks:
            return Matrix.zeros(0, cols or 0, field or QQ)
        f = blocks[0].field
        c = blocks[0].cols
        for b in blocks:
            if b.field is not f:
                raise FieldMismatchError("vstack over mixed fields")
            if b.cols != c:
                raise DimensionMismatchError("vstack column mismatch")
        out = []
        for b in blocks:
            out.extend(b.entries)
        return Matrix._raw(sum(b.rows for b in blocks), c, tuple(out), f)

    @staticmethod
    def block(grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        return Matrix.vstack([Matrix.hstack(list(r)) for r in grid])

    @staticmethod
    def block_diag(blocks: Sequence["Matrix"], field: Field = QQ) -> "Matrix":
        if blocks:
            field = blocks[0].field
        r = sum(b.rows for b in blocks)
        c = sum(b.cols for b in blocks)
        z = field.zero
        out = [z] * (r * c)
        ro = co = 0
        for b in blocks:
            if b.field is not field:
                raise FieldMismatchError("block_diag over mixed fields")
            for i in range(b.rows):
                for j in range(b.cols):
                    out[(ro + i) * c + co + j] = b[i, j]
            ro += b.rows
            co += b.cols
        return Matrix._raw(r, c, tuple(out), field)

    # -- elimination ------------------------------------------------------------

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        return rref(self)

    def rank(self) -> int:
        return rank(self)

    def kernel_basis(self) -> list[tuple]:
        return kernel_basis(self)

    def solve(self, b: Sequence):
        return solve(self, b)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise DimensionMismatchError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + list(Matrix.identity(n, self.field).row(i)) for i in range(n)]
        piv = _rref_rows(aug, 2 * n)
        if tuple(piv[:n]) != tuple(range(n)):
            raise ZeroDivisionError("singular matrix")
        return Matrix._raw(n, n, tuple(x for r in aug for x in r[n:]), self.field)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    rows = m.to_lists()
    piv = _rref_rows(rows, m.cols)
    return Matrix._raw(m.rows, m.cols, tuple(x for r in rows for x in r), m.field), tuple(piv)


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    # Eliminate along the shorter side.
    rows = m.to_lists() if m.rows <= m.cols else m.T.to_lists()
    return len(_rref_rows(rows, len(rows[0])))


def kernel(m: Matrix) -> tuple[list[tuple], tuple[int, ...]]:
    """Basis of the right null space together with its free columns.

    The basis vector for free column ``f`` has a 1 in position ``f`` and 0 in
    every other free position, so the coordinates of any null vector ``v`` in
    this basis are simply ``[v[f] for f in free]``.
    """
    f = m.field
    rows = m.to_lists()
    piv = _rref_rows(rows, m.cols)
    pivset = set(piv)
    free = tuple(c for c in range(m.cols) if c not in pivset)
    z, o = f.zero, f.one
    basis = []
    for fc in free:
        v = [z] * m.cols
        v[fc] = o
        for r, pc in enumerate(piv):
            x = rows[r][fc]
            if x != 0:
                v[pc] = -x
        basis.append(tuple(v))
    return basis, free


def kernel_basis(m: Matrix) -> list[tuple]:
    return kernel(m)[0]


def solve(m: Matrix, b: Sequence):
    """Return some ``x`` with ``m @ x == b``, or ``None`` if the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {m.rows} rows")
    f = m.field
    bb = [f(x) if not f.contains(x) else x for x in b]
    rows = [list(m.row(i)) + [bb[i]] for i in range(m.rows)]
    piv = _rref_rows(rows, m.cols + 1)
    if piv and piv[-1] == m.cols:
        return None
    x = [f.zero] * m.cols
    for r, pc in enumerate(piv):
        x[pc] = rows[r][m.cols]
    return tuple(x)
