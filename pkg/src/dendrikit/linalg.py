"""Exact linear and bilinear maps over a ``Field``.

Vectors are plain tuples of raw field values.  A ``LinMap`` stores its
matrix row by row, so column ``j`` is the image of the basis vector e_j.
A ``BilinearMap`` stores ``c[i][j]``, the image of (e_i, e_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import DimMismatch, FieldMismatch, Singular
from .field import Field

Vec = tuple


def zero_vec(field: Field, n: int) -> Vec:
    return (field.zero,) * n


def unit_vec(field: Field, n: int, i: int) -> Vec:
    return tuple(field.one if k == i else field.zero for k in range(n))


def vadd(field: Field, u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vsub(field: Field, u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise DimMismatch(f"vector lengths {len(u)} and {len(v)}")
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vscale(field: Field, s, u: Vec) -> Vec:
    return tuple(field.mul(s, a) for a in u)


def vsum(field: Field, n: int, vecs) -> Vec:
    out = zero_vec(field, n)
    for v in vecs:
        out = vadd(field, out, v)
    return out


def is_zero_vec(field: Field, u: Vec) -> bool:
    return all(field.is_zero(a) for a in u)


def _check_field(a: Field, b: Field) -> None:
    if a != b:
        raise FieldMismatch(f"{a!r} vs {b!r}")


def rref(field: Field, rows: Sequence[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    if not m:
        return m, pivots
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if not field.is_zero(m[i][c])), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, a) for a in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


@dataclass(frozen=True)
class LinMap:
    field: Field
    rows: int
    cols: int
    m: tuple

    def __post_init__(self):
        if len(self.m) != self.rows or any(len(r) != self.cols for r in self.m):
            raise DimMismatch(f"matrix does not have shape {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, field: Field, rows, cols: int | None = None) -> "LinMap":
        rows = [tuple(field.coerce(a) for a in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(field, len(rows), cols, tuple(rows))

    @classmethod
    def from_columns(cls, field: Field, columns, rows: int | None = None) -> "LinMap":
        columns = [tuple(field.coerce(a) for a in c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        m = tuple(tuple(c[i] for c in columns) for i in range(rows))
        return cls(field, rows, len(columns), m)

    @classmethod
    def from_function(cls, field: Field, rows: int, cols: int, fn: Callable[[int], Vec]) -> "LinMap":
        return cls.from_columns(field, [fn(j) for j in range(cols)], rows)

    @classmethod
    def zero(cls, field: Field, rows: int, cols: int) -> "LinMap":
        return cls(field, rows, cols, tuple((field.zero,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field: Field, n: int) -> "LinMap":
        return cls(field, n, n, tuple(unit_vec(field, n, i) for i in range(n)))

    def column(self, j: int) -> Vec:
        return tuple(r[j] for r in self.m)

    def columns(self) -> list[Vec]:
        return [self.column(j) for j in range(self.cols)]

    def apply(self, v: Vec) -> Vec:
        if len(v) != self.cols:
            raise DimMismatch(f"map expects length {self.cols}, got {len(v)}")
        f = self.field
        out = []
        for row in self.m:
            acc = f.zero
            for a, b in zip(row, v):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return tuple(out)

    __call__ = apply

    def compose(self, other: "LinMap") -> "LinMap":
        """``self ∘ other``."""
        _check_field(self.field, other.field)
        if self.cols != other.rows:
            raise DimMismatch(f"cannot compose {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        return LinMap.from_columns(self.field, [self.apply(c) for c in other.columns()], self.rows)

    def add(self, other: "LinMap") -> "LinMap":
        _check_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimMismatch("shapes differ")
        return LinMap(self.field, self.rows, self.cols,
                      tuple(vadd(self.field, a, b) for a, b in zip(self.m, other.m)))

    def sub(self, other: "LinMap") -> "LinMap":
        return self.add(other.scale(self.field.neg(self.field.one)))

    def scale(self, s) -> "LinMap":
        return LinMap(self.field, self.rows, self.cols, tuple(vscale(self.field, s, r) for r in self.m))

    def transpose(self) -> "LinMap":
        return LinMap(self.field, self.cols, self.rows, tuple(self.columns()))

    def rank(self) -> int:
        return len(rref(self.field, self.m)[1])

    def is_zero(self) -> bool:
        return all(is_zero_vec(self.field, r) for r in self.m)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> "LinMap":
        if self.rows != self.cols:
            raise Singular("non-square matrix has no inverse")
        f, n = self.field, self.rows
        aug = [list(r) + list(unit_vec(f, n, i)) for i, r in enumerate(self.m)]
        red, piv = rref(f, aug)
        if piv[:n] != list(range(n)):
            raise Singular("matrix is singular")
        return LinMap(f, n, n, tuple(tuple(r[n:]) for r in red))

    def kernel(self) -> list[Vec]:
        """A basis of the null space."""
        f = self.field
        red, piv = rref(f, self.m)
        free = [c for c in range(self.cols) if c not in piv]
        basis = []
        for fc in free:
            v = [f.zero] * self.cols
            v[fc] = f.one
            for r, pc in enumerate(piv):
                v[pc] = f.neg(red[r][fc])
            basis.append(tuple(v))
        return basis

    def solve(self, b: Vec) -> Vec | None:
        """Some x with self(x) = b, or None."""
        f = self.field
        aug = [list(r) + [bi] for r, bi in zip(self.m, b)]
        red, piv = rref(f, aug)
        if self.cols in piv:
            return None
        x = [f.zero] * self.cols
        for r, pc in enumerate(piv):
            x[pc] = red[r][self.cols]
        return tuple(x)


def span_contains(field: Field, basis: Sequence[Vec], v: Vec) -> bool:
    if not basis:
        return is_zero_vec(field, v)
    return LinMap.from_columns(field, basis, len(v)).solve(v) is not None


@dataclass(frozen=True)
class BilinearMap:
    field: Field
    left: int
    right: int
    target: int
    c: tuple

    def __post_init__(self):
        ok = len(self.c) == self.left and all(
            len(row) == self.right and all(len(v) == self.target for v in row) for row in self.c
        )
        if not ok:
            raise DimMismatch(f"tensor does not have shape {self.left}x{self.right}x{self.target}")

    @classmethod
    def zero(cls, field: Field, left: int, right: int, target: int) -> "BilinearMap":
        z = zero_vec(field, target)
        return cls(field, left, right, target, tuple((z,) * right for _ in range(left)))

    @classmethod
    def from_function(cls, field: Field, left: int, right: int, target: int,
                      fn: Callable[[int, int], Vec]) -> "BilinearMap":
        c = tuple(tuple(tuple(field.coerce(a) for a in fn(i, j)) for j in range(right))
                  for i in range(left))
        return cls(field, left, right, target, c)

    @classmethod
    def from_entries(cls, field: Field, left: int, right: int, target: int, entries: dict) -> "BilinearMap":
        """Build from ``{(i, j): vector}``; missing pairs are zero."""
        z = zero_vec(field, target)
        return cls.from_function(field, left, right, target, lambda i, j: entries.get((i, j), z))

    def shape(self) -> tuple[int, int, int]:
        return (self.left, self.right, self.target)

    def apply(self, u: Vec, v: Vec) -> Vec:
        if len(u) != self.left or len(v) != self.right:
            raise DimMismatch(
                f"bilinear map expects ({self.left},{self.right}), got ({len(u)},{len(v)})")
        f = self.field
        out = [f.zero] * self.target
        for i, a in enumerate(u):
            if f.is_zero(a):
                continue
            row = self.c[i]
            for j, b in enumerate(v):
                if f.is_zero(b):
                    continue
                ab = f.mul(a, b)
                for k, x in enumerate(row[j]):
                    if not f.is_zero(x):
                        out[k] = f.add(out[k], f.mul(ab, x))
        return tuple(out)

    __call__ = apply

    def entry(self, i: int, j: int) -> Vec:
        return self.c[i][j]

    def _zip(self, other: "BilinearMap", op) -> "BilinearMap":
        _check_field(self.field, other.field)
        if self.shape() != other.shape():
            raise DimMismatch(f"shapes {self.shape()} and {other.shape()} differ")
        c = tuple(tuple(op(self.field, a, b) for a, b in zip(r, s)) for r, s in zip(self.c, other.c))
        return BilinearMap(self.field, self.left, self.right, self.target, c)

    def add(self, other: "BilinearMap") -> "BilinearMap":
        return self._zip(other, vadd)

    def sub(self, other: "BilinearMap") -> "BilinearMap":
        return self._zip(other, vsub)

    def scale(self, s) -> "BilinearMap":
        c = tuple(tuple(vscale(self.field, s, v) for v in r) for r in self.c)
        return BilinearMap(self.field, self.left, self.right, self.target, c)

    def swap(self) -> "BilinearMap":
        """The map (u, v) -> self(v, u)."""
        return BilinearMap.from_function(self.field, self.right, self.left, self.target,
                                         lambda i, j: self.c[j][i])

    def is_zero(self) -> bool:
        return all(is_zero_vec(self.field, v) for r in self.c for v in r)


def bilinear_apply(B: BilinearMap, u: Vec, v: Vec) -> Vec:
    return B.apply(u, v)


def bilinear_add(A: BilinearMap, B: BilinearMap) -> BilinearMap:
    return A.add(B)


def compose(f: LinMap, g: LinMap) -> LinMap:
    return f.compose(g)


def invert(f: LinMap) -> LinMap:
    return f.inverse()


def rank(f: LinMap) -> int:
    return f.rank()
