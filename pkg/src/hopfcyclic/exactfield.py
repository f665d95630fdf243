"""Exact scalars and dense matrices over Q or F_p, with an elimination kernel.

A ``Matrix`` is stored as an integer numerator array plus one positive common
denominator, kept in lowest terms.  Products run on int64 whenever the entry
bounds make overflow impossible and fall back to Python integers otherwise, so
no result is ever rounded.

Matrices are linear maps acting on column vectors: ``m[i, j]`` is the i-th
coordinate of the image of the j-th basis vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable

import numpy as np

from .errors import FieldMismatch, NotPreserved, NotWellDefined, ShapeMismatch, Singular

_INT64_SAFE = 2**62


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Ground field tag.  Use :data:`QQ` or :func:`GF`."""

    characteristic = 0

    def scalar(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def format(self, x) -> str:
        raise NotImplementedError

    def parse(self, s):
        raise NotImplementedError

    @property
    def tag(self) -> str:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def __repr__(self):
        return self.tag


class Rationals(Field):
    characteristic = 0

    def scalar(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, float):
            raise TypeError("floats are not exact field elements")
        return Fraction(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def format(self, x) -> str:
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return "%d/%d" % (x.numerator, x.denominator)

    def parse(self, s):
        if isinstance(s, int):
            return Fraction(s)
        s = str(s).strip()
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))

    @property
    def tag(self) -> str:
        return "Q"

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")


class PrimeField(Field):
    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError("F_p needs a prime p, got %r" % (p,))
        self.p = p
        self.characteristic = p

    def scalar(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator %d vanishes mod %d" % (x.denominator, self.p))
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, float):
            raise TypeError("floats are not exact field elements")
        return int(x) % self.p

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def format(self, x) -> str:
        return str(int(x) % self.p)

    def parse(self, s):
        if isinstance(s, int):
            return s % self.p
        s = str(s).strip()
        if "/" in s:
            return self.scalar(Fraction(s))
        return int(s) % self.p

    @property
    def tag(self) -> str:
        return "Fp:%d" % self.p

    def to_json(self):
        return {"Fp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_tag(tag) -> Field:
    """Accepts ``"Q"``, ``"Fp:7"``, ``{"Fp": 7}`` or a Field."""
    if isinstance(tag, Field):
        return tag
    if isinstance(tag, dict):
        if set(tag) != {"Fp"}:
            raise ValueError("bad field tag %r" % (tag,))
        return GF(int(tag["Fp"]))
    if isinstance(tag, str):
        t = tag.strip()
        if t in ("Q", "QQ"):
            return QQ
        if t.startswith("Fp:") or t.startswith("GF:"):
            return GF(int(t[3:]))
    raise ValueError("bad field tag %r" % (tag,))


_FLOAT_EXACT = 2**53


def _lcm(a: int, b: int) -> int:
    return a // math.gcd(a, b) * b


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def _shrink(a: np.ndarray) -> np.ndarray:
    """int64 when every entry is safely small, Python ints otherwise."""
    if a.dtype != object:
        return a
    if _maxabs(a) < _INT64_SAFE:
        return a.astype(np.int64)
    return a


def _as_object(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a
    out = np.empty(a.shape, dtype=object)
    out.flat[:] = [int(x) for x in a.flat]
    return out


class Matrix:
    __slots__ = ("field", "_num", "_den")
    __hash__ = None

    def __init__(self, field: Field, num, den: int = 1):
        num = np.asarray(num)
        if num.ndim != 2:
            raise ShapeMismatch("matrix data must be 2-dimensional")
        if num.dtype != object and num.dtype != np.int64:
            num = num.astype(np.int64)
        self.field = field
        self._num, self._den = self._canonical(field, num, int(den))

    @staticmethod
    def _canonical(field, num, den):
        if den <= 0:
            raise ValueError("denominator must be positive")
        if isinstance(field, PrimeField):
            p = field.p
            if den != 1:
                num = _as_object(num) * pow(den, -1, p)
            if num.dtype == object:
                num = np.vectorize(lambda x: int(x) % p, otypes=[object])(num) if num.size else num
            else:
                num = num % p
            return _shrink(num), 1
        if num.size == 0:
            return num.astype(np.int64), 1
        if den != 1:
            if num.dtype == object:
                g = math.gcd(den, *[int(x) for x in num.flat])
            else:
                g = math.gcd(den, int(np.gcd.reduce(num.ravel())))
            if g > 1:
                num = num // g
                den //= g
        return _shrink(num), den

    # construction

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_dict(cls, field: Field, rows: int, cols: int, entries: dict) -> "Matrix":
        """Build from ``{(i, j): scalar}``; scalars may be int, Fraction or str."""
        if isinstance(field, PrimeField):
            num = np.zeros((rows, cols), dtype=object)
            num.fill(0)
            for (i, j), v in entries.items():
                num[i, j] = field.scalar(v)
            return cls(field, num)
        vals = {k: field.scalar(v) for k, v in entries.items()}
        den = reduce(_lcm, (v.denominator for v in vals.values()), 1)
        num = np.zeros((rows, cols), dtype=object)
        num.fill(0)
        for (i, j), v in vals.items():
            num[i, j] = v.numerator * (den // v.denominator)
        return cls(field, num, den)

    @classmethod
    def from_columns(cls, field: Field, rows: int, columns: list) -> "Matrix":
        """Build from a list of sparse columns ``{row: scalar}``."""
        entries = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    entries[i, j] = v
        return cls.from_dict(field, rows, len(columns), entries)

    @classmethod
    def from_rows(cls, field: Field, rows) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        entries = {}
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise ShapeMismatch("ragged rows in matrix data (row %d)" % i)
            for j, v in enumerate(r):
                v = field.scalar(v)
                if v:
                    entries[i, j] = v
        return cls.from_dict(field, len(rows), ncols, entries)

    # inspection

    @property
    def rows(self) -> int:
        return self._num.shape[0]

    @property
    def cols(self) -> int:
        return self._num.shape[1]

    @property
    def shape(self):
        return self._num.shape

    def __getitem__(self, ij):
        i, j = ij
        x = int(self._num[i, j])
        if isinstance(self.field, PrimeField):
            return x
        return Fraction(x, self._den)

    def to_rows(self) -> list:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def to_strings(self) -> list:
        return [[self.field.format(v) for v in row] for row in self.to_rows()]

    def columns(self) -> list:
        """Sparse columns ``[{row: scalar}]``."""
        out = [dict() for _ in range(self.cols)]
        nz_i, nz_j = np.nonzero(self._num)
        for i, j in zip(nz_i.tolist(), nz_j.tolist()):
            out[j][i] = self[i, j]
        return out

    def sparse_rows(self, scaled: bool = False) -> list:
        """Sparse rows ``[{col: scalar}]``; ``scaled`` drops the common denominator."""
        out = [dict() for _ in range(self.rows)]
        nz_i, nz_j = np.nonzero(self._num)
        prime = isinstance(self.field, PrimeField)
        for i, j in zip(nz_i.tolist(), nz_j.tolist()):
            x = int(self._num[i, j])
            out[i][j] = x if (prime or scaled) else Fraction(x, self._den)
        return out

    def is_zero(self) -> bool:
        return not np.any(self._num)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Matrix.identity(self.field, self.rows)

    def nnz(self) -> int:
        return int(np.count_nonzero(self._num))

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return "Matrix(%s, %r)" % (self.field.tag, self.to_strings())
        return "Matrix(%s, %dx%d, nnz=%d)" % (self.field.tag, self.rows, self.cols, self.nnz())

    # arithmetic

    def _check_field(self, other):
        if not isinstance(other, Matrix):
            raise TypeError("expected Matrix, got %r" % type(other))
        if other.field != self.field:
            raise FieldMismatch("matrices over %s and %s" % (self.field.tag, other.field.tag))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self._den == other._den
            and np.array_equal(self._num, other._num)
        )

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch("cannot compose %dx%d after %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        a, b = self._num, other._num
        k = self.cols
        if k == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        bound = _maxabs(a) * _maxabs(b) * k if a.dtype != object and b.dtype != object else None
        if bound is not None and bound < _FLOAT_EXACT:
            # every product and partial sum is an integer below 2^53, so BLAS is exact
            prod = (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        elif bound is not None and bound < 2**63:
            prod = a @ b
        else:
            prod = _shrink(_as_object(a) @ _as_object(b))
        return Matrix(self.field, prod, self._den * other._den)

    def _combine(self, other, sign):
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch("shape %s vs %s" % (self.shape, other.shape))
        L = _lcm(self._den, other._den)
        fa, fb = L // self._den, L // other._den
        a, b = self._num, other._num
        bound = _maxabs(a) * fa + _maxabs(b) * fb
        if a.dtype != object and b.dtype != object and bound < 2**63:
            res = a * fa + sign * (b * fb)
        else:
            res = _as_object(a) * fa + sign * (_as_object(b) * fb)
        return Matrix(self.field, res, L)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Matrix(self.field, -_as_object(self._num) if self._num.dtype == object else -self._num, self._den)

    def scale(self, c) -> "Matrix":
        c = self.field.scalar(c)
        if isinstance(self.field, PrimeField):
            return Matrix(self.field, _as_object(self._num) * c)
        return Matrix(self.field, _as_object(self._num) * c.numerator, self._den * c.denominator)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self._num.T.copy(), self._den)

    def kron(self, other: "Matrix") -> "Matrix":
        """Tensor product; the left factor is the most significant index."""
        self._check_field(other)
        a, b = self._num, other._num
        if a.dtype != object and b.dtype != object and _maxabs(a) * _maxabs(b) < 2**63:
            res = np.kron(a, b)
        else:
            res = np.kron(_as_object(a), _as_object(b))
        return Matrix(self.field, res, self._den * other._den)

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeMismatch("power of a non-square matrix")
        out = Matrix.identity(self.field, self.rows)
        for _ in range(k):
            out = self @ out
        return out

    def submatrix(self, rows=None, cols=None) -> "Matrix":
        r = slice(None) if rows is None else list(rows)
        c = slice(None) if cols is None else list(cols)
        return Matrix(self.field, self._num[r][:, c], self._den)


def hstack(field: Field, blocks: list, rows: int) -> Matrix:
    if not blocks:
        return Matrix.zeros(field, rows, 0)
    den = reduce(_lcm, (b._den for b in blocks), 1)
    parts = [_as_object(b._num) * (den // b._den) for b in blocks]
    return Matrix(field, np.hstack(parts), den)


def vstack(field: Field, blocks: list, cols: int) -> Matrix:
    if not blocks:
        return Matrix.zeros(field, 0, cols)
    den = reduce(_lcm, (b._den for b in blocks), 1)
    parts = [_as_object(b._num) * (den // b._den) for b in blocks]
    return Matrix(field, np.vstack(parts), den)


def block_matrix(field: Field, blocks: list, row_dims: list, col_dims: list) -> Matrix:
    """Assemble from a grid of blocks; ``None`` stands for a zero block."""
    rows_out = []
    for bi, brow in enumerate(blocks):
        parts = []
        for bj, blk in enumerate(brow):
            if blk is None:
                blk = Matrix.zeros(field, row_dims[bi], col_dims[bj])
            elif blk.shape != (row_dims[bi], col_dims[bj]):
                raise ShapeMismatch("block (%d,%d) has shape %s" % (bi, bj, blk.shape))
            parts.append(blk)
        rows_out.append(hstack(field, parts, row_dims[bi]))
    return vstack(field, rows_out, sum(col_dims))


# elimination


def _reducer(field: Field):
    if isinstance(field, PrimeField):
        p = field.p
        return lambda x: x % p
    return lambda x: x


def _rref(rows: Iterable[dict], field: Field, pivot_limit: int | None = None):
    """Reduced row echelon form of sparse rows.

    Returns ``(pivots, dependent)`` where ``pivots`` maps a pivot column to its
    normalized row (zero in every other pivot column) and ``dependent`` lists
    the rows whose reduction has no pivot below ``pivot_limit``.
    """
    red = _reducer(field)
    pivots: dict = {}
    col_users: dict = {}  # column -> set of pivot columns whose row touches it
    dependent = []
    for r in rows:
        r = {c: v for c, v in r.items() if v}
        for p in [c for c in r if c in pivots]:
            coef = r.get(p)
            if not coef:
                continue
            for c, v in pivots[p].items():
                nv = red(r.get(c, 0) - coef * v)
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        if not r:
            continue
        cands = [c for c in r if pivot_limit is None or c < pivot_limit]
        if not cands:
            dependent.append(r)
            continue
        pc = min(cands)
        inv = field.inv(r[pc])
        r = {c: red(v * inv) for c, v in r.items()}
        for q in list(col_users.get(pc, ())):
            row = pivots[q]
            coef = row.get(pc)
            if not coef:
                continue
            for c, v in r.items():
                nv = red(row.get(c, 0) - coef * v)
                if nv:
                    if c not in row:
                        col_users.setdefault(c, set()).add(q)
                    row[c] = nv
                else:
                    row.pop(c, None)
                    col_users.get(c, set()).discard(q)
        pivots[pc] = r
        for c in r:
            col_users.setdefault(c, set()).add(pc)
    return pivots, dependent


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = m.sparse_rows(scaled=True)
    if m.rows > m.cols:
        rows = m.T.sparse_rows(scaled=True)
    pivots, _ = _rref(rows, m.field)
    return len(pivots)


def kernel_basis(m: Matrix) -> Matrix:
    """Columns form a basis of the null space of ``m``."""
    field = m.field
    pivots, _ = _rref(m.sparse_rows(scaled=True), field)
    free = [c for c in range(m.cols) if c not in pivots]
    index = {f: j for j, f in enumerate(free)}
    entries = {}
    for f in free:
        entries[f, index[f]] = 1
    for p, row in pivots.items():
        for c, v in row.items():
            if c in index:
                entries[p, index[c]] = -v
    return Matrix.from_dict(field, m.cols, len(free), entries)


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ShapeMismatch("inverse of a non-square %dx%d matrix" % m.shape)
    n = m.rows
    field = m.field
    rows = m.sparse_rows(scaled=True)
    for i, r in enumerate(rows):
        r[n + i] = 1
    pivots, dependent = _rref(rows, field, pivot_limit=n)
    if dependent or len(pivots) < n:
        raise Singular("matrix of rank < %d is not invertible" % n)
    entries = {}
    for p, row in pivots.items():
        for c, v in row.items():
            if c >= n:
                entries[p, c - n] = v
    inv_num = Matrix.from_dict(field, n, n, entries)
    if isinstance(field, PrimeField) or m._den == 1:
        return inv_num
    return inv_num.scale(m._den)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Some ``x`` with ``a @ x == b`` (free variables set to zero), or None."""
    if a.rows != b.rows:
        raise ShapeMismatch("solve: %d rows vs %d rows" % (a.rows, b.rows))
    field = a.field
    n = a.cols
    ra = a.sparse_rows()
    rb = b.sparse_rows()
    rows = []
    for x, y in zip(ra, rb):
        r = dict(x)
        for c, v in y.items():
            r[n + c] = v
        rows.append(r)
    pivots, dependent = _rref(rows, field, pivot_limit=n)
    if dependent:
        return None
    entries = {}
    for p, row in pivots.items():
        for c, v in row.items():
            if c >= n:
                entries[p, c - n] = v
    return Matrix.from_dict(field, n, b.cols, entries)


@dataclass(frozen=True)
class Quotient:
    """``projection`` kills exactly the span; ``projection @ section`` is the identity."""

    projection: Matrix
    section: Matrix
    dim: int
    span: Matrix

    def induced(self, op: Matrix, source: "Quotient") -> Matrix:
        """Map induced by ``op`` from ``source`` to this quotient; checks well-definedness."""
        if not (self.projection @ (op @ source.span)).is_zero():
            raise NotWellDefined("operator does not map the relation span into the target relation span")
        return self.projection @ op @ source.section


def quotient_data(span_cols: Matrix, ambient_dim: int) -> Quotient:
    if span_cols.rows != ambient_dim:
        raise ShapeMismatch("span has %d rows, ambient dimension is %d" % (span_cols.rows, ambient_dim))
    field = span_cols.field
    pivots, _ = _rref(span_cols.T.sparse_rows(scaled=True), field)
    free = [c for c in range(ambient_dim) if c not in pivots]
    index = {f: j for j, f in enumerate(free)}
    proj = {}
    for f, j in index.items():
        proj[j, f] = 1
    for p, row in pivots.items():
        for c, v in row.items():
            if c in index:
                proj[index[c], p] = -v
    projection = Matrix.from_dict(field, len(free), ambient_dim, proj)
    section = Matrix.from_dict(field, ambient_dim, len(free), {(f, j): 1 for f, j in index.items()})
    return Quotient(projection, section, len(free), span_cols)


class Subspace:
    """A subspace given by the columns of an injective ``inclusion`` matrix."""

    def __init__(self, inclusion: Matrix):
        self.inclusion = inclusion
        self.dim = inclusion.cols
        field = inclusion.field
        pivots, _ = _rref(inclusion.T.sparse_rows(scaled=True), field)
        if len(pivots) != inclusion.cols:
            raise Singular("inclusion columns are linearly dependent")
        chosen = sorted(pivots)
        square = inclusion.submatrix(rows=chosen)
        sel = Matrix.from_dict(field, len(chosen), inclusion.rows, {(k, r): 1 for k, r in enumerate(chosen)})
        self.left_inverse = inverse(square) @ sel

    def coordinates(self, vectors: Matrix) -> Matrix:
        """Coordinates of the columns of ``vectors``; raises NotPreserved if outside."""
        x = self.left_inverse @ vectors
        if self.inclusion @ x != vectors:
            raise NotPreserved("vectors do not lie in the subspace")
        return x

    def contains(self, vectors: Matrix) -> bool:
        return self.inclusion @ (self.left_inverse @ vectors) == vectors


def induced_on_subspace(op: Matrix, inclusion: Matrix, target_inclusion: Matrix | None = None) -> Matrix:
    """Matrix of ``op`` restricted to ``inclusion`` and corestricted to ``target_inclusion``."""
    if target_inclusion is None:
        target_inclusion = inclusion
    if op.cols != inclusion.rows or op.rows != target_inclusion.rows:
        raise ShapeMismatch("operator %s does not fit inclusions %s -> %s" % (op.shape, inclusion.shape, target_inclusion.shape))
    return Subspace(target_inclusion).coordinates(op @ inclusion)
