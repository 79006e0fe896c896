"""Exact linear algebra over the rationals and prime fields.

Field elements are plain Python values: :class:`fractions.Fraction` over Q
and ``int`` residues in ``[0, p)`` over GF(p).  Matrices are stored sparsely
as one ``{column: value}`` dict per row; zero entries are never stored.
Subspaces are kept in reduced row-echelon form so that equality of
subspaces is equality of bases.

Everything here is treated as immutable once constructed.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence


class DimensionMismatch(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# --------------------------------------------------------------------------
# fields
# --------------------------------------------------------------------------


class Field:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int = 0
    is_finite: bool = False

    zero = 0
    one = 1

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == 0

    def vector(self, values: Iterable) -> list:
        return [self(v) for v in values]


class Rationals(Field):
    characteristic = 0
    is_finite = False
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, str):
            x = x.strip()
            if "/" in x:
                num, den = x.split("/", 1)
                den = int(den)
                if den == 0:
                    raise ZeroDivisionError(f"zero denominator in {x!r}")
                return Fraction(int(num), den)
            return Fraction(int(x))
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def to_json(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    is_finite = True

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool):
            raise TypeError("p must be an int")
        if p >= 2**31 or not _is_prime(p):
            raise ValueError(f"{p} is not a prime below 2^31")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1

    @property
    def order(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, str):
            x = x.strip()
            if "/" in x:
                num, den = x.split("/", 1)
                den = int(den) % self.p
                if den == 0:
                    raise ZeroDivisionError(f"denominator divisible by {self.p} in {x!r}")
                return (int(num) * pow(den, -1, self.p)) % self.p
            return int(x) % self.p
        raise TypeError(f"cannot convert {x!r} to GF({self.p})")

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def elements(self) -> range:
        return range(self.p)

    def to_json(self, x) -> int:
        return int(x)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()
GF = PrimeField


# --------------------------------------------------------------------------
# sparse row helpers
# --------------------------------------------------------------------------


def _clean_row(field: Field, row) -> dict:
    if isinstance(row, dict):
        items = row.items()
    else:
        items = enumerate(row)
    out = {}
    for c, v in items:
        v = field(v)
        if v != 0:
            out[c] = v
    return out


def _axpy(field: Field, y: dict, a, x: dict) -> None:
    """y += a*x in place."""
    if field.is_finite:
        p = field.p
        for k, v in x.items():
            nv = (y.get(k, 0) + a * v) % p
            if nv:
                y[k] = nv
            else:
                y.pop(k, None)
    else:
        for k, v in x.items():
            nv = y.get(k, 0) + a * v
            if nv:
                y[k] = nv
            else:
                y.pop(k, None)


def _scale_row(field: Field, a, x: dict) -> dict:
    if field.is_finite:
        p = field.p
        return {k: (a * v) % p for k, v in x.items()}
    return {k: a * v for k, v in x.items()}


def _echelon(field: Field, rows: Iterable[dict]) -> dict:
    """Incremental sparse elimination.

    Returns ``{pivot_column: row}`` with every row normalized to leading
    entry 1 and no two rows sharing a pivot.  Rows are not back-reduced.
    """
    pivots: dict = {}
    finite = field.is_finite
    p = field.p if finite else None
    for row in rows:
        r = dict(row)
        while r:
            c = min(r)
            prow = pivots.get(c)
            if prow is None:
                a = r[c]
                if a != 1:
                    inv = pow(a, -1, p) if finite else 1 / a
                    r = _scale_row(field, inv, r)
                pivots[c] = r
                break
            _axpy(field, r, -r[c], prow)
    return pivots


def _rref(field: Field, rows: Iterable[dict]) -> list:
    """Reduced row-echelon form as a pivot-sorted list of ``(pivot, row)``."""
    pivots = _echelon(field, rows)
    order = sorted(pivots)
    # back-substitution from the right
    for idx in range(len(order) - 1, -1, -1):
        c = order[idx]
        prow = pivots[c]
        for c2 in order[:idx]:
            r2 = pivots[c2]
            a = r2.get(c)
            if a:
                _axpy(field, r2, -a, prow)
    return [(c, pivots[c]) for c in order]


def _primitive(row: dict) -> dict:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _integer_row(row: dict) -> dict:
    den = 1
    for v in row.values():
        d = v.denominator
        den = den * d // gcd(den, d)
    return _primitive({k: int(v * den) for k, v in row.items()})


def fraction_free_rank(rows: Iterable[dict]) -> int:
    """Rank over Q without rational arithmetic.

    Each row is scaled to a primitive integer vector; a row is reduced
    against an existing pivot row by the cross-multiplication
    ``r <- a*r - b*pivot`` followed by removal of the content, which keeps
    coefficients bounded by the size of the minors involved.
    """
    pivots: dict = {}
    for row in rows:
        if not row:
            continue
        r = _integer_row(row)
        while r:
            c = min(r)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = r
                break
            a = prow[c]
            b = r[c]
            g = gcd(a, b)
            a //= g
            b //= g
            new = {k: a * v for k, v in r.items()}
            for k, v in prow.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            r = _primitive(new) if new else new
    return len(pivots)


# --------------------------------------------------------------------------
# matrices
# --------------------------------------------------------------------------


class ExactMatrix:
    """Sparse exact matrix acting on column vectors."""

    __slots__ = ("field", "nrows", "ncols", "_rows")

    def __init__(self, field: Field, nrows: int, ncols: int, rows=None, *, _trusted=False):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self._rows = [dict() for _ in range(nrows)]
        elif _trusted:
            self._rows = rows
        else:
            rows = list(rows)
            if len(rows) != nrows:
                raise DimensionMismatch(f"expected {nrows} rows, got {len(rows)}")
            self._rows = []
            for r in rows:
                r = _clean_row(field, r)
                if any(not 0 <= c < ncols for c in r):
                    raise DimensionMismatch("column index out of range")
                self._rows.append(r)

    # construction -------------------------------------------------------
    @classmethod
    def from_dense(cls, field: Field, data: Sequence[Sequence], ncols: int | None = None):
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise DimensionMismatch("ragged matrix")
        return cls(field, len(data), ncols, data)

    @classmethod
    def from_entries(cls, field: Field, nrows: int, ncols: int, entries: dict):
        rows = [dict() for _ in range(nrows)]
        for (i, j), v in entries.items():
            rows[i][j] = v
        return cls(field, nrows, ncols, rows)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int):
        return cls(field, n, n, [{i: field.one} for i in range(n)], _trusted=True)

    @classmethod
    def scalar(cls, field: Field, n: int, c):
        c = field(c)
        if c == 0:
            return cls(field, n, n)
        return cls(field, n, n, [{i: c} for i in range(n)], _trusted=True)

    @classmethod
    def from_columns(cls, field: Field, nrows: int, columns: Sequence):
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                v = field(v)
                if v != 0:
                    rows[i][j] = v
        return cls(field, nrows, len(columns), rows, _trusted=True)

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    def row(self, i: int) -> dict:
        """Sparse row (read-only view)."""
        return self._rows[i]

    def rows(self) -> list:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i].get(j, self.field.zero)

    def nnz(self) -> int:
        return sum(len(r) for r in self._rows)

    def to_dense(self) -> list:
        z = self.field.zero
        out = []
        for r in self._rows:
            row = [z] * self.ncols
            for j, v in r.items():
                row[j] = v
            out.append(row)
        return out

    def column(self, j: int) -> list:
        z = self.field.zero
        return [r.get(j, z) for r in self._rows]

    def is_zero(self) -> bool:
        return not any(self._rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self._rows)))

    def __repr__(self):
        return f"ExactMatrix({self.field!r}, {self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # arithmetic ---------------------------------------------------------
    def _check_same(self, other):
        if self.field != other.field or self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        rows = []
        for a, b in zip(self._rows, other._rows):
            r = dict(a)
            _axpy(self.field, r, 1, b)
            rows.append(r)
        return ExactMatrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def __sub__(self, other):
        self._check_same(other)
        rows = []
        for a, b in zip(self._rows, other._rows):
            r = dict(a)
            _axpy(self.field, r, -1, b)
            rows.append(r)
        return ExactMatrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        c = self.field(c)
        if c == 0:
            return ExactMatrix(self.field, self.nrows, self.ncols)
        rows = [_scale_row(self.field, c, r) for r in self._rows]
        return ExactMatrix(self.field, self.nrows, self.ncols, rows, _trusted=True)

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.field != other.field:
                raise DimensionMismatch("field mismatch")
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            return self._matmul(other)
        return self.apply(other)

    def _matmul(self, other):
        finite = self.field.is_finite
        p = self.field.p if finite else None
        orows = other._rows
        out = []
        for r in self._rows:
            acc: dict = {}
            for k, a in r.items():
                for j, b in orows[k].items():
                    acc[j] = acc.get(j, 0) + a * b
            if finite:
                acc = {j: v % p for j, v in acc.items() if v % p}
            else:
                acc = {j: v for j, v in acc.items() if v}
            out.append(acc)
        return ExactMatrix(self.field, self.nrows, other.ncols, out, _trusted=True)

    def apply(self, vec) -> list:
        """Matrix times a dense vector."""
        if len(vec) != self.ncols:
            raise DimensionMismatch(f"vector length {len(vec)} != {self.ncols}")
        f = self.field
        out = []
        for r in self._rows:
            s = 0
            for j, a in r.items():
                v = vec[j]
                if v:
                    s += a * v
            out.append(f(s) if f.is_finite else Fraction(s))
        return out

    def apply_sparse(self, vec: dict) -> dict:
        """Matrix times a sparse vector ``{index: value}``."""
        cols: dict = {}
        t = self.transpose_rows()
        for j, v in vec.items():
            for i, a in t[j].items():
                cols[i] = cols.get(i, 0) + a * v
        f = self.field
        if f.is_finite:
            return {i: x % f.p for i, x in cols.items() if x % f.p}
        return {i: x for i, x in cols.items() if x}

    def transpose_rows(self) -> list:
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self._rows):
            for j, v in r.items():
                cols[j][i] = v
        return cols

    @property
    def T(self):
        return ExactMatrix(self.field, self.ncols, self.nrows, self.transpose_rows(), _trusted=True)

    def __pow__(self, k: int):
        if not self.is_square():
            raise DimensionMismatch("power of a non-square matrix")
        result = ExactMatrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def kron(self, other):
        """Kronecker product ``self (x) other``."""
        n2, m2 = other.nrows, other.ncols
        rows = []
        f = self.field
        for r in self._rows:
            for r2 in other._rows:
                acc = {}
                for j, a in r.items():
                    for j2, b in r2.items():
                        acc[j * m2 + j2] = a * b
                if f.is_finite:
                    acc = {k: v % f.p for k, v in acc.items() if v % f.p}
                rows.append(acc)
        return ExactMatrix(f, self.nrows * n2, self.ncols * m2, rows, _trusted=True)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]):
        cmap = {c: k for k, c in enumerate(col_idx)}
        rows = []
        for i in row_idx:
            rows.append({cmap[j]: v for j, v in self._rows[i].items() if j in cmap})
        return ExactMatrix(self.field, len(row_idx), len(col_idx), rows, _trusted=True)

    @staticmethod
    def hstack(mats: Sequence["ExactMatrix"]):
        f = mats[0].field
        n = mats[0].nrows
        rows = [dict() for _ in range(n)]
        off = 0
        for m in mats:
            if m.nrows != n:
                raise DimensionMismatch("hstack row mismatch")
            for i, r in enumerate(m._rows):
                for j, v in r.items():
                    rows[i][off + j] = v
            off += m.ncols
        return ExactMatrix(f, n, off, rows, _trusted=True)

    @staticmethod
    def vstack(mats: Sequence["ExactMatrix"]):
        f = mats[0].field
        m0 = mats[0].ncols
        rows = []
        for m in mats:
            if m.ncols != m0:
                raise DimensionMismatch("vstack column mismatch")
            rows.extend(dict(r) for r in m._rows)
        return ExactMatrix(f, len(rows), m0, rows, _trusted=True)

    # elimination ----------------------------------------------------------
    def rank(self) -> int:
        if self.field.is_finite:
            return len(_echelon(self.field, self._rows))
        return fraction_free_rank(self._rows)

    def kernel(self) -> "Subspace":
        """Null space ``{v : self v = 0}`` as a canonical subspace."""
        f = self.field
        piv = _rref(f, self._rows)
        pcols = {c for c, _ in piv}
        vecs = []
        for free in range(self.ncols):
            if free in pcols:
                continue
            v = {free: f.one}
            for c, r in piv:
                a = r.get(free)
                if a:
                    v[c] = f(-a) if f.is_finite else -a
            vecs.append(v)
        return Subspace.span(f, self.ncols, vecs)

    def image(self) -> "Subspace":
        """Column space as a canonical subspace."""
        return Subspace.span(self.field, self.nrows, self.transpose_rows())

    def row_space(self) -> "Subspace":
        return Subspace.span(self.field, self.ncols, self._rows)

    def inverse(self):
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.nrows
        f = self.field
        aug = []
        for i, r in enumerate(self._rows):
            row = dict(r)
            row[n + i] = f.one
            aug.append(row)
        piv = _rref(f, aug)
        if len(piv) < n or any(c != i for i, (c, _) in enumerate(piv[:n])):
            raise ZeroDivisionError("matrix is singular")
        rows = [{j - n: v for j, v in r.items() if j >= n} for _, r in piv[:n]]
        return ExactMatrix(f, n, n, rows, _trusted=True)

    def solve(self, y):
        """Some ``x`` with ``self x = y`` (dense list), or ``None`` if inconsistent."""
        f = self.field
        n = self.ncols
        yd = _clean_row(f, y) if not isinstance(y, dict) else y
        aug = []
        for i, r in enumerate(self._rows):
            row = dict(r)
            v = yd.get(i)
            if v:
                row[n] = v
            aug.append(row)
        piv = _rref(f, aug)
        x = [f.zero] * n
        for c, r in piv:
            if c == n:
                return None
            x[c] = r.get(n, f.zero)
        return x

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.nrows

    def is_nilpotent(self) -> bool:
        if not self.is_square():
            return False
        return (self ** self.nrows).is_zero() if self.nrows else True


def rank_kernel_image(m: ExactMatrix):
    """Return ``(rank, kernel, image)`` of ``m``."""
    ker = m.kernel()
    img = m.image()
    return img.dim, ker, img


# --------------------------------------------------------------------------
# subspaces
# --------------------------------------------------------------------------


class Subspace:
    """Subspace of ``F^n`` held by its reduced row-echelon basis."""

    __slots__ = ("field", "ambient_dim", "_rows", "_pivots", "_key")

    def __init__(self, field: Field, ambient_dim: int, rref_rows):
        self.field = field
        self.ambient_dim = ambient_dim
        self._pivots = tuple(c for c, _ in rref_rows)
        self._rows = tuple(r for _, r in rref_rows)
        self._key = None

    @classmethod
    def span(cls, field: Field, ambient_dim: int, vectors: Iterable) -> "Subspace":
        rows = []
        for v in vectors:
            if isinstance(v, dict):
                r = {k: field(x) for k, x in v.items()}
                r = {k: x for k, x in r.items() if x != 0}
                if any(not 0 <= k < ambient_dim for k in r):
                    raise DimensionMismatch("vector index out of range")
            else:
                if len(v) != ambient_dim:
                    raise DimensionMismatch(f"vector of length {len(v)} in F^{ambient_dim}")
                r = _clean_row(field, v)
            if r:
                rows.append(r)
        return cls(field, ambient_dim, _rref(field, rows))

    @classmethod
    def zero(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [])

    @classmethod
    def full(cls, field: Field, n: int) -> "Subspace":
        return cls(field, n, [(i, {i: field.one}) for i in range(n)])

    @classmethod
    def coordinate(cls, field: Field, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(field, n, [(i, {i: field.one}) for i in sorted(set(indices))])

    # basic ------------------------------------------------------------------
    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    @property
    def pivots(self) -> tuple:
        return self._pivots

    @property
    def sparse_basis(self) -> tuple:
        return self._rows

    @property
    def basis(self) -> list:
        z = self.field.zero
        out = []
        for r in self._rows:
            v = [z] * self.ambient_dim
            for k, x in r.items():
                v[k] = x
            out.append(tuple(v))
        return out

    def is_zero(self) -> bool:
        return not self._rows

    def is_full(self) -> bool:
        return len(self._rows) == self.ambient_dim

    def key(self):
        if self._key is None:
            self._key = (self.ambient_dim, tuple(tuple(sorted(r.items())) for r in self._rows))
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, basis={self.basis})"

    def _check(self, other):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(
                f"subspaces of F^{self.ambient_dim} and F^{other.ambient_dim}"
            )

    # membership and coordinates ---------------------------------------------
    def reduce(self, v) -> dict:
        """Residual of ``v`` after subtracting its projection along the basis."""
        f = self.field
        r = _clean_row(f, v) if not isinstance(v, dict) else dict(v)
        for c, row in zip(self._pivots, self._rows):
            a = r.get(c)
            if a:
                _axpy(f, r, -a, row)
        return r

    def __contains__(self, v) -> bool:
        if not isinstance(v, dict) and len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length mismatch")
        return not self.reduce(v)

    def coordinates(self, v) -> list:
        """Coordinates of ``v`` in the echelon basis; ``ValueError`` if absent."""
        r = _clean_row(self.field, v) if not isinstance(v, dict) else dict(v)
        coords = [r.get(c, self.field.zero) for c in self._pivots]
        if self.reduce(r):
            raise ValueError("vector is not in the subspace")
        return coords

    def issubset(self, other: "Subspace") -> bool:
        self._check(other)
        return all(not other.reduce(r) for r in self._rows)

    __le__ = issubset

    def __lt__(self, other):
        return self.issubset(other) and self.dim < other.dim

    # lattice operations ------------------------------------------------------
    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, list(self._rows) + list(other._rows))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the stacked system ``U a = W b``."""
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Subspace.zero(self.field, self.ambient_dim)
        f = self.field
        cols = list(self._rows) + [_scale_row(f, f(-1), r) for r in other._rows]
        m = ExactMatrix.from_columns(f, self.ambient_dim, cols)
        ker = m.kernel()
        vecs = []
        a = self.dim
        for kv in ker.sparse_basis:
            acc: dict = {}
            for idx, coef in kv.items():
                if idx < a:
                    _axpy(f, acc, coef, self._rows[idx])
            vecs.append(acc)
        return Subspace.span(f, self.ambient_dim, vecs)

    __and__ = intersection

    # quotients ------------------------------------------------------------
    def complement_indices(self) -> list:
        """Non-pivot coordinates: their unit vectors span an echelon complement."""
        piv = set(self._pivots)
        return [i for i in range(self.ambient_dim) if i not in piv]

    def quotient_coordinates(self, v) -> list:
        r = self.reduce(v)
        z = self.field.zero
        return [r.get(i, z) for i in self.complement_indices()]

    def quotient_map(self) -> ExactMatrix:
        """Matrix of ``F^n -> F^n / U`` in complement coordinates."""
        f = self.field
        comp = self.complement_indices()
        cpos = {c: k for k, c in enumerate(comp)}
        cols = []
        for j in range(self.ambient_dim):
            r = self.reduce({j: f.one})
            cols.append({cpos[k]: x for k, x in r.items()})
        return ExactMatrix.from_columns(f, len(comp), cols)

    def section_map(self) -> ExactMatrix:
        """Matrix of ``F^n / U -> F^n`` sending a class to its complement lift."""
        comp = self.complement_indices()
        return ExactMatrix.from_columns(
            self.field, self.ambient_dim, [{c: self.field.one} for c in comp]
        )

    def inclusion_map(self) -> ExactMatrix:
        """Matrix whose columns are the echelon basis vectors."""
        return ExactMatrix.from_columns(self.field, self.ambient_dim, list(self._rows))

    def retraction_map(self) -> ExactMatrix:
        """Matrix reading off echelon coordinates (exact on the subspace)."""
        f = self.field
        rows = [{c: f.one} for c in self._pivots]
        return ExactMatrix(f, self.dim, self.ambient_dim, rows, _trusted=True)

    # linear maps ------------------------------------------------------------
    def image_under(self, t: ExactMatrix) -> "Subspace":
        return Subspace.span(self.field, t.nrows, [t.apply_sparse(r) for r in self._rows])

    def is_invariant(self, t: ExactMatrix) -> bool:
        return all(not self.reduce(t.apply_sparse(r)) for r in self._rows)

    def restrict(self, t: ExactMatrix) -> ExactMatrix:
        """Matrix of ``t`` restricted to this (invariant) subspace."""
        cols = [self.coordinates(t.apply_sparse(r)) for r in self._rows]
        return ExactMatrix.from_columns(self.field, self.dim, cols)

    def induced_on_quotient(self, t: ExactMatrix) -> ExactMatrix:
        """Matrix of the map induced by ``t`` on ``F^n / U``."""
        f = self.field
        cols = [self.quotient_coordinates(t.apply_sparse({c: f.one})) for c in self.complement_indices()]
        return ExactMatrix.from_columns(f, len(cols), cols)

    def preimage(self, t: ExactMatrix) -> "Subspace":
        """``{v : t v in U}``."""
        q = self.quotient_map()
        return (q @ t).kernel()

    def elements(self) -> Iterator[tuple]:
        """All vectors of a subspace over a finite field."""
        f = self.field
        if not f.is_finite:
            raise ValueError("cannot enumerate a subspace over an infinite field")
        basis = self.basis
        for coeffs in itertools.product(range(f.p), repeat=len(basis)):
            v = [0] * self.ambient_dim
            for c, b in zip(coeffs, basis):
                if c:
                    for k in range(self.ambient_dim):
                        v[k] = (v[k] + c * b[k]) % f.p
            yield tuple(v)


def all_subspaces(field: Field, n: int, budget: int = 10**6, dims: Iterable[int] | None = None):
    """Enumerate every subspace of ``F^n`` over a prime field.

    Raises :class:`BudgetExceeded` before doing any work when the number of
    subspaces exceeds ``budget``.
    """
    if not field.is_finite:
        raise ValueError("subspace enumeration needs a finite field")
    dims = list(range(n + 1)) if dims is None else list(dims)
    total = sum(gaussian_binomial(n, k, field.p) for k in dims)
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces of GF({field.p})^{n} exceed budget {budget}")
    p = field.p
    for k in dims:
        for pivots in itertools.combinations(range(n), k):
            free = []
            for r, c in enumerate(pivots):
                for j in range(c + 1, n):
                    if j not in pivots:
                        free.append((r, j))
            for vals in itertools.product(range(p), repeat=len(free)):
                rows = [{c: 1} for c in pivots]
                for (r, j), v in zip(free, vals):
                    if v:
                        rows[r][j] = v
                yield Subspace(field, n, list(zip(pivots, rows)))


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured budget."""
