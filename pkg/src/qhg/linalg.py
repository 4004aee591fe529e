"""Dense exact linear algebra over Q(i).

Vectors are plain tuples of :class:`~qhg.scalar.Scalar`.  Matrices act on
column vectors, so ``M[i][j]`` is the ``i``-th coordinate of the image of the
``j``-th basis vector.  Elimination loops skip zero entries, which keeps the
permutation-like matrices that group algebras produce cheap to reduce.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar

Vec = tuple  # tuple[Scalar, ...]


def zero_vec(n: int) -> Vec:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vec:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def vec(values: Iterable) -> Vec:
    return tuple(as_scalar(x) for x in values)


def vec_add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b if b else a for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b if b else a for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Vec) -> Vec:
    if not c:
        return zero_vec(len(v))
    return tuple(c * a if a else ZERO for a in v)


def vec_conj(v: Vec) -> Vec:
    return tuple(a.conjugate() for a in v)


def vec_is_zero(v: Vec) -> bool:
    return not any(v)


def dot(u: Vec, v: Vec) -> Scalar:
    """Bilinear pairing, no conjugation."""
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s = s + a * b
    return s


def sparse(v: Vec) -> dict[int, Scalar]:
    return {i: a for i, a in enumerate(v) if a}


def densify(d: dict[int, Scalar], n: int) -> Vec:
    out = [ZERO] * n
    for i, a in d.items():
        out[i] = a
    return tuple(out)


class Mat:
    """Immutable ``rows x cols`` matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence[Scalar]]):
        entries = tuple(tuple(r) for r in entries)
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise ValueError(f"entries do not form a {rows}x{cols} grid")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    # constructors ---------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Mat:
        rows = [vec(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count of an empty matrix")
            cols = len(rows[0])
        return cls(len(rows), cols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Vec], rows: int | None = None) -> Mat:
        if rows is None:
            rows = len(columns[0])
        return cls(rows, len(columns), [tuple(c[i] for c in columns) for i in range(rows)])

    @classmethod
    def from_sparse(cls, rows: int, cols: int, items: dict[tuple[int, int], Scalar]) -> Mat:
        grid = [[ZERO] * cols for _ in range(rows)]
        for (i, j), a in items.items():
            if a:
                grid[i][j] = a
        return cls(rows, cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Mat:
        return cls(rows, cols, [(ZERO,) * cols] * rows)

    @classmethod
    def identity(cls, n: int) -> Mat:
        return cls(n, n, [unit_vec(n, i) for i in range(n)])

    # access ---------------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vec:
        return self.entries[i]

    def col(self, j: int) -> Vec:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[Vec]:
        return [self.col(j) for j in range(self.cols)]

    def nonzero(self):
        for i, r in enumerate(self.entries):
            for j, a in enumerate(r):
                if a:
                    yield i, j, a

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.entries)
        return f"Mat({self.rows}x{self.cols}: {body})"

    # algebra --------------------------------------------------------------

    def transpose(self) -> Mat:
        return Mat(self.cols, self.rows, list(zip(*self.entries)) if self.rows else [()] * self.cols)

    @property
    def T(self) -> Mat:
        return self.transpose()

    def conj(self) -> Mat:
        return Mat(self.rows, self.cols, [vec_conj(r) for r in self.entries])

    def adjoint(self) -> Mat:
        return self.conj().transpose()

    def __add__(self, other: Mat) -> Mat:
        return Mat(self.rows, self.cols, [vec_add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: Mat) -> Mat:
        return Mat(self.rows, self.cols, [vec_sub(a, b) for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> Mat:
        c = as_scalar(c)
        return Mat(self.rows, self.cols, [vec_scale(c, r) for r in self.entries])

    def __matmul__(self, other: Mat) -> Mat:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        other_rows = [sparse(r) for r in other.entries]
        out = []
        for r in self.entries:
            acc: dict[int, Scalar] = {}
            for k, a in enumerate(r):
                if not a:
                    continue
                for j, b in other_rows[k].items():
                    acc[j] = acc.get(j, ZERO) + a * b
            out.append(densify(acc, other.cols))
        return Mat(self.rows, other.cols, out)

    def apply(self, v: Vec) -> Vec:
        """``M v`` for a column vector ``v``."""
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        nz = [(j, a) for j, a in enumerate(v) if a]
        out = []
        for r in self.entries:
            s = ZERO
            for j, a in nz:
                b = r[j]
                if b:
                    s = s + b * a
            out.append(s)
        return tuple(out)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.entries)

    def is_identity(self) -> bool:
        return self.rows == self.cols and self == Mat.identity(self.rows)

    def is_hermitian(self) -> bool:
        return self.rows == self.cols and self == self.adjoint()

    def trace(self) -> Scalar:
        s = ZERO
        for i in range(min(self.rows, self.cols)):
            s = s + self.entries[i][i]
        return s

    def rank(self) -> int:
        return rank_of_rows((sparse(r) for r in self.entries))

    def inverse(self) -> Mat:
        """Exact inverse; raises :class:`SingularMatrixError` if singular."""
        n = self.rows
        if n != self.cols:
            raise ValueError("only square matrices are invertible")
        aug = [dict(sparse(r)) for r in self.entries]
        for i in range(n):
            aug[i][n + i] = ONE
        rows, pivots = _reduce(aug)
        if pivots[:n] != list(range(n)) or len(pivots) < n:
            raise SingularMatrixError("matrix is singular")
        inv = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            for j, a in rows[i].items():
                if j >= n:
                    inv[i][j - n] = a
        return Mat(n, n, inv)

    def kernel(self) -> list[Vec]:
        """Basis of ``{x : M x = 0}``, one vector per free column."""
        red, pivots = _reduce([sparse(r) for r in self.entries])
        pivset = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivset:
                continue
            x = {f: ONE}
            for r, p in zip(red, pivots):
                a = r.get(f)
                if a:
                    x[p] = -a
            basis.append(densify(x, self.cols))
        return basis

    def solve(self, b: Vec) -> Vec | None:
        """One solution of ``M x = b`` or ``None`` if the system is inconsistent."""
        n = self.cols
        aug = [sparse(r) for r in self.entries]
        for i, bi in enumerate(b):
            if bi:
                aug[i] = dict(aug[i])
                aug[i][n] = bi
        red, pivots = _reduce(aug)
        if n in pivots:
            return None
        x = [ZERO] * n
        for r, p in zip(red, pivots):
            x[p] = r.get(n, ZERO)
        return tuple(x)


class SingularMatrixError(ArithmeticError):
    pass


def _reduce(rows: Iterable[dict[int, Scalar]]) -> tuple[list[dict[int, Scalar]], list[int]]:
    """Incremental Gauss-Jordan reduction of sparse rows.

    Returns the nonzero rows of the reduced row echelon form sorted by pivot
    column, together with the pivot columns.
    """
    basis: dict[int, dict[int, Scalar]] = {}  # pivot column -> reduced row
    holders: dict[int, set[int]] = {}  # column -> pivots of basis rows with a nonzero there
    for row in rows:
        r = {j: a for j, a in row.items() if a}
        hits = [p for p in r if p in basis]
        for p in hits:
            c = r.get(p)
            if not c:
                continue
            for j, a in basis[p].items():
                v = r.get(j, ZERO) - c * a
                if v:
                    r[j] = v
                else:
                    r.pop(j, None)
        if not r:
            continue
        p = min(r)
        inv = r[p].inverse()
        if r[p] != ONE:
            r = {j: a * inv for j, a in r.items()}
        # clear column p from the existing basis rows
        for q in list(holders.get(p, ())):
            brow = basis[q]
            c = brow.get(p)
            if not c:
                continue
            for j, a in r.items():
                v = brow.get(j, ZERO) - c * a
                if v:
                    if j not in brow:
                        holders.setdefault(j, set()).add(q)
                    brow[j] = v
                else:
                    if j in brow:
                        del brow[j]
                        holders.get(j, set()).discard(q)
        basis[p] = r
        for j in r:
            holders.setdefault(j, set()).add(p)
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def rank_of_rows(rows: Iterable[dict[int, Scalar]]) -> int:
    return len(_reduce(rows)[1])


def rref(m: Mat) -> tuple[Mat, int]:
    """Reduced row echelon form of ``m`` (same shape, zero rows last) and its rank."""
    red, pivots = _reduce(sparse(r) for r in m.entries)
    rows = [densify(r, m.cols) for r in red]
    rows += [zero_vec(m.cols)] * (m.rows - len(rows))
    return Mat(m.rows, m.cols, rows), len(pivots)


# --------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q(i)^n`` held by its reduced row echelon basis.

    The basis is canonical, so two subspaces are equal exactly when their
    dataclass fields are equal.
    """

    ambient_dim: int
    basis: tuple[Vec, ...]

    @classmethod
    def span(cls, n: int, vectors: Iterable[Vec]) -> Subspace:
        red, _ = _reduce(sparse(v) for v in vectors)
        return cls(n, tuple(densify(r, n) for r in red))

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, tuple(unit_vec(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(v) if a) for v in self.basis)

    def coords(self, v: Vec) -> Vec | None:
        """Coefficients of ``v`` in :attr:`basis`, or ``None`` if ``v`` is not in the subspace."""
        c = tuple(v[p] for p in self.pivots)
        recon = zero_vec(self.ambient_dim)
        for ci, b in zip(c, self.basis):
            if ci:
                recon = vec_add(recon, vec_scale(ci, b))
        return c if recon == tuple(v) else None

    def __contains__(self, v: Vec) -> bool:
        return self.coords(v) is not None

    def contains(self, other: Subspace) -> bool:
        _check_ambient(self, other)
        return all(b in self for b in other.basis)

    def __le__(self, other: Subspace) -> bool:
        return other.contains(self)

    def join(self, other: Subspace) -> Subspace:
        _check_ambient(self, other)
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: Subspace) -> Subspace:
        return subspace_intersect(self, other)

    def image(self, m: Mat, conjugate: bool = False) -> Subspace:
        """Image under ``x -> M x`` (or ``x -> M conj(x)`` for conjugate-linear maps)."""
        vs = (vec_conj(b) if conjugate else b for b in self.basis)
        return Subspace.span(m.rows, (m.apply(v) for v in vs))

    def as_mat(self) -> Mat:
        return Mat(self.dim, self.ambient_dim, self.basis)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {u.ambient_dim} vs {v.ambient_dim}")


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    """``u ∩ v`` from the kernel of ``[u_1 .. u_k | -v_1 .. -v_m]``."""
    _check_ambient(u, v)
    n = u.ambient_dim
    if not u.basis or not v.basis:
        return Subspace.zero(n)
    cols = list(u.basis) + [vec_scale(-ONE, b) for b in v.basis]
    system = Mat.from_columns(cols, rows=n)
    k = len(u.basis)
    out = []
    for z in system.kernel():
        w = zero_vec(n)
        for c, b in zip(z[:k], u.basis):
            if c:
                w = vec_add(w, vec_scale(c, b))
        out.append(w)
    return Subspace.span(n, out)


# --------------------------------------------------------------------------
# two-fold tensors


@dataclass(frozen=True)
class Tensor2:
    """``sum_ij coeffs[i][j] b_i ⊗ b_j`` in ``A ⊗ A``."""

    coeffs: Mat

    def __post_init__(self):
        if self.coeffs.rows != self.coeffs.cols:
            raise ValueError("Tensor2 coefficient matrix must be square")

    @property
    def dim(self) -> int:
        return self.coeffs.rows

    @classmethod
    def from_items(cls, dim: int, items: dict[tuple[int, int], Scalar]) -> Tensor2:
        return cls(Mat.from_sparse(dim, dim, items))

    @classmethod
    def simple(cls, x: Vec, y: Vec) -> Tensor2:
        """``x ⊗ y``."""
        n = len(x)
        return cls(Mat(n, n, [vec_scale(a, y) if a else zero_vec(n) for a in x]))

    @classmethod
    def zero(cls, dim: int) -> Tensor2:
        return cls(Mat.zeros(dim, dim))

    def items(self) -> dict[tuple[int, int], Scalar]:
        return {(i, j): a for i, j, a in self.coeffs.nonzero()}

    def flip(self) -> Tensor2:
        return Tensor2(self.coeffs.transpose())

    def __add__(self, other: Tensor2) -> Tensor2:
        return Tensor2(self.coeffs + other.coeffs)

    def __sub__(self, other: Tensor2) -> Tensor2:
        return Tensor2(self.coeffs - other.coeffs)

    def scale(self, c) -> Tensor2:
        return Tensor2(self.coeffs.scale(c))

    def is_zero(self) -> bool:
        return self.coeffs.is_zero()

    def map_legs(self, left: Mat | None, right: Mat | None) -> Tensor2:
        """``(L ⊗ R) t`` for linear maps on each leg; ``None`` means identity."""
        c = self.coeffs
        if left is not None:
            c = left @ c
        if right is not None:
            c = c @ right.transpose()
        return Tensor2(c)


def row_space(t: Tensor2) -> Subspace:
    """Span of the second-leg factors of ``t``."""
    return Subspace.span(t.dim, t.coeffs.entries)


def col_space(t: Tensor2) -> Subspace:
    """Span of the first-leg factors of ``t``."""
    return Subspace.span(t.dim, t.coeffs.columns())


# --------------------------------------------------------------------------
# positivity


def psd_pivots(m: Mat) -> tuple[bool, list[Scalar], tuple[int, int] | None]:
    """Symmetric elimination of a Hermitian matrix without square roots.

    Returns ``(is_psd, pivots, witness)``.  A negative pivot, or a zero pivot
    whose row still has a nonzero entry, certifies that ``m`` is not positive
    semidefinite; the witness is the offending index pair.
    """
    if not m.is_hermitian():
        bad = next(((i, j) for i in range(m.rows) for j in range(m.cols)
                    if m[i, j] != m[j, i].conjugate()), None)
        return False, [], bad
    n = m.rows
    a = [dict(sparse(r)) for r in m.entries]
    pivots: list[Scalar] = []
    for k in range(n):
        p = a[k].get(k, ZERO)
        if p.im or p.re < 0:
            return False, pivots, (k, k)
        pivots.append(p)
        tail = {j: x for j, x in a[k].items() if j > k}
        if not p:
            if tail:
                return False, pivots, (k, min(tail))
            continue
        pinv = p.inverse()
        for i, aki in tail.items():
            aik = aki.conjugate()
            f = aik * pinv
            row = a[i]
            for j, akj in tail.items():
                v = row.get(j, ZERO) - f * akj
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
    return True, pivots, None
