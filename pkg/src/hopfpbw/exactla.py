"""Deterministic exact linear algebra over cyclotomic scalars.

Dense Gaussian elimination with the first nonzero entry in scan order as
pivot, so every result (RREF, kernel bases, subspace bases) is canonical
and golden-test stable.  Subspaces are stored in reduced row echelon form,
which makes subspace equality structural equality.

A sparse echelon helper is included for the larger homogeneous systems
assembled by the deformation solver; it computes the same canonical
kernels as the dense path.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .scalar import Scalar


class LinAlgError(Exception):
    pass


class AmbientMismatch(LinAlgError):
    pass


class NoSolution(LinAlgError):
    pass


class NotMember(LinAlgError):
    pass


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of Scalars."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise LinAlgError("entry count does not match shape")

    @staticmethod
    def from_rows(rows: list[list[Scalar]], cols: int | None = None, order: int | None = None) -> "Matrix":
        nrows = len(rows)
        if nrows == 0:
            if cols is None:
                raise LinAlgError("empty matrix needs an explicit column count")
            return Matrix(0, cols, ())
        ncols = len(rows[0]) if cols is None else cols
        flat: list[Scalar] = []
        for r in rows:
            if len(r) != ncols:
                raise LinAlgError("ragged rows")
            flat.extend(r)
        return Matrix(nrows, ncols, tuple(flat))

    @staticmethod
    def identity(n: int, order: int) -> "Matrix":
        one, zero = Scalar.one(order), Scalar.zero(order)
        return Matrix(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int, order: int) -> "Matrix":
        return Matrix(rows, cols, (Scalar.zero(order),) * (rows * cols))

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Scalar]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def row_list(self) -> list[list[Scalar]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def mul_vec(self, v: list[Scalar]) -> list[Scalar]:
        if len(v) != self.cols:
            raise LinAlgError("vector length does not match column count")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = None
            for j, x in enumerate(v):
                if x.is_zero():
                    continue
                term = self.entries[base + j] * x
                acc = term if acc is None else acc + term
            if acc is None:
                acc = _zero_like(v[0]) if v else Scalar.zero(1)
            out.append(acc)
        return out


def _zero_like(s: Scalar) -> Scalar:
    return Scalar.zero(s.order)


def _rref_rows(rows: list[list[Scalar]], ncols: int) -> tuple[list[list[Scalar]], list[int]]:
    """In-place RREF; returns (nonzero rows, pivot columns)."""
    nrows = len(rows)
    piv_r = 0
    pivots: list[int] = []
    for piv_c in range(ncols):
        sel = None
        for r in range(piv_r, nrows):
            if not rows[r][piv_c].is_zero():
                sel = r
                break
        if sel is None:
            continue
        rows[piv_r], rows[sel] = rows[sel], rows[piv_r]
        lead = rows[piv_r][piv_c]
        if not (lead.den == 1 and lead.num[0] == 1 and not any(lead.num[1:])):
            inv = lead.inverse()
            rows[piv_r] = [c * inv for c in rows[piv_r]]
        prow = rows[piv_r]
        for r in range(nrows):
            if r == piv_r:
                continue
            f = rows[r][piv_c]
            if f.is_zero():
                continue
            rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == nrows:
            break
    return rows[:piv_r], pivots


def rref(m: Matrix) -> tuple[int, Matrix, list[int]]:
    """Unique reduced row echelon form; returns (rank, reduced, pivot columns)."""
    rows = m.row_list()
    nz, pivots = _rref_rows(rows, m.cols)
    rank = len(nz)
    zero = Scalar.zero(nz[0][0].order) if nz else None
    padded = list(nz)
    if m.rows > rank:
        if zero is None:
            # all-zero matrix: reuse an existing entry's field if any
            zero = m.entries[0] - m.entries[0] if m.entries else Scalar.zero(1)
        padded += [[zero] * m.cols for _ in range(m.rows - rank)]
    return rank, Matrix.from_rows(padded, cols=m.cols), pivots


@dataclass(frozen=True)
class Subspace:
    """A subspace stored by its canonical RREF basis (rows)."""

    ambient_dim: int
    basis: tuple[tuple[Scalar, ...], ...]
    pivots: tuple[int, ...]

    @staticmethod
    def from_vectors(ambient_dim: int, vectors: list[list[Scalar]]) -> "Subspace":
        rows = [list(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise AmbientMismatch("vector length differs from ambient dimension")
        nz, pivots = _rref_rows(rows, ambient_dim)
        return Subspace(ambient_dim, tuple(tuple(r) for r in nz), tuple(pivots))

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, (), ())

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: list[Scalar]) -> tuple[list[Scalar], list[Scalar]]:
        """Express v against the basis: returns (coords, remainder)."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch("vector length differs from ambient dimension")
        rem = list(v)
        coords = []
        for brow, p in zip(self.basis, self.pivots):
            c = rem[p]
            coords.append(c)
            if not c.is_zero():
                rem = [a - c * b for a, b in zip(rem, brow)]
        return coords, rem

    def contains(self, v: list[Scalar]) -> bool:
        _, rem = self.reduce(v)
        return all(c.is_zero() for c in rem)


def membership(v: list[Scalar], s: Subspace) -> list[Scalar]:
    """Coordinates of v in the stored basis of s; raises NotMember otherwise."""
    coords, rem = s.reduce(v)
    if any(not c.is_zero() for c in rem):
        raise NotMember("vector is not in the subspace")
    return coords


def kernel(m: Matrix) -> Subspace:
    """Canonical basis of the right null space of m."""
    rank, red, pivots = rref(m)
    n = m.cols
    if n == 0:
        return Subspace.zero(0)
    order = m.entries[0].order if m.entries else 1
    one, zero = Scalar.one(order), Scalar.zero(order)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    vecs = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for r, p in enumerate(pivots):
            v[p] = -red.at(r, f)
        vecs.append(v)
    return Subspace.from_vectors(n, vecs)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection of two subspaces (Zassenhaus block elimination)."""
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    n = a.ambient_dim
    if a.dim == 0 or b.dim == 0:
        return Subspace.zero(n)
    order = a.basis[0][0].order
    zero = Scalar.zero(order)
    rows = []
    for v in a.basis:
        rows.append(list(v) + list(v))
    for v in b.basis:
        rows.append(list(v) + [zero] * n)
    nz, _ = _rref_rows(rows, 2 * n)
    vecs = [r[n:] for r in nz if all(c.is_zero() for c in r[:n])]
    return Subspace.from_vectors(n, vecs)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise AmbientMismatch("subspaces live in different ambient spaces")
    return Subspace.from_vectors(a.ambient_dim, [list(v) for v in a.basis] + [list(v) for v in b.basis])


def solve(m: Matrix, rhs: list[Scalar]) -> tuple[list[Scalar], Subspace]:
    """Particular solution of m x = rhs plus the homogeneous kernel.

    Raises NoSolution when rhs is outside the column space.
    """
    if len(rhs) != m.rows:
        raise LinAlgError("rhs length does not match row count")
    order = rhs[0].order if rhs else (m.entries[0].order if m.entries else 1)
    zero = Scalar.zero(order)
    rows = [m.row(i) + [rhs[i]] for i in range(m.rows)]
    nz, pivots = _rref_rows(rows, m.cols + 1)
    if m.cols in pivots:
        raise NoSolution("rhs not in column space")
    x = [zero] * m.cols
    for r, p in enumerate(pivots):
        x[p] = nz[r][m.cols]
    return x, kernel(m)


# ---------------------------------------------------------------------------
# Sparse echelon for large homogeneous constraint systems.

@dataclass
class SparseEchelon:
    """Incremental echelon of sparse rows (dict col -> Scalar).

    Pivot rows are normalized to leading coefficient 1 and kept reduced
    against each other lazily; `rref_rows` performs the final
    back-substitution.  Insertion order does not affect the row space.
    """

    ncols: int
    pivots: dict = dc_field(default_factory=dict)  # col -> row dict

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return row
            f = row[c]
            del row[c]
            for col, v in piv.items():
                if col == c:
                    continue
                cur = row.get(col)
                nv = (cur - f * v) if cur is not None else -(f * v)
                if nv.is_zero():
                    row.pop(col, None)
                else:
                    row[col] = nv
        return row

    def insert(self, row: dict) -> int | None:
        """Insert a row; returns its new pivot column, or None if dependent."""
        red = self.reduce(row)
        if not red:
            return None
        c = min(red)
        lead = red[c]
        inv = lead.inverse()
        self.pivots[c] = {col: v * inv for col, v in red.items()}
        return c

    def rref_rows(self) -> dict:
        """Back-substitute to full RREF; returns {pivot_col: row dict}."""
        cols = sorted(self.pivots, reverse=True)
        for c in cols:
            row = self.pivots[c]
            for c2 in [k for k in row if k != c and k in self.pivots]:
                f = row[c2]
                other = self.pivots[c2]
                del row[c2]
                for col, v in other.items():
                    if col == c2:
                        continue
                    cur = row.get(col)
                    nv = (cur - f * v) if cur is not None else -(f * v)
                    if nv.is_zero():
                        row.pop(col, None)
                    else:
                        row[col] = nv
        return self.pivots


def sparse_kernel(rows: list[dict], ncols: int, order: int) -> list[list[Scalar]]:
    """Canonical kernel basis (dense vectors) of a sparse homogeneous system."""
    ech = SparseEchelon(ncols)
    for r in rows:
        ech.insert(r)
    red = ech.rref_rows()
    one, zero = Scalar.one(order), Scalar.zero(order)
    pivcols = sorted(red)
    free = [c for c in range(ncols) if c not in red]
    out = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for p in pivcols:
            c = red[p].get(f)
            if c is not None:
                v[p] = -c
        out.append(v)
    return out
