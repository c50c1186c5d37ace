"""Dense exact linear algebra over a session field.

Everything is plain Gaussian elimination on lists of field scalars; at the
scales this engine meets (a few thousand entries) that is faster to trust
than to optimize.  Pivots are the first nonzero entry in column order, so
echelon forms, ranks and kernel bases are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import check_same_field


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix over a fixed session field."""

    field: object
    nrows: int
    ncols: int
    entries: tuple

    @classmethod
    def from_rows(cls, field, rows):
        data = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        nrows = len(data)
        ncols = len(data[0]) if nrows else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged rows")
        return cls(field, nrows, ncols, data)

    @classmethod
    def zero(cls, field, nrows, ncols):
        z = field.zero
        return cls(field, nrows, ncols, tuple((z,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.ncols, self.nrows,
                      tuple(tuple(self.entries[i][j] for i in range(self.nrows))
                            for j in range(self.ncols)))

    def mul(self, other: "Matrix") -> "Matrix":
        check_same_field(self.field, other.field)
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        F = self.field
        out = []
        ot = other.transpose().entries
        for r in self.entries:
            row = []
            for c in ot:
                acc = F.zero
                for a, b in zip(r, c):
                    if not F.is_zero(a) and not F.is_zero(b):
                        acc = F.add(acc, F.mul(a, b))
                row.append(acc)
            out.append(tuple(row))
        return Matrix(F, self.nrows, other.ncols, tuple(out))

    def apply(self, vec):
        """Matrix times column vector."""
        F = self.field
        if len(vec) != self.ncols:
            raise ValueError("dimension mismatch")
        out = []
        for r in self.entries:
            acc = F.zero
            for a, b in zip(r, vec):
                if not F.is_zero(a) and not F.is_zero(b):
                    acc = F.add(acc, F.mul(a, b))
            out.append(acc)
        return tuple(out)

    def rref(self):
        """Reduced row echelon form; returns (rows, pivot_columns)."""
        F = self.field
        rows = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.ncols):
            piv = None
            for i in range(r, self.nrows):
                if not F.is_zero(rows[i][c]):
                    piv = i
                    break
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = F.inv(rows[r][c])
            rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(self.nrows):
                if i != r and not F.is_zero(rows[i][c]):
                    f = rows[i][c]
                    rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == self.nrows:
                break
        return [tuple(row) for row in rows], tuple(pivots)

    def rank(self) -> int:
        _, pivots = self.rref()
        return len(pivots)

    def kernel_basis(self):
        """Basis of {v : Av = 0}, one vector per free column, echelon-normalized.

        Vector j has a 1 in its free coordinate and 0 in every other free
        coordinate, so the result is deterministic and reduced.
        """
        F = self.field
        rows, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.ncols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [F.zero] * self.ncols
            v[fc] = F.one
            for r, pc in enumerate(pivots):
                v[pc] = F.neg(rows[r][fc])
            basis.append(tuple(v))
        return basis

    def solve(self, b):
        """One solution of Ax = b, or None when inconsistent.

        Consistency is decided exactly by the rank of the augmented matrix;
        free coordinates of the particular solution are set to zero.
        """
        F = self.field
        if len(b) != self.nrows:
            raise ValueError("dimension mismatch")
        bb = [F.coerce(x) for x in b]
        aug = Matrix(F, self.nrows, self.ncols + 1,
                     tuple(tuple(r) + (x,) for r, x in zip(self.entries, bb)))
        rows, pivots = aug.rref()
        if self.ncols in pivots:
            return None
        x = [F.zero] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = rows[r][self.ncols]
        return tuple(x)

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("not square")
        F = self.field
        n = self.nrows
        aug = Matrix(F, n, 2 * n,
                     tuple(tuple(r) + tuple(F.one if i == j else F.zero for j in range(n))
                           for i, r in enumerate(self.entries)))
        rows, pivots = aug.rref()
        if tuple(pivots) != tuple(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(F, n, n, tuple(tuple(row[n:]) for row in rows))

    def to_json(self):
        return [[self.field.to_str(x) for x in row] for row in self.entries]

    def __repr__(self):
        body = "; ".join(" ".join(self.field.to_str(x) for x in row) for row in self.entries)
        return f"Matrix[{body}]"


class RowSpan:
    """Incrementally maintained reduced row space.

    Rows are kept fully reduced with pivots scaled to 1 and sorted by pivot,
    so `reduce` residues are canonical.  With ``pivot_from_right`` pivots are
    taken at the *last* nonzero coordinate (used where the complement of a
    span must consist of the lexicographically smallest coordinates).
    """

    def __init__(self, field, width: int, pivot_from_right: bool = False):
        self.field = field
        self.width = width
        self.rows = []  # list of (pivot_index, row list)
        self.from_right = pivot_from_right

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _pivot(self, vec):
        F = self.field
        rng = range(self.width - 1, -1, -1) if self.from_right else range(self.width)
        for i in rng:
            if not F.is_zero(vec[i]):
                return i
        return None

    def reduce(self, vec):
        """Residue of vec modulo the span (a fresh list)."""
        F = self.field
        v = list(vec)
        for p, row in self.rows:
            c = v[p]
            if not F.is_zero(c):
                for j in range(self.width):
                    if not F.is_zero(row[j]):
                        v[j] = F.sub(v[j], F.mul(c, row[j]))
        return v

    def contains(self, vec) -> bool:
        F = self.field
        return all(F.is_zero(x) for x in self.reduce(vec))

    def add(self, vec) -> bool:
        """Insert vec; True when the span grew."""
        F = self.field
        v = self.reduce(vec)
        p = self._pivot(v)
        if p is None:
            return False
        inv = F.inv(v[p])
        v = [F.mul(inv, x) for x in v]
        for q, row in self.rows:
            c = row[p]
            if not F.is_zero(c):
                for j in range(self.width):
                    if not F.is_zero(v[j]):
                        row[j] = F.sub(row[j], F.mul(c, v[j]))
        self.rows.append((p, v))
        self.rows.sort(key=lambda t: t[0])
        return True

    def express(self, vec):
        """Coefficients of vec over the stored rows, or None if outside.

        Row order follows `self.rows` (sorted by pivot).
        """
        F = self.field
        v = list(vec)
        coeffs = []
        for p, row in self.rows:
            c = v[p]
            coeffs.append(c)
            if not F.is_zero(c):
                for j in range(self.width):
                    if not F.is_zero(row[j]):
                        v[j] = F.sub(v[j], F.mul(c, row[j]))
        if any(not F.is_zero(x) for x in v):
            return None
        return coeffs

    def basis_rows(self):
        return [tuple(row) for _, row in self.rows]


def extend_independent(span: RowSpan, candidates):
    """Greedily pick candidates that enlarge `span`; returns the picked ones.

    The span is mutated.  Deterministic: candidates are tried in the order
    given and the earliest independent ones win.
    """
    picked = []
    for v in candidates:
        if span.add(v):
            picked.append(tuple(v))
    return picked
