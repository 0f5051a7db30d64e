"""
Exact linear algebra over Z[q, q^-1].

Matrices are dense and immutable. Determinants, ranks and nullspaces are
computed by fraction-free elimination in the Bareiss style: every entry of
every intermediate matrix is a minor of the input, divisions are exact, and
no rational-function arithmetic ever appears. Nullspace vectors are returned
as primitive K-theory classes: denominators cleared, the gcd of the entries
divided out, and the remaining unit ambiguity (+-q^k) fixed canonically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .laurent import IntoPoly, LaurentPoly, gcd_many

EntryLike = Union[int, LaurentPoly]


@dataclass(frozen=True)
class KClass:
    """
    A vector in Z[q, q^-1]^m: the equivariant K-theory class of a brane or
    vanishing cycle, in coordinates given by a basis of Lefschetz thimbles.
    """

    coords: tuple[LaurentPoly, ...]

    def __init__(self, coords: Iterable[EntryLike]):
        object.__setattr__(
            self, "coords", tuple(LaurentPoly.coerce(c) for c in coords)
        )

    @classmethod
    def zero(cls, m: int) -> KClass:
        return cls([0] * m)

    @classmethod
    def basis_vector(cls, m: int, k: int) -> KClass:
        if not 0 <= k < m:
            raise IndexError(f"basis index {k} out of range for size {m}")
        return cls([1 if i == k else 0 for i in range(m)])

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> LaurentPoly:
        return self.coords[i]

    def __add__(self, other: KClass) -> KClass:
        if len(self) != len(other):
            raise ValueError("cannot add classes of different lengths")
        return KClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: KClass) -> KClass:
        return self + (-other)

    def __neg__(self) -> KClass:
        return KClass(-c for c in self.coords)

    def scale(self, f: IntoPoly) -> KClass:
        f = LaurentPoly.coerce(f)
        return KClass(f * c for c in self.coords)

    __rmul__ = scale

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def eval_at_one(self) -> tuple[int, ...]:
        return tuple(c.eval_at_one() for c in self.coords)

    def canonical_primitive(self) -> KClass:
        """
        The canonical representative of this class up to Q(q)-scaling:
        divide by the gcd of the entries, then shift by the monomial that
        gives the first nonzero entry valuation 0, with a positive
        coefficient there. Used to pin down nullspace generators like
        (1, ..., 1) uniquely.
        """
        if self.is_zero():
            return self
        g = gcd_many(c for c in self.coords if not c.is_zero())
        coords = [c.exact_div(g) for c in self.coords]
        first = next(c for c in coords if not c.is_zero())
        val = first.valuation()
        unit = LaurentPoly.monomial(1 if first[val] > 0 else -1, -val)
        return KClass(unit * c for c in coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class LaurentMatrix:
    """A rows x cols matrix over Z[q, q^-1], stored row-major."""

    rows: int
    cols: int
    entries: tuple[LaurentPoly, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[EntryLike]]) -> LaurentMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(
            nrows, ncols, tuple(LaurentPoly.coerce(x) for row in rows for x in row)
        )

    @classmethod
    def identity(cls, m: int) -> LaurentMatrix:
        return cls.from_rows([[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> LaurentMatrix:
        return cls(rows, cols, tuple(LaurentPoly.zero() for _ in range(rows * cols)))

    @classmethod
    def diagonal(cls, values: Sequence[EntryLike]) -> LaurentMatrix:
        m = len(values)
        return cls.from_rows(
            [[values[i] if i == j else 0 for j in range(m)] for i in range(m)]
        )

    # -- access -------------------------------------------------------------

    def __getitem__(self, key: tuple[int, int]) -> LaurentPoly:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {key} out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[LaurentPoly, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[LaurentPoly]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_unitriangular(self) -> bool:
        """Upper-triangular with every diagonal entry equal to 1."""
        if not self.is_square():
            return False
        for i in range(self.rows):
            if self[i, i] != 1:
                return False
            for j in range(i):
                if not self[i, j].is_zero():
                    return False
        return True

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: LaurentMatrix) -> LaurentMatrix:
        self._require_same_shape(other)
        return LaurentMatrix(
            self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries))
        )

    def __sub__(self, other: LaurentMatrix) -> LaurentMatrix:
        self._require_same_shape(other)
        return LaurentMatrix(
            self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries))
        )

    def scale(self, f: IntoPoly) -> LaurentMatrix:
        f = LaurentPoly.coerce(f)
        return LaurentMatrix(self.rows, self.cols, tuple(f * a for a in self.entries))

    def __matmul__(self, other: LaurentMatrix | KClass):
        if isinstance(other, KClass):
            return self.apply(other)
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out: list[LaurentPoly] = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = LaurentPoly.zero()
                for k in range(self.cols):
                    acc = acc + self[i, k] * other[k, j]
                out.append(acc)
        return LaurentMatrix(self.rows, other.cols, tuple(out))

    def apply(self, v: KClass) -> KClass:
        if self.cols != len(v):
            raise ValueError(f"cannot apply {self.rows}x{self.cols} to length {len(v)}")
        return KClass(
            sum((self[i, k] * v[k] for k in range(self.cols)), LaurentPoly.zero())
            for i in range(self.rows)
        )

    def transpose(self) -> LaurentMatrix:
        return LaurentMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def star_transpose(self) -> LaurentMatrix:
        """Transpose combined with q -> q^-1 on every entry."""
        return LaurentMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j].star() for j in range(self.cols) for i in range(self.rows)),
        )

    def star_entries(self) -> LaurentMatrix:
        return LaurentMatrix(self.rows, self.cols, tuple(a.star() for a in self.entries))

    def eval_at_one(self) -> list[list[int]]:
        return [[self[i, j].eval_at_one() for j in range(self.cols)] for i in range(self.rows)]

    def _require_same_shape(self, other: LaurentMatrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shapes differ")

    # -- elimination ----------------------------------------------------------

    def det(self) -> LaurentPoly:
        """
        Exact determinant by fraction-free elimination. An empty 0x0 matrix
        has determinant 1.
        """
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        work, pivot_cols, sign = _bareiss(self.to_rows())
        if len(pivot_cols) < self.rows:
            return LaurentPoly.zero()
        last = work[self.rows - 1][pivot_cols[-1]] if self.rows else LaurentPoly.one()
        return -last if sign < 0 else last

    def rank(self) -> int:
        """Rank over the fraction field Q(q)."""
        _, pivot_cols, _ = _bareiss(self.to_rows())
        return len(pivot_cols)

    def nullspace(self) -> list[KClass]:
        """
        A basis of the right nullspace over Q(q), one canonical primitive
        vector per free column, each satisfying self @ v == 0 exactly.
        """
        work, pivot_cols, _ = _bareiss(self.to_rows())
        pivot_set = set(pivot_cols)
        basis: list[KClass] = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            coords = [LaurentPoly.zero()] * self.cols
            coords[free] = LaurentPoly.one()
            # Back-substitute through the pivot rows, scaling the partial
            # solution instead of introducing fractions.
            for r in range(len(pivot_cols) - 1, -1, -1):
                p = pivot_cols[r]
                if p > free:
                    continue
                t = LaurentPoly.zero()
                for c in range(p + 1, self.cols):
                    if not coords[c].is_zero():
                        t = t + work[r][c] * coords[c]
                pivot = work[r][p]
                coords = [pivot * c for c in coords]
                coords[p] = -t
            basis.append(KClass(coords).canonical_primitive())
        return basis

    def unitriangular_inverse(self) -> LaurentMatrix:
        """
        Inverse of an upper-triangular matrix with unit diagonal; exists
        over Z[q, q^-1] and is computed by back-substitution.
        """
        if not self.is_unitriangular():
            raise ValueError("matrix is not upper-triangular with unit diagonal")
        m = self.rows
        inv = [[LaurentPoly.zero() for _ in range(m)] for _ in range(m)]
        for j in range(m):
            inv[j][j] = LaurentPoly.one()
            for i in range(j - 1, -1, -1):
                acc = LaurentPoly.zero()
                for k in range(i + 1, j + 1):
                    acc = acc + self[i, k] * inv[k][j]
                inv[i][j] = -acc
        return LaurentMatrix.from_rows(inv)

    def __str__(self) -> str:
        cells = [[str(self[i, j]) for j in range(self.cols)] for i in range(self.rows)]
        widths = [
            max((len(cells[i][j]) for i in range(self.rows)), default=0)
            for j in range(self.cols)
        ]
        return "\n".join(
            "[ " + "  ".join(cells[i][j].rjust(widths[j]) for j in range(self.cols)) + " ]"
            for i in range(self.rows)
        )


def gram_pairing(gram: LaurentMatrix, h0: KClass, h1: KClass) -> LaurentPoly:
    """
    The sesquilinear pairing star(h0)^T gram h1. It is star-linear in the
    first slot and linear in the second, so scaling by f, g multiplies the
    value by star(f) g.
    """
    if len(h0) != gram.rows or len(h1) != gram.cols:
        raise ValueError(
            f"class lengths {len(h0)}, {len(h1)} do not fit a "
            f"{gram.rows}x{gram.cols} pairing matrix"
        )
    acc = LaurentPoly.zero()
    for i in range(gram.rows):
        if h0[i].is_zero():
            continue
        left = h0[i].star()
        for j in range(gram.cols):
            if h1[j].is_zero():
                continue
            acc = acc + left * gram[i, j] * h1[j]
    return acc


def _bareiss(
    work: list[list[LaurentPoly]],
) -> tuple[list[list[LaurentPoly]], list[int], int]:
    """
    Fraction-free row echelon form, in place. Returns the reduced rows, the
    pivot columns in order, and the sign accumulated by row swaps. Pivots
    are chosen among the candidate rows by smallest (span, content), ties
    by row order, to limit coefficient growth deterministically.
    """
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivot_cols: list[int] = []
    sign = 1
    prev = LaurentPoly.one()
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        best = None
        for i in range(r, nrows):
            entry = work[i][c]
            if entry.is_zero():
                continue
            key = (entry.span(), entry.content(), i)
            if best is None or key < best[0]:
                best = (key, i)
        if best is None:
            continue
        i = best[1]
        if i != r:
            work[r], work[i] = work[i], work[r]
            sign = -sign
        pivot = work[r][c]
        for i in range(r + 1, nrows):
            head = work[i][c]
            for j in range(c + 1, ncols):
                work[i][j] = (work[i][j] * pivot - head * work[r][j]).exact_div(prev)
            work[i][c] = LaurentPoly.zero()
        prev = pivot
        pivot_cols.append(c)
        r += 1
    return work, pivot_cols, sign
