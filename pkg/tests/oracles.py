"""
Independent oracles shared by the test suite.

Everything here is deliberately written by a different route than the
library: determinants by cofactor expansion, ranks by rational Gaussian
elimination after evaluating q, and the published band-matrix formulas
entered directly rather than built through the induction pipeline.
"""

from __future__ import annotations

import random
from fractions import Fraction

from qlefschetz.laurent import LaurentPoly, q
from qlefschetz.matrix import KClass, LaurentMatrix


def rand_poly(rng: random.Random, max_span: int = 3, max_coeff: int = 4) -> LaurentPoly:
    lo = rng.randint(-2, 2)
    return LaurentPoly(
        {lo + i: rng.randint(-max_coeff, max_coeff) for i in range(rng.randint(0, max_span))}
    )


def rand_matrix(rng: random.Random, rows: int, cols: int) -> LaurentMatrix:
    return LaurentMatrix.from_rows(
        [[rand_poly(rng) for _ in range(cols)] for _ in range(rows)]
    )


def rand_kclass(rng: random.Random, m: int) -> KClass:
    return KClass([rand_poly(rng) for _ in range(m)])


def cofactor_det(mat: LaurentMatrix) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row."""
    n = mat.rows
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return mat[0, 0]
    total = LaurentPoly.zero()
    for j in range(n):
        minor = LaurentMatrix.from_rows(
            [[mat[i, c] for c in range(n) if c != j] for i in range(1, n)]
        )
        term = mat[0, j] * cofactor_det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def evaluate_matrix(mat: LaurentMatrix, x: Fraction | int) -> list[list[Fraction]]:
    return [
        [mat[i, j].evaluate(Fraction(x)) for j in range(mat.cols)]
        for i in range(mat.rows)
    ]


def fraction_rank(rows: list[list[Fraction]]) -> int:
    work = [list(r) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(rank + 1, len(work)):
            f = work[i][c] / work[rank][c]
            for j in range(c, ncols):
                work[i][j] -= f * work[rank][j]
        rank += 1
    return rank


def fraction_det(rows: list[list[Fraction]]) -> Fraction:
    work = [list(r) for r in rows]
    n = len(work)
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            det = -det
        det *= work[c][c]
        for i in range(c + 1, n):
            f = work[i][c] / work[c][c]
            for j in range(c, n):
                work[i][j] -= f * work[c][j]
    return det


# -- published matrices, entered from their closed-form descriptions --------


def sign_of(n: int) -> int:
    return -1 if n % 2 else 1


def deformed_sphere_pairing(r: int, n: int, i: int, j: int) -> LaurentPoly:
    """
    Pairing of the i-th and j-th standard sphere in the cyclic A_r chain
    (1-based, indices mod r+1): diagonal 1 - (-1)^n q, one step forward
    (-1)^n q, one step back -1, otherwise 0.
    """
    s = sign_of(n)
    m = r + 1
    d = (j - i) % m
    if d == 0:
        return 1 - s * q
    if d == 1 % m:
        return s * q
    if d == (m - 1) % m:
        return LaurentPoly.coerce(-1)
    return LaurentPoly.zero()


def band_entry(a: int, b: int, n: int, i: int, j: int) -> LaurentPoly:
    """
    Entry (i, j), 1-based, of the published cyclic band matrix for the
    (a, b) hypersurface family, straight from its case list.
    """
    s = sign_of(n)
    m = a + b
    d = (i - j) % m
    if d == (-a) % m:
        return s * q
    if b + 1 <= d <= m - 1:
        return 1 + s * q
    if d == 0:
        return 1 - s * q
    if 1 <= d <= a - 1:
        return -1 - s * q
    if d == a % m:
        return LaurentPoly.coerce(-1)
    return LaurentPoly.zero()


def band_matrix(a: int, b: int, n: int) -> LaurentMatrix:
    m = a + b
    return LaurentMatrix.from_rows(
        [[band_entry(a, b, n, i, j) for j in range(1, m + 1)] for i in range(1, m + 1)]
    )


def classical_band_entry(a: int, b: int, n: int, i: int, j: int) -> int:
    """The q = 1 specialization of the band matrix, from its own case list."""
    s = sign_of(n)
    m = a + b
    d = (i - j) % m
    if d == (-a) % m:
        return s
    if b + 1 <= d <= m - 1:
        return 1 + s
    if d == 0:
        return 1 - s
    if 1 <= d <= a - 1:
        return -1 - s
    if d == a % m:
        return -1
    return 0


def mirror_p2_matrix(n: int) -> LaurentMatrix:
    """The displayed 3x3 q-intersection matrix of the Landau-Ginzburg
    mirror to the projective plane, entered verbatim."""
    s = sign_of(n)
    return LaurentMatrix.from_rows(
        [
            [1 - s * q, -s * q**-1 - 1 - s * q, 1 + s * q + q**2],
            [1 + s * q + q**2, 1 - s * q, -1 - s * q - q**2],
            [-s * q**-1 - 1 - s * q, 1 + s * q**-1 + s * q, 1 - s * q],
        ]
    )


def mirror_p2_det_factors(n: int) -> LaurentPoly:
    """The published determinant, by multiplying out its stated factors."""
    s = sign_of(n)
    return q**-2 * (q - 1) ** 2 * (q + 1) ** 2 * (q - s) * (q**2 + 1)


CLASSICAL_23_INTERSECTION = [
    [0, 2, 1, -1, -2],
    [-2, 0, 2, 1, -1],
    [-1, -2, 0, 2, 1],
    [1, -1, -2, 0, 2],
    [2, 1, -1, -2, 0],
]

CLASSICAL_23_SEIFERT = [
    [1, 2, 1, -1, -2],
    [0, 1, 2, 1, -1],
    [0, 0, 1, 2, 1],
    [0, 0, 0, 1, 2],
    [0, 0, 0, 0, 1],
]
