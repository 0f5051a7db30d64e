"""
A tour of the coefficient ring Z[q, q^-1] and the exact linear algebra.

Run with: python3 demos/01_ring_and_matrices.py
"""

from qlefschetz import LaurentMatrix, LaurentPoly, q

# Laurent polynomials support the usual ring operations, mixed freely with
# ints. Everything is exact: coefficients are Python ints.
p = (1 - q) * (1 - q.star())
print("(1 - q)(1 - 1/q)          =", p)
print("same thing, refactored    =", -(q**-1) * (1 - q) ** 2)

# The star involution q -> 1/q is the hermitian conjugation of the theory.
print("star(2q - 1/q + 3)        =", (2 * q - q**-1 + 3).star())

# Specializations used by the obstruction certificates.
print("value of 1 - q at q = 1   =", (1 - q).eval_at_one())
print("derivative there          =", (1 - q).derivative_at_one())
print("order of vanishing of p   =", p.vanishing_order_at_one())

# Matrices are dense, immutable, and eliminated fraction-free, so
# determinants, ranks and nullspaces come out exactly.
m = LaurentMatrix.from_rows(
    [
        [1 - q, 1 + q, q],
        [-1 - q, 1 - q, 1 + q],
        [-q.star(), -1 - q.star(), 1 - q],
    ]
)
print("\na 3x3 matrix over Z[q, 1/q]:")
print(m)
print("det  =", m.det())
print("rank =", m.rank())

# Unitriangular matrices invert exactly over the ring itself.
u = LaurentMatrix.from_rows([[1, 1 + q, -q], [0, 1, 2 - q], [0, 0, 1]])
print("\nunitriangular inverse check:", u @ u.unitriangular_inverse() == LaurentMatrix.identity(3))

# Nullspace vectors come back primitive and canonically normalized:
# common factors removed, first nonzero entry anchored at exponent 0.
scaled = LaurentMatrix.from_rows([[1 - q, q - 1], [q - q**2, q**2 - q]])
print("nullspace of a rank-one matrix:", [str(v) for v in scaled.nullspace()])

# Serialization uses decimal-string coefficients, immune to 64-bit limits.
big = LaurentPoly({0: 10**25, 3: -(10**30)})
print("\nwire form of a huge polynomial:", big.to_pairs())
