"""
Lagrangian sphere obstructions and integer certificates.

Any closed Lagrangian brane's class lies in the kernel of the intersection
matrix, and a rational homology sphere would need self-pairing exactly
1 + (-1)^n q. The kernel generators of the band family make that equation
unsolvable, ruling such spheres out and bounding Betti numbers of whatever
Lagrangians remain.

Run with: python3 demos/03_obstruction_reports.py
"""

from qlefschetz import (
    KClass,
    LaurentMatrix,
    LefschetzAlgebra,
    betti_lower_bound,
    independence_certificate,
    kernel_classes,
    nonzero_primitive_certificate,
    q,
    self_pairing,
    sphere_test,
    xab,
)

for a, b in ((2, 3), (3, 4)):
    for n in (3, 4):
        alg = xab(a, b, n)
        (h,) = kernel_classes(alg)
        value = self_pairing(alg, h)
        result = sphere_test(alg)
        print(f"({a}, {b}) family, n = {n}:")
        print(f"  kernel generator      {h}")
        print(f"  self-pairing          {value}")
        print(f"  verdict               {result.verdict.value} ({result.branch})")
        print(f"  Betti lower bound     {betti_lower_bound(value)}")

# A positive control: a rank-one kernel whose generator is exactly
# spherical, so the test must find a witness.
control = LefschetzAlgebra.from_seifert(3, LaurentMatrix.from_rows([[1, 1 + q], [0, 1]]))
result = sphere_test(control)
print("\npositive control:", result.verdict.value, "with witness", result.witness)

# Certificates from derivative-at-one arguments: a spherical self-pairing
# 1 - q certifies a nonzero and primitive classical class.
print("\ncertificate for 1 - q:", nonzero_primitive_certificate(1 - q))
print("certificate for -(1-q)^2/q:", nonzero_primitive_certificate(-(q**-1) * (1 - q) ** 2))

# Orthogonal spherical families are independent; a duplicated class breaks
# the hypotheses and is rejected loudly.
block = LaurentMatrix.from_rows(
    [[1, 1 + q, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1 + q], [0, 0, 0, 1]]
)
family_algebra = LefschetzAlgebra.from_seifert(3, block)
family = [KClass([1, -1, 0, 0]), KClass([0, 0, 1, -1])]
print("\nindependence certificate:", independence_certificate(family_algebra, family))
try:
    independence_certificate(family_algebra, [family[0], family[0]])
except Exception as exc:
    print("duplicated class rejected:", exc)
