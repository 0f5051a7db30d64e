"""
Generators for the worked families of fibration data.

Everything is produced by one pipeline, run one dimension down: start from
the sphere chain in a type-A Milnor fibre (its equivariant Mukai pairing
matrix and the K-theory classes of the standard spheres), express the
vanishing cycles of the total space as classes in that fibre, either
directly or as words of Dehn twists applied to the spheres, and pair those
classes to obtain the total space's intersection matrix.

Coordinate convention for the sphere chain with m = r + 1 basis objects:
the k-th sphere is the cone of the degree-zero morphism from the k-th
object to its successor, so its class is e_(k+1) - e_k; the last sphere
closes the cycle with a grading shift, giving e_1 - e_(r+1). With this
convention the pairings of the spheres reproduce the published cyclic
tridiagonal form verbatim.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .laurent import LaurentPoly
from .lefschetz import LefschetzAlgebra
from .matrix import KClass, LaurentMatrix, gram_pairing
from .moves import TwistWord, apply_twist_word

ClassSpec = Union[KClass, tuple[TwistWord, KClass]]


@dataclass(frozen=True)
class MilnorData:
    """
    The fibre-level input to the induction: the Mukai pairing matrix of the
    r + 1 thimble objects of a type-A_r Milnor fibre, together with the
    classes of its r + 1 standard matching spheres. `dim` is the dimension
    parameter n of the ambient family; the spheres themselves live in a
    space of parity n - 1.
    """

    chain_length: int
    dim: int
    mukai: LaurentMatrix
    sphere_classes: tuple[KClass, ...]

    @property
    def size(self) -> int:
        return self.chain_length + 1


def milnor_ar(r: int, n: int) -> MilnorData:
    """
    The type-A_r data: an (r+1) x (r+1) unitriangular Mukai matrix whose
    strict upper entries are all 1 + (-1)^n q, and the cyclic chain of
    sphere classes e_(k+1) - e_k, closed up by e_1 - e_(r+1).
    """
    if r < 1:
        raise ValueError(f"the sphere chain needs r >= 1, got {r}")
    m = r + 1
    upper = 1 + LaurentPoly.monomial(-1 if n % 2 else 1, 1)
    mukai = LaurentMatrix.from_rows(
        [[1 if i == j else upper if i < j else 0 for j in range(m)] for i in range(m)]
    )
    spheres = [
        KClass.basis_vector(m, k + 1) - KClass.basis_vector(m, k) for k in range(r)
    ]
    spheres.append(KClass.basis_vector(m, 0) - KClass.basis_vector(m, r))
    return MilnorData(r, n, mukai, tuple(spheres))


def induced_total_space(
    fibre: MilnorData | LefschetzAlgebra,
    n: int,
    class_specs: Sequence[ClassSpec],
) -> LefschetzAlgebra:
    """
    Run one step of the dimensional induction: resolve each class spec to
    a K-theory class of the fibre (twist words act with the fibre's parity
    n - 1), pair the resolved classes, and validate the result as the
    intersection matrix of a parity-n total space. An inconsistent result
    (for instance a wrongly ordered collection) surfaces as a
    ConsistencyError from the validation.
    """
    if isinstance(fibre, MilnorData):
        gram = fibre.mukai
        generators = list(fibre.sphere_classes)
    else:
        gram = fibre.seifert
        generators = [KClass.basis_vector(fibre.size, k) for k in range(fibre.size)]

    resolved: list[KClass] = []
    for spec in class_specs:
        if isinstance(spec, KClass):
            resolved.append(spec)
        else:
            word, seed = spec
            resolved.append(apply_twist_word(n - 1, gram, generators, word, seed))

    pairings = LaurentMatrix.from_rows(
        [[gram_pairing(gram, ci, cj) for cj in resolved] for ci in resolved]
    )
    return LefschetzAlgebra.from_intersection(n, pairings)


def xab(a: int, b: int, n: int) -> LefschetzAlgebra:
    """
    The hypersurface family indexed by coprime 0 < a < b: its fibre is the
    type-A chain with a + b spheres, and the i-th vanishing cycle is the
    window of width a starting at the i-th sphere, cyclically. The result
    is the published cyclic band matrix.
    """
    if not 0 < a < b:
        raise ValueError(f"need 0 < a < b, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"({a}, {b}) must be coprime")
    if n < 3:
        raise ValueError(f"the induction needs n >= 3, got {n}")
    fibre = milnor_ar(a + b - 1, n)
    m = a + b
    windows = [
        sum(
            (fibre.sphere_classes[(i + s) % m] for s in range(1, a)),
            fibre.sphere_classes[i],
        )
        for i in range(m)
    ]
    return induced_total_space(fibre, n, windows)


MIRROR_P2_WORDS: tuple[tuple[str, int], ...] = (
    ("t2", 0),
    ("t2^-1 t1", 3),
    ("t3 t1", 1),
)


def mirror_p2(n: int) -> LefschetzAlgebra:
    """
    The fibration on the mirror of the projective plane, built over the
    type-A_3 fibre in two independent ways: from the closed-form K-theory
    expressions of its three vanishing cycles, and by applying the twist
    words read off from the vanishing paths. The two constructions must
    agree exactly; their pairing matrix has nonzero determinant, so this
    family has no kernel classes at all.
    """
    if n < 3:
        raise ValueError(f"the induction needs n >= 3, got {n}")
    fibre = milnor_ar(3, n)
    s = -1 if n % 2 else 1
    sphere = fibre.sphere_classes
    direct = [
        sphere[0] + sphere[1],
        sphere[0] + sphere[1].scale(LaurentPoly.monomial(-s, -1)) + sphere[3],
        sphere[0].scale(LaurentPoly.monomial(-s, 1)) + sphere[1] + sphere[2],
    ]
    twisted = [
        apply_twist_word(
            n - 1, fibre.mukai, list(sphere), TwistWord.parse(word), sphere[seed]
        )
        for word, seed in MIRROR_P2_WORDS
    ]
    if direct != twisted:
        raise AssertionError(
            "the twist-word construction disagrees with the closed-form classes"
        )
    return induced_total_space(fibre, n, direct)
