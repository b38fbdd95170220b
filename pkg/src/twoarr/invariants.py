"""Invariants that separate arrangements sharing an intersection lattice.

The kappa pairing multiplies two degree-2 relation-ideal elements into
degree 4; its rank is invariant under graded algebra isomorphism. For
arrangements in R^4 the degree-4 slice is one-dimensional, so kappa is an
honest symmetric bilinear form. Pairwise linking signs of the great
circles cut out on the unit 3-sphere are determinant signs of stacked
forms; triple products of those signs do not depend on the member
orientations at all.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .arrangement import Arrangement
from .exterior import ExtElement, degree_span_rank, monomials
from .linalg import Matrix, det_sign, rank
from .matroid import SizeMismatch, betti_vector, same_labeled_matroid
from .presentation import full_presentation, ideal_rank_profile

VERDICT_DISTINGUISHED = "DISTINGUISHED"
VERDICT_UNRESOLVED = "OTHERWISE_UNRESOLVED"


class DimensionNot4(ValueError):
    """Linking data is defined only for arrangements in R^4."""


GramVector = tuple[int, ...]


@dataclass(frozen=True)
class KappaForm:
    """Gram data of the multiplication pairing on the degree-2 relation slice.

    gram[i][j] is the coefficient vector of basis_i ^ basis_j over the
    degree-4 monomials. When n = 4 that slice is one-dimensional and
    `scalar_gram` exposes the integer matrix.
    """

    n: int
    basis: tuple[ExtElement, ...]
    gram: tuple[tuple[GramVector, ...], ...]

    @property
    def is_scalar(self) -> bool:
        return self.n == 4

    def scalar_gram(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_scalar:
            raise ValueError("scalar view exists only for n = 4")
        return tuple(tuple(v[0] for v in row) for row in self.gram)


def gram_of_basis(basis: Sequence[ExtElement], n: int) -> tuple[tuple[GramVector, ...], ...]:
    mons4 = monomials(n, 4)
    return tuple(
        tuple(bi.wedge(bj).coeff_vector(mons4) for bj in basis) for bi in basis
    )


def kappa(arr: Arrangement) -> KappaForm:
    """Kappa form of an arrangement, over the echelon basis of the degree-2 slice."""
    pres = full_presentation(arr)
    _, basis = degree_span_rank(pres.elements(), 2, arr.n)
    return KappaForm(arr.n, tuple(basis), gram_of_basis(basis, arr.n))


def kappa_rank(form: KappaForm) -> int:
    """Rank over the rationals of the flattened Gram data."""
    if not form.basis:
        return 0
    rows = [tuple(itertools.chain.from_iterable(row)) for row in form.gram]
    if not rows[0]:
        return 0
    return rank(Matrix.from_rows(rows))


def pairwise_linking(arr: Arrangement) -> tuple[tuple[int, ...], ...]:
    """Linking signs of the great circles: det sign of the four stacked forms.

    Symmetric n x n table of +-1 with an unused zero diagonal; ambient
    orientation is the coordinate order (x1, y1, ..., xd, yd).
    """
    if arr.dim != 4:
        raise DimensionNot4(f"dim is {arr.dim}")
    table = [[0] * arr.n for _ in range(arr.n)]
    for a in range(1, arr.n + 1):
        for b in range(a + 1, arr.n + 1):
            pa, pb = arr.pair(a), arr.pair(b)
            s = det_sign(
                Matrix.from_rows(
                    [pa.first.coeffs, pa.second.coeffs, pb.first.coeffs, pb.second.coeffs]
                )
            )
            table[a - 1][b - 1] = table[b - 1][a - 1] = s
    return tuple(tuple(row) for row in table)


def triple_coefficients(arr: Arrangement) -> dict[tuple[int, int, int], int]:
    """Orientation-independent +-1 per triple: product of its three pairwise signs."""
    if arr.dim != 4:
        raise DimensionNot4(f"dim is {arr.dim}")
    if arr.n < 3:
        raise ValueError("need at least three subspaces")
    lk = pairwise_linking(arr)
    return {
        (a, b, c): lk[a - 1][b - 1] * lk[a - 1][c - 1] * lk[b - 1][c - 1]
        for a, b, c in itertools.combinations(range(1, arr.n + 1), 3)
    }


@dataclass(frozen=True)
class ComparisonReport:
    matroids_equal: bool
    betti: tuple[tuple[int, ...], tuple[int, ...]]
    ideal_ranks: tuple[tuple[int, ...], tuple[int, ...]]
    kappa_ranks: tuple[int, int]
    triple_multisets: tuple[tuple[int, ...], tuple[int, ...]] | None
    differing: tuple[str, ...]

    @property
    def verdict(self) -> str:
        return VERDICT_DISTINGUISHED if self.differing else VERDICT_UNRESOLVED


def compare(
    a1: Arrangement, a2: Arrangement, *, permutation_search: bool = False
) -> ComparisonReport:
    """Compare every computed invariant of two arrangements.

    The verdict is DISTINGUISHED when any invariant differs, and
    OTHERWISE_UNRESOLVED when all agree; agreement of these invariants
    never establishes that the complements are equivalent.
    """
    if a1.n != a2.n:
        raise SizeMismatch(f"{a1.n} vs {a2.n} subspaces")
    differing: list[str] = []
    matroids_equal = same_labeled_matroid(a1, a2, up_to_relabeling=permutation_search)
    if not matroids_equal:
        differing.append("matroid")
    betti = (betti_vector(a1), betti_vector(a2))
    if betti[0] != betti[1]:
        differing.append("betti")
    profiles = (
        ideal_rank_profile(full_presentation(a1)),
        ideal_rank_profile(full_presentation(a2)),
    )
    if profiles[0] != profiles[1]:
        differing.append("ideal-ranks")
    kranks = (kappa_rank(kappa(a1)), kappa_rank(kappa(a2)))
    if kranks[0] != kranks[1]:
        differing.append("kappa-rank")
    triples = None
    if a1.dim == 4 and a2.dim == 4 and a1.n >= 3 and a2.n >= 3:
        triples = (
            tuple(sorted(triple_coefficients(a1).values())),
            tuple(sorted(triple_coefficients(a2).values())),
        )
        if triples[0] != triples[1]:
            differing.append("triple-multiset")
    return ComparisonReport(
        matroids_equal, betti, profiles, kranks, triples, tuple(differing)
    )
