"""Integer exterior algebra on generators e_1 .. e_n.

Monomials are strictly increasing index tuples; elements are integer
combinations of monomials. Ranks of graded spans are taken over the
rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, rref

Monomial = tuple[int, ...]


def normalize(indices: Sequence[int]) -> tuple[Monomial, int]:
    """Sort generator indices; return (monomial, sign of the sorting permutation).

    The sign is 0 when an index repeats.
    """
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


def monomials(n: int, p: int) -> tuple[Monomial, ...]:
    """All degree-p monomials over generators 1..n, in lexicographic order."""
    return tuple(itertools.combinations(range(1, n + 1), p))


def _mon_str(mon: Monomial) -> str:
    if not mon:
        return "1"
    if mon[-1] <= 9:
        return "e" + "".join(str(i) for i in mon)
    return "e(" + ",".join(str(i) for i in mon) + ")"


@dataclass(frozen=True)
class ExtElement:
    """An integer combination of wedge monomials, terms in graded-lex order."""

    terms: tuple[tuple[Monomial, int], ...]

    @staticmethod
    def from_terms(
        terms: Mapping[Monomial, int] | Iterable[tuple[Sequence[int], int]],
    ) -> "ExtElement":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, int] = {}
        for mon, coeff in items:
            mon2, sign = normalize(tuple(mon))
            if sign == 0 or coeff == 0:
                continue
            acc[mon2] = acc.get(mon2, 0) + sign * coeff
        kept = [(m, c) for m, c in acc.items() if c]
        kept.sort(key=lambda t: (len(t[0]), t[0]))
        return ExtElement(tuple(kept))

    @staticmethod
    def zero() -> "ExtElement":
        return ExtElement(())

    @staticmethod
    def monomial(indices: Sequence[int], coeff: int = 1) -> "ExtElement":
        return ExtElement.from_terms([(tuple(indices), coeff)])

    @staticmethod
    def generator(a: int) -> "ExtElement":
        return ExtElement.monomial((a,))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | None:
        """Common degree of all terms; None for the zero or a mixed element."""
        degs = {len(m) for m, _ in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def coefficient(self, mon: Sequence[int]) -> int:
        key = tuple(mon)
        for m, c in self.terms:
            if m == key:
                return c
        return 0

    def coeff_vector(self, mons: Sequence[Monomial]) -> tuple[int, ...]:
        lookup = dict(self.terms)
        return tuple(lookup.get(m, 0) for m in mons)

    def scale(self, k: int) -> "ExtElement":
        if k == 0:
            return ExtElement.zero()
        return ExtElement(tuple((m, k * c) for m, c in self.terms))

    def __neg__(self) -> "ExtElement":
        return self.scale(-1)

    def __add__(self, other: "ExtElement") -> "ExtElement":
        return ExtElement.from_terms(list(self.terms) + list(other.terms))

    def __sub__(self, other: "ExtElement") -> "ExtElement":
        return self + (-other)

    def wedge(self, other: "ExtElement") -> "ExtElement":
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mon, sign = normalize(m1 + m2)
                if sign:
                    acc[mon] = acc.get(mon, 0) + sign * c1 * c2
        return ExtElement.from_terms(acc)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for m, c in self.terms:
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            body = _mon_str(m) if mag == 1 and m else f"{mag}{_mon_str(m)}" if m else str(mag)
            parts.append(f"{sign}{body}")
        return " ".join(parts)


def _element_from_row(row: Sequence[Fraction], mons: Sequence[Monomial]) -> ExtElement:
    # clear denominators, then divide by the content; rref pivots are +1 so
    # the leading coefficient stays positive
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ExtElement.from_terms({m: c for m, c in zip(mons, ints) if c})


def degree_span_rank(
    generators: Sequence[ExtElement], p: int, n: int
) -> tuple[int, list[ExtElement]]:
    """Rank and echelon basis of the degree-p slice of the ideal the generators span.

    The slice is the span of g ^ m over all generators g and monomials m of
    complementary degree. The echelon basis is read off a reduced row echelon
    form over monomial columns in lexicographic order, each row rescaled to a
    primitive integer vector.
    """
    cols = monomials(n, p)
    rows: list[tuple[int, ...]] = []
    for g in generators:
        if g.is_zero:
            continue
        q = g.degree
        if q is None:
            raise ValueError("generators must be homogeneous")
        if q > p:
            continue
        for m in monomials(n, p - q):
            w = g.wedge(ExtElement.monomial(m))
            if not w.is_zero:
                rows.append(w.coeff_vector(cols))
    if not rows or not cols:
        return 0, []
    reduced, pivots = rref(Matrix.from_rows(rows, len(cols)))
    basis = [_element_from_row(reduced.row(i), cols) for i in range(len(pivots))]
    return len(pivots), basis
