import itertools
import random

from twoarr.exterior import ExtElement, degree_span_rank, monomials, normalize

E = ExtElement.monomial


def elem(*terms):
    return ExtElement.from_terms({mon: c for mon, c in terms})


def test_normalize_sorted():
    assert normalize((1, 2)) == ((1, 2), 1)


def test_normalize_one_swap():
    assert normalize((2, 1)) == ((1, 2), -1)


def test_normalize_two_inversions():
    assert normalize((2, 3, 1, 4)) == ((1, 2, 3, 4), 1)


def test_normalize_duplicate_is_zero():
    mon, sign = normalize((1, 3, 1))
    assert sign == 0


def test_wedge_generators():
    assert E((1,)).wedge(E((2,))) == E((1, 2))
    assert E((2,)).wedge(E((1,))) == E((1, 2), -1)


def test_wedge_cross_terms():
    x = elem(((1, 2), 1), ((1, 3), -1), ((2, 3), 1))
    y = elem(((1, 2), 1), ((1, 4), 1), ((2, 4), 1))
    assert x.wedge(y) == E((1, 2, 3, 4), 2)


def test_wedge_even_degree_square():
    x = elem(((1, 2), 1), ((3, 4), 1))
    assert x.wedge(x) == E((1, 2, 3, 4), 2)


def test_str_formatting():
    x = elem(((1, 2), 1), ((1, 3), -1), ((2, 3), 1))
    assert str(x) == "+e12 -e13 +e23"
    assert str(E((1, 2, 3, 4), 2)) == "+2e1234"
    assert str(ExtElement.zero()) == "0"


def test_degree():
    assert elem(((1, 2), 1), ((3, 4), -2)).degree == 2
    assert elem(((1,), 1), ((2, 3), 1)).degree is None
    assert ExtElement.zero().degree is None


# --- randomized properties ------------------------------------------------


def random_element(rng, n, deg, terms=3):
    acc = {}
    for _ in range(terms):
        mon = tuple(sorted(rng.sample(range(1, n + 1), deg)))
        acc[mon] = acc.get(mon, 0) + rng.randint(-3, 3)
    return ExtElement.from_terms(acc)


def test_wedge_associative_and_bilinear():
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(4, 6)
        x = random_element(rng, n, rng.randint(1, 2))
        y = random_element(rng, n, rng.randint(1, 2))
        z = random_element(rng, n, rng.randint(1, 2))
        assert x.wedge(y).wedge(z) == x.wedge(y.wedge(z))
        assert (x + y).wedge(z) == x.wedge(z) + y.wedge(z)
        k = rng.randint(-4, 4)
        assert x.scale(k).wedge(y) == x.wedge(y).scale(k)


def test_wedge_graded_commutative():
    rng = random.Random(29)
    for _ in range(100):
        n = 6
        p, q = rng.randint(1, 3), rng.randint(1, 3)
        x = random_element(rng, n, p)
        y = random_element(rng, n, q)
        sign = (-1) ** (p * q)
        assert x.wedge(y) == y.wedge(x).scale(sign)


def bubble_parity(seq):
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    if any(a == b for a, b in zip(seq, seq[1:])):
        return tuple(seq), 0
    return tuple(seq), sign


def test_normalize_against_bubble_sort():
    rng = random.Random(31)
    for _ in range(300):
        k = rng.randint(0, 6)
        seq = [rng.randint(1, 8) for _ in range(k)]
        assert normalize(seq) == bubble_parity(seq)


# --- graded span ranks -----------------------------------------------------

COMPLEX_PATTERN_RELATIONS = [
    elem(((1, 2), 1), ((1, 3), -1), ((2, 3), 1)),
    elem(((1, 2), 1), ((1, 4), -1), ((2, 4), 1)),
    elem(((1, 3), 1), ((1, 4), -1), ((3, 4), 1)),
    elem(((2, 3), 1), ((2, 4), -1), ((3, 4), 1)),
]


def test_degree_span_rank_slices():
    rels = COMPLEX_PATTERN_RELATIONS
    assert degree_span_rank(rels, 2, 4)[0] == 3
    assert degree_span_rank(rels, 3, 4)[0] == 4
    assert degree_span_rank(rels, 4, 4)[0] == 1
    assert degree_span_rank([], 2, 4) == (0, [])


def test_degree_span_rank_echelon_basis_spans():
    rels = COMPLEX_PATTERN_RELATIONS
    rank2, basis = degree_span_rank(rels, 2, 4)
    assert len(basis) == rank2
    # basis elements are integer, primitive, and inside the slice
    again, _ = degree_span_rank(basis, 2, 4)
    assert again == rank2
    for b in basis:
        assert b.degree == 2


def test_monomials_lexicographic():
    assert monomials(4, 2) == tuple(itertools.combinations(range(1, 5), 2))
    assert monomials(3, 0) == ((),)
