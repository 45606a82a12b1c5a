import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympos.rootsys import (
    LieType,
    cartan_matrix,
    epsilon_realization,
    height,
    highest_root,
    positive_roots,
)

from paper_data import E6_POSITIVE_ROOTS, F4_POSITIVE_ROOTS, G2_POSITIVE_ROOTS

CLASSICAL = [LieType(f, l) for f, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 2))
             for l in range(lo, 13)]
EXCEPTIONAL = [LieType("E", 6), LieType("E", 7), LieType("E", 8),
               LieType("F", 4), LieType("G", 2)]


def test_invalid_types_rejected():
    for fam, rank in [("A", 0), ("B", 1), ("C", 1), ("D", 1), ("E", 5),
                      ("E", 9), ("F", 3), ("G", 3), ("X", 2)]:
        with pytest.raises(ValueError):
            LieType(fam, rank)


def test_parse():
    assert LieType.parse("e6") == LieType("E", 6)
    assert LieType.parse("A10") == LieType("A", 10)
    with pytest.raises(ValueError):
        LieType.parse("H4")


def test_cartan_matrix_small_cases():
    assert cartan_matrix(LieType("A", 1)) == ((2,),)
    assert cartan_matrix(LieType("A", 2)) == ((2, -1), (-1, 2))
    assert cartan_matrix(LieType("G", 2)) == ((2, -1), (-3, 2))
    assert cartan_matrix(LieType("D", 2)) == ((2, 0), (0, 2))


def test_cartan_matrix_shape():
    for t in CLASSICAL + EXCEPTIONAL:
        a = cartan_matrix(t)
        for i, row in enumerate(a):
            assert row[i] == 2
            for j, v in enumerate(row):
                if i != j:
                    assert v in (0, -1, -2, -3)


@pytest.mark.parametrize("t", CLASSICAL + EXCEPTIONAL, ids=str)
def test_positive_root_counts(t):
    assert len(positive_roots(t)) == t.positive_root_count


def test_a2_roots():
    assert positive_roots(LieType("A", 2)).positive_roots == \
        ((0, 1), (1, 0), (1, 1))


def test_paper_root_lists():
    assert set(positive_roots(LieType("E", 6)).positive_roots) == E6_POSITIVE_ROOTS
    assert set(positive_roots(LieType("F", 4)).positive_roots) == F4_POSITIVE_ROOTS
    assert set(positive_roots(LieType("G", 2)).positive_roots) == G2_POSITIVE_ROOTS


def test_simple_roots_present_and_no_duplicates():
    for t in CLASSICAL + EXCEPTIONAL:
        roots = positive_roots(t).positive_roots
        assert len(set(roots)) == len(roots)
        for i in range(t.rank):
            assert tuple(int(i == j) for j in range(t.rank)) in roots


def test_ordering_deterministic():
    for t in [LieType("B", 5), LieType("E", 7)]:
        first = positive_roots(t).positive_roots
        positive_roots.cache_clear()
        assert positive_roots(t).positive_roots == first
        heights = [height(r) for r in first]
        assert heights == sorted(heights)


def test_highest_root_values():
    assert highest_root(LieType("A", 3)) == (1, 1, 1)
    assert highest_root(LieType("E", 6)) == (1, 2, 2, 3, 2, 1)
    assert highest_root(LieType("F", 4)) == (2, 3, 4, 2)
    assert highest_root(LieType("G", 2)) == (3, 2)


def test_highest_root_dominates():
    for t in CLASSICAL + EXCEPTIONAL:
        if not t.is_irreducible:
            continue
        mu = highest_root(t)
        for r in positive_roots(t).positive_roots:
            assert all(m <= c for m, c in zip(r, mu))


def test_highest_root_rejects_reducible():
    with pytest.raises(ValueError):
        highest_root(LieType("D", 2))


EPSILON_TYPES = [LieType(f, l) for f, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 2))
                 for l in range(lo, 9)] + [LieType("E", 6)]


@pytest.mark.parametrize("t", EPSILON_TYPES, ids=str)
def test_epsilon_realization_matches_closure(t):
    assert epsilon_realization(t) == frozenset(positive_roots(t).positive_roots)


def test_epsilon_realization_b2_d2():
    assert epsilon_realization(LieType("B", 2)) == \
        frozenset({(1, 0), (0, 1), (1, 1), (1, 2)})
    assert epsilon_realization(LieType("D", 2)) == frozenset({(1, 0), (0, 1)})


def test_epsilon_realization_unsupported():
    with pytest.raises(ValueError):
        epsilon_realization(LieType("F", 4))
    with pytest.raises(ValueError):
        epsilon_realization(LieType("E", 7))


def _string_length(t, beta):
    """Max number of roots in any simple-root string through beta."""
    roots = set(positive_roots(t).positive_roots)
    signed = roots | {tuple(-m for m in r) for r in roots}
    longest = 1
    for i in range(t.rank):
        alpha = tuple(int(i == j) for j in range(t.rank))
        count = 1
        for sign in (1, -1):
            cur = beta
            while True:
                cur = tuple(m + sign * a for m, a in zip(cur, alpha))
                if cur in signed:
                    count += 1
                else:
                    break
        longest = max(longest, count)
    return longest


@pytest.mark.parametrize("t", [LieType("B", 3), LieType("C", 3),
                               LieType("F", 4), LieType("G", 2),
                               LieType("E", 6)], ids=str)
def test_root_strings_bounded_by_four(t):
    for beta in positive_roots(t).positive_roots:
        assert _string_length(t, beta) <= 4


@given(l=st.integers(min_value=1, max_value=16))
@settings(max_examples=16, deadline=None)
def test_a_family_count_formula(l):
    assert len(positive_roots(LieType("A", l))) == l * (l + 1) // 2
