from math import comb

import numpy as np
import pytest

from ghwkit.enumeration import (
    columns_up_to_weight,
    count_e,
    count_full_support,
    expand_to_support,
    expected_enumeration,
    gaussian_binomial,
    pivot_shapes,
    subspace_blocks,
    subspaces,
    support_choices,
)
from ghwkit.errors import BadArgs
from ghwkit.gf import build_field
from ghwkit.matrix import MatrixGF

from support import brute_subspaces

F2 = build_field(2)
F3 = build_field(3)
F4 = build_field(2, 2)
F5 = build_field(5)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(5, 0, 3) == 1
    # 7 nonzero vectors of GF(2)^3 up to scalars
    nonzero = [v for v in range(1, 8)]
    assert gaussian_binomial(3, 1, 2) == len(nonzero) == 7
    # brute-force count of 2-dim subspaces of GF(2)^4
    assert gaussian_binomial(4, 2, 2) == len(brute_subspaces(F2, 4, 2)) == 35
    with pytest.raises(BadArgs):
        gaussian_binomial(3, 4, 2)
    with pytest.raises(BadArgs):
        gaussian_binomial(3, 1, 1)


def test_gaussian_binomial_is_exact_bigint():
    v = gaussian_binomial(40, 20, 5)
    assert v > 2**64  # must not overflow
    assert gaussian_binomial(40, 20, 5) == gaussian_binomial(40, 40 - 20, 5)


def test_count_full_support_examples():
    for q in (2, 3, 4):
        for r in range(0, 4):
            assert count_full_support(r, r, q) == 1
    # enumerate all 7 lines of GF(2)^3, keep full support
    full = [fp for fp, M in brute_subspaces(F2, 3, 2).items()]
    full_support = [
        M for M in brute_subspaces(F2, 3, 2).values() if (np.array(M) != 0).any(axis=0).all()
    ]
    assert count_full_support(3, 2, 2) == len(full_support) == 4
    for q in (2, 3, 4, 5):
        for w in range(1, 6):
            assert count_full_support(w, 1, q) == (q - 1) ** (w - 1)


def test_count_e_examples():
    assert count_e(3, 3, 2, 2) == 4
    assert count_e(4, 3, 2, 2) == 16
    for q in (2, 3, 4, 5):
        for k in range(1, 7):
            for w in range(1, k + 1):
                assert count_e(k, w, 1, q) == comb(k, w) * (q - 1) ** (w - 1)


def test_count_e_sums_to_gaussian_binomial():
    for q in (2, 3, 4, 5):
        for k in range(0, 7):
            for r in range(0, k + 1):
                assert sum(count_e(k, w, r, q) for w in range(r, k + 1)) == gaussian_binomial(
                    k, r, q
                )


def test_expected_enumeration():
    # single term: with m=1 the bound reaches d = r+1 after the first round
    assert expected_enumeration(1, 3, 2, 4, 2) == count_e(4, 2, 2, 2)
    # upper bound of the sum is ceil(d/m) - 1
    assert expected_enumeration(2, 6, 2, 4, 2) == 2 * count_e(4, 2, 2, 2)
    assert expected_enumeration(2, 7, 2, 4, 2) == 2 * (count_e(4, 2, 2, 2) + count_e(4, 3, 2, 2))
    # empty sum when the bound is met before the first round
    assert expected_enumeration(2, 2, 2, 4, 2) == 0
    assert expected_enumeration(3, 3, 1, 5, 2) == 0
    # terms beyond w = k contribute nothing
    assert expected_enumeration(1, 10**6, 2, 4, 2) == sum(
        count_e(4, w, 2, 2) for w in range(2, 5)
    )


def test_pivot_shapes():
    assert list(pivot_shapes(1, 3)) == [(1,)]
    assert list(pivot_shapes(2, 3)) == [(1, 2), (1, 3)]
    assert list(pivot_shapes(3, 3)) == [(1, 2, 3)]
    assert len(list(pivot_shapes(3, 6))) == comb(5, 2)
    with pytest.raises(BadArgs):
        list(pivot_shapes(4, 3))


def test_columns_up_to_weight():
    assert columns_up_to_weight(2, 1, F2).tolist() == [[1, 0], [0, 1]]
    assert columns_up_to_weight(2, 2, F2).tolist() == [[1, 0], [0, 1], [1, 1]]
    v = columns_up_to_weight(2, 2, F3)
    assert v.shape == (8, 2)
    assert {tuple(row) for row in v.tolist()} == {
        (a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)
    }
    for r, z, F in ((3, 2, F3), (4, 3, F2), (3, 3, F4)):
        v = columns_up_to_weight(r, z, F)
        count = sum(comb(r, y) * (F.q - 1) ** y for y in range(1, z + 1))
        assert v.shape == (count, r)
        assert len({tuple(row) for row in v.tolist()}) == count
        assert all(1 <= (np.array(row) != 0).sum() <= z for row in v.tolist())
    with pytest.raises(BadArgs):
        columns_up_to_weight(2, 3, F2)


def test_subspaces_exact_sets():
    got = [m.array.tolist() for m in subspaces(2, 3, F2)]
    expected = [
        [[1, 0, 0], [0, 1, 1]],
        [[1, 0, 1], [0, 1, 0]],
        [[1, 0, 1], [0, 1, 1]],
        [[1, 1, 0], [0, 0, 1]],
    ]
    assert len(got) == 4
    assert {str(m) for m in got} == {str(m) for m in expected}
    # (r, r): only the identity
    for F in (F2, F3, F5):
        for r in (1, 2, 3):
            only = list(subspaces(r, r, F))
            assert len(only) == 1 and only[0] == MatrixGF.identity(F, r)
    # (1, w) over GF(2): only the all-ones row
    for w in (1, 2, 4):
        only = list(subspaces(1, w, F2))
        assert len(only) == 1 and only[0].array.tolist() == [[1] * w]


def test_subspaces_deterministic_order():
    first = [m.array.tolist() for m in subspaces(2, 4, F3)]
    second = [m.array.tolist() for m in subspaces(2, 4, F3)]
    assert first == second
    # pivot shapes appear in lexicographic order
    shapes = []
    for m in subspaces(2, 4, F2):
        _, _, piv = m.rref()
        if not shapes or shapes[-1] != piv:
            shapes.append(piv)
    assert shapes == sorted(set(shapes))


@pytest.mark.parametrize("q,F", [(2, F2), (3, F3), (4, F4)])
def test_subspaces_stream_is_complete_and_duplicate_free(q, F):
    for w in range(1, 6):
        for r in range(1, w + 1):
            seen = set()
            for m in subspaces(r, w, F):
                key = m.array.tobytes()
                assert key not in seen
                seen.add(key)
                R, rank, _ = m.rref()
                assert rank == r and R == m  # already in RREF
                assert m.support() == tuple(range(1, w + 1))
            assert len(seen) == count_full_support(w, r, q)


def test_subspace_blocks_agree_with_stream():
    total = sum(b.shape[0] for b in subspace_blocks(2, 5, F3, block_size=7))
    assert total == count_full_support(5, 2, 3)
    flat_stream = [m.array.tolist() for m in subspaces(2, 5, F3)]
    flat_blocks = [
        b[i].tolist() for b in subspace_blocks(2, 5, F3, block_size=7) for i in range(b.shape[0])
    ]
    assert flat_stream == flat_blocks


def test_support_choices():
    assert list(support_choices(3, 3)) == [(1, 2, 3)]
    assert list(support_choices(3, 2)) == [(1, 2), (1, 3), (2, 3)]
    assert list(support_choices(4, 0)) == [()]


def test_expand_to_support():
    m = MatrixGF(F2, [[1, 0], [0, 1]])
    assert expand_to_support(m, [1, 2], 2) == m
    assert expand_to_support(MatrixGF(F2, [[1]]), [3], 4).array.tolist() == [[0, 0, 1, 0]]
    assert expand_to_support(MatrixGF.identity(F3, 2), [1, 3], 3).array.tolist() == [
        [1, 0, 0],
        [0, 0, 1],
    ]
    with pytest.raises(BadArgs):
        expand_to_support(m, [1], 3)
    with pytest.raises(BadArgs):
        expand_to_support(m, [2, 1], 3)
    with pytest.raises(BadArgs):
        expand_to_support(m, [1, 4], 3)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_grassmannian_coverage_against_brute_force(k):
    for r in range(1, k + 1):
        mine = set()
        for w in range(r, k + 1):
            for S in support_choices(k, w):
                for m in subspaces(r, w, F2):
                    e = expand_to_support(m, S, k)
                    key = tuple(map(tuple, e.array.tolist()))
                    assert key not in mine
                    mine.add(key)
        # brute force canonicalizes every r-tuple of vectors to its RREF, so
        # the emitted representatives must be exactly those canonical forms
        brute = brute_subspaces(F2, k, r)
        assert len(mine) == len(brute) == gaussian_binomial(k, r, 2)
        assert mine == set(brute.keys())
