"""Vectorized finite-field element tables, cross-checked against direct loops."""

import itertools

import numpy as np
import pytest

from jordanlab.annihilators import element_table
from jordanlab.budget import TooLarge
from jordanlab.corpus import build_algebra
from jordanlab.exhaustive import ElementTable, NotProjection


def brute_elements(A):
    return [tuple(c) for c in itertools.product(range(A.field.p), repeat=A.dim)]


def u_apply(A, a, x):
    return A.element(A.u_op(A.element(a)).apply(x))


@pytest.fixture(scope="module")
def h2():
    A = build_algebra("h2_f3")
    return A, element_table(A)


@pytest.fixture(scope="module")
def m2():
    A = build_algebra("m2_f3")
    return A, element_table(A)


def test_counts_and_index_round_trip(h2):
    A, t = h2
    assert t.n == 3 ** 3
    for i in (0, 1, 13, 26):
        assert t.index_of(t.coords(i)) == i
        assert t.element(i).coords == t.coords(i)
    assert t.index_of_element(A.unit) == t.index_of(A.unit.coords)


def test_index_order_is_lexicographic_base_p(h2):
    _, t = h2
    assert t.coords(0) == (0, 0, 0)
    assert t.coords(1) == (0, 0, 1)
    assert t.coords(3) == (0, 1, 0)
    assert t.coords(26) == (2, 2, 2)


def test_square_indices_match_brute_force(h2):
    A, t = h2
    brute = sorted({t.index_of(A.element(c).square().coords)
                    for c in brute_elements(A)})
    assert list(t.square_indices) == brute
    assert t.n_squares == len(brute) == 11


def test_idempotents_match_brute_force(m2):
    A, t = m2
    brute = sorted(t.index_of(c) for c in brute_elements(A)
                   if A.element(c).square().coords == c)
    assert list(t.idempotent_indices) == brute
    assert len(brute) == 14


def test_u_matrix_matches_algebra_operator(h2):
    A, t = h2
    for i in (0, 5, 17, 26):
        U = t.u_matrix(i)
        op = A.u_op(t.element(i))
        for j in range(A.dim):
            ej = tuple(1 if k == j else 0 for k in range(A.dim))
            assert tuple(int(v) for v in (U @ np.array(ej)) % 3) \
                == op.apply(ej)


def test_square_root_of(h2):
    A, t = h2
    for i in t.square_indices:
        r = t.square_root_of(int(i))
        assert r is not None
        assert t.element(r).square() == t.element(int(i))
    non_squares = set(range(t.n)) - set(int(v) for v in t.square_indices)
    for i in itertools.islice(non_squares, 3):
        assert t.square_root_of(i) is None


def test_nilpotent_mask_matches_power_loop(m2):
    A, t = m2
    mask = t.nilpotent_mask()
    for c in brute_elements(A):
        x = A.element(c)
        nil = any(x.power(k).is_zero() for k in range(1, A.dim + 2))
        assert bool(mask[t.index_of(c)]) == nil


def test_trivial_indices_definitional(h2):
    A, t = h2
    got = set(int(v) for v in t.trivial_indices())
    for c in brute_elements(A):
        z = A.element(c)
        is_trivial = z.square().is_zero() and A.u_op(z).is_zero()
        assert (t.index_of(c) in got) == is_trivial
    assert got == {0}          # only zero is trivial here


def test_nilroot_witness_none_on_clean_algebra(h2):
    _, t = h2
    assert t.nilroot_witness() is None


def test_nilroot_witness_on_m3():
    A = build_algebra("m3_f3")
    t = element_table(A)
    w = t.nilroot_witness()
    assert w is not None
    root, sq = w
    b = t.element(root)
    s = t.element(sq)
    assert b.square() == s and not s.is_zero()
    nilp = t.nilpotent_mask()
    assert bool(nilp[sq])


def test_killed_square_masks_definitional(h2):
    A, t = h2
    picks = [0, 4, 9, 20]
    coords = np.stack([np.array(t.coords(i)) for i in picks])
    masks = t.killed_square_masks(coords)
    for row, i in zip(masks, picks):
        a = t.coords(i)
        for col, sq_idx in enumerate(t.square_indices):
            killed = u_apply(A, a, t.coords(int(sq_idx))).is_zero()
            assert bool(row[col]) == killed


def test_kernel_mask_full_definitional(h2):
    A, t = h2
    for i in (2, 7):
        mask = t.kernel_mask_full(i)
        x = t.coords(i)
        for j in range(t.n):
            assert bool(mask[j]) == u_apply(A, x, t.coords(j)).is_zero()


def test_annihilator_mask_is_quadratic_side(h2):
    A, t = h2
    i = t.index_of(A.unit.coords)
    mask = t.annihilator_mask(i)
    # annihilators of the unit: U_a 1 = a^2 = 0
    for j in range(t.n):
        assert bool(mask[j]) == t.element(j).square().is_zero()


def test_u_image_fixed_mask_matches_membership(h2):
    A, t = h2
    e_idx = int(t.idempotent_indices[1]) or int(t.idempotent_indices[2])
    mask = t.u_image_fixed_mask(e_idx, t.square_coords())
    e = t.element(e_idx)
    image = {u_apply(A, e.coords, c).coords for c in brute_elements(A)}
    for col, sq_idx in enumerate(t.square_indices):
        assert bool(mask[col]) == (t.coords(int(sq_idx)) in image)


def test_u_image_fixed_mask_rejects_non_idempotent(h2):
    _, t = h2
    non_idem = next(i for i in range(1, t.n)
                    if i not in set(int(v) for v in t.idempotent_indices))
    with pytest.raises(NotProjection):
        t.u_image_fixed_mask(non_idem, t.square_coords())


def test_idempotent_mask_dicts_are_injective_here(m2):
    _, t = m2
    sq = t.idempotent_square_masks()
    full = t.idempotent_full_masks()
    assert len(full) == len(t.idempotent_indices) == 14
    assert set(full.values()) == set(int(v) for v in t.idempotent_indices)
    assert set(sq.values()).issubset(set(int(v) for v in t.idempotent_indices))


def test_distinct_kernel_square_sets(h2):
    A, t = h2
    masks, witnesses = t.distinct_kernel_square_sets()
    assert len(masks) == len(witnesses)
    seen = set()
    for mask, w in zip(masks, witnesses):
        key = np.packbits(mask).tobytes()
        assert key not in seen
        seen.add(key)
        expect = t.killed_square_masks(
            t.coords_block_of(np.array([w])))[0]
        assert np.array_equal(mask, expect)
    # every element's kernel-square set appears
    all_masks = t.killed_square_masks(t.coords_block(0, t.n))
    for row in all_masks:
        assert np.packbits(row).tobytes() in seen


def test_squares_of_mask_round_trip(h2):
    _, t = h2
    mask = np.zeros(t.n_squares, dtype=bool)
    mask[[0, 2]] = True
    sel = t.squares_of_mask(mask)
    assert list(sel) == [int(t.square_indices[0]), int(t.square_indices[2])]


def test_budget_guard():
    A = build_algebra("m3_f3")  # 3^9 = 19683
    with pytest.raises(TooLarge):
        element_table(A, budget=1000)


def test_table_rejected_over_q():
    A = build_algebra("e2_q")
    with pytest.raises(ValueError):
        ElementTable(A)
