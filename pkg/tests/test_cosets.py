"""Cyclotomic cosets, multipliers, splittings, and the counting formula."""

import pytest

from sdcyclic import (count_selfdual, cyclotomic_cosets, euclidean_exists,
                      find_splitting, hermitian_exists, multiplicative_order,
                      multiplier_image, split_length)


def test_multiplicative_order():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(4, 5) == 2
    assert multiplicative_order(2, 1) == 1
    with pytest.raises(ValueError):
        multiplicative_order(2, 4)


def test_split_length():
    assert split_length(10) == (1, 5)
    assert split_length(96) == (5, 3)
    assert split_length(2) == (1, 1)
    with pytest.raises(ValueError):
        split_length(7)
    with pytest.raises(ValueError):
        split_length(0)


def test_cosets_mod_7_base_2():
    part = cyclotomic_cosets(7, 2)
    assert [list(c.members) for c in part.cosets] == [[0], [1, 2, 4],
                                                      [3, 5, 6]]
    assert part.coset_containing(5).rep == 3
    assert part.to_json() == {"nbar": 7, "q": 2,
                              "cosets": [[0], [1, 2, 4], [3, 5, 6]]}


def test_cosets_mod_5_base_4():
    part = cyclotomic_cosets(5, 4)
    assert [list(c.members) for c in part.cosets] == [[0], [1, 4], [2, 3]]


def test_cosets_mod_1():
    part = cyclotomic_cosets(1, 4)
    assert len(part.cosets) == 1 and list(part.cosets[0].members) == [0]


def test_partition_laws():
    for nbar, q in [(15, 2), (21, 4), (45, 4), (105, 8)]:
        part = cyclotomic_cosets(nbar, q)
        seen = sorted(a for c in part.cosets for a in c.members)
        assert seen == list(range(nbar))
        for c in part.cosets:
            assert c.rep == min(c.members)
            assert all((a * q) % nbar in c.members for a in c.members)


def test_multiplier_involution():
    part = cyclotomic_cosets(35, 4)
    for b in (-1, -2):
        for c in part.cosets:
            assert multiplier_image(multiplier_image(c, b), b) == c


def test_find_splitting_mod_7():
    s = find_splitting(7, 2, -1)
    assert s.t == 1
    assert {c.rep for c in s.Z} == {0}
    x0 = {c.rep for c in s.X0}
    x1 = {c.rep for c in s.X1}
    assert (x0, x1) == ({1}, {3})


def test_find_splitting_fixed_everywhere():
    s = find_splitting(57, 4, -2)
    assert s.t == 0 and len(s.Z) == 9


def test_euclidean_exists():
    assert euclidean_exists(7, 1)
    assert not euclidean_exists(3, 1)
    assert not euclidean_exists(5, 1)
    assert euclidean_exists(15, 1)
    assert not euclidean_exists(5, 2)  # 4 == -1 mod 5
    assert euclidean_exists(1, 1) is False


def test_hermitian_exists():
    assert hermitian_exists(5, 1)
    assert not hermitian_exists(3, 1)
    assert hermitian_exists(7, 1)
    assert not hermitian_exists(57, 1)   # 2^9 == -1 mod 57
    assert hermitian_exists(135, 1)
    assert hermitian_exists(1, 1) is False


def test_exists_agrees_with_splitting():
    for nbar in range(1, 60, 2):
        assert euclidean_exists(nbar, 1) == (find_splitting(nbar, 2, -1).t
                                             >= 1)
        assert hermitian_exists(nbar, 1) == (find_splitting(nbar, 4, -2).t
                                             >= 1)


def test_count_selfdual():
    assert count_selfdual(1, 0) == 1
    assert count_selfdual(1, 1) == 3
    assert count_selfdual(2, 1) == 5
    assert count_selfdual(5, 1) == 33
    assert count_selfdual(4, 3) == 4913
    assert count_selfdual(1, 12) == 531441
