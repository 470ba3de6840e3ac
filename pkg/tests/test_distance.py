"""Gray-code weight walk: engines agree and semantics hold."""

import random

import pytest

from sdcyclic import distance


def naive_min_weight(rows, nbits):
    m = len(rows[0])
    best = nbits + 1
    for s in range(1, 1 << len(rows)):
        planes = [0] * m
        for i in range(len(rows)):
            if s >> i & 1:
                for j in range(m):
                    planes[j] ^= rows[i][j]
        support = 0
        for p in planes:
            support |= p
        best = min(best, bin(support).count("1"))
    return best


def rand_rows(rng, dim, m, nbits):
    return [tuple(rng.getrandbits(nbits) for _ in range(m))
            for _ in range(dim)]


def test_engines_agree_with_naive():
    rng = random.Random(31)
    for _ in range(60):
        dim = rng.randrange(1, 10)
        m = rng.choice([1, 2, 3])
        nbits = rng.randrange(dim, 24)
        rows = rand_rows(rng, dim, m, nbits)
        want = naive_min_weight(rows, nbits)
        got_py = distance.min_weight(rows, nbits, early_exit=0,
                                     engine="python")
        assert got_py == want
        got_nb = distance.min_weight(rows, nbits, early_exit=0,
                                     engine="numba")
        assert got_nb == want


def test_multiword_path():
    rng = random.Random(32)
    for nbits in (64, 65, 100, 130):
        rows = rand_rows(rng, 8, 2, nbits)
        a = distance.min_weight(rows, nbits, early_exit=0, engine="python")
        b = distance.min_weight(rows, nbits, early_exit=0, engine="numba")
        assert a == b


def test_early_exit_floor():
    # single row of weight 1: any early_exit >= 1 may stop immediately,
    # and the true minimum is still returned
    rows = [(0b1,)]
    assert distance.min_weight(rows, 4, early_exit=1) == 1
    rows = [(0b111,), (0b110,)]
    assert distance.min_weight(rows, 4, early_exit=0) == 1


def test_abort_below_prunes_but_never_lies_high():
    rng = random.Random(33)
    for _ in range(40):
        rows = rand_rows(rng, rng.randrange(2, 9), 1, 16)
        true_min = distance.min_weight(rows, 16, early_exit=0)
        for cut in (true_min, true_min + 1, true_min + 3):
            got = distance.min_weight(rows, 16, early_exit=0,
                                      abort_below=cut)
            if true_min >= cut:
                assert got == true_min
            else:
                assert true_min <= got < cut


def test_engine_validation():
    rows = [(0b11,)]
    assert distance.min_weight(rows, 2, engine="auto") == 2
    with pytest.raises(ValueError):
        distance.min_weight(rows, 2, engine="fortran")
    with pytest.raises(ValueError):
        distance.min_weight([], 2)
