"""Brute-force divisor stream and the independence cross-check."""

import pytest

from sdcyclic import (EUCLIDEAN, HERMITIAN, OracleCapExceeded, Poly,
                      all_half_degree_divisors, brute_force_self_dual,
                      build_field, enumerate_self_dual, parse_poly,
                      x_pow_minus_one)
from sdcyclic.oracle import DivisorLattice

F2 = build_field(1)
F4 = build_field(2)


def test_stream_is_exactly_the_half_degree_divisors():
    for n, field in [(6, F2), (14, F2), (30, F2), (10, F4), (12, F4)]:
        divisors = list(all_half_degree_divisors(n, field))
        assert len(set(divisors)) == len(divisors)
        target = x_pow_minus_one(field, n)
        for g in divisors:
            assert g.is_monic and g.degree == n // 2
            assert (target % g).is_zero
        assert len(divisors) == DivisorLattice.of(n, field).half_degree_count()


def test_known_small_streams():
    assert [g.to_list() for g in all_half_degree_divisors(2, F2)] == [[1, 1]]
    divs = list(all_half_degree_divisors(6, F2))
    assert [str(g) for g in divs] == ["x^3+1"]


def test_generating_function_counts():
    # coefficient of z^(n/2) in prod (1 + z^d_i + ... + z^(2^nu d_i))
    lat = DivisorLattice.of(30, F2)
    # degrees 1,4,2,4,4 with multiplicity 2 -> 7 ways to reach 15
    assert sorted(f.degree for f, _ in lat.irreducible_base) == [1, 2, 4, 4, 4]
    assert lat.half_degree_count() == 7


def test_cap():
    with pytest.raises(OracleCapExceeded, match="raise the cap"):
        list(all_half_degree_divisors(30, F2, cap=2))


def test_brute_force_equals_enumeration():
    for n in (2, 6, 14, 24, 28, 30):
        brute = brute_force_self_dual(n, F2, EUCLIDEAN)
        enum = {c.generator for c in enumerate_self_dual(n, F2, EUCLIDEAN)}
        assert brute == enum
    for n in (2, 10, 12, 14):
        for kind in (EUCLIDEAN, HERMITIAN):
            brute = brute_force_self_dual(n, F4, kind)
            enum = {c.generator for c in enumerate_self_dual(n, F4, kind)}
            assert brute == enum


def test_trivial_generator_always_in_brute_set():
    for n, field, kind in [(6, F2, EUCLIDEAN), (10, F4, HERMITIAN)]:
        trivial = x_pow_minus_one(field, n // 2)
        assert trivial in brute_force_self_dual(n, field, kind)


def test_independent_confirmation_of_nonexistence_mod_57():
    # 2^9 == -1 (mod 57), so no nontrivial hermitian self-dual code of
    # length 114 exists; the exhaustive filter must agree with the theorem
    hits = brute_force_self_dual(114, F4, HERMITIAN)
    assert hits == {x_pow_minus_one(F4, 57)}
