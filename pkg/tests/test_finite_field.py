"""Field construction, arithmetic, conjugation, and subfield embeddings."""

import random

import pytest

from sdcyclic import (build_field, conjugate, parse_field_descriptor,
                      primitive_root_of_unity, splitting_field_for)
from sdcyclic.finite_field import Embedding


def test_interning_and_descriptor():
    F4 = build_field(2)
    assert build_field(2) is F4
    assert F4.descriptor() == "GF(2^2)/defpoly=0x7"
    assert parse_field_descriptor("GF(2^2)/defpoly=0x7") is F4
    assert F4.order == 4 and F4.characteristic == 2


def test_gf4_tables():
    F4 = build_field(2)
    # elements 0,1,w=2,w^2=3 with w^2 = w+1
    assert F4.mul(2, 2) == 3
    assert F4.mul(2, 3) == 1
    assert F4.add(2, 3) == 1
    assert F4.inv(2) == 3
    assert F4.conj(2) == 3 and F4.conj(3) == 2
    assert F4.conj(0) == 0 and F4.conj(1) == 1


def test_field_axioms_sampled():
    rng = random.Random(11)
    for m in (2, 3, 8):
        F = build_field(m)
        for _ in range(200):
            a, b, c = (rng.randrange(F.order) for _ in range(3))
            assert F.mul(a, b) == F.mul(b, a)
            assert F.mul(a, F.mul(b, c)) == F.mul(F.mul(a, b), c)
            assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
            if a:
                assert F.mul(a, F.inv(a)) == 1


def test_pow_and_frobenius():
    F = build_field(8)
    rng = random.Random(12)
    for _ in range(100):
        a = rng.randrange(1, F.order)
        assert F.pow(a, F.order - 1) == 1
        assert F.frobenius(a) == F.square(a)
        assert F.frobenius(a, 8) == a  # x -> x^(2^8) is the identity
    assert F.pow(0, 0) == 1


def test_generator_order():
    for m in (1, 2, 4, 6):
        F = build_field(m)
        g = F.generator_int()
        order = 1
        x = g
        while x != 1:
            x = F.mul(x, g)
            order += 1
        assert order == F.order - 1


def test_conjugation_is_an_involution_fixing_the_subfield():
    F16 = build_field(4)
    for a in range(16):
        assert F16.conj(F16.conj(a)) == a
        # norm lands in GF(4): its (order-of-GF(4)) power is itself
        norm = F16.mul(a, F16.conj(a))
        assert F16.pow(norm, 4) == norm
    with pytest.raises(ValueError):
        build_field(3).conj(2)


def test_field_elements_wrapper():
    F4 = build_field(2)
    w = F4.element(2)
    assert (w * w).value == 3
    assert (w + w).value == 0
    assert (w / w).value == 1
    assert w ** 3 == F4.one
    assert conjugate(w).value == 3
    assert w.inverse().value == 3
    assert {F4.element(v) for v in (2, 2, 3)} == {F4.element(2),
                                                  F4.element(3)}


def test_embedding_homomorphism():
    F4 = build_field(2)
    F16 = build_field(4)
    emb = Embedding(F4, F16)
    rng = random.Random(13)
    for _ in range(100):
        a, b = rng.randrange(4), rng.randrange(4)
        ia, ib = emb.embed_int(a), emb.embed_int(b)
        assert emb.embed_int(F4.mul(a, b)) == F16.mul(ia, ib)
        assert emb.embed_int(F4.add(a, b)) == F16.add(ia, ib)
        assert emb.pullback_int(ia) == a
    assert emb.embed_int(0) == 0 and emb.embed_int(1) == 1


def test_embedding_rejects_outsiders():
    F4 = build_field(2)
    F16 = build_field(4)
    emb = Embedding(F4, F16)
    image = {emb.embed_int(a) for a in range(4)}
    outside = next(b for b in range(16) if b not in image)
    with pytest.raises(ValueError):
        emb.pullback_int(outside)
    assert not emb.contains(F16.element(outside))


def test_identity_embedding():
    F4 = build_field(2)
    emb = Embedding(F4, F4)
    assert all(emb.embed_int(a) == a for a in range(4))


def test_splitting_field_and_root_of_unity():
    F4 = build_field(2)
    sup, emb, t = splitting_field_for(F4, 5)
    assert sup.degree == 4  # ord_4(5) = 2, so GF(4^2)
    assert emb.sub is F4 and emb.sup is sup
    alpha = primitive_root_of_unity(sup, 5)
    x = alpha
    for _ in range(4):
        assert x != sup.one
        x = x * alpha
    assert x == sup.one


def test_root_of_unity_requires_big_enough_field():
    F4 = build_field(2)
    with pytest.raises(ValueError, match="extend the field"):
        primitive_root_of_unity(F4, 7)
