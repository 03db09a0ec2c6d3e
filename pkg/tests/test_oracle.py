"""Cayley-graph oracles and bounded factorization enumeration."""

from collections import Counter
from itertools import permutations

import pytest

from coxdepth.perm_core import identity, parse
from coxdepth.stats import depth, length, reflection_length
from coxdepth.groups import build_backend, dihedral_depth_formula
from coxdepth.oracle import (
    depth_oracle,
    enumerate_min_factorizations,
    reflection_length_oracle,
)
from coxdepth.patterns import is_free


def test_depth_oracle_matches_formula():
    for n in range(1, 6):
        b = build_backend("A", n)
        depths = depth_oracle(b)
        for w in b.elements:
            assert depths[b.rank(w)] == depth(w)


def test_reflection_length_oracle_matches_cycle_count():
    for n in range(1, 6):
        b = build_backend("A", n)
        table = reflection_length_oracle(b)
        for w in b.elements:
            assert table[b.rank(w)] == reflection_length(w)


def test_depth_oracle_dihedral_matches_closed_form():
    for m in range(2, 13):
        b = build_backend("I2", m)
        depths = depth_oracle(b)
        for x in b.elements:
            assert depths[b.rank(x)] == dihedral_depth_formula(b, x)


def test_depth_oracle_signed_distributions():
    assert tuple(sorted(Counter(depth_oracle(build_backend("B", 2))).items())) == (
        (0, 1), (1, 2), (2, 4), (3, 1),
    )
    b3 = Counter(depth_oracle(build_backend("B", 3)))
    assert [b3[k] for k in range(7)] == [1, 3, 8, 13, 14, 8, 1]


def test_enumerate_golden_three_cycle():
    b = build_backend("A", 3)
    # reflections are ordered (1 2), (1 3), (2 3); the three minimal
    # factorizations of 231 are s1.s2, t13.s1, s2.t13
    assert enumerate_min_factorizations(b, parse("231")) == [(0, 2), (1, 0), (2, 1)]


def test_enumerate_identity_and_reflections():
    b = build_backend("A", 4)
    assert enumerate_min_factorizations(b, identity(4)) == [()]
    for idx, t in enumerate(b.reflections):
        assert enumerate_min_factorizations(b, t) == [(idx,)]


def test_enumerate_products_multiply_back():
    b = build_backend("A", 4)
    for w in b.elements:
        for seq in enumerate_min_factorizations(b, w):
            prod = b.identity
            for idx in seq:
                prod = b.multiply(prod, b.reflections[idx])
            assert prod == w
            assert len(seq) == reflection_length(w)


def test_enumerate_respects_budget():
    b = build_backend("A", 3)
    w = parse("231")
    # the budget asks for products of exactly that many reflections
    assert enumerate_min_factorizations(b, w, budget=1) == []
    assert enumerate_min_factorizations(b, w, budget=2) == [(0, 2), (1, 0), (2, 1)]
    # three reflections can never multiply to an even element
    assert enumerate_min_factorizations(b, w, budget=3) == []
    # the 2-factor products equal to the identity pair each reflection
    # with itself
    pairs = enumerate_min_factorizations(b, identity(3), budget=2)
    assert pairs == [(0, 0), (1, 1), (2, 2)]


def test_enumerate_caps():
    with pytest.raises(ValueError):
        enumerate_min_factorizations(build_backend("A", 3), parse("231"), budget=7)
    with pytest.raises(ValueError):
        enumerate_min_factorizations(build_backend("A", 7), identity(7))


def test_free_iff_all_minimal_factorizations_simple():
    for n in range(2, 5):
        b = build_backend("A", n)
        simple_idx = {b.reflections.index(s) for s in b.simples}
        for w in b.elements:
            if length(w) != reflection_length(w):
                continue
            seqs = enumerate_min_factorizations(b, w)
            all_simple = all(i in simple_idx for seq in seqs for i in seq)
            assert all_simple == is_free(w)


def test_oracle_depth_never_below_reflection_length():
    for n in range(1, 6):
        b = build_backend("A", n)
        depths = depth_oracle(b)
        rls = reflection_length_oracle(b)
        assert all(r <= d for r, d in zip(rls, depths))
