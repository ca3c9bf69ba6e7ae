"""Abelian groups, group rings, augmentation and the radical formula."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import util
from ringlab import (
    CapExceeded,
    augmentation,
    direct_product,
    element_classes,
    group_ring,
    ideal_generated,
    jacobson_radical,
    karpilovsky_radical,
    make_group,
    make_zmod,
    nilradical,
    ring_isomorphic,
    validate_ring_axioms,
)
from ringlab.group_algebra import AbelianGroup
from ringlab.sweep import group_catalog


def test_make_group_examples():
    assert make_group([6]).factors == (2, 3)
    assert make_group([]).factors == ()
    assert make_group([]).order == 1
    assert make_group([2, 2]).factors == (2, 2)
    assert make_group([12]).factors == (4, 3)
    assert make_group([1, 1]).is_trivial()


def test_abelian_group_rejects_non_canonical():
    with pytest.raises(ValueError):
        AbelianGroup([6])  # not a prime power
    with pytest.raises(ValueError):
        AbelianGroup([4, 2])  # out of (prime, exponent) order


def test_p_component():
    c6 = make_group([6])
    assert c6.p_component(2).factors == (2,)
    assert c6.p_component(5).is_trivial()
    g = make_group([2, 4, 3])
    assert g.p_component(2).factors == (2, 4)
    with pytest.raises(ValueError):
        g.p_component(4)


def test_quotient_by_component():
    assert make_group([6]).quotient_by_component(2).factors == (3,)
    assert make_group([4]).quotient_by_component(2).is_trivial()
    g33 = make_group([3, 3])
    assert g33.quotient_by_component(2) == g33


def test_is_p_group_and_trivial():
    assert make_group([2, 2]).is_p_group(2)
    assert not make_group([6]).is_p_group(2)
    trivial = make_group([])
    assert trivial.is_trivial()
    assert trivial.is_p_group(3)


def test_component_orders_multiply():
    for g in group_catalog(12):
        for p in (2, 3, 5):
            assert g.p_component(p).order * g.quotient_by_component(p).order == g.order


def test_group_catalog_counts_match_classification():
    groups = group_catalog(18)
    by_order = {}
    for g in groups:
        by_order[g.order] = by_order.get(g.order, 0) + 1
    assert by_order == util.ABELIAN_GROUP_COUNTS


def test_group_ring_z3_c2_is_z3_squared():
    view = group_ring(make_zmod(3), make_group([2]))
    assert view.ring.order == 9
    assert validate_ring_axioms(view.ring).ok
    ok, _ = ring_isomorphic(view.ring, direct_product(make_zmod(3), make_zmod(3)))
    assert ok


def test_group_ring_over_trivial_group_is_base():
    z6 = make_zmod(6)
    view = group_ring(z6, make_group([]))
    assert view.ring.order == 6
    assert np.array_equal(view.ring.add, z6.add)
    assert np.array_equal(view.ring.mul, z6.mul)


def test_group_ring_z2_c3_radicals_vanish():
    view = group_ring(make_zmod(2), make_group([3]))
    assert view.ring.order == 8
    assert nilradical(view.ring).key == (0,)
    assert jacobson_radical(view.ring).key == (0,)


def test_group_ring_cap():
    with pytest.raises(CapExceeded):
        group_ring(make_zmod(10), make_group([2, 2]), cap=4096)


def test_embeddings_respect_operations():
    base = make_zmod(4)
    group = make_group([2, 2])
    view = group_ring(base, group)
    ring = view.ring
    for r in range(base.order):
        for s in range(base.order):
            assert ring.add[view.embed_base(r), view.embed_base(s)] == view.embed_base(base.add[r, s])
            assert ring.mul[view.embed_base(r), view.embed_base(s)] == view.embed_base(base.mul[r, s])
    for g in range(group.order):
        for h in range(group.order):
            product = view.embed_group(group.compose(g, h))
            assert ring.mul[view.embed_group(g), view.embed_group(h)] == product


def test_augmentation_examples():
    z3 = make_zmod(3)
    view = group_ring(z3, make_group([2]))
    aug = augmentation(view)
    assert aug.is_surjective()
    for g in range(view.group.order):
        assert aug(view.embed_group(g)) == z3.one
    one_plus_g = view.ring.add[view.embed_base(1), view.embed_group(1)]
    assert aug(int(one_plus_g)) == 2


def test_augmentation_kernel():
    z3 = make_zmod(3)
    view = group_ring(z3, make_group([3]))
    aug = augmentation(view)
    kernel = aug.kernel_members()
    assert kernel.size == 9  # |RG| / |R|
    gens = [
        view.ring.add[view.embed_group(g), view.ring.neg[view.embed_base(z3.one)]]
        for g in range(1, view.group.order)
    ]
    assert ideal_generated(view.ring, [int(g) for g in gens]).key == tuple(map(int, kernel))


def test_karpilovsky_examples():
    z2, z3, z4 = make_zmod(2), make_zmod(3), make_zmod(4)
    v23 = group_ring(z2, make_group([3]))
    assert karpilovsky_radical(v23).key == (0,)
    v33 = group_ring(z3, make_group([3]))
    karp33 = karpilovsky_radical(v33)
    assert len(karp33) == 9
    assert set(karp33.key) == set(map(int, augmentation(v33).kernel_members()))
    v42 = group_ring(z4, make_group([2]))
    karp42 = karpilovsky_radical(v42)
    assert len(karp42) == 8
    generated = ideal_generated(
        v42.ring,
        [v42.embed_base(2), int(v42.ring.add[v42.embed_group(1), v42.ring.neg[v42.embed_base(1)]])],
    )
    assert karp42 == generated


@settings(max_examples=30)
@given(
    st.sampled_from([2, 3, 4, 5, 6]),
    st.sampled_from([(), (2,), (3,), (4,), (2, 2)]),
)
def test_karpilovsky_matches_jacobson(n, factors):
    view = group_ring(make_zmod(n), make_group(factors), cap=1500)
    assert karpilovsky_radical(view) == jacobson_radical(view.ring, cap=1500)


def test_iterated_group_ring_coherence():
    # R[C2][C2] and R[C2 x C2] agree up to isomorphism
    z2 = make_zmod(2)
    once = group_ring(z2, make_group([2]))
    twice = group_ring(once.ring, make_group([2]))
    direct = group_ring(z2, make_group([2, 2]))
    ok, _ = ring_isomorphic(twice.ring, direct.ring)
    assert ok


def test_augmentation_is_verified_hom():
    view = group_ring(make_zmod(6), make_group([2]))
    aug = augmentation(view)
    assert aug.domain is view.ring and aug.codomain is view.base
    classes = element_classes(view.ring)
    assert view.ring.zero in classes.nilpotents  # smoke: classes computable on RG
