"""Finite group closures, multiplication tables, homomorphisms, quotients."""

import pytest
from hypothesis import given, settings, strategies as st

from acceptcert.exactalg import ExactMatrix, ONE, cyc_i, cyc_rational
from acceptcert.fingrp import (
    ClosureCapError,
    FinGroup,
    FormalGroupSpec,
    GroupStructureError,
    Hom,
    NotAHomomorphismError,
    centralizer_in,
    closure,
    formal_group,
    hom_from_gens,
    hom_set_to_elem_abelian_2,
    identity_hom,
    quotient_by_central,
)
from acceptcert.grpcore import GroupSpec, QUAT_I, QUAT_J, Quat, sp1_factor


def quaternion_group():
    return closure([QUAT_I, QUAT_J])


def test_closure_basics():
    c4 = closure([QUAT_I])
    assert c4.order == 4
    assert c4.gen_indices == (c4.idx(QUAT_I),)
    q8 = quaternion_group()
    assert q8.order == 8
    assert not q8.is_abelian()
    assert q8.exponent() == 4
    assert q8.element_order(q8.idx(QUAT_I * QUAT_J)) == 4
    assert q8.element_order(q8.idx(-Quat.one())) == 2


def test_closure_rejects_empty_and_caps():
    with pytest.raises(GroupStructureError):
        closure([])
    with pytest.raises(ClosureCapError):
        closure([QUAT_I, QUAT_J], cap=5)


def test_group_membership_errors():
    c4 = closure([QUAT_I])
    with pytest.raises(GroupStructureError):
        c4.idx(QUAT_J)


def test_formal_cyclic_product():
    src = formal_group(FormalGroupSpec.cyclic_product(4, 4))
    assert src.order == 16
    assert src.is_abelian()
    assert src.exponent() == 4
    assert len(src.gen_indices) == 2
    for g in src.gen_indices:
        assert src.element_order(g) == 4


def test_formal_central_ext2():
    src = formal_group(FormalGroupSpec.central_ext2(4, 4))
    assert src.order == 32
    assert not src.is_abelian()
    derived = src.derived_subgroup()
    assert derived.order == 2
    g1, g2 = src.gen_indices
    comm = src.mul_idx(src.mul_idx(g1, g2),
                       src.mul_idx(src.inv_idx(g1), src.inv_idx(g2)))
    assert src.elements[comm] in derived


def test_hom_verification_rejects_non_homs():
    c4 = closure([QUAT_I])
    g = GroupSpec((sp1_factor(),))
    bad = tuple(g.wrap_parts((QUAT_J,)) if not q.is_identity()
                else g.identity() for q in c4.elements)
    with pytest.raises(NotAHomomorphismError) as info:
        Hom(c4, g, bad)
    assert info.value.pair is not None


def test_hom_from_generators():
    src = formal_group(FormalGroupSpec.cyclic_product(4,))
    g = GroupSpec((sp1_factor(),))
    f = hom_from_gens(src, src.gen_indices, (g.wrap_parts((QUAT_J,)),), target=g)
    assert f.image_order() == 4
    assert len(f.kernel_indices()) == 1
    squash = hom_from_gens(src, src.gen_indices,
                           (g.wrap_parts((-Quat.one(),)),), target=g)
    assert squash.image_order() == 2
    assert len(squash.kernel_indices()) == 2


def test_identity_hom():
    q8 = quaternion_group()
    f = identity_hom(q8)
    assert f.image_order() == 8
    assert f.apply(QUAT_I) == QUAT_I


def test_quotient_by_central():
    q8 = quaternion_group()
    signs = q8.subgroup_from_elements([Quat.one(), -Quat.one()])
    quot, proj = quotient_by_central(q8, signs)
    assert quot.order == 4
    assert quot.is_abelian()
    assert proj.src is q8
    assert proj.image_order() == 4
    # the two lifts of each coset project together
    assert proj.apply(QUAT_I) == proj.apply(-QUAT_I)


def test_quotient_rejects_non_normal():
    q8 = quaternion_group()
    with pytest.raises(GroupStructureError):
        quotient_by_central(q8, FinGroup([Quat.one(), QUAT_I]))
    axis = FinGroup([Quat.one(), QUAT_I, -Quat.one(), -QUAT_I])
    quot, _ = quotient_by_central(q8, axis)
    assert quot.order == 2


def test_hom_set_to_elem_abelian_2():
    q8 = quaternion_group()
    klein = closure([-Quat.one()])
    signs = q8.subgroup_from_elements([Quat.one(), -Quat.one()])
    quot, _ = quotient_by_central(q8, signs)
    homs = hom_set_to_elem_abelian_2(quot, klein)
    assert len(homs) == 4
    assert all(v.is_identity() for v in homs[0].images)
    keys = {tuple(0 if v.is_identity() else 1 for v in h.images) for h in homs}
    assert len(keys) == 4
    with pytest.raises(GroupStructureError):
        hom_set_to_elem_abelian_2(closure([QUAT_I]), klein)


def test_centralizer_in():
    q8 = quaternion_group()
    cz = centralizer_in(q8, [QUAT_I])
    assert sorted(x.sort_key() for x in cz.elements) == sorted(
        x.sort_key() for x in closure([QUAT_I]).elements)
    center = centralizer_in(q8, list(q8.elements))
    assert center.order == 2


def test_subgroup_and_normality():
    q8 = quaternion_group()
    sub = q8.subgroup_from_elements([Quat.one(), -Quat.one()])
    assert sub.order == 2
    assert q8.is_normal_subset([Quat.one(), -Quat.one()])
    assert not q8.is_normal_subset([Quat.one(), QUAT_I])
    assert q8.derived_subgroup().order == 2


group_pool = st.sampled_from(["c4", "q8", "c4xc4"])


def build_group(name):
    if name == "c4":
        return closure([QUAT_I])
    if name == "q8":
        return quaternion_group()
    return formal_group(FormalGroupSpec.cyclic_product(4, 4))


@settings(max_examples=60, deadline=None)
@given(group_pool, st.integers(0, 10 ** 6), st.integers(0, 10 ** 6),
       st.integers(0, 10 ** 6))
def test_table_laws(name, a, b, c):
    g = build_group(name)
    i, j, k = a % g.order, b % g.order, c % g.order
    assert g.mul_idx(g.mul_idx(i, j), k) == g.mul_idx(i, g.mul_idx(j, k))
    assert g.mul_idx(i, g.inv_idx(i)) == g.identity_index
    assert g.mul_idx(g.identity_index, i) == i
