"""Quaternions, ambient factors, and central-quotient group specs."""

import pytest
from hypothesis import given, settings, strategies as st

from acceptcert.exactalg import ExactMatrix, ONE, ZERO, cyc_half, cyc_i, cyc_rational
from acceptcert.grpcore import (
    AmbientElement,
    GroupError,
    GroupSpec,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    Quat,
    adjoint_to_so3,
    so3_factor,
    sp1_factor,
    su_factor,
)

MINUS_I4 = ExactMatrix.identity(4).scaled(cyc_rational(-1))


def unit_quat_pool():
    half = cyc_half()
    out = []
    for base in (Quat.one(), QUAT_I, QUAT_J, QUAT_K):
        out.append(base)
        out.append(-base)
    for sa in (half, -half):
        for sb in (half, -half):
            for sc in (half, -half):
                for sd in (half, -half):
                    out.append(Quat.make(sa, sb, sc, sd))
    return out


quats = st.sampled_from(unit_quat_pool())


def test_quaternion_multiplication_table():
    one = Quat.one()
    assert QUAT_I * QUAT_I == -one
    assert QUAT_J * QUAT_J == -one
    assert QUAT_K * QUAT_K == -one
    assert QUAT_I * QUAT_J == QUAT_K
    assert QUAT_J * QUAT_K == QUAT_I
    assert QUAT_K * QUAT_I == QUAT_J
    assert QUAT_J * QUAT_I == -QUAT_K


@settings(max_examples=80)
@given(quats, quats)
def test_conjugation_reverses_products(p, q):
    assert (p * q).conj() == q.conj() * p.conj()
    assert p * p.conj() == Quat.one() or not p.is_unit()


@settings(max_examples=80)
@given(quats, quats)
def test_adjoint_is_a_homomorphism_into_rotations(p, q):
    mp = adjoint_to_so3(p)
    assert mp.is_orthogonal()
    assert mp.det() == ONE
    assert adjoint_to_so3(p * q) == mp * adjoint_to_so3(q)


@settings(max_examples=80)
@given(quats)
def test_adjoint_kernel_is_the_sign(q):
    trivial = adjoint_to_so3(q).is_identity()
    assert trivial == (q == Quat.one() or q == -Quat.one())


def test_factor_validation():
    with pytest.raises(GroupError):
        su_factor(1)
    su = su_factor(4)
    su.validate(ExactMatrix.identity(4))
    su.validate(ExactMatrix.identity(4).scaled(cyc_i()))
    with pytest.raises(GroupError):
        su.validate(ExactMatrix.diagonal([cyc_i(), ONE, ONE, ONE]))
    with pytest.raises(GroupError):
        su.validate(ExactMatrix.identity(4).scaled(cyc_rational(2)))
    sp1_factor().validate(QUAT_I)
    with pytest.raises(GroupError):
        sp1_factor().validate(Quat.make(ONE, ONE, ZERO, ZERO))
    so3_factor().validate(adjoint_to_so3(QUAT_J))


def test_central_generators_must_be_central():
    with pytest.raises(GroupError):
        GroupSpec((su_factor(4),),
                  center_gens=((ExactMatrix.diagonal(
                      [ONE, ONE, -ONE, -ONE]),),))


def test_quotient_wrapping_identifies_cosets():
    g = GroupSpec((su_factor(4),), center_gens=((MINUS_I4,),))
    assert len(g.z_subgroup) == 2
    m = ExactMatrix.diagonal([ONE, cyc_i(), ONE, -cyc_i()])
    assert g.wrap_parts((m,)) == g.wrap_parts((m.scaled(cyc_rational(-1)),))
    assert g.wrap_parts((m,)) != g.wrap_parts((m.conj(),))
    assert g.identity().is_identity()


def test_quotient_center():
    g = GroupSpec((su_factor(4),), center_gens=((MINUS_I4,),))
    # center of the quotient: fourth-root scalars mod the sign, order 2
    assert len(g.center_elements()) == 2
    trivial = GroupSpec((sp1_factor(), sp1_factor()))
    assert len(trivial.center_elements()) == 4


def test_ambient_element_algebra():
    x = AmbientElement((QUAT_I, QUAT_J))
    y = AmbientElement((QUAT_J, QUAT_K))
    prod = x * y
    assert prod.parts == (QUAT_K, QUAT_I)
    assert (x * x.inverse()).is_identity()


def test_element_json_roundtrip():
    g = GroupSpec((su_factor(4),), center_gens=((MINUS_I4,),))
    m = ExactMatrix.diagonal([ONE, ONE, cyc_i(), -cyc_i()])
    el = g.wrap_parts((m,))
    assert g.element_from_json(g.element_to_json(el)) == el
    trivial = GroupSpec((sp1_factor(),))
    q = trivial.wrap_parts((QUAT_K,))
    assert trivial.element_from_json(trivial.element_to_json(q)) == q


def test_mixed_factor_group():
    g = GroupSpec((su_factor(2), sp1_factor(), so3_factor()))
    el = g.wrap_parts((
        ExactMatrix.diagonal([cyc_i(), -cyc_i()]),
        QUAT_J,
        adjoint_to_so3(QUAT_I),
    ))
    sq = el * el
    assert not el.is_identity()
    assert (sq * sq).is_identity()
