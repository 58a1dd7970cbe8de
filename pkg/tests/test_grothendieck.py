from fractions import Fraction

import pytest

from vistab.grothendieck import (
    VirtualRep,
    h_invariants,
    times_trivial,
    vr_add,
    vr_dim,
    vr_dim_symbolic,
    vr_scale,
)
from vistab.irreps import IOTA, CuspidalSymbol, IrrepLabel, dim_at, enumerate_irreps, norm
from vistab.oracles import gl_order_at
from vistab.qfunc import QPoly

C20 = CuspidalSymbol(2, 0)


def irr(data, mult=1):
    return VirtualRep.irreducible(IrrepLabel(data), mult)


def test_times_trivial_examples():
    v = times_trivial(irr({IOTA: [1]}), 1)
    assert v == irr({IOTA: [2]}) + irr({IOTA: [1, 1]})
    # total dimension q + 1: the number of lines in F_q^2
    for q in (2, 3, 5):
        assert vr_dim(v, q) == q + 1
    assert times_trivial(irr({C20: [1]}), 2) == irr({C20: [1], IOTA: [2]})


def test_times_trivial_zero_r():
    v = irr({IOTA: [2, 1]}, 3) + irr({IOTA: [3]}, -1)
    assert times_trivial(v, 0) == v


def test_h_invariants_examples():
    assert h_invariants(irr({IOTA: [2, 1]}), 2) == irr({IOTA: [2]}) + irr({IOTA: [1, 1]})
    assert h_invariants(irr({IOTA: [1, 1]}), 0).is_zero()
    v = irr({IOTA: [2, 1]}) + irr({C20: [1], IOTA: [1]}, 4)
    assert h_invariants(v, 3) == v
    with pytest.raises(ValueError):
        h_invariants(v, 4)


def test_h_invariants_drops_heavy_labels():
    # non-iota norm 2 cannot survive down to level 1
    assert h_invariants(irr({C20: [1], IOTA: [1]}), 1).is_zero()


def test_vr_dim_examples():
    assert vr_dim(irr({IOTA: [2]}) + irr({IOTA: [1, 1]}), 2) == 3
    assert vr_dim(VirtualRep.zero(4), 3) == 0
    assert vr_dim(irr({IOTA: [3]}, 5), 7) == 5
    assert vr_dim_symbolic(irr({IOTA: [2]}) + irr({IOTA: [1, 1]})) == QPoly([1, 1])


def test_add_and_scale():
    v = irr({IOTA: [1]}, 3)
    assert vr_add(v, VirtualRep.zero(1)) == v
    assert vr_add(v, vr_scale(v, -1)).is_zero()
    assert vr_scale(v, 2) == irr({IOTA: [1]}, 6)
    with pytest.raises(ValueError):
        vr_add(v, VirtualRep.zero(2))
    with pytest.raises(ValueError):
        VirtualRep(3, {IrrepLabel({IOTA: [1]}): 1})


def test_json_roundtrip():
    v = irr({IOTA: [2, 1], C20: [1]}, 10**30) + irr({IOTA: [5]}, -2)
    data = v.to_json()
    assert data["terms"][0]["mult"] in {str(10**30), "-2"}
    assert VirtualRep.from_json(data) == v


@pytest.mark.parametrize("q", [2, 3])
def test_frobenius_shadow(q):
    for a in range(4):
        for nu in enumerate_irreps(a, q):
            for r in range(4):
                up = times_trivial(VirtualRep.irreducible(nu), r)
                for mu in enumerate_irreps(a + r, q):
                    down = h_invariants(VirtualRep.irreducible(mu), a)
                    assert up[mu] == down[nu]


@pytest.mark.parametrize("q", [2, 3])
def test_iterated_induction_contains_single_step(q):
    for a in range(4):
        for nu in enumerate_irreps(a, q):
            v = VirtualRep.irreducible(nu)
            for r in range(5):
                for s in range(5 - r):
                    twice = times_trivial(times_trivial(v, r), s)
                    once = times_trivial(v, r + s)
                    assert all(twice[mu] >= m for mu, m in once)


@pytest.mark.parametrize("q", [2, 3])
def test_induction_scales_dimension_by_parabolic_index(q):
    for m in range(4):
        for r in range(4):
            index = Fraction(gl_order_at(m + r, q), gl_order_at(m, q) * gl_order_at(r, q) * q ** (m * r))
            assert index.denominator == 1
            for nu in enumerate_irreps(m, q):
                induced = times_trivial(VirtualRep.irreducible(nu), r)
                assert vr_dim(induced, q) == dim_at(nu, q) * index


@pytest.mark.parametrize("q", [2, 3])
def test_invariants_do_not_grow(q):
    for n in range(5):
        for mu in enumerate_irreps(n, q):
            for m in range(n + 1):
                inv = h_invariants(VirtualRep.irreducible(mu), m)
                assert inv.is_honest()
                for lam, mult in inv:
                    assert mult == 1 and norm(lam) == m
                assert vr_dim(inv, q) <= dim_at(mu, q)
