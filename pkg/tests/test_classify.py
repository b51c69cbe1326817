import numpy as np
import pytest

from starinv import (InvalidArgumentError, MethodDisagreementError,
                     PreconditionError, cep_leq, cep_power, cep_product,
                     cep_sum, classify_element, decompose, is_cep, is_ep,
                     is_ep_conditional, is_star_dmp, make_gauss, make_zn,
                     parse_elem, peirce, subset, verify_partial_order)
from starinv.classify import CEP_METHODS, DMP_METHODS, EP_METHODS, HYPOTHESES


# ------------------------------------------------------------------ EP

def test_ep_examples(zn6, m2z2, m2z5):
    e11 = parse_elem(m2z2, "[[1,0],[0,0]]")
    assert is_ep(e11)
    bad = parse_elem(m2z5, "[[1,2],[2,4]]")
    assert not is_ep(bad)
    shift = parse_elem(m2z2, "[[0,1],[0,0]]")
    assert not is_ep(shift)
    assert is_ep(zn6.elem(2))


def test_ep_method_agreement_exhaustive(zn12, gauss3, m2z2):
    for ring in (zn12, gauss3, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            verdicts = {m: is_ep(elem, m) for m in EP_METHODS}
            assert len(set(verdicts.values())) == 1, (ring.spec(), a, verdicts)


def test_ep_unknown_method(zn6):
    with pytest.raises(InvalidArgumentError):
        is_ep(zn6.elem(1), "ep.bogus")


def test_conditional_verdicts(zn6, m2z2, m2z5):
    v = is_ep_conditional(zn6.elem(2), "hsharp")
    assert (v.hypothesis_holds, v.axa_mixed_solvable, v.is_ep) == (True, True, True)
    nil = parse_elem(m2z5, "[[1,2],[2,4]]")
    v = is_ep_conditional(nil, "h-a2R")
    assert not v.hypothesis_holds and not v.is_ep
    assert v.implication_holds
    shift = parse_elem(m2z2, "[[0,1],[0,0]]")
    v = is_ep_conditional(shift, "h13")
    assert v.hypothesis_holds
    assert v.implication_holds


def test_conditional_implication_exhaustive(zn12, gauss3, m2z2):
    for ring in (zn12, gauss3, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            for hyp in HYPOTHESES:
                assert is_ep_conditional(elem, hyp).implication_holds


def test_conditional_unknown(zn6):
    with pytest.raises(InvalidArgumentError):
        is_ep_conditional(zn6.elem(1), "h15")


# ------------------------------------------------------------------ CEP

def test_cep_examples(zn6, m2z2):
    e11 = parse_elem(m2z2, "[[1,0],[0,0]]")
    assert is_ep(e11) and not is_cep(e11)  # EP strictly contains CEP here
    assert is_cep(zn6.elem(5))  # units are CEP
    assert is_cep(zn6.elem(2))
    assert is_cep(m2z2.zero) and is_cep(m2z2.one)


def test_cep_method_agreement_exhaustive(zn12, gauss3, m2z2):
    for ring in (zn12, gauss3, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            verdicts = {m: is_cep(elem, m) for m in CEP_METHODS}
            assert len(set(verdicts.values())) == 1, (ring.spec(), a, verdicts)


def test_cep_implies_ep(zn12, m2z2, gauss3):
    for ring in (zn12, m2z2, gauss3):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            if is_cep(elem, "cep.def"):
                assert is_ep(elem, "ep.def")


def test_every_ep_is_cep_iff_projections_central(zn6, m2z2):
    # both sides true on zn(6)
    assert all(is_cep(zn6.elem(a)) for a in range(6) if is_ep(zn6.elem(a)))
    assert subset(zn6, "projections").members == \
        subset(zn6, "central_projections").members
    # both sides false on M2(Z2)
    eps = [a for a in range(16) if is_ep(m2z2.elem(a))]
    assert any(not is_cep(m2z2.elem(a)) for a in eps)
    assert subset(m2z2, "projections").members != \
        subset(m2z2, "central_projections").members


# ------------------------------------------------------------------ *-DMP

def test_dmp_examples(zn4, m2z5):
    assert is_star_dmp(zn4.elem(2)) == (True, 2)
    nil = parse_elem(m2z5, "[[1,2],[2,4]]")
    assert is_star_dmp(nil) == (True, 2)
    assert is_star_dmp(zn4.elem(1)) == (True, 1)


def test_ep_implies_dmp_index_1(zn12, m2z2):
    for ring in (zn12, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            if is_ep(elem, "ep.def"):
                assert is_star_dmp(elem) == (True, 1)


def test_dmp_method_agreement_exhaustive(zn4, zn12, m2z2):
    for ring in (zn4, zn12, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            flags = {m: DMP_METHODS[m](elem)[0] for m in DMP_METHODS}
            assert len(set(flags.values())) == 1, (ring.spec(), a, flags)


def test_commutative_rings_all_dmp(zn4, zn12, gauss3):
    for ring in (zn4, zn12, gauss3):
        for a in range(ring.carrier_size):
            assert is_star_dmp(ring.elem(a))[0]


def test_dmp_sys_witness_is_drazin(zn4, m2z2):
    from starinv import drazin_inverse, solve
    for ring in (zn4, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            ok, n = is_star_dmp(elem, "dmp.sys")
            if ok:
                ws = solve(elem, "dmp-sys", n_bound=n)
                assert [w.x for w in ws] == [drazin_inverse(elem).inverse]


# -------------------------------------------------------------- decompositions

def test_clean_cep_zn6(zn6):
    d = decompose(zn6.elem(2), "clean-cep")
    u, p = d.parts["u"], d.parts["p"]
    assert (u.value, p.value) == (5, 3)
    assert (u + p).value == 2
    assert (u * p) == -p
    assert zn6.units_table()[u.index] >= 0


def test_unit_projection_identity(zn6):
    d = decompose(zn6.one, "unit-projection")
    assert d.parts["u"] == zn6.one and d.parts["q"] == zn6.one


def test_tripotent_decompositions(zn6, zn12):
    for ring in (zn6, zn12):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            if not is_cep(elem, "cep.def"):
                continue
            d = decompose(elem, "tripotent-sum")
            u, p = d.parts["u"], d.parts["p"]
            assert p * p * p == p
            assert u + p == elem
            assert u * (p * p) == -p
            d = decompose(elem, "tripotent-product")
            u, q = d.parts["u"], d.parts["q"]
            assert q * q * q == q
            assert u * (q * q) == elem


def test_dmp_clean_zn4(zn4):
    d = decompose(zn4.elem(2), "dmp-clean")
    assert d.exponent == 2
    assert (d.parts["u"].value, d.parts["p"].value) == (3, 1)


def test_dmp_unit_projection(zn4, m2z2):
    for ring in (zn4, m2z2):
        for a in range(ring.carrier_size):
            elem = ring.elem(a)
            if not is_star_dmp(elem, "dmp.herm")[0]:
                continue
            d = decompose(elem, "dmp-unit-projection")
            u, q = d.parts["u"], d.parts["q"]
            an = elem ** d.exponent
            assert u * q == an and q * u == an
            assert elem * q == q * elem
            assert q * q == q and q.star() == q


def test_decompose_precondition(m2z2, zn4):
    e11 = parse_elem(m2z2, "[[1,0],[0,0]]")
    with pytest.raises(PreconditionError) as exc:
        decompose(e11, "clean-cep")
    assert exc.value.method == "cep.def"
    with pytest.raises(InvalidArgumentError):
        decompose(zn4.elem(1), "cayley")


def test_unit_part_nonunique_on_zero(zn6):
    # the projection factor of a = u q is unique, the unit is not: a = 0
    # accepts any unit with q = 0
    d = decompose(zn6.zero, "unit-projection")
    assert d.parts["q"] == zn6.zero
    units = subset(zn6, "units").members
    assert len(units) > 1
    for u in units:
        assert zn6.mul(u, zn6.zero_index) == zn6.zero_index


# ------------------------------------------------------------------ Peirce

def test_peirce_trivial_projections(zn6, m2z2):
    for ring in (zn6, m2z2):
        a = ring.elem(ring.carrier_size - 1)
        b = peirce(a, ring.one)
        assert (b.a11, b.a12, b.a21, b.a22) == (a, ring.zero, ring.zero, ring.zero)
        b = peirce(a, ring.zero)
        assert (b.a11, b.a12, b.a21, b.a22) == (ring.zero, ring.zero, ring.zero, a)


def test_peirce_diagonal_form_zn6(zn6):
    from starinv import cep_inverse
    a = zn6.elem(2)
    p = cep_inverse(a).inverse * a
    assert p.value == 4
    b = peirce(a, p)
    assert b.a11 == a and b.a12 == zn6.zero and b.a21 == zn6.zero \
        and b.a22 == zn6.zero


def test_peirce_requires_idempotent(zn6):
    with pytest.raises(InvalidArgumentError):
        peirce(zn6.elem(2), zn6.elem(5))


def test_peirce_reconstruction_and_adjoint(m2z2):
    for p_idx in np.flatnonzero(m2z2.projection_mask()):
        p = m2z2.elem(int(p_idx))
        for a_idx in range(m2z2.carrier_size):
            a = m2z2.elem(a_idx)
            b = peirce(a, p)
            assert b.a11 + b.a12 + b.a21 + b.a22 == a
            bs = peirce(a.star(), p)
            assert bs.a11 == b.a11.star()
            assert bs.a12 == b.a21.star()
            assert bs.a21 == b.a12.star()


# ------------------------------------------------------- closure operations

def test_cep_product_examples(zn6):
    assert cep_product(zn6.elem(2), zn6.elem(2)).value == 4
    assert cep_product(zn6.elem(2), zn6.one).value == 2
    assert cep_product(zn6.zero, zn6.zero) == zn6.zero


def test_cep_product_requires_cep(m2z2):
    e11 = parse_elem(m2z2, "[[1,0],[0,0]]")
    with pytest.raises(PreconditionError):
        cep_product(e11, m2z2.one)


def test_cep_power_examples(zn6):
    assert cep_power(zn6.elem(2), 2).value == 4
    assert cep_power(zn6.elem(5), 1).value == 5
    assert cep_power(zn6.one, 5) == zn6.one
    with pytest.raises(InvalidArgumentError):
        cep_power(zn6.one, 0)


def test_cep_sum_examples(zn6):
    assert cep_sum(zn6.elem(3), zn6.elem(4)).value == 1
    assert cep_sum(zn6.zero, zn6.elem(2)).value == 2
    with pytest.raises(PreconditionError) as exc:
        cep_sum(zn6.one, zn6.one)
    assert "x*b" in str(exc.value)


# ---------------------------------------------------------------- the order

def test_cep_leq_examples(zn6):
    assert cep_leq(zn6.elem(2), zn6.elem(5))
    assert not cep_leq(zn6.elem(2), zn6.elem(1))
    for a in range(6):
        assert cep_leq(zn6.elem(a), zn6.elem(a))  # reflexive


def test_cep_leq_requires_cep(m2z2):
    e11 = parse_elem(m2z2, "[[1,0],[0,0]]")
    with pytest.raises(PreconditionError):
        cep_leq(e11, m2z2.one)


def test_partial_order_reports(zn6, m2z2):
    rep = verify_partial_order(zn6)
    assert len(rep.members) == 6 and rep.is_partial_order
    assert (rep.reflexive_checks, rep.antisymmetry_checks,
            rep.transitivity_checks) == (6, 36, 216)
    rep = verify_partial_order(m2z2)
    assert len(rep.members) == 7 and rep.is_partial_order


def test_partial_order_guard():
    from starinv import BoundExceededError, make_matrix_ring
    big = make_matrix_ring(make_zn(7), 2, "transpose")  # 2401 > 2000
    with pytest.raises(BoundExceededError):
        verify_partial_order(big)


# ------------------------------------------------------------- full report

def test_classify_element_zn6(zn6):
    rep = classify_element(zn6.elem(2))
    assert rep.is_ep and rep.is_cep and rep.is_star_dmp and rep.dmp_index == 1
    assert rep.inverses["mp"].inverse.value == 2
    assert rep.decompositions["clean-cep"].parts["u"].value == 5
    d = rep.to_dict()
    assert d["element"] == 2 and d["methods"]["ep"]["ep.def"]


def test_classify_element_m2z5_example(m2z5):
    a = parse_elem(m2z5, "[[1,2],[2,4]]")
    rep = classify_element(a)
    assert not rep.is_ep and not rep.is_cep
    assert rep.is_star_dmp and rep.dmp_index == 2
    assert not rep.inverses["mp"].exists
    assert not rep.inverses["group"].exists
    assert rep.systems["axa-mixed"]["solvable"]
    assert rep.inverses["drazin"].inverse == m2z5.zero
