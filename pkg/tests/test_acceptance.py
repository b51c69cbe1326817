"""Acceptance suite: one test per criterion, each printing a PASS line.

Timed criteria construct fresh rings so no memoized scan tables flatter the
measurement; jit warm-up happens in the session fixture and is excluded, as
the limits target the algorithms rather than the compiler.
"""

import time

import numpy as np
import pytest

from starinv import (Witness, check_witness, classify_element, cep_leq,
                     drazin_inverse, find_counterexamples, is_ep, make_zn,
                     parse_elem, parse_ring_spec, pseudo_core_inverse,
                     run_theorem, solve, survey)
from starinv.classify import is_cep, is_star_dmp
from starinv.inverses import cep_inverse, central_group_inverse, drazin_index, \
    group_inverse, mp_inverse
from starinv.systems import solvable_left_right, solve_first_count, solve_mask
from starinv.theorems import tables

CORE_RINGS = ["zn(12)", "gauss(3)", "mat(2,zn(2),transpose)",
              "mat(2,zn(3),transpose)", "mat(2,gauss(3),conjtranspose)"]


def _ok(n, msg):
    print(f"PASS criterion {n}: {msg}")


def test_criterion_1_ep_theo1_all_rings():
    start = time.perf_counter()
    for spec in CORE_RINGS:
        rep = run_theorem(parse_ring_spec(spec), "ep-theo1")
        assert rep.verdict == "verified", (spec, rep.violations[:3])
        assert not rep.violations
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0, f"ep-theo1 suite took {elapsed:.1f}s"
    _ok(1, f"ep-theo1 verified on {len(CORE_RINGS)} rings in {elapsed:.1f}s (< 10s)")


def test_criterion_2_lem_commute_m2z3():
    ring = parse_ring_spec("mat(2,zn(3),transpose)")
    start = time.perf_counter()
    rep = run_theorem(ring, "lem-commute")
    elapsed = time.perf_counter() - start
    assert rep.verdict == "verified" and not rep.violations
    assert rep.elements_checked == 81 * 81 * 4  # all pairs, four variants
    assert elapsed < 5.0, f"lem-commute took {elapsed:.1f}s"
    _ok(2, f"lem-commute verified over 6561 pairs in {elapsed:.2f}s (< 5s)")


def test_criterion_3_counterexample_axa(m2z5):
    rep = find_counterexamples(m2z5, "axa-implies-ep")
    assert rep.findings, "no counterexample found"
    f = rep.findings[0]
    a = m2z5.elem(f["element_index"])
    w = Witness(m2z5.elem(f["witness_x_index"]), None, ())
    assert check_witness(a, w, "axa-mixed")
    assert not is_ep(a, "ep.def")
    report = classify_element(a)
    assert report.systems["axa-mixed"]["solvable"] and not report.is_ep
    # the specific analogue element with i := 2 mod 5
    a0 = parse_elem(m2z5, "[[1,2],[2,4]]")
    x0 = Witness(parse_elem(m2z5, "[[2,0],[0,1]]"), None, ())
    assert check_witness(a0, x0, "axa-mixed")
    assert not is_ep(a0, "ep.def")
    _ok(3, f"mixed-star regularity without EP witnessed by a = {f['element']}")


@pytest.mark.parametrize("tid", ["ep-13", "ep-14", "ep-dag", "ep-a2r",
                                 "ep-ra2", "ep-sharp"])
def test_criterion_4_conditional_theorems(tid, core_rings):
    for spec, ring in core_rings.items():
        rep = run_theorem(ring, tid)
        assert rep.verdict == "verified", (spec, tid, rep.violations[:3])
        assert rep.hypothesis_count > 0
    _ok(4, f"{tid} verified on all five rings")


CEP_SUITE = ["cep-thm34", "cep-prop36", "cep-prop38", "cep-cor39",
             "cep-clean310", "cep-uq311", "cep-tri-sum", "cep-tri-prod",
             "cep-prod315", "cep-pow316", "cep-sum318", "cep-peirce317"]


@pytest.mark.parametrize("tid", CEP_SUITE)
def test_criterion_5_cep_suite(tid, zn6, zn12, m2z2):
    for ring in (zn6, zn12, m2z2):
        rep = run_theorem(ring, tid)
        assert rep.verdict == "verified", (ring.spec(), tid, rep.violations[:3])
    _ok(5, f"{tid} verified on zn(6), zn(12), mat(2,zn(2),transpose)")


def test_criterion_5_survey_crosschecks(zn4, zn6, m2z2):
    assert survey(zn4).ep == 3
    s6 = survey(zn6)
    assert s6.ep == 6 and s6.cep == 6
    assert survey(m2z2).cep == 7
    _ok(5, "survey counts: zn(4) ep=3, zn(6) ep=cep=6, mat(2,zn(2)) cep=7")


def test_criterion_6_partial_order(zn6, m2z2):
    for ring in (zn6, m2z2):
        rep = run_theorem(ring, "cep-order322")
        assert rep.verdict == "verified" and not rep.violations
    assert cep_leq(zn6.elem(2), zn6.elem(5)) is True
    assert cep_leq(zn6.elem(2), zn6.elem(1)) is False
    _ok(6, "CEP order is a partial order; spot relations 2<=5 and not 2<=1 hold")


def test_criterion_7_dmp_suite(zn4, zn12, m2z2, zn6, gauss3):
    for ring in (zn4, zn12, m2z2):
        for tid in ("dmp-lemma41-thm42", "dmp-clean43", "dmp-uq44"):
            rep = run_theorem(ring, tid)
            assert rep.verdict == "verified", (ring.spec(), tid, rep.violations[:3])
    for ring in (zn4, zn6, zn12, gauss3):  # commutative test rings
        for a in range(ring.carrier_size):
            assert is_star_dmp(ring.elem(a), "dmp.herm")[0]
    rep = classify_element(zn4.elem(2))
    assert rep.is_star_dmp and rep.dmp_index == 2
    d = rep.inverses["drazin"]
    assert d.inverse.value == 0 and d.index == 2
    _ok(7, "*-DMP suite verified; commutative rings fully *-DMP; "
           "zn(4) elem 2 has a^D = 0 at index 2")


def test_criterion_8_uniqueness_audits(core_rings):
    from starinv.systems import power_index_arrays, scan_raw
    for spec, ring in core_rings.items():
        t = tables(ring, ["mp", "group", "core", "cep-inv"])
        for name in ("mp", "group", "core", "cep-inv"):
            assert int(t[name][1].max()) <= 1, (spec, name)
        N = ring.carrier_size
        all_idx = np.arange(N, dtype=np.int64)
        rho = np.array([drazin_index(ring.elem(a)) for a in range(N)])
        # the Drazin system at each element's own index
        cn, cn1 = power_index_arrays(ring, rho)
        _, cnt = scan_raw(ring, all_idx, ["drazin"], cn_idx=cn, cn1_idx=cn1)
        assert int(cnt.max()) <= 1, spec
        drazin_cnt = cnt[:, 0].copy()
        # pseudo-core and the *-DMP system at each element's bound exponent
        cn, cn1 = power_index_arrays(ring, np.maximum(rho, 1))
        _, cnt = scan_raw(ring, all_idx, ["pseudo-core", "dmp-sys"],
                          cn_idx=cn, cn1_idx=cn1)
        assert int(cnt.max()) <= 1, spec
        # spot-check the batched audit against the per-element solve path
        for a in range(0, N, max(1, N // 13)):
            elem = ring.elem(a)
            direct = int(solve_mask(ring, a, "drazin", n=int(rho[a])).sum())
            assert direct == int(drazin_cnt[a]), spec
            pc = pseudo_core_inverse(elem)
            if pc.exists:
                assert solve_first_count(elem, "pseudo-core", n=pc.index)[1] == 1
            ok, n = is_star_dmp(elem, "dmp.sys")
            if ok:
                assert solve_first_count(elem, "dmp-sys", n=n)[1] == 1
    ws = solve(make_zn(2).elem(0), "theo1-left")
    assert len(ws) == 2  # the non-uniqueness example: x = 0 or 1 both work
    _ok(8, "witness counts <= 1 for all unique inverses on all five rings; "
           "zero element admits 2 one-sided witnesses in zn(2)")


def test_criterion_9_inverse_coherence(core_rings):
    for spec, ring in core_rings.items():
        t = tables(ring, ["mp", "p13", "p14", "group", "cep-inv", "cgroup",
                          "in-a2r", "in-ra2"])
        mp_ok = t["mp"][1] > 0
        both_13_14 = (t["p13"][1] > 0) & (t["p14"][1] > 0)
        assert bool((mp_ok == both_13_14).all()), spec
        group_ok = t["group"][1] > 0
        regular_two_sided = (t["in-a2r"][1] > 0) & (t["in-ra2"][1] > 0)
        assert bool((group_ok == regular_two_sided).all()), spec
        cep_ok = t["cep-inv"][1] > 0
        # one batched pass: is the CEP-inverse also a central group inverse
        from starinv import opcodes as opc
        from starinv.systems import SYSTEMS, System, scan_raw
        cg_with_z = System("cgroup&x=cn", SYSTEMS["cgroup"].codes + (opc.X_CN,),
                           SYSTEMS["cgroup"].equations + ("x = z",))
        _, cg_cnt = scan_raw(ring, np.arange(ring.carrier_size),
                             [cg_with_z], cn_idx=t["cep-inv"][0])
        for a in np.flatnonzero(cep_ok):
            z = int(t["cep-inv"][0][a])
            assert int(t["group"][0][a]) == z, spec
            assert int(t["mp"][0][a]) == z, spec
            assert cg_cnt[a, 0] > 0, spec
    _ok(9, "MP <=> {1,3} and {1,4}; group <=> two-sided regularity; "
           "CEP chain collapses to one inverse")
