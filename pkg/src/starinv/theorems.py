"""Exhaustive verification registry, ring surveys and counterexample search.

Each registry entry turns one proved claim into a runnable check over a
whole ring: quantifiers become scans, "the unique x" becomes a witness
count, and constructive proofs become formula-vs-search comparisons.  A
verified report means zero violations; a refuted one would be a defect in
this package (or a genuinely false claim) and carries every offending
element.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import classify as cl
from . import inverses as inv
from . import opcodes as op
from .errors import BoundExceededError, UnknownIdError
from .rings import StarRing, Elem
from .systems import SYSTEMS, System, scan_raw, solve_first_count, solve_mask

PAIR_GUARD = cl.PAIR_GUARD


# -------------------------------------------------------------- table cache

def tables(ring: StarRing, names):
    """Full-ring (first witness, witness count) tables, computed in one
    batched scan per cache miss and memoized on the ring."""
    cache = ring._cache.setdefault("tables", {})
    missing = [n for n in names if n not in cache]
    if missing:
        all_idx = np.arange(ring.carrier_size, dtype=np.int64)
        first, count = scan_raw(ring, all_idx, missing)
        for s, name in enumerate(missing):
            cache[name] = (first[:, s], count[:, s])
    return {n: cache[n] for n in names}


def _cn_tables(ring: StarRing, specs, cn_idx, tag):
    """Like :func:`tables` but with a per-element CN register; ``specs`` are
    (key, System) pairs and ``tag`` disambiguates the cache entries."""
    cache = ring._cache.setdefault("tables", {})
    missing = [(k, s) for k, s in specs if f"{k}@{tag}" not in cache]
    if missing:
        all_idx = np.arange(ring.carrier_size, dtype=np.int64)
        first, count = scan_raw(ring, all_idx, [s for _, s in missing],
                                cn_idx=cn_idx)
        for s, (key, _) in enumerate(missing):
            cache[f"{key}@{tag}"] = (first[:, s], count[:, s])
    return {k: cache[f"{k}@{tag}"] for k, _ in specs}


def ep_arrays(ring: StarRing):
    """mp/group tables plus the elementwise EP mask (both inverses exist and
    coincide)."""
    t = tables(ring, ["mp", "group"])
    mp_first, mp_count = t["mp"]
    g_first, g_count = t["group"]
    ep = (mp_count > 0) & (g_count > 0) & (mp_first == g_first)
    return {"mp_first": mp_first, "mp_count": mp_count,
            "g_first": g_first, "g_count": g_count, "ep": ep}


def _append_code(system, code, suffix):
    return System(system.name + suffix, system.codes + (code,),
                  system.equations + ("extra",))


def _mul_pairwise(ring, ia, ib):
    n = ring.modulus
    ar, ai = ring.re[ia], ring.im[ia]
    br, bi = ring.re[ib], ring.im[ib]
    return ring.encode_batch((ar @ br - ai @ bi) % n, (ar @ bi + ai @ br) % n)


def _one_minus(ring, idxs):
    n = ring.modulus
    er, ei = ring.reim(ring.one_index)
    return ring.encode_batch((er - ring.re[idxs]) % n, (ei - ring.im[idxs]) % n)


def _val(ring, idx):
    return ring.decode(int(idx))


# ------------------------------------------------------------------ runners

@dataclass
class TheoremRun:
    checked: int
    hypothesis_count: int
    violations: list = field(default_factory=list)


def _run_lem_commute(ring):
    # one-sided regularity plus (a x)* = x a forces a x = x a, in all four
    # one-sided variants, over every pair (a, x): the hypothesis count must
    # equal the hypothesis-and-conclusion count for every element
    N = ring.carrier_size
    variants = ["theo1-left", "x-ax2", "theo1-right", "x-x2a"]
    specs = []
    for v in variants:
        specs.append(SYSTEMS[v])
        specs.append(_append_code(SYSTEMS[v], op.AX_XA, "&commute"))
    all_idx = np.arange(N, dtype=np.int64)
    _, count = scan_raw(ring, all_idx, specs)
    violations = []
    hyp = int(count[:, 0::2].sum())
    for vi, v in enumerate(variants):
        bad_elems = np.flatnonzero(count[:, 2 * vi] != count[:, 2 * vi + 1])
        for a in bad_elems:
            a = int(a)
            pairs = solve_mask(ring, a, v) & ~solve_mask(ring, a, "commute")
            for x in np.flatnonzero(pairs):
                violations.append({"a": _val(ring, a), "x": _val(ring, int(x)),
                                   "variant": v,
                                   "detail": "hypothesis holds but a x != x a"})
    return TheoremRun(N * N * len(variants), hyp, violations)


def _run_ep_theo1(ring):
    # EP <=> solvability of a = x a^2 with (a x)* = x a <=> the right-sided
    # form; every witness x then has x a x equal to the group = MP inverse
    tables(ring, ["mp", "group", "theo1-left", "theo1-right"])  # one fused pass
    arr = ep_arrays(ring)
    t = tables(ring, ["theo1-left", "theo1-right"])
    xax = _cn_tables(
        ring,
        [("t1l-xax", _append_code(SYSTEMS["theo1-left"], op.XAX_CN, "*")),
         ("t1r-xax", _append_code(SYSTEMS["theo1-right"], op.XAX_CN, "*"))],
        arr["mp_first"], "mp")
    violations = []
    for a in range(ring.carrier_size):
        ep = bool(arr["ep"][a])
        left = t["theo1-left"][1][a] > 0
        right = t["theo1-right"][1][a] > 0
        if ep != left or ep != right:
            violations.append({"a": _val(ring, a), "is_ep": ep,
                               "left_solvable": bool(left),
                               "right_solvable": bool(right),
                               "detail": "equivalence fails"})
            continue
        if ep:
            if xax["t1l-xax"][1][a] != t["theo1-left"][1][a] \
                    or xax["t1r-xax"][1][a] != t["theo1-right"][1][a]:
                violations.append({"a": _val(ring, a),
                                   "detail": "some witness has x a x != mp inverse"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _unique_system_runner(name, check_first_is_mp=True):
    # EP <=> the system has exactly one solution (which is then the
    # group = MP inverse)
    def run(ring):
        arr = ep_arrays(ring)
        first, count = tables(ring, [name])[name]
        violations = []
        for a in range(ring.carrier_size):
            ep = bool(arr["ep"][a])
            if (count[a] == 1) != ep:
                violations.append({"a": _val(ring, a), "is_ep": ep,
                                   "witness_count": int(count[a]),
                                   "system": name,
                                   "detail": "unique-solvability mismatch"})
            elif ep and check_first_is_mp and first[a] != arr["mp_first"][a]:
                violations.append({"a": _val(ring, a), "system": name,
                                   "detail": "unique witness is not the mp inverse"})
        return TheoremRun(ring.carrier_size, ring.carrier_size, violations)
    return run


def _run_ep_eightway(ring):
    runs = [_unique_system_runner(f"eight-{i}")(ring) for i in range(2, 9)]
    violations = [v for r in runs for v in r.violations]
    return TheoremRun(7 * ring.carrier_size, ring.carrier_size, violations)


def _conditional_runner(hyp_name, hyp_from):
    # under the hypothesis, solvability of a x a = a with (a x)* = x a is
    # equivalent to EP
    def run(ring):
        arr = ep_arrays(ring)
        # one fused pass covers every conditional theorem's hypothesis
        t = tables(ring, ["axa-mixed", "p13", "p14", "in-a2r", "in-ra2"])
        mixed = t["axa-mixed"][1] > 0
        if hyp_from == "mp":
            holds = arr["mp_count"] > 0
        elif hyp_from == "group":
            holds = arr["g_count"] > 0
        else:
            holds = t[hyp_from][1] > 0
        violations = []
        for a in np.flatnonzero(holds):
            if bool(mixed[a]) != bool(arr["ep"][a]):
                violations.append({"a": _val(ring, int(a)),
                                   "hypothesis": hyp_name,
                                   "axa_mixed_solvable": bool(mixed[a]),
                                   "is_ep": bool(arr["ep"][a]),
                                   "detail": "conditional equivalence fails"})
        return TheoremRun(ring.carrier_size, int(holds.sum()), violations)
    return run


def _run_cep_thm34(ring):
    # CEP <=> central group invertible and MP invertible with the MP
    # inverse among the central group inverses
    arr = ep_arrays(ring)
    t = tables(ring, ["cep-def", "cgroup"])
    has_mp_cg = _cn_tables(
        ring, [("cgroup-xcn", _append_code(SYSTEMS["cgroup"], op.X_CN, "*"))],
        arr["mp_first"], "mp")["cgroup-xcn"]
    violations = []
    for a in range(ring.carrier_size):
        cep = t["cep-def"][1][a] > 0
        rhs = (t["cgroup"][1][a] > 0 and arr["mp_count"][a] > 0
               and has_mp_cg[1][a] > 0)
        if bool(cep) != bool(rhs):
            violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                               "central_group_and_mp": bool(rhs),
                               "detail": "equivalence fails"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_cep_prop36(ring):
    t = tables(ring, ["cep-def", "cep-inv"])
    violations = []
    for a in range(ring.carrier_size):
        cep = t["cep-def"][1][a] > 0
        if (t["cep-inv"][1][a] == 1) != cep:
            violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                               "cep_inverse_count": int(t["cep-inv"][1][a]),
                               "detail": "unique-inverse equivalence fails"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_cep_prop38(ring):
    # CEP <=> EP with central 1 - a^dagger a
    arr = ep_arrays(ring)
    t = tables(ring, ["cep-def"])
    center = ring.center_mask().astype(bool)
    violations = []
    has_mp = np.flatnonzero(arr["mp_count"] > 0)
    xa = _mul_pairwise(ring, arr["mp_first"][has_mp], has_mp)
    proj_central = np.zeros(ring.carrier_size, dtype=bool)
    proj_central[has_mp] = center[_one_minus(ring, xa)]
    for a in range(ring.carrier_size):
        cep = t["cep-def"][1][a] > 0
        rhs = bool(arr["ep"][a]) and bool(proj_central[a])
        if bool(cep) != rhs:
            violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                               "ep_with_central_projection": rhs,
                               "detail": "equivalence fails"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_cep_cor39(ring):
    # every EP element is CEP <=> projections and central projections agree
    arr = ep_arrays(ring)
    t = tables(ring, ["cep-def"])
    cep = t["cep-def"][1] > 0
    lhs = bool((~arr["ep"] | cep).all())
    rhs = bool((ring.projection_mask() == ring.central_projection_mask()).all())
    violations = []
    if lhs != rhs:
        violations.append({"every_ep_is_cep": lhs, "projections_all_central": rhs,
                           "detail": "ring-level biconditional fails"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_cep_clean310(ring):
    arr = ep_arrays(ring)
    t = tables(ring, ["cep-def"])
    ct = cl.cep_tables(ring)
    violations = []
    for a in range(ring.carrier_size):
        cep = t["cep-def"][1][a] > 0
        count = int(ct["clean_count"][a])
        if (count > 0) != cep:
            violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                               "decompositions": count,
                               "detail": "clean decomposition existence mismatch"})
        elif cep:
            if count != 1:
                violations.append({"a": _val(ring, a), "decompositions": count,
                                   "detail": "decomposition (u, p) not unique"})
            else:
                mp = int(arr["mp_first"][a])
                aat = ring.mul(a, mp)
                u = ring.sub(ring.add(a, aat), ring.one_index)
                p = ring.sub(ring.one_index, aat)
                if ct["clean_u"][a] != u or ct["clean_p"][a] != p:
                    violations.append({"a": _val(ring, a),
                                       "detail": "closed form disagrees with search"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_cep_uq311(ring):
    arr = ep_arrays(ring)
    t = tables(ring, ["cep-def"])
    ct = cl.cep_tables(ring)
    violations = []
    for a in range(ring.carrier_size):
        cep = t["cep-def"][1][a] > 0
        qc = int(ct["uq_qcount"][a])
        if (qc > 0) != cep:
            violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                               "distinct_q": qc,
                               "detail": "unit*projection existence mismatch"})
        elif cep:
            q = ring.mul(int(arr["mp_first"][a]), a)
            if qc != 1 or ct["uq_q"][a] != q:
                violations.append({"a": _val(ring, a), "distinct_q": qc,
                                   "detail": "projection factor not unique or not a^dagger a"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _tri_runner(key):
    def run(ring):
        t = tables(ring, ["cep-def"])
        ct = cl.cep_tables(ring)
        violations = []
        for a in range(ring.carrier_size):
            cep = t["cep-def"][1][a] > 0
            if bool(ct[key][a]) != bool(cep):
                violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                                   "tripotent_form_exists": bool(ct[key][a]),
                                   "detail": "tripotent characterization fails"})
        return TheoremRun(ring.carrier_size, ring.carrier_size, violations)
    return run


def _cep_set(ring):
    t = tables(ring, ["cep-def", "cep-inv"])
    members = np.flatnonzero(t["cep-def"][1] > 0)
    return members, t["cep-inv"][0]


def _run_cep_prod315(ring):
    # products of CEP elements are CEP, inverted by the reversed product
    members, z = _cep_set(ring)
    cep_mask = np.zeros(ring.carrier_size, dtype=bool)
    cep_mask[members] = True
    violations = []
    for a in members:
        ab = _mul_pairwise(ring, np.full(members.size, a), members)
        formula = _mul_pairwise(ring, z[members], np.full(members.size, z[a]))
        bad = ~cep_mask[ab] | (z[ab] != formula)
        for j in np.flatnonzero(bad):
            violations.append({"a": _val(ring, int(a)),
                               "b": _val(ring, int(members[j])),
                               "detail": "product not CEP or wrong inverse"})
    return TheoremRun(members.size ** 2, members.size ** 2, violations)


def _run_cep_pow316(ring):
    # powers of CEP elements are CEP, inverted by the matching power
    members, z = _cep_set(ring)
    cep_mask = np.zeros(ring.carrier_size, dtype=bool)
    cep_mask[members] = True
    violations = []
    checked = 0
    for a in members:
        a = int(a)
        x = int(z[a])
        an, xn = a, x
        seen = set()
        n = 1
        while (an, xn) not in seen:
            seen.add((an, xn))
            checked += 1
            if not cep_mask[an] or z[an] != xn:
                violations.append({"a": _val(ring, a), "n": n,
                                   "detail": "power not CEP or wrong inverse"})
                break
            an = ring.mul(an, a)
            xn = ring.mul(xn, x)
            n += 1
    return TheoremRun(checked, checked, violations)


def _run_cep_sum318(ring):
    # orthogonal sums of CEP elements are CEP, inverted by the sum
    members, z = _cep_set(ring)
    cep_mask = np.zeros(ring.carrier_size, dtype=bool)
    cep_mask[members] = True
    zero = ring.zero_index
    violations = []
    hyp = 0
    for a in members:
        a = int(a)
        x = int(z[a])
        xb = _mul_pairwise(ring, np.full(members.size, x), members)
        bx = _mul_pairwise(ring, members, np.full(members.size, x))
        ya = _mul_pairwise(ring, z[members], np.full(members.size, a))
        ay = _mul_pairwise(ring, np.full(members.size, a), z[members])
        orth = (xb == zero) & (bx == zero) & (ya == zero) & (ay == zero)
        for j in np.flatnonzero(orth):
            b = int(members[j])
            hyp += 1
            s = ring.add(a, b)
            formula = ring.add(x, int(z[b]))
            if not cep_mask[s] or z[s] != formula:
                violations.append({"a": _val(ring, a), "b": _val(ring, b),
                                   "detail": "orthogonal sum not CEP or wrong inverse"})
    return TheoremRun(members.size ** 2, hyp, violations)


def _run_cep_peirce317(ring):
    # CEP <=> invertible inside the corner ring of some central projection,
    # with the corner inverse equal to the CEP-inverse
    t = tables(ring, ["cep-def", "cep-inv"])
    ct = cl.cep_tables(ring)
    all_idx = np.arange(ring.carrier_size, dtype=np.int64)
    violations = []
    for a in range(ring.carrier_size):
        cep = t["cep-def"][1][a] > 0
        if bool(ct["peirce_ok"][a]) != bool(cep):
            violations.append({"a": _val(ring, a), "is_cep": bool(cep),
                               "corner_invertible": bool(ct["peirce_ok"][a]),
                               "detail": "corner characterization fails"})
    for p in np.flatnonzero(ring.central_projection_mask()):
        p = int(p)
        pap = cl._mul_left(ring, p, cl._mul_right(ring, all_idx, p))
        first, count = scan_raw(ring, all_idx, [SYSTEMS["corner-inverse"]],
                                cn_idx=np.full(ring.carrier_size, p, dtype=np.int64))
        valid = (count[:, 0] > 0) & (pap == all_idx)
        for a in np.flatnonzero(valid):
            if count[a, 0] != 1 or first[a, 0] != t["cep-inv"][0][a]:
                violations.append({"a": _val(ring, int(a)), "p": _val(ring, p),
                                   "detail": "corner inverse differs from CEP-inverse"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_cep_ord321(ring):
    # the four formulations of the CEP relation agree on every (a, b)
    members, z = _cep_set(ring)
    N = ring.carrier_size
    all_idx = np.arange(N, dtype=np.int64)
    cp = [int(p) for p in np.flatnonzero(ring.central_projection_mask())]
    corner_ok = {}
    for p in cp:
        pap = cl._mul_left(ring, p, cl._mul_right(ring, all_idx, p))
        _, count = scan_raw(ring, all_idx, [SYSTEMS["corner-inverse"]],
                            cn_idx=np.full(N, p, dtype=np.int64))
        corner_ok[p] = (count[:, 0] > 0) & (pap == all_idx)
    violations = []
    for a in members:
        a = int(a)
        x = int(z[a])
        xa = ring.mul(x, a)
        ax = ring.mul(a, x)
        m1 = cl._mul_left(ring, xa, all_idx) == a           # a = x a b
        m2 = cl._mul_left(ring, x, all_idx) == xa           # x a = x b
        m3 = cl._mul_right(ring, all_idx, x) == ax          # a x = b x
        m4 = np.zeros(N, dtype=bool)
        one = ring.one_index
        for p in cp:
            if not corner_ok[p][a]:
                continue
            q = ring.sub(one, p)
            pb = cl._mul_left(ring, p, all_idx)
            pbp = cl._mul_right(ring, pb, p)
            pbq = cl._mul_right(ring, pb, q)
            qbp = cl._mul_right(ring, cl._mul_left(ring, q, all_idx), p)
            m4 |= (pbp == a) & (pbq == ring.zero_index) & (qbp == ring.zero_index)
        agree = (m1 == m2) & (m1 == m3) & (m1 == m4)
        for b in np.flatnonzero(~agree):
            violations.append({"a": _val(ring, a), "b": _val(ring, int(b)),
                               "forms": [bool(m1[b]), bool(m2[b]),
                                         bool(m3[b]), bool(m4[b])],
                               "detail": "order formulations disagree"})
    return TheoremRun(members.size * N, members.size * N, violations)


def _run_cep_order322(ring):
    rep = cl.verify_partial_order(ring)
    checked = rep.reflexive_checks + rep.antisymmetry_checks + rep.transitivity_checks
    return TheoremRun(checked, checked, list(rep.violations))


def _run_dmp_main(ring):
    # the Hermitian a a^D test, the unique-solution system and the
    # least-EP-power definition all agree; the system witness is a^D
    violations = []
    for a in range(ring.carrier_size):
        e = Elem(ring, a)
        herm, _ = cl.is_star_dmp(e, "dmp.herm")
        eppow, n_min = cl.is_star_dmp(e, "dmp.eppow")
        sys_ok, n_sys = cl.is_star_dmp(e, "dmp.sys")
        if not (herm == eppow == sys_ok):
            violations.append({"a": _val(ring, a),
                               "herm": herm, "ep_power": eppow, "system": sys_ok,
                               "detail": "characterizations disagree"})
            continue
        if sys_ok:
            d = inv.drazin_inverse(e)
            first, count = solve_first_count(e, "dmp-sys", n=n_sys)
            if count != 1 or first != d.inverse.index:
                violations.append({"a": _val(ring, a), "n": n_sys,
                                   "witness_count": count,
                                   "detail": "system witness not unique or not a^D"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_dmp_clean43(ring):
    violations = []
    for a in range(ring.carrier_size):
        e = Elem(ring, a)
        dmp, _ = cl.is_star_dmp(e, "dmp.herm")
        n_exp = max(1, inv.drazin_index(e))
        pairs = cl._dmp_clean_pairs(e, n_exp)
        if bool(pairs) != dmp:
            violations.append({"a": _val(ring, a), "is_star_dmp": dmp,
                               "decompositions": len(pairs),
                               "detail": "clean power decomposition mismatch"})
        elif dmp:
            x = inv.drazin_inverse(e).inverse.index
            an = ring.power(a, n_exp)
            ax = ring.mul(a, x)
            u = ring.sub(ring.add(an, ax), ring.one_index)
            p = ring.sub(ring.one_index, ax)
            if pairs != [(u, p)]:
                violations.append({"a": _val(ring, a), "pairs": len(pairs),
                                   "detail": "(u, p) not unique or not the closed form"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


def _run_dmp_uq44(ring):
    violations = []
    for a in range(ring.carrier_size):
        e = Elem(ring, a)
        dmp, _ = cl.is_star_dmp(e, "dmp.herm")
        n_exp = max(1, inv.drazin_index(e))
        pairs = cl._dmp_uq_pairs(e, n_exp)
        qs = sorted({q for _, q in pairs})
        if bool(pairs) != dmp:
            violations.append({"a": _val(ring, a), "is_star_dmp": dmp,
                               "decompositions": len(pairs),
                               "detail": "unit*projection power decomposition mismatch"})
        elif dmp:
            q = ring.mul(a, inv.drazin_inverse(e).inverse.index)
            if qs != [q]:
                violations.append({"a": _val(ring, a), "distinct_q": len(qs),
                                   "detail": "projection factor not unique or not a a^D"})
    return TheoremRun(ring.carrier_size, ring.carrier_size, violations)


# ----------------------------------------------------------------- registry

@dataclass(frozen=True)
class TheoremDef:
    id: str
    description: str
    runner: object
    pair_guarded: bool = False


THEOREMS = {t.id: t for t in [
    TheoremDef("lem-commute",
               "one-sided regularity with (a x)* = x a forces a x = x a "
               "(four variants, pair-exhaustive)",
               _run_lem_commute, pair_guarded=True),
    TheoremDef("ep-theo1",
               "EP <=> exists x: a = x a^2, (a x)* = x a <=> the right-sided "
               "form; witnesses give x a x = group = MP inverse",
               _run_ep_theo1),
    TheoremDef("ep-prop1",
               "EP <=> unique x with a x a = a, x = a x^2, (a x)* = x a",
               _unique_system_runner("q2")),
    TheoremDef("ep-eightway",
               "EP <=> unique solvability of each of the seven one-sided "
               "variants",
               _run_ep_eightway),
    TheoremDef("ep-13", "for {1,3}-invertible a: mixed-star regularity <=> EP",
               _conditional_runner("h13", "p13")),
    TheoremDef("ep-14", "for {1,4}-invertible a: mixed-star regularity <=> EP",
               _conditional_runner("h14", "p14")),
    TheoremDef("ep-dag", "for MP-invertible a: mixed-star regularity <=> EP",
               _conditional_runner("hdag", "mp")),
    TheoremDef("ep-a2r", "for a in a^2 R: mixed-star regularity <=> EP",
               _conditional_runner("h-a2R", "in-a2r")),
    TheoremDef("ep-ra2", "for a in R a^2: mixed-star regularity <=> EP",
               _conditional_runner("h-Ra2", "in-ra2")),
    TheoremDef("ep-sharp", "for group-invertible a: mixed-star regularity <=> EP",
               _conditional_runner("hsharp", "group")),
    TheoremDef("cep-thm34",
               "CEP <=> central group invertible and MP invertible with "
               "matching inverses",
               _run_cep_thm34),
    TheoremDef("cep-prop36", "CEP <=> the CEP-inverse system has a unique solution",
               _run_cep_prop36),
    TheoremDef("cep-prop38", "CEP <=> EP and 1 - a^dagger a is central",
               _run_cep_prop38),
    TheoremDef("cep-cor39",
               "every EP element is CEP <=> all projections are central",
               _run_cep_cor39),
    TheoremDef("cep-clean310",
               "CEP <=> a = u + p with u a unit, p a central projection, "
               "u p = -p; (u, p) unique",
               _run_cep_clean310),
    TheoremDef("cep-uq311",
               "CEP <=> a = u q with u a unit, q a central projection; q unique",
               _run_cep_uq311),
    TheoremDef("cep-tri-sum",
               "CEP <=> a = u + p with p tripotent, p^2 central projection, "
               "u p^2 = -p",
               _tri_runner("trisum_ok")),
    TheoremDef("cep-tri-prod",
               "CEP <=> a = u q^2 with q tripotent and q^2 a central projection",
               _tri_runner("triprod_ok")),
    TheoremDef("cep-prod315",
               "products of CEP elements are CEP with reversed-product inverse",
               _run_cep_prod315),
    TheoremDef("cep-pow316",
               "powers of CEP elements are CEP with matching power inverse",
               _run_cep_pow316),
    TheoremDef("cep-sum318",
               "orthogonal sums of CEP elements are CEP with summed inverse",
               _run_cep_sum318),
    TheoremDef("cep-peirce317",
               "CEP <=> invertible in the corner ring of a central projection",
               _run_cep_peirce317),
    TheoremDef("cep-ord321",
               "the four formulations of the CEP relation agree",
               _run_cep_ord321),
    TheoremDef("cep-order322",
               "the CEP relation is a partial order on the CEP elements",
               _run_cep_order322, pair_guarded=True),
    TheoremDef("dmp-lemma41-thm42",
               "*-DMP via Hermitian a a^D, via the unique-witness system, and "
               "via an EP power all agree",
               _run_dmp_main),
    TheoremDef("dmp-clean43",
               "*-DMP <=> a^n = u + p with commuting projection p, u p = p u = -p; "
               "(u, p) unique",
               _run_dmp_clean43),
    TheoremDef("dmp-uq44",
               "*-DMP <=> a^n = u q = q u with commuting projection q; q unique",
               _run_dmp_uq44),
]}


@dataclass(frozen=True)
class TheoremReport:
    ring_spec: str
    theorem_id: str
    elements_checked: int
    hypothesis_count: int
    violations: list
    elapsed_ms: float
    verdict: str

    def to_dict(self):
        return {"ring": self.ring_spec, "theorem": self.theorem_id,
                "elements_checked": self.elements_checked,
                "hypothesis_count": self.hypothesis_count,
                "violations": list(self.violations),
                "verdict": self.verdict}


def run_theorem(ring: StarRing, theorem_id: str) -> TheoremReport:
    """Run one registry entry over a ring."""
    try:
        t = THEOREMS[theorem_id]
    except KeyError:
        raise UnknownIdError(
            f"unknown theorem {theorem_id!r}; known: {', '.join(sorted(THEOREMS))}") from None
    if t.pair_guarded and ring.carrier_size > PAIR_GUARD:
        raise BoundExceededError(
            f"{theorem_id} is pair/triple-exhaustive; carrier "
            f"{ring.carrier_size} exceeds the {PAIR_GUARD} guard")
    start = time.perf_counter()
    run = t.runner(ring)
    elapsed = (time.perf_counter() - start) * 1000.0
    if run.violations:
        verdict = "refuted"
    elif run.hypothesis_count == 0:
        verdict = "vacuous"
    else:
        verdict = "verified"
    return TheoremReport(ring.spec(), theorem_id, run.checked,
                         run.hypothesis_count, run.violations, elapsed, verdict)


# ------------------------------------------------------------------- survey

@dataclass(frozen=True)
class SurveyReport:
    ring_spec: str
    carrier_size: int
    units: int
    projections: int
    central_projections: int
    group_invertible: int
    mp_invertible: int
    ep: int
    cep: int
    star_dmp: int
    core_invertible: int

    @property
    def invariants_ok(self):
        return (self.cep <= self.ep <= self.star_dmp <= self.carrier_size
                and self.ep <= min(self.group_invertible, self.mp_invertible))

    def to_dict(self):
        return {"ring": self.ring_spec, "carrier_size": self.carrier_size,
                "units": self.units, "projections": self.projections,
                "central_projections": self.central_projections,
                "group_invertible": self.group_invertible,
                "mp_invertible": self.mp_invertible,
                "ep": self.ep, "cep": self.cep, "star_dmp": self.star_dmp,
                "core_invertible": self.core_invertible,
                "invariants_ok": self.invariants_ok}


def survey(ring: StarRing) -> SurveyReport:
    """Headcount of the distinguished classes of a ring."""
    arr = ep_arrays(ring)
    t = tables(ring, ["cep-def", "core"])
    dmp = 0
    for a in range(ring.carrier_size):
        ok, _ = cl.is_star_dmp(Elem(ring, a), "dmp.herm")
        dmp += ok
    return SurveyReport(
        ring.spec(), ring.carrier_size,
        int((ring.units_table() >= 0).sum()),
        int(ring.projection_mask().sum()),
        int(ring.central_projection_mask().sum()),
        int((arr["g_count"] > 0).sum()),
        int((arr["mp_count"] > 0).sum()),
        int(arr["ep"].sum()),
        int((t["cep-def"][1] > 0).sum()),
        int(dmp),
        int((t["core"][1] > 0).sum()))


# ----------------------------------------------------------- counterexamples

CLAIMS = {
    "axa-implies-ep":
        "solvability of a x a = a with (a x)* = x a implies EP (refutable)",
    "x-ax2-implies-ep":
        "solvability of x = a x^2 with (a x)* = x a implies EP (refutable)",
}

_CLAIM_SYSTEM = {"axa-implies-ep": "axa-mixed", "x-ax2-implies-ep": "x-ax2"}


@dataclass(frozen=True)
class CounterexampleReport:
    ring_spec: str
    claim_id: str
    checked: int
    findings: list
    elapsed_ms: float

    def to_dict(self):
        return {"ring": self.ring_spec, "claim": self.claim_id,
                "elements_checked": self.checked,
                "findings": list(self.findings),
                "found": bool(self.findings)}


def find_counterexamples(ring: StarRing, claim_id: str,
                         find_all: bool = False) -> CounterexampleReport:
    """First (or all) elements satisfying a refutable claim's hypothesis
    while failing EP, with the witness x in canonical order."""
    if claim_id not in CLAIMS:
        raise UnknownIdError(
            f"unknown claim {claim_id!r}; known: {', '.join(sorted(CLAIMS))}")
    start = time.perf_counter()
    sys_name = _CLAIM_SYSTEM[claim_id]
    arr = ep_arrays(ring)
    first, count = tables(ring, [sys_name])[sys_name]
    hits = np.flatnonzero((count > 0) & ~arr["ep"])
    findings = []
    for a in hits:
        findings.append({"element": _val(ring, int(a)),
                         "element_index": int(a),
                         "witness_x": _val(ring, int(first[a])),
                         "witness_x_index": int(first[a]),
                         "witness_count": int(count[a])})
        if not find_all:
            break
    elapsed = (time.perf_counter() - start) * 1000.0
    return CounterexampleReport(ring.spec(), claim_id, ring.carrier_size,
                                findings, elapsed)
