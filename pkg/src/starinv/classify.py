"""EP, central-EP and *-DMP classification through independent characterizations.

Every predicate is implemented once per proved characterization; the
umbrella entry points run all of them and refuse to answer if any two
disagree, because the equivalences are exactly what this package exists to
check.  Decomposition constructors follow the closed forms from the
equivalence proofs and audit the uniqueness claims by exhaustive search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import inverses as inv
from .errors import (BoundExceededError, InvalidArgumentError,
                     MethodDisagreementError, PreconditionError)
from .rings import Elem, StarRing
from .systems import (CORNER, _commutes_with_all, scan_raw,
                      solve_first_count, solve_mask)

PAIR_GUARD = 2000


# ------------------------------------------------------------ subset helpers

def _mul_right(ring, idxs, j):
    """Indices of v*b for a batch of v indices and a fixed b."""
    n = ring.modulus
    br, bi = ring.reim(j)
    rr = (ring.re[idxs] @ br - ring.im[idxs] @ bi) % n
    ri = (ring.re[idxs] @ bi + ring.im[idxs] @ br) % n
    return ring.encode_batch(rr, ri)


def _mul_left(ring, j, idxs):
    n = ring.modulus
    br, bi = ring.reim(j)
    rr = (br @ ring.re[idxs] - bi @ ring.im[idxs]) % n
    ri = (br @ ring.im[idxs] + bi @ ring.re[idxs]) % n
    return ring.encode_batch(rr, ri)


def _square_indices(ring, idxs):
    n = ring.modulus
    r, i = ring.re[idxs], ring.im[idxs]
    return ring.encode_batch((r @ r - i @ i) % n, (r @ i + i @ r) % n)


def _tripotent_central_square(ring):
    """Tripotents whose square is a central projection (cached)."""
    hit = ring._cache.get("tri_central_sq")
    if hit is None:
        tri = np.flatnonzero(ring.tripotent_mask())
        sq = _square_indices(ring, tri)
        hit = tri[ring.central_projection_mask()[sq]]
        hit.setflags(write=False)
        ring._cache["tri_central_sq"] = hit
    return hit


def cep_tables(ring: StarRing):
    """Ring-wide boolean tables for the decomposition-style CEP criteria.

    keys: clean_ok/clean_count (a = u + p with up = -p over units x central
    projections), uq_ok/uq_qcount (a = u q), trisum_ok, triprod_ok,
    peirce_ok, and the witnessing projection index per element where one
    exists (-1 otherwise).
    """
    hit = ring._cache.get("cep_tables")
    if hit is not None:
        return hit
    N = ring.carrier_size
    units = ring.units_table()
    cp = np.flatnonzero(ring.central_projection_mask())
    all_idx = np.arange(N, dtype=np.int64)

    clean_count = np.zeros(N, dtype=np.int64)
    clean_u = np.full(N, -1, dtype=np.int64)
    clean_p = np.full(N, -1, dtype=np.int64)
    # a = u + p forces u = a - p, so it suffices to scan the projections
    for p in cp:
        neg_p = ring.neg(int(p))
        u_idx = _sub_batch_all(ring, int(p))
        ok = units[u_idx] >= 0
        up = np.full(N, -1, dtype=np.int64)
        up[ok] = _mul_right(ring, u_idx[ok], int(p))
        ok &= up == neg_p
        clean_count += ok
        fresh = ok & (clean_u < 0)
        clean_u[fresh] = u_idx[fresh]
        clean_p[fresh] = p

    uq_qcount = np.zeros(N, dtype=np.int64)
    uq_u = np.full(N, -1, dtype=np.int64)
    uq_q = np.full(N, -1, dtype=np.int64)
    unit_idx = np.flatnonzero(units >= 0)
    for q in cp:
        prods = _mul_right(ring, unit_idx, int(q))
        hit_mask = np.zeros(N, dtype=bool)
        hit_mask[prods] = True
        uq_qcount += hit_mask
        fresh = hit_mask & (uq_q < 0)
        uq_q[fresh] = q
        first_u = np.full(N, -1, dtype=np.int64)
        for u, s in zip(unit_idx[::-1], prods[::-1]):
            first_u[s] = u
        uq_u[fresh] = first_u[fresh]

    tri = _tripotent_central_square(ring)
    trisum_ok = np.zeros(N, dtype=bool)
    for p in tri:
        p2 = ring.mul(int(p), int(p))
        neg_p = ring.neg(int(p))
        u_idx = _sub_batch_all(ring, int(p))
        ok = units[u_idx] >= 0
        up2 = np.full(N, -1, dtype=np.int64)
        up2[ok] = _mul_right(ring, u_idx[ok], p2)
        trisum_ok |= ok & (up2 == neg_p)

    triprod_ok = np.zeros(N, dtype=bool)
    for q in tri:
        q2 = ring.mul(int(q), int(q))
        prods = _mul_right(ring, unit_idx, q2)
        triprod_ok[prods] = True

    peirce_ok = np.zeros(N, dtype=bool)
    peirce_p = np.full(N, -1, dtype=np.int64)
    peirce_x = np.full(N, -1, dtype=np.int64)
    for p in cp:
        pap = _mul_left(ring, int(p), _mul_right(ring, all_idx, int(p)))
        first, count = scan_raw(ring, all_idx, [CORNER],
                                cn_idx=np.full(N, p, dtype=np.int64))
        ok = (count[:, 0] > 0) & (pap == all_idx)
        peirce_ok |= ok
        fresh = ok & (peirce_p < 0)
        peirce_p[fresh] = p
        peirce_x[fresh] = first[fresh, 0]

    hit = {"clean_count": clean_count, "clean_u": clean_u, "clean_p": clean_p,
           "uq_qcount": uq_qcount, "uq_u": uq_u, "uq_q": uq_q,
           "trisum_ok": trisum_ok, "triprod_ok": triprod_ok,
           "peirce_ok": peirce_ok, "peirce_p": peirce_p, "peirce_x": peirce_x}
    ring._cache["cep_tables"] = hit
    return hit


def _sub_batch_all(ring, p):
    """Indices of a - p over the whole carrier."""
    n = ring.modulus
    pr, pi = ring.reim(p)
    return ring.encode_batch((ring.re - pr) % n, (ring.im - pi) % n)


# ------------------------------------------------------------------ EP

def _ep_def(a: Elem) -> bool:
    mp = inv.mp_inverse(a)
    g = inv.group_inverse(a)
    return mp.exists and g.exists and mp.inverse == g.inverse


def _ep_sharpstar(a: Elem) -> bool:
    g = inv.group_inverse(a)
    if not g.exists:
        return False
    h = a.ring.mul(g.inverse.index, a.index)
    return a.ring.star(h) == h


def _solvable(name):
    return lambda a: solve_first_count(a, name)[0] >= 0


def _unique(name):
    return lambda a: solve_first_count(a, name)[1] == 1


EP_METHODS = {
    "ep.def": _ep_def,
    "ep.xu": _solvable("ep-xu"),
    "ep.t1l": _solvable("theo1-left"),
    "ep.t1r": _solvable("theo1-right"),
    "ep.sharpstar": _ep_sharpstar,
    **{f"ep.eight.{i}": _unique(f"eight-{i}") for i in range(2, 9)},
}


def is_ep(a: Elem, method: str | None = None) -> bool:
    """EP verdict; with no method given, every characterization must agree."""
    if method is not None:
        try:
            return EP_METHODS[method](a)
        except KeyError:
            raise InvalidArgumentError(f"unknown EP method {method!r}") from None
    return _agree(a, EP_METHODS, "EP")


def _agree(a, methods, label):
    verdicts = {name: fn(a) for name, fn in methods.items()}
    values = set(verdicts.values())
    if len(values) > 1:
        raise MethodDisagreementError(
            f"{label} characterizations disagree on {a!r}: {verdicts}")
    return values.pop()


HYPOTHESES = ("h13", "h14", "hdag", "h-a2R", "h-Ra2", "hsharp")


@dataclass(frozen=True)
class ConditionalVerdict:
    hypothesis: str
    hypothesis_holds: bool
    axa_mixed_solvable: bool
    is_ep: bool

    @property
    def implication_holds(self):
        # hypothesis and solvability together must force EP (and EP always
        # provides a witness, so under the hypothesis the two agree)
        if not self.hypothesis_holds:
            return True
        return self.axa_mixed_solvable == self.is_ep

    def to_dict(self):
        return {"hypothesis": self.hypothesis,
                "hypothesis_holds": self.hypothesis_holds,
                "axa_mixed_solvable": self.axa_mixed_solvable,
                "is_ep": self.is_ep,
                "implication_holds": self.implication_holds}


def is_ep_conditional(a: Elem, hypothesis: str) -> ConditionalVerdict:
    """Evaluate one conditional EP characterization.

    The hypothesis is established by a solver call, never assumed: h13/h14
    are {1,3}/{1,4}-invertibility, hdag Moore-Penrose invertibility,
    h-a2R / h-Ra2 one-sided regularity, hsharp group invertibility.
    """
    from .systems import solvable_left_right
    if hypothesis == "h13":
        holds = solve_first_count(a, "p13")[0] >= 0
    elif hypothesis == "h14":
        holds = solve_first_count(a, "p14")[0] >= 0
    elif hypothesis == "hdag":
        holds = inv.mp_inverse(a).exists
    elif hypothesis == "h-a2R":
        holds = solvable_left_right(a)[0]
    elif hypothesis == "h-Ra2":
        holds = solvable_left_right(a)[1]
    elif hypothesis == "hsharp":
        holds = inv.group_inverse(a).exists
    else:
        raise InvalidArgumentError(
            f"unknown hypothesis {hypothesis!r}; expected one of {HYPOTHESES}")
    mixed = solve_first_count(a, "axa-mixed")[0] >= 0
    return ConditionalVerdict(hypothesis, holds, mixed, _ep_def(a))


# ------------------------------------------------------------------ CEP

def _cep_cgmp(a: Elem) -> bool:
    # central group invertible, MP invertible, and the MP inverse is a
    # central group inverse
    mp = inv.mp_inverse(a)
    if not mp.exists:
        return False
    mask = solve_mask(a.ring, a.index, "cgroup")
    return bool(mask.any()) and bool(mask[mp.inverse.index])


def _cep_epcentral(a: Elem) -> bool:
    mp = inv.mp_inverse(a)
    if not (mp.exists and _ep_def(a)):
        return False
    xa = a.ring.mul(mp.inverse.index, a.index)
    p = a.ring.sub(a.ring.one_index, xa)
    return _commutes_with_all(a.ring, p)


CEP_METHODS = {
    "cep.def": _solvable("cep-def"),
    "cep.cgmp": _cep_cgmp,
    "cep.uniquez": _unique("cep-inv"),
    "cep.epcentral": _cep_epcentral,
    "cep.clean": lambda a: bool(cep_tables(a.ring)["clean_count"][a.index] > 0),
    "cep.uq": lambda a: bool(cep_tables(a.ring)["uq_qcount"][a.index] > 0),
    "cep.trisum": lambda a: bool(cep_tables(a.ring)["trisum_ok"][a.index]),
    "cep.triprod": lambda a: bool(cep_tables(a.ring)["triprod_ok"][a.index]),
    "cep.peirce": lambda a: bool(cep_tables(a.ring)["peirce_ok"][a.index]),
}


def is_cep(a: Elem, method: str | None = None) -> bool:
    """Central-EP verdict; umbrella call asserts all-method agreement."""
    if method is not None:
        try:
            return CEP_METHODS[method](a)
        except KeyError:
            raise InvalidArgumentError(f"unknown CEP method {method!r}") from None
    return _agree(a, CEP_METHODS, "CEP")


# ------------------------------------------------------------------ *-DMP

def _dmp_eppow(a: Elem):
    rho, period, seq = a.ring.power_trace(a.index)
    for n in range(1, rho + period + 1):
        if _ep_def(Elem(a.ring, seq[n] if n < len(seq) else
                        a.ring.power(a.index, n))):
            return True, n
    return False, None


def _dmp_herm(a: Elem):
    d = inv.drazin_inverse(a)
    if not d.exists:
        return False, None
    h = a.ring.mul(a.index, d.inverse.index)
    return a.ring.star(h) == h, None


def _dmp_sys(a: Elem):
    # a witness at exponent n works at every larger one, so the scan is
    # complete at max(ind(a), 1); the minimal solvable n is reported
    bound = max(1, inv.drazin_index(a))
    for n in range(1, bound + 1):
        if solve_first_count(a, "dmp-sys", n=n)[0] >= 0:
            return True, n
    return False, None


def _dmp_clean(a: Elem):
    n_exp = max(1, inv.drazin_index(a))
    found = _dmp_clean_pairs(a, n_exp)
    return bool(found), n_exp if found else None


def _dmp_clean_pairs(a: Elem, n_exp: int):
    """All (u, p) with a^n = u + p, u a unit, p a projection commuting with
    a, u p = p u = -p."""
    ring = a.ring
    an = ring.power(a.index, n_exp)
    units = ring.units_table()
    out = []
    for p in np.flatnonzero(ring.projection_mask()):
        p = int(p)
        u = ring.sub(an, p)
        if units[u] < 0:
            continue
        if ring.mul(p, a.index) != ring.mul(a.index, p):
            continue
        neg_p = ring.neg(p)
        if ring.mul(u, p) == neg_p and ring.mul(p, u) == neg_p:
            out.append((u, p))
    return out


def _dmp_uq(a: Elem):
    n_exp = max(1, inv.drazin_index(a))
    found = _dmp_uq_pairs(a, n_exp)
    return bool(found), n_exp if found else None


def _dmp_uq_pairs(a: Elem, n_exp: int):
    """All (u, q) with a^n = u q = q u, u a unit, q a projection commuting
    with a."""
    ring = a.ring
    an = ring.power(a.index, n_exp)
    unit_idx = np.flatnonzero(ring.units_table() >= 0)
    out = []
    for q in np.flatnonzero(ring.projection_mask()):
        q = int(q)
        if ring.mul(a.index, q) != ring.mul(q, a.index):
            continue
        uq = _mul_right(ring, unit_idx, q)
        qu = _mul_left(ring, q, unit_idx)
        for u in unit_idx[(uq == an) & (qu == an)]:
            out.append((int(u), q))
    return out


DMP_METHODS = {
    "dmp.eppow": _dmp_eppow,
    "dmp.herm": _dmp_herm,
    "dmp.sys": _dmp_sys,
    "dmp.clean": _dmp_clean,
    "dmp.uq": _dmp_uq,
}


def is_star_dmp(a: Elem, method: str | None = None):
    """(verdict, minimal index) for *-DMP membership.

    The minimal index comes from the least power that is EP; the other
    methods only need to agree on the verdict.
    """
    if method is not None:
        try:
            return DMP_METHODS[method](a)
        except KeyError:
            raise InvalidArgumentError(f"unknown *-DMP method {method!r}") from None
    verdicts = {name: fn(a) for name, fn in DMP_METHODS.items()}
    flags = {v[0] for v in verdicts.values()}
    if len(flags) > 1:
        raise MethodDisagreementError(
            f"*-DMP characterizations disagree on {a!r}: {verdicts}")
    return flags.pop(), verdicts["dmp.eppow"][1]


# -------------------------------------------------------------- decompositions

DECOMPOSITION_KINDS = ("clean-cep", "unit-projection", "tripotent-sum",
                       "tripotent-product", "dmp-clean", "dmp-unit-projection")


@dataclass(frozen=True)
class Decomposition:
    kind: str
    parts: dict
    exponent: int | None = None

    def to_dict(self):
        d = {"kind": self.kind,
             "parts": {k: v.value for k, v in self.parts.items()}}
        if self.exponent is not None:
            d["exponent"] = self.exponent
        return d


def decompose(a: Elem, kind: str) -> Decomposition:
    """Construct the named decomposition, auditing the uniqueness claims."""
    ring = a.ring
    if kind in ("clean-cep", "unit-projection", "tripotent-sum", "tripotent-product"):
        if not is_cep(a, "cep.def"):
            raise PreconditionError(
                f"{kind} requires a central-EP element", method="cep.def")
        mp = inv.mp_inverse(a).inverse
        if kind in ("clean-cep", "tripotent-sum"):
            aat = ring.mul(a.index, mp.index)
            u = ring.sub(ring.add(a.index, aat), ring.one_index)
            p = ring.sub(ring.one_index, aat)
            if kind == "clean-cep":
                count = int(cep_tables(ring)["clean_count"][a.index])
                if count != 1 or cep_tables(ring)["clean_u"][a.index] != u:
                    raise MethodDisagreementError(
                        f"clean decomposition audit failed for {a!r}: count={count}")
            return Decomposition(kind, {"u": ring.elem(u), "p": ring.elem(p)})
        ata = ring.mul(mp.index, a.index)
        u = ring.sub(ring.add(a.index, ata), ring.one_index)
        q = ata
        if kind == "unit-projection":
            qcount = int(cep_tables(ring)["uq_qcount"][a.index])
            if qcount != 1 or cep_tables(ring)["uq_q"][a.index] != q:
                raise MethodDisagreementError(
                    f"unit-projection audit failed for {a!r}: distinct q = {qcount}")
        return Decomposition(kind, {"u": ring.elem(u), "q": ring.elem(q)})
    if kind in ("dmp-clean", "dmp-unit-projection"):
        ok, _ = is_star_dmp(a, "dmp.herm")
        if not ok:
            raise PreconditionError(
                f"{kind} requires a *-DMP element", method="dmp.herm")
        n_exp = max(1, inv.drazin_index(a))
        x = inv.drazin_inverse(a).inverse
        an = ring.power(a.index, n_exp)
        ax = ring.mul(a.index, x.index)
        u = ring.sub(ring.add(an, ax), ring.one_index)
        if kind == "dmp-clean":
            p = ring.sub(ring.one_index, ax)
            pairs = _dmp_clean_pairs(a, n_exp)
            if pairs != [(u, p)]:
                raise MethodDisagreementError(
                    f"dmp-clean audit failed for {a!r}: pairs={pairs}")
            return Decomposition(kind, {"u": ring.elem(u), "p": ring.elem(p)},
                                 exponent=n_exp)
        q = ax
        pairs = _dmp_uq_pairs(a, n_exp)
        if sorted({qq for _, qq in pairs}) != [q]:
            raise MethodDisagreementError(
                f"dmp-unit-projection audit failed for {a!r}: pairs={pairs}")
        return Decomposition(kind, {"u": ring.elem(u), "q": ring.elem(q)},
                             exponent=n_exp)
    raise InvalidArgumentError(
        f"unknown decomposition kind {kind!r}; expected one of {DECOMPOSITION_KINDS}")


# ------------------------------------------------------------------ Peirce

@dataclass(frozen=True)
class PeirceBlocks:
    p: Elem
    a11: Elem
    a12: Elem
    a21: Elem
    a22: Elem

    def to_dict(self):
        return {"p": self.p.value, "a11": self.a11.value, "a12": self.a12.value,
                "a21": self.a21.value, "a22": self.a22.value}


def peirce(a: Elem, p: Elem) -> PeirceBlocks:
    """Four-block split of ``a`` relative to an idempotent ``p``."""
    ring = a.ring
    if p.ring != ring:
        raise InvalidArgumentError("p must live in the same ring as a")
    if ring.mul(p.index, p.index) != p.index:
        raise InvalidArgumentError("p must be idempotent")
    q = ring.sub(ring.one_index, p.index)
    mul = ring.mul
    blocks = [mul(mul(l, a.index), r)
              for l in (p.index, q) for r in (p.index, q)]
    a11, a12, a21, a22 = blocks
    # the split is exact: the four blocks sum back to a
    total = ring.add(ring.add(a11, a12), ring.add(a21, a22))
    assert total == a.index
    return PeirceBlocks(p, *(ring.elem(b) for b in (a11, a12, a21, a22)))


# ----------------------------------------------------- CEP closure operations

def _require_cep(a: Elem, what: str) -> Elem:
    r = inv.cep_inverse(a)
    if not r.exists:
        raise PreconditionError(f"{what} requires central-EP inputs",
                                method="cep.def")
    return r.inverse


def cep_product(a: Elem, b: Elem) -> Elem:
    """CEP-inverse of a*b via the reversed product of the CEP-inverses,
    cross-checked against an independent solve."""
    x = _require_cep(a, "cep_product")
    y = _require_cep(b, "cep_product")
    formula = y * x
    direct = inv.cep_inverse(a * b)
    if not direct.exists or direct.inverse != formula:
        raise MethodDisagreementError(
            f"product CEP-inverse mismatch for {a!r}, {b!r}")
    return formula


def cep_power(a: Elem, n: int) -> Elem:
    """CEP-inverse of a^n as the n-th power of the CEP-inverse."""
    if n < 1:
        raise InvalidArgumentError("exponent must be a positive integer")
    x = _require_cep(a, "cep_power")
    formula = x ** n
    direct = inv.cep_inverse(a ** n)
    if not direct.exists or direct.inverse != formula:
        raise MethodDisagreementError(f"power CEP-inverse mismatch for {a!r}^{n}")
    return formula


def cep_sum(a: Elem, b: Elem) -> Elem:
    """CEP-inverse of a+b for orthogonal summands (x b = b x = 0 = y a = a y)."""
    x = _require_cep(a, "cep_sum")
    y = _require_cep(b, "cep_sum")
    zero = a.ring.zero
    for label, val in (("x*b", x * b), ("b*x", b * x),
                       ("y*a", y * a), ("a*y", a * y)):
        if val != zero:
            raise PreconditionError(
                f"orthogonality fails: {label} = {val.value!r} != 0",
                method="cep.sum.orthogonality")
    formula = x + y
    direct = inv.cep_inverse(a + b)
    if not direct.exists or direct.inverse != formula:
        raise MethodDisagreementError(f"sum CEP-inverse mismatch for {a!r}+{b!r}")
    return formula


# ------------------------------------------------------------------ the order

def cep_leq(a: Elem, b: Elem) -> bool:
    """The relation a <= b given by a = a^(cep) a b, with the three
    equivalent forms evaluated and checked for agreement."""
    ring = a.ring
    x = _require_cep(a, "cep_leq")
    m1 = (x * a) * b == a
    m2 = x * a == x * b
    m3 = a * x == b * x
    m4 = _leq_peirce(a, b, x)
    if len({m1, m2, m3, m4}) > 1:
        raise MethodDisagreementError(
            f"order characterizations disagree for {a!r} <= {b!r}: "
            f"{(m1, m2, m3, m4)}")
    return m1


def _leq_peirce(a: Elem, b: Elem, x: Elem) -> bool:
    # some central projection p puts a in the invertible corner of pRp with
    # b agreeing on that corner and vanishing on the mixed blocks
    ring = a.ring
    one = ring.one_index
    for p in np.flatnonzero(ring.central_projection_mask()):
        p = int(p)
        q = ring.sub(one, p)
        mul = ring.mul
        if mul(mul(p, a.index), p) != a.index:
            continue
        if not solve_mask(ring, a.index, CORNER, cn_idx=p).any():
            continue
        if mul(mul(p, b.index), p) != a.index:
            continue
        if mul(mul(p, b.index), q) != ring.zero_index:
            continue
        if mul(mul(q, b.index), p) != ring.zero_index:
            continue
        return True
    return False


@dataclass(frozen=True)
class PartialOrderReport:
    ring_spec: str
    members: tuple
    reflexive_checks: int
    antisymmetry_checks: int
    transitivity_checks: int
    violations: list = field(default_factory=list)

    @property
    def is_partial_order(self):
        return not self.violations

    def to_dict(self):
        return {"ring": self.ring_spec, "cep_count": len(self.members),
                "reflexive_checks": self.reflexive_checks,
                "antisymmetry_checks": self.antisymmetry_checks,
                "transitivity_checks": self.transitivity_checks,
                "violations": list(self.violations),
                "is_partial_order": self.is_partial_order}


def verify_partial_order(ring: StarRing) -> PartialOrderReport:
    """Check reflexivity, antisymmetry and transitivity of the CEP relation
    over the full set of central-EP elements."""
    if ring.carrier_size > PAIR_GUARD:
        raise BoundExceededError(
            f"partial-order verification is triple-exhaustive; carrier "
            f"{ring.carrier_size} exceeds the {PAIR_GUARD} guard")
    all_idx = np.arange(ring.carrier_size, dtype=np.int64)
    first, count = scan_raw(ring, all_idx, ["cep-inv"])
    members = np.flatnonzero(count[:, 0] == 1)
    m = members.size
    rel = np.zeros((m, m), dtype=bool)
    for i, ai in enumerate(members):
        x = int(first[ai, 0])
        xa = ring.mul(x, int(ai))
        prods = _mul_left(ring, xa, members)
        rel[i] = prods == ai
    violations = []
    if not rel.diagonal().all():
        for i in np.flatnonzero(~rel.diagonal()):
            violations.append({"kind": "reflexivity",
                               "a": ring.decode(int(members[i]))})
    both = rel & rel.T
    for i, j in zip(*np.nonzero(np.triu(both, 1))):
        violations.append({"kind": "antisymmetry",
                           "a": ring.decode(int(members[i])),
                           "b": ring.decode(int(members[j]))})
    reach = (rel.astype(np.int64) @ rel.astype(np.int64)) > 0
    for i, k in zip(*np.nonzero(reach & ~rel)):
        js = np.flatnonzero(rel[i] & rel[:, k])
        violations.append({"kind": "transitivity",
                           "a": ring.decode(int(members[i])),
                           "b": ring.decode(int(members[js[0]])),
                           "c": ring.decode(int(members[k]))})
    return PartialOrderReport(ring.spec(), tuple(int(i) for i in members),
                              m, m * m, m * m * m, violations)


# ------------------------------------------------------------- full report

@dataclass(frozen=True)
class ClassReport:
    element: Elem
    is_ep: bool
    is_cep: bool
    is_star_dmp: bool
    dmp_index: int | None
    ep_methods: dict
    cep_methods: dict
    dmp_methods: dict
    inverses: dict
    decompositions: dict
    systems: dict

    def to_dict(self):
        return {
            "element": self.element.value,
            "element_index": self.element.index,
            "is_ep": self.is_ep,
            "is_cep": self.is_cep,
            "is_star_dmp": self.is_star_dmp,
            "dmp_index": self.dmp_index,
            "methods": {"ep": self.ep_methods, "cep": self.cep_methods,
                        "dmp": {k: list(v) for k, v in self.dmp_methods.items()}},
            "inverses": {k: v.to_dict() for k, v in self.inverses.items()},
            "decompositions": {k: v.to_dict() for k, v in self.decompositions.items()},
            "systems": self.systems,
        }


def classify_element(a: Elem) -> ClassReport:
    """Full classification: all inverses, all method verdicts, witnesses and
    the decompositions available to the element."""
    ep_verdicts = {name: fn(a) for name, fn in EP_METHODS.items()}
    cep_verdicts = {name: fn(a) for name, fn in CEP_METHODS.items()}
    dmp_verdicts = {name: fn(a) for name, fn in DMP_METHODS.items()}
    for label, verdicts in (("EP", ep_verdicts), ("CEP", cep_verdicts)):
        if len(set(verdicts.values())) > 1:
            raise MethodDisagreementError(
                f"{label} characterizations disagree on {a!r}: {verdicts}")
    if len({v[0] for v in dmp_verdicts.values()}) > 1:
        raise MethodDisagreementError(
            f"*-DMP characterizations disagree on {a!r}: {dmp_verdicts}")
    ep = ep_verdicts["ep.def"]
    cep = cep_verdicts["cep.def"]
    dmp, dmp_n = dmp_verdicts["dmp.eppow"]
    if cep and not ep:
        raise MethodDisagreementError(f"CEP element {a!r} is not EP")
    if ep and (not dmp or dmp_n != 1):
        raise MethodDisagreementError(f"EP element {a!r} is not *-DMP at n=1")

    results = {
        "mp": inv.mp_inverse(a),
        "group": inv.group_inverse(a),
        "drazin": inv.drazin_inverse(a),
        "core": inv.core_inverse(a),
        "pseudo-core": inv.pseudo_core_inverse(a),
        "central-group": inv.central_group_inverse(a),
        "cep": inv.cep_inverse(a),
    }
    decomps = {}
    if cep:
        decomps["clean-cep"] = decompose(a, "clean-cep")
        decomps["unit-projection"] = decompose(a, "unit-projection")
    if dmp:
        decomps["dmp-clean"] = decompose(a, "dmp-clean")
        decomps["dmp-unit-projection"] = decompose(a, "dmp-unit-projection")

    systems_summary = {}
    for name in ("axa-mixed", "theo1-left", "theo1-right", "ep-xu",
                 "q1", "q2", "right-core"):
        f, c = solve_first_count(a, name)
        systems_summary[name] = {
            "solvable": f >= 0, "witness_count": c,
            "first_witness": a.ring.decode(f) if f >= 0 else None}
    return ClassReport(a, ep, cep, dmp, dmp_n, ep_verdicts, cep_verdicts,
                       dmp_verdicts, results, decomps, systems_summary)
