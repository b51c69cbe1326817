"""Uniform solver for the defining equation systems of generalized inverses.

Every system is a conjunction of equational constraints over a fixed
element ``a``, a candidate ``x`` and (for indexed systems) an exponent
``n``.  ``solve`` realizes "there exists x" by exhaustive scan over the
carrier and returns *all* witnesses in canonical order; ``check_witness``
evaluates the constraints directly with no search, so the two sides can be
played against each other in tests.

No algebraic shortcut is applied anywhere in this module: derived facts
(commutation lemmas, uniqueness claims) are verified against these scans,
never assumed by them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backends
from . import opcodes as op
from .errors import InvalidArgumentError, RingMismatchError
from .rings import Elem, StarRing


@dataclass(frozen=True)
class System:
    """A named conjunction of equation opcodes (in definition order)."""

    name: str
    codes: tuple
    equations: tuple
    indexed: bool = False
    exp_lo: int = 1  # smallest exponent scanned; 0 for the Drazin system

    @property
    def needs_center(self):
        return op.XA_CENTRAL in self.codes


def _sys(name, codes, equations, indexed=False, exp_lo=1):
    return System(name, tuple(codes), tuple(equations), indexed, exp_lo)


SYSTEMS = {s.name: s for s in [
    _sys("core", [op.XC2_A, op.AX2_X, op.AX_HERM],
         ("x a^2 = a", "a x^2 = x", "(a x)* = a x")),
    _sys("pseudo-core", [op.XCN1_CN, op.AX2_X, op.AX_HERM],
         ("x a^(n+1) = a^n", "a x^2 = x", "(a x)* = a x"), indexed=True),
    _sys("right-core", [op.AXA_A, op.AX2_X, op.AX_HERM],
         ("a x a = a", "a x^2 = x", "(a x)* = a x")),
    _sys("right-pseudo-core", [op.AXCN_A, op.AX2_X, op.AX_HERM],
         ("a x a^n = a", "a x^2 = x", "(a x)* = a x"), indexed=True),
    _sys("ep-xu", [op.XC2_A, op.AX2_X, op.XA_HERM],
         ("x a^2 = a", "a x^2 = x", "(x a)* = x a")),
    _sys("q1", [op.XC2_A, op.AX2_X, op.AXS_XA],
         ("x a^2 = a", "a x^2 = x", "(a x)* = x a")),
    _sys("q2", [op.AXA_A, op.AX2_X, op.AXS_XA],
         ("a x a = a", "a x^2 = x", "(a x)* = x a")),
    _sys("q3", [op.AXCN_A, op.AX2_X, op.AXS_XA],
         ("a x a^n = a", "a x^2 = x", "(a x)* = x a"), indexed=True),
    _sys("p13", [op.AXA_A, op.AX_HERM],
         ("a x a = a", "(a x)* = a x")),
    _sys("p14", [op.AXA_A, op.XA_HERM],
         ("a x a = a", "(x a)* = x a")),
    _sys("mp", [op.AXA_A, op.XAX_X, op.AX_HERM, op.XA_HERM],
         ("a x a = a", "x a x = x", "(a x)* = a x", "(x a)* = x a")),
    _sys("group", [op.AXA_A, op.XAX_X, op.AX_XA],
         ("a x a = a", "x a x = x", "a x = x a")),
    _sys("drazin", [op.XAX_X, op.AX_XA, op.CN_CN1X],
         ("x a x = x", "a x = x a", "a^k = a^(k+1) x"), indexed=True, exp_lo=0),
    _sys("theo1-left", [op.XC2_A, op.AXS_XA],
         ("x a^2 = a", "(a x)* = x a")),
    _sys("theo1-right", [op.C2X_A, op.AXS_XA],
         ("a^2 x = a", "(a x)* = x a")),
    _sys("axa-mixed", [op.AXA_A, op.AXS_XA],
         ("a x a = a", "(a x)* = x a")),
    _sys("cep-def", [op.AXA_A, op.AXS_XA, op.XA_CENTRAL],
         ("a x a = a", "(a x)* = x a", "x a central")),
    _sys("cep-inv", [op.AXA_A, op.XAX_X, op.AXS_XA, op.XA_CENTRAL],
         ("a x a = a", "x a x = x", "(a x)* = x a", "x a central")),
    _sys("cgroup", [op.XA_CENTRAL, op.XAX_X, op.C2X_A],
         ("x a central", "x a x = x", "a^2 x = a")),
    _sys("dmp-sys", [op.AXCN_CN, op.AX2_X, op.AXS_XA],
         ("a x a^n = a^n", "a x^2 = x", "(a x)* = x a"), indexed=True),
    # the one-sided-regularity-plus-mixed-star variants with a unique solution
    _sys("eight-2", [op.AXA_A, op.X2A_X, op.AXS_XA],
         ("a x a = a", "x^2 a = x", "(a x)* = x a")),
    _sys("eight-3", [op.C2X_A, op.X2A_X, op.AXS_XA],
         ("a^2 x = a", "x^2 a = x", "(a x)* = x a")),
    _sys("eight-4", [op.XC2_A, op.X2A_X, op.AXS_XA],
         ("x a^2 = a", "x^2 a = x", "(a x)* = x a")),
    _sys("eight-5", [op.C2X_A, op.AX2_X, op.AXS_XA],
         ("a^2 x = a", "a x^2 = x", "(a x)* = x a")),
    _sys("eight-6", [op.XC2_A, op.AX2_X, op.AXS_XA],
         ("x a^2 = a", "a x^2 = x", "(a x)* = x a")),
    _sys("eight-7", [op.C2X_A, op.XAX_X, op.AXS_XA],
         ("a^2 x = a", "x a x = x", "(a x)* = x a")),
    _sys("eight-8", [op.XC2_A, op.XAX_X, op.AXS_XA],
         ("x a^2 = a", "x a x = x", "(a x)* = x a")),
    # hypothesis of the question "does x = a x^2 plus mixed star force EP"
    _sys("x-ax2", [op.AX2_X, op.AXS_XA],
         ("a x^2 = x", "(a x)* = x a")),
    _sys("x-x2a", [op.X2A_X, op.AXS_XA],
         ("x^2 a = x", "(a x)* = x a")),
    _sys("commute", [op.AX_XA], ("a x = x a",)),
]}

SYSTEM_NAMES = tuple(SYSTEMS)


def get_system(sys) -> System:
    if isinstance(sys, System):
        return sys
    try:
        return SYSTEMS[sys]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown system {sys!r}; known: {', '.join(SYSTEM_NAMES)}") from None


@dataclass(frozen=True)
class Witness:
    """A verified solution: candidate x, optional exponent, per-equation flags."""

    x: Elem
    n: int | None
    satisfied: tuple

    def to_dict(self):
        return {"x": self.x.value, "x_index": self.x.index, "n": self.n,
                "satisfied": list(self.satisfied)}


# --------------------------------------------------------- single evaluation

def evaluate_system(a: Elem, x: Elem, sys, n: int | None = None):
    """Per-equation truth values for (a, x, n), in definition order; no search."""
    system = get_system(sys)
    if x.ring != a.ring:
        raise RingMismatchError("witness and element live in different rings")
    if system.indexed:
        if n is None or n < system.exp_lo:
            raise InvalidArgumentError(
                f"system {system.name} needs an exponent n >= {system.exp_lo}")
    ring = a.ring
    cn = ring.power(a.index, n) if system.indexed else None
    cn1 = ring.power(a.index, n + 1) if system.indexed else None
    return tuple(_eval_single(ring, code, a.index, x.index, cn, cn1)
                 for code in system.codes)


def _eval_single(ring: StarRing, code, a, x, cn, cn1):
    mul, star = ring.mul, ring.star
    ax = mul(a, x)
    xa = mul(x, a)
    if code == op.AXA_A:
        return mul(ax, a) == a
    if code == op.XAX_X:
        return mul(xa, x) == x
    if code == op.AX_HERM:
        return star(ax) == ax
    if code == op.XA_HERM:
        return star(xa) == xa
    if code == op.AXS_XA:
        return star(ax) == xa
    if code == op.XC2_A:
        return mul(xa, a) == a
    if code == op.C2X_A:
        return mul(a, ax) == a
    if code == op.AX2_X:
        return mul(ax, x) == x
    if code == op.X2A_X:
        return mul(x, xa) == x
    if code == op.AX_XA:
        return ax == xa
    if code == op.CN_CN1X:
        return cn == mul(cn1, x)
    if code == op.XCN1_CN:
        return mul(x, cn1) == cn
    if code == op.AXCN_A:
        return mul(ax, cn) == a
    if code == op.AXCN_CN:
        return mul(ax, cn) == cn
    if code == op.XA_CENTRAL:
        # definitional check: xa r = r xa for every r, not a center-table lookup
        return _commutes_with_all(ring, xa)
    raise InvalidArgumentError(f"opcode {code} not valid in a public system")


def _commutes_with_all(ring: StarRing, idx):
    n = ring.modulus
    tr, ti = ring.reim(idx)
    lr = (tr @ ring.re - ti @ ring.im) % n
    li = (tr @ ring.im + ti @ ring.re) % n
    rr = (ring.re @ tr - ring.im @ ti) % n
    ri = (ring.re @ ti + ring.im @ tr) % n
    return bool(((lr == rr) & (li == ri)).all())


def check_witness(a: Elem, w: Witness, sys) -> bool:
    """True iff all equations of the system hold for (a, w.x, w.n)."""
    return all(evaluate_system(a, w.x, sys, w.n))


# ------------------------------------------------------------------ scanning

# the dummy must match the real center mask's numba type, readonly included
_NO_CENTER = np.zeros(0, dtype=np.uint8)
_NO_CENTER.setflags(write=False)


def _center_arg(ring, system_or_codes):
    codes = system_or_codes.codes if isinstance(system_or_codes, System) \
        else system_or_codes
    if op.XA_CENTRAL in codes:
        return ring.center_mask()
    return _NO_CENTER


def solve_mask(ring: StarRing, a_idx: int, sys, n: int | None = None,
               cn_idx: int | None = None):
    """Witness mask over the carrier for one element.

    ``n`` supplies the exponent of indexed systems; ``cn_idx`` loads an
    arbitrary constant into the CN register for the constant-comparing
    opcodes (used by corner-inverse searches).
    """
    system = get_system(sys)
    ring_args = ring._kernel_args()
    k = ring.k
    zeros = np.zeros((k, k), dtype=np.int64)
    if system.indexed:
        if n is None or n < system.exp_lo:
            raise InvalidArgumentError(
                f"system {system.name} needs an exponent n >= {system.exp_lo}")
        cn = ring.power(a_idx, n)
        cn1 = ring.power(a_idx, n + 1)
        cnr, cni = ring.reim(cn)
        cn1r, cn1i = ring.reim(cn1)
    elif cn_idx is not None:
        cnr, cni = ring.reim(cn_idx)
        cn1r, cn1i = zeros, zeros
    else:
        cnr = cni = cn1r = cn1i = zeros
    codes = np.asarray(op.eval_order(system.codes), dtype=np.int64)
    return backends.get().solve_mask(
        *ring_args, a_idx, codes, cnr, cni, cn1r, cn1i,
        _center_arg(ring, system))


def scan_raw(ring: StarRing, a_indices, systems, cn_idx=None, cn1_idx=None):
    """Batched first-witness/count tables: one row per element, one column
    per system.

    Exponent-indexed systems are accepted only when the caller supplies the
    per-element power constants through ``cn_idx``/``cn1_idx``.
    """
    sys_list = [get_system(s) for s in systems]
    if any(s.indexed for s in sys_list) and cn1_idx is None:
        raise InvalidArgumentError(
            "indexed systems need per-element power constants to batch-scan")
    codes = []
    offs = [0]
    need_center = False
    for s in sys_list:
        codes.extend(op.eval_order(s.codes))
        offs.append(len(codes))
        need_center = need_center or s.needs_center
    a_idx = np.asarray(a_indices, dtype=np.int64)
    if cn_idx is None:
        cn = np.full(a_idx.size, -1, dtype=np.int64)
    else:
        cn = np.asarray(cn_idx, dtype=np.int64)
    if cn1_idx is None:
        cn1 = np.full(a_idx.size, -1, dtype=np.int64)
    else:
        cn1 = np.asarray(cn1_idx, dtype=np.int64)
    center = ring.center_mask() if need_center else _NO_CENTER
    return backends.get().scan_systems(
        *ring._kernel_args(), a_idx,
        np.asarray(codes, dtype=np.int64), np.asarray(offs, dtype=np.int64),
        cn, cn1, center)


def power_index_arrays(ring: StarRing, exponents):
    """Indices of a^e and a^(e+1) per element, for batch-scanning indexed
    systems; exponents come per element (cached power traces make each
    lookup O(1))."""
    N = ring.carrier_size
    cn = np.empty(N, dtype=np.int64)
    cn1 = np.empty(N, dtype=np.int64)
    for a in range(N):
        e = int(exponents[a])
        cn[a] = ring.power(a, e)
        cn1[a] = ring.power(a, e + 1)
    return cn, cn1


def default_exponent_bound(ring: StarRing, a_idx: int) -> int:
    """Smallest exponent bound that is provably complete for every indexed
    system: beyond tail+cycle of the power sequence the pair (a^n, a^(n+1))
    repeats, so no new constraint sets exist."""
    rho, period, _ = ring.power_trace(a_idx)
    return max(1, rho + period)


def solve(a: Elem, sys, n_bound: int | None = None):
    """All witnesses of the system for ``a``, ascending by canonical index.

    For indexed systems each witness carries the smallest exponent at which
    it works; the scan covers exponents up to ``n_bound`` (default: the
    complete power-cycle bound of ``a``).
    """
    system = get_system(sys)
    ring = a.ring
    if not system.indexed:
        mask = solve_mask(ring, a.index, system)
        sat = tuple(True for _ in system.codes)
        return [Witness(Elem(ring, int(i)), None, sat)
                for i in np.flatnonzero(mask)]
    if n_bound is None:
        n_bound = default_exponent_bound(ring, a.index)
    if n_bound < system.exp_lo:
        raise InvalidArgumentError(f"n_bound must be >= {system.exp_lo}")
    best = np.full(ring.carrier_size, -1, dtype=np.int64)
    for n in range(system.exp_lo, n_bound + 1):
        mask = solve_mask(ring, a.index, system, n=n)
        fresh = mask & (best < 0)
        best[fresh] = n
    sat = tuple(True for _ in system.codes)
    return [Witness(Elem(ring, int(i)), int(best[i]), sat)
            for i in np.flatnonzero(best >= 0)]


def solve_first_count(a: Elem, sys, n: int | None = None):
    """(first witness index or -1, witness count) for one system instance."""
    mask = solve_mask(a.ring, a.index, sys, n=n)
    idx = np.flatnonzero(mask)
    return (int(idx[0]) if idx.size else -1, int(idx.size))


def solvable_left_right(a: Elem):
    """(a in a^2 R, a in R a^2), each decided exhaustively."""
    in_a2r = solve_mask(a.ring, a.index, _LEFT).any()
    in_ra2 = solve_mask(a.ring, a.index, _RIGHT).any()
    return bool(in_a2r), bool(in_ra2)


# single-equation helper systems for the regularity hypotheses
_LEFT = _sys("in-a2r", [op.C2X_A], ("a^2 s = a",))
_RIGHT = _sys("in-ra2", [op.XC2_A], ("t a^2 = a",))
SYSTEMS[_LEFT.name] = _LEFT
SYSTEMS[_RIGHT.name] = _RIGHT

# inverse of a inside the corner ring pRp, with p supplied in the CN register
CORNER = _sys("corner-inverse", [op.AX_CN, op.XA_CN, op.X_CNXCN],
              ("a x = p", "x a = p", "x = p x p"))
SYSTEMS[CORNER.name] = CORNER
