"""Finite rings with involution: construction, enumeration, element codecs, subsets.

Three families are supported, all materialized as dense integer arrays so
that exhaustive searches run as array scans:

* ``zn(n)``      -- integers mod n, identity involution;
* ``gauss(n)``   -- pairs a+bi mod n with conjugation (a+bi)* = a-bi;
* ``mat(k, base, inv)`` -- k-by-k matrices over one of the above, with
  ``transpose`` or (for a gauss base) ``conjtranspose`` involution.

Every element is stored as a pair of k-by-k int64 matrices (real part,
imaginary part); for non-gauss rings the imaginary part is identically
zero.  The canonical index of an element is the little-endian mixed-radix
integer of its entry digits in row-major order, a gauss entry a+bi having
digit a*n + b.  Index 0 is always the zero element.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, InvalidParameterError, ParseError, RingMismatchError

CARRIER_CAP = 10 ** 6

# modulus-reduction lookup tables are worth it up to this many entries
_RED_TABLE_MAX = 1 << 21

_INVOLUTIONS = ("identity", "conjugate", "transpose", "conjugate-transpose")


class StarRing:
    """A finite ring with involution, with its carrier fully materialized.

    Instances are immutable after construction (lazy caches aside); all
    arithmetic helpers are pure functions of element indices.
    """

    def __init__(self, kind, modulus, k, gauss, involution):
        if modulus < 2:
            raise InvalidParameterError(f"modulus must be >= 2, got {modulus}")
        if k < 1:
            raise InvalidParameterError(f"matrix dimension must be >= 1, got {k}")
        entry_base = modulus * modulus if gauss else modulus
        size = entry_base ** (k * k)
        if size > CARRIER_CAP:
            raise InvalidParameterError(
                f"carrier size {size} exceeds cap {CARRIER_CAP}")
        self.kind = kind
        self.modulus = modulus
        self.k = k
        self.gauss = gauss
        self.involution = involution
        self.entry_base = entry_base
        self.carrier_size = size
        # star = optional entrywise conjugation followed by optional transpose
        self.conj = involution in ("conjugate", "conjugate-transpose")
        self.trans = involution in ("transpose", "conjugate-transpose")
        self._weights = entry_base ** np.arange(k * k, dtype=np.int64)
        self.re, self.im = self._materialize()
        self.zero_index = 0
        self.one_index = int(self.encode_reim(*self._eye()))
        self._cache = {}

    # ---------------------------------------------------------------- carrier

    def _materialize(self):
        n, k, B = self.modulus, self.k, self.entry_base
        idx = np.arange(self.carrier_size, dtype=np.int64)
        re = np.zeros((self.carrier_size, k, k), dtype=np.int64)
        im = np.zeros_like(re)
        for pos in range(k * k):
            d = (idx // self._weights[pos]) % B
            r, c = divmod(pos, k)
            if self.gauss:
                re[:, r, c] = d // n
                im[:, r, c] = d % n
            else:
                re[:, r, c] = d
        re.setflags(write=False)
        im.setflags(write=False)
        return re, im

    def _eye(self):
        e = np.eye(self.k, dtype=np.int64) % self.modulus
        return e, np.zeros((self.k, self.k), dtype=np.int64)

    def encode_reim(self, re, im):
        """Canonical index of the element with the given entry matrices."""
        d = re * self.modulus + im if self.gauss else re
        return int(d.reshape(-1) @ self._weights)

    def encode_batch(self, re, im):
        """Canonical indices for a batch of shape (m, k, k) entry matrices."""
        d = re * self.modulus + im if self.gauss else re
        return d.reshape(d.shape[0], -1) @ self._weights

    def reim(self, index):
        """Entry matrices of an element (read-only views)."""
        return self.re[index], self.im[index]

    # ---------------------------------------------------------------- values

    def decode(self, index):
        """Structured value of an element: int, (a, b) pair, or nested lists."""
        if not 0 <= index < self.carrier_size:
            raise InvalidArgumentError(f"index {index} out of range")
        re, im = self.re[index], self.im[index]
        if self.kind == "zn":
            return int(re[0, 0])
        if self.kind == "gauss":
            return (int(re[0, 0]), int(im[0, 0]))
        if self.gauss:
            return [[(int(re[r, c]), int(im[r, c])) for c in range(self.k)]
                    for r in range(self.k)]
        return [[int(re[r, c]) for c in range(self.k)] for r in range(self.k)]

    def encode(self, value):
        """Canonical index of a structured value; entries are reduced mod n."""
        re, im = self._value_to_reim(value)
        return self.encode_reim(re, im)

    def _value_to_reim(self, value):
        n, k = self.modulus, self.k
        re = np.zeros((k, k), dtype=np.int64)
        im = np.zeros((k, k), dtype=np.int64)

        def entry(v):
            if self.gauss:
                if isinstance(v, (tuple, list)) and len(v) == 2 \
                        and all(isinstance(t, int) for t in v):
                    return v[0] % n, v[1] % n
                raise InvalidArgumentError(
                    f"expected an (a, b) pair for a gauss entry, got {v!r}")
            if isinstance(v, int):
                return v % n, 0
            raise InvalidArgumentError(f"expected an integer entry, got {v!r}")

        if self.kind in ("zn", "gauss"):
            re[0, 0], im[0, 0] = entry(value)
            return re, im
        if not (isinstance(value, list) and len(value) == k
                and all(isinstance(row, list) and len(row) == k for row in value)):
            raise InvalidArgumentError(
                f"expected a {k}x{k} matrix (list of lists) for ring {self.spec()}")
        for r in range(k):
            for c in range(k):
                re[r, c], im[r, c] = entry(value[r][c])
        return re, im

    # ------------------------------------------------------------ arithmetic

    def _mul_reim(self, ar, ai, br, bi):
        n = self.modulus
        return (ar @ br - ai @ bi) % n, (ar @ bi + ai @ br) % n

    def mul(self, i, j):
        r, m = self._mul_reim(self.re[i], self.im[i], self.re[j], self.im[j])
        return self.encode_reim(r, m)

    def add(self, i, j):
        n = self.modulus
        return self.encode_reim((self.re[i] + self.re[j]) % n,
                                (self.im[i] + self.im[j]) % n)

    def neg(self, i):
        n = self.modulus
        return self.encode_reim((-self.re[i]) % n, (-self.im[i]) % n)

    def sub(self, i, j):
        return self.add(i, self.neg(j))

    def star(self, i):
        re, im = self.re[i].copy(), self.im[i].copy()
        if self.conj:
            im = (-im) % self.modulus
        if self.trans:
            re, im = re.T.copy(), im.T.copy()
        return self.encode_reim(re, im)

    def power(self, i, e):
        if e < 0:
            raise InvalidArgumentError("negative exponent")
        rho, period, seq = self.power_trace(i)
        if e < len(seq):
            return seq[e]
        return seq[rho + (e - rho) % period]

    def power_trace(self, i):
        """Tail length, cycle length, and the power sequence of an element.

        Returns ``(rho, period, seq)`` where ``seq[e]`` is the index of the
        e-th power (seq[0] is the identity) and the sequence first repeats as
        ``seq[rho] == seq[rho + period]``.  ``rho`` is exactly the least d
        such that the d-th power lies on the eventual cycle.
        """
        cache = self._cache.setdefault("power_trace", {})
        hit = cache.get(i)
        if hit is not None:
            return hit
        seen = {}
        seq = []
        cur = self.one_index
        while cur not in seen:
            seen[cur] = len(seq)
            seq.append(cur)
            cur = self.mul(cur, i)
        rho = seen[cur]
        out = (rho, len(seq) - rho, tuple(seq))
        cache[i] = out
        return out

    # -------------------------------------------------------------- subsets

    def _kernel_args(self):
        """Positional prefix shared by all backend kernels."""
        red, roff = self._red_table()
        return (self.re, self.im, self.modulus, self.entry_base,
                self.conj, self.trans, red, roff)

    def _red_table(self):
        hit = self._cache.get("red")
        if hit is None:
            off = 2 * self.k * (self.modulus - 1) ** 2 + self.modulus
            if 2 * off + 1 <= _RED_TABLE_MAX:
                vals = np.arange(-off, off + 1, dtype=np.int64) % self.modulus
                hit = (vals, off)
            else:
                hit = (np.empty(0, dtype=np.int64), -1)
            self._cache["red"] = hit
        return hit

    def center_mask(self):
        """Boolean mask of elements commuting with every ring element."""
        mask = self._cache.get("center")
        if mask is None:
            from . import backends
            mask = backends.get().center_scan(*self._kernel_args())
            mask.setflags(write=False)
            self._cache["center"] = mask
        return mask

    def units_table(self):
        """Per-element index of the two-sided inverse, or -1."""
        table = self._cache.get("units")
        if table is None:
            from . import backends
            table = backends.get().units_scan(*self._kernel_args())
            table.setflags(write=False)
            self._cache["units"] = table
        return table

    def _batch_mask(self, name):
        mask = self._cache.get(name)
        if mask is not None:
            return mask
        n, re, im = self.modulus, self.re, self.im
        if name == "hermitian":
            sr, si = re, im
            if self.conj:
                si = (-si) % n
            if self.trans:
                sr, si = sr.swapaxes(1, 2), si.swapaxes(1, 2)
            mask = np.logical_and.reduce(((sr == re).all(axis=(1, 2)),
                                          (si == im).all(axis=(1, 2))))
        elif name in ("idempotents", "tripotents"):
            sq_r = (re @ re - im @ im) % n
            sq_i = (re @ im + im @ re) % n
            if name == "idempotents":
                mask = ((sq_r == re) & (sq_i == im)).all(axis=(1, 2))
            else:
                cu_r = (sq_r @ re - sq_i @ im) % n
                cu_i = (sq_r @ im + sq_i @ re) % n
                mask = ((cu_r == re) & (cu_i == im)).all(axis=(1, 2))
        else:
            raise InvalidArgumentError(f"unknown mask {name}")
        mask.setflags(write=False)
        self._cache[name] = mask
        return mask

    def hermitian_mask(self):
        return self._batch_mask("hermitian")

    def idempotent_mask(self):
        return self._batch_mask("idempotents")

    def tripotent_mask(self):
        return self._batch_mask("tripotents")

    def projection_mask(self):
        mask = self._cache.get("projections")
        if mask is None:
            mask = self.idempotent_mask() & self.hermitian_mask()
            self._cache["projections"] = mask
        return mask

    def central_projection_mask(self):
        mask = self._cache.get("central_projections")
        if mask is None:
            mask = self.projection_mask() & self.center_mask().astype(bool)
            self._cache["central_projections"] = mask
        return mask

    # ------------------------------------------------------------- identity

    def signature(self):
        return (self.kind, self.modulus, self.k, self.gauss, self.involution)

    def spec(self):
        """Canonical ring-spec string (parseable by :func:`parse_ring_spec`)."""
        if self.kind == "zn":
            return f"zn({self.modulus})"
        if self.kind == "gauss":
            return f"gauss({self.modulus})"
        base = f"gauss({self.modulus})" if self.gauss else f"zn({self.modulus})"
        inv = "conjtranspose" if self.involution == "conjugate-transpose" else "transpose"
        return f"mat({self.k},{base},{inv})"

    def __eq__(self, other):
        return isinstance(other, StarRing) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        return f"StarRing({self.spec()}, |R|={self.carrier_size})"

    def elem(self, index):
        if not 0 <= index < self.carrier_size:
            raise InvalidArgumentError(
                f"index {index} outside carrier of {self.spec()}")
        return Elem(self, int(index))

    def elem_of(self, value):
        return Elem(self, self.encode(value))

    @property
    def zero(self):
        return Elem(self, self.zero_index)

    @property
    def one(self):
        return Elem(self, self.one_index)


@dataclass(frozen=True, eq=False)
class Elem:
    """A canonical element handle: ring plus canonical index."""

    ring: StarRing
    index: int

    @property
    def value(self):
        return self.ring.decode(self.index)

    def __eq__(self, other):
        return (isinstance(other, Elem) and self.ring == other.ring
                and self.index == other.index)

    def __hash__(self):
        return hash((self.ring.signature(), self.index))

    def __repr__(self):
        return f"Elem({self.ring.spec()}, {self.index}: {self.value!r})"

    def __mul__(self, other):
        self._same_ring(other)
        return Elem(self.ring, self.ring.mul(self.index, other.index))

    def __add__(self, other):
        self._same_ring(other)
        return Elem(self.ring, self.ring.add(self.index, other.index))

    def __sub__(self, other):
        self._same_ring(other)
        return Elem(self.ring, self.ring.sub(self.index, other.index))

    def __neg__(self):
        return Elem(self.ring, self.ring.neg(self.index))

    def star(self):
        return Elem(self.ring, self.ring.star(self.index))

    def __pow__(self, e):
        return Elem(self.ring, self.ring.power(self.index, e))

    def _same_ring(self, other):
        if not isinstance(other, Elem) or other.ring != self.ring:
            raise RingMismatchError("elements belong to different rings")


# ------------------------------------------------------------- constructors

def make_zn(n: int) -> StarRing:
    """Integers mod n with the identity involution."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"zn modulus must be an integer >= 2, got {n!r}")
    return StarRing("zn", n, 1, False, "identity")


def make_gauss(n: int) -> StarRing:
    """Pairs a+bi mod n with conjugation; defined for every n >= 2."""
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"gauss modulus must be an integer >= 2, got {n!r}")
    return StarRing("gauss", n, 1, True, "conjugate")


def make_matrix_ring(base: StarRing, k: int, involution: str) -> StarRing:
    """k-by-k matrices over a zn or gauss base.

    ``transpose`` is valid over any base; ``conjugate-transpose`` (alias
    ``conjtranspose``) applies the base conjugation entrywise and requires a
    gauss base.
    """
    if not isinstance(base, StarRing) or base.kind not in ("zn", "gauss"):
        raise InvalidParameterError("matrix base must be a zn or gauss ring")
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"matrix dimension must be an integer >= 1, got {k!r}")
    if involution == "conjtranspose":
        involution = "conjugate-transpose"
    if involution not in ("transpose", "conjugate-transpose"):
        raise InvalidParameterError(f"unknown matrix involution {involution!r}")
    if involution == "conjugate-transpose" and base.kind != "gauss":
        raise InvalidParameterError("conjugate-transpose requires a gauss base")
    return StarRing("matrix", base.modulus, k, base.kind == "gauss", involution)


def enumerate_ring(ring: StarRing):
    """All elements in ascending canonical index order."""
    return (Elem(ring, i) for i in range(ring.carrier_size))


# ----------------------------------------------------------------- subsets

SUBSET_KINDS = ("center", "units", "projections", "central_projections",
                "idempotents", "hermitian")


@dataclass(frozen=True)
class SubsetReport:
    """Sorted member indices of a distinguished subset."""

    ring: StarRing
    kind: str
    members: tuple

    def __contains__(self, item):
        idx = item.index if isinstance(item, Elem) else item
        return idx in set(self.members)

    def to_dict(self):
        return {"kind": self.kind, "size": len(self.members),
                "members": list(self.members)}


def subset(ring: StarRing, kind: str) -> SubsetReport:
    """Exhaustively computed distinguished subset of a ring."""
    if kind == "center":
        mask = ring.center_mask().astype(bool)
    elif kind == "units":
        mask = ring.units_table() >= 0
    elif kind == "projections":
        mask = ring.projection_mask()
    elif kind == "central_projections":
        mask = ring.central_projection_mask()
    elif kind == "idempotents":
        mask = ring.idempotent_mask()
    elif kind == "hermitian":
        mask = ring.hermitian_mask()
    else:
        raise InvalidArgumentError(
            f"unknown subset kind {kind!r}; expected one of {SUBSET_KINDS}")
    members = tuple(int(i) for i in np.flatnonzero(mask))
    return SubsetReport(ring, kind, members)


# ------------------------------------------------------------------ parsing

def parse_ring_spec(text: str) -> StarRing:
    """Parse ``zn(<n>)``, ``gauss(<n>)`` or ``mat(<k>,<base>,<involution>)``."""
    s = text.strip()
    ring, rest = _parse_spec(s, 0, allow_matrix=True)
    if rest != len(s):
        raise ParseError(f"trailing input in ring spec {text!r}", rest)
    return ring


def _parse_spec(s, pos, allow_matrix):
    def skip_ws(p):
        while p < len(s) and s[p].isspace():
            p += 1
        return p

    def expect(p, ch):
        p = skip_ws(p)
        if p >= len(s) or s[p] != ch:
            raise ParseError(f"expected {ch!r}", p)
        return p + 1

    def parse_int(p):
        p = skip_ws(p)
        q = p
        while q < len(s) and s[q].isdigit():
            q += 1
        if q == p:
            raise ParseError("expected an integer", p)
        return int(s[p:q]), q

    pos = skip_ws(pos)
    for name in ("zn", "gauss", "mat"):
        if s.startswith(name, pos):
            break
    else:
        raise ParseError("expected zn(...), gauss(...) or mat(...)", pos)
    p = expect(pos + len(name), "(")
    if name in ("zn", "gauss"):
        n, p = parse_int(p)
        p = expect(p, ")")
        try:
            ring = make_zn(n) if name == "zn" else make_gauss(n)
        except InvalidParameterError as exc:
            raise ParseError(str(exc), pos) from exc
        return ring, skip_ws(p)
    if not allow_matrix:
        raise ParseError("matrix rings cannot be used as a matrix base", pos)
    k, p = parse_int(p)
    p = expect(p, ",")
    base, p = _parse_spec(s, p, allow_matrix=False)
    p = expect(p, ",")
    p = skip_ws(p)
    q = p
    while q < len(s) and (s[q].isalnum() or s[q] in "-_"):
        q += 1
    inv = s[p:q].lower()
    if inv not in ("transpose", "conjtranspose", "conjugate-transpose"):
        raise ParseError(f"unknown involution {s[p:q]!r}", p)
    p = expect(q, ")")
    try:
        ring = make_matrix_ring(base, k, inv)
    except InvalidParameterError as exc:
        raise ParseError(str(exc), pos) from exc
    return ring, skip_ws(p)


def parse_elem(ring: StarRing, text: str) -> Elem:
    """Parse an element literal appropriate for the ring's kind.

    ``zn`` takes an integer, ``gauss`` an ``(a,b)`` pair, matrix rings a
    row-major ``[[...],...]`` nesting of base literals.  Out-of-range
    integers are reduced mod n.
    """
    try:
        value = ast.literal_eval(text.strip())
    except (ValueError, SyntaxError) as exc:
        pos = getattr(exc, "offset", None)
        raise ParseError(f"bad element literal {text!r}: {exc}", pos) from exc
    try:
        return ring.elem_of(value)
    except InvalidArgumentError as exc:
        raise ParseError(f"element literal does not fit ring {ring.spec()}: {exc}") from exc
