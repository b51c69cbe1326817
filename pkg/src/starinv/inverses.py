"""Named generalized inverses, all obtained by delegation to the solver.

Each operation runs the exhaustive scan of its defining system and audits
the uniqueness claims by reporting the full witness count instead of
assuming it.  For the exponent-indexed inverses the scan bound comes from
the element's power trace, which is provably complete, so ``exists=False``
is definitive unless a caller-supplied bound cut the search short (then
``bound_exhausted`` is set).
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Elem
from .systems import solve_first_count


@dataclass(frozen=True)
class InverseResult:
    exists: bool
    inverse: Elem | None
    index: int | None  # minimal exponent for Drazin / pseudo-core / dmp scans
    witness_count: int
    bound_exhausted: bool = False

    def to_dict(self):
        return {"exists": self.exists,
                "inverse": None if self.inverse is None else self.inverse.value,
                "inverse_index": None if self.inverse is None else self.inverse.index,
                "index": self.index,
                "witness_count": self.witness_count,
                "bound_exhausted": self.bound_exhausted}


def _plain(a: Elem, sys) -> InverseResult:
    first, count = solve_first_count(a, sys)
    inv = a.ring.elem(first) if first >= 0 else None
    return InverseResult(first >= 0, inv, None, count)


def mp_inverse(a: Elem) -> InverseResult:
    """The unique solution of the four Penrose equations, when it exists."""
    return _plain(a, "mp")


def group_inverse(a: Elem) -> InverseResult:
    """The unique x with a x a = a, x a x = x, a x = x a."""
    return _plain(a, "group")


def core_inverse(a: Elem) -> InverseResult:
    """The unique x with x a^2 = a, a x^2 = x, (a x)* = a x."""
    return _plain(a, "core")


def central_group_inverse(a: Elem) -> InverseResult:
    """A group-like inverse with central x a.

    Uniqueness is not asserted; the witness count exposes multiplicity and
    the first witness in canonical order is returned.
    """
    return _plain(a, "cgroup")


def cep_inverse(a: Elem) -> InverseResult:
    """The unique z with a z a = a, z a z = z, (a z)* = z a central."""
    return _plain(a, "cep-inv")


def drazin_index(a: Elem) -> int:
    """ind(a): the tail length of the power sequence.

    In a finite ring the least k admitting the Drazin equations equals the
    point where the power sequence enters its cycle, so no search over k is
    needed to find the index itself.
    """
    rho, _, _ = a.ring.power_trace(a.index)
    return rho


def drazin_inverse(a: Elem) -> InverseResult:
    """The Drazin inverse with minimal k in the ``index`` field.

    Always exists in a finite ring (the multiplicative semigroup is
    eventually periodic); the scan at k = ind(a) both finds it and audits
    its uniqueness.
    """
    rho = drazin_index(a)
    first, count = solve_first_count(a, "drazin", n=rho)
    inv = a.ring.elem(first) if first >= 0 else None
    return InverseResult(first >= 0, inv, rho if first >= 0 else None, count)


def pseudo_core_inverse(a: Elem, n_bound: int | None = None) -> InverseResult:
    """The pseudo core inverse with its minimal exponent.

    A witness at exponent n also works at every m >= max(ind(a), 1), so
    scanning up to that bound decides existence outright.
    """
    ring = a.ring
    complete = max(1, drazin_index(a))
    bound = complete if n_bound is None else n_bound
    for n in range(1, bound + 1):
        first, count = solve_first_count(a, "pseudo-core", n=n)
        if first >= 0:
            return InverseResult(True, ring.elem(first), n, count)
    return InverseResult(False, None, None, 0, bound_exhausted=bound < complete)
