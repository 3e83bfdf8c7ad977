"""The l-sign and l-quotient of a partition, and the Schur expansion of p_l o s_la."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Sequence, Tuple

from .lr import Expansion, multi_lr
from .partitions import (
    Partition,
    enumerate_partitions,
    increasing_view,
    length,
    make_partition,
    size,
)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable values."""
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class QuotientA:
    sign: int
    quotient: Tuple[Partition, ...] = ()
    # bookkeeping, indexed by residue 0..l-1 (1-based positions)
    I: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False)
    J: Tuple[Tuple[int, ...], ...] = field(default=(), repr=False)
    sigma: Tuple[int, ...] = field(default=(), repr=False)


def ell_quotient_a(mu: Sequence[int], ell: int, n: int | None = None) -> QuotientA:
    """Sign and l-quotient of ``mu`` computed at rank ``n`` (default ``len(mu)``).

    With ``mu_1 <= ... <= mu_n`` the increasing view and ``b_i = mu_i + i``,
    positions are sorted by the residue of ``b_i``; the sign is that of the
    permutation matching them with the positions ``i`` of the same residue.
    """
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    mu = make_partition(mu)
    if n is None:
        n = len(mu)
    view = increasing_view(mu, n)
    beta = [view[i - 1] + i for i in range(1, n + 1)]
    I = tuple(tuple(i for i in range(1, n + 1) if beta[i - 1] % ell == k) for k in range(ell))
    J = tuple(tuple(i for i in range(1, n + 1) if i % ell == k) for k in range(ell))
    if any(len(a) != len(b) for a, b in zip(I, J)):
        return QuotientA(0, (), I, J)
    sigma = [0] * n
    for a, b in zip(I, J):
        for i, j in zip(a, b):
            sigma[i - 1] = j
    quotient = []
    for k in range(ell):
        # ceil(b_i / l) - position; the residue-0 class uses b_i / l
        inc = [-(-beta[i - 1] // ell) - pos for pos, i in enumerate(I[k], start=1)]
        quotient.append(make_partition(reversed(inc)))
    return QuotientA(permutation_sign(sigma), tuple(quotient), I, J, tuple(sigma))


def pad_stability_check(mu: Sequence[int], ell: int, n: int) -> bool:
    """Does adding one zero part permute the quotient cyclically and keep the sign?"""
    before = ell_quotient_a(mu, ell, n)
    after = ell_quotient_a(mu, ell, n + 1)
    if before.sign != after.sign:
        return False
    if before.sign == 0:
        return True
    q = before.quotient
    expected = (q[-1],) + q[:-1] if ell > 1 else q
    return after.quotient == expected


def a_gl(la: Sequence[int], mu: Sequence[int], ell: int) -> int:
    """Stable coefficient of ``s_mu`` in ``p_l o s_la``."""
    la, mu = make_partition(la), make_partition(mu)
    if size(mu) != ell * size(la):
        return 0
    n = ell * length(la) + length(mu) + 1
    q = ell_quotient_a(mu, ell, n)
    if q.sign == 0:
        return 0
    return q.sign * multi_lr(q.quotient, la)


@lru_cache(maxsize=4096)
def _psi_gl(la: Partition, ell: int) -> Expansion:
    out = Expansion(family="gl")
    for mu in enumerate_partitions(ell * size(la)):
        out.add(mu, a_gl(la, mu, ell))
    return out


def psi_gl(la: Sequence[int], ell: int) -> Expansion:
    """``p_l o s_la`` on the Schur basis (stable in the number of variables)."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return _psi_gl(make_partition(la), ell)


def clear_caches() -> None:
    _psi_gl.cache_clear()
