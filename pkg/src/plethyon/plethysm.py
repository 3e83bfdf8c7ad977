"""Stabilized power-sum plethysms of universal so/sp characters.

Everything here is rank-free: an expansion computed in this module is the
decomposition of ``p_l o s^g_la`` for every rank ``n >= l|la| + 1`` (and
coincides for ``SO_{2n+1}`` and ``O_{2n}``).  Rank enters only through the
Levi route, which mirrors the type-B quotient at a chosen rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from . import characters, lr, quotient_a, quotient_b
from .lr import Expansion
from .partitions import Partition, conjugate, length, make_partition, partitions_up_to, size, subpartitions

GROUPS = ("gl", "so", "sp")


def _check_group(family: str, allowed=GROUPS) -> None:
    if family not in allowed:
        raise ValueError(f"family must be one of {allowed}, got {family!r}")


# ---------------------------------------------------------------------------
# universal basis changes

def gl_to_so(nu) -> Expansion:
    return lr.gl_to_classical(nu, "so")


def gl_to_sp(nu) -> Expansion:
    return lr.gl_to_classical(nu, "sp")


def so_to_gl(la) -> Expansion:
    return lr.classical_to_gl(la, "so")


def sp_to_gl(la) -> Expansion:
    return lr.classical_to_gl(la, "sp")


def convert(expansion: Mapping, source: str, target: str) -> Expansion:
    """Rewrite a combination of universal characters in another basis."""
    _check_group(source)
    _check_group(target)
    if source == target:
        return Expansion(expansion, target)
    if source != "gl":
        via_gl = Expansion(family="gl")
        for la, c in expansion.items():
            for nu, v in lr.classical_to_gl(la, source).items():
                via_gl.add(nu, c * v)
        return convert(via_gl, "gl", target)
    out = Expansion(family=target)
    for nu, c in expansion.items():
        for la, v in lr.gl_to_classical(nu, target).items():
            out.add(la, c * v)
    return out


def omega_dual(expansion: Mapping) -> Expansion:
    """The involution exchanging ``s^so_la`` and ``s^sp_{la'}``."""
    family = getattr(expansion, "family", None)
    swapped = {"so": "sp", "sp": "so"}.get(family, family)
    return Expansion({conjugate(k): v for k, v in expansion.items()}, swapped)


# ---------------------------------------------------------------------------
# power-sum plethysm through the Schur basis

@lru_cache(maxsize=4096)
def _psi_classical(la: Partition, ell: int, family: str) -> Expansion:
    out = Expansion(family=family)
    for nu, r in lr.classical_to_gl(la, family).items():
        for delta, a in quotient_a.psi_gl(nu, ell).items():
            for mu, b in lr.gl_to_classical(delta, family).items():
                out.add(mu, r * a * b)
    return out


def psi_so(la, ell: int) -> Expansion:
    """``p_l o s^so_la`` on the so basis."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return _psi_classical(make_partition(la), ell, "so")


def psi_sp(la, ell: int) -> Expansion:
    """``p_l o s^sp_la`` on the sp basis, from the sp Littlewood formulas."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    return _psi_classical(make_partition(la), ell, "sp")


def psi(la, ell: int, family: str) -> Expansion:
    _check_group(family)
    if family == "gl":
        return quotient_a.psi_gl(la, ell)
    return psi_so(la, ell) if family == "so" else psi_sp(la, ell)


def a_so(la, mu, ell: int) -> int:
    """Stable coefficient of ``s^so_mu`` in ``p_l o s^so_la``.

    ``sum_nu (-1)^((|la|-|nu|)/2) r^so_{la,nu} sum_delta a^gl_{nu,delta} b^so_{delta,mu}``.
    """
    return psi_so(la, ell).get(make_partition(mu), 0)


def a_sp(la, mu, ell: int) -> int:
    return psi_sp(la, ell).get(make_partition(mu), 0)


def a_sp_dual(la, mu, ell: int) -> int:
    """``a^sp`` through the so coefficients of the conjugate shapes."""
    la = make_partition(la)
    sign = -1 if (ell - 1) * size(la) % 2 else 1
    return sign * a_so(conjugate(la), conjugate(mu), ell)


def candidate_partitions(la, ell: int):
    """Every ``mu`` that can occur in ``p_l o s^so_la`` or ``p_l o s^sp_la``."""
    la = make_partition(la)
    top = ell * size(la)
    yield from partitions_up_to(top, parity=top % 2)


# ---------------------------------------------------------------------------
# Levi route

def levi_lr_multiplicity(la, gamma) -> int:
    """``[V^{so_{2n+1}}(la) : V^{gl_n}(gamma)] = sum c^la_{delta,xi} c^xi_{gamma-,gamma+}`` (stable rank)."""
    la = make_partition(la)
    total = 0
    for xi in subpartitions(la):
        if size(xi) != size(gamma.neg) + size(gamma.pos):
            continue
        inner = sum(lr.lr_coefficient(delta, xi, la)
                    for delta in subpartitions(la, size(la) - size(xi)))
        if inner:
            total += inner * lr.lr_coefficient(gamma.neg, gamma.pos, xi)
    return total


def a_so_via_levi(la, mu, ell: int, n: int) -> int:
    """``eps(mu) [V^{so_{2n+1}}(la) : V^{g_{l,mu}}(gamma_{l,mu})]`` at rank ``n``.

    For ``l = 2`` the multiplicity is the LR sum; for ``l > 2`` it is read off
    the Levi restriction of the exact character.
    """
    la, mu = make_partition(la), make_partition(mu)
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    if n < ell * size(la) or n < length(mu):
        raise ValueError(f"rank {n} is below the stable range (need n >= {ell * size(la)} "
                         f"and n >= {length(mu)})")
    if ell == 1:
        return 1 if la == mu else 0
    datum = quotient_b.sign_levi_weight(mu, ell, n)
    if datum.sign == 0:
        return 0
    if ell == 2:
        return datum.sign * levi_lr_multiplicity(la, datum.gl_weights[0])
    if size(la) == 0:
        return datum.sign * (1 if datum.weight_size() == 0 else 0)
    mult = characters.levi_branch_oracle(la, n, datum.gl_blocks, datum.gl_weights,
                                         datum.so_rank, datum.so_weight or ())
    return datum.sign * mult


# ---------------------------------------------------------------------------
# products of power sums

def tensor_product(a: Mapping, b: Mapping, family: str) -> Expansion:
    """Product of two combinations of universal characters of one family."""
    _check_group(family)
    mult = lr.schur_product if family == "gl" else lr.newell_littlewood
    return lr.product_expansion(a, b, mult, family)


def plethysm_power_monomial(la, family: str, exponents: Sequence[int]) -> Expansion:
    """``(p_{b_1} ... p_{b_k}) o s^g_la`` on the basis of ``family``."""
    _check_group(family)
    if any(b < 1 for b in exponents):
        raise ValueError("power-sum degrees must be positive")
    acc = Expansion({(): 1}, family)
    for b in exponents:
        acc = tensor_product(acc, psi(la, b, family), family)
    return acc


# ---------------------------------------------------------------------------
# symmetric / antisymmetric square

@dataclass(frozen=True)
class SplitResult:
    plus: Expansion
    minus: Expansion


def _halves(square: Mapping, psi2: Mapping, family: str) -> SplitResult:
    plus, minus = Expansion(family=family), Expansion(family=family)
    for mu in set(square) | set(psi2):
        t, s = square.get(mu, 0), psi2.get(mu, 0)
        for target, value in ((plus, t + s), (minus, t - s)):
            if value % 2 or value < 0:
                raise ArithmeticError(f"invalid multiplicity {value}/2 at {mu}")
            target.add(mu, value // 2)
    return SplitResult(plus, minus)


def split_square(la, family: str) -> SplitResult:
    """``S^2 V(la)`` and ``Lambda^2 V(la)`` as ``1/2 (s_la^2 +- p_2 o s_la)``."""
    _check_group(family)
    la = make_partition(la)
    if family == "gl":
        square = lr.schur_product(la, la)
    else:
        square = lr.newell_littlewood(la, la)
    return _halves(square, psi(la, 2, family), family)


def split_square_closed_form(la, family: str, n: int | None = None) -> SplitResult:
    """The same split from the explicit LR-sum formulas at rank ``n`` (default ``2|la| + 1``)."""
    _check_group(family)
    la = make_partition(la)
    if n is None:
        n = 2 * size(la) + 1
    if n < 2 * size(la):
        raise ValueError("rank must be at least 2|la|")
    square, second = Expansion(), Expansion()
    top = 2 * size(la)
    if family == "gl":
        for mu in partitions_up_to(top, parity=0):
            if size(mu) != top:
                continue
            square.add(mu, lr.lr_coefficient(la, la, mu))
            q = quotient_a.ell_quotient_a(mu, 2, n)
            if q.sign:
                second.add(mu, q.sign * lr.multi_lr(q.quotient, la))
        return _halves(square, second, family)
    conj = family == "sp"
    base = conjugate(la) if conj else la
    outer_sign = (-1) ** size(la) if conj else 1
    for mu in partitions_up_to(top, parity=0):
        if length(mu) > n or (conj and length(conjugate(mu)) > n):
            continue
        key = conjugate(mu) if conj else mu
        d = sum(lr.lr_coefficient(delta, xi, key) * lr.lr_coefficient(delta, eta, base)
                * lr.lr_coefficient(xi, eta, base)
                for delta in subpartitions(base) for xi in subpartitions(key, size(key) - size(delta))
                for eta in subpartitions(base, size(base) - size(delta)))
        square.add(mu, d)
        datum = quotient_b.sign_levi_weight(key, 2, n)
        if datum.sign:
            second.add(mu, outer_sign * datum.sign * levi_lr_multiplicity(base, datum.gl_weights[0]))
    return _halves(square, second, family)


def clear_caches() -> None:
    _psi_classical.cache_clear()
    quotient_a.clear_caches()
    lr.clear_caches()
