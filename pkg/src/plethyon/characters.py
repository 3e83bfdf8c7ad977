"""Exact Weyl characters of GL_n, SO_{2n+1}, Sp_{2n} and O_{2n} as Laurent polynomials.

This module is the independent oracle for everything else in the package.
It knows nothing about Littlewood-Richardson coefficients: characters are
built from Freudenthal's multiplicity formula and orbit sums, and Laurent
polynomials are decomposed by straightening ``x^(e + rho)`` into the dominant
chamber (the alternant trick).

Families: ``"gl"``, ``"so_odd"`` (B_n), ``"sp"`` (C_n), ``"so_even"`` (D_n,
where the character of ``la`` with ``la_n != 0`` is the O_{2n} character,
i.e. the sum over ``la`` and its mirror image).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .lr import Expansion
from .partitions import Partition, make_partition

Weight = Tuple[int, ...]
FAMILIES = ("gl", "so_odd", "sp", "so_even")


@dataclass(frozen=True)
class GroupLabel:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if self.n < 1:
            raise ValueError("rank must be at least 1")

    @property
    def weyl_type(self) -> str:
        return {"gl": "A", "so_odd": "B", "sp": "C", "so_even": "D"}[self.family]

    def __str__(self):
        return {"gl": f"GL_{self.n}", "so_odd": f"SO_{2 * self.n + 1}",
                "sp": f"Sp_{2 * self.n}", "so_even": f"O_{2 * self.n}"}[self.family]


class LaurentPoly:
    """Sparse Laurent polynomial in ``n`` variables with integer coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Weight, int] | Iterable = ()):
        self.n = n
        self.terms: Dict[Weight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length != {n}")
            if c:
                total = self.terms.get(e, 0) + c
                if total:
                    self.terms[e] = total
                else:
                    self.terms.pop(e, None)

    @classmethod
    def constant(cls, n: int, c: int = 1) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.n == other.n and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = LaurentPoly(self.n, self.terms)
        return LaurentPoly(self.n, list(out.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + other.scale(-1)

    def scale(self, c: int) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.n != other.n:
            raise ValueError("variable count mismatch")
        acc: Dict[Weight, int] = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return LaurentPoly(self.n, acc)

    def power_substitute(self, ell: int) -> "LaurentPoly":
        """``P(x_1^l, ..., x_n^l)``."""
        return LaurentPoly(self.n, {tuple(ell * a for a in e): c for e, c in self.terms.items()})

    def at_ones(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> Dict[str, int]:
        return {",".join(map(str, e)): c for e, c in sorted(self.terms.items(), reverse=True)}

    def __repr__(self):
        return f"LaurentPoly(n={self.n}, {len(self.terms)} terms)"


# ---------------------------------------------------------------------------
# root data

@lru_cache(maxsize=None)
def positive_roots(wtype: str, n: int) -> Tuple[Weight, ...]:
    roots = []

    def unit(*pairs):
        v = [0] * n
        for i, c in pairs:
            v[i] += c
        return tuple(v)

    for i in range(n):
        for j in range(i + 1, n):
            roots.append(unit((i, 1), (j, -1)))
            if wtype in "BCD":
                roots.append(unit((i, 1), (j, 1)))
        if wtype == "B":
            roots.append(unit((i, 1)))
        elif wtype == "C":
            roots.append(unit((i, 2)))
    return tuple(roots)


@lru_cache(maxsize=None)
def two_rho(wtype: str, n: int) -> Weight:
    """Twice the half sum of positive roots (integral in every type)."""
    return tuple(sum(r[i] for r in positive_roots(wtype, n)) for i in range(n))


def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _inversions(seq: Sequence[int]) -> int:
    return sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] < seq[j])


def dominant_representative(v: Sequence[int], wtype: str) -> Weight:
    """The dominant element of the Weyl-group orbit of ``v``."""
    if wtype == "A":
        return tuple(sorted(v, reverse=True))
    dom = sorted((abs(a) for a in v), reverse=True)
    if wtype == "D" and dom and dom[-1] != 0 and sum(1 for a in v if a < 0) % 2:
        dom[-1] = -dom[-1]
    return tuple(dom)


def straighten(v: Sequence[int], wtype: str) -> Tuple[int, Weight]:
    """``(eps(w), w v)`` with ``w v`` strictly dominant, or ``(0, ())`` if ``v`` is singular."""
    if wtype == "A":
        if len(set(v)) != len(v):
            return 0, ()
        return (-1 if _inversions(v) % 2 else 1), tuple(sorted(v, reverse=True))
    absv = [abs(a) for a in v]
    if len(set(absv)) != len(absv):
        return 0, ()
    neg = sum(1 for a in v if a < 0)
    if wtype in "BC":
        if 0 in absv:
            return 0, ()
        sign = -1 if (_inversions(absv) + neg) % 2 else 1
        return sign, tuple(sorted(absv, reverse=True))
    # type D: only an even number of sign changes is available
    dom = sorted(absv, reverse=True)
    if neg % 2 and 0 not in absv:
        dom[-1] = -dom[-1]
    return (-1 if _inversions(absv) % 2 else 1), tuple(dom)


def is_dominant(v: Sequence[int], wtype: str) -> bool:
    if any(a < b for a, b in zip(v, v[1:])):
        return False
    if wtype in "BC":
        return not v or v[-1] >= 0
    if wtype == "D":
        return len(v) < 2 or v[-2] >= abs(v[-1])
    return True


# ---------------------------------------------------------------------------
# Freudenthal

@lru_cache(maxsize=2048)
def dominant_multiplicities(wtype: str, n: int, la: Weight) -> Dict[Weight, int]:
    """Multiplicities of the dominant weights of the irreducible module ``V(la)``."""
    la = tuple(la)
    if len(la) != n or not is_dominant(la, wtype):
        raise ValueError(f"{la} is not a dominant weight of type {wtype}{n}")
    roots = positive_roots(wtype, n)
    rho2 = two_rho(wtype, n)
    found = {la}
    frontier = [la]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in roots:
                v = tuple(x - y for x, y in zip(mu, a))
                if v not in found and is_dominant(v, wtype):
                    found.add(v)
                    nxt.append(v)
        frontier = nxt
    height = tuple(range(n, 0, -1))
    order = sorted(found, key=lambda w: -_dot(w, height))
    mult = {la: 1}
    for mu in order[1:]:
        total = 0
        for a in roots:
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, a))
                d = dominant_representative(v, wtype)
                if d not in found:
                    break
                total += mult[d] * _dot(v, a)
                k += 1
        den = _dot([x - y for x, y in zip(la, mu)], [x + y + z for x, y, z in zip(la, mu, rho2)])
        value, rem = divmod(2 * total, den)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mult[mu] = value
    return {mu: m for mu, m in mult.items() if m}


def _multiset_permutations(values: Sequence[int]) -> Iterator[Weight]:
    counts: Dict[int, int] = defaultdict(int)
    for v in values:
        counts[v] += 1
    keys = sorted(counts)
    n = len(values)
    out: List[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


def orbit(mu: Weight, wtype: str) -> Iterator[Weight]:
    """The Weyl-group orbit of a dominant weight."""
    if wtype == "A":
        yield from _multiset_permutations(mu)
        return
    absmu = [abs(a) for a in mu]
    need_parity = None
    if wtype == "D" and 0 not in absmu:
        need_parity = sum(1 for a in mu if a < 0) % 2
    for perm in _multiset_permutations(absmu):
        nz = [i for i, a in enumerate(perm) if a]
        for mask in range(1 << len(nz)):
            if need_parity is not None and bin(mask).count("1") % 2 != need_parity:
                continue
            v = list(perm)
            for bit, i in enumerate(nz):
                if mask >> bit & 1:
                    v[i] = -v[i]
            yield tuple(v)


def _pad(la: Sequence[int], n: int) -> Weight:
    la = tuple(la)
    if len(la) > n:
        raise ValueError(f"{la} has more than {n} parts")
    return la + (0,) * (n - len(la))


@lru_cache(maxsize=1024)
def _character(family: str, n: int, la: Weight) -> LaurentPoly:
    g = GroupLabel(family, n)
    wtype = g.weyl_type
    weights = [la]
    if family == "so_even" and la[-1] != 0:
        weights.append(la[:-1] + (-la[-1],))
    terms: Dict[Weight, int] = defaultdict(int)
    for hw in weights:
        for mu, m in dominant_multiplicities(wtype, n, hw).items():
            for v in orbit(mu, wtype):
                terms[v] += m
    return LaurentPoly(n, terms)


def weyl_character(g: GroupLabel, la: Sequence[int]) -> LaurentPoly:
    """Character of ``V^g(la)``; ``la`` is a partition of length at most ``n``.

    For ``gl`` any weakly decreasing integer vector is accepted (rational weights).
    """
    if g.family == "gl":
        la = tuple(int(a) for a in la)
        if any(a < b for a, b in zip(la, la[1:])):
            raise ValueError("GL weight must be weakly decreasing")
        if len(la) > g.n:
            raise ValueError(f"{la} has more than {g.n} parts")
        if la and la[-1] < 0 and len(la) < g.n:
            raise ValueError("rational GL weights must be given with full length")
        return _character("gl", g.n, _pad(la, g.n))
    la = make_partition(la)
    if len(la) > g.n:
        raise ValueError(f"length of {la} exceeds the rank {g.n}")
    return _character(g.family, g.n, _pad(la, g.n))


def weyl_dimension(g: GroupLabel, la: Sequence[int]) -> int:
    wtype = g.weyl_type
    v = _pad(tuple(la), g.n)
    rho2 = two_rho(wtype, g.n)
    num = Fraction(1)
    shifted = tuple(2 * a + r for a, r in zip(v, rho2))
    for a in positive_roots(wtype, g.n):
        num *= Fraction(_dot(shifted, a), _dot(rho2, a))
    if num.denominator != 1:
        raise ArithmeticError("non-integral dimension")
    dim = int(num)
    if g.family == "so_even" and v and v[-1] != 0:
        dim *= 2
    return dim


# ---------------------------------------------------------------------------
# decomposition

class NotInvariantError(ValueError):
    pass


def _orbit_size(mu: Weight, wtype: str) -> int:
    from math import factorial

    vals = [abs(a) for a in mu] if wtype != "A" else list(mu)
    counts: Dict[int, int] = defaultdict(int)
    for a in vals:
        counts[a] += 1
    size = factorial(len(vals))
    for c in counts.values():
        size //= factorial(c)
    if wtype != "A":
        size *= 2 ** sum(1 for a in vals if a)
        if wtype == "D" and 0 not in vals:
            size //= 2
    return size


def check_invariant(P: LaurentPoly, wtype: str) -> None:
    groups: Dict[Weight, List[int]] = defaultdict(list)
    for e, c in P.terms.items():
        groups[dominant_representative(e, wtype)].append(c)
    for dom, coeffs in groups.items():
        if len(coeffs) != _orbit_size(dom, wtype) or len(set(coeffs)) != 1:
            raise NotInvariantError(f"polynomial is not Weyl-invariant near weight {dom}")


def _straighten_blocks(e: Weight, blocks: Sequence[Tuple[str, int]]) -> Tuple[int, Weight]:
    """Straighten ``e + rho`` blockwise; returns the sign and the dominant weight."""
    sign = 1
    out: List[int] = []
    pos = 0
    for wtype, r in blocks:
        rho2 = two_rho(wtype, r)
        v = tuple(2 * a + b for a, b in zip(e[pos:pos + r], rho2))
        s, d = straighten(v, wtype)
        if s == 0:
            return 0, ()
        sign *= s
        out.extend((x - y) // 2 for x, y in zip(d, rho2))
        pos += r
    return sign, tuple(out)


def _levi_expand(P: LaurentPoly, blocks: Sequence[Tuple[str, int]]) -> Dict[Weight, int]:
    acc: Dict[Weight, int] = defaultdict(int)
    for e, c in P.terms.items():
        s, d = _straighten_blocks(e, blocks)
        if s:
            acc[d] += s * c
    return {d: c for d, c in acc.items() if c}


def expand_in_characters(P: LaurentPoly, g: GroupLabel, check: bool = True) -> Expansion:
    """Integer coefficients ``c_mu`` with ``P = sum c_mu s^g_mu``.

    Keys are partitions; for ``gl`` a key with negative entries is returned as
    the full weight vector.
    """
    if P.n != g.n:
        raise ValueError("variable count does not match the rank")
    wtype = g.weyl_type
    if check:
        check_invariant(P, wtype)
    raw = _levi_expand(P, [(wtype, g.n)])
    out = Expansion(family=g.family)
    if g.family == "so_even":
        for mu, c in raw.items():
            if mu[-1] < 0:
                mirror = mu[:-1] + (-mu[-1],)
                if raw.get(mirror, 0) != c:
                    raise NotInvariantError(f"not O_{2 * g.n}-invariant at {mu}")
                continue
            out.add(make_partition(mu), c)
        return out
    for mu, c in raw.items():
        if mu and mu[-1] < 0:
            out.add(mu, c)
        else:
            out.add(make_partition(mu), c)
    return out


def psi_oracle(g: GroupLabel, la: Sequence[int], ell: int) -> Expansion:
    """Rank-``n`` expansion of ``p_l o s^g_la`` on Weyl characters."""
    if ell < 1:
        raise ValueError("ell must be a positive integer")
    chi = weyl_character(g, la)
    return expand_in_characters(chi.power_substitute(ell), g, check=False)


def product_oracle(g: GroupLabel, la: Sequence[int], mu: Sequence[int]) -> Expansion:
    """Rank-``n`` decomposition of ``V(la) (x) V(mu)``."""
    return expand_in_characters(weyl_character(g, la) * weyl_character(g, mu), g, check=False)


def restrict_from_gl(P: LaurentPoly, family: str) -> LaurentPoly:
    """Restriction ``r^g`` from ``GL_N`` to ``Sp_{2n}``/``SO_N``.

    The ``N`` variables specialize to ``x_1..x_n, (1), x_n^-1..x_1^-1``.
    """
    N = P.n
    if family in ("sp", "so_even"):
        if N % 2:
            raise ValueError("need an even number of variables")
        n = N // 2
    elif family == "so_odd":
        if N % 2 == 0:
            raise ValueError("need an odd number of variables")
        n = (N - 1) // 2
    else:
        raise ValueError(f"cannot restrict to {family!r}")
    acc: Dict[Weight, int] = defaultdict(int)
    for e, c in P.terms.items():
        acc[tuple(e[i] - e[N - 1 - i] for i in range(n))] += c
    return LaurentPoly(n, acc)


# ---------------------------------------------------------------------------
# Levi restriction of SO_{2n+1}

@lru_cache(maxsize=256)
def _levi_table(la: Partition, n: int, gl_blocks: Tuple[int, ...], so_rank: int) -> Dict[Weight, int]:
    chi = weyl_character(GroupLabel("so_odd", n), la)
    blocks = [("A", r) for r in gl_blocks]
    if so_rank:
        blocks.append(("B", so_rank))
    return _levi_expand(chi, blocks)


def levi_branch_oracle(la: Sequence[int], n: int, gl_blocks: Sequence[int],
                       gl_weights: Sequence, so_rank: int = 0,
                       so_weight: Sequence[int] = ()) -> int:
    """``[V^{so_{2n+1}}(la) : V^L(gamma)]`` for ``L = GL_{r_1} x ... x GL_{r_p} x SO_{2 so_rank + 1}``.

    ``gl_weights`` are :class:`~plethyon.partitions.RationalGLWeight` or
    decreasing integer vectors, one per GL block.
    """
    gl_blocks = tuple(gl_blocks)
    if sum(gl_blocks) + so_rank != n:
        raise ValueError(f"block sizes {gl_blocks} + {so_rank} do not add up to {n}")
    if len(gl_weights) != len(gl_blocks):
        raise ValueError("one weight per GL block is required")
    target: List[int] = []
    for r, w in zip(gl_blocks, gl_weights):
        vec = w.to_vector(r) if hasattr(w, "to_vector") else tuple(w)
        if len(vec) != r:
            raise ValueError(f"weight {vec} does not match GL_{r}")
        target.extend(vec)
    if so_rank:
        target.extend(_pad(make_partition(so_weight), so_rank))
    elif so_weight:
        raise ValueError("an SO weight was given without an SO block")
    table = _levi_table(make_partition(la), n, gl_blocks, so_rank)
    return table.get(tuple(target), 0)


def clear_caches() -> None:
    for fn in (dominant_multiplicities, _character, _levi_table):
        fn.cache_clear()
