"""Littlewood-Richardson coefficients and the coefficient families built on them.

Two independent engines live here:

* :func:`skew_expansion` enumerates LR tableaux of a skew shape (semistandard
  fillings whose reverse reading word is a lattice word), cell by cell;
* :func:`schur_product` grows the outer shape by adding each row of the
  content as a horizontal strip, tracking the lattice condition per row.

:func:`lr_coefficient` uses the first; the test-suite checks them against each
other and against explicit Schur polynomials.
"""

from __future__ import annotations

import json
import os
import threading
from collections import defaultdict
from functools import lru_cache, reduce
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .partitions import (
    Partition,
    conjugate,
    contains,
    format_partition,
    frobenius_gamma,
    frobenius_gamma_prime,
    is_even_columns,
    is_even_rows,
    make_partition,
    size,
    strict_sequences,
    subpartitions,
)

FAMILIES = ("so", "sp")


class Expansion(dict):
    """Finitely supported integer combination of basis elements indexed by partitions.

    ``family`` records the basis (``"gl"``, ``"so"``, ``"sp"`` or ``None``).
    Zero coefficients are never stored.
    """

    def __init__(self, data: Mapping | Iterable = (), family: str | None = None):
        super().__init__()
        self.family = family
        items = data.items() if isinstance(data, Mapping) else data
        for key, value in items:
            self.add(key, value)

    def add(self, key, value: int) -> None:
        if not value:
            return
        key = tuple(key)
        total = self.get(key, 0) + value
        if total:
            self[key] = total
        else:
            del self[key]

    def scaled(self, factor: int) -> "Expansion":
        return Expansion({k: factor * v for k, v in self.items()}, self.family)

    def __add__(self, other: Mapping) -> "Expansion":
        out = Expansion(self, self.family)
        for k, v in other.items():
            out.add(k, v)
        return out

    def __sub__(self, other: Mapping) -> "Expansion":
        return self + Expansion(other).scaled(-1)

    def conjugated(self, family: str | None = None) -> "Expansion":
        return Expansion({conjugate(k): v for k, v in self.items()}, family or self.family)

    def restricted(self, max_length: int) -> "Expansion":
        return Expansion({k: v for k, v in self.items() if len(k) <= max_length}, self.family)

    def sorted_items(self):
        return sorted(self.items(), key=lambda kv: (-size(kv[0]), tuple(-p for p in kv[0])))

    def to_json(self) -> Dict[str, int]:
        return {format_partition(k): v for k, v in self.sorted_items()}

    def __repr__(self):
        body = ", ".join(f"{format_partition(k)}: {v}" for k, v in self.sorted_items())
        tag = f"{self.family}:" if self.family else ""
        return f"{tag}{{{body}}}"


# ---------------------------------------------------------------------------
# LR tableaux of a skew shape

def _lr_tableaux(outer: Partition, inner: Partition,
                 content: Partition | None = None) -> Dict[Partition, int]:
    """Count LR tableaux of shape ``outer/inner`` grouped by content."""
    rows = [(inner[r] if r < len(inner) else 0, outer[r]) for r in range(len(outer))]
    cells = [(r, c) for r, (lo, hi) in enumerate(rows) for c in range(hi - 1, lo - 1, -1)]
    filling: Dict[Tuple[int, int], int] = {}
    counts = [0] * (len(cells) + 2)
    limit = list(content) + [0] if content is not None else None
    result: Dict[Partition, int] = defaultdict(int)

    def rec(idx: int, top: int) -> None:
        # top = largest letter used so far
        if idx == len(cells):
            shape = tuple(counts[1:top + 1])
            if limit is None or shape == content:
                result[shape] += 1
            return
        r, c = cells[idx]
        hi = top + 1
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((r - 1, c))
        if above is not None:
            lo = above + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            if limit is not None and (v > len(content) or counts[v] + 1 > limit[v - 1]):
                continue
            filling[(r, c)] = v
            counts[v] += 1
            rec(idx + 1, max(top, v))
            counts[v] -= 1
            del filling[(r, c)]

    rec(0, 0)
    return dict(result)


@lru_cache(maxsize=200_000)
def skew_expansion(outer: Partition, inner: Partition) -> Expansion:
    """``s_{outer/inner}`` on the Schur basis: ``{sigma: c^outer_{inner, sigma}}``."""
    if not contains(outer, inner):
        return Expansion(family="gl")
    return Expansion(_lr_tableaux(outer, inner), "gl")


_disk_lock = threading.Lock()
_disk_cache: Dict[Tuple[Partition, Partition, Partition], int] = {}
_disk_pending: list = []


def lr_coefficient(la: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^nu_{la, mu}``: multiplicity of ``s_nu`` in ``s_la * s_mu``."""
    la, mu, nu = make_partition(la), make_partition(mu), make_partition(nu)
    if size(nu) != size(la) + size(mu) or not contains(nu, la) or not contains(nu, mu):
        return 0
    key = (la, mu, nu)
    if key in _disk_cache:
        return _disk_cache[key]
    value = skew_expansion(nu, la).get(mu, 0)
    if os.environ.get("PLETHYON_CACHE_DIR"):
        with _disk_lock:
            if key not in _disk_cache:
                _disk_cache[key] = value
                _disk_pending.append(key)
    return value


def load_disk_cache(directory: str) -> int:
    """Load LR records (one JSON object per line) from ``directory/lr.jsonl``."""
    path = os.path.join(directory, "lr.jsonl")
    if not os.path.exists(path):
        return 0
    loaded = 0
    with _disk_lock, open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            rec = json.loads(line)
            key = (tuple(rec["lambda"]), tuple(rec["mu"]), tuple(rec["nu"]))
            _disk_cache[key] = int(rec["c"])
            loaded += 1
    return loaded


def flush_disk_cache(directory: str) -> int:
    """Append LR values computed since the last flush."""
    with _disk_lock:
        pending, _disk_pending[:] = list(_disk_pending), []
    if not pending:
        return 0
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "lr.jsonl"), "a") as fh:
        for la, mu, nu in pending:
            fh.write(json.dumps({"lambda": list(la), "mu": list(mu), "nu": list(nu),
                                 "c": _disk_cache[(la, mu, nu)]}) + "\n")
    return len(pending)


# ---------------------------------------------------------------------------
# Products by horizontal strips

def _add_letter(shape: Partition, prev_cum: Sequence[int], count: int,
                bound: Partition | None) -> Iterator[Tuple[Partition, Tuple[int, ...]]]:
    """Add ``count`` copies of the next letter as a horizontal strip.

    ``prev_cum[r]`` is the number of copies of the previous letter in rows
    ``0..r``; the lattice condition asks that the new letter's cumulative
    count through row ``r`` never exceed ``prev_cum[r-1]``.
    Yields the new shape and the cumulative counts of the new letter.
    """
    nrows = len(shape) + 1
    old = list(shape) + [0]

    def rec(r, remaining, cum, new_rows, new_cum):
        if r == nrows:
            if remaining == 0:
                yield make_partition(new_rows), tuple(new_cum)
            return
        cap = remaining
        if r > 0:
            cap = min(cap, old[r - 1] - old[r])
        if prev_cum is not None:
            allowed = prev_cum[r - 1] if 0 < r <= len(prev_cum) else (
                prev_cum[-1] if r > len(prev_cum) and prev_cum else 0)
            cap = min(cap, allowed - cum)
        if bound is not None:
            cap = min(cap, (bound[r] if r < len(bound) else 0) - old[r])
        for k in range(max(cap, -1), -1, -1):
            yield from rec(r + 1, remaining - k, cum + k, new_rows + [old[r] + k],
                           new_cum + [cum + k])

    yield from rec(0, count, 0, [], [])


@lru_cache(maxsize=100_000)
def _schur_product(la: Partition, mu: Partition, bound: Partition | None) -> Expansion:
    states = {(la, None): 1}
    for count in mu:
        nxt: Dict = defaultdict(int)
        for (shape, prev), mult in states.items():
            for new_shape, cum in _add_letter(shape, prev, count, bound):
                nxt[(new_shape, cum)] += mult
        states = nxt
    out = Expansion(family="gl")
    for (shape, _), mult in states.items():
        out.add(shape, mult)
    return out


def schur_product(la: Sequence[int], mu: Sequence[int]) -> Expansion:
    """``s_la * s_mu`` on the Schur basis."""
    la, mu = make_partition(la), make_partition(mu)
    if size(mu) > size(la):
        la, mu = mu, la
    return _schur_product(la, mu, None)


def product_expansion(a: Mapping, b: Mapping, multiply=None, family="gl") -> Expansion:
    """Bilinear extension of ``multiply`` (default: Schur product)."""
    multiply = multiply or schur_product
    out = Expansion(family=family)
    for ka, va in a.items():
        for kb, vb in b.items():
            for k, v in multiply(ka, kb).items():
                out.add(k, va * vb * v)
    return out


def multi_lr(shapes: Sequence[Sequence[int]], nu: Sequence[int]) -> int:
    """Coefficient of ``s_nu`` in ``s_{shapes[0]} * s_{shapes[1]} * ...``."""
    nu = make_partition(nu)
    shapes = [make_partition(s) for s in shapes]
    if sum(size(s) for s in shapes) != size(nu):
        return 0
    if not shapes:
        return 1 if not nu else 0
    acc = Expansion({shapes[0]: 1}) if contains(nu, shapes[0]) else Expansion()
    for s in shapes[1:]:
        nxt = Expansion()
        for shape, mult in acc.items():
            for k, v in _schur_product(shape, s, nu).items():
                nxt.add(k, mult * v)
        acc = nxt
    return acc.get(nu, 0)


# ---------------------------------------------------------------------------
# Stable so/sp tensor products

@lru_cache(maxsize=20_000)
def newell_littlewood(la: Partition, mu: Partition) -> Expansion:
    """``{nu: d^nu_{la,mu}}`` with ``d = sum c^la_{xi,sigma} c^mu_{xi,tau} c^nu_{sigma,tau}``."""
    la, mu = make_partition(la), make_partition(mu)
    out = Expansion()
    for xi in subpartitions(la):
        if not contains(mu, xi):
            continue
        left = skew_expansion(la, xi)
        right = skew_expansion(mu, xi)
        for k, v in product_expansion(left, right).items():
            out.add(k, v)
    return out


def stable_tensor_coefficient(la, mu, nu) -> int:
    la, mu, nu = make_partition(la), make_partition(mu), make_partition(nu)
    return newell_littlewood(la, mu).get(nu, 0)


# ---------------------------------------------------------------------------
# Littlewood branching (b) and inversion (r) coefficients

def _check_family(family: str) -> None:
    if family not in FAMILIES:
        raise ValueError(f"family must be 'so' or 'sp', got {family!r}")


def _in_class(gamma: Partition, family: str) -> bool:
    return is_even_rows(gamma) if family == "so" else is_even_columns(gamma)


@lru_cache(maxsize=50_000)
def _gl_to_classical(nu: Partition, family: str) -> Expansion:
    out = Expansion(family=family)
    for gamma in subpartitions(nu):
        if _in_class(gamma, family):
            for la, c in skew_expansion(nu, gamma).items():
                out.add(la, c)
    return out


def littlewood_b(nu, la, family: str) -> int:
    """``b_{nu,la} = sum_gamma c^nu_{la,gamma}`` over even-row (so) / even-column (sp) gamma."""
    _check_family(family)
    nu, la = make_partition(nu), make_partition(la)
    return _gl_to_classical(nu, family).get(la, 0)


def _gamma_shapes(total: int, family: str) -> Iterator[Partition]:
    maker = frobenius_gamma_prime if family == "so" else frobenius_gamma
    if total % 2:
        return
    for alpha in strict_sequences(total // 2):
        yield maker(alpha)


@lru_cache(maxsize=50_000)
def _classical_to_gl_unsigned(la: Partition, family: str) -> Expansion:
    out = Expansion(family="gl")
    for total in range(0, size(la) + 1, 2):
        for shape in _gamma_shapes(total, family):
            if contains(la, shape):
                for nu, c in skew_expansion(la, shape).items():
                    out.add(nu, c)
    return out


def littlewood_r(la, nu, family: str) -> int:
    """``r_{la,nu} = sum_alpha c^la_{nu, Gamma(alpha)}`` (``Gamma'`` for so), empty alpha included."""
    _check_family(family)
    la, nu = make_partition(la), make_partition(nu)
    return _classical_to_gl_unsigned(la, family).get(nu, 0)


def gl_to_classical(nu, family: str) -> Expansion:
    """Universal ``s^gl_nu`` on the so or sp basis (coefficients ``b``)."""
    _check_family(family)
    return _gl_to_classical(make_partition(nu), family)


def classical_to_gl(la, family: str) -> Expansion:
    """Universal ``s^so_la`` / ``s^sp_la`` on the Schur basis (signed ``r``)."""
    _check_family(family)
    la = make_partition(la)
    return Expansion({nu: (-1) ** ((size(la) - size(nu)) // 2) * c
                      for nu, c in _classical_to_gl_unsigned(la, family).items()}, "gl")


def clear_caches() -> None:
    for fn in (skew_expansion, _schur_product, newell_littlewood,
               _gl_to_classical, _classical_to_gl_unsigned):
        fn.cache_clear()


__all__ = [
    "Expansion",
    "classical_to_gl",
    "clear_caches",
    "flush_disk_cache",
    "gl_to_classical",
    "littlewood_b",
    "littlewood_r",
    "load_disk_cache",
    "lr_coefficient",
    "multi_lr",
    "newell_littlewood",
    "product_expansion",
    "schur_product",
    "skew_expansion",
    "stable_tensor_coefficient",
]
