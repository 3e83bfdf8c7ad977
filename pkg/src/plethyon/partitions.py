"""Partition arithmetic.

Partitions are plain tuples of positive integers in weakly decreasing
order, e.g. ``(3, 1, 1)``; the empty partition is ``()``.  Every public
function accepts any iterable of nonnegative integers and canonicalizes it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence, Tuple

Partition = Tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical (decreasing, trimmed) tuple."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return tuple(p for p in parts if p)


def size(la: Sequence[int]) -> int:
    return sum(la)


def length(la: Sequence[int]) -> int:
    return sum(1 for p in la if p)


def conjugate(la: Sequence[int]) -> Partition:
    la = make_partition(la)
    if not la:
        return ()
    return tuple(sum(1 for p in la if p > j) for j in range(la[0]))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` fits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def increasing_view(la: Sequence[int], n: int) -> Tuple[int, ...]:
    """Length-``n`` zero-padded weakly increasing copy of ``la``.

    The combinatorial algorithms index entries as ``mu_1 <= ... <= mu_n``
    and use ``mu_i + i``; this view makes those formulas apply verbatim.
    """
    la = make_partition(la)
    if len(la) > n:
        raise ValueError(f"{la} has more than {n} parts")
    return (0,) * (n - len(la)) + tuple(reversed(la))


def from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    """Partition with Frobenius coordinates ``(arms | legs)``."""
    s = len(arms)
    if len(legs) != s:
        raise ValueError("arms and legs must have the same length")
    if any(a < 0 for a in arms) or any(b < 0 for b in legs):
        raise ValueError("Frobenius coordinates must be nonnegative")
    if any(x <= y for x, y in zip(arms, arms[1:])) or any(
        x <= y for x, y in zip(legs, legs[1:])
    ):
        raise ValueError("Frobenius coordinates must be strictly decreasing")
    if s == 0:
        return ()
    rows = [arms[i] + i + 1 for i in range(s)]
    # rows below the diagonal block are read off the legs
    nrows = legs[0] + 1
    for r in range(s, nrows):
        rows.append(sum(1 for j in range(s) if legs[j] + j >= r))
    return make_partition(rows)


def _check_strict(alpha: Sequence[int]) -> Tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if any(a <= 0 for a in alpha) or any(a <= b for a, b in zip(alpha, alpha[1:])):
        raise ValueError(f"expected a strictly decreasing positive sequence, got {alpha}")
    return alpha


def frobenius_gamma(alpha: Sequence[int]) -> Partition:
    """The partition ``(alpha_1 - 1, ..., alpha_s - 1 | alpha_1, ..., alpha_s)``."""
    alpha = _check_strict(alpha)
    return from_frobenius([a - 1 for a in alpha], alpha)


def frobenius_gamma_prime(alpha: Sequence[int]) -> Partition:
    """Conjugate of :func:`frobenius_gamma`, i.e. ``(alpha | alpha - 1)``."""
    return conjugate(frobenius_gamma(alpha))


def strict_sequences(total: int) -> Iterator[Tuple[int, ...]]:
    """All strictly decreasing positive sequences summing to ``total``."""

    def rec(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in rec(remaining - first, first - 1):
                yield (first,) + rest

    yield from rec(total, total)


def is_even_rows(la: Sequence[int]) -> bool:
    return all(p % 2 == 0 for p in la)


def is_even_columns(la: Sequence[int]) -> bool:
    return is_even_rows(conjugate(la))


def enumerate_partitions(n: int, max_length: int | None = None,
                         max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("size must be nonnegative")
    yield from _partitions(n, n if max_length is None else max_length,
                           n if max_part is None else max_part)


@lru_cache(maxsize=4096)
def _partitions(n: int, max_length: int, max_part: int) -> Tuple[Partition, ...]:
    if n == 0:
        return ((),)
    if max_length <= 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, max_length - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int, max_length: int | None = None,
                     parity: int | None = None) -> Iterator[Partition]:
    """Partitions of every size ``0..n``, optionally restricted to ``size % 2 == parity``."""
    for k in range(n + 1):
        if parity is None or k % 2 == parity % 2:
            yield from enumerate_partitions(k, max_length)


def subpartitions(outer: Sequence[int], k: int | None = None) -> Iterator[Partition]:
    """Partitions contained in ``outer`` (of size ``k`` if given)."""
    outer = make_partition(outer)

    def rec(i, bound, remaining):
        if i == len(outer) or bound == 0:
            if remaining in (0, None):
                yield ()
            return
        top = min(bound, outer[i])
        if remaining is not None:
            top = min(top, remaining)
        for p in range(top, -1, -1):
            if p == 0:
                if remaining in (0, None):
                    yield ()
                continue
            for rest in rec(i + 1, p, None if remaining is None else remaining - p):
                yield (p,) + rest

    yield from rec(0, outer[0] if outer else 0, k)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,2,1"`` (decreasing parts); ``""`` is the empty partition."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return make_partition(int(t) for t in text.split(",") if t.strip())


def format_partition(la: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in la) + ")"


@dataclass(frozen=True)
class RationalGLWeight:
    """Highest weight of a rational ``GL_r`` module.

    As a decreasing integer vector of length ``r`` it reads
    ``(pos_1, ..., pos_p, 0, ..., 0, -neg_q, ..., -neg_1)``.
    """

    neg: Partition
    pos: Partition

    def __post_init__(self):
        object.__setattr__(self, "neg", make_partition(self.neg))
        object.__setattr__(self, "pos", make_partition(self.pos))

    def weight(self) -> int:
        return size(self.neg) + size(self.pos)

    @classmethod
    def from_vector(cls, vec: Sequence[int]) -> "RationalGLWeight":
        """Split a weakly monotone integer vector at its sign change."""
        neg = sorted((-v for v in vec if v < 0), reverse=True)
        pos = sorted((v for v in vec if v > 0), reverse=True)
        return cls(tuple(neg), tuple(pos))

    def to_vector(self, r: int) -> Tuple[int, ...]:
        """Decreasing length-``r`` vector (the standard dominant form)."""
        zeros = r - len(self.pos) - len(self.neg)
        if zeros < 0:
            raise ValueError(f"{self} does not fit in GL_{r}")
        return self.pos + (0,) * zeros + tuple(-x for x in reversed(self.neg))

    def __str__(self):
        return f"({format_partition(self.neg)},{format_partition(self.pos)})"
