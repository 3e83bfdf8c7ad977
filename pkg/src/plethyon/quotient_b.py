"""Type-B analogue of the l-quotient.

For a partition ``mu`` at rank ``n`` and ``l >= 2`` this computes the sign
``eps(mu)``, the Levi subgroup ``GL_{r_1} x ... x GL_{r_p} (x SO_{2r+1})`` of
``SO_{2n+1}`` and the dominant weight ``gamma`` whose branching multiplicity
gives the coefficient of the Weyl character ``s_mu`` in ``p_l o s_la``.

Conventions: ``J_n = {-n..-1, 1..n}``, ``L_n = {-(n-1)..n}``,
``eta(x) = x + 1`` for ``x < 0``, ``x* = 1 - x`` on ``L_n``.  Residues mod ``l``
are labelled ``1..l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .partitions import Partition, RationalGLWeight, increasing_view, make_partition, size


# ---------------------------------------------------------------------------
# signed permutations

@dataclass(frozen=True)
class SignedPermutation:
    """Element of the hyperoctahedral group; ``images[i-1] = w(i)``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(abs(x) for x in self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1] if x > 0 else -self.images[-x - 1]

    def determinant(self) -> int:
        """Determinant of the signed permutation matrix."""
        perm = [abs(x) for x in self.images]
        inv = sum(1 for i in range(self.n) for j in range(i + 1, self.n) if perm[i] > perm[j])
        neg = sum(1 for x in self.images if x < 0)
        return -1 if (inv + neg) % 2 else 1

    def length(self) -> int:
        """Coxeter length for the generators ``(i, i+1)(-i, -i-1)`` and ``(1, -1)``."""
        w = self.images
        n = self.n
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])
        nsp = sum(1 for i in range(n) for j in range(i + 1, n) if w[i] + w[j] < 0)
        neg = sum(1 for x in w if x < 0)
        return inv + nsp + neg

    def sign(self) -> int:
        return -1 if self.length() % 2 else 1

    def tilde(self) -> Dict[int, int]:
        """``eta o w`` as a map ``J_n -> L_n``."""
        out = {}
        for x in list(range(-self.n, 0)) + list(range(1, self.n + 1)):
            y = self(x)
            out[x] = y + 1 if y < 0 else y
        return out


def star(x: int) -> int:
    return 1 - x


def _residue(x: int, ell: int) -> int:
    r = x % ell
    return r if r else ell


# ---------------------------------------------------------------------------
# sequences I, J, X

@dataclass(frozen=True)
class Sequences:
    n: int
    ell: int
    beta: Tuple[int, ...]
    I: Dict[int, Tuple[int, ...]]
    J: Dict[int, Tuple[int, ...]]
    X: Dict[int, Tuple[int, ...]]
    alpha: Dict[int, int]
    s: Dict[int, int]
    r: Dict[int, int]


def build_sequences(mu: Sequence[int], ell: int, n: int) -> Sequences:
    if ell < 2:
        raise ValueError("the type-B quotient needs ell >= 2 (ell = 1 is the identity)")
    mu = make_partition(mu)
    view = increasing_view(mu, n)
    beta = tuple(view[i - 1] + i for i in range(1, n + 1))
    L = list(range(-(n - 1), n + 1))
    I = {k: tuple(i for i in range(1, n + 1) if _residue(beta[i - 1], ell) == k)
         for k in range(1, ell + 1)}
    J = {k: tuple(x for x in L if _residue(x, ell) == k) for k in range(1, ell + 1)}
    p = ell // 2
    X = {k: tuple(sorted([-i for i in I[k]] + list(I[ell - k + 1]))) for k in range(1, p + 1)}
    if ell % 2:
        X[p + 1] = tuple(sorted([-i for i in I[p + 1]] + list(I[p + 1])))
    # (max J^(k) - k) / l; the floor form also covers an empty J^(k)
    alpha = {k: (n - k) // ell for k in range(1, ell + 1)}
    assert all((max(J[k]) - k) // ell == alpha[k] for k in J if J[k])
    s = {k: len(I[k]) for k in range(1, p + 1)}
    r = {k: len(I[k]) + len(I[ell - k + 1]) for k in range(1, p + 1)}
    if ell % 2:
        r[p + 1] = len(I[p + 1])
    return Sequences(n, ell, beta, I, J, X, alpha, s, r)


# ---------------------------------------------------------------------------
# Levi datum

@dataclass(frozen=True)
class LeviDatum:
    """Sign, Levi shape and dominant weight attached to ``(mu, l, n)``.

    ``gl_weights[k-1]`` is the ``GL_{r_k}`` weight; ``raw_weights`` holds the
    same data as weakly increasing integer vectors.  For odd ``l`` the last
    factor is ``SO_{2 r_{p+1} + 1}`` with highest weight ``so_weight``.
    """

    sign: int
    n: int
    ell: int
    gl_blocks: Tuple[int, ...] = ()
    so_block: Optional[int] = None
    gl_weights: Tuple[RationalGLWeight, ...] = ()
    raw_weights: Tuple[Tuple[int, ...], ...] = ()
    so_weight: Optional[Partition] = None
    raw_so_weight: Optional[Tuple[int, ...]] = None
    alphas: Tuple[int, ...] = ()
    s_values: Tuple[int, ...] = ()
    w0: Optional[SignedPermutation] = field(default=None, repr=False)

    @property
    def so_rank(self) -> int:
        return (self.so_block - 1) // 2 if self.so_block else 0

    def weight_size(self) -> int:
        total = sum(w.weight() for w in self.gl_weights)
        return total + (size(self.so_weight) if self.so_weight else 0)

    def levi_name(self) -> str:
        parts = [f"GL_{r}" for r in self.gl_blocks]
        if self.so_block:
            parts.append(f"SO_{self.so_block}")
        return " x ".join(parts) if parts else "trivial"


def _build_w0(seq: Sequences) -> SignedPermutation:
    """The element of W sending each X^(k) to its target J-block in increasing order."""
    ell, n = seq.ell, seq.n
    p = ell // 2
    w_tilde: Dict[int, int] = {}

    def assign(x, y):
        if x in w_tilde and w_tilde[x] != y:
            raise AssertionError(f"inconsistent w0 at {x}: {w_tilde[x]} vs {y}")
        w_tilde[x] = y

    pairs = [(seq.X[k], seq.J[ell - k + 1]) for k in range(1, p + 1)]
    if ell % 2:
        pairs.append((seq.X[p + 1], seq.J[p + 1]))
    for xs, ys in pairs:
        for x, y in zip(xs, ys):
            assign(x, y)
            assign(-x, star(y))
    domain = sorted(w_tilde)
    if domain != list(range(-n, 0)) + list(range(1, n + 1)) or \
            sorted(w_tilde.values()) != list(range(-(n - 1), n + 1)):
        raise AssertionError("w0 is not a bijection J_n -> L_n")
    images = tuple(w_tilde[i] - 1 if w_tilde[i] <= 0 else w_tilde[i] for i in range(1, n + 1))
    return SignedPermutation(images)


def sign_levi_weight(mu: Sequence[int], ell: int, n: int) -> LeviDatum:
    seq = build_sequences(mu, ell, n)
    p = ell // 2
    for k in range(1, p + 1):
        if len(seq.X[k]) != len(seq.J[k]):
            return LeviDatum(0, n, ell)
    if ell % 2 and 2 * len(seq.I[p + 1]) != len(seq.J[p + 1]):
        return LeviDatum(0, n, ell)
    w0 = _build_w0(seq)
    beta = seq.beta
    raw = []
    for k in range(1, p + 1):
        vec = []
        for pos, i in enumerate(seq.X[k], start=1):
            b = beta[abs(i) - 1]
            if i > 0:
                val = (b + k - 1) // ell
            else:
                val = -((b - k) // ell)
            vec.append(val - pos + seq.alpha[k] + 1)
        raw.append(tuple(vec))
    so_weight = raw_so = so_block = None
    if ell % 2:
        raw_so = tuple((beta[i - 1] + p) // ell - pos
                       for pos, i in enumerate(seq.I[p + 1], start=1))
        so_weight = make_partition(reversed(raw_so))
        so_block = 2 * seq.r[p + 1] + 1
    return LeviDatum(
        sign=w0.determinant(),
        n=n,
        ell=ell,
        gl_blocks=tuple(seq.r[k] for k in range(1, p + 1)),
        so_block=so_block,
        gl_weights=tuple(RationalGLWeight.from_vector(v) for v in raw),
        raw_weights=tuple(raw),
        so_weight=so_weight,
        raw_so_weight=raw_so,
        alphas=tuple(seq.alpha[k] for k in range(1, p + 1)),
        s_values=tuple(seq.s[k] for k in range(1, p + 1)),
        w0=w0,
    )


def is_stable(mu: Sequence[int], ell: int, n: int) -> bool:
    """``s_k == alpha_k + 1`` for every ``k <= l // 2``; required for a nonzero stable coefficient."""
    datum = sign_levi_weight(mu, ell, n)
    if datum.sign == 0:
        raise ValueError(f"eps({tuple(mu)}) = 0 at rank {n}; stability is undefined")
    return all(s == a + 1 for s, a in zip(datum.s_values, datum.alphas))


def pad_levi(mu: Sequence[int], ell: int, n: int) -> LeviDatum:
    """Datum after adding ``l`` zero parts to ``mu`` (rank ``n + l``)."""
    datum = sign_levi_weight(mu, ell, n)
    if datum.sign == 0:
        raise ValueError(f"eps({tuple(mu)}) = 0 at rank {n}")
    return sign_levi_weight(mu, ell, n + ell)


def predicted_padding(datum: LeviDatum) -> Tuple[Tuple[Tuple[int, ...], ...], Optional[Partition]]:
    """Weights after padding by ``l`` zeros, predicted by inserting two entries per block.

    Each GL-block vector gains two entries ``alpha_k + 1 - s_k`` between its
    first ``s_k`` and its remaining entries; the SO-block partition is unchanged.
    """
    raw = []
    for vec, a, s in zip(datum.raw_weights, datum.alphas, datum.s_values):
        c = a + 1 - s
        raw.append(vec[:s] + (c, c) + vec[s:])
    return tuple(raw), datum.so_weight


def w_tilde_table(w: SignedPermutation) -> List[Tuple[int, int]]:
    """Two-row array of ``eta o w`` over ``J_n`` in increasing order."""
    t = w.tilde()
    return [(x, t[x]) for x in sorted(t)]
