from collections import deque
from itertools import permutations, product

import pytest

from plethyon import quotient_b as qb
from plethyon.partitions import length, partitions_up_to, size


EX2 = (9, 7, 6, 5, 5, 2)
ODD = (9, 7, 6, 5, 5, 1)
NONSTABLE = (9, 6, 5, 5, 1)


def test_even_example_sequences():
    seq = qb.build_sequences(EX2, 2, 6)
    assert seq.beta == (3, 7, 8, 10, 12, 15)
    assert seq.I[2] == (3, 4, 5) and seq.I[1] == (1, 2, 6)
    assert seq.J[1] == (-5, -3, -1, 1, 3, 5)
    assert seq.J[2] == (-4, -2, 0, 2, 4, 6)
    assert seq.X[1] == (-6, -2, -1, 3, 4, 5)
    assert seq.alpha[1] == 2


def test_even_example_datum():
    d = qb.sign_levi_weight(EX2, 2, 6)
    assert d.sign == 1
    assert d.gl_blocks == (6,) and d.so_block is None
    assert d.raw_weights == ((-5, -2, -1, 3, 3, 3),)
    assert d.gl_weights[0].neg == (5, 2, 1) and d.gl_weights[0].pos == (3, 3, 3)
    assert d.levi_name() == "GL_6"
    table = qb.w_tilde_table(d.w0)
    assert [y for _, y in table] == [-4, -5, -3, -1, -2, 0, 1, 3, 2, 4, 6, 5]
    assert [d.w0(x) for x, _ in table] == [-5, -6, -4, -2, -3, -1, 1, 3, 2, 4, 6, 5]


def test_odd_example():
    seq = qb.build_sequences(ODD, 3, 6)
    assert seq.X[1] == (-4, -2, 5, 6)
    assert seq.J[3] == (-3, 0, 3, 6)
    assert seq.alpha[1] == 1
    d = qb.sign_levi_weight(ODD, 3, 6)
    assert d.sign == 1
    assert d.raw_weights == ((-2, -2, 3, 3),)
    assert d.raw_so_weight == (0, 1) and d.so_weight == (1,)
    assert d.levi_name() == "GL_4 x SO_5"
    table = qb.w_tilde_table(d.w0)
    assert [y for _, y in table] == [-5, -2, -3, -4, 0, -1, 2, 1, 5, 4, 3, 6]
    assert [d.w0(x) for x, _ in table] == [-6, -3, -4, -5, -1, -2, 2, 1, 5, 4, 3, 6]


def test_nonstable_sequence():
    weights = [qb.sign_levi_weight(NONSTABLE, 2, n).raw_weights[0] for n in (5, 6, 7)]
    assert weights == [(-1, 2, 4, 4, 5), (-5, -4, -4, -2, -2, 1), (-1, 2, 2, 2, 4, 4, 5)]
    d = qb.sign_levi_weight(NONSTABLE, 2, 5)
    assert d.s_values == (1,) and d.alphas == (2,)
    assert not qb.is_stable(NONSTABLE, 2, 5)
    assert qb.is_stable(EX2, 2, 6)


def test_empty_partition():
    d = qb.sign_levi_weight((), 2, 1)
    assert d.sign == 1 and d.weight_size() == 0
    assert qb.is_stable((), 2, 1)


def test_rejects_small_ell():
    with pytest.raises(ValueError):
        qb.build_sequences((1,), 1, 2)


def test_is_stable_undefined_at_sign_zero():
    for mu in partitions_up_to(6):
        n = max(length(mu), 1)
        if qb.sign_levi_weight(mu, 3, n).sign == 0:
            with pytest.raises(ValueError):
                qb.is_stable(mu, 3, n)
            return
    pytest.fail("no sign-zero case found")


def _count_J(n, ell, k):
    q, r = divmod(n, ell)
    return 2 * q + (k <= r) + (k >= ell - r + 1)


@pytest.mark.parametrize("ell", range(2, 7))
def test_J_cardinalities(ell):
    for n in range(1, 13):
        seq = qb.build_sequences((), ell, n)
        assert sum(len(v) for v in seq.J.values()) == 2 * n
        for k in range(1, ell + 1):
            assert len(seq.J[k]) == _count_J(n, ell, k)
            assert seq.J[ell - k + 1] == tuple(sorted(qb.star(x) for x in seq.J[k]))


def test_ell_two_sign_never_vanishes():
    for mu in partitions_up_to(8):
        for n in range(max(length(mu), 1), 9):
            assert qb.sign_levi_weight(mu, 2, n).sign != 0


@pytest.mark.parametrize("ell", [2, 3, 4, 5])
def test_involution_identity(ell):
    for mu in partitions_up_to(7):
        for n in range(max(length(mu), 1), length(mu) + 4):
            d = qb.sign_levi_weight(mu, ell, n)
            if d.sign:
                t = d.w0.tilde()
                assert all(t[-x] == qb.star(t[x]) for x in t)


def _bfs_lengths(n):
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        moves = [(-w[0],) + w[1:]]
        moves += [w[:i] + (w[i + 1], w[i]) + w[i + 2:] for i in range(n - 1)]
        for v in moves:
            if v not in dist:
                dist[v] = dist[w] + 1
                queue.append(v)
    return dist


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sign_via_determinant_and_coxeter_length(n):
    dist = _bfs_lengths(n)
    assert len(dist) == 2 ** n * len(list(permutations(range(n))))
    for perm in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            w = qb.SignedPermutation(tuple(s * p for s, p in zip(signs, perm)))
            assert w.length() == dist[w.images]
            assert w.determinant() == w.sign()


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_padding_inserts_two_components(ell):
    def total(d):
        gl = sum(abs(x) for v in d.raw_weights for x in v)
        return gl + (sum(d.raw_so_weight) if d.raw_so_weight else 0)

    for mu in partitions_up_to(6):
        for n in range(max(length(mu), 1), 9):
            d = qb.sign_levi_weight(mu, ell, n)
            if not d.sign:
                continue
            padded = qb.pad_levi(mu, ell, n)
            raw, so = qb.predicted_padding(d)
            assert padded.sign == d.sign
            assert padded.raw_weights == raw and padded.so_weight == so
            bump = sum(abs(a + 1 - s) for a, s in zip(d.alphas, d.s_values))
            assert total(padded) == total(d) + 2 * bump


def test_stable_weights_keep_nonzero_components():
    d = qb.sign_levi_weight(EX2, 2, 6)
    for m in (8, 10):
        e = qb.sign_levi_weight(EX2, 2, m)
        assert [x for x in e.raw_weights[0] if x] == [x for x in d.raw_weights[0] if x]


def test_signed_permutation_validation():
    with pytest.raises(ValueError):
        qb.SignedPermutation((1, 1))
    w = qb.SignedPermutation((-2, 1))
    assert w(1) == -2 and w(-1) == 2
