import os

import pytest
from hypothesis import given

from conftest import partitions
from plethyon import characters as ch
from plethyon import lr
from plethyon.characters import GroupLabel
from plethyon.partitions import conjugate, enumerate_partitions, partitions_up_to, size


def test_classic_coefficient():
    assert lr.lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr.lr_coefficient((1,), (1,), (2,)) == 1
    assert lr.lr_coefficient((1,), (1,), (3,)) == 0
    assert lr.lr_coefficient((), (2, 1), (2, 1)) == 1


@given(partitions(3, 3), partitions(3, 3))
def test_symmetry_and_conjugation(la, mu):
    prod = lr.schur_product(la, mu)
    for nu, c in prod.items():
        assert lr.lr_coefficient(la, mu, nu) == c
        assert lr.lr_coefficient(mu, la, nu) == c
        assert lr.lr_coefficient(conjugate(la), conjugate(mu), conjugate(nu)) == c


@pytest.mark.parametrize("k", range(1, 6))
def test_two_engines_agree(k):
    for nu in enumerate_partitions(k + 2):
        for la in partitions_up_to(k + 2):
            if size(la) > size(nu):
                continue
            via_skew = lr.skew_expansion(nu, la)
            for mu in enumerate_partitions(size(nu) - size(la)):
                assert via_skew.get(mu, 0) == lr.schur_product(la, mu).get(nu, 0)


@pytest.mark.parametrize("la,mu", [((1,), (1,)), ((2, 1), (1,)), ((2,), (1, 1)), ((2, 1), (2, 1))])
def test_schur_product_matches_polynomials(la, mu):
    n = 4
    g = GroupLabel("gl", n)
    poly = ch.weyl_character(g, la) * ch.weyl_character(g, mu)
    assert dict(ch.expand_in_characters(poly, g)) == dict(lr.schur_product(la, mu).restricted(n))


def test_multi_lr_folds_products():
    # s_1^3 = s_3 + 2 s_21 + s_111
    assert lr.multi_lr([(1,), (1,), (1,)], (2, 1)) == 2
    assert lr.multi_lr([(1,), (1,), (1,)], (3,)) == 1
    assert lr.multi_lr([], ()) == 1
    assert lr.multi_lr([(1,)], (2,)) == 0


@pytest.mark.parametrize("la,mu", [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,))])
def test_newell_littlewood_matches_stable_tensor_products(la, mu):
    n = size(la) + size(mu) + 1
    for fam in ("so_odd", "sp"):
        got = ch.product_oracle(GroupLabel(fam, n), la, mu)
        assert dict(got) == dict(lr.newell_littlewood(la, mu))


@pytest.mark.parametrize("family,group,N", [
    ("so", "so_odd", lambda n: 2 * n + 1),
    ("so", "so_even", lambda n: 2 * n),
    ("sp", "sp", lambda n: 2 * n),
])
def test_littlewood_restriction_against_characters(family, group, N):
    for n in (1, 2, 3):
        for nu in partitions_up_to(5, max_length=n):
            P = ch.restrict_from_gl(ch.weyl_character(GroupLabel("gl", N(n)), nu), group)
            got = ch.expand_in_characters(P, GroupLabel(group, n))
            want = {la: lr.littlewood_b(nu, la, family) for la in got}
            assert dict(got) == want
            assert dict(got) == dict(lr.gl_to_classical(nu, family).restricted(n))


@pytest.mark.parametrize("family", ["so", "sp"])
def test_b_and_r_are_inverse(family):
    for la in partitions_up_to(6):
        back = lr.Expansion()
        for nu, r in lr.classical_to_gl(la, family).items():
            for mu, b in lr.gl_to_classical(nu, family).items():
                back.add(mu, r * b)
        assert dict(back) == {la: 1}


def test_littlewood_r_includes_empty_alpha_and_signs():
    # s^so_(2) = s_2 - 1 and s^sp_(1,1) = s_11 - 1
    assert dict(lr.classical_to_gl((2,), "so")) == {(2,): 1, (): -1}
    assert dict(lr.classical_to_gl((1, 1), "sp")) == {(1, 1): 1, (): -1}
    assert lr.littlewood_r((2,), (2,), "so") == 1


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("PLETHYON_CACHE_DIR", str(tmp_path))
    lr._disk_cache.clear()
    lr._disk_pending.clear()
    assert lr.lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr.flush_disk_cache(str(tmp_path)) >= 1
    assert os.path.exists(tmp_path / "lr.jsonl")
    lr._disk_cache.clear()
    assert lr.load_disk_cache(str(tmp_path)) >= 1
    assert lr._disk_cache[((2, 1), (2, 1), (3, 2, 1))] == 2
    lr._disk_cache.clear()


def test_expansion_arithmetic_and_json():
    a = lr.Expansion({(2,): 1, (1, 1): -1}, "gl")
    b = lr.Expansion({(1, 1): 1})
    assert dict(a + b) == {(2,): 1}
    assert dict(a - a) == {}
    assert a.to_json() == {"(2)": 1, "(1,1)": -1}
    assert dict(a.conjugated()) == {(1, 1): 1, (2,): -1}
