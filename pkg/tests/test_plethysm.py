import pytest

from plethyon import characters as ch
from plethyon import lr, plethysm as pl
from plethyon import quotient_b as qb
from plethyon.characters import GroupLabel
from plethyon.partitions import conjugate, enumerate_partitions, length, partitions_up_to, size


def _shapes(k):
    return list(partitions_up_to(k))


def test_small_expansions():
    assert dict(pl.psi_so((1,), 2)) == {(2,): 1, (): 1, (1, 1): -1}
    assert dict(pl.psi_sp((1,), 2)) == {(2,): 1, (1, 1): -1, (): -1}
    assert dict(pl.psi_so((), 3)) == {(): 1}


def test_coefficient_accessors():
    assert pl.a_so((1,), (2,), 2) == 1
    assert pl.a_so((1,), (), 2) == 1
    assert pl.a_so((1,), (1, 1), 2) == -1
    assert pl.a_sp((1,), (2,), 2) == 1
    assert pl.a_sp((1,), (), 2) == -1
    assert pl.a_sp((), (), 3) == 1 and pl.a_sp((), (1,), 3) == 0


def test_ell_one_is_identity():
    for la in _shapes(4):
        for fam in ("gl", "so", "sp"):
            assert dict(pl.psi(la, 1, fam)) == {la: 1}


@pytest.mark.parametrize("family,group", [("so", "so_odd"), ("so", "so_even"), ("sp", "sp")])
@pytest.mark.parametrize("ell", [2, 3])
def test_against_the_oracle(family, group, ell):
    for la in _shapes(3):
        n = max(ell * size(la), 2) + 1
        want = ch.psi_oracle(GroupLabel(group, n), la, ell)
        assert dict(pl.psi(la, ell, family).restricted(n)) == dict(want)


@pytest.mark.parametrize("ell", [1, 2, 3, 4])
def test_duality(ell):
    for la in _shapes(4):
        for mu in pl.candidate_partitions(la, ell):
            assert pl.a_sp(la, mu, ell) == pl.a_sp_dual(la, mu, ell)


def test_omega_dual_swaps_families():
    e = lr.Expansion({(2,): 1}, "so")
    d = pl.omega_dual(e)
    assert dict(d) == {(1, 1): 1} and d.family == "sp"
    assert dict(pl.omega_dual({(): 1})) == {(): 1}
    assert dict(pl.omega_dual({(2, 1): 3})) == {(2, 1): 3}


def test_basis_changes():
    assert dict(pl.gl_to_so((2,))) == {(2,): 1, (): 1}
    assert dict(pl.sp_to_gl((1, 1))) == {(1, 1): 1, (): -1}
    assert dict(pl.gl_to_so(())) == {(): 1}
    for fam in ("so", "sp"):
        for la in _shapes(6):
            assert dict(pl.convert(pl.convert({la: 1}, fam, "gl"), "gl", fam)) == {la: 1}
        assert dict(pl.convert({(2, 1): 1}, fam, fam)) == {(2, 1): 1}
    with pytest.raises(ValueError):
        pl.convert({(): 1}, "so", "xx")


def test_levi_route_ell_two():
    for la in _shapes(4):
        for n in (2 * size(la) + 1, max(2 * size(la), 1)):
            for mu in pl.candidate_partitions(la, 2):
                if length(mu) <= n:
                    assert pl.a_so(la, mu, 2) == pl.a_so_via_levi(la, mu, 2, n), (la, mu, n)


@pytest.mark.parametrize("la", [(1,), (2,), (1, 1)])
def test_levi_route_ell_three(la):
    n = 3 * size(la)
    for mu in pl.candidate_partitions(la, 3):
        if length(mu) <= n:
            assert pl.a_so(la, mu, 3) == pl.a_so_via_levi(la, mu, 3, n)


def test_levi_route_small_values():
    assert pl.a_so_via_levi((1,), (1, 1), 2, 3) == -1
    assert pl.a_so_via_levi((1,), (2,), 2, 3) == 1
    assert pl.a_so_via_levi((), (), 4, 2) == 1
    with pytest.raises(ValueError):
        pl.a_so_via_levi((1, 1), (2,), 2, 3)


@pytest.mark.parametrize("ell", [2, 3, 4])
def test_nonzero_coefficients_are_stable(ell):
    for la in _shapes(3 if ell < 4 else 2):
        n = ell * size(la) + 1
        for mu, c in pl.psi_so(la, ell).items():
            if length(mu) <= n:
                assert qb.is_stable(mu, ell, n)


def test_power_monomials():
    assert dict(pl.plethysm_power_monomial((1,), "gl", [1, 1])) == {(2,): 1, (1, 1): 1}
    assert dict(pl.plethysm_power_monomial((1,), "so", [1, 1])) == {(2,): 1, (1, 1): 1, (): 1}
    for fam in ("gl", "so", "sp"):
        assert dict(pl.plethysm_power_monomial((2, 1), fam, [2])) == dict(pl.psi((2, 1), 2, fam))
    with pytest.raises(ValueError):
        pl.plethysm_power_monomial((1,), "gl", [0])


def test_split_square_small():
    r = pl.split_square((1,), "gl")
    assert (dict(r.plus), dict(r.minus)) == ({(2,): 1}, {(1, 1): 1})
    r = pl.split_square((1,), "so")
    assert (dict(r.plus), dict(r.minus)) == ({(2,): 1, (): 1}, {(1, 1): 1})
    r = pl.split_square((1,), "sp")
    assert (dict(r.plus), dict(r.minus)) == ({(2,): 1}, {(1, 1): 1, (): 1})


@pytest.mark.parametrize("family", ["gl", "so", "sp"])
def test_split_square_closed_form_and_dimensions(family):
    group = {"gl": "gl", "so": "so_odd", "sp": "sp"}[family]
    for la in _shapes(3):
        r = pl.split_square(la, family)
        c = pl.split_square_closed_form(la, family)
        assert dict(r.plus) == dict(c.plus) and dict(r.minus) == dict(c.minus)
        assert all(v > 0 for v in list(r.plus.values()) + list(r.minus.values()))
        square = lr.schur_product(la, la) if family == "gl" else lr.newell_littlewood(la, la)
        assert dict(r.plus + r.minus) == dict(square)
        n = 2 * size(la) + 1
        g = GroupLabel(group, n)
        dim = lambda e: sum(v * ch.weyl_dimension(g, mu) for mu, v in e.items() if length(mu) <= n)
        d = ch.weyl_dimension(g, la)
        assert dim(r.plus) - dim(r.minus) == d
        assert dim(r.plus) + dim(r.minus) == d * d


def test_split_square_against_symmetric_power_oracle():
    # S^2 character = (chi(x)^2 + chi(x^2)) / 2 evaluated exactly
    for family, group in (("so", "so_odd"), ("sp", "sp")):
        for la in ((1,), (2,), (1, 1)):
            n = 2 * size(la) + 1
            g = GroupLabel(group, n)
            chi = ch.weyl_character(g, la)
            twice = chi * chi + chi.power_substitute(2)
            sym = ch.LaurentPoly(n, {e: c // 2 for e, c in twice.terms.items()})
            assert dict(ch.expand_in_characters(sym, g)) == dict(pl.split_square(la, family).plus.restricted(n))


def test_halves_reject_odd_values():
    with pytest.raises(ArithmeticError):
        pl._halves({(2,): 1}, {}, "gl")


def test_clear_caches_forces_recomputation(monkeypatch):
    from plethyon import quotient_a

    before = dict(pl.psi_so((1,), 2))
    original = quotient_a.a_gl
    monkeypatch.setattr(quotient_a, "a_gl", lambda la, mu, ell: -original(la, mu, ell))
    pl.clear_caches()
    assert dict(pl.psi_so((1,), 2)) != before
    monkeypatch.undo()
    pl.clear_caches()
    assert dict(pl.psi_so((1,), 2)) == before
