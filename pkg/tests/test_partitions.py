import pytest
from hypothesis import given

from conftest import partitions
from plethyon.partitions import (
    RationalGLWeight,
    conjugate,
    contains,
    enumerate_partitions,
    format_partition,
    frobenius_gamma,
    frobenius_gamma_prime,
    from_frobenius,
    increasing_view,
    is_even_columns,
    is_even_rows,
    make_partition,
    parse_partition,
    partitions_up_to,
    size,
    strict_sequences,
    subpartitions,
)


def test_make_partition_trims_and_validates():
    assert make_partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        make_partition([1, 2])
    with pytest.raises(ValueError):
        make_partition([2, -1])


@given(partitions())
def test_conjugation_is_an_involution(la):
    assert conjugate(conjugate(la)) == la
    assert size(conjugate(la)) == size(la)


def test_conjugate_small():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (5, 7), (10, 42), (20, 627)])
def test_partition_counts(n, count):
    assert len(tuple(enumerate_partitions(n))) == count


def test_enumeration_is_lex_descending_and_bounded():
    parts = tuple(enumerate_partitions(6, max_length=2))
    assert parts == ((6,), (5, 1), (4, 2), (3, 3))
    assert all(p[0] <= 2 for p in enumerate_partitions(6, max_part=2))


def test_partitions_up_to_parity():
    sizes = {size(p) for p in partitions_up_to(6, parity=0)}
    assert sizes == {0, 2, 4, 6}


def test_increasing_view_pads_on_the_left():
    assert increasing_view((6, 6, 4, 4, 4, 3, 2, 1), 8) == (1, 2, 3, 4, 4, 4, 6, 6)
    assert increasing_view((2, 1), 4) == (0, 0, 1, 2)
    with pytest.raises(ValueError):
        increasing_view((1, 1, 1), 2)


def test_frobenius_gamma_small_values():
    # (a-1 | a) for a = (2, 1): arms (1, 0), legs (2, 1)
    assert frobenius_gamma((2, 1)) == (2, 2, 2)
    assert frobenius_gamma_prime((2, 1)) == (3, 3)
    assert frobenius_gamma((1,)) == (1, 1)
    assert frobenius_gamma_prime((1,)) == (2,)
    assert from_frobenius((1, 0), (2, 1)) == (2, 2, 2)


def test_frobenius_gamma_size_is_twice_the_sum():
    for total in range(1, 9):
        for alpha in strict_sequences(total):
            g = frobenius_gamma(alpha)
            assert size(g) == 2 * total
            assert frobenius_gamma_prime(alpha) == conjugate(g)


def test_strict_sequences():
    assert sorted(strict_sequences(4)) == [(3, 1), (4,)]
    assert list(strict_sequences(0)) == [()]


def test_even_shapes():
    assert is_even_rows((4, 2)) and not is_even_rows((3, 1))
    assert is_even_columns((2, 2, 1, 1)) and not is_even_columns((2, 1))


@given(partitions(4, 4))
def test_subpartitions_are_contained(la):
    subs = list(subpartitions(la))
    assert len(subs) == len(set(subs))
    assert all(contains(la, mu) for mu in subs)
    assert () in subs and la in subs


def test_parse_and_format_round_trip():
    assert parse_partition("5,2,1") == (5, 2, 1)
    assert parse_partition("") == ()
    assert parse_partition("(3,1)") == (3, 1)
    assert format_partition((5, 2, 1)) == "(5,2,1)"
    assert format_partition(()) == "()"
    with pytest.raises(ValueError):
        parse_partition("1,2")


def test_rational_weight_vector_round_trip():
    w = RationalGLWeight.from_vector((-5, -2, -1, 3, 3, 3))
    assert w.neg == (5, 2, 1) and w.pos == (3, 3, 3)
    assert w.weight() == 17
    assert w.to_vector(6) == (3, 3, 3, -1, -2, -5)
    assert RationalGLWeight((1,), (2,)).to_vector(4) == (2, 0, 0, -1)
    with pytest.raises(ValueError):
        w.to_vector(5)
