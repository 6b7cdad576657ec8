"""Tests for integer utilities."""

import itertools

import pytest
from sympy import Poly, symbols

from errors import InvalidArgumentError, NoSolutionError
from intsupport import (
    INFINITY,
    ExtNat,
    gauss_irreducible_count,
    is_prime,
    is_squarefree_int,
    mobius,
    padic_valuation,
    prime_divisors,
    solve_power_reduction,
)


def test_extnat_finite_values_behave_like_ints():
    """Test finite ExtNat values compare, add and hash like ints."""
    assert ExtNat(2) == 2
    assert ExtNat(2) + 3 == 5
    assert 2 < ExtNat(3)
    assert hash(ExtNat(7)) == hash(7)


def test_infinity_absorbs_and_dominates():
    """Test Infinity absorbs addition and exceeds every finite value."""
    assert (INFINITY + 3).is_infinite
    assert ExtNat(10 ** 6) < INFINITY
    assert min(ExtNat(4), INFINITY) == 4
    assert ExtNat.infinity() is INFINITY


def test_infinity_has_no_int_value():
    """Test int(Infinity) raises."""
    with pytest.raises(OverflowError):
        int(INFINITY)


def test_extnat_negative_value_rejected():
    """Test ExtNat refuses negative values."""
    with pytest.raises(InvalidArgumentError):
        ExtNat(-1)


def test_padic_valuation():
    """Test p-adic valuations, including of 0."""
    assert padic_valuation(12, 2) == 2
    assert padic_valuation(-250, 5) == 3
    assert padic_valuation(7, 3) == 0
    assert padic_valuation(0, 5) is INFINITY


def test_padic_valuation_needs_a_prime():
    """Test valuations at a composite are rejected."""
    with pytest.raises(InvalidArgumentError):
        padic_valuation(12, 4)


def test_is_prime():
    """Test primality."""
    assert is_prime(2)
    assert is_prime(2 ** 61 - 1)
    assert not is_prime(1)
    assert not is_prime(91)


@pytest.mark.parametrize("p,f,expected", [
    (2, 1, 2), (2, 2, 1), (2, 3, 2), (2, 4, 3), (2, 5, 6),
    (3, 1, 3), (3, 2, 3), (5, 2, 10), (5, 4, 150), (7, 2, 21),
])
def test_gauss_counts_known_values(p, f, expected):
    """Test counts of monic irreducibles of degree f over F_p."""
    assert gauss_irreducible_count(p, f) == expected


@pytest.mark.parametrize("p,f", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (7, 3)])
def test_gauss_counts_match_brute_force(p, f):
    """Test Gauss counts against enumerating every monic polynomial."""
    t = symbols("t")
    count = 0
    for tail in itertools.product(range(p), repeat=f):
        if Poly([1, *tail], t, modulus=p).is_irreducible:
            count += 1
    assert gauss_irreducible_count(p, f) == count


def test_gauss_count_degree_must_be_positive():
    """Test degree 0 is rejected."""
    with pytest.raises(InvalidArgumentError):
        gauss_irreducible_count(2, 0)


def test_mobius():
    """Test the Moebius function."""
    assert [mobius(d) for d in (1, 2, 4, 6, 30)] == [1, -1, 0, 1, -1]


def test_squarefree():
    """Test squarefreeness of signed integers."""
    assert is_squarefree_int(30)
    assert is_squarefree_int(-7)
    assert not is_squarefree_int(12)
    assert not is_squarefree_int(-50)


@pytest.mark.parametrize("m", [-1, 0, 1])
def test_squarefree_units_and_zero_rejected(m):
    """Test |m| < 2 is rejected."""
    with pytest.raises(InvalidArgumentError):
        is_squarefree_int(m)


def test_prime_divisors():
    """Test sorted distinct prime divisors."""
    assert prime_divisors(-60) == [2, 3, 5]
    assert prime_divisors(67) == [67]
    with pytest.raises(InvalidArgumentError):
        prime_divisors(0)


@pytest.mark.parametrize("u,expected", [(31, (31, 16)), (13, (37, 8)), (1, (1, 0))])
def test_power_reduction_known_solutions(u, expected):
    """Test u*x - 60*y = 1 for known u."""
    assert solve_power_reduction(u, 60) == expected


@pytest.mark.parametrize("u", [7, 11, 17, 49, 91, 10 ** 40 + 1])
def test_power_reduction_identity_holds(u):
    """Test the identity and the range of y."""
    x, y = solve_power_reduction(u)
    assert u * x - 60 * y == 1
    assert 0 <= y < u


@pytest.mark.parametrize("u", [6, 25, 60])
def test_power_reduction_common_factor_has_no_solution(u):
    """Test a common factor with 60 leaves no solution."""
    with pytest.raises(NoSolutionError):
        solve_power_reduction(u, 60)
