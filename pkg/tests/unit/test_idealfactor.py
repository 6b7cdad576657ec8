"""Tests for Dedekind's criterion, Ore's bound and factorization shapes."""

from collections import Counter

import pytest
from sympy import Poly, symbols
from sympy.polys.numberfields.primes import prime_decomp

from errors import InconsistencyError, InvalidArgumentError, NotApplicableError
from idealfactor import (
    ShapeEntry,
    analyze_prime,
    dedekind_factorization,
    dedekind_test,
    discriminant_valuations,
    factor_mod_p,
    is_eisenstein,
    make_shape,
    ore_factorization,
    ore_index_bound,
    prime_shape,
)
from intsupport import is_squarefree_int
from polyalg import IntPoly

t = symbols("t")


@pytest.fixture
def dedekind_cubic(x):
    """x^3 - x^2 - 2x - 8: 2 divides every index."""
    return x ** 3 - x ** 2 - 2 * x - 8


def random_monic(rng, degree, bound=50):
    return IntPoly([rng.randint(-bound, bound) for _ in range(degree)] + [1])


def random_squarefree(rng, bound=10 ** 6):
    while True:
        m = rng.randint(-bound, bound)
        if abs(m) >= 2 and is_squarefree_int(m):
            return m


def dedekind_agrees_with_ore(F, p):
    passes = dedekind_test(F, p).passes
    try:
        bound = ore_index_bound(F, p)
    except InvalidArgumentError:
        # a repeated phi divides F over Z, so M vanishes mod phi
        return not passes
    return passes == (bound.lower_bound == 0)


def sympy_shape(F, p):
    T = Poly(list(reversed(F.coeffs)), t)
    return Counter((P.e, P.f) for P in prime_decomp(p, T))


def shape_counter(shape):
    return Counter({(s.e, s.f): s.count for s in shape.entries})


def test_dedekind_fails_for_cubic(x):
    """Test x^3 - 9 fails Dedekind's criterion at 3."""
    report = dedekind_test(x ** 3 - 9, 3)
    assert not report.passes
    assert report.factors == ((x, 3),)
    assert report.quotient == IntPoly((-3,))
    assert report.failing_factors == ((x, 3),)


def test_dedekind_passes_for_pure_sixty(pure):
    """Test x^60 - 67 passes at 2 and 67."""
    assert dedekind_test(pure(67), 2).passes
    assert dedekind_test(pure(67), 67).passes


def test_dedekind_cubic_fails_at_two(dedekind_cubic):
    """Test the classic cubic fails at 2 and passes at 503."""
    assert not dedekind_test(dedekind_cubic, 2).passes
    assert dedekind_test(dedekind_cubic, 503).passes


@pytest.mark.parametrize("m,p,entries", [
    (302, 3, (ShapeEntry(3, 2, 2), ShapeEntry(3, 4, 4))),
    (67, 67, (ShapeEntry(60, 1, 1),)),
])
def test_dedekind_shapes_of_pure_sixty(pure, m, p, entries):
    """Test shapes read off the factorization mod p."""
    shape = dedekind_factorization(pure(m), p)
    assert shape.complete
    assert shape.entries == entries
    assert shape.total_degree() == 60


def test_inert_quadratic(x):
    """Test 5 is inert in Q(sqrt(3))."""
    shape = dedekind_factorization(x ** 2 - 3, 5)
    assert shape.entries == (ShapeEntry(1, 2, 1),)


def test_dedekind_factorization_needs_a_passing_prime(x):
    """Test a failing prime is not applicable."""
    with pytest.raises(NotApplicableError):
        dedekind_factorization(x ** 3 - 9, 3)


def test_factor_mod_p_needs_monic_input(x):
    """Test non-monic input is rejected."""
    with pytest.raises(InvalidArgumentError):
        factor_mod_p(2 * x ** 2 + 1, 3)


def test_factor_mod_p_needs_a_prime(x):
    """Test composite moduli are rejected."""
    with pytest.raises(InvalidArgumentError):
        factor_mod_p(x ** 2 + 1, 9)


def test_ore_index_of_cubic(x):
    """Test nu_3(index) = 1 for x^3 - 9."""
    bound = ore_index_bound(x ** 3 - 9, 3)
    assert (bound.lower_bound, bound.exact, bound.value) == (1, True, 1)
    assert ore_factorization(x ** 3 - 9, 3).entries == (ShapeEntry(3, 1, 1),)


def test_dedekind_cubic_splits_completely(dedekind_cubic):
    """Test 2 splits into three primes of degree 1."""
    shape = ore_factorization(dedekind_cubic, 2)
    assert shape.entries == (ShapeEntry(1, 1, 3),)
    assert shape.count_with_residue_degree(1) == 3
    assert ore_index_bound(dedekind_cubic, 2).value == 1


def test_irregular_shape_is_partial(x):
    """Test x^2 + 4 leaves the whole degree unresolved at 2."""
    shape = prime_shape(x ** 2 + 4, 2)
    assert not shape.complete
    assert shape.unresolved_degree == 2
    assert shape.entries == ()
    bound = ore_index_bound(x ** 2 + 4, 2)
    assert not bound.exact
    assert bound.value is None
    with pytest.raises(NotApplicableError):
        ore_factorization(x ** 2 + 4, 2)


def test_ore_agrees_with_dedekind_when_p_does_not_divide_index(pure):
    """Test both shapes coincide at a passing prime."""
    assert ore_factorization(pure(302), 3) == dedekind_factorization(pure(302), 3)
    assert ore_index_bound(pure(302), 3).lower_bound == 0


def test_repeated_factor_dividing_f_rejected(x):
    """Test Ore's bound refuses F divisible by a repeated phi."""
    with pytest.raises(InvalidArgumentError):
        ore_index_bound(x ** 3 - 2 * x ** 2, 2)


def test_dedekind_agrees_with_ore_for_random_polynomials(rng):
    """Test Dedekind passes iff Ore's bound is 0 for random monic polynomials."""
    for _ in range(30):
        F = random_monic(rng, rng.randint(2, 12))
        for p in (2, 3, 5, 7, 11):
            assert dedekind_agrees_with_ore(F, p), (F, p)


@pytest.mark.slow
def test_dedekind_agrees_with_ore_for_many_random_polynomials(rng):
    """Test Dedekind against Ore over 200 random monic polynomials of degree <= 12."""
    for _ in range(200):
        F = random_monic(rng, rng.randint(2, 12))
        for p in (2, 3, 5, 7, 11):
            assert dedekind_agrees_with_ore(F, p), (F, p)


def test_dedekind_agrees_with_ore_for_random_pure_sixty(rng, pure):
    """Test Dedekind against Ore for x^60 - m over 100 random squarefree m."""
    for _ in range(100):
        m = random_squarefree(rng)
        for p in (2, 3, 5):
            assert dedekind_test(pure(m), p).passes == (ore_index_bound(pure(m), p).lower_bound == 0), (m, p)


@pytest.mark.parametrize("m", [74, 51, 7, -24, 3])
def test_quintic_shapes_match_sympy(x, m):
    """Test the splitting of 5 in Q(m^(1/5)) against sympy's prime decomposition."""
    F = x ** 5 - m
    assert shape_counter(prime_shape(F, 5)) == sympy_shape(F, 5)


@pytest.mark.slow
@pytest.mark.parametrize("n,m", [(10, 74), (20, 74), (20, 51)])
def test_pure_shapes_at_five_match_sympy(pure, n, m):
    """Test the splitting of 5 in Q(m^(1/n)) against sympy's prime decomposition."""
    F = pure(m, n)
    assert shape_counter(prime_shape(F, 5)) == sympy_shape(F, 5)


def test_make_shape_merges_pairs():
    """Test equal (e, f) pairs merge into counts."""
    shape = make_shape(3, 6, [(1, 2), (2, 1), (1, 2)], complete=True)
    assert shape.entries == (ShapeEntry(1, 2, 2), ShapeEntry(2, 1, 1))
    assert shape.residue_degrees() == [1, 2]
    assert shape.prime_count() == 3


def test_wrong_total_degree_is_inconsistent():
    """Test a complete shape must account for the whole degree."""
    with pytest.raises(InconsistencyError):
        make_shape(2, 5, [(1, 1)], complete=True)


def test_partial_shape_allows_a_shortfall():
    """Test a partial shape may cover less than the degree."""
    shape = make_shape(2, 5, [(1, 1)], complete=False, unresolved_degree=4)
    assert shape.total_degree() == 1


def test_eisenstein(pure, x):
    """Test Eisenstein detection."""
    assert is_eisenstein(pure(67), 67)
    assert is_eisenstein(x ** 2 - 3, 3)
    assert not is_eisenstein(x ** 3 - 9, 3)
    assert not is_eisenstein(pure(67), 2)


def test_field_discriminant_from_exact_index(x):
    """Test nu_3 of the field discriminant of Q(9^(1/3))."""
    F = x ** 3 - 9
    v = discriminant_valuations(F, 3, ore_index_bound(F, 3))
    assert (v.polynomial, v.field) == (7, 5)


def test_field_discriminant_unknown_without_exact_index(x):
    """Test the field discriminant stays unknown without an exact index."""
    F = x ** 2 + 4
    v = discriminant_valuations(F, 2, ore_index_bound(F, 2))
    assert v.polynomial == 4
    assert v.field is None


def test_inseparable_rejected(x):
    """Test x^2 has no discriminant valuation."""
    with pytest.raises(InvalidArgumentError):
        discriminant_valuations(x ** 2, 2)


def test_analyze_prime_for_cubic(x):
    """Test the per-prime bundle for x^3 - 9 at 3."""
    analysis = analyze_prime(x ** 3 - 9, 3)
    assert not analysis.dedekind.passes
    assert analysis.index_valuation.value == 1
    assert analysis.discriminant.field == 5
    assert analysis.shape.entries == (ShapeEntry(3, 1, 1),)
    assert not analysis.eisenstein
    assert analysis.notes == ()


def test_analyze_eisenstein_prime(pure):
    """Test the per-prime bundle at an Eisenstein prime."""
    analysis = analyze_prime(pure(67), 67)
    assert analysis.eisenstein
    assert analysis.index_valuation.value == 0
    assert analysis.discriminant.polynomial == 59
    assert analysis.discriminant.field == 59
    assert len(analysis.records) == 1


def test_partial_shape_is_noted(x):
    """Test a partial shape leaves a note."""
    analysis = analyze_prime(x ** 2 + 4, 2)
    assert not analysis.shape.complete
    assert analysis.notes
