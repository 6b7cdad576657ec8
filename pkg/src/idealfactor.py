"""Dedekind's criterion, Ore's index bound and prime-ideal factorization shapes."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, List, Optional, Tuple

try:
    from .errors import InconsistencyError, InvalidArgumentError, NotApplicableError
    from .intsupport import padic_valuation, require_prime
    from .polyalg import FqPoly, IntPoly, discriminant, fq_factor, reduce_mod_p
    from .polygon import NewtonPolygon, ResidualPolynomial, phi_expand, principal_polygon, residual_polys
except ImportError:
    from errors import InconsistencyError, InvalidArgumentError, NotApplicableError
    from intsupport import padic_valuation, require_prime
    from polyalg import FqPoly, IntPoly, discriminant, fq_factor, reduce_mod_p
    from polygon import NewtonPolygon, ResidualPolynomial, phi_expand, principal_polygon, residual_polys


LOGGER = logging.getLogger(__name__)


@lru_cache(maxsize=1024)
def _factor_mod_p(coeffs: Tuple[int, ...], p: int, seed: int) -> Tuple[Tuple[FqPoly, int], ...]:
    return tuple(fq_factor(reduce_mod_p(IntPoly(coeffs), p), seed))


def factor_mod_p(F: IntPoly, p: int, seed: int = 0) -> List[Tuple[FqPoly, int]]:
    """Irreducible factors of F mod p with multiplicities, cached per (F, p, seed)."""
    require_prime(p)
    if not F.is_monic:
        raise InvalidArgumentError(f"polynomial must be monic, got {F}")
    return list(_factor_mod_p(tuple(c % p for c in F.coeffs), p, seed))


@dataclass(frozen=True)
class DedekindReport:
    prime: int
    passes: bool
    factors: Tuple[Tuple[IntPoly, int], ...]
    quotient: IntPoly
    failing_factors: Tuple[Tuple[IntPoly, int], ...]


def dedekind_test(F: IntPoly, p: int, seed: int = 0) -> DedekindReport:
    """Dedekind's criterion: p does not divide the index iff it passes."""
    factors = factor_mod_p(F, p, seed)
    lifted = [(g.lift(), l) for g, l in factors]
    product = IntPoly((1,))
    for phi, l in lifted:
        product = product * phi ** l
    quotient = (F - product).exact_div(p)
    reduced = reduce_mod_p(quotient, p)
    failing = tuple(
        (phi, l) for (g, l), (phi, _) in zip(factors, lifted) if l >= 2 and (reduced % g).is_zero
    )
    LOGGER.debug("Dedekind at p=%d: %d factors, %d failing", p, len(lifted), len(failing))
    return DedekindReport(p, not failing, tuple(lifted), quotient, failing)


@dataclass(frozen=True)
class ShapeEntry:
    e: int
    f: int
    count: int = 1


@dataclass(frozen=True)
class PrimeFactorShape:
    """Ramification data (e, f, count) of the primes above p.

    A partial shape lists only the primes it determines; ``unresolved_degree``
    is the part of deg F they leave unaccounted for.
    """

    prime: int
    degree: int
    entries: Tuple[ShapeEntry, ...]
    complete: bool
    unresolved_degree: int = 0

    def __post_init__(self):
        if self.complete and self.total_degree() != self.degree:
            raise InconsistencyError(
                f"sum of e*f is {self.total_degree()}, expected {self.degree} at p={self.prime}"
            )

    def total_degree(self) -> int:
        return sum(entry.count * entry.e * entry.f for entry in self.entries)

    def count_with_residue_degree(self, f: int) -> int:
        return sum(entry.count for entry in self.entries if entry.f == f)

    def residue_degrees(self) -> List[int]:
        return sorted({entry.f for entry in self.entries})

    def prime_count(self) -> int:
        return sum(entry.count for entry in self.entries)


def make_shape(prime: int, degree: int, pairs: Iterable[Tuple[int, int]], complete: bool,
               unresolved_degree: int = 0) -> PrimeFactorShape:
    """Merge (e, f) pairs into sorted entries with counts."""
    counts = Counter(pairs)
    entries = tuple(ShapeEntry(e, f, n) for (e, f), n in sorted(counts.items()))
    return PrimeFactorShape(prime, degree, entries, complete, unresolved_degree)


def dedekind_factorization(F: IntPoly, p: int, seed: int = 0) -> PrimeFactorShape:
    report = dedekind_test(F, p, seed)
    if not report.passes:
        raise NotApplicableError(f"p={p} divides the index of {F}; use ore_factorization")
    pairs = [(l, phi.degree) for phi, l in report.factors]
    return make_shape(p, F.degree, pairs, complete=True)


@dataclass(frozen=True)
class IndexValuation:
    """nu_p((Z_K : Z[alpha])), or a lower bound for it."""

    prime: int
    lower_bound: int
    exact: bool

    @property
    def value(self) -> Optional[int]:
        return self.lower_bound if self.exact else None


@dataclass(frozen=True)
class PhiRecord:
    """Polygon data for one repeated irreducible factor phi of F mod p."""

    phi: IntPoly
    multiplicity: int
    polygon: NewtonPolygon
    residuals: Tuple[ResidualPolynomial, ...]

    @property
    def index(self) -> int:
        return self.polygon.index()

    @property
    def regular(self) -> bool:
        return all(r.is_squarefree() for r in self.residuals)


def phi_records(F: IntPoly, p: int, seed: int = 0) -> List[PhiRecord]:
    records = []
    for g, l in factor_mod_p(F, p, seed):
        if l == 1:
            continue
        phi = g.lift()
        exp = phi_expand(F, phi)
        if exp.term(0).is_zero:
            raise InvalidArgumentError(f"{F} is reducible: divisible by {phi}")
        records.append(PhiRecord(phi, l, principal_polygon(exp, p), tuple(residual_polys(exp, p))))
    return records


def _index_valuation(p: int, records: List[PhiRecord]) -> IndexValuation:
    total = sum(r.index for r in records)
    regular = all(r.regular for r in records)
    return IndexValuation(p, total, regular or total == 0)


def ore_index_bound(F: IntPoly, p: int, seed: int = 0) -> IndexValuation:
    """Sum of ind_phi(F); exact when F is p-regular or the sum is 0."""
    return _index_valuation(p, phi_records(F, p, seed))


def _shape_from_records(F: IntPoly, p: int, records: List[PhiRecord], seed: int) -> PrimeFactorShape:
    pairs = [(1, g.degree) for g, l in factor_mod_p(F, p, seed) if l == 1]
    unresolved = 0
    for record in records:
        for residual in record.residuals:
            e = residual.side.e
            for psi, multiplicity in residual.factor(seed):
                f = record.phi.degree * psi.degree
                if multiplicity == 1:
                    pairs.append((e, f))
                else:
                    unresolved += multiplicity * e * f
    complete = unresolved == 0
    if not complete:
        LOGGER.info("%s is not %d-regular: %d of degree %d left unresolved", F, p, unresolved, F.degree)
    return make_shape(p, F.degree, pairs, complete, unresolved)


def prime_shape(F: IntPoly, p: int, seed: int = 0) -> PrimeFactorShape:
    """Complete shape when F is p-regular, otherwise the primes the residual factors determine."""
    return _shape_from_records(F, p, phi_records(F, p, seed), seed)


def ore_factorization(F: IntPoly, p: int, seed: int = 0) -> PrimeFactorShape:
    shape = prime_shape(F, p, seed)
    if not shape.complete:
        raise NotApplicableError(f"{F} is not {p}-regular; the factorization of {p} is undetermined")
    return shape


def is_eisenstein(F: IntPoly, p: int) -> bool:
    require_prime(p)
    if F.degree < 1 or not F.is_monic:
        return False
    lower = F.coeffs[:-1]
    return all(c % p == 0 for c in lower) and lower[0] % (p * p) != 0


@dataclass(frozen=True)
class DiscriminantValuation:
    """nu_p of disc(F), and of the field discriminant when the index is known."""

    prime: int
    polynomial: int
    field: Optional[int] = None


def discriminant_valuations(F: IntPoly, p: int, index: Optional[IndexValuation] = None,
                            disc: Optional[int] = None) -> DiscriminantValuation:
    if disc is None:
        disc = discriminant(F)
    if disc == 0:
        raise InvalidArgumentError(f"{F} is not separable")
    v = int(padic_valuation(disc, p))
    field_v = v - 2 * index.lower_bound if index is not None and index.exact else None
    return DiscriminantValuation(p, v, field_v)


@dataclass(frozen=True)
class PrimeAnalysis:
    """Everything computed for F at one prime."""

    prime: int
    dedekind: DedekindReport
    records: Tuple[PhiRecord, ...]
    shape: PrimeFactorShape
    index_valuation: IndexValuation
    discriminant: DiscriminantValuation
    eisenstein: bool = False
    notes: Tuple[str, ...] = field(default_factory=tuple)


def analyze_prime(F: IntPoly, p: int, seed: int = 0, disc: Optional[int] = None) -> PrimeAnalysis:
    report = dedekind_test(F, p, seed)
    records = phi_records(F, p, seed)
    index = _index_valuation(p, records)
    if report.passes != (index.lower_bound == 0):
        raise InconsistencyError(
            f"Dedekind ({report.passes}) and Ore (bound {index.lower_bound}) disagree for {F} at p={p}"
        )
    shape = _shape_from_records(F, p, records, seed)
    notes = []
    if not shape.complete:
        notes.append(f"{F} is not {p}-regular; shape at {p} is partial")
    return PrimeAnalysis(
        prime=p,
        dedekind=report,
        records=tuple(records),
        shape=shape,
        index_valuation=index,
        discriminant=discriminant_valuations(F, p, index, disc),
        eisenstein=is_eisenstein(F, p),
        notes=tuple(notes),
    )
