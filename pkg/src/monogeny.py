"""Monogeneity of pure fields Q(m^(1/60)): congruence classifiers and computed evidence."""

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import partial
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import factorint

try:
    from .config import DEFAULT_SEED, MAX_DEGREE, POWER_COPRIME_TO, PURE_DEGREE, PURE_PRIMES, SCAN_WORKERS
    from .errors import InconsistencyError, InvalidArgumentError
    from .idealfactor import PrimeAnalysis, PrimeFactorShape, analyze_prime
    from .intsupport import gauss_irreducible_count, is_squarefree_int, prime_divisors, solve_power_reduction
    from .polyalg import IntPoly, discriminant
except ImportError:
    from config import DEFAULT_SEED, MAX_DEGREE, POWER_COPRIME_TO, PURE_DEGREE, PURE_PRIMES, SCAN_WORKERS
    from errors import InconsistencyError, InvalidArgumentError
    from idealfactor import PrimeAnalysis, PrimeFactorShape, analyze_prime
    from intsupport import gauss_irreducible_count, is_squarefree_int, prime_divisors, solve_power_reduction
    from polyalg import IntPoly, discriminant


LOGGER = logging.getLogger(__name__)

# (modulus, residues of m for which that prime divides the index of every generator)
INDEX_DIVISOR_CLASSES: Tuple[Tuple[int, Tuple[int, ...]], ...] = (
    (4, (1,)),
    (9, (1, 8)),
    (25, (1, 24)),
)
OPEN_CLASSES_MOD_25: Tuple[int, ...] = (7, 18)

DISCREPANCY_NOTES: Dict[int, str] = {
    106: (
        "a published classification of x^60 - 106 as non-monogenic relies on m = 1 (mod 5); "
        "106 = 6 (mod 25) misses the mod-25 hypothesis and the field is monogenic"
    ),
    302: "a published residue 302 = 6 (mod 25) is wrong: 302 = 2 (mod 25); the verdict is unaffected",
}


class VerdictKind(str, Enum):
    MONOGENIC = "Monogenic"
    NOT_MONOGENIC = "NotMonogenic"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class CongruenceCheck:
    """Whether m falls in one of the listed residue classes."""

    modulus: int
    residues: Tuple[int, ...]
    residue: int

    @property
    def hit(self) -> bool:
        return self.residue in self.residues

    def __str__(self) -> str:
        classes = ", ".join(str(r) for r in self.residues)
        relation = "in" if self.hit else "not in"
        return f"m = {self.residue} (mod {self.modulus}) {relation} {{{classes}}}"


@dataclass(frozen=True)
class IndexDivisorWitness:
    """P_f primes of residue degree f above p against N_f irreducibles of degree f."""

    prime: int
    f: int
    ideal_count: int
    irreducible_count: int
    lower_bound: bool = False

    @property
    def valid(self) -> bool:
        return self.ideal_count > self.irreducible_count

    def __str__(self) -> str:
        relation = ">=" if self.lower_bound else "="
        return (f"p={self.prime}: P_{self.f} {relation} {self.ideal_count} > "
                f"N_{self.f} = {self.irreducible_count}")


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    checks: Tuple[CongruenceCheck, ...] = ()
    witnesses: Tuple[IndexDivisorWitness, ...] = ()
    reasons: Tuple[str, ...] = ()
    reduction: Optional[Tuple[int, int]] = None


def common_index_divisor(shape: PrimeFactorShape, p: int) -> Optional[IndexDivisorWitness]:
    """First residue degree f with more primes above p than monic irreducibles of degree f."""
    for f in shape.residue_degrees():
        ideals = shape.count_with_residue_degree(f)
        irreducibles = gauss_irreducible_count(p, f)
        if ideals > irreducibles:
            return IndexDivisorWitness(p, f, ideals, irreducibles, lower_bound=not shape.complete)
    return None


def _require_pure_m(m: int) -> None:
    if m in (-1, 0, 1):
        raise InvalidArgumentError(f"m must satisfy |m| >= 2, got {m}")
    if not is_squarefree_int(m):
        raise InvalidArgumentError(f"m = {m} is not squarefree")


def congruence_checks(m: int) -> Tuple[CongruenceCheck, ...]:
    checks = [CongruenceCheck(modulus, residues, m % modulus) for modulus, residues in INDEX_DIVISOR_CLASSES]
    checks.append(CongruenceCheck(25, OPEN_CLASSES_MOD_25, m % 25))
    return tuple(checks)


def pure60_integral_closure(m: int) -> bool:
    """True iff Z[m^(1/60)] is the ring of integers of Q(m^(1/60))."""
    _require_pure_m(m)
    return not any(check.hit for check in congruence_checks(m))


def pure60_monogeneity(m: int) -> Verdict:
    _require_pure_m(m)
    checks = congruence_checks(m)
    decisive = [c for c in checks[:-1] if c.hit]
    if not any(c.hit for c in checks):
        return Verdict(VerdictKind.MONOGENIC, checks, reasons=("Z[alpha] is the ring of integers",))
    if decisive:
        reasons = tuple(f"{c}: a prime dividing {c.modulus} is a common index divisor" for c in decisive)
        return Verdict(VerdictKind.NOT_MONOGENIC, checks, reasons=reasons)
    LOGGER.warning("m = %d lies in the open classes mod 25", m)
    return Verdict(VerdictKind.UNDECIDED, checks, reasons=(f"{checks[-1]}: not decided by congruences",))


def pure60_power_case(a: int, u: int) -> Verdict:
    """Verdict for x^60 - a^u, which generates the same field as x^60 - a."""
    _require_pure_m(a)
    if u < 1 or math.gcd(u, POWER_COPRIME_TO) != 1:
        raise InvalidArgumentError(f"u must be a positive integer coprime to {POWER_COPRIME_TO}, got {u}")
    x, y = solve_power_reduction(u, PURE_DEGREE)
    verdict = pure60_monogeneity(a)
    reason = f"theta = alpha^{x} / a^{y} is a root of x^60 - {a}"
    return replace(verdict, reduction=(x, y), reasons=verdict.reasons + (reason,))


def discrepancy_notes(m: int) -> List[str]:
    notes = []
    if m in DISCREPANCY_NOTES:
        notes.append(DISCREPANCY_NOTES[m])
    if m % 5 in (1, 4) and m % 25 not in (1, 24):
        notes.append(f"m = {m % 5} (mod 5) alone decides nothing; m = {m % 25} (mod 25) is outside {{1, 24}}")
    for note in notes:
        LOGGER.warning("m = %d: %s", m, note)
    return notes


@dataclass(frozen=True)
class PureForm:
    """F(x) = (x - shift)^n - a^u."""

    shift: int
    n: int
    constant: int
    a: int
    u: int

    @property
    def reduced(self) -> IntPoly:
        return IntPoly.monomial(self.n) - self.a


def _power_decomposition(k: int) -> Tuple[int, int]:
    """k = a^u with u maximal among decompositions with a squarefree; (k, 1) otherwise."""
    exponents = set(factorint(abs(k)).values())
    if len(exponents) != 1:
        return k, 1
    u = exponents.pop()
    if k < 0 and u % 2 == 0:
        return k, 1
    radical = math.prod(factorint(abs(k)))
    return (-radical if k < 0 else radical), u


def normalize_pure(F: IntPoly) -> Optional[PureForm]:
    """Recognize (x - c)^n - K by a Taylor shift; None for any other polynomial."""
    n = F.degree
    if n < 2 or not F.is_monic:
        return None
    c, rest = divmod(-F[n - 1], n)
    if rest:
        return None
    G = F.shift(c)
    if any(G.coeffs[1:n]):
        return None
    K = -G[0]
    if K in (-1, 0, 1):
        return None
    a, u = _power_decomposition(K)
    return PureForm(c, n, K, a, u)


@dataclass(frozen=True)
class AnalysisReport:
    """Per-prime evidence and the final verdict for one polynomial."""

    polynomial: IntPoly
    primes: Tuple[PrimeAnalysis, ...]
    witnesses: Tuple[IndexDivisorWitness, ...]
    computed: VerdictKind
    verdict: Verdict
    notes: Tuple[str, ...] = ()
    m: Optional[int] = None
    power: Optional[Tuple[int, int]] = None
    source: Optional[IntPoly] = None


def _computed_kind(analyses: Sequence[PrimeAnalysis], covers_discriminant: bool) -> Tuple[VerdictKind, List[IndexDivisorWitness]]:
    witnesses = []
    for analysis in analyses:
        witness = common_index_divisor(analysis.shape, analysis.prime)
        if witness is not None:
            witnesses.append(witness)
    if witnesses:
        return VerdictKind.NOT_MONOGENIC, witnesses
    if covers_discriminant and all(a.index_valuation.value == 0 for a in analyses):
        return VerdictKind.MONOGENIC, witnesses
    return VerdictKind.UNDECIDED, witnesses


def _analyze_primes(F: IntPoly, primes: Iterable[int], seed: int, disc: int) -> Tuple[PrimeAnalysis, ...]:
    return tuple(analyze_prime(F, p, seed, disc) for p in primes)


def _pure_report(a: int, verdict: Verdict, seed: int, power: Optional[Tuple[int, int]] = None,
                 source: Optional[IntPoly] = None) -> AnalysisReport:
    F = IntPoly.monomial(PURE_DEGREE) - a
    primes = sorted(set(PURE_PRIMES) | set(prime_divisors(a)))
    analyses = _analyze_primes(F, primes, seed, discriminant(F))
    computed, witnesses = _computed_kind(analyses, covers_discriminant=True)
    notes = discrepancy_notes(a)
    if computed == VerdictKind.UNDECIDED:
        for analysis in analyses:
            index = analysis.index_valuation
            if not index.exact:
                notes.append(f"nu_{analysis.prime}(index) >= {index.lower_bound}; no index-divisor witness at {analysis.prime}")
        if verdict.kind != VerdictKind.UNDECIDED:
            notes.append(f"computed route undecided; verdict {verdict.kind.value} from congruences")
    elif verdict.kind == VerdictKind.UNDECIDED:
        verdict = replace(verdict, kind=computed, witnesses=tuple(witnesses),
                          reasons=verdict.reasons + ("decided by computed prime shapes",))
    elif computed != verdict.kind:
        raise InconsistencyError(
            f"m = {a}: congruences give {verdict.kind.value}, computation gives {computed.value}"
        )
    else:
        verdict = replace(verdict, witnesses=tuple(witnesses))
    return AnalysisReport(F, analyses, tuple(witnesses), computed, verdict, tuple(notes), a, power, source)


def analyze_pure60(m: int, seed: int = DEFAULT_SEED) -> AnalysisReport:
    """Congruence verdict for x^60 - m cross-checked against the computed shapes at 2, 3, 5 and p | m."""
    return _pure_report(m, pure60_monogeneity(m), seed)


def analyze_power_case(a: int, u: int, seed: int = DEFAULT_SEED, source: Optional[IntPoly] = None) -> AnalysisReport:
    return _pure_report(a, pure60_power_case(a, u), seed, power=(a, u), source=source)


def analyze_polynomial(F: IntPoly, primes: Optional[Sequence[int]] = None, seed: int = DEFAULT_SEED) -> AnalysisReport:
    """Index data at the given primes (default: every prime dividing disc(F)) and a verdict."""
    if F.degree < 1 or not F.is_monic:
        raise InvalidArgumentError(f"polynomial must be monic of positive degree, got {F}")
    if F.degree > MAX_DEGREE:
        raise InvalidArgumentError(f"degree {F.degree} exceeds the limit {MAX_DEGREE}")
    pure = normalize_pure(F)
    if (primes is None and pure is not None and pure.n == PURE_DEGREE and pure.a not in (-1, 0, 1)
            and is_squarefree_int(pure.a) and math.gcd(pure.u, POWER_COPRIME_TO) == 1):
        LOGGER.info("%s normalized to x^%d - %d with u = %d", F, pure.n, pure.a, pure.u)
        if pure.shift == 0 and pure.u == 1:
            return replace(analyze_pure60(pure.a, seed), source=F)
        return analyze_power_case(pure.a, pure.u, seed, source=F)

    disc = discriminant(F)
    if disc == 0:
        raise InvalidArgumentError(f"{F} has a repeated root")
    if pure is not None:
        required = set(prime_divisors(pure.n * pure.constant))
    elif primes is None:
        required = set(prime_divisors(disc))
    else:
        required = None
    examined = sorted(set(primes) if primes is not None else required)
    covers = required is not None and required <= set(examined)
    analyses = _analyze_primes(F, examined, seed, disc)
    computed, witnesses = _computed_kind(analyses, covers)
    notes = [note for analysis in analyses for note in analysis.notes]
    if not covers:
        notes.append("not every prime dividing the discriminant was examined")
    if computed == VerdictKind.MONOGENIC:
        reasons = ("Z[alpha] is maximal at every prime dividing the discriminant",)
    elif computed == VerdictKind.NOT_MONOGENIC:
        reasons = tuple(str(w) for w in witnesses)
    else:
        reasons = ("no index-divisor witness and Z[alpha] not proven maximal",)
    verdict = Verdict(computed, witnesses=tuple(witnesses), reasons=reasons)
    return AnalysisReport(F, analyses, tuple(witnesses), computed, verdict, tuple(notes), source=F)


@dataclass(frozen=True)
class ScanRow:
    m: int
    squarefree: bool
    verdict: Optional[VerdictKind] = None
    witness: Optional[IndexDivisorWitness] = None
    notes: Tuple[str, ...] = ()

    @property
    def bucket(self) -> str:
        return self.verdict.value if self.verdict is not None else "NonSquarefree"


def scan_row(m: int, seed: int = DEFAULT_SEED, compute: bool = True) -> ScanRow:
    if m in (-1, 0, 1):
        return ScanRow(m, False, notes=("excluded: |m| < 2",))
    if not is_squarefree_int(m):
        return ScanRow(m, False, notes=("not squarefree",))
    if not compute:
        verdict = pure60_monogeneity(m)
        return ScanRow(m, True, verdict.kind, notes=tuple(discrepancy_notes(m)))
    report = analyze_pure60(m, seed)
    witness = report.witnesses[0] if report.witnesses else None
    return ScanRow(m, True, report.verdict.kind, witness, report.notes)


class RangeScanner:
    """Classify every m in [low, high], optionally across worker processes."""

    BUCKETS = ("Monogenic", "NotMonogenic", "Undecided", "NonSquarefree")

    def __init__(self, low: int, high: int, seed: int = DEFAULT_SEED, workers: int = SCAN_WORKERS,
                 compute: bool = True):
        if low > high:
            raise InvalidArgumentError(f"empty range {low}..{high}")
        if workers < 1:
            raise InvalidArgumentError(f"workers must be positive, got {workers}")
        self.low = low
        self.high = high
        self.seed = seed
        self.workers = workers
        self.compute = compute

    def __len__(self) -> int:
        return self.high - self.low + 1

    def rows(self) -> List[ScanRow]:
        task = partial(scan_row, seed=self.seed, compute=self.compute)
        values = range(self.low, self.high + 1)
        LOGGER.info("scanning %d..%d with %d worker(s)", self.low, self.high, self.workers)
        if self.workers == 1:
            return [task(m) for m in values]
        with Pool(self.workers) as pool:
            # map keeps input order
            return pool.map(task, values, chunksize=max(1, len(self) // (4 * self.workers)))

    @classmethod
    def summary(cls, rows: Iterable[ScanRow]) -> Dict[str, int]:
        counts = dict.fromkeys(cls.BUCKETS, 0)
        for row in rows:
            counts[row.bucket] += 1
        return counts
