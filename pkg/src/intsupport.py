"""Integer utilities: p-adic valuations, Moebius function, Gauss counts."""

import logging
from functools import total_ordering
from typing import List, Optional, Tuple, Union

from sympy import divisors, factorint, gcd, isprime, multiplicity, primefactors

try:
    from .errors import InconsistencyError, InvalidArgumentError, NoSolutionError
except ImportError:
    from errors import InconsistencyError, InvalidArgumentError, NoSolutionError


LOGGER = logging.getLogger(__name__)


@total_ordering
class ExtNat:
    """A natural number or Infinity, the codomain of a p-adic valuation.

    Finite values compare and hash like the plain ``int`` they wrap, so
    ``padic_valuation(12, 2) == 2`` holds. Infinity absorbs addition and has
    no integer value.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Optional[int]):
        if value is not None:
            value = int(value)
            if value < 0:
                raise InvalidArgumentError(f"ExtNat must be non-negative, got {value}")
        self._value = value

    @classmethod
    def infinity(cls) -> "ExtNat":
        return INFINITY

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> Optional[int]:
        """The finite value, or None for Infinity."""
        return self._value

    def __int__(self) -> int:
        if self._value is None:
            raise OverflowError("cannot convert Infinity to int")
        return self._value

    __index__ = __int__

    @staticmethod
    def _coerce(other) -> Optional["ExtNat"]:
        if isinstance(other, ExtNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool) and other >= 0:
            return ExtNat(other)
        return None

    def __add__(self, other: Union[int, "ExtNat"]) -> "ExtNat":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_infinite or o.is_infinite:
            return INFINITY
        return ExtNat(self._value + o._value)

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtNat):
            return self._value == other._value
        if isinstance(other, int) and not isinstance(other, bool):
            return self._value == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            if isinstance(other, int):
                return False  # negative ints sit below every ExtNat
            return NotImplemented
        if self.is_infinite:
            return False
        if o.is_infinite:
            return True
        return self._value < o._value

    def __hash__(self) -> int:
        return hash(self._value) if self._value is not None else hash(float("inf"))

    def __repr__(self) -> str:
        return "Infinity" if self._value is None else f"ExtNat({self._value})"

    def __str__(self) -> str:
        return "Infinity" if self._value is None else str(self._value)


INFINITY = ExtNat(None)


def is_prime(p: int) -> bool:
    """Deterministic primality test (exact below 2^64)."""
    return isinstance(p, int) and p >= 2 and bool(isprime(p))


def require_prime(p: int) -> int:
    if not is_prime(p):
        raise InvalidArgumentError(f"{p!r} is not a prime")
    return p


def padic_valuation(n: int, p: int) -> ExtNat:
    """Largest k with p^k | n; Infinity for n = 0. The sign of n is ignored."""
    require_prime(p)
    if n == 0:
        return INFINITY
    return ExtNat(multiplicity(p, abs(n)))


def mobius(d: int) -> int:
    """Moebius function of a positive integer."""
    if d < 1:
        raise InvalidArgumentError(f"mobius is defined for d >= 1, got {d}")
    exponents = list(factorint(d).values())
    if any(k > 1 for k in exponents):
        return 0
    return -1 if len(exponents) % 2 else 1


def gauss_irreducible_count(p: int, f: int) -> int:
    """Number of monic irreducible polynomials of degree f over F_p."""
    require_prime(p)
    if f < 1:
        raise InvalidArgumentError(f"degree must be positive, got {f}")
    total = sum(mobius(d) * p ** (f // d) for d in divisors(f))
    count, rest = divmod(total, f)
    if rest:
        raise InconsistencyError(f"Moebius sum {total} not divisible by {f}")
    return count


def is_squarefree_int(m: int) -> bool:
    """True iff no prime square divides m; m must satisfy |m| >= 2."""
    if m in (-1, 0, 1):
        raise InvalidArgumentError(f"squarefreeness is only tested for |m| >= 2, got {m}")
    return all(k == 1 for k in factorint(abs(m)).values())


def prime_divisors(n: int) -> List[int]:
    """Sorted distinct primes dividing n."""
    if n == 0:
        raise InvalidArgumentError("0 has infinitely many divisors")
    return sorted(primefactors(abs(n)))


def solve_power_reduction(u: int, n: int = 60) -> Tuple[int, int]:
    """The unique (x, y) with u*x - n*y = 1 and 0 <= y < u.

    With u coprime to 30 (hence odd and coprime to 60) and alpha^60 = a^u,
    theta = alpha^x / a^y satisfies theta^60 = a.
    """
    if u < 1 or n < 1:
        raise InvalidArgumentError(f"u and n must be positive, got u={u}, n={n}")
    g = gcd(u, n)
    if g != 1:
        raise NoSolutionError(f"{u}*x - {n}*y = 1 has no solution: gcd({u}, {n}) = {g}")
    y = -pow(n, -1, u) % u
    x = (1 + n * y) // u
    return x, y
