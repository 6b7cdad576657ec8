"""Exact polynomial algebra over the integers and over finite fields F_{p^d}."""

import logging
import random
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from sympy import ZZ, Poly, Symbol

try:
    from .errors import InvalidArgumentError
    from .intsupport import INFINITY, ExtNat, padic_valuation, require_prime
except ImportError:
    from errors import InvalidArgumentError
    from intsupport import INFINITY, ExtNat, padic_valuation, require_prime


LOGGER = logging.getLogger(__name__)

Element = Tuple[int, ...]


def _join_terms(terms: List[Tuple[bool, str]]) -> str:
    """Join (negative, body) pairs, highest degree first, into '... + ... - ...'."""
    if not terms:
        return "0"
    negative, body = terms[0]
    text = f"-{body}" if negative else body
    for negative, body in terms[1:]:
        text += f" {'-' if negative else '+'} {body}"
    return text


def _monomial(coeff_text: str, k: int, var: str, unit: bool, compound: bool = False) -> str:
    if k == 0:
        return coeff_text
    power = var if k == 1 else f"{var}^{k}"
    if unit:
        return power
    if compound:
        coeff_text = f"({coeff_text})"
    return f"{coeff_text}*{power}"


class IntPoly:
    """Dense polynomial with arbitrary-precision integer coefficients.

    ``coeffs[i]`` is the coefficient of x^i; trailing zeros are stripped, so
    the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: Tuple[int, ...] = tuple(c)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.leading_coefficient == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other) -> Optional["IntPoly"]:
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return IntPoly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise InvalidArgumentError("negative powers of a polynomial are not polynomials")
        result, base = IntPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "IntPoly") -> Tuple["IntPoly", "IntPoly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return poly_divrem(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return poly_divrem(self, other)[1]

    def __call__(self, value):
        """Horner evaluation; a polynomial argument gives the composition."""
        result = 0 if isinstance(value, int) else IntPoly()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def derivative(self) -> "IntPoly":
        return IntPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def shift(self, c: int) -> "IntPoly":
        """F(x + c)."""
        return self(IntPoly((c, 1)))

    def exact_div(self, k: int) -> "IntPoly":
        """Divide every coefficient by k, which must divide all of them."""
        if k == 0:
            raise ZeroDivisionError("division of a polynomial by 0")
        out = []
        for c in self.coeffs:
            q, r = divmod(c, k)
            if r:
                raise InvalidArgumentError(f"{k} does not divide the coefficient {c}")
            out.append(q)
        return IntPoly(out)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                terms.append((c < 0, _monomial(str(abs(c)), k, "x", abs(c) == 1)))
        return _join_terms(terms)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


def poly_divrem(a: IntPoly, b: IntPoly) -> Tuple[IntPoly, IntPoly]:
    """Euclidean division a = q*b + r by a monic b, exact over Z."""
    if b.is_zero or not b.is_monic:
        raise InvalidArgumentError(f"divisor must be monic, got {b}")
    db = b.degree
    bc = b.coeffs
    r = list(a.coeffs)
    q = [0] * max(len(r) - db, 0)
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            q[k - db] = c
            for j in range(db):
                r[k - db + j] -= c * bc[j]
            r[k] = 0
    return IntPoly(q), IntPoly(r[:db])


def poly_content_valuation(a: IntPoly, p: int) -> ExtNat:
    """min_i nu_p(a_i); Infinity for the zero polynomial."""
    require_prime(p)
    return min((padic_valuation(c, p) for c in a.coeffs if c), default=INFINITY)


_SYMPY_X = Symbol("x")


def to_sympy_poly(a: IntPoly) -> Poly:
    """The same polynomial as a sympy ``Poly`` over ZZ."""
    return Poly(list(reversed(a.coeffs)) or [0], _SYMPY_X, domain=ZZ)


def resultant(a: IntPoly, b: IntPoly) -> int:
    """Res(a, b) over Z; sympy runs the subresultant PRS."""
    if a.is_zero or b.is_zero:
        return 0
    return int(to_sympy_poly(a).resultant(to_sympy_poly(b)))


def discriminant(a: IntPoly) -> int:
    """disc(a) = (-1)^(n(n-1)/2) Res(a, a') / lc(a)."""
    if a.degree < 1:
        raise InvalidArgumentError(f"discriminant needs a non-constant polynomial, got {a}")
    return int(to_sympy_poly(a).discriminant())


class FqContext:
    """The finite field F_p[x]/(modulus) with modulus monic irreducible over F_p.

    Elements are tuples of residues in [0, p), lowest degree first, trailing
    zeros stripped (the zero element is ``()``), of length at most d.
    """

    def __init__(self, p: int, modulus: Union[None, Sequence[int], IntPoly] = None, verify: bool = True):
        require_prime(p)
        if modulus is None:
            mod: Tuple[int, ...] = (0, 1)
        else:
            raw = modulus.coeffs if isinstance(modulus, IntPoly) else tuple(modulus)
            reduced = [int(c) % p for c in raw]
            while reduced and reduced[-1] == 0:
                reduced.pop()
            mod = tuple(reduced)
        if len(mod) < 2 or mod[-1] != 1:
            raise InvalidArgumentError(f"field modulus must be monic of degree >= 1 mod {p}, got {mod}")
        self.p = p
        self.modulus = mod
        self.degree = len(mod) - 1
        self.order = p ** self.degree
        if verify and self.degree > 1:
            base = FqContext.prime_field(p)
            if not is_irreducible(FqPoly(base, [(c,) if c else () for c in mod], normalized=True)):
                raise InvalidArgumentError(f"modulus {self.modulus_text()} is reducible over F_{p}")

    @staticmethod
    @lru_cache(maxsize=None)
    def prime_field(p: int) -> "FqContext":
        return FqContext(p, None, verify=False)

    @property
    def is_prime_field(self) -> bool:
        return self.degree == 1

    def _normalize(self, values: List[int]) -> Element:
        p, mod, d = self.p, self.modulus, self.degree
        r = [v % p for v in values]
        for k in range(len(r) - 1, d - 1, -1):
            c = r[k]
            if c:
                for j in range(d):
                    r[k - d + j] = (r[k - d + j] - c * mod[j]) % p
                r[k] = 0
        r = r[:d]
        while r and r[-1] == 0:
            r.pop()
        return tuple(r)

    def element(self, value: Union[int, Sequence[int], IntPoly]) -> Element:
        if isinstance(value, int):
            return self._normalize([value])
        if isinstance(value, IntPoly):
            return self._normalize(list(value.coeffs))
        return self._normalize(list(value))

    @property
    def zero(self) -> Element:
        return ()

    @property
    def one(self) -> Element:
        return (1,)

    def add(self, a: Element, b: Element) -> Element:
        n = max(len(a), len(b))
        r = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % self.p for i in range(n)]
        while r and r[-1] == 0:
            r.pop()
        return tuple(r)

    def neg(self, a: Element) -> Element:
        return tuple((-c) % self.p for c in a)

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        if not a or not b:
            return ()
        if self.degree == 1:
            c = (a[0] * b[0]) % self.p
            return (c,) if c else ()
        out = [0] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    out[i + j] += u * v
        return self._normalize(out)

    def scale(self, a: Element, k: int) -> Element:
        return self._normalize([c * k for c in a])

    def pow(self, a: Element, n: int) -> Element:
        result, base = self.one, a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def inv(self, a: Element) -> Element:
        if not a:
            raise ZeroDivisionError("0 has no inverse")
        if self.degree == 1:
            return (pow(a[0], self.p - 2, self.p),)
        return self.pow(a, self.order - 2)

    def pth_root(self, a: Element) -> Element:
        """The unique b with b^p = a (Frobenius is bijective on F_q)."""
        return self.pow(a, self.order // self.p)

    def random_element(self, rng: random.Random) -> Element:
        return self._normalize([rng.randrange(self.p) for _ in range(self.degree)])

    def format_element(self, a: Element) -> str:
        terms = [(False, _monomial(str(c), k, "x", c == 1)) for k, c in reversed(list(enumerate(a))) if c]
        return _join_terms(terms)

    def modulus_text(self) -> str:
        return self.format_element(self.modulus) if self.degree > 1 else str(IntPoly(self.modulus))

    def __eq__(self, other) -> bool:
        return isinstance(other, FqContext) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.is_prime_field:
            return f"FqContext(F_{self.p})"
        return f"FqContext(F_{self.p}[x]/({IntPoly(self.modulus)}))"


@lru_cache(maxsize=None)
def field_context(p: int, modulus: Tuple[int, ...]) -> FqContext:
    """Cached FqContext for F_p[x]/(modulus)."""
    return FqContext(p, modulus)


class FqPoly:
    """Dense polynomial over an FqContext; coefficients are field elements."""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: FqContext, coeffs: Iterable = (), normalized: bool = False):
        c = list(coeffs) if normalized else [context.element(v) for v in coeffs]
        while c and not c[-1]:
            c.pop()
        self.context = context
        self.coeffs: Tuple[Element, ...] = tuple(c)

    @classmethod
    def x(cls, context: FqContext) -> "FqPoly":
        return cls(context, [(), (1,)], normalized=True)

    @classmethod
    def one(cls, context: FqContext) -> "FqPoly":
        return cls(context, [(1,)], normalized=True)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Element:
        return self.coeffs[-1] if self.coeffs else ()

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == ((1,),)

    def _check(self, other: "FqPoly") -> None:
        if other.context != self.context:
            raise InvalidArgumentError(f"mixed fields: {self.context!r} and {other.context!r}")

    def __add__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        ctx = self.context
        n = max(len(self.coeffs), len(other.coeffs))
        return FqPoly(ctx, [ctx.add(self._at(i), other._at(i)) for i in range(n)], normalized=True)

    def __neg__(self) -> "FqPoly":
        return FqPoly(self.context, [self.context.neg(c) for c in self.coeffs], normalized=True)

    def __sub__(self, other: "FqPoly") -> "FqPoly":
        return self + (-other)

    def __mul__(self, other: "FqPoly") -> "FqPoly":
        self._check(other)
        ctx = self.context
        if self.is_zero or other.is_zero:
            return FqPoly(ctx)
        out: List[Element] = [()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
        return FqPoly(ctx, out, normalized=True)

    def __pow__(self, n: int) -> "FqPoly":
        result, base = FqPoly.one(self.context), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _at(self, i: int) -> Element:
        return self.coeffs[i] if i < len(self.coeffs) else ()

    def scale(self, c: Element) -> "FqPoly":
        ctx = self.context
        return FqPoly(ctx, [ctx.mul(c, a) for a in self.coeffs], normalized=True)

    def monic(self) -> "FqPoly":
        if self.is_zero:
            return self
        return self.scale(self.context.inv(self.leading))

    def __divmod__(self, other: "FqPoly") -> Tuple["FqPoly", "FqPoly"]:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.context
        inv_lc = ctx.inv(other.leading)
        db = other.degree
        r = list(self.coeffs)
        q: List[Element] = [()] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if c:
                c = ctx.mul(c, inv_lc)
                q[k - db] = c
                for j, b in enumerate(other.coeffs):
                    if b:
                        r[k - db + j] = ctx.sub(r[k - db + j], ctx.mul(c, b))
        return FqPoly(ctx, q, normalized=True), FqPoly(ctx, r[:db], normalized=True)

    def __floordiv__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "FqPoly") -> "FqPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "FqPoly":
        ctx = self.context
        return FqPoly(ctx, [ctx.scale(c, i) for i, c in enumerate(self.coeffs) if i], normalized=True)

    def pow_mod(self, n: int, modulus: "FqPoly") -> "FqPoly":
        result, base = FqPoly.one(self.context) % modulus, self % modulus
        while n:
            if n & 1:
                result = (result * base) % modulus
            n >>= 1
            if n:
                base = (base * base) % modulus
        return result

    def is_squarefree(self) -> bool:
        if self.degree < 1:
            return not self.is_zero
        return fq_gcd(self, self.derivative()).is_one

    def lift(self) -> IntPoly:
        """Canonical integer representatives in [0, p); prime fields only."""
        if not self.context.is_prime_field:
            raise InvalidArgumentError("only polynomials over a prime field lift to IntPoly")
        return IntPoly(c[0] if c else 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.context == other.context and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.context, self.coeffs))

    def to_text(self, var: Optional[str] = None) -> str:
        ctx = self.context
        if var is None:
            var = "x" if ctx.is_prime_field else "y"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                text = ctx.format_element(c)
                compound = " " in text
                terms.append((False, _monomial(text, k, var, c == (1,), compound)))
        return _join_terms(terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FqPoly({self.to_text()!r} over {self.context!r})"


def reduce_mod_p(a: IntPoly, p: int) -> FqPoly:
    """Coefficientwise reduction of an integer polynomial into F_p[x]."""
    ctx = FqContext.prime_field(require_prime(p))
    return FqPoly(ctx, a.coeffs)


def fq_gcd(a: FqPoly, b: FqPoly) -> FqPoly:
    """Monic greatest common divisor."""
    if a.is_zero and b.is_zero:
        raise InvalidArgumentError("gcd(0, 0) is undefined")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def is_irreducible(g: FqPoly) -> bool:
    """Ben-Or test: g has no factor of degree <= deg(g)/2."""
    n = g.degree
    if n < 1:
        return False
    if n == 1:
        return True
    g = g.monic()
    x = FqPoly.x(g.context)
    h = x
    q = g.context.order
    for _ in range(n // 2):
        h = h.pow_mod(q, g)
        if not fq_gcd(h - x, g).is_one:
            return False
    return True


def _pth_root(f: FqPoly) -> FqPoly:
    ctx = f.context
    p = ctx.p
    return FqPoly(ctx, [ctx.pth_root(f.coeffs[k]) for k in range(0, len(f.coeffs), p)], normalized=True)


def _squarefree_decomposition(f: FqPoly) -> List[Tuple[FqPoly, int]]:
    """Monic squarefree, pairwise coprime (g, i) with f = prod g^i."""
    result: List[Tuple[FqPoly, int]] = []
    if f.degree < 1:
        return result
    g = fq_gcd(f, f.derivative())
    w = f // g
    i = 1
    while not w.is_one:
        y = fq_gcd(w, g)
        z = w // y
        if z.degree > 0:
            result.append((z.monic(), i))
        i += 1
        w = y
        g = g // y
    if g.degree > 0:
        p = f.context.p
        result.extend((h, j * p) for h, j in _squarefree_decomposition(_pth_root(g.monic())))
    return result


def _distinct_degree(f: FqPoly) -> List[Tuple[FqPoly, int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    result: List[Tuple[FqPoly, int]] = []
    x = FqPoly.x(f.context)
    q = f.context.order
    h = x % f
    i = 1
    while f.degree >= 2 * i:
        h = h.pow_mod(q, f)
        g = fq_gcd(f, h - x)
        if not g.is_one:
            result.append((g, i))
            f = f // g
            h = h % f
        i += 1
    if f.degree > 0:
        result.append((f.monic(), f.degree))
    return result


def _splitting_candidate(a: FqPoly, f: FqPoly, k: int) -> FqPoly:
    ctx = f.context
    q = ctx.order
    if ctx.p == 2:
        # absolute trace F_{q^k} -> F_2
        t = s = a % f
        for _ in range(ctx.degree * k - 1):
            t = (t * t) % f
            s = s + t
        return s
    return a.pow_mod((q ** k - 1) // 2, f) - FqPoly.one(ctx)


def _equal_degree(f: FqPoly, k: int, rng: random.Random) -> List[FqPoly]:
    """Cantor-Zassenhaus splitting of a product of distinct degree-k irreducibles."""
    n = f.degree
    if n <= k:
        return [f.monic()]
    ctx = f.context
    while True:
        a = FqPoly(ctx, [ctx.random_element(rng) for _ in range(n)], normalized=True)
        if a.degree < 1:
            continue
        g = fq_gcd(f, _splitting_candidate(a, f, k))
        if 0 < g.degree < n:
            return _equal_degree(g, k, rng) + _equal_degree(f // g, k, rng)


def fq_factor(a: FqPoly, seed: int = 0) -> List[Tuple[FqPoly, int]]:
    """Monic irreducible factors of a with multiplicities.

    The leading coefficient of a is dropped. Factors are sorted by degree and
    then coefficients, so the output does not depend on ``seed``.
    """
    if a.is_zero:
        raise InvalidArgumentError("the zero polynomial has no factorization")
    rng = random.Random(seed)
    factors: List[Tuple[FqPoly, int]] = []
    for part, multiplicity in _squarefree_decomposition(a.monic()):
        for chunk, k in _distinct_degree(part):
            factors.extend((g, multiplicity) for g in _equal_degree(chunk, k, rng))
    factors.sort(key=lambda item: (item[0].degree, item[0].coeffs, item[1]))
    LOGGER.debug("factored %s over %r into %d irreducibles", a, a.context, len(factors))
    return factors
