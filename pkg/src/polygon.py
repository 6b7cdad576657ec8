"""phi-adic expansions, principal Newton polygons and residual polynomials."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

try:
    from .errors import InconsistencyError, InvalidArgumentError
    from .intsupport import ExtNat
    from .polyalg import FqPoly, IntPoly, field_context, fq_factor, poly_content_valuation, poly_divrem, reduce_mod_p
except ImportError:
    from errors import InconsistencyError, InvalidArgumentError
    from intsupport import ExtNat
    from polyalg import FqPoly, IntPoly, field_context, fq_factor, poly_content_valuation, poly_divrem, reduce_mod_p


LOGGER = logging.getLogger(__name__)

Point = Tuple[int, int]


@dataclass(frozen=True)
class PhiExpansion:
    """F = sum a_i * phi^i with deg a_i < deg phi."""

    phi: IntPoly
    terms: Tuple[IntPoly, ...]

    @property
    def length(self) -> int:
        return len(self.terms) - 1

    def term(self, i: int) -> IntPoly:
        """a_i; the zero polynomial beyond the last term."""
        return self.terms[i] if 0 <= i < len(self.terms) else IntPoly()

    def valuations(self, p: int) -> List[ExtNat]:
        return [poly_content_valuation(a, p) for a in self.terms]

    def reconstruct(self) -> IntPoly:
        result = IntPoly()
        for a in reversed(self.terms):
            result = result * self.phi + a
        return result


def phi_expand(F: IntPoly, phi: IntPoly) -> PhiExpansion:
    """Canonical phi-expansion by repeated Euclidean division."""
    if phi.degree < 1 or not phi.is_monic:
        raise InvalidArgumentError(f"phi must be monic of degree >= 1, got {phi}")
    terms = []
    rest = F
    while not rest.is_zero:
        rest, a = poly_divrem(rest, phi)
        terms.append(a)
    return PhiExpansion(phi, tuple(terms))


@dataclass(frozen=True)
class Side:
    """A segment of a Newton polygon between two lattice points."""

    start: Point
    end: Point

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    @property
    def e(self) -> int:
        """Denominator of the reduced slope; the ramification index of the side."""
        return self.slope.denominator

    @property
    def h(self) -> int:
        return -self.slope.numerator

    @property
    def degree(self) -> int:
        return self.length // self.e

    @property
    def slope_text(self) -> str:
        return f"-{self.h}/{self.e}"

    def ordinate_at(self, x: int) -> Fraction:
        return self.start[1] + self.slope * (x - self.start[0])

    def lattice_points(self) -> List[Point]:
        s, u = self.start
        return [(s + k * self.e, u - k * self.h) for k in range(self.degree + 1)]

    def __str__(self) -> str:
        return f"{self.start}-{self.end} slope {self.slope_text}"


@dataclass(frozen=True)
class NewtonPolygon:
    """Principal (negative-slope) part of a lower convex hull."""

    prime: int
    phi: IntPoly
    sides: Tuple[Side, ...]
    cloud: Tuple[Point, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.sides

    @property
    def vertices(self) -> List[Point]:
        if not self.sides:
            return []
        return [s.start for s in self.sides] + [self.sides[-1].end]

    @property
    def slopes(self) -> List[Fraction]:
        return [s.slope for s in self.sides]

    def ordinate_at(self, x: int) -> Optional[Fraction]:
        """Height of the polygon above abscissa x, None outside its span."""
        for side in self.sides:
            if side.start[0] <= x <= side.end[0]:
                return side.ordinate_at(x)
        return None

    def counted_points(self) -> List[Point]:
        """Lattice points with positive coordinates on or below the polygon."""
        if not self.sides:
            return []
        points = []
        for x in range(max(1, self.sides[0].start[0]), self.sides[-1].end[0] + 1):
            top = math.floor(self.ordinate_at(x))
            points.extend((x, y) for y in range(1, top + 1))
        return points

    def on_side_points(self) -> List[Point]:
        """Lattice points on the sides that are not vertices."""
        vertices = set(self.vertices)
        return [pt for side in self.sides for pt in side.lattice_points() if pt not in vertices]

    def index(self) -> int:
        return self.phi.degree * len(self.counted_points())


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def polygon_from_points(points: Iterable[Point], prime: int, phi: Optional[IntPoly] = None) -> NewtonPolygon:
    """Lower convex hull of lattice points, cut to its negative slopes.

    Collinear points are merged into one side.
    """
    lowest = {}
    for x, y in points:
        if x not in lowest or y < lowest[x]:
            lowest[x] = y
    cloud = sorted(lowest.items())
    if not cloud:
        raise InvalidArgumentError("a Newton polygon needs at least one point")
    hull: List[Point] = []
    for pt in cloud:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    sides = []
    for a, b in zip(hull, hull[1:]):
        if b[1] >= a[1]:
            break
        sides.append(Side(a, b))
    return NewtonPolygon(prime, phi if phi is not None else IntPoly.x(), tuple(sides), tuple(cloud))


def principal_polygon(exp: PhiExpansion, p: int) -> NewtonPolygon:
    """N_phi^-(F) from the points (i, u_i) with a_i != 0."""
    points = [(i, int(u)) for i, u in enumerate(exp.valuations(p)) if not u.is_infinite]
    if not points:
        raise InvalidArgumentError("every phi-adic coefficient vanishes; no polygon")
    polygon = polygon_from_points(points, p, exp.phi)
    LOGGER.debug("polygon of phi=%s at p=%d: vertices %s", exp.phi, p, polygon.vertices)
    return polygon


@dataclass(frozen=True)
class ResidualPolynomial:
    """R_lambda(F)(y) over F_phi attached to one side."""

    side: Side
    polynomial: FqPoly

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def coefficients(self) -> Tuple[Tuple[int, ...], ...]:
        return self.polynomial.coeffs

    def is_squarefree(self) -> bool:
        return self.polynomial.is_squarefree()

    def factor(self, seed: int = 0) -> List[Tuple[FqPoly, int]]:
        return fq_factor(self.polynomial, seed)

    def __str__(self) -> str:
        return self.polynomial.to_text("y")


def residue_field(phi: IntPoly, p: int):
    """F_phi = F_p[x]/(phi mod p)."""
    return field_context(p, tuple(c % p for c in phi.coeffs))


def residual_poly(exp: PhiExpansion, p: int, side: Side) -> ResidualPolynomial:
    polygon = principal_polygon(exp, p)
    if side not in polygon.sides:
        raise InvalidArgumentError(f"side {side} is not on the principal polygon at p={p}")
    ctx = residue_field(exp.phi, p)
    s, u_s = side.start
    coeffs = []
    for i in range(side.degree + 1):
        a = exp.term(s + i * side.e)
        expected = u_s - i * side.h
        if poly_content_valuation(a, p) == expected:
            coeffs.append(ctx.element(a.exact_div(p ** expected)))
        else:
            coeffs.append(ctx.zero)
    residual = ResidualPolynomial(side, FqPoly(ctx, coeffs, normalized=True))
    if residual.degree != side.degree or not residual.coefficients[0]:
        raise InconsistencyError(f"degenerate residual polynomial {residual} for side {side}")
    return residual


def residual_polys(exp: PhiExpansion, p: int) -> List[ResidualPolynomial]:
    return [residual_poly(exp, p, side) for side in principal_polygon(exp, p).sides]


def phi_index(exp: PhiExpansion, p: int) -> int:
    """ind_phi(F): deg(phi) times the lattice points under the principal polygon."""
    return principal_polygon(exp, p).index()


def is_phi_regular(exp: PhiExpansion, p: int) -> bool:
    return all(r.is_squarefree() for r in residual_polys(exp, p))


def is_p_regular(F: IntPoly, p: int, seed: int = 0) -> bool:
    """F is phi-regular for the monic lift of every repeated irreducible factor mod p."""
    for factor, multiplicity in fq_factor(reduce_mod_p(F, p), seed):
        if multiplicity > 1 and not is_phi_regular(phi_expand(F, factor.lift()), p):
            LOGGER.debug("%s is not %d-regular at phi=%s", F, p, factor)
            return False
    return True
