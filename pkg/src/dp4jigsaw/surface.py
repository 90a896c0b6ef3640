"""Points on the quartic del Pezzo surface x0*x3 = x2*x4, x0*x1 + x1*x3 + x2^2 = 0.

Membership, line detection, integrality and heights over Z, Z[i] and prime
fields, plus the direct counts: a transparent O(B^3) triple loop (the
oracle of record for small bounds) and a divisor-driven enumeration that
reaches B ~ 10^4.

The enumeration rests on the solved form of the equations: off the three
lines one has x2 != 0 and x0 + x3 != 0, so

    x1 = -x2^2 / (x0 + x3),      x4 = x0 * x3 / x2,

and a point is integral exactly when gcd(x0, x2, x3) is a unit; its height
is then max_v(|x0|_v, |x2|_v, |x3|_v).  On the surface, x2 = 0 cuts out
precisely the union of the three lines (checked exhaustively over small
prime fields in the test suite), which justifies the x2 != 0 restriction.
"""

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from . import gaussian
from .errors import (DegenerateCoordinates, DimensionMismatch,
                     NonpositiveBound, NotOnSurface, NotPrime, OnBoundary)
from .gaussian import GaussInt

LINE_L = "L"       # x0 = x2 = x3 = 0, the boundary line through both singularities
LINE_LP = "L'"     # x1 = x2 = x3 = 0
LINE_LPP = "L''"   # x0 = x1 = x2 = 0


@dataclass(frozen=True)
class GroundRing:
    kind: str
    p: int = None

    def __str__(self):
        return {"rational-integers": "Z",
                "gaussian-integers": "Z[i]"}.get(self.kind, f"F_{self.p}")


INTEGERS = GroundRing("rational-integers")
GAUSSIAN = GroundRing("gaussian-integers")


def is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_field(p):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return GroundRing("prime-field", p)


def parse_ring(text):
    text = text.strip().lower()
    if text in ("z", "zz", "int", "rational-integers"):
        return INTEGERS
    if text in ("zi", "z[i]", "gaussian", "gaussian-integers"):
        return GAUSSIAN
    raise ValueError(f"unknown ground ring {text!r}")


@dataclass(frozen=True)
class ProjectivePoint:
    """A primitive 5-tuple in canonical form for its ground ring."""

    ring: GroundRing
    coords: tuple

    @staticmethod
    def make(coords, ring=INTEGERS):
        if len(coords) != 5:
            raise DimensionMismatch("projective points here have 5 coordinates")
        if ring.kind == "rational-integers":
            ints = tuple(int(c) for c in coords)
            if not any(ints):
                raise DegenerateCoordinates("all coordinates are zero")
            g = 0
            for c in ints:
                g = gcd(g, c)
            ints = tuple(c // g for c in ints)
            lead = next(c for c in ints if c)
            if lead < 0:
                ints = tuple(-c for c in ints)
            return ProjectivePoint(ring, ints)
        if ring.kind == "gaussian-integers":
            gs = tuple(c if isinstance(c, GaussInt) else GaussInt(int(c), 0)
                       for c in coords)
            if not any(gs):
                raise DegenerateCoordinates("all coordinates are zero")
            g = gaussian.gcd_many([c for c in gs if c])
            gs = tuple(gaussian.exact_div(c, g) if c else c for c in gs)
            lead = next(c for c in gs if c)
            _, unit = gaussian.canonical_associate(lead)
            gs = tuple(c * unit for c in gs)
            return ProjectivePoint(ring, gs)
        if ring.kind == "prime-field":
            p = ring.p
            vals = tuple(int(c) % p for c in coords)
            if not any(vals):
                raise DegenerateCoordinates("all coordinates are zero")
            lead = next(c for c in vals if c)
            inv = pow(lead, -1, p)
            return ProjectivePoint(ring, tuple(c * inv % p for c in vals))
        raise ValueError(f"unsupported ring {ring}")

    def __str__(self):
        return ":".join(str(c) for c in self.coords)


def _is_zero(ring, value):
    if ring.kind == "prime-field":
        return value % ring.p == 0
    return not value


def on_surface(pt):
    """Do both defining equations vanish at the point?"""
    x0, x1, x2, x3, x4 = pt.coords
    eq1 = x0 * x3 - x2 * x4
    eq2 = x0 * x1 + x1 * x3 + x2 * x2
    return _is_zero(pt.ring, eq1) and _is_zero(pt.ring, eq2)


def on_lines(pt):
    """The subset of the three lines containing the point."""
    if not on_surface(pt):
        raise NotOnSurface(f"{pt} does not satisfy the surface equations")
    x0, x1, x2, x3, _ = pt.coords
    zero = lambda v: _is_zero(pt.ring, v)
    out = set()
    if zero(x0) and zero(x2) and zero(x3):
        out.add(LINE_L)
    if zero(x1) and zero(x2) and zero(x3):
        out.add(LINE_LP)
    if zero(x0) and zero(x1) and zero(x2):
        out.add(LINE_LPP)
    return out


def is_integral(pt):
    """Is the coordinate ideal of (x0, x2, x3) the unit ideal?"""
    if pt.ring.kind == "prime-field":
        raise TypeError("integrality is defined over number rings only")
    if not on_surface(pt):
        raise NotOnSurface(f"{pt} does not satisfy the surface equations")
    if LINE_L in on_lines(pt):
        raise OnBoundary(f"{pt} lies on the boundary line")
    x0, _, x2, x3, _ = pt.coords
    if pt.ring.kind == "rational-integers":
        return gcd(gcd(x0, x2), x3) == 1
    return gaussian.gcd_many([x0, x2, x3]).is_unit()


def height(pt):
    """Log anticanonical height: product over places of max(|x0|, |x2|, |x3|)."""
    x0, _, x2, x3, _ = pt.coords
    if pt.ring.kind == "rational-integers":
        if not (x0 or x2 or x3):
            raise DegenerateCoordinates("height undefined: x0 = x2 = x3 = 0")
        g = gcd(gcd(x0, x2), x3)
        return Fraction(max(abs(x0), abs(x2), abs(x3)), g)
    if pt.ring.kind == "gaussian-integers":
        if not (x0 or x2 or x3):
            raise DegenerateCoordinates("height undefined: x0 = x2 = x3 = 0")
        g = gaussian.gcd_many([x0, x2, x3])
        return Fraction(max(x0.norm(), x2.norm(), x3.norm()), g.norm())
    raise TypeError("height is defined over number rings only")


@dataclass(frozen=True)
class CountResult:
    bound: Fraction
    count: int
    ring: GroundRing
    method: str
    elapsed: float


def _int_bound(bound):
    b = Fraction(bound)
    if b <= 0:
        raise NonpositiveBound(f"bound must be positive, got {bound}")
    return int(b)  # heights are positive integers, so floor is exact


# ---------------------------------------------------------------------------
# Direct counting over Z
# ---------------------------------------------------------------------------

def _divisors(n):
    """Sorted positive divisors of n >= 1."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _heights_triple_z(bound):
    """Height histogram of integral points off the lines, by brute triple loop."""
    hist = np.zeros(bound + 1, dtype=np.int64)
    for x0 in range(0, bound + 1):
        x2_range = range(1, bound + 1) if x0 == 0 else \
            [x for x in range(-bound, bound + 1) if x]
        for x2 in x2_range:
            sq = x2 * x2
            for x3 in range(-bound, bound + 1):
                s = x0 + x3
                if s == 0 or sq % s != 0:
                    continue
                if (x0 * x3) % x2 != 0:
                    continue
                if gcd(gcd(x0, x2), x3) != 1:
                    continue
                hist[max(x0, abs(x2), abs(x3))] += 1
    return hist


def _heights_divisor_z(bound):
    """Height histogram via s = x0 + x3 running over divisors of x2^2.

    Points with x0 = 0 force x3 = +-1 (two points of height x2 for every
    x2 >= 1); for x0 >= 1 the canonical representative leaves the sign of
    x2 free, so the x2 > 0 count is doubled.
    """
    hist = np.zeros(bound + 1, dtype=np.int64)
    if bound >= 1:
        hist[1:] += 2  # x0 = 0 family
    for x2 in range(1, bound + 1):
        divs = _divisors(x2 * x2)
        for s_abs in divs:
            for s in (s_abs, -s_abs):
                lo = max(1, s - bound)
                hi = min(bound, s + bound)
                if lo > hi:
                    continue
                x0 = np.arange(lo, hi + 1, dtype=np.int64)
                x3 = s - x0
                mask = (x0 * x3) % x2 == 0
                if not mask.any():
                    continue
                x0 = x0[mask]
                x3 = x3[mask]
                mask = np.gcd(np.gcd(x0, x2), x3) == 1
                if not mask.any():
                    continue
                x0 = x0[mask]
                x3 = x3[mask]
                h = np.maximum(np.maximum(x0, np.abs(x3)), x2)
                np.add.at(hist, h, 2)  # x2 of either sign
    return hist


def direct_height_counts(bound, ring=INTEGERS, method="divisor"):
    """Cumulative counts N(b) for all integer b <= bound, as an array."""
    b = _int_bound(bound)
    if ring == INTEGERS:
        hist = _heights_divisor_z(b) if method == "divisor" else _heights_triple_z(b)
    elif ring == GAUSSIAN:
        hist = _heights_triple_zi(b)
    else:
        raise ValueError("direct counts run over Z or Z[i]")
    return hist.cumsum()


def direct_count(bound, ring=INTEGERS, method="divisor"):
    """Exact count of integral points off the lines with height <= bound."""
    t0 = time.perf_counter()
    counts = direct_height_counts(bound, ring=ring, method=method)
    name = "direct-divisor" if method == "divisor" else "direct-triple-loop"
    return CountResult(bound=Fraction(bound), count=int(counts[-1]), ring=ring,
                       method=name, elapsed=time.perf_counter() - t0)


def direct_points(bound, ring=INTEGERS):
    """All integral points off the lines with height <= bound, canonical form."""
    b = _int_bound(bound)
    points = []
    if ring == INTEGERS:
        for x2 in range(1, b + 1):
            points.append(ProjectivePoint.make((0, -x2 * x2, x2, 1, 0)))
            points.append(ProjectivePoint.make((0, x2 * x2, x2, -1, 0)))
            for s_abs in _divisors(x2 * x2):
                for s in (s_abs, -s_abs):
                    x1 = -(x2 * x2) // s
                    for x0 in range(max(1, s - b), min(b, s + b) + 1):
                        x3 = s - x0
                        if (x0 * x3) % x2 != 0:
                            continue
                        if gcd(gcd(x0, x2), x3) != 1:
                            continue
                        x4 = (x0 * x3) // x2
                        points.append(ProjectivePoint.make((x0, x1, x2, x3, x4)))
                        points.append(ProjectivePoint.make((x0, x1, -x2, x3, -x4)))
    elif ring == GAUSSIAN:
        points = _points_zi(b)
    else:
        raise ValueError("direct counts run over Z or Z[i]")
    return sorted(points, key=lambda p: (float(height(p)), str(p)))


# ---------------------------------------------------------------------------
# Direct counting over Z[i]
# ---------------------------------------------------------------------------

def _triples_zi(bound):
    """Canonical triples (x0, x2, x3) of integral off-line points, N-height <= bound."""
    shell = gaussian.elements_of_norm_up_to(bound)
    canon = [z for z in shell if z.re > 0 and z.im >= 0]
    zero = gaussian.ZERO
    for x0 in [zero] + canon:
        x2_range = canon if not x0 else shell
        for x2 in x2_range:
            sq = x2 * x2
            for x3 in shell + [zero]:
                s = x0 + x3
                if not s or not gaussian.divides(s, sq):
                    continue
                prod = x0 * x3
                if not gaussian.divides(x2, prod):
                    continue
                if not gaussian.gcd_many([x0, x2, x3]).is_unit():
                    continue
                yield x0, x2, x3, s, prod


def _heights_triple_zi(bound):
    hist = np.zeros(bound + 1, dtype=np.int64)
    for x0, x2, x3, _, _ in _triples_zi(bound):
        hist[max(x0.norm(), x2.norm(), x3.norm())] += 1
    return hist


def _points_zi(bound):
    points = []
    for x0, x2, x3, s, prod in _triples_zi(bound):
        x1 = -gaussian.exact_div(x2 * x2, s)
        x4 = gaussian.exact_div(prod, x2)
        points.append(ProjectivePoint.make((x0, x1, x2, x3, x4), ring=GAUSSIAN))
    return points


# ---------------------------------------------------------------------------
# Counting modulo p
# ---------------------------------------------------------------------------

def _projective_reps(p):
    """Canonical representatives of P^4(F_p): leading coordinate 1."""
    for lead in range(5):
        for tail in itertools.product(range(p), repeat=4 - lead):
            yield (0,) * lead + (1,) + tail


def count_mod_p(p):
    """|{x in P^4(F_p) : both equations hold, x not on L}|; equals p^2 + p."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    count = 0
    for x in _projective_reps(p):
        x0, x1, x2, x3, x4 = x
        if (x0 * x3 - x2 * x4) % p:
            continue
        if (x0 * x1 + x1 * x3 + x2 * x2) % p:
            continue
        if x0 % p == 0 and x2 % p == 0 and x3 % p == 0:
            continue  # on the boundary line L
        count += 1
    return count


def line_count_mod_p(p):
    """|L(F_p)| = p + 1: points with x0 = x2 = x3 = 0."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    count = 0
    for x in _projective_reps(p):
        if x[0] % p == 0 and x[2] % p == 0 and x[3] % p == 0:
            count += 1
    return count


def surface_x2_zero_is_lines(p):
    """Exhaustive check that S intersected with {x2 = 0} is the three lines."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    for x in _projective_reps(p):
        pt = ProjectivePoint.make(x, ring=prime_field(p))
        if not on_surface(pt):
            continue
        if pt.coords[2] % p == 0 and not on_lines(pt):
            return False
        if pt.coords[2] % p != 0 and on_lines(pt):
            return False
    return True


# ---------------------------------------------------------------------------
# Point stream
# ---------------------------------------------------------------------------

def format_point_line(pt):
    """Stream format: 'x0:x1:x2:x3:x4,H'."""
    return f"{pt},{height(pt)}"


def write_point_stream(points, stream):
    for pt in points:
        stream.write(format_point_line(pt) + "\n")
