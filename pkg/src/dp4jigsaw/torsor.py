"""Universal-torsor parameterization of the integral points over Q.

Integral points off the lines lift to integer 9-tuples (a1, ..., a9) with

    a1*a9 + a2*a8 + a3*a4^2*a5^3*a7 = 0,      a3, ..., a7 units,

mapping back to the surface through fixed monomials in the a_i.  Over Q
the class group is trivial and there are no fundamental units, so sign
normalization (a1, ..., a5 > 0) realizes a fundamental domain and every
surface point has exactly two normalized lifts; hence

    N(B) = 1/2 * #{a1, a2 >= 1, a6, a7 = +-1, a8, a9 in Z :
                   a1*a9 + a2*a8 + a7 = 0,
                   max(|a2*a8|, a1*a2, |a1*a9|) <= B}.

The fast counter resolves the congruence a2*a8 = -a7 (mod a1) and counts
each residue class inside its height interval in O(1) per pair (a1, a2),
vectorized over a2; the naive counter scans a8 directly and exists to
cross-check it.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np

from .errors import (CoprimalityBroken, EquationViolated, NonpositiveBound,
                     NonUnitMiddle)
from .surface import INTEGERS, CountResult, ProjectivePoint


@dataclass(frozen=True)
class TorsorPoint:
    """A valid integer solution of the torsor equation with unit middle."""

    a: tuple

    def __str__(self):
        return ",".join(str(x) for x in self.a)


@dataclass(frozen=True)
class NormalizedTorsorPoint:
    """A torsor point with a1, a2 >= 1 and a3 = a4 = a5 = 1."""

    point: TorsorPoint


def validate(values):
    """Check the torsor equation and unit conditions; return a TorsorPoint.

    The coprimality gcd(a1*a9, a2*a8) = 1 and the pairwise conditions on
    the indices 1, 2, 8, 9 follow from the equation; they are asserted,
    never imposed, and a failure means broken arithmetic.
    """
    a = tuple(int(x) for x in values)
    if len(a) != 9:
        raise EquationViolated("a torsor point has nine coordinates")
    a1, a2, a3, a4, a5, a6, a7, a8, a9 = a
    for v in (a3, a4, a5, a6, a7):
        if v not in (1, -1):
            raise NonUnitMiddle(f"a3..a7 must be units, got {a}")
    if a1 * a9 + a2 * a8 + a3 * a4 * a4 * a5 ** 3 * a7 != 0:
        raise EquationViolated(f"torsor equation fails for {a}")
    if gcd(a1 * a9, a2 * a8) != 1:
        raise CoprimalityBroken(f"gcd(a1*a9, a2*a8) != 1 for {a}")
    # non-adjacent pairs among the non-unit coordinates
    if gcd(a1, a2) != 1 or gcd(a1, a8) != 1 or gcd(a2, a9) != 1:
        raise CoprimalityBroken(f"pairwise coprimality fails for {a}")
    return TorsorPoint(a)


def normalize_check(point):
    """Wrap a TorsorPoint that is already in normalized form."""
    a = point.a
    if not (a[0] >= 1 and a[1] >= 1 and a[2] == a[3] == a[4] == 1):
        raise EquationViolated(f"{a} is not in normalized form")
    return NormalizedTorsorPoint(point)


def map_to_surface(point):
    """Descent to the surface; the image is primitive and canonical."""
    a1, a2, a3, a4, a5, a6, a7, a8, a9 = point.a
    x0 = a2 * a3 * a4 * a5 * a6 * a7 * a8
    x1 = a1 ** 2 * a2 ** 2 * a3 ** 2 * a4 * a6 ** 3
    x2 = a1 * a2 * a3 ** 2 * a4 ** 2 * a5 ** 2 * a6 ** 2 * a7
    x3 = a1 * a3 * a4 * a5 * a6 * a7 * a9
    x4 = a7 * a8 * a9
    return ProjectivePoint.make((x0, x1, x2, x3, x4), ring=INTEGERS)


def lifted_height(point):
    """max(|a2*a8|, |a1*a2*a3*a4*a5*a6|, |a1*a9|); equals the surface height."""
    a1, a2, a3, a4, a5, a6, a7, a8, a9 = point.a
    return Fraction(max(abs(a2 * a8), abs(a1 * a2 * a3 * a4 * a5 * a6), abs(a1 * a9)))


# ---------------------------------------------------------------------------
# Counting
# ---------------------------------------------------------------------------

def _int_bound(bound):
    b = Fraction(bound)
    if b <= 0:
        raise NonpositiveBound(f"bound must be positive, got {bound}")
    return int(b)


def _inverse_table(m):
    """inv[i] = i^-1 mod m where gcd(i, m) = 1, else -1."""
    inv = np.full(m, -1, dtype=np.int64)
    for i in range(1, m):
        if gcd(i, m) == 1:
            inv[i] = pow(i, -1, m)
    return inv


def _pair_counts_fast(a1, a2_arr, bound):
    """Solutions a8 of a2*a8 = -1 (mod a1) with a2*a8 in [-B, B-1], per a2.

    Vectorized over the a2 array for one fixed a1; pairs with
    gcd(a1, a2) > 1 contribute zero.
    """
    lo = -(bound // a2_arr)           # ceil(-B / a2)
    hi = (bound - 1) // a2_arr        # floor((B-1) / a2)
    if a1 == 1:
        return hi - lo + 1
    inv = _inverse_table(a1)
    r = inv[a2_arr % a1]
    ok = r >= 0
    r = np.where(ok, (-r) % a1, 0)
    count = (hi - r) // a1 + (r - lo) // a1 + 1  # floor((hi-r)/a1) - ceil((lo-r)/a1) + 1
    return np.where(ok, np.maximum(count, 0), 0)


def torsor_count(bound, method="fast"):
    """N(B) via the torsor parameterization.

    fast: for each coprime pair (a1, a2) with a1*a2 <= B, count the a8
    residue class inside its exact interval in constant time; the
    (a1, a2) <-> (a2, a1) swap symmetry of the solution set halves the
    work and lets a1 stay below sqrt(B).

    naive: scan a8 over the whole interval per pair and test divisibility.
    """
    t0 = time.perf_counter()
    b = _int_bound(bound)
    if b < 1:
        total = 0
    elif method == "fast":
        total = 4 * b  # the pair (1, 1): interval [-B, B-1], doubled by units
        for a1 in range(1, isqrt(b) + 1):
            top = b // a1
            if top <= a1:
                break
            a2 = np.arange(a1 + 1, top + 1, dtype=np.int64)
            counts = _pair_counts_fast(a1, a2, b)
            total += 4 * int(counts.sum())  # swap symmetry x units / |mu_K|
    elif method == "naive":
        total = 0
        for a1 in range(1, b + 1):
            for a2 in range(1, b // a1 + 1):
                lo = -(b // a2)
                hi = (b - 1) // a2
                a8 = np.arange(lo, hi + 1, dtype=np.int64)
                total += 2 * int(((a8 * a2 + 1) % a1 == 0).sum())
    else:
        raise ValueError(f"unknown method {method!r}")
    return CountResult(bound=Fraction(bound), count=int(total), ring=INTEGERS,
                       method=f"torsor-{method}", elapsed=time.perf_counter() - t0)


def torsor_height_counts(bound, method="fast"):
    """Cumulative N(b) for all b <= bound, from one sweep over solutions."""
    b = _int_bound(bound)
    hist = np.zeros(b + 1, dtype=np.int64)
    for a1 in range(1, b + 1):
        for a2 in range(1, b // a1 + 1):
            if gcd(a1, a2) != 1:
                continue
            lo = -(b // a2)
            hi = (b - 1) // a2
            if method == "naive":
                a8 = np.arange(lo, hi + 1, dtype=np.int64)
                a8 = a8[(a8 * a2 + 1) % a1 == 0]
            else:
                r = (-pow(a2, -1, a1)) % a1
                first = lo + (r - lo) % a1
                a8 = np.arange(first, hi + 1, a1, dtype=np.int64)
            if a8.size == 0:
                continue
            y = a2 * a8
            h = np.maximum(a1 * a2, np.maximum(np.abs(y), np.abs(y + 1)))
            counts = np.bincount(h[h <= b], minlength=b + 1)
            hist += 2 * counts
    return hist.cumsum()


def enumerate_normalized(bound):
    """All normalized torsor points with lifted height <= bound."""
    b = _int_bound(bound)
    out = []
    for a1 in range(1, b + 1):
        for a2 in range(1, b // a1 + 1):
            if gcd(a1, a2) != 1:
                continue
            for a7 in (1, -1):
                # y = a2*a8 must satisfy |y| <= B and |y + a7| <= B
                y_lo, y_hi = (-b, b - 1) if a7 == 1 else (1 - b, b)
                lo = -(-y_lo // a2)  # ceil
                hi = y_hi // a2
                r = (-a7 * pow(a2, -1, a1)) % a1
                first = lo + (r - lo) % a1
                for a8 in range(first, hi + 1, a1):
                    a9 = -(a2 * a8 + a7) // a1
                    for a6 in (1, -1):
                        out.append(normalize_check(
                            validate((a1, a2, 1, 1, 1, a6, a7, a8, a9))))
    return out


def enumerate_valid(coord_bound):
    """All valid torsor points with every |a_i| <= coord_bound (exhaustive)."""
    m = coord_bound
    points = []
    units = (1, -1)
    sign_combos = [(a3, a4, a5, a6, a7)
                   for a3 in units for a4 in units for a5 in units
                   for a6 in units for a7 in units]
    for a3, a4, a5, a6, a7 in sign_combos:
        c = a3 * a4 * a4 * a5 ** 3 * a7
        for a2 in range(-m, m + 1):
            for a8 in range(-m, m + 1):
                rest = -(a2 * a8 + c)
                # a1 * a9 = rest with both factors bounded
                for a1 in range(-m, m + 1):
                    if a1 == 0:
                        if rest == 0:
                            for a9 in range(-m, m + 1):
                                points.append(validate(
                                    (0, a2, a3, a4, a5, a6, a7, a8, a9)))
                        continue
                    if rest % a1 != 0:
                        continue
                    a9 = rest // a1
                    if abs(a9) <= m:
                        points.append(validate(
                            (a1, a2, a3, a4, a5, a6, a7, a8, a9)))
    return points


def fibers_over_points(bound):
    """Group normalized torsor points of height <= bound by surface image."""
    fibers = {}
    for norm in enumerate_normalized(bound):
        image = map_to_surface(norm.point)
        fibers.setdefault(image, []).append(norm)
    return fibers


def write_tuple_stream(points, stream):
    for norm in points:
        stream.write(str(norm.point) + "\n")
