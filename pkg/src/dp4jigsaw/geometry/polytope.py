"""Exact rational polytopes: vertex enumeration, volumes, slices, cones.

All polytopes are closed and bounded; inequalities are normalized to
primitive integer rows <c, x> + b >= 0.  Two independent vertex-enumeration
routes are available: a brute-force active-set search for small instances
(dimension <= 6 and at most 16 inequalities) and incremental double
description on the homogenization otherwise.  Volumes come from a
determinant triangulation fanned from a base vertex over recursively
triangulated facets.

A polytope that is nonempty but not full-dimensional has volume exactly 0;
that is a meaningful output here, not an error.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from ..errors import DimensionMismatch, EmptyGeneratorList, UnboundedInput
from . import _simplex
from ._dd import dd_cone
from ._intlinalg import (affine_rank, clear_denominators, frac_det, int_rank,
                         primitive, solve_square)

BRUTE_MAX_DIM = 6
BRUTE_MAX_ROWS = 16


@dataclass(frozen=True)
class AffineForm:
    """The halfspace <coeffs, x> + const >= 0, stored with integer entries."""

    coeffs: tuple
    const: int

    @staticmethod
    def make(coeffs, const):
        """Normalize rational input to a primitive integer row."""
        row = clear_denominators(list(coeffs) + [const])
        return AffineForm(tuple(row[:-1]), row[-1])

    @staticmethod
    def ge(coeffs, rhs=0):
        """<coeffs, x> >= rhs"""
        return AffineForm.make(coeffs, -Fraction(rhs))

    @staticmethod
    def le(coeffs, rhs=0):
        """<coeffs, x> <= rhs"""
        return AffineForm.make([-Fraction(c) for c in coeffs], Fraction(rhs))

    def evaluate(self, point):
        return sum(Fraction(c) * Fraction(x) for c, x in zip(self.coeffs, point)) + self.const

    def as_row(self):
        return self.coeffs + (self.const,)


@dataclass(frozen=True)
class VPolytope:
    """Irredundant vertex list of a bounded polytope."""

    vertices: tuple


@dataclass(frozen=True)
class RationalCone:
    """A cone given by primitive integer generators."""

    generators: tuple

    @staticmethod
    def make(generators):
        gens = []
        for g in generators:
            vec = clear_denominators(g)
            if not any(vec):
                raise ValueError("cone generators must be nonzero")
            gens.append(vec)
        return RationalCone(tuple(gens))


# ---------------------------------------------------------------------------
# Vertex enumeration
# ---------------------------------------------------------------------------

def _rows_of(forms):
    return [f.as_row() for f in forms]


def _feasible_rows(dim, rows):
    """Exact LP feasibility of {x : <c,x> + b >= 0 for all rows}."""
    if not rows:
        return True
    # A(xp - xm) - s = -b with xp, xm, s >= 0.
    m = len(rows)
    a_matrix = []
    for i, row in enumerate(rows):
        c = row[:dim]
        slack = [0] * m
        slack[i] = -1
        a_matrix.append(list(c) + [-x for x in c] + slack)
    b_vector = [-row[dim] for row in rows]
    ok, _ = _simplex.feasible(a_matrix, b_vector)
    return ok


def _has_recession(dim, rows):
    """Does {r : <c, r> >= 0 for all rows} contain a nonzero vector?"""
    hom = [row[:dim] for row in rows if any(row[:dim])]
    if not hom:
        return dim > 0
    m = len(hom)
    for j in range(dim):
        for sigma in (1, -1):
            a_matrix = []
            for i, c in enumerate(hom):
                slack = [0] * m
                slack[i] = -1
                a_matrix.append(list(c) + [-x for x in c] + slack)
            b_vector = [0] * m
            pin = [0] * dim
            pin[j] = 1
            a_matrix.append(pin + [-x for x in pin] + [0] * m)
            b_vector.append(sigma)
            ok, _ = _simplex.feasible(a_matrix, b_vector)
            if ok:
                return True
    return False


def _vertices_brute(dim, rows):
    """Active-set search: solve every d-subset of rows, keep feasible points."""
    coeff = [row[:dim] for row in rows]
    const = [row[dim] for row in rows]
    found = set()
    for subset in itertools.combinations(range(len(rows)), dim):
        sol = solve_square([coeff[i] for i in subset], [-const[i] for i in subset])
        if sol is None:
            continue
        if all(sum(c * x for c, x in zip(coeff[i], sol)) + const[i] >= 0
               for i in range(len(rows))):
            found.add(sol)
    return found


def _vertices_dd(dim, rows):
    """Vertices via double description of the homogenization cone.

    Returns (vertex set, recession flag).  An empty polytope yields
    (empty set, False) regardless of homogeneous recession directions.
    """
    t_row = tuple([0] * dim + [1])
    hom_rows = [t_row] + [tuple(row) for row in rows]
    lineality, rays = dd_cone(dim + 1, hom_rows)
    vertices = set()
    recession = bool(lineality)
    for ray in rays:
        t = ray[dim]
        if t > 0:
            vertices.add(tuple(Fraction(ray[j], t) for j in range(dim)))
        else:
            recession = True
    if not vertices:
        return set(), False
    # Certify extremeness: a vertex must have d active rows of full rank.
    coeff = [row[:dim] for row in rows]
    const = [row[dim] for row in rows]
    certified = set()
    for v in vertices:
        active = [coeff[i] for i in range(len(rows))
                  if sum(c * x for c, x in zip(coeff[i], v)) + const[i] == 0]
        if active and int_rank([clear_denominators(r) for r in active]) == dim:
            certified.add(v)
    return certified, recession


def _enumerate(dim, rows):
    """Sorted vertex tuple of {x : rows}, raising UnboundedInput."""
    if dim == 0:
        return ((),) if all(row[0] >= 0 for row in rows) else ()
    for row in rows:
        if not any(row[:dim]) and row[dim] < 0:
            return ()
    rows = [row for row in rows if any(row[:dim])]
    if len(rows) <= BRUTE_MAX_ROWS and dim <= BRUTE_MAX_DIM:
        if not _feasible_rows(dim, rows):
            return ()
        if _has_recession(dim, rows):
            raise UnboundedInput(f"recession direction exists (dim={dim})")
        verts = _vertices_brute(dim, rows)
    else:
        verts, recession = _vertices_dd(dim, rows)
        if not verts:
            return ()
        if recession:
            raise UnboundedInput(f"recession direction exists (dim={dim})")
    return tuple(sorted(verts))


class HPolytope:
    """Bounded intersection of rational halfspaces.

    Construction normalizes and deduplicates the inequality rows, then runs
    vertex enumeration; unbounded input is rejected right away.  Instances
    are immutable and freely shareable.
    """

    __slots__ = ("dimension", "inequalities", "_vertices")

    def __init__(self, dimension, inequalities):
        if dimension < 0:
            raise DimensionMismatch("ambient dimension must be >= 0")
        forms = []
        seen = set()
        for ineq in inequalities:
            form = ineq if isinstance(ineq, AffineForm) else AffineForm.make(ineq[:-1], ineq[-1])
            if len(form.coeffs) != dimension:
                raise DimensionMismatch(
                    f"inequality length {len(form.coeffs)} != dimension {dimension}")
            if not any(form.coeffs) and form.const >= 0:
                continue  # trivially true
            if form.as_row() in seen:
                continue
            seen.add(form.as_row())
            forms.append(form)
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "inequalities", tuple(forms))
        object.__setattr__(self, "_vertices",
                           _enumerate(dimension, _rows_of(forms)))

    def __setattr__(self, name, value):
        raise AttributeError("HPolytope is immutable")

    def __repr__(self):
        return (f"HPolytope(dim={self.dimension}, rows={len(self.inequalities)}, "
                f"vertices={len(self._vertices)})")

    @property
    def vertices(self):
        return self._vertices

    def is_empty(self):
        return not self._vertices

    def contains(self, point, strict=False):
        if len(point) != self.dimension:
            raise DimensionMismatch("point length != dimension")
        if strict:
            return all(f.evaluate(point) > 0 for f in self.inequalities)
        return all(f.evaluate(point) >= 0 for f in self.inequalities)

    def slice(self, fixed):
        """Substitute fixed coordinate values; polytope in the remaining coords."""
        indices = [i for i, _ in fixed]
        if len(set(indices)) != len(indices):
            raise DimensionMismatch("fixed indices must be distinct")
        if any(i < 0 or i >= self.dimension for i in indices):
            raise DimensionMismatch("fixed index outside ambient dimension")
        values = {i: Fraction(v) for i, v in fixed}
        keep = [i for i in range(self.dimension) if i not in values]
        new_rows = []
        for form in self.inequalities:
            coeffs = [form.coeffs[i] for i in keep]
            const = form.const + sum(form.coeffs[i] * values[i] for i in values)
            new_rows.append(AffineForm.make(coeffs, const))
        return HPolytope(len(keep), new_rows)

    def transform(self, matrix):
        """Pull back along x = M y: the polytope {y : M y in self}."""
        ncols = len(matrix[0])
        new_rows = []
        for form in self.inequalities:
            coeffs = [sum(form.coeffs[i] * matrix[i][j] for i in range(self.dimension))
                      for j in range(ncols)]
            new_rows.append(AffineForm.make(coeffs, form.const))
        return HPolytope(ncols, new_rows)

    def volume(self):
        return _volume(self.dimension, self.inequalities, self._vertices)


# ---------------------------------------------------------------------------
# Volume by recursive facet triangulation
# ---------------------------------------------------------------------------

def _triangulate_face(indices, face_dim, tight_sets, coords, memo):
    """Triangulate the face with the given vertex-index set into simplices."""
    key = indices
    cached = memo.get(key)
    if cached is not None:
        return cached
    if face_dim == 0:
        result = [tuple(indices)]
        memo[key] = result
        return result
    base = min(indices)
    subfaces = set()
    for tight in tight_sets:
        sub = indices & tight
        if sub == indices or not sub:
            continue
        if affine_rank([coords[i] for i in sub]) == face_dim - 1:
            subfaces.add(sub)
    result = []
    for sub in sorted(subfaces, key=sorted):
        if base in sub:
            continue
        for simplex in _triangulate_face(sub, face_dim - 1, tight_sets, coords, memo):
            result.append(simplex + (base,))
    memo[key] = result
    return result


def _volume(dim, forms, vertices):
    if dim == 0:
        return Fraction(1) if vertices else Fraction(0)
    if len(vertices) <= dim:
        return Fraction(0)
    coords = list(vertices)
    if affine_rank(coords) < dim:
        return Fraction(0)
    tight_sets = []
    for form in forms:
        tight = frozenset(i for i, v in enumerate(coords) if form.evaluate(v) == 0)
        if tight:
            tight_sets.append(tight)
    all_indices = frozenset(range(len(coords)))
    base = 0  # vertices are sorted, so this is deterministic
    memo = {}
    total = Fraction(0)
    facets = set()
    for tight in tight_sets:
        if tight != all_indices and affine_rank([coords[i] for i in tight]) == dim - 1:
            facets.add(tight)
    basept = coords[base]
    for facet in sorted(facets, key=sorted):
        if base in facet:
            continue
        for simplex in _triangulate_face(facet, dim - 1, tight_sets, coords, memo):
            matrix = [[coords[i][j] - basept[j] for j in range(dim)] for i in simplex]
            total += abs(frac_det(matrix))
    return total / factorial(dim)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def enumerate_vertices(p):
    """Exactly the vertex set of p, as a VPolytope."""
    return VPolytope(p.vertices)


def exact_volume(p):
    """Exact Lebesgue volume of p in its ambient dimension."""
    return p.volume()


def slice_polytope(p, fixed):
    return p.slice(fixed)


def _merged_rows_flat(p1, p2):
    rows = {}
    for form in p1.inequalities + p2.inequalities:
        rows.setdefault(form.as_row(), form)
    return list(rows.values())


def interiors_disjoint(p1, p2):
    """True iff the intersection polytope has exact volume 0.

    Volume 0 is equivalent to the intersection not being full-dimensional,
    which is what gets tested: opposite rows force the intersection into a
    hyperplane (or empty it) immediately; otherwise the intersection's
    vertex set is enumerated and its affine rank compared with the ambient
    dimension.
    """
    if p1.dimension != p2.dimension:
        raise DimensionMismatch("polytopes live in different dimensions")
    dim = p1.dimension
    forms = _merged_rows_flat(p1, p2)
    # <c,x> in [low, high] per direction c; low >= high kills the interior.
    bounds = {}
    for form in forms:
        coeffs = form.coeffs
        if not any(coeffs):
            if form.const < 0:
                return True  # empty intersection
            continue
        lead = coeffs[next(i for i, c in enumerate(coeffs) if c)]
        if lead > 0:
            entry = bounds.setdefault(coeffs, [None, None])
            low = -form.const
            if entry[0] is None or low > entry[0]:
                entry[0] = low
        else:
            canon = tuple(-c for c in coeffs)
            entry = bounds.setdefault(canon, [None, None])
            high = form.const
            if entry[1] is None or high < entry[1]:
                entry[1] = high
    for low, high in bounds.values():
        if low is not None and high is not None and low >= high:
            return True  # empty (>) or confined to a hyperplane (=)
    rows = [f.as_row() for f in forms]
    vertices = _enumerate(dim, rows)
    if not vertices:
        return True
    return affine_rank(list(vertices)) < dim


@dataclass(frozen=True)
class ConeLineDiagnostic:
    """Outcome of the pointedness test for a rational cone.

    Exactly one of the two fields is set: a nonnegative nontrivial integer
    combination of the generators summing to zero (the cone contains a
    line), or an integer functional strictly positive on every generator
    (the cone is pointed).
    """

    line_combination: tuple
    separating_functional: tuple

    @property
    def contains_line(self):
        return self.line_combination is not None


def cone_contains_line(cone):
    """Decide pointedness of a rational cone by exact linear feasibility."""
    gens = cone.generators
    if not gens:
        raise EmptyGeneratorList("cone has no generators")
    dim = len(gens[0])
    m = len(gens)
    # Feasibility of sum(lam_i g_i) = 0, sum(lam_i) = 1, lam >= 0.
    a_matrix = [[gens[i][j] for i in range(m)] for j in range(dim)]
    a_matrix.append([1] * m)
    b_vector = [0] * dim + [1]
    ok, cert = _simplex.feasible(a_matrix, b_vector)
    if ok:
        lam = clear_denominators(cert[:m])
        assert all(x >= 0 for x in lam) and any(lam)
        assert all(sum(lam[i] * gens[i][j] for i in range(m)) == 0 for j in range(dim))
        return ConeLineDiagnostic(tuple(lam), None)
    # Farkas (u, t): u.g_i + t <= 0 for all i, t > 0; so -u separates.
    u = cert[:dim]
    w = clear_denominators([-x for x in u])
    assert all(sum(w[j] * g[j] for j in range(dim)) > 0 for g in gens)
    return ConeLineDiagnostic(None, tuple(w))


def strictly_feasible(p):
    """Exact full-dimensionality oracle: does p have an interior point?

    Maximizes the margin t subject to <c,x> + b >= t per row and t <= 1;
    the polytope is full-dimensional iff the optimum is positive.
    """
    dim = p.dimension
    rows = _rows_of(p.inequalities)
    if not rows:
        return True
    m = len(rows)
    ncols = 2 * dim + 2 + m + 1
    a_matrix = []
    b_vector = []
    for i, row in enumerate(rows):
        c = list(row[:dim])
        line = c + [-x for x in c] + [-1, 1] + [0] * (m + 1)
        line[2 * dim + 2 + i] = -1
        a_matrix.append(line)
        b_vector.append(-row[dim])
    tline = [0] * (2 * dim) + [1, -1] + [0] * m + [1]
    a_matrix.append(tline)
    b_vector.append(1)
    cost = [0] * ncols
    cost[2 * dim] = -1
    cost[2 * dim + 1] = 1
    result = _simplex.solve_lp(cost, a_matrix, b_vector)
    assert result.status == _simplex.OPTIMAL
    return -result.objective > 0


# ---------------------------------------------------------------------------
# Constructions used by tests and demos
# ---------------------------------------------------------------------------

def product_polytope(p1, p2):
    """The Cartesian product, with block-embedded inequality rows."""
    d1, d2 = p1.dimension, p2.dimension
    rows = []
    for form in p1.inequalities:
        rows.append(AffineForm(form.coeffs + (0,) * d2, form.const))
    for form in p2.inequalities:
        rows.append(AffineForm((0,) * d1 + form.coeffs, form.const))
    return HPolytope(d1 + d2, rows)


def box(bounds):
    """Axis-aligned box from [(lo, hi), ...]."""
    dim = len(bounds)
    rows = []
    for i, (lo, hi) in enumerate(bounds):
        e = [0] * dim
        e[i] = 1
        rows.append(AffineForm.ge(e, lo))
        rows.append(AffineForm.le(e, hi))
    return HPolytope(dim, rows)


def standard_simplex(dim, scale=1):
    rows = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        rows.append(AffineForm.ge(e, 0))
    rows.append(AffineForm.le([1] * dim, scale))
    return HPolytope(dim, rows)


def unimodular_image(p, matrix):
    """Image of p under the inverse substitution x = M y (|det M| arbitrary).

    For integer unimodular M this is a volume-preserving reparameterization.
    """
    return p.transform(matrix)


def monte_carlo_volume(p, samples=1_000_000, seed=0):
    """Float hit-rate estimate of the volume; a sanity oracle, not a proof."""
    if p.is_empty():
        return 0.0
    verts = np.array([[float(x) for x in v] for v in p.vertices])
    lo = verts.min(axis=0)
    hi = verts.max(axis=0)
    widths = hi - lo
    if np.any(widths == 0):
        return 0.0
    rng = np.random.RandomState(seed)
    pts = rng.uniform(lo, hi, size=(samples, p.dimension))
    ok = np.ones(samples, dtype=bool)
    for form in p.inequalities:
        vals = pts @ np.array([float(c) for c in form.coeffs]) + float(form.const)
        ok &= vals >= 0
    return float(ok.mean() * np.prod(widths))


def evaluate_forms(p, point):
    """All inequality values at a rational point (diagnostic helper)."""
    return tuple(f.evaluate(point) for f in p.inequalities)
