"""Picard lattice bookkeeping for the resolved quartic del Pezzo surface.

The surface is a sequence of five blow-ups of the plane, so its Picard
group is Z^6 with basis (l0, ..., l5): l0 the pullback of a line class,
l1..l5 the exceptional classes.  The nine Cox-ring generators a1..a9
carry the degrees tabulated below; the boundary components A3..A8 form a
second basis, and both coordinate systems are kept in exact sync.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange
from .geometry._intlinalg import mat_vec, solve_square

#: deg(a_i) in the basis (l0, .., l5), for i = 1..9.
L_DEGREES = {
    1: (0, 0, 0, 0, 0, 1),      # l5
    2: (0, 0, 0, 0, 1, 0),      # l4
    3: (0, 1, -1, 0, 0, 0),     # l1 - l2
    4: (0, 0, 1, -1, 0, 0),     # l2 - l3
    5: (0, 0, 0, 1, 0, 0),      # l3
    6: (1, -1, 0, 0, -1, -1),   # l0 - l1 - l4 - l5
    7: (1, -1, -1, -1, 0, 0),   # l0 - l1 - l2 - l3
    8: (1, 0, 0, 0, -1, 0),     # l0 - l4
    9: (1, 0, 0, 0, 0, -1),     # l0 - l5
}

#: The boundary basis ([A3], ..., [A8]); columns are l-coordinates.
_A_BASIS = [L_DEGREES[i] for i in (3, 4, 5, 6, 7, 8)]

#: log anticanonical class -K - D = l0.
LOG_ANTICANONICAL_L = (1, 0, 0, 0, 0, 0)


def _a_to_l_matrix():
    # column j = l-coordinates of the j-th boundary basis vector
    return [[_A_BASIS[j][i] for j in range(6)] for i in range(6)]


_M = _a_to_l_matrix()


def _l_to_a(vec_l):
    sol = solve_square(_M, vec_l)
    assert sol is not None, "boundary classes must form a basis"
    out = []
    for x in sol:
        frac = Fraction(x)
        assert frac.denominator == 1, "base change must stay integral"
        out.append(int(frac))
    return tuple(out)


def _a_to_l(vec_a):
    return tuple(int(x) for x in mat_vec(_M, vec_a))


@dataclass(frozen=True)
class DivisorClass:
    """A Picard class in both coordinate systems, kept consistent."""

    coords_l: tuple
    coords_A: tuple

    @staticmethod
    def from_l(coords_l):
        coords_l = tuple(int(x) for x in coords_l)
        return DivisorClass(coords_l, _l_to_a(coords_l))

    @staticmethod
    def from_A(coords_A):
        coords_A = tuple(int(x) for x in coords_A)
        return DivisorClass(_a_to_l(coords_A), coords_A)

    def __add__(self, other):
        return DivisorClass.from_l(tuple(a + b for a, b in zip(self.coords_l, other.coords_l)))

    def __mul__(self, k):
        return DivisorClass.from_l(tuple(k * a for a in self.coords_l))

    __rmul__ = __mul__


def generator_degree(i):
    """Degree of the Cox generator a_i, i = 1..9, in both bases."""
    if not 1 <= i <= 9:
        raise IndexOutOfRange(f"generator index {i} not in 1..9")
    return DivisorClass.from_l(L_DEGREES[i])


def torsor_monomial_degrees():
    """Degrees of the three torsor-equation monomials a1*a9, a2*a8, a3*a4^2*a5^3*a7.

    All three share the log anticanonical degree l0.
    """
    d = {i: generator_degree(i) for i in range(1, 10)}
    return (
        d[1] + d[9],
        d[2] + d[8],
        d[3] + 2 * d[4] + 3 * d[5] + d[7],
    )
