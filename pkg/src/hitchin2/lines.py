"""Lines in projective 3-space: Pluecker and Klein coordinates, incidence.

The six Pluecker coordinates of the line through Z and W are the 2x2 minors
p_ij = Z_i W_j - W_i Z_j, subject to the single Grassmann relation
p01*p23 - p02*p13 + p03*p12 = 0.  Klein coordinates are the linear change

    X1 = p01 + p23        X3 = i(p02 + p13)       X5 = p03 + p12
    X2 = i(p01 - p23)     X4 = p02 - p13          X6 = i(p03 - p12)

which diagonalizes the Grassmann form: X1^2 + ... + X6^2 equals four times
the Grassmann expression, identically in the p_ij.

Each X_k, read as an alternating bilinear form in (Z, W), pins a section
q -> eps_k(q) of the incidence bundle: eps_k(q) is a dual point (a plane)
through q, and the k-th Klein coordinate of any join <eps_k(q), p> with an
incident p vanishes.

Everything here is written against generic ring elements: coordinates may
be ``GaussianRational`` scalars or ``SparsePolynomial`` entries, so the
same functions serve both numeric evaluation and symbolic identity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import GaussianRational, I

_HALF = GaussianRational(Fraction(1, 2))
_MINUS_HALF_I = GaussianRational(0, Fraction(-1, 2))

# (i, j) index pairs in the field order p01, p02, p03, p12, p13, p23
PAIR_INDEX = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


class DegenerateLineError(ValueError):
    """Join of proportional points: all Pluecker coordinates vanish."""


@dataclass(frozen=True)
class HomPoint4:
    """Point of P^3 (or its dual) as 4 homogeneous coordinates, not all zero."""

    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 4:
            raise ValueError("HomPoint4 needs exactly 4 coordinates")
        if not any(map(bool, self.coords)):
            raise ValueError("all-zero homogeneous point")

    def projectively_equal(self, other: "HomPoint4") -> bool:
        """Equality up to a global scalar, by vanishing of all 2x2 minors."""
        a, b = self.coords, other.coords
        return all(
            not (a[i] * b[j] - a[j] * b[i]) for i in range(4) for j in range(i + 1, 4)
        )

    def __iter__(self):
        return iter(self.coords)


@dataclass(frozen=True)
class PluckerLine:
    p01: object
    p02: object
    p03: object
    p12: object
    p13: object
    p23: object

    def as_tuple(self) -> tuple:
        return (self.p01, self.p02, self.p03, self.p12, self.p13, self.p23)

    def grassmann(self):
        """The Grassmann form; exactly zero on every actual line."""
        return self.p01 * self.p23 - self.p02 * self.p13 + self.p03 * self.p12


@dataclass(frozen=True)
class KleinVector:
    X1: object
    X2: object
    X3: object
    X4: object
    X5: object
    X6: object

    def as_tuple(self) -> tuple:
        return (self.X1, self.X2, self.X3, self.X4, self.X5, self.X6)

    def sum_of_squares(self):
        x = self.as_tuple()
        out = x[0] * x[0]
        for c in x[1:]:
            out = out + c * c
        return out


def plucker_from_points(Z: HomPoint4, W: HomPoint4) -> PluckerLine:
    """Line spanned by two non-proportional points, as Pluecker coordinates."""
    a, b = Z.coords, W.coords
    minors = tuple(a[i] * b[j] - a[j] * b[i] for i, j in PAIR_INDEX)
    if not any(map(bool, minors)):
        raise DegenerateLineError("points are proportional; they span no line")
    return PluckerLine(*minors)


def join_in_dual(a: HomPoint4, b: HomPoint4) -> PluckerLine:
    """Join of two dual points (planes); the same minor construction."""
    return plucker_from_points(a, b)


def klein_from_plucker(L: PluckerLine) -> KleinVector:
    return KleinVector(
        X1=L.p01 + L.p23,
        X2=I * (L.p01 - L.p23),
        X3=I * (L.p02 + L.p13),
        X4=L.p02 - L.p13,
        X5=L.p03 + L.p12,
        X6=I * (L.p03 - L.p12),
    )


def plucker_from_klein(K: KleinVector) -> PluckerLine:
    """Exact inverse of the Klein table (uses 1/2 and -i/2)."""
    return PluckerLine(
        p01=(K.X1 + _MINUS_HALF_I * K.X2 / _HALF * _HALF) * _HALF
        if False
        else (K.X1 * _HALF + _MINUS_HALF_I * K.X2),
        p02=(K.X4 * _HALF + _MINUS_HALF_I * K.X3),
        p03=(K.X5 * _HALF + _MINUS_HALF_I * K.X6),
        p12=(K.X5 * _HALF - _MINUS_HALF_I * K.X6),
        p13=(-(K.X4 * _HALF) + _MINUS_HALF_I * K.X3),
        p23=(K.X1 * _HALF - _MINUS_HALF_I * K.X2),
    )


_EPSILON_TABLE = {
    1: lambda x, y, z, t: (y, -x, t, -z),
    2: lambda x, y, z, t: (y, -x, -t, z),
    3: lambda x, y, z, t: (z, t, -x, -y),
    4: lambda x, y, z, t: (z, -t, -x, y),
    5: lambda x, y, z, t: (t, z, -y, -x),
    6: lambda x, y, z, t: (t, -z, y, -x),
}


def epsilon_section(i: int, q: HomPoint4) -> HomPoint4:
    """The dual point eps_i(q); a plane through q, linear in q's coordinates."""
    if i not in _EPSILON_TABLE:
        raise ValueError(f"section index {i} not in 1..6")
    return HomPoint4(_EPSILON_TABLE[i](*q.coords))


def incidence_pairing(q: HomPoint4, h: HomPoint4):
    """The pairing sum(q_k * h_k); zero iff the point q lies on the plane h."""
    a, b = q.coords, h.coords
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]


def _coordinate_size(c: GaussianRational) -> Fraction:
    return abs(c.re) + abs(c.im)


def incidence_plane_basis(q: HomPoint4) -> tuple[HomPoint4, HomPoint4, HomPoint4]:
    """Three independent dual points spanning the planes through q.

    Deterministic pivot: drop the coordinate of largest size (|re| + |im|),
    ties to the lowest index.  For each remaining index j the basis plane
    has q_pivot in slot j and -q_j in the pivot slot.  Requires exact
    scalar coordinates (sizes must be comparable).
    """
    coords = [GaussianRational.coerce(c) for c in q.coords]
    sizes = [_coordinate_size(c) for c in coords]
    pivot = 0
    for k in range(1, 4):
        if sizes[k] > sizes[pivot]:
            pivot = k
    basis = []
    for j in range(4):
        if j == pivot:
            continue
        h = [GaussianRational(0)] * 4
        h[j] = coords[pivot]
        h[pivot] = -coords[j]
        basis.append(HomPoint4(tuple(h)))
    return tuple(basis)
