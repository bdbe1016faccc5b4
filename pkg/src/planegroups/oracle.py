"""Brute-force verification oracles.

Everything the closed-form machinery claims can be cross-checked here:
``ball`` enumerates a coordinate box of normal forms, ``brute_centralizer``
and ``verify_centralizer`` compare commutation against the claimed
centralizer descriptor, and ``affine_image`` realizes each group faithfully
by exact-rational affine isometries of the plane (an independent model of
the same product, so normal-form arithmetic can be validated against plain
map composition).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .centralizers import centralizer, commutes
from .elements import GroupElement, GroupId, Mat, mat_inv, mat_vec

__all__ = [
    "AffineIsometry",
    "VerificationReport",
    "affine_image",
    "ball",
    "brute_centralizer",
    "verify_centralizer",
    "check_faithful",
]

QVec = tuple[Fraction, Fraction]

_HALF = Fraction(1, 2)
_Q0 = Fraction(0)

# Translation offsets of the point-part representatives.  t1 and t2 act as
# the unit translations; glides shift by half a period along their axis, so
# squaring them lands back in the lattice.
_POINT_OFFSETS: dict[GroupId, tuple[QVec, ...]] = {
    GroupId.G0: ((_Q0, _Q0),),
    GroupId.G1: ((_Q0, _Q0), (_HALF, _Q0)),
    GroupId.G2: ((_Q0, _Q0),) * 2,
    GroupId.G3: ((_Q0, _Q0),) * 3,
    GroupId.G4: ((_Q0, _Q0),) * 4,
    GroupId.G5: ((_Q0, _Q0),) * 6,
    GroupId.G6: ((_Q0, _Q0), (_HALF, _Q0), (_Q0, _HALF), (_HALF, -_HALF)),
}


@dataclass(frozen=True)
class AffineIsometry:
    """x -> linear @ x + offset with an integer linear part and exact
    rational offset."""

    linear: Mat
    offset: QVec

    @classmethod
    def identity_map(cls) -> "AffineIsometry":
        return cls(((1, 0), (0, 1)), (_Q0, _Q0))

    def apply(self, point: QVec) -> QVec:
        m = self.linear
        return (
            m[0][0] * point[0] + m[0][1] * point[1] + self.offset[0],
            m[1][0] * point[0] + m[1][1] * point[1] + self.offset[1],
        )

    def compose(self, other: "AffineIsometry") -> "AffineIsometry":
        """self after other."""
        m, o = self.linear, other.linear
        shifted = self.apply(other.offset)
        return AffineIsometry(
            (
                (m[0][0] * o[0][0] + m[0][1] * o[1][0], m[0][0] * o[0][1] + m[0][1] * o[1][1]),
                (m[1][0] * o[0][0] + m[1][1] * o[1][0], m[1][0] * o[0][1] + m[1][1] * o[1][1]),
            ),
            shifted,
        )

    def __mul__(self, other: "AffineIsometry") -> "AffineIsometry":
        if not isinstance(other, AffineIsometry):
            return NotImplemented
        return self.compose(other)

    def inverse(self) -> "AffineIsometry":
        mi = mat_inv(self.linear)
        off = mat_vec(mi, self.offset)  # type: ignore[arg-type]
        return AffineIsometry(mi, (-off[0], -off[1]))

    def is_identity(self) -> bool:
        return self.linear == ((1, 0), (0, 1)) and self.offset == (_Q0, _Q0)


def affine_image(x: GroupElement) -> AffineIsometry:
    """The isometry realizing x; a faithful homomorphism on each group."""
    base = _POINT_OFFSETS[x.group][x.w]
    return AffineIsometry(
        x.group.twist.action[x.w], (base[0] + x.v[0], base[1] + x.v[1])
    )


def ball(group: GroupId, radius: int) -> Iterator[GroupElement]:
    """All normal forms with |n1|, |n2| <= radius, every point part,
    in lexicographic (n1, n2, point index) order."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    size = group.point_order
    for n1 in range(-radius, radius + 1):
        for n2 in range(-radius, radius + 1):
            for w in range(size):
                yield GroupElement(group, (n1, n2), w)


def brute_centralizer(u: GroupElement, radius: int) -> set[GroupElement]:
    """Every element of the coordinate ball commuting with u."""
    return {x for x in ball(u.group, radius) if commutes(u, x)}


@dataclass(frozen=True)
class VerificationReport:
    group: GroupId
    subject: GroupElement
    box_radius: int
    agree: bool
    witnesses: tuple[GroupElement, ...]


_WITNESS_CAP = 16


def verify_centralizer(u: GroupElement, radius: int) -> VerificationReport:
    """Compare brute-force commutation against the closed-form descriptor
    over the ball; disagreeing elements are reported (at most 16)."""
    desc = centralizer(u)
    witnesses: list[GroupElement] = []
    agree = True
    for x in ball(u.group, radius):
        if commutes(u, x) != desc.contains(x):
            agree = False
            if len(witnesses) < _WITNESS_CAP:
                witnesses.append(x)
    return VerificationReport(u.group, u, radius, agree, tuple(witnesses))


def check_faithful(group: GroupId, radius: int) -> bool:
    """True when affine_image is injective on the ball, i.e. distinct normal
    forms give distinct isometries (a normal-form uniqueness certificate)."""
    seen: dict[AffineIsometry, GroupElement] = {}
    for x in ball(group, radius):
        img = affine_image(x)
        if img in seen:
            return False
        seen[img] = x
    return True
