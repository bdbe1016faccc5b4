"""Classification of cocompact planar group presentations by signature.

A signature records orientability, genus, the orders of the cone
generators, and the number of boundary components of the presentation.
For a closed base the exact Euler-characteristic factor

    orientable:      2 - 2g - sum(1 - 1/alpha_i)
    non-orientable:  2 - g  - sum(1 - 1/alpha_i)

decides everything: positive means a finite group (named explicitly),
zero means one of the seven plane crystallographic groups, negative means
a hyperbolic group.  With boundary the group degenerates to a free product
of cyclic groups, finite only when at most one finite factor survives.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .elements import GroupId

__all__ = [
    "Signature",
    "Kind",
    "FiniteName",
    "Classification",
    "euler_factor",
    "classify",
    "EUCLIDEAN_SIGNATURES",
]


@dataclass(frozen=True)
class Signature:
    """(orientability, genus, cone orders, boundary count) of a presentation.

    Cone orders are kept as a sorted tuple, so signatures differing only by
    the order of the alphas compare equal.  A non-orientable signature needs
    genus >= 1 (there is no crosscap-free non-orientable base).
    """

    orientable: bool
    genus: int
    cone_orders: tuple[int, ...] = ()
    boundary: int = 0

    def __post_init__(self) -> None:
        orders = tuple(sorted(self.cone_orders))
        object.__setattr__(self, "cone_orders", orders)
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if not self.orientable and self.genus == 0:
            raise ValueError("a non-orientable signature needs genus >= 1")
        if self.boundary < 0:
            raise ValueError("boundary count must be nonnegative")
        for alpha in orders:
            if not isinstance(alpha, int) or alpha < 2:
                raise ValueError(f"cone orders must be integers >= 2, got {alpha!r}")


def euler_factor(sig: Signature) -> Fraction:
    """Exact Euler-characteristic factor of a closed-base signature."""
    if sig.boundary:
        raise ValueError("Euler factor is defined only for signatures without boundary")
    base = 2 - 2 * sig.genus if sig.orientable else 2 - sig.genus
    return Fraction(base) - sum(1 - Fraction(1, a) for a in sig.cone_orders)


class Kind(enum.Enum):
    FINITE = "Finite"
    EUCLIDEAN = "Euclidean"
    HYPERBOLIC = "Hyperbolic"
    FREE_PRODUCT_INFINITE = "FreeProductInfinite"


@dataclass(frozen=True)
class FiniteName:
    """Name of a finite quotient: a family plus the group order where the
    family alone does not pin it down."""

    family: str
    order: int | None = None

    def __str__(self) -> str:
        if self.order is None:
            return self.family
        return f"{self.family}({self.order})"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    chi_factor: Fraction | None
    finite_name: FiniteName | None = None
    euclidean_group: GroupId | None = None

    def describe(self) -> str:
        if self.kind is Kind.FINITE:
            return f"Finite: {self.finite_name}"
        if self.kind is Kind.EUCLIDEAN:
            return f"Euclidean: {self.euclidean_group.name}"
        return self.kind.value


EUCLIDEAN_SIGNATURES: dict[tuple[bool, int, tuple[int, ...]], GroupId] = {
    (True, 1, ()): GroupId.G0,
    (False, 2, ()): GroupId.G1,
    (True, 0, (2, 2, 2, 2)): GroupId.G2,
    (True, 0, (3, 3, 3)): GroupId.G3,
    (True, 0, (2, 4, 4)): GroupId.G4,
    (True, 0, (2, 3, 6)): GroupId.G5,
    (False, 1, (2, 2)): GroupId.G6,
}


def _finite_name(sig: Signature) -> FiniteName:
    orders = sig.cone_orders
    q = len(orders)
    if sig.orientable:
        # genus 0 is forced by positivity
        if q <= 1:
            # with q = 1 the surface relation kills the lone cone generator
            return FiniteName("Cyclic", 1)
        if q == 2:
            return FiniteName("Cyclic", math.gcd(orders[0], orders[1]))
        if orders[:2] == (2, 2):
            return FiniteName("Dihedral", 2 * orders[2])
        if orders == (2, 3, 3):
            return FiniteName("Tetrahedral")
        if orders == (2, 3, 4):
            return FiniteName("Octahedral")
        return FiniteName("Icosahedral")
    # non-orientable positive curvature forces genus 1 and q <= 1
    if q == 0:
        return FiniteName("Cyclic", 2)
    if orders[0] == 2:
        return FiniteName("Z4")
    return FiniteName("Cyclic", 2 * orders[0])


def classify(sig: Signature) -> Classification:
    """Finite / euclidean / hyperbolic / free-product trichotomy, with the
    finite name or the euclidean group identified."""
    if sig.boundary > 0:
        # One boundary generator is eliminated by the surface relation; the
        # rest of the presentation falls apart into a free product of
        # (2g or g) + (boundary - 1) infinite cyclic factors and one finite
        # cyclic factor per cone order.
        infinite = (2 * sig.genus if sig.orientable else sig.genus) + sig.boundary - 1
        finite = len(sig.cone_orders)
        if infinite == 0 and finite == 0:
            return Classification(Kind.FINITE, None, FiniteName("Cyclic", 1))
        if infinite == 0 and finite == 1:
            return Classification(Kind.FINITE, None, FiniteName("Cyclic", sig.cone_orders[0]))
        return Classification(Kind.FREE_PRODUCT_INFINITE, None)
    chi = euler_factor(sig)
    if chi > 0:
        return Classification(Kind.FINITE, chi, _finite_name(sig))
    if chi == 0:
        key = (sig.orientable, sig.genus, sig.cone_orders)
        group = EUCLIDEAN_SIGNATURES.get(key)
        if group is None:
            raise ValueError(f"no euclidean group for flat signature {sig!r}")
        return Classification(Kind.EUCLIDEAN, chi, euclidean_group=group)
    return Classification(Kind.HYPERBOLIC, chi)
