"""Dimension-level checks on the auxiliary geometry of the degeneration.

* the circle bundle ``T`` over ``I2`` along which the two components are glued,
* the small-resolution blow-up of ``V_{d2}`` along ``I3``,
* Euler characteristics of the normal-crossing union ``V_{d1} u V~_{d2}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import CheckReport, prim_above, prim_below
from .errors import DimensionError
from .hodge import EMPTY, EmptyVariety, HodgeDiamond, WeightGradedMHS, tate_twist


@dataclass(frozen=True)
class CircleBundleCohomology:
    base: HodgeDiamond
    n: int
    degrees: tuple[WeightGradedMHS, ...]  # H^0(T) .. H^{2n-1}(T)

    def betti(self, k: int) -> int:
        return self.degrees[k].total if 0 <= k < len(self.degrees) else 0

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.betti(k) for k in range(len(self.degrees)))


def circle_bundle_cohomology(i2: HodgeDiamond, n: int) -> CircleBundleCohomology:
    """Mixed Hodge structures on ``H^k(T)`` for the unit normal bundle ``T`` of ``I2``.

    Because the Euler class is ample, the Gysin sequence splits into the
    cokernel of the Lefschetz operator (weight k) below the middle and its
    twisted kernel (weight k+1) above.
    """
    if i2.dim != n - 1:
        raise DimensionError(f"base has dimension {i2.dim}, expected {n - 1}")
    degrees = []
    for k in range(2 * n):
        if k <= n - 1:
            mhs = WeightGradedMHS(k, ((k, prim_below(i2, k)),))
        else:
            mhs = WeightGradedMHS(k, ((k + 1, tate_twist(prim_above(i2, k - 1), 1)),))
        degrees.append(mhs)
    return CircleBundleCohomology(i2, n, tuple(degrees))


def blowup_correction(base: HodgeDiamond, center: HodgeDiamond | EmptyVariety = EMPTY) -> HodgeDiamond:
    """Hodge diamond of ``base`` blown up along a codimension-two ``center``."""
    if isinstance(center, EmptyVariety):
        return base
    if center.dim != base.dim - 2:
        raise DimensionError(f"center of dimension {center.dim} in a base of dimension {base.dim}")
    return HodgeDiamond(base.dim, base.numbers + tate_twist(center.numbers, 1))


def union_euler_check(
    v1: HodgeDiamond,
    v2_tilde: HodgeDiamond,
    i2: HodgeDiamond,
    vd: HodgeDiamond,
) -> CheckReport:
    """Mayer-Vietoris versus gluing for ``chi(V_{d1} u V~_{d2})``.

    ``V_d`` is two manifolds with boundary glued along ``T`` and ``chi(T) = 0``,
    so ``chi(V_d) = chi(V_{d1}) + chi(V~_{d2}) - 2 chi(I2)``; Mayer-Vietoris for
    the union gives ``chi(V_{d1}) + chi(V~_{d2}) - chi(I2)``.
    """
    if not (v1.dim == v2_tilde.dim == i2.dim + 1 == vd.dim):
        raise DimensionError("inconsistent dimensions for the degeneration pieces")
    mayer_vietoris = v1.euler_characteristic() + v2_tilde.euler_characteristic() - i2.euler_characteristic()
    gluing = vd.euler_characteristic() + i2.euler_characteristic()
    report = CheckReport("union-euler", f"chi(union) for dim {vd.dim}")
    report.details = {"mayer_vietoris": mayer_vietoris, "nearby_fiber": gluing}
    if mayer_vietoris != gluing:
        report.mismatches.append(f"chi(V1)+chi(V2~)-chi(I2) = {mayer_vietoris} but chi(Vd)+chi(I2) = {gluing}")
    return report
