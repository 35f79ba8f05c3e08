"""Independent reference construction by Gram-Schmidt orthogonalization.

The integral forms built elsewhere in this package all go through the
same bracket arithmetic, so agreement among them would not catch a
systematic error in that arithmetic.  This module builds the same
polynomials along a disjoint route: orthogonalize the monomial basis
with respect to the deformed power-sum pairing, then rescale by the
hook-style product read off the diagram.  Nothing here imports the
determinant or operator machinery.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .partitions import (
    Partition,
    arm_leg_cells,
    extension_key,
    partition,
    partitions_of,
    weight,
)
from .qt import QT_ONE, QT_RAT_ONE, QT_RAT_ZERO, Q, QtRat, T
from .symfunc import SymExpansion, convert_basis


def z_factor(lam: Partition) -> int:
    """Centralizer size of a permutation with cycle type lam."""
    out = 1
    for part in set(lam):
        mult = lam.count(part)
        out *= part**mult * factorial(mult)
    return out


def power_sum_pairing(lam: Partition, mu: Partition) -> QtRat:
    """Deformed pairing of p_lam with p_mu; diagonal in the power sums."""
    if lam != mu:
        return QT_RAT_ZERO
    value = QtRat(z_factor(lam))
    for part in lam:
        value = value * QtRat(QT_ONE - Q**part, QT_ONE - T**part)
    return value


def inner_product(f: SymExpansion, g: SymExpansion) -> QtRat:
    """Deformed scalar product of two expansions of equal weight."""
    if f.weight != g.weight:
        raise ValueError("inner product needs equal weights")
    fp = convert_basis(f, "p")
    gp = convert_basis(g, "p")
    total = QT_RAT_ZERO
    for lam, coeff in fp.terms.items():
        other = gp.coefficient(lam)
        if not other.is_zero():
            total = total + coeff * other * power_sum_pairing(lam, lam)
    return total


@lru_cache(maxsize=None)
def orthogonal_basis(w: int) -> dict[Partition, SymExpansion]:
    """Monic orthogonal family of weight w in the monomial basis.

    Partitions are processed along an order refining dominance, each one
    reduced against all earlier members.  Unitriangularity over the
    monomials makes the result independent of how ties between
    incomparable partitions are broken.
    """
    shapes = sorted(partitions_of(w), key=extension_key)
    basis: dict[Partition, SymExpansion] = {}
    norms: dict[Partition, QtRat] = {}
    for lam in shapes:
        current = SymExpansion.single("m", lam)
        for mu in basis:
            overlap = inner_product(current, basis[mu])
            if not overlap.is_zero():
                current = current + basis[mu] * (-overlap / norms[mu])
        basis[lam] = current
        norms[lam] = inner_product(current, current)
    return basis


def monic_form(lam: Partition) -> SymExpansion:
    """Monic orthogonal polynomial for lam, in the monomial basis."""
    lam = partition(lam)
    return orthogonal_basis(weight(lam))[lam]


def _diagram_scale(lam: Partition) -> QtRat:
    """Product over cells of 1 - q^arm t^(leg+1)."""
    scale = QT_RAT_ONE
    for cell in arm_leg_cells(lam):
        scale = scale * QtRat(QT_ONE - Q**cell.arm * T ** (cell.leg + 1))
    return scale


def integral_form(lam: Partition) -> SymExpansion:
    """Integral form for lam in the monomial basis, via orthogonalization."""
    lam = partition(lam)
    return monic_form(lam) * _diagram_scale(lam)
