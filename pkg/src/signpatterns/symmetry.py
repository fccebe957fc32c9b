"""The Z2 x Z2 action on couples: coefficient reversal and sign mirroring.

revert corresponds to P(x) |-> x^d P(1/x) / P(0)  (keeps (pos, neg));
mirror corresponds to P(x) |-> (-1)^d P(-x)       (swaps pos and neg).

revert normalizes by the new leading sign (the sign of the old constant
term), which is what the x^d P(1/x)/P(0) correspondence forces; with the
leading-+ convention this is the only reading that keeps patterns valid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .patterns import AdmissiblePair, Couple, SignPattern
from .polynomials import Polynomial


class ZeroConstantTerm(Exception):
    """revert of a certificate is undefined when P(0) = 0."""


def revert(pattern: SignPattern) -> SignPattern:
    rev = list(reversed(pattern.signs))
    lead = rev[0]
    return SignPattern(tuple(lead * s for s in rev))


def mirror(pattern: SignPattern) -> SignPattern:
    d = pattern.degree
    # flip exactly the entries at odd powers when d is even, even powers when
    # d is odd; entry i corresponds to the power d - i
    flip_parity = 1 if d % 2 == 0 else 0
    return SignPattern(tuple(
        -s if (d - i) % 2 == flip_parity else s
        for i, s in enumerate(pattern.signs)
    ))


def revert_couple(couple: Couple) -> Couple:
    return Couple(revert(couple.pattern), couple.pair)


def mirror_couple(couple: Couple) -> Couple:
    return Couple(mirror(couple.pattern), couple.pair.swapped())


@dataclass(frozen=True)
class Orbit:
    """Closure of a couple under both generators; size 1, 2, or 4."""

    couples: frozenset[Couple]
    canonical: Couple

    @property
    def size(self) -> int:
        return len(self.couples)


def orbit(couple: Couple) -> Orbit:
    members = {couple}
    frontier = [couple]
    while frontier:
        c = frontier.pop()
        for image in (revert_couple(c), mirror_couple(c)):
            if image not in members:
                members.add(image)
                frontier.append(image)
    assert len(members) in (1, 2, 4)
    canonical = min(members, key=Couple.key)
    return Orbit(frozenset(members), canonical)


def canonical_couple(couple: Couple) -> Couple:
    return orbit(couple).canonical


def revert_polynomial(poly: Polynomial) -> Polynomial:
    """x^d P(1/x) / P(0); monic when P is monic with P(0) != 0."""
    if poly.is_zero or poly.coeff(0) == 0:
        raise ZeroConstantTerm("revert undefined: constant term vanishes")
    c0 = poly.coeff(0)
    return Polynomial(tuple(poly.coeff(poly.degree - i) / c0 for i in range(poly.degree + 1)))


def mirror_polynomial(poly: Polynomial) -> Polynomial:
    """(-1)^d P(-x); monic when P is monic."""
    d = poly.degree
    sign = -1 if d % 2 else 1
    return Polynomial(tuple(sign * (-1) ** i * poly.coeff(i) for i in range(d + 1)))
