"""Sign patterns, Descartes pairs, and admissible pairs.

A sign pattern is the sequence of coefficient signs of a polynomial with no
vanishing coefficients, read from the leading coefficient down to the constant
term, normalized so the leading sign is +.  Text form: a string over {+,-}
with no separators, e.g. "+-----+++++-".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .polynomials import Polynomial


class ZeroCoefficient(Exception):
    """Sign pattern undefined: some coefficient vanishes."""


class BadPattern(Exception):
    """Malformed sign-pattern input."""


class InadmissiblePair(Exception):
    """(pos, neg) violates Descartes' rule or the parity refinement."""


def sign_changes(signs: Sequence[int]) -> int:
    """Number of adjacent sign changes in a +/-1 sequence."""
    if not signs:
        raise BadPattern("empty sign sequence")
    if any(s not in (1, -1) for s in signs):
        raise BadPattern("signs must be +1 or -1")
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sign_changes_skipping_zeros(values: Sequence) -> int:
    """Sign changes in an arbitrary sequence, skipping zero entries."""
    nz = [v for v in values if v != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if (a > 0) != (b > 0))


@dataclass(frozen=True)
class SignPattern:
    """Sign sequence with leading sign +; index 0 is the leading coefficient."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if not self.signs:
            raise BadPattern("empty pattern")
        if any(s not in (1, -1) for s in self.signs):
            raise BadPattern("pattern entries must be +1 or -1")
        if self.signs[0] != 1:
            raise BadPattern("leading sign must be +")

    @classmethod
    def parse(cls, text: str) -> "SignPattern":
        table = {"+": 1, "-": -1}
        try:
            return cls(tuple(table[ch] for ch in text.strip()))
        except KeyError as exc:
            raise BadPattern(f"invalid pattern character {exc.args[0]!r}") from None

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "SignPattern":
        return cls(tuple(signs))

    @property
    def degree(self) -> int:
        return len(self.signs) - 1

    def __len__(self) -> int:
        return len(self.signs)

    def __str__(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def __repr__(self) -> str:
        return f"SignPattern({str(self)!r})"


@dataclass(frozen=True)
class DescartesPair:
    """(c, p): counts of sign changes and sign preservations; c + p = degree."""

    c: int
    p: int


@dataclass(frozen=True)
class AdmissiblePair:
    """(pos, neg) root counts compatible with a pattern via Descartes/Gauss."""

    pos: int
    neg: int

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0:
            raise InadmissiblePair("root counts must be nonnegative")

    def swapped(self) -> "AdmissiblePair":
        return AdmissiblePair(self.neg, self.pos)


def descartes_pair(pattern: SignPattern) -> DescartesPair:
    c = sign_changes(pattern.signs)
    return DescartesPair(c, pattern.degree - c)


def is_admissible(pattern: SignPattern, pair: AdmissiblePair) -> bool:
    dp = descartes_pair(pattern)
    return (pair.pos <= dp.c and pair.pos % 2 == dp.c % 2
            and pair.neg <= dp.p and pair.neg % 2 == dp.p % 2)


def admissible_pairs(pattern: SignPattern) -> set[AdmissiblePair]:
    """All (pos, neg) satisfying pos <= c, pos = c (mod 2), neg <= p, neg = p (mod 2)."""
    dp = descartes_pair(pattern)
    return {
        AdmissiblePair(pos, neg)
        for pos in range(dp.c % 2, dp.c + 1, 2)
        for neg in range(dp.p % 2, dp.p + 1, 2)
    }


@dataclass(frozen=True)
class Couple:
    """A sign pattern together with an admissible pair."""

    pattern: SignPattern
    pair: AdmissiblePair

    def __post_init__(self):
        if not is_admissible(self.pattern, self.pair):
            raise InadmissiblePair(
                f"pair ({self.pair.pos},{self.pair.neg}) is not admissible for {self.pattern}"
            )

    @property
    def degree(self) -> int:
        return self.pattern.degree

    def key(self) -> tuple[str, int, int]:
        """Sort/deduplication key; '+' < '-' in ASCII so the order matches the spec."""
        return (str(self.pattern), self.pair.pos, self.pair.neg)

    def __str__(self) -> str:
        return f"({self.pattern}, ({self.pair.pos},{self.pair.neg}))"


def pattern_of(poly: Polynomial) -> SignPattern:
    """Sign pattern of a polynomial, normalized to leading sign +.

    Raises ZeroCoefficient if any coefficient vanishes (pattern undefined) and
    ZeroPolynomial semantics are folded into the same error for an empty input.
    """
    if poly.is_zero:
        raise ZeroCoefficient("zero polynomial has no sign pattern")
    lead = 1 if poly.leading > 0 else -1
    signs = []
    for i in range(poly.degree, -1, -1):
        c = poly.coeff(i)
        if c == 0:
            raise ZeroCoefficient(f"coefficient of x^{i} vanishes")
        signs.append(lead * (1 if c > 0 else -1))
    return SignPattern(tuple(signs))


# The paper's two distinguished degree-11 objects.
SIGMA_STAR = SignPattern.parse("++-++")
SIGMA_0 = SignPattern.parse("+-----+++++-")
