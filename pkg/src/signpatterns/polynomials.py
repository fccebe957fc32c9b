"""Dense exact-rational univariate polynomials.

Coefficients are `fractions.Fraction` throughout; nothing in here (or anywhere
else in the package) computes with floats.  Index i of the coefficient tuple is
the coefficient of x**i.  The zero polynomial has an empty coefficient tuple
and degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

DEGREE_LIMIT = 64

Rat = Union[Fraction, int, str]


class DegreeLimitExceeded(Exception):
    """Result degree would exceed the configured dense-representation limit."""


class ZeroPolynomial(Exception):
    """Operation undefined for the zero polynomial."""


def _frac(v: Rat) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Polynomial:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Rat] = ()):
        c = [_frac(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if len(c) - 1 > DEGREE_LIMIT:
            raise DegreeLimitExceeded(f"degree {len(c) - 1} exceeds limit {DEGREE_LIMIT}")
        self._c = tuple(c)

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, coeff: Rat = 1) -> "Polynomial":
        return cls([0] * k + [coeff])

    @classmethod
    def from_string(cls, text: str) -> "Polynomial":
        """Parse the text form: comma-separated rationals, constant term first."""
        parts = [p.strip() for p in text.split(",")]
        return cls(Fraction(p) for p in parts if p)

    # -- basic queries -----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def is_monic(self) -> bool:
        return bool(self._c) and self._c[-1] == 1

    @property
    def leading(self) -> Fraction:
        if not self._c:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._c[-1]

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeff(k)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        if not self._c:
            return "Polynomial(0)"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self._c[i]
            if c == 0:
                continue
            body = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i > 0 and abs(c) == 1:
                cs = "-" if c < 0 else ""
            else:
                cs = str(c)
            sep = "*" if cs not in ("", "-") and body else ""
            terms.append(f"{cs}{sep}{body}")
        return "Polynomial(" + " + ".join(terms).replace("+ -", "- ") + ")"

    def to_string(self) -> str:
        """Text form: comma-separated rationals, constant term first."""
        return ",".join(str(c) for c in self._c)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(-v for v in self._c)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Rat]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            k = _frac(other)
            return Polynomial(v * k for v in self._c)
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial.zero()
        if len(a) + len(b) - 2 > DEGREE_LIMIT:
            raise DegreeLimitExceeded(
                f"product degree {len(a) + len(b) - 2} exceeds limit {DEGREE_LIMIT}"
            )
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, va in enumerate(a):
            if va == 0:
                continue
            for j, vb in enumerate(b):
                out[i + j] += va * vb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(i * self._c[i] for i in range(1, len(self._c)))

    def evaluate(self, x: Rat) -> Fraction:
        """Horner evaluation at a rational point."""
        xv = _frac(x)
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * xv + c
        return acc

    def __call__(self, x: Rat) -> Fraction:
        return self.evaluate(x)

    def sign_at(self, x: Rat) -> int:
        v = self.evaluate(x)
        return (v > 0) - (v < 0)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact euclidean division over the rationals."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self._c)
        q = [Fraction(0)] * max(len(r) - len(other._c) + 1, 0)
        dlead = other._c[-1]
        dd = other.degree
        while len(r) - 1 >= dd and any(v != 0 for v in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < dd:
                break
            shift = len(r) - 1 - dd
            factor = r[-1] / dlead
            q[shift] = factor
            for i, v in enumerate(other._c):
                r[shift + i] -= factor * v
            r.pop()
        return Polynomial(q), Polynomial(r)

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Polynomial([Fraction(0)] * k + list(self._c))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self._c[-1]
        return self if lead == 1 else Polynomial(v / lead for v in self._c)

    def valuation(self) -> int:
        """Multiplicity of the root 0 (0 if constant term nonzero)."""
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no valuation")
        k = 0
        while self._c[k] == 0:
            k += 1
        return k

    def synthetic_div(self, r: Rat) -> tuple["Polynomial", Fraction]:
        """Divide by (x - r); return (quotient, remainder value)."""
        rv = _frac(r)
        if self.is_zero:
            return self, Fraction(0)
        c = self._c
        q = [Fraction(0)] * self.degree
        acc = c[-1]
        for i in range(self.degree - 1, -1, -1):
            q[i] = acc
            acc = c[i] + rv * acc
        return Polynomial(q), acc

    def deflate_root(self, r: Rat) -> tuple["Polynomial", int]:
        """Divide out (x - r) as often as it is a root; return (quotient, multiplicity)."""
        rv = _frac(r)
        p, mult = self, 0
        while not p.is_zero and p.degree >= 1 and p.evaluate(rv) == 0:
            p, _ = p.synthetic_div(rv)
            mult += 1
        return p, mult

    def scale_substitute(self, epsilon: Rat) -> "Polynomial":
        """Return eps**deg * P(x/eps): coefficient of x**i scaled by eps**(deg-i).

        Positive eps preserves the coefficient sign sequence and scales every
        root by eps; the result is monic iff the input is monic.
        """
        eps = _frac(epsilon)
        if eps <= 0:
            raise ValueError("epsilon must be positive")
        if self.is_zero:
            return self
        d = self.degree
        return Polynomial(self._c[i] * eps ** (d - i) for i in range(d + 1))


@dataclass(frozen=True)
class RootConfiguration:
    """A multiset of real roots plus complex-conjugate pairs.

    negative_roots/positive_roots hold the (positive) magnitudes: an entry u in
    negative_roots stands for the root -u.  Each complex pair (re, im) with
    im > 0 contributes the quadratic x^2 - 2*re*x + (re^2 + im^2).
    """

    negative_roots: tuple[Fraction, ...] = ()
    positive_roots: tuple[Fraction, ...] = ()
    complex_pairs: tuple[tuple[Fraction, Fraction], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "negative_roots",
                           tuple(_frac(v) for v in self.negative_roots))
        object.__setattr__(self, "positive_roots",
                           tuple(_frac(v) for v in self.positive_roots))
        object.__setattr__(self, "complex_pairs",
                           tuple((_frac(a), _frac(b)) for a, b in self.complex_pairs))
        if any(v <= 0 for v in self.negative_roots + self.positive_roots):
            raise ValueError("root magnitudes must be positive")
        if any(im <= 0 for _, im in self.complex_pairs):
            raise ValueError("imaginary parts must be positive")

    @property
    def degree(self) -> int:
        return len(self.negative_roots) + len(self.positive_roots) + 2 * len(self.complex_pairs)


def expand_from_roots(config: RootConfiguration) -> Polynomial:
    """Monic polynomial with exactly the roots of the configuration."""
    p = Polynomial.one()
    for u in config.negative_roots:
        p = p * Polynomial((u, 1))
    for v in config.positive_roots:
        p = p * Polynomial((-v, 1))
    for re, im in config.complex_pairs:
        p = p * Polynomial((re * re + im * im, -2 * re, 1))
    return p


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd over the rationals (euclidean remainders)."""
    while not b.is_zero:
        _, r = a.divmod(b)
        a, b = b, r
    if a.is_zero:
        return a
    return a.monic()
