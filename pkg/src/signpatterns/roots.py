"""Exact real-root counting, isolation, and multiplicities via Sturm chains.

All verdict-relevant arithmetic is exact.  Internally the chains are kept as
integer coefficient lists (denominators cleared, content stripped); every
rescaling applied along the way is by a positive constant, which preserves the
sign variations Sturm's theorem counts.

Endpoint roots are handled by exact deflation (dividing out (x - endpoint))
rather than by nudging the endpoint, so interval counts are genuinely over the
open interval.  Bisection split points are chosen to dodge roots, so chain
evaluations never land on a root of the polynomial being isolated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Optional, Sequence

from .polynomials import Polynomial, Rat, ZeroPolynomial, poly_gcd

# ---------------------------------------------------------------------------
# integer-list kernels
# ---------------------------------------------------------------------------


def _int_coeffs(p: Polynomial) -> list[int]:
    """Clear denominators and strip content; sign preserved."""
    if p.is_zero:
        return []
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // int_gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = int_gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _strip(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _content_reduce(c: list[int]) -> list[int]:
    g = 0
    for v in c:
        g = int_gcd(g, v)
    if g > 1:
        return [v // g for v in c]
    return c


def _int_derivative(c: Sequence[int]) -> list[int]:
    return _content_reduce([i * c[i] for i in range(1, len(c))])


def _neg_rem_positive_scaled(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """-rem(f, g) up to a positive constant factor, in integer arithmetic.

    Each elimination step maps r to |lc(g)|*r - sign(lc(g))*lead(r)*x^k*g,
    a positive rescaling plus a multiple of g, so the result has the sign of
    the true negated remainder everywhere.
    """
    dg = len(g) - 1
    lg = g[-1]
    alg = abs(lg)
    sg = 1 if lg > 0 else -1
    r = _strip(list(f))
    while len(r) - 1 >= dg:
        lead = r[-1]
        shift = len(r) - 1 - dg
        if alg != 1:
            r = [v * alg for v in r]
        factor = sg * lead
        for i, gv in enumerate(g):
            r[i + shift] -= factor * gv
        _strip(r)
        r = _content_reduce(r)
    return [-v for v in r]


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _sign_at(c: Sequence[int], num: int, den: int) -> int:
    """Sign of the integer polynomial at num/den (den > 0), exactly."""
    d = len(c) - 1
    if d < 0:
        return 0
    acc = c[-1]
    dp = 1
    for i in range(d - 1, -1, -1):
        dp *= den
        acc = acc * num + c[i] * dp
    return _sign(acc)


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _chain_ints(p_ints: list[int]) -> list[list[int]]:
    chain = [list(p_ints)]
    if len(p_ints) >= 2:
        chain.append(_int_derivative(p_ints))
        while chain[-1]:
            nxt = _neg_rem_positive_scaled(chain[-2], chain[-1])
            if not nxt:
                break
            chain.append(nxt)
    return chain


def _variations_at_point(chain: Sequence[Sequence[int]], num: int, den: int) -> int:
    return _variations([_sign_at(c, num, den) for c in chain])


def _variations_at_inf(chain: Sequence[Sequence[int]], positive: bool) -> int:
    signs = []
    for c in chain:
        s = _sign(c[-1])
        if not positive and (len(c) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


# ---------------------------------------------------------------------------
# Sturm chains (public wrapper)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SturmChain:
    """p, p', then negated remainders (each up to a positive constant)."""

    polys: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.polys or self.polys[-1].is_zero:
            raise ValueError("Sturm chain must end with a nonzero polynomial")
        degs = [q.degree for q in self.polys[1:]]
        if any(a <= b for a, b in zip(degs, degs[1:])):
            raise ValueError("Sturm chain degrees must strictly decrease")

    def _ints(self) -> list[list[int]]:
        return [[int(c) for c in q.coeffs] for q in self.polys]

    def variations_at(self, x: Rat) -> int:
        xv = Fraction(x)
        return _variations_at_point(self._ints(), xv.numerator, xv.denominator)

    def count_in(self, lo: Rat, hi: Rat) -> int:
        """Distinct roots in (lo, hi]; endpoints must not be roots of polys[0]."""
        return self.variations_at(lo) - self.variations_at(hi)


def sturm_chain(p: Polynomial) -> SturmChain:
    if p.is_zero:
        raise ZeroPolynomial("no Sturm chain for the zero polynomial")
    ints = _chain_ints(_int_coeffs(p))
    return SturmChain(tuple(Polynomial(c) for c in ints))


def cauchy_root_bound(p: Polynomial) -> Fraction:
    """1 + max|a_i|/|a_d|: all real roots lie strictly inside (-B, B)."""
    if p.is_zero:
        raise ZeroPolynomial("no root bound for the zero polynomial")
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------


def count_roots_in(p: Polynomial, lo: Rat, hi: Rat) -> int:
    """Distinct real roots of p in the open interval (lo, hi).

    Roots at the endpoints are deflated away exactly, so they never count.
    """
    if p.is_zero:
        raise ZeroPolynomial("root counting needs a nonzero polynomial")
    lov, hiv = Fraction(lo), Fraction(hi)
    if not lov < hiv:
        raise ValueError("need lo < hi")
    q = p
    for pt in (lov, hiv):
        if not q.is_zero and q.degree >= 1 and q.evaluate(pt) == 0:
            q, _ = q.deflate_root(pt)
    if q.degree < 1:
        return 0
    chain = _chain_ints(_int_coeffs(q))
    return (_variations_at_point(chain, lov.numerator, lov.denominator)
            - _variations_at_point(chain, hiv.numerator, hiv.denominator))


def count_distinct_real(p: Polynomial) -> int:
    if p.is_zero:
        raise ZeroPolynomial("root counting needs a nonzero polynomial")
    if p.degree < 1:
        return 0
    chain = _chain_ints(_int_coeffs(p))
    return _variations_at_inf(chain, False) - _variations_at_inf(chain, True)


def _deflate_zero(p: Polynomial) -> tuple[Polynomial, int]:
    k = p.valuation()
    if k == 0:
        return p, 0
    return Polynomial(p.coeffs[k:]), k


def _signed_distinct(p: Polynomial) -> tuple[int, int]:
    """(positive, negative) distinct real root counts; zero roots ignored."""
    if p.degree < 1:
        return 0, 0
    q, _ = _deflate_zero(p)
    if q.degree < 1:
        return 0, 0
    chain = _chain_ints(_int_coeffs(q))
    v_neginf = _variations_at_inf(chain, False)
    v_0 = _variations_at_point(chain, 0, 1)
    v_posinf = _variations_at_inf(chain, True)
    return v_0 - v_posinf, v_neginf - v_0


# ---------------------------------------------------------------------------
# square-free decomposition and summaries
# ---------------------------------------------------------------------------


def squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), monic; same distinct roots, all simple."""
    if p.is_zero:
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree < 1:
        return Polynomial.one()
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return p.monic()
    q, r = p.divmod(g)
    assert r.is_zero
    return q.monic()


def _gcd_tower(p: Polynomial) -> list[Polynomial]:
    """[p, gcd(p,p'), gcd(gcd,gcd'), ...] down to (excluding) a constant."""
    tower = []
    cur = p
    while cur.degree >= 1:
        tower.append(cur)
        cur = poly_gcd(cur, cur.derivative())
    return tower


@dataclass(frozen=True)
class RootCountSummary:
    pos_distinct: int
    neg_distinct: int
    pos_with_mult: int
    neg_with_mult: int
    zero_mult: int
    complex_pairs: int

    def total_degree(self) -> int:
        return self.pos_with_mult + self.neg_with_mult + self.zero_mult + 2 * self.complex_pairs


def root_summary(p: Polynomial) -> RootCountSummary:
    """Counts of positive/negative/zero roots, distinct and with multiplicity."""
    if p.is_zero:
        raise ZeroPolynomial("root summary of the zero polynomial")
    q, zero_mult = _deflate_zero(p)
    pos_d, neg_d = _signed_distinct(q)
    pos_m = neg_m = 0
    for level in _gcd_tower(q):
        lp, ln = _signed_distinct(level)
        pos_m += lp
        neg_m += ln
    rest = p.degree - zero_mult - pos_m - neg_m
    assert rest >= 0 and rest % 2 == 0, "real multiplicities exceed degree"
    return RootCountSummary(pos_d, neg_d, pos_m, neg_m, zero_mult, rest // 2)


def real_roots_all_simple(p: Polynomial) -> bool:
    """True iff every real root of p is simple (complex pairs unconstrained)."""
    g = poly_gcd(p, p.derivative())
    return g.degree == 0 or count_distinct_real(g) == 0


def is_squarefree(p: Polynomial) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0


# ---------------------------------------------------------------------------
# isolation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval for one distinct real root.  lo == hi marks an exact root."""

    lo: Fraction
    hi: Fraction
    multiplicity: int

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: Rat) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def width(self) -> Fraction:
        return self.hi - self.lo


# split-point candidates inside (a, b), as fractions of the width
_SPLITS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(3, 7), Fraction(4, 9))


def _split_point(q: Polynomial, a: Fraction, b: Fraction) -> Fraction:
    for frac in _SPLITS:
        m = a + (b - a) * frac
        if q.evaluate(m) != 0:
            return m
    # q has at most deg q roots; scan a fine grid until a non-root appears
    n = q.degree + 2
    for k in range(1, n + 1):
        m = a + (b - a) * Fraction(k, n + 1)
        if q.evaluate(m) != 0:
            return m
    raise AssertionError("unreachable: more roots than the degree allows")


def _isolate_squarefree_counts(chain, q: Polynomial,
                               lo: Fraction, hi: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Isolating intervals for the distinct roots of q in (lo, hi); endpoints non-roots."""
    out = []
    stack = [(lo, hi,
              _variations_at_point(chain, lo.numerator, lo.denominator),
              _variations_at_point(chain, hi.numerator, hi.denominator))]
    while stack:
        a, b, va, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        m = _split_point(q, a, b)
        vm = _variations_at_point(chain, m.numerator, m.denominator)
        stack.append((a, m, va, vm))
        stack.append((m, b, vm, vb))
    return out


def _refine(chain, q: Polynomial, a: Fraction, b: Fraction,
            width: Fraction) -> tuple[Fraction, Fraction]:
    va = _variations_at_point(chain, a.numerator, a.denominator)
    while b - a > width:
        m = _split_point(q, a, b)
        vm = _variations_at_point(chain, m.numerator, m.denominator)
        if va - vm == 1:
            b = m
        else:
            a, va = m, vm
    return a, b


def isolate_real_roots(p: Polynomial, width: Rat = Fraction(1, 1000)) -> tuple[RootInterval, ...]:
    """Disjoint isolating intervals, one per distinct real root, with multiplicities."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of the zero polynomial")
    widthv = Fraction(width)
    if widthv <= 0:
        raise ValueError("width must be positive")
    q, zero_mult = _deflate_zero(p)
    intervals: list[RootInterval] = []
    if zero_mult:
        intervals.append(RootInterval(Fraction(0), Fraction(0), zero_mult))
    if q.degree >= 1:
        bound = cauchy_root_bound(q)
        chain = _chain_ints(_int_coeffs(q))
        tower = [(lvl, _chain_ints(_int_coeffs(lvl))) for lvl in _gcd_tower(q)[1:]]
        for a, b in _isolate_squarefree_counts(chain, q, -bound, bound):
            a, b = _refine(chain, q, a, b, widthv)
            mult = 1
            for _, lvl_chain in tower:
                mult += (_variations_at_point(lvl_chain, a.numerator, a.denominator)
                         - _variations_at_point(lvl_chain, b.numerator, b.denominator))
            intervals.append(RootInterval(a, b, mult))
    intervals.sort(key=lambda iv: (iv.lo, iv.hi))
    return tuple(intervals)


# ---------------------------------------------------------------------------
# exact sign conditions on an interval
# ---------------------------------------------------------------------------


def nonneg_on_interval(p: Polynomial, lo: Rat, hi: Rat,
                       strict: bool = False) -> tuple[bool, Optional[Fraction]]:
    """Exactly decide p >= 0 (or p > 0) on [lo, hi].

    Returns (ok, point): on failure, point is a rational witness with
    p(point) < 0 (resp. <= 0) when one exists; for a strict claim defeated
    only by an isolated root touching zero, point locates that root's
    enclosure midpoint (the enclosure itself is the certificate).
    """
    lov, hiv = Fraction(lo), Fraction(hi)
    if lov > hiv:
        raise ValueError("need lo <= hi")
    if p.is_zero:
        return (not strict), (lov if strict else None)
    if lov == hiv:
        v = p.evaluate(lov)
        ok = v > 0 if strict else v >= 0
        return ok, (None if ok else lov)
    for endpoint in (lov, hiv):
        v = p.evaluate(endpoint)
        if v < 0 or (strict and v == 0):
            return False, endpoint
    interior = count_roots_in(p, lov, hiv)
    enclosures: list[tuple[Fraction, Fraction]] = []
    if interior:
        for iv in isolate_real_roots(p, (hiv - lov) / 8):
            a, b = max(iv.lo, lov), min(iv.hi, hiv)
            if a < b or (a == b and lov < a < hiv):
                enclosures.append((a, b))
    # sample each gap between enclosures; sign is constant there
    points = []
    prev = lov
    for a, b in enclosures:
        if prev < a:
            points.append((prev + a) / 2)
        prev = max(prev, b)
    if prev < hiv:
        points.append((prev + hiv) / 2)
    for pt in points:
        if p.evaluate(pt) < 0:
            return False, pt
    if strict and interior:
        if enclosures:
            a, b = enclosures[0]
            return False, (a + b) / 2
        return False, (lov + hiv) / 2
    return True, None
